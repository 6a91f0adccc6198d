#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "insep/profile.hpp"
#include "insep/witness.hpp"

namespace insep {

enum class group_family { gl, sl2, pgl2, simply_connected, adjoint, special_orthogonal, symplectic };
enum class lie_type { A, B, C, D, E6, E7, E8, F4, G2 };

struct group_spec {
  group_family family = group_family::gl;
  lie_type type = lie_type::A;  // meaningful for rank >= 2 families
  std::uint32_t rank = 0;       // Lie rank
  std::string display;          // normalized name, e.g. "GL(3)", "SO(7)", "adjoint-E6"
};

// Accepts GL (rank from the flag or suffix, e.g. "GL3"), SL2, PGL2, SO<n> (n >= 5),
// Sp<2n> (2n >= 4), bare types "A4".."G2" (simply connected), and "adjoint-<type><rank>".
group_spec parse_group(const std::string& name, std::uint32_t rank_flag);

struct citation {
  std::string rule;   // stable rule identifier
  std::string quote;  // one-line statement of what the rule asserts
};

struct prediction {
  bool applicable = false;
  std::string reason;  // why not applicable, when applicable is false
  std::optional<std::uint64_t> lower;
  std::optional<std::uint64_t> upper;
  std::optional<std::uint64_t> exact;
  std::vector<citation> citations;
};

// Merges every rule that covers (profile, group); throws errc::internal if two
// applicable rules contradict each other.
prediction predict(const extension_profile& pr, const group_spec& g);

struct cross_check_result {
  bool pass = true;
  std::vector<std::string> notes;
};

// Confronts predict(GL(rank)) with a computed witness and sampled exponents.
cross_check_result cross_validate(const extension_profile& pr, std::uint32_t rank,
                                  const witness_report& w, const sample_stats& stats);

}  // namespace insep
