#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "insep/matrix.hpp"

namespace insep {

enum class witness_case { exact, generic };

struct witness_report {
  witness_case kind = witness_case::generic;
  // Bookkeeping for the exact case only.
  std::optional<std::uint64_t> q;
  std::optional<std::uint64_t> tau;
  std::uint64_t claimed_power = 0;     // M^claimed_power != 0
  std::uint64_t verified_exponent = 0; // minimal s with M^(p^s) = 0
  matrix mat;
};

const char* to_string(witness_case c);

// Upper-triangular r x r matrix over the ring whose p-power exponent attains
// e_of(profile, r); the case split follows exactness_condition.
witness_report borel_witness(const ring_ptr& r, std::uint32_t rank);

// Sum over all length-n products M[i,k1]*M[k1,k2]*...*M[k_{n-1},j] with
// i <= k1 <= ... <= j (upper-triangular path expansion); equals mat_pow(m,n).at(i,j).
// Indices are 0-based.
element path_expansion_entry(const matrix& m, std::uint64_t n, std::uint32_t i, std::uint32_t j);

// Re-checks every invariant of the report against the ring it was built over.
// Appends human-readable failure notes to diagnosis when provided.
bool verify_witness(const witness_report& w, std::string* diagnosis = nullptr);

}  // namespace insep
