#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "insep/ring.hpp"

namespace insep {

// Square matrix over a local_ring, row-major, 0-based indexing.
class matrix {
 public:
  matrix() = default;
  matrix(ring_ptr owner, std::uint32_t n);

  static matrix identity(ring_ptr owner, std::uint32_t n);

  const ring_ptr& owner() const { return owner_; }
  std::uint32_t size() const { return n_; }

  element& at(std::uint32_t i, std::uint32_t j);
  const element& at(std::uint32_t i, std::uint32_t j) const;

  bool is_zero() const;
  bool in_ideal() const;            // every entry in the maximal ideal
  bool is_upper_triangular() const;

  friend bool operator==(const matrix& a, const matrix& b);
  friend bool operator!=(const matrix& a, const matrix& b) { return !(a == b); }

 private:
  ring_ptr owner_;
  std::uint32_t n_ = 0;
  std::vector<element> e_;
};

matrix mat_add(const matrix& a, const matrix& b);
matrix mat_mul(const matrix& a, const matrix& b);
matrix mat_scale(const element& c, const matrix& a);
// n = 0 gives the identity.
matrix mat_pow(const matrix& a, std::uint64_t n);

inline matrix operator+(const matrix& a, const matrix& b) { return mat_add(a, b); }
inline matrix operator*(const matrix& a, const matrix& b) { return mat_mul(a, b); }

// Minimal s with M^(p^s) = 0, for M with entries in the maximal ideal.
// Throws errc::exponent_exceeds_bound if no s <= s_max works.
std::uint64_t p_power_exponent(const matrix& m, std::uint64_t s_max);

// Division-free characteristic polynomial (Berkowitz); coefficients ascending,
// so the result is (f_0, ..., f_{n-1}, 1) with f_0 = det(-M) up to sign bookkeeping.
std::vector<element> char_poly(const matrix& m);

// Evaluates the characteristic polynomial at M and checks it vanishes.
bool cayley_hamilton_check(const matrix& m);

// For M with entries in the ideal: all char_poly coefficients below the leading
// one lie in the ideal, and M^(n * p^(e_1)) = 0.
bool ch_bound_check(const matrix& m);

struct sample_stats {
  std::uint64_t trials = 0;
  std::uint64_t max_exponent = 0;
  bool exhaustive = false;
};

// Random matrices with entries in the ideal (deterministic in seed); records the
// largest p_power_exponent seen. triangular_only restricts to upper-triangular.
sample_stats sample_max_exponent(const ring_ptr& r, std::uint32_t n, std::uint64_t trials,
                                 std::uint64_t seed, bool triangular_only);

// Full enumeration of all ideal matrices; requires exhaustive_feasible.
sample_stats max_exponent_exhaustive(const ring_ptr& r, std::uint32_t n, bool triangular_only);
bool exhaustive_feasible(const ring_ptr& r, std::uint32_t n, bool triangular_only);

}  // namespace insep
