#pragma once

#include <cstdint>
#include <vector>

#include "insep/errors.hpp"

namespace insep {

// One monomial of a defining relation: coeff * a_1^nu[0] * a_2^nu[1] * ...
// Exponents are raw (not reduced); validation requires them to be multiples
// of p^{e_i} and to touch only generators of index < i.
struct relation_term {
  std::uint64_t coeff = 0;
  std::vector<std::uint64_t> nu;
};

// Optional right-hand side for a_i^{p^{e_i}} = R_i (1-based generator index).
// Absent relations mean R_i = 0.
struct generator_relation {
  std::uint32_t index = 0;
  std::vector<relation_term> terms;
};

// A non-increasing exponent sequence over a prime p, optionally with defining
// relations for the generator p-th power images.  This is the whole input
// datum: every invariant and every ring in the library is derived from it.
struct extension_profile {
  std::uint64_t p = 2;
  std::vector<std::uint32_t> exponents;
  std::vector<generator_relation> relations;

  std::uint32_t length() const { return static_cast<std::uint32_t>(exponents.size()); }
  bool modular() const { return relations.empty(); }
};

bool operator==(const extension_profile& a, const extension_profile& b);

// Throws on: non-prime p, exponents that are not non-increasing and >= 1,
// malformed relations, or p^{e_i} products too large for exact arithmetic.
void validate(const extension_profile& profile);

// p^e with overflow check (errc::profile_too_large beyond 2^62).
std::uint64_t p_power(std::uint64_t p, std::uint64_t e);

// Minimal s >= 0 with p^s >= n (n >= 1), by exact integer comparison.
std::uint64_t ceil_log(std::uint64_t p, std::uint64_t n);

// m = sum_i (p^{e_i} - 1) + 1: the nilpotency index of the maximal ideal.
std::uint64_t m_invariant(const extension_profile& profile);

// m_r = sum_{i=1}^{r} p^{e_i}, padding e_i = 0 for i > length.
std::uint64_t m_r_invariant(const extension_profile& profile, std::uint64_t r);

// E_m = ceil_log(p, m).
std::uint64_t big_e_m(const extension_profile& profile);

// e_{m_r} = ceil_log(p, m_r).
std::uint64_t little_e_mr(const extension_profile& profile, std::uint64_t r);

// E = min(E_m, e_{m_r}): the exponent bound for rank-r upper-triangular parts.
std::uint64_t e_of(const extension_profile& profile, std::uint64_t r);

// True iff sum_{i=r+1}^{l} (p^{e_i} - 1) < r - 1, in which case E = E_m is
// attained by a square-zero construction at rank r.
bool exactness_condition(const extension_profile& profile, std::uint64_t r);

}  // namespace insep
