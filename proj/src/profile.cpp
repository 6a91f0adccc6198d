#include "insep/profile.hpp"

#include <algorithm>
#include <string>

namespace insep {

namespace {

constexpr std::uint64_t kArithmeticCap = std::uint64_t(1) << 62;

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

bool operator==(const extension_profile& a, const extension_profile& b) {
  if (a.p != b.p || a.exponents != b.exponents) return false;
  if (a.relations.size() != b.relations.size()) return false;
  for (std::size_t k = 0; k < a.relations.size(); ++k) {
    const auto& ra = a.relations[k];
    const auto& rb = b.relations[k];
    if (ra.index != rb.index || ra.terms.size() != rb.terms.size()) return false;
    for (std::size_t t = 0; t < ra.terms.size(); ++t)
      if (ra.terms[t].coeff != rb.terms[t].coeff || ra.terms[t].nu != rb.terms[t].nu) return false;
  }
  return true;
}

std::uint64_t p_power(std::uint64_t p, std::uint64_t e) {
  std::uint64_t result = 1;
  for (std::uint64_t k = 0; k < e; ++k) {
    if (result > kArithmeticCap / p)
      fail(errc::profile_too_large, "p^e exceeds exact arithmetic range");
    result *= p;
  }
  return result;
}

std::uint64_t ceil_log(std::uint64_t p, std::uint64_t n) {
  if (n == 0) fail(errc::index_out_of_range, "ceil_log requires n >= 1");
  std::uint64_t s = 0, power = 1;
  while (power < n) {
    if (power > kArithmeticCap / p)
      fail(errc::profile_too_large, "p^s exceeds exact arithmetic range");
    power *= p;
    ++s;
  }
  return s;
}

void validate(const extension_profile& profile) {
  if (!is_prime(profile.p))
    fail(errc::non_prime_characteristic, "p = " + std::to_string(profile.p) + " is not prime");
  const std::uint32_t l = profile.length();
  for (std::uint32_t i = 0; i < l; ++i) {
    if (profile.exponents[i] < 1)
      fail(errc::non_monotone_exponents, "exponents must be >= 1");
    if (i > 0 && profile.exponents[i] > profile.exponents[i - 1])
      fail(errc::non_monotone_exponents, "exponents must be non-increasing");
  }
  // Also bounds the model dimension so later exact arithmetic cannot overflow.
  std::uint64_t dim = 1;
  for (std::uint32_t i = 0; i < l; ++i) {
    std::uint64_t cap = p_power(profile.p, profile.exponents[i]);
    if (dim > kArithmeticCap / cap)
      fail(errc::profile_too_large, "product of p^{e_i} exceeds exact arithmetic range");
    dim *= cap;
  }

  std::vector<bool> seen(l + 1, false);
  for (const auto& rel : profile.relations) {
    const std::string where = "relation for a_" + std::to_string(rel.index);
    if (rel.index < 1 || rel.index > l)
      fail(errc::malformed_relation, where + ": index out of range");
    if (seen[rel.index]) fail(errc::malformed_relation, where + ": duplicate index");
    seen[rel.index] = true;
    const std::uint64_t cap = p_power(profile.p, profile.exponents[rel.index - 1]);
    for (const auto& term : rel.terms) {
      if (term.coeff % profile.p == 0)
        fail(errc::malformed_relation, where + ": coefficient is 0 mod p");
      if (term.nu.size() > l) fail(errc::malformed_relation, where + ": exponent vector too long");
      bool constant = true;
      for (std::size_t j = 0; j < term.nu.size(); ++j) {
        if (term.nu[j] == 0) continue;
        constant = false;
        if (j + 1 >= rel.index)
          fail(errc::malformed_relation, where + ": touches generator of index >= " +
                                             std::to_string(rel.index));
        if (term.nu[j] % cap != 0)
          fail(errc::malformed_relation, where + ": exponent not a multiple of p^{e_i}");
        if (term.nu[j] > kArithmeticCap)
          fail(errc::profile_too_large, where + ": exponent exceeds exact arithmetic range");
      }
      if (constant) fail(errc::malformed_relation, where + ": nonzero constant term");
    }
  }
}

std::uint64_t m_invariant(const extension_profile& profile) {
  std::uint64_t m = 1;
  for (std::uint32_t e : profile.exponents) m += p_power(profile.p, e) - 1;
  return m;
}

std::uint64_t m_r_invariant(const extension_profile& profile, std::uint64_t r) {
  if (r < 1) fail(errc::index_out_of_range, "rank must be >= 1");
  std::uint64_t sum = 0;
  for (std::uint64_t i = 0; i < r; ++i) {
    std::uint64_t e = i < profile.length() ? profile.exponents[i] : 0;
    sum += p_power(profile.p, e);
  }
  return sum;
}

std::uint64_t big_e_m(const extension_profile& profile) {
  return ceil_log(profile.p, m_invariant(profile));
}

std::uint64_t little_e_mr(const extension_profile& profile, std::uint64_t r) {
  return ceil_log(profile.p, m_r_invariant(profile, r));
}

std::uint64_t e_of(const extension_profile& profile, std::uint64_t r) {
  return std::min(big_e_m(profile), little_e_mr(profile, r));
}

bool exactness_condition(const extension_profile& profile, std::uint64_t r) {
  if (r < 1) fail(errc::index_out_of_range, "rank must be >= 1");
  std::uint64_t tail = 0;
  for (std::uint64_t i = r; i < profile.length(); ++i)
    tail += p_power(profile.p, profile.exponents[i]) - 1;
  return tail < r - 1;
}

}  // namespace insep
