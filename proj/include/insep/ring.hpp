#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "insep/errors.hpp"
#include "insep/profile.hpp"

namespace insep {

class ring;
using ring_ptr = std::shared_ptr<const ring>;

// One term of a normal-form element: packed monomial index and a coefficient
// in [1, p).  The packed index is the mixed-radix encoding of the exponent
// vector nu (nu_i < p^{e_i}) with generator 1 innermost.
struct term {
  std::uint32_t mono = 0;
  std::uint32_t coeff = 0;
};

inline bool operator==(const term& a, const term& b) {
  return a.mono == b.mono && a.coeff == b.coeff;
}

// Unreduced input term: arbitrary exponent vector, arbitrary coefficient.
struct raw_term {
  std::uint64_t coeff = 0;
  std::vector<std::uint64_t> nu;
};

// Element of the model ring in normal form: F_p-combination of monomials
// a^nu with nu_i < p^{e_i}, terms sorted by packed index.  Elements keep
// their ring alive via shared ownership; arithmetic lives on `ring` and the
// free operators below.
class element {
 public:
  element() = default;

  const ring_ptr& owner() const { return ring_; }
  const std::vector<term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::uint64_t constant_term() const {
    return !terms_.empty() && terms_.front().mono == 0 ? terms_.front().coeff : 0;
  }
  bool in_ideal() const { return constant_term() == 0; }
  bool is_unit() const { return constant_term() != 0; }

 private:
  friend class ring;
  element(ring_ptr r, std::vector<term> t) : ring_(std::move(r)), terms_(std::move(t)) {}

  ring_ptr ring_;
  std::vector<term> terms_;
};

// The model local ring F_p[a_1..a_l] / (a_i^{p^{e_i}} = R_i).  Construction
// validates the profile and rejects model dimensions above 2^16 (desk-scale
// guard); all arithmetic is exact.
class ring : public std::enable_shared_from_this<ring> {
 public:
  static ring_ptr make(extension_profile profile);

  const extension_profile& profile() const { return profile_; }
  std::uint64_t p() const { return profile_.p; }
  std::uint32_t length() const { return profile_.length(); }
  bool modular() const { return profile_.modular(); }
  // F_p-dimension of the model: prod p^{e_i}.
  std::uint32_t dim() const { return dim_; }
  // Cached m = sum (p^{e_i} - 1) + 1; nilpotency index of the maximal ideal.
  std::uint64_t m_bound() const { return m_; }
  std::uint64_t cap(std::uint32_t g) const { return caps_[g]; }       // g is 0-based
  std::uint32_t stride(std::uint32_t g) const { return strides_[g]; }
  const std::uint16_t* digits(std::uint32_t mono) const { return digits_.data() + std::size_t(mono) * length_padded_; }
  std::uint32_t total_degree(std::uint32_t mono) const;

  element zero() const;
  element one() const;
  element constant(std::uint64_t c) const;
  element generator(std::uint32_t i) const;  // 1-based, errc::index_out_of_range
  element from_raw(const std::vector<raw_term>& terms) const;
  element monomial(const std::vector<std::uint64_t>& nu, std::uint64_t coeff = 1) const;

  // Text round-trip.  Canonical form orders terms by descending total degree,
  // then descending lexicographic exponent vector; e.g. "a1^3*a2 + 2*a1".
  element parse(const std::string& text) const;
  std::string to_string(const element& x) const;

  element add(const element& a, const element& b) const;
  element sub(const element& a, const element& b) const;
  element neg(const element& a) const;
  element mul(const element& a, const element& b) const;
  element pow(const element& a, std::uint64_t n) const;
  // x -> x^{p^s} using Frobenius-fixity of F_p coefficients.
  element frobenius_pow(const element& a, std::uint64_t s) const;
  // Inverse of a unit via the geometric series of its nilpotent part.
  element invert_unit(const element& a) const;
  // Minimal n >= 1 with x^n = 0; requires constant_term(x) = 0.
  std::uint64_t nilpotency_index(const element& a) const;
  // Minimal n >= 1 with m^n = 0, computed structurally from spanning sets,
  // never from the m-formula.
  std::uint64_t ideal_nilpotency_index() const;
  // True iff x lies in the F_p-subalgebra generated by a_j^{p^{e_i}}, j < i.
  bool subalgebra_membership(const element& x, std::uint32_t i) const;
  // Deterministic sparse sample from the maximal ideal (<= max_terms terms).
  element random_ideal_element(std::uint64_t seed, std::uint32_t max_terms) const;
  // Enumerates the maximal ideal: ord in [0, p^(dim-1)) maps to the base-p
  // digit vector of coefficients on the non-constant monomials.
  element ideal_element_from_ordinal(std::uint64_t ord) const;
  // |m| = p^(dim-1), saturated at cap (for exhaustive-mode feasibility).
  std::uint64_t ideal_cardinality(std::uint64_t cap) const;

  void check_owner(const element& x) const;

 private:
  ring() = default;

  std::vector<term> normalize_raw(std::vector<raw_term> work) const;
  std::vector<term> mul_terms(const std::vector<term>& a, const std::vector<term>& b) const;
  std::vector<term> pow_terms(std::vector<term> base, std::uint64_t n) const;
  std::vector<term> relation_power(std::uint32_t g, std::uint64_t q) const;  // R_{g+1}^q
  void mul_pairwise(const std::vector<term>& a, const std::vector<term>& b,
                    std::vector<term>& out) const;
  void mul_dense(const std::vector<term>& a, const std::vector<term>& b,
                 std::vector<term>& out) const;
  void mul_bitset(const std::vector<term>& a, const std::vector<term>& b,
                  std::vector<term>& out) const;
  bool compatible(const std::uint16_t* da, const std::uint16_t* db) const;
  element wrap(std::vector<term> t) const { return element(shared_from_this(), std::move(t)); }

  extension_profile profile_;
  std::uint32_t dim_ = 1;
  std::uint64_t m_ = 1;
  std::uint32_t length_padded_ = 1;  // stride of the digit table, >= 1
  std::vector<std::uint64_t> caps_;
  std::vector<std::uint32_t> strides_;
  std::vector<std::uint16_t> digits_;         // dim * length_padded_
  std::vector<std::vector<term>> rel_terms_;  // normalized R_i per generator
  // Char-2 fast path: per-monomial compatibility bitmasks (dim words rows).
  std::vector<std::uint64_t> masks2_;
  std::uint32_t words2_ = 0;
};

inline element operator+(const element& a, const element& b) { return a.owner()->add(a, b); }
inline element operator-(const element& a, const element& b) { return a.owner()->sub(a, b); }
inline element operator-(const element& a) { return a.owner()->neg(a); }
inline element operator*(const element& a, const element& b) { return a.owner()->mul(a, b); }
bool operator==(const element& a, const element& b);
inline bool operator!=(const element& a, const element& b) { return !(a == b); }

inline element pow(const element& a, std::uint64_t n) { return a.owner()->pow(a, n); }
inline element frobenius_pow(const element& a, std::uint64_t s) { return a.owner()->frobenius_pow(a, s); }
inline element invert_unit(const element& a) { return a.owner()->invert_unit(a); }
inline std::uint64_t nilpotency_index(const element& a) { return a.owner()->nilpotency_index(a); }
inline std::string to_string(const element& a) { return a.owner()->to_string(a); }
inline bool subalgebra_membership(const element& x, std::uint32_t i) {
  return x.owner()->subalgebra_membership(x, i);
}

// True iff prod_k elements[k]^{powers[k]} = 0, by direct computation with
// early exit; all elements must lie in the maximal ideal of one ring.
bool product_vanishes(const std::vector<element>& elements,
                      const std::vector<std::uint64_t>& powers);

}  // namespace insep
