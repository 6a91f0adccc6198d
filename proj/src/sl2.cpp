#include "insep/sl2.hpp"

#include <algorithm>

#include "insep/errors.hpp"
#include "insep/profile.hpp"
#include "insep/rng.hpp"

namespace insep {

namespace {

void require_char2(const ring_ptr& r) {
  if (!r) fail(errc::internal, "null ring");
  if (r->p() != 2) fail(errc::wrong_characteristic, "this construction needs characteristic 2");
}

// Predicted exponent of the unipotent kernel of SL_2 in characteristic 2:
// e_1, bumped by one exactly when l >= 2 and e_1 = e_2.
std::uint64_t predicted_exponent(const extension_profile& pr) {
  const std::uint64_t e1 = pr.exponents[0];
  if (pr.exponents.size() >= 2 && pr.exponents[1] == e1) return e1 + 1;
  return e1;
}

// Minimal s <= cap with M^(2^s) = 0, or cap+1 if none (repeated squaring).
std::uint64_t squaring_exponent(const matrix& m, std::uint64_t cap) {
  matrix x = m;
  for (std::uint64_t s = 0; s <= cap; ++s) {
    if (x.is_zero()) return s;
    x = mat_mul(x, x);
  }
  return cap + 1;
}

// d with (1+a)(1+d) + bc = 1, i.e. d = (1+a)^(-1) (a + bc).
element solve_d(const ring_ptr& r, const element& a, const element& b, const element& c) {
  const element unit = r->add(r->one(), a);
  return r->mul(r->invert_unit(unit), r->add(a, r->mul(b, c)));
}

}  // namespace

matrix closed_form_power_2(const matrix& m, std::uint64_t s) {
  require_char2(m.owner());
  if (m.size() != 2) fail(errc::size_mismatch, "closed form is for 2x2 matrices");
  const ring_ptr& r = m.owner();
  if (s == 0) return m;
  const element& a = m.at(0, 0);
  const element& b = m.at(0, 1);
  const element& c = m.at(1, 0);
  const element& d = m.at(1, 1);
  const element t = r->add(a, d);
  const element bc = r->mul(b, c);
  // sum = sum_i (bc)^(2^i) t^(2^s - 2^(i+1)); p tracks t^(2^s - 2^(i+1)) telescopically.
  element sum = r->zero();
  element p = r->one();
  for (std::uint64_t i = s; i-- > 0;) {
    sum = r->add(sum, r->mul(r->frobenius_pow(bc, i), p));
    p = r->mul(p, r->frobenius_pow(t, i));
  }
  // p is now t^(2^s - 1).
  matrix out(r, 2);
  out.at(0, 0) = r->add(r->frobenius_pow(a, s), sum);
  out.at(1, 1) = r->add(r->frobenius_pow(d, s), sum);
  out.at(0, 1) = r->mul(b, p);
  out.at(1, 0) = r->mul(c, p);
  return out;
}

sl2_witness_report sl2_borel_witness(const ring_ptr& r) {
  require_char2(r);
  if (r->length() < 1) fail(errc::trivial_extension, "profile has no generators");
  const std::uint64_t e1 = r->profile().exponents[0];
  const element a = r->generator(1);
  sl2_witness_report w;
  w.mat = matrix(r, 2);
  w.mat.at(0, 0) = a;
  w.mat.at(0, 1) = a;
  w.mat.at(1, 1) = solve_d(r, a, a, r->zero());
  w.expected = e1;
  w.exponent = squaring_exponent(w.mat, e1 + 1);
  w.nonzero_at_e = !mat_pow(w.mat, p_power(2, e1)).is_zero();
  w.pass = (w.exponent == w.expected) && !w.nonzero_at_e;
  return w;
}

sl2_witness_report sl2_full_witness(const ring_ptr& r) {
  require_char2(r);
  if (r->length() < 2) fail(errc::too_few_generators, "full witness needs at least two generators");
  const extension_profile& pr = r->profile();
  const std::uint64_t e1 = pr.exponents[0];
  const bool jump = pr.exponents[1] == e1;
  const element a1 = r->generator(1);
  const element a2 = r->generator(2);
  sl2_witness_report w;
  w.mat = matrix(r, 2);
  w.mat.at(0, 0) = r->mul(a1, a2);
  w.mat.at(0, 1) = a1;
  w.mat.at(1, 0) = a2;
  w.expected = predicted_exponent(pr);
  w.exponent = squaring_exponent(w.mat, e1 + 1);
  w.nonzero_at_e = !mat_pow(w.mat, p_power(2, e1)).is_zero();
  w.pass = (w.nonzero_at_e == jump) && w.exponent <= w.expected &&
           (!jump || w.exponent == w.expected);
  return w;
}

sl2_check_result sl2_sample_check(const ring_ptr& r, std::uint64_t trials, std::uint64_t seed) {
  require_char2(r);
  if (r->length() < 1) fail(errc::trivial_extension, "profile has no generators");
  const extension_profile& pr = r->profile();
  sl2_check_result res;
  res.expected = predicted_exponent(pr);

  auto run_one = [&](const element& a, const element& b, const element& c) {
    const element d = solve_d(r, a, b, c);
    // det(I + M) = 1 by construction; keep the cheap internal assertion.
    const element det = r->add(r->mul(r->add(r->one(), a), r->add(r->one(), d)), r->mul(b, c));
    if (!(det == r->one())) fail(errc::internal, "determinant normalization failed");
    matrix m(r, 2);
    m.at(0, 0) = a;
    m.at(0, 1) = b;
    m.at(1, 0) = c;
    m.at(1, 1) = d;
    const std::uint64_t s = squaring_exponent(m, res.expected);
    if (s > res.expected) {
      res.violations += 1;
      res.max_exponent = std::max(res.max_exponent, s);
    } else {
      res.max_exponent = std::max(res.max_exponent, s);
    }
    res.trials += 1;
  };

  const std::uint64_t card = r->ideal_cardinality(65);
  if (card <= 64) {
    res.exhaustive = true;
    for (std::uint64_t ia = 0; ia < card; ++ia)
      for (std::uint64_t ib = 0; ib < card; ++ib)
        for (std::uint64_t ic = 0; ic < card; ++ic)
          run_one(r->ideal_element_from_ordinal(ia), r->ideal_element_from_ordinal(ib),
                  r->ideal_element_from_ordinal(ic));
  } else {
    for (std::uint64_t t = 0; t < trials; ++t)
      run_one(r->random_ideal_element(derive_seed(seed, 3 * t), 4),
              r->random_ideal_element(derive_seed(seed, 3 * t + 1), 4),
              r->random_ideal_element(derive_seed(seed, 3 * t + 2), 4));
  }
  res.attained = res.violations == 0 && res.max_exponent == res.expected;
  return res;
}

}  // namespace insep
