#include "insep/matrix.hpp"

#include <algorithm>

#include "insep/errors.hpp"
#include "insep/profile.hpp"
#include "insep/rng.hpp"

namespace insep {

namespace {

const ring_ptr& owner_of(const matrix& m) {
  if (!m.owner()) fail(errc::internal, "matrix has no ring");
  return m.owner();
}

void check_pair(const matrix& a, const matrix& b) {
  if (owner_of(a) != owner_of(b)) fail(errc::profile_mismatch, "matrices over different rings");
  if (a.size() != b.size()) fail(errc::size_mismatch, "matrix sizes differ");
}

}  // namespace

matrix::matrix(ring_ptr owner, std::uint32_t n) : owner_(std::move(owner)), n_(n) {
  if (!owner_) fail(errc::internal, "matrix has no ring");
  e_.assign(static_cast<std::size_t>(n_) * n_, owner_->zero());
}

matrix matrix::identity(ring_ptr owner, std::uint32_t n) {
  matrix m(std::move(owner), n);
  for (std::uint32_t i = 0; i < n; ++i) m.at(i, i) = m.owner_->one();
  return m;
}

element& matrix::at(std::uint32_t i, std::uint32_t j) {
  if (i >= n_ || j >= n_) fail(errc::index_out_of_range, "matrix index out of range");
  return e_[static_cast<std::size_t>(i) * n_ + j];
}

const element& matrix::at(std::uint32_t i, std::uint32_t j) const {
  if (i >= n_ || j >= n_) fail(errc::index_out_of_range, "matrix index out of range");
  return e_[static_cast<std::size_t>(i) * n_ + j];
}

bool matrix::is_zero() const {
  for (const element& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool matrix::in_ideal() const {
  for (const element& x : e_)
    if (!x.in_ideal()) return false;
  return true;
}

bool matrix::is_upper_triangular() const {
  for (std::uint32_t i = 0; i < n_; ++i)
    for (std::uint32_t j = 0; j < i; ++j)
      if (!at(i, j).is_zero()) return false;
  return true;
}

bool operator==(const matrix& a, const matrix& b) {
  if (a.n_ != b.n_) return false;
  for (std::size_t k = 0; k < a.e_.size(); ++k)
    if (!(a.e_[k] == b.e_[k])) return false;
  return true;
}

matrix mat_add(const matrix& a, const matrix& b) {
  check_pair(a, b);
  const ring_ptr& r = owner_of(a);
  matrix out(r, a.size());
  for (std::uint32_t i = 0; i < a.size(); ++i)
    for (std::uint32_t j = 0; j < a.size(); ++j) out.at(i, j) = r->add(a.at(i, j), b.at(i, j));
  return out;
}

matrix mat_mul(const matrix& a, const matrix& b) {
  check_pair(a, b);
  const ring_ptr& r = owner_of(a);
  const std::uint32_t n = a.size();
  matrix out(r, n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t k = 0; k < n; ++k) {
      const element& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::uint32_t j = 0; j < n; ++j) {
        const element& bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        out.at(i, j) = r->add(out.at(i, j), r->mul(aik, bkj));
      }
    }
  return out;
}

matrix mat_scale(const element& c, const matrix& a) {
  const ring_ptr& r = owner_of(a);
  matrix out(r, a.size());
  for (std::uint32_t i = 0; i < a.size(); ++i)
    for (std::uint32_t j = 0; j < a.size(); ++j) out.at(i, j) = r->mul(c, a.at(i, j));
  return out;
}

matrix mat_pow(const matrix& a, std::uint64_t n) {
  const ring_ptr& r = owner_of(a);
  matrix result = matrix::identity(r, a.size());
  matrix base = a;
  while (n) {
    if (base.is_zero()) return n ? base : result;
    if (n & 1) {
      result = mat_mul(result, base);
      if (result.is_zero()) return result;
    }
    n >>= 1;
    if (n) base = mat_mul(base, base);
  }
  return result;
}

std::uint64_t p_power_exponent(const matrix& m, std::uint64_t s_max) {
  const ring_ptr& r = owner_of(m);
  if (!m.in_ideal()) fail(errc::not_in_ideal, "matrix entries must lie in the maximal ideal");
  matrix x = m;
  if (x.is_zero()) return 0;
  for (std::uint64_t s = 1; s <= s_max; ++s) {
    x = mat_pow(x, r->p());
    if (x.is_zero()) return s;
  }
  fail(errc::exponent_exceeds_bound, "p-power exponent exceeds the stated bound");
}

std::vector<element> char_poly(const matrix& m) {
  const ring_ptr& r = owner_of(m);
  const std::uint32_t n = m.size();
  if (n == 0) return {r->one()};
  // Berkowitz: extend from the trailing 1x1 block outward; c is highest-first.
  std::vector<element> c{r->one(), r->neg(m.at(n - 1, n - 1))};
  for (std::uint32_t k = 2; k <= n; ++k) {
    const std::uint32_t base = n - k;
    // s_j = row . (trailing block)^j . col for j = 0..k-2
    std::vector<element> v(k - 1);
    for (std::uint32_t i = 0; i < k - 1; ++i) v[i] = m.at(base + 1 + i, base);
    std::vector<element> s(k - 1);
    for (std::uint32_t j = 0; j + 1 < k; ++j) {
      element dot = r->zero();
      for (std::uint32_t i = 0; i < k - 1; ++i)
        dot = r->add(dot, r->mul(m.at(base, base + 1 + i), v[i]));
      s[j] = dot;
      if (j + 2 < k) {
        std::vector<element> nv(k - 1, r->zero());
        for (std::uint32_t i = 0; i < k - 1; ++i) {
          if (v[i].is_zero()) continue;
          for (std::uint32_t row = 0; row < k - 1; ++row)
            nv[row] = r->add(nv[row], r->mul(m.at(base + 1 + row, base + 1 + i), v[i]));
        }
        v = std::move(nv);
      }
    }
    // Toeplitz column (1, -a, -s_0, ..., -s_{k-2}) applied to c.
    std::vector<element> t;
    t.reserve(k + 1);
    t.push_back(r->one());
    t.push_back(r->neg(m.at(base, base)));
    for (std::uint32_t j = 0; j + 1 < k; ++j) t.push_back(r->neg(s[j]));
    std::vector<element> nc(k + 1, r->zero());
    for (std::uint32_t i = 0; i <= k; ++i)
      for (std::uint32_t j = 0; j < k && j <= i; ++j) {
        if (i - j > k) continue;
        nc[i] = r->add(nc[i], r->mul(t[i - j], c[j]));
      }
    c = std::move(nc);
  }
  std::reverse(c.begin(), c.end());
  return c;
}

bool cayley_hamilton_check(const matrix& m) {
  const ring_ptr& r = owner_of(m);
  const std::uint32_t n = m.size();
  std::vector<element> c = char_poly(m);  // ascending
  // Horner, highest coefficient first: X <- X*M + c_i * I.
  matrix x = matrix::identity(r, n);
  for (std::uint32_t idx = n; idx-- > 0;) {
    x = mat_mul(x, m);
    for (std::uint32_t i = 0; i < n; ++i) x.at(i, i) = r->add(x.at(i, i), c[idx]);
  }
  return x.is_zero();
}

bool ch_bound_check(const matrix& m) {
  const ring_ptr& r = owner_of(m);
  if (!m.in_ideal()) fail(errc::not_in_ideal, "matrix entries must lie in the maximal ideal");
  const std::uint32_t n = m.size();
  std::vector<element> c = char_poly(m);
  for (std::uint32_t i = 0; i < n; ++i)
    if (!c[i].in_ideal()) return false;
  const std::uint64_t e1 = r->length() ? r->profile().exponents[0] : 0;
  const std::uint64_t nil_bound = static_cast<std::uint64_t>(n) * p_power(r->p(), e1);
  return mat_pow(m, nil_bound).is_zero();
}

namespace {

std::uint64_t exponent_bound(const ring_ptr& r, std::uint32_t n) {
  const std::uint64_t e1 = r->length() ? r->profile().exponents[0] : 0;
  return e1 + ceil_log(r->p(), n ? n : 1);
}

}  // namespace

sample_stats sample_max_exponent(const ring_ptr& r, std::uint32_t n, std::uint64_t trials,
                                 std::uint64_t seed, bool triangular_only) {
  if (n < 1) fail(errc::index_out_of_range, "matrix size must be at least 1");
  sample_stats st;
  st.trials = trials;
  const std::uint64_t bound = exponent_bound(r, n);
  for (std::uint64_t t = 0; t < trials; ++t) {
    matrix m(r, n);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = triangular_only ? i : 0; j < n; ++j)
        m.at(i, j) = r->random_ideal_element(
            derive_seed(seed, t * static_cast<std::uint64_t>(n) * n + i * static_cast<std::uint64_t>(n) + j), 3);
    st.max_exponent = std::max(st.max_exponent, p_power_exponent(m, bound));
  }
  return st;
}

bool exhaustive_feasible(const ring_ptr& r, std::uint32_t n, bool triangular_only) {
  if (n < 1) return false;
  const std::uint64_t limit = 1u << 20;
  const std::uint64_t cells =
      triangular_only ? static_cast<std::uint64_t>(n) * (n + 1) / 2 : static_cast<std::uint64_t>(n) * n;
  const std::uint64_t card = r->ideal_cardinality(limit + 1);
  std::uint64_t total = 1;
  for (std::uint64_t c = 0; c < cells; ++c) {
    if (card == 0) return false;
    if (total > limit / card) return false;
    total *= card;
  }
  return total <= limit;
}

sample_stats max_exponent_exhaustive(const ring_ptr& r, std::uint32_t n, bool triangular_only) {
  if (!exhaustive_feasible(r, n, triangular_only))
    fail(errc::profile_too_large, "exhaustive enumeration not feasible at this size");
  const std::uint64_t card = r->ideal_cardinality(UINT64_MAX);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> cells;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = triangular_only ? i : 0; j < n; ++j) cells.emplace_back(i, j);
  std::vector<std::uint64_t> ord(cells.size(), 0);
  const std::uint64_t bound = exponent_bound(r, n);
  sample_stats st;
  st.exhaustive = true;
  for (;;) {
    matrix m(r, n);
    for (std::size_t c = 0; c < cells.size(); ++c)
      m.at(cells[c].first, cells[c].second) = r->ideal_element_from_ordinal(ord[c]);
    st.trials += 1;
    st.max_exponent = std::max(st.max_exponent, p_power_exponent(m, bound));
    std::size_t c = 0;
    while (c < ord.size() && ++ord[c] == card) ord[c++] = 0;
    if (c == ord.size()) break;
  }
  return st;
}

}  // namespace insep
