#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "insep/matrix.hpp"
#include "insep/ring.hpp"
#include "insep/rng.hpp"

using namespace insep;

namespace {

extension_profile mk(std::uint64_t p, std::vector<std::uint32_t> es) {
  extension_profile pr;
  pr.p = p;
  pr.exponents = std::move(es);
  return pr;
}

// Test-only polynomial-in-X arithmetic with element coefficients (ascending).
using epoly = std::vector<element>;

epoly pzero(const ring_ptr& r, std::size_t n) { return epoly(n, r->zero()); }

epoly padd(const ring_ptr& r, const epoly& a, const epoly& b) {
  epoly out = pzero(r, std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = out[i] + a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = out[i] + b[i];
  return out;
}

epoly psub(const ring_ptr& r, const epoly& a, const epoly& b) {
  epoly out = pzero(r, std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = out[i] + a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = out[i] - b[i];
  return out;
}

epoly pmul(const ring_ptr& r, const epoly& a, const epoly& b) {
  epoly out = pzero(r, a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
  return out;
}

// det(X I - M) by Laplace expansion along the first remaining row.
epoly det_rec(const ring_ptr& r, const std::vector<std::vector<epoly>>& g,
              const std::vector<std::uint32_t>& rows, const std::vector<std::uint32_t>& cols) {
  if (rows.size() == 1) return g[rows[0]][cols[0]];
  epoly acc = pzero(r, 1);
  for (std::size_t k = 0; k < cols.size(); ++k) {
    std::vector<std::uint32_t> sub_rows(rows.begin() + 1, rows.end());
    std::vector<std::uint32_t> sub_cols;
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (j != k) sub_cols.push_back(cols[j]);
    const epoly term = pmul(r, g[rows[0]][cols[k]], det_rec(r, g, sub_rows, sub_cols));
    acc = (k % 2 == 0) ? padd(r, acc, term) : psub(r, acc, term);
  }
  return acc;
}

epoly char_poly_oracle(const matrix& m) {
  const ring_ptr& r = m.owner();
  const std::uint32_t n = m.size();
  std::vector<std::vector<epoly>> g(n, std::vector<epoly>(n));
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      epoly cell = {r->zero() - m.at(i, j)};
      if (i == j) cell.push_back(r->one());
      g[i][j] = cell;
    }
  std::vector<std::uint32_t> idx(n);
  for (std::uint32_t i = 0; i < n; ++i) idx[i] = i;
  epoly det = det_rec(r, g, idx, idx);
  det.resize(n + 1, r->zero());
  return det;
}

matrix random_matrix(const ring_ptr& r, std::uint32_t n, std::uint64_t seed, bool ideal_only) {
  splitmix64 g(seed);
  matrix m(r, n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      element x = r->random_ideal_element(g.next(), 3);
      if (!ideal_only && g.below(2)) x = x + r->constant(1 + g.below(r->p() - 1));
      m.at(i, j) = x;
    }
  return m;
}

}  // namespace

TEST_CASE("two-by-two characteristic polynomial closed form") {
  const ring_ptr r = ring::make(mk(3, {1, 1}));
  splitmix64 g(9);
  for (int t = 0; t < 16; ++t) {
    const matrix m = random_matrix(r, 2, g.next(), false);
    const std::vector<element> cp = char_poly(m);
    REQUIRE(cp.size() == 3);
    const element a = m.at(0, 0), b = m.at(0, 1), c = m.at(1, 0), d = m.at(1, 1);
    CHECK(cp[0] == a * d - b * c);        // det
    CHECK(cp[1] == r->zero() - (a + d));  // -trace
    CHECK(cp[2] == r->one());
  }
}

TEST_CASE("characteristic polynomial of the identity") {
  const ring_ptr r = ring::make(mk(2, {1}));
  matrix id(r, 2);
  id.at(0, 0) = r->one();
  id.at(1, 1) = r->one();
  const std::vector<element> cp = char_poly(id);
  // (X - 1)^2 = X^2 + 1 in characteristic 2.
  CHECK(cp[0] == r->one());
  CHECK(cp[1].is_zero());
  CHECK(cp[2] == r->one());
}

TEST_CASE("characteristic polynomial matches cofactor expansion") {
  const std::vector<extension_profile> grid = {mk(2, {1, 1}), mk(3, {1}), mk(5, {1}), mk(2, {2})};
  for (const extension_profile& pr : grid) {
    const ring_ptr r = ring::make(pr);
    splitmix64 g(derive_seed(31, pr.p));
    for (std::uint32_t n = 1; n <= 4; ++n) {
      for (int t = 0; t < 6; ++t) {
        const matrix m = random_matrix(r, n, g.next(), false);
        const std::vector<element> cp = char_poly(m);
        const epoly want = char_poly_oracle(m);
        REQUIRE(cp.size() == n + 1);
        for (std::uint32_t i = 0; i <= n; ++i) CHECK(cp[i] == want[i]);
      }
    }
  }
}

TEST_CASE("Cayley-Hamilton holds, checked by direct Horner evaluation") {
  const ring_ptr r = ring::make(mk(2, {2, 1}));
  splitmix64 g(14);
  for (std::uint32_t n = 1; n <= 3; ++n) {
    for (int t = 0; t < 8; ++t) {
      const matrix m = random_matrix(r, n, g.next(), false);
      const std::vector<element> cp = char_poly(m);
      // acc = sum cp[i] M^i via Horner, written out with mat_* only.
      matrix acc(r, n);
      for (std::uint32_t i = 0; i < n; ++i) acc.at(i, i) = cp[n];
      for (std::uint32_t k = n; k-- > 0;) {
        acc = mat_mul(acc, m);
        for (std::uint32_t i = 0; i < n; ++i) acc.at(i, i) = acc.at(i, i) + cp[k];
      }
      CHECK(acc.is_zero());
      CHECK(cayley_hamilton_check(m));
    }
  }
}

TEST_CASE("ideal matrices: coefficients, vanishing bound, exponents") {
  const ring_ptr r = ring::make(mk(3, {2}));
  splitmix64 g(77);
  for (std::uint32_t n = 1; n <= 3; ++n) {
    for (int t = 0; t < 8; ++t) {
      const matrix m = random_matrix(r, n, g.next(), true);
      const std::vector<element> cp = char_poly(m);
      for (std::uint32_t i = 0; i < n; ++i) CHECK(cp[i].in_ideal());
      CHECK(ch_bound_check(m));
      CHECK(mat_pow(m, n * 9).is_zero());  // n * p^{e_1}
      const std::uint64_t s = p_power_exponent(m, 2 + ceil_log(3, n));
      CHECK(s <= 2 + ceil_log(3, n));
      CHECK(mat_pow(m, p_power(3, s)).is_zero());
      if (s) CHECK_FALSE(mat_pow(m, p_power(3, s - 1)).is_zero());
    }
  }
}

TEST_CASE("frozen exponent examples") {
  const ring_ptr r = ring::make(mk(2, {2}));
  const element a1 = r->generator(1);
  matrix m(r, 2);
  m.at(0, 0) = a1;
  m.at(0, 1) = a1;
  m.at(1, 1) = a1;
  CHECK(p_power_exponent(m, 3) == 2);  // M^2 = a1^2 I, M^4 = 0
  CHECK_THROWS_AS(p_power_exponent(m, 1), error);  // bound too tight

  matrix nil(r, 2);
  nil.at(0, 1) = a1;
  CHECK(p_power_exponent(nil, 3) == 1);
  CHECK(p_power_exponent(matrix(r, 2), 3) == 0);  // zero matrix

  matrix unit(r, 2);
  unit.at(0, 0) = r->one();
  CHECK_THROWS_AS(p_power_exponent(unit, 3), error);  // not in the ideal
}

TEST_CASE("matrix algebra identities") {
  const ring_ptr r = ring::make(mk(2, {1, 1}));
  splitmix64 g(5);
  const matrix a = random_matrix(r, 3, g.next(), false);
  const matrix b = random_matrix(r, 3, g.next(), false);
  const matrix c = random_matrix(r, 3, g.next(), false);
  CHECK(mat_mul(mat_add(a, b), c) == mat_add(mat_mul(a, c), mat_mul(b, c)));
  CHECK(mat_mul(a, mat_mul(b, c)) == mat_mul(mat_mul(a, b), c));
  CHECK(mat_pow(a, 5) == mat_mul(a, mat_mul(a, mat_mul(a, mat_mul(a, a)))));
  matrix id(r, 3);
  for (int i = 0; i < 3; ++i) id.at(i, i) = r->one();
  CHECK(mat_pow(a, 0) == id);
  CHECK(mat_pow(a, 1) == a);

  matrix tri(r, 2);
  tri.at(0, 0) = r->generator(1);
  tri.at(0, 1) = r->generator(2);
  CHECK(tri.is_upper_triangular());
  CHECK(tri.in_ideal());
  tri.at(1, 0) = r->generator(1);
  CHECK_FALSE(tri.is_upper_triangular());

  const ring_ptr other = ring::make(mk(2, {1}));
  matrix foreign(other, 3);
  CHECK_THROWS_AS(mat_add(a, foreign), error);
  CHECK_THROWS_AS(mat_mul(a, matrix(r, 2)), error);
}

TEST_CASE("exhaustive enumeration over the smallest ring") {
  const ring_ptr r = ring::make(mk(2, {1}));
  REQUIRE(exhaustive_feasible(r, 2, false));
  const sample_stats st = max_exponent_exhaustive(r, 2, false);
  CHECK(st.exhaustive);
  CHECK(st.trials == 16);  // |m| = 2 over 4 cells
  CHECK(st.max_exponent == 1);
  const sample_stats tri = max_exponent_exhaustive(r, 2, true);
  CHECK(tri.trials == 8);
  CHECK(tri.max_exponent == 1);
  CHECK_FALSE(exhaustive_feasible(ring::make(mk(2, {2, 1})), 3, false));
}

TEST_CASE("sampling is deterministic in the seed") {
  const ring_ptr r = ring::make(mk(2, {2, 1}));
  const sample_stats a = sample_max_exponent(r, 3, 20, 99, false);
  const sample_stats b = sample_max_exponent(r, 3, 20, 99, false);
  CHECK(a.max_exponent == b.max_exponent);
  CHECK(a.trials == 20);
  const sample_stats tri = sample_max_exponent(r, 3, 20, 99, true);
  CHECK(tri.max_exponent <= e_of(r->profile(), 3));
}
