#include "insep/witness.hpp"

#include <algorithm>
#include <sstream>

#include "insep/errors.hpp"
#include "insep/profile.hpp"

namespace insep {

namespace {

// Sum of (p^e_i - 1) over generators with index > q (1-based q).
std::uint64_t tail_excess(const extension_profile& pr, std::uint64_t q) {
  std::uint64_t s = 0;
  for (std::size_t i = q; i < pr.exponents.size(); ++i) s += p_power(pr.p, pr.exponents[i]) - 1;
  return s;
}

// Tail generator indices, one copy per unit of multiplicity, largest index first.
std::vector<std::uint32_t> tail_list(const extension_profile& pr, std::uint64_t q) {
  std::vector<std::uint32_t> t;
  for (std::uint32_t i = static_cast<std::uint32_t>(pr.exponents.size()); i > q; --i) {
    const std::uint64_t mult = p_power(pr.p, pr.exponents[i - 1]) - 1;
    for (std::uint64_t k = 0; k < mult; ++k) t.push_back(i);
  }
  return t;
}

}  // namespace

const char* to_string(witness_case c) {
  return c == witness_case::exact ? "exact" : "generic";
}

witness_report borel_witness(const ring_ptr& r, std::uint32_t rank) {
  if (!r) fail(errc::internal, "null ring");
  if (rank < 1) fail(errc::index_out_of_range, "rank must be at least 1");
  const extension_profile& pr = r->profile();
  const std::uint32_t l = r->length();
  if (l == 0) fail(errc::trivial_extension, "profile has no generators");

  witness_report w;
  w.mat = matrix(r, rank);
  const bool exact = exactness_condition(pr, rank);
  if (exact) {
    // Largest q < rank whose tail still covers q-1 superdiagonal slots.
    std::uint64_t q = 1;
    for (std::uint64_t c = rank - 1; c >= 1; --c)
      if (tail_excess(pr, c) >= c - 1) {
        q = c;
        break;
      }
    const std::vector<std::uint32_t> tail = tail_list(pr, q);
    for (std::uint64_t k = 0; k < q; ++k)
      w.mat.at(static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(k)) =
          r->generator(static_cast<std::uint32_t>(k + 1));
    const std::uint64_t slots = std::min<std::uint64_t>(q, tail.size());
    for (std::uint64_t s = 0; s < slots; ++s)
      w.mat.at(static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(s + 1)) =
          r->generator(tail[s]);
    std::uint64_t tau = 0;
    if (tail.size() > q) {
      tau = tail.size() - q;
      w.mat.at(static_cast<std::uint32_t>(q), static_cast<std::uint32_t>(q)) =
          r->generator(static_cast<std::uint32_t>(q + 1));
    }
    w.kind = witness_case::exact;
    w.q = q;
    w.tau = tau;
    w.claimed_power = m_invariant(pr) - 1;
  } else {
    // Generic case: rank <= l here (rank >= 2 forces rank < l).
    for (std::uint32_t k = 0; k < rank; ++k) w.mat.at(k, k) = r->generator(k + 1);
    const std::vector<std::uint32_t> tail = tail_list(pr, rank);
    for (std::uint32_t s = 0; s + 1 < rank; ++s) w.mat.at(s, s + 1) = r->generator(tail[s]);
    w.kind = witness_case::generic;
    w.claimed_power = m_r_invariant(pr, rank) - 1;
  }

  const std::uint64_t bound = (l ? pr.exponents[0] : 0) + ceil_log(pr.p, rank);
  w.verified_exponent = p_power_exponent(w.mat, bound);
  if (w.claimed_power > 0 && mat_pow(w.mat, w.claimed_power).is_zero())
    fail(errc::witness_vanished, "witness power vanished below the claimed exponent");
  return w;
}

element path_expansion_entry(const matrix& m, std::uint64_t n, std::uint32_t i, std::uint32_t j) {
  if (!m.owner()) fail(errc::internal, "matrix has no ring");
  if (!m.is_upper_triangular()) fail(errc::not_upper_triangular, "path expansion needs an upper-triangular matrix");
  if (i >= m.size() || j >= m.size() || i > j) fail(errc::index_out_of_range, "entry indices out of range");
  const ring_ptr& r = m.owner();
  element acc = r->zero();
  // Walk non-decreasing level sequences i = k_0 <= k_1 <= ... <= k_n = j,
  // pruning branches whose running product is already zero.
  struct walker {
    const matrix& m;
    const ring_ptr& r;
    std::uint32_t j;
    element& acc;
    void go(std::uint32_t level, std::uint64_t steps, const element& partial) {
      if (partial.is_zero()) return;
      if (steps == 0) {
        if (level == j) acc = r->add(acc, partial);
        return;
      }
      for (std::uint32_t next = level; next <= j; ++next) {
        const element& step = m.at(level, next);
        if (step.is_zero()) continue;
        go(next, steps - 1, r->mul(partial, step));
      }
    }
  } w{m, r, j, acc};
  w.go(i, n, r->one());
  return acc;
}

bool verify_witness(const witness_report& w, std::string* diagnosis) {
  bool ok = true;
  auto note = [&](const std::string& s) {
    ok = false;
    if (diagnosis) {
      if (!diagnosis->empty()) *diagnosis += "; ";
      *diagnosis += s;
    }
  };
  if (!w.mat.owner()) {
    note("matrix has no ring");
    return false;
  }
  const ring_ptr& r = w.mat.owner();
  const extension_profile& pr = r->profile();
  const std::uint32_t rank = w.mat.size();
  if (rank < 1) {
    note("empty matrix");
    return false;
  }
  if (r->length() == 0) note("trivial profile cannot carry a witness");
  try {
    const bool exact = exactness_condition(pr, rank);
    if (exact != (w.kind == witness_case::exact)) note("case tag disagrees with exactness condition");
    const std::uint64_t expect_claim =
        exact ? m_invariant(pr) - 1 : m_r_invariant(pr, rank) - 1;
    if (w.claimed_power != expect_claim) note("claimed power disagrees with the invariants");
    if (!w.mat.is_upper_triangular()) note("matrix is not upper triangular");
    if (!w.mat.in_ideal()) note("matrix entries must lie in the maximal ideal");

    const matrix x = mat_pow(w.mat, w.claimed_power);
    if (x.is_zero()) note("claimed power vanishes");
    for (std::uint32_t i = 0; i < rank; ++i)
      for (std::uint32_t j = i; j < rank; ++j)
        if (!(path_expansion_entry(w.mat, w.claimed_power, i, j) == x.at(i, j))) {
          note("path expansion disagrees with the computed power");
          i = rank;
          break;
        }

    if (w.verified_exponent != e_of(pr, rank)) note("verified exponent disagrees with e(r)");
    const std::uint64_t bound = pr.exponents.empty() ? ceil_log(pr.p, rank)
                                                     : pr.exponents[0] + ceil_log(pr.p, rank);
    if (p_power_exponent(w.mat, bound) != w.verified_exponent)
      note("recomputed p-power exponent disagrees");

    if (w.kind == witness_case::exact) {
      if (!w.q || !w.tau) {
        note("exact case must carry q and tau");
      } else {
        const std::uint64_t q = *w.q;
        if (q < 1 || q >= rank) note("q out of range");
        else {
          if (tail_excess(pr, q) < q - 1) note("q fails the tail coverage requirement");
          if (q + 1 < rank && tail_excess(pr, q + 1) >= q) note("q is not maximal");
          const std::uint64_t tl = tail_excess(pr, q);
          const std::uint64_t expect_tau = tl > q ? tl - q : 0;
          if (*w.tau != expect_tau) note("tau disagrees with the tail bookkeeping");
          std::uint64_t head = 0;
          for (std::uint64_t k = 0; k < q; ++k) head += p_power(pr.p, pr.exponents[k]) - 1;
          if (head + tl != m_invariant(pr) - 1) note("multiplicity bookkeeping does not sum to m-1");
        }
        // The full sharp monomial prod a_i^(p^e_i - 1) must survive in M^(m-1).
        std::vector<std::uint64_t> nu(r->length());
        for (std::uint32_t g = 0; g < r->length(); ++g) nu[g] = r->cap(g) - 1;
        const element sharp = r->monomial(nu, 1);
        const std::uint32_t sharp_mono = sharp.terms().front().mono;
        bool found = false;
        for (std::uint32_t i = 0; i < rank && !found; ++i)
          for (std::uint32_t j = i; j < rank && !found; ++j)
            for (const term& t : x.at(i, j).terms())
              if (t.mono == sharp_mono) {
                found = true;
                break;
              }
        if (!found) note("sharp monomial missing from the surviving power");
      }
    } else if (w.q || w.tau) {
      note("generic case must not carry q or tau");
    }
  } catch (const error& e) {
    note(std::string("verification raised: ") + e.what());
  }
  return ok;
}

}  // namespace insep
