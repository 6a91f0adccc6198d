#include "insep/ring.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstring>

#include "insep/rng.hpp"

namespace insep {

namespace {

constexpr std::uint32_t kDeskScaleDim = 1u << 16;  // constructor guard on prod p^{e_i}
constexpr std::uint32_t kMaskDimLimit = 2048;      // char-2 bitmask table cutoff
constexpr std::uint32_t kMaxGenerators = 16;       // dim <= 2^16 forces l <= 16

// Reused multiply scratch; sized to the largest ring seen on this thread.
struct scratch_space {
  std::vector<std::uint32_t> acc32;
  std::vector<std::uint64_t> acc64;
  std::vector<std::uint32_t> ydense;
  std::vector<std::uint64_t> ybits;
  std::vector<std::uint64_t> accbits;
  std::vector<std::pair<std::uint32_t, std::uint64_t>> pairs;
};

thread_local scratch_space tls;

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

void sort_accumulate(std::vector<std::pair<std::uint32_t, std::uint64_t>>& pairs,
                     std::uint64_t p, std::vector<term>& out) {
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  out.clear();
  std::size_t i = 0;
  while (i < pairs.size()) {
    std::uint32_t mono = pairs[i].first;
    std::uint64_t sum = 0;
    while (i < pairs.size() && pairs[i].first == mono) sum += pairs[i++].second;
    sum %= p;
    if (sum) out.push_back({mono, static_cast<std::uint32_t>(sum)});
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// construction

ring_ptr ring::make(extension_profile profile) {
  validate(profile);
  std::shared_ptr<ring> R(new ring());
  R->profile_ = std::move(profile);
  const auto& prof = R->profile_;
  const std::uint32_t l = prof.length();
  if (l > kMaxGenerators)
    fail(errc::profile_too_large, "more generators than the desk-scale guard admits");

  R->caps_.resize(l);
  R->strides_.resize(l);
  std::uint64_t dim = 1;
  for (std::uint32_t g = 0; g < l; ++g) {
    R->caps_[g] = p_power(prof.p, prof.exponents[g]);
    R->strides_[g] = static_cast<std::uint32_t>(dim);
    dim *= R->caps_[g];
    if (dim > kDeskScaleDim)
      fail(errc::profile_too_large, "prod p^{e_i} exceeds the desk-scale guard 2^16");
  }
  R->dim_ = static_cast<std::uint32_t>(dim);
  R->m_ = m_invariant(prof);

  R->length_padded_ = std::max<std::uint32_t>(l, 1);
  R->digits_.assign(std::size_t(R->dim_) * R->length_padded_, 0);
  for (std::uint32_t mono = 0; mono < R->dim_; ++mono) {
    std::uint32_t rest = mono;
    std::uint16_t* d = R->digits_.data() + std::size_t(mono) * R->length_padded_;
    for (std::uint32_t g = 0; g < l; ++g) {
      d[g] = static_cast<std::uint16_t>(rest % R->caps_[g]);
      rest /= static_cast<std::uint32_t>(R->caps_[g]);
    }
  }

  if (prof.p == 2 && prof.modular() && R->dim_ <= kMaskDimLimit && l >= 1) {
    R->words2_ = (R->dim_ + 63) / 64;
    R->masks2_.assign(std::size_t(R->dim_) * R->words2_, 0);
    for (std::uint32_t i = 0; i < R->dim_; ++i) {
      const std::uint16_t* di = R->digits(i);
      std::uint64_t* row = R->masks2_.data() + std::size_t(i) * R->words2_;
      for (std::uint32_t j = 0; j < R->dim_; ++j)
        if (R->compatible(di, R->digits(j))) row[j >> 6] |= std::uint64_t(1) << (j & 63);
    }
  }

  R->rel_terms_.assign(l, {});
  auto rels = prof.relations;
  std::sort(rels.begin(), rels.end(),
            [](const auto& a, const auto& b) { return a.index < b.index; });
  for (const auto& rel : rels) {
    std::vector<raw_term> raws;
    raws.reserve(rel.terms.size());
    for (const auto& t : rel.terms) {
      raw_term rt;
      rt.coeff = t.coeff % prof.p;
      rt.nu = t.nu;
      rt.nu.resize(l, 0);
      raws.push_back(std::move(rt));
    }
    R->rel_terms_[rel.index - 1] = R->normalize_raw(std::move(raws));
  }
  return R;
}

std::uint32_t ring::total_degree(std::uint32_t mono) const {
  const std::uint16_t* d = digits(mono);
  std::uint32_t deg = 0;
  for (std::uint32_t g = 0; g < length(); ++g) deg += d[g];
  return deg;
}

bool ring::compatible(const std::uint16_t* da, const std::uint16_t* db) const {
  for (std::uint32_t g = 0; g < length(); ++g)
    if (std::uint32_t(da[g]) + db[g] >= caps_[g]) return false;
  return true;
}

void ring::check_owner(const element& x) const {
  if (x.owner().get() == this) return;
  if (!x.owner()) fail(errc::profile_mismatch, "element has no ring");
  if (!(x.owner()->profile_ == profile_))
    fail(errc::profile_mismatch, "element belongs to a different ring");
}

// ---------------------------------------------------------------------------
// element factories

element ring::zero() const { return wrap({}); }

element ring::one() const { return constant(1); }

element ring::constant(std::uint64_t c) const {
  c %= p();
  if (!c) return wrap({});
  return wrap({term{0, static_cast<std::uint32_t>(c)}});
}

element ring::generator(std::uint32_t i) const {
  if (i < 1 || i > length())
    fail(errc::index_out_of_range, "generator index " + std::to_string(i) + " out of range");
  return wrap({term{strides_[i - 1], 1}});
}

element ring::from_raw(const std::vector<raw_term>& terms) const {
  std::vector<raw_term> work;
  work.reserve(terms.size());
  for (const auto& t : terms) {
    raw_term rt = t;
    for (std::size_t j = length(); j < rt.nu.size(); ++j)
      if (rt.nu[j]) fail(errc::index_out_of_range, "exponent on nonexistent generator");
    rt.nu.resize(length(), 0);
    work.push_back(std::move(rt));
  }
  return wrap(normalize_raw(std::move(work)));
}

element ring::monomial(const std::vector<std::uint64_t>& nu, std::uint64_t coeff) const {
  return from_raw({raw_term{coeff, nu}});
}

// ---------------------------------------------------------------------------
// normalization

std::vector<term> ring::normalize_raw(std::vector<raw_term> work) const {
  const std::uint32_t l = length();
  const std::uint64_t pp = p();
  std::vector<std::pair<std::uint32_t, std::uint64_t>> done;
  while (!work.empty()) {
    raw_term t = std::move(work.back());
    work.pop_back();
    t.coeff %= pp;
    if (!t.coeff) continue;
    std::int32_t over = -1;
    for (std::int32_t g = static_cast<std::int32_t>(l) - 1; g >= 0; --g)
      if (t.nu[g] >= caps_[g]) {
        over = g;
        break;
      }
    if (over < 0) {
      std::uint32_t mono = 0;
      for (std::uint32_t g = 0; g < l; ++g)
        mono += static_cast<std::uint32_t>(t.nu[g]) * strides_[g];
      done.emplace_back(mono, t.coeff);
      continue;
    }
    if (modular()) continue;  // a_g^{p^{e_g}} = 0 kills the term
    const std::uint64_t q = t.nu[over] / caps_[over];
    t.nu[over] %= caps_[over];
    std::vector<term> rq = relation_power(static_cast<std::uint32_t>(over), q);
    for (const auto& rt : rq) {
      raw_term nt;
      nt.coeff = t.coeff * rt.coeff % pp;
      nt.nu = t.nu;
      const std::uint16_t* d = digits(rt.mono);
      for (std::uint32_t g = 0; g < l; ++g) nt.nu[g] += d[g];
      work.push_back(std::move(nt));
    }
  }
  std::vector<term> out;
  sort_accumulate(done, pp, out);
  return out;
}

std::vector<term> ring::relation_power(std::uint32_t g, std::uint64_t q) const {
  return pow_terms(rel_terms_[g], q);
}

std::vector<term> ring::pow_terms(std::vector<term> base, std::uint64_t n) const {
  std::vector<term> result{term{0, 1}};
  while (n) {
    if (base.empty()) return n ? std::vector<term>{} : result;
    if (n & 1) result = mul_terms(result, base);
    n >>= 1;
    if (n) base = mul_terms(base, base);
  }
  return result;
}

// ---------------------------------------------------------------------------
// arithmetic

element ring::add(const element& a, const element& b) const {
  check_owner(a);
  check_owner(b);
  const std::uint64_t pp = p();
  std::vector<term> out;
  out.reserve(a.terms().size() + b.terms().size());
  std::size_t i = 0, j = 0;
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  while (i < ta.size() || j < tb.size()) {
    if (j == tb.size() || (i < ta.size() && ta[i].mono < tb[j].mono)) {
      out.push_back(ta[i++]);
    } else if (i == ta.size() || tb[j].mono < ta[i].mono) {
      out.push_back(tb[j++]);
    } else {
      std::uint64_t c = (std::uint64_t(ta[i].coeff) + tb[j].coeff) % pp;
      if (c) out.push_back({ta[i].mono, static_cast<std::uint32_t>(c)});
      ++i;
      ++j;
    }
  }
  return wrap(std::move(out));
}

element ring::neg(const element& a) const {
  check_owner(a);
  std::vector<term> out = a.terms();
  for (auto& t : out) t.coeff = static_cast<std::uint32_t>(p() - t.coeff);
  return wrap(std::move(out));
}

element ring::sub(const element& a, const element& b) const { return add(a, neg(b)); }

void ring::mul_pairwise(const std::vector<term>& a, const std::vector<term>& b,
                        std::vector<term>& out) const {
  auto& pairs = tls.pairs;
  pairs.clear();
  for (const auto& ta : a) {
    const std::uint16_t* da = digits(ta.mono);
    for (const auto& tb : b)
      if (compatible(da, digits(tb.mono)))
        pairs.emplace_back(ta.mono + tb.mono, std::uint64_t(ta.coeff) * tb.coeff);
  }
  sort_accumulate(pairs, p(), out);
}

// Dense path: scatter the larger factor, then for every term of the smaller
// factor add a scaled translate over the compatible sub-box.  Compatible
// digit sums never carry across mixed-radix fields, so translation is plain
// index addition and the innermost generator gives contiguous runs.
void ring::mul_dense(const std::vector<term>& a, const std::vector<term>& b,
                     std::vector<term>& out) const {
  const auto& x = a.size() <= b.size() ? a : b;
  const auto& y = a.size() <= b.size() ? b : a;
  const std::uint32_t l = length();
  const std::uint64_t pp = p();

  auto& ydense = tls.ydense;
  ydense.assign(dim_, 0);
  for (const auto& t : y) ydense[t.mono] = t.coeff;

  std::array<std::uint32_t, kMaxGenerators> limit{}, idx{};
  const bool narrow = (pp - 1) * (pp - 1) * x.size() < (std::uint64_t(1) << 31);
  auto& acc32 = tls.acc32;
  auto& acc64 = tls.acc64;
  if (narrow)
    acc32.assign(dim_, 0);
  else
    acc64.assign(dim_, 0);

  for (const auto& tx : x) {
    const std::uint16_t* d = digits(tx.mono);
    const std::uint32_t c = tx.coeff;
    const std::uint32_t run = static_cast<std::uint32_t>(caps_[0]) - d[0];
    for (std::uint32_t g = 1; g < l; ++g) {
      limit[g] = static_cast<std::uint32_t>(caps_[g]) - d[g];
      idx[g] = 0;
    }
    std::uint32_t off = 0;
    for (;;) {
      const std::uint32_t dst = tx.mono + off;
      if (narrow) {
        const std::uint32_t* ysrc = ydense.data() + off;
        std::uint32_t* adst = acc32.data() + dst;
        for (std::uint32_t t = 0; t < run; ++t) adst[t] += c * ysrc[t];
      } else {
        const std::uint32_t* ysrc = ydense.data() + off;
        std::uint64_t* adst = acc64.data() + dst;
        for (std::uint32_t t = 0; t < run; ++t) adst[t] += std::uint64_t(c) * ysrc[t];
      }
      std::uint32_t g = 1;
      while (g < l) {
        ++idx[g];
        off += strides_[g];
        if (idx[g] < limit[g]) break;
        off -= strides_[g] * idx[g];
        idx[g] = 0;
        ++g;
      }
      if (g >= l) break;
    }
  }

  out.clear();
  if (narrow) {
    for (std::uint32_t j = 0; j < dim_; ++j) {
      std::uint32_t v = acc32[j] % static_cast<std::uint32_t>(pp);
      if (v) out.push_back({j, v});
    }
  } else {
    for (std::uint32_t j = 0; j < dim_; ++j) {
      std::uint64_t v = acc64[j] % pp;
      if (v) out.push_back({j, static_cast<std::uint32_t>(v)});
    }
  }
}

// Char-2 path: coefficients are support bits, a compatible product is XOR of
// a masked translate, and translation by i is a left shift by i bit positions.
void ring::mul_bitset(const std::vector<term>& a, const std::vector<term>& b,
                      std::vector<term>& out) const {
  const auto& x = a.size() <= b.size() ? a : b;
  const auto& y = a.size() <= b.size() ? b : a;
  const std::uint32_t W = words2_;

  auto& ybits = tls.ybits;
  auto& acc = tls.accbits;
  ybits.assign(W, 0);
  acc.assign(W, 0);
  for (const auto& t : y) ybits[t.mono >> 6] |= std::uint64_t(1) << (t.mono & 63);

  for (const auto& tx : x) {
    const std::uint64_t* mask = masks2_.data() + std::size_t(tx.mono) * W;
    const std::uint32_t slide = tx.mono >> 6;
    const std::uint32_t shift = tx.mono & 63;
    for (std::uint32_t w = 0; w < W; ++w) {
      const std::uint64_t v = ybits[w] & mask[w];
      if (!v) continue;
      acc[w + slide] ^= v << shift;
      if (shift) {
        const std::uint64_t hi = v >> (64 - shift);
        if (hi) acc[w + slide + 1] ^= hi;
      }
    }
  }

  out.clear();
  for (std::uint32_t w = 0; w < W; ++w) {
    std::uint64_t bits = acc[w];
    while (bits) {
      const std::uint32_t bit = static_cast<std::uint32_t>(__builtin_ctzll(bits));
      out.push_back({(w << 6) + bit, 1});
      bits &= bits - 1;
    }
  }
}

std::vector<term> ring::mul_terms(const std::vector<term>& a, const std::vector<term>& b) const {
  std::vector<term> out;
  if (a.empty() || b.empty()) return out;
  if (!modular()) {
    std::vector<raw_term> raws;
    raws.reserve(a.size() * b.size());
    const std::uint32_t l = length();
    for (const auto& ta : a) {
      const std::uint16_t* da = digits(ta.mono);
      for (const auto& tb : b) {
        const std::uint16_t* db = digits(tb.mono);
        raw_term rt;
        rt.coeff = std::uint64_t(ta.coeff) * tb.coeff;
        rt.nu.resize(l);
        for (std::uint32_t g = 0; g < l; ++g) rt.nu[g] = std::uint64_t(da[g]) + db[g];
        raws.push_back(std::move(rt));
      }
    }
    return normalize_raw(std::move(raws));
  }
  const std::uint64_t work = std::uint64_t(a.size()) * b.size();
  if (!masks2_.empty()) {
    if (work <= 16)
      mul_pairwise(a, b, out);
    else
      mul_bitset(a, b, out);
  } else if (work <= 16 || work * (length() + 1) <= 2 * std::uint64_t(dim_)) {
    mul_pairwise(a, b, out);
  } else {
    mul_dense(a, b, out);
  }
  return out;
}

element ring::mul(const element& a, const element& b) const {
  check_owner(a);
  check_owner(b);
  return wrap(mul_terms(a.terms(), b.terms()));
}

element ring::pow(const element& a, std::uint64_t n) const {
  check_owner(a);
  return wrap(pow_terms(a.terms(), n));
}

element ring::frobenius_pow(const element& a, std::uint64_t s) const {
  check_owner(a);
  if (s == 0) return a;
  // Saturated p^s: any saturated exponent already exceeds every cap, and the
  // relation rewrite only needs the quotient to stay >= the nilpotency bound.
  std::uint64_t ps = 1;
  for (std::uint64_t k = 0; k < s; ++k) {
    ps *= p();
    if (ps >= (std::uint64_t(1) << 32)) {
      ps = std::uint64_t(1) << 32;
      break;
    }
  }
  std::vector<raw_term> raws;
  raws.reserve(a.terms().size());
  const std::uint32_t l = length();
  for (const auto& t : a.terms()) {
    raw_term rt;
    rt.coeff = t.coeff;  // c^{p^s} = c for c in F_p
    rt.nu.resize(l);
    const std::uint16_t* d = digits(t.mono);
    for (std::uint32_t g = 0; g < l; ++g) rt.nu[g] = std::uint64_t(d[g]) * ps;
    raws.push_back(std::move(rt));
  }
  return wrap(normalize_raw(std::move(raws)));
}

element ring::invert_unit(const element& a) const {
  check_owner(a);
  const std::uint64_t c0 = a.constant_term();
  if (!c0) fail(errc::not_a_unit, "element has zero constant term");
  const std::uint64_t inv_c0 = mod_pow(c0, p() - 2, p());
  element nil = sub(a, constant(c0));
  // a^{-1} = c0^{-1} sum_k (-c0^{-1} nil)^k, truncated when the power dies.
  element factor = neg(mul(nil, constant(inv_c0)));
  element acc = one();
  element t = one();
  for (std::uint64_t k = 1; k <= m_; ++k) {
    t = mul(t, factor);
    if (t.is_zero()) break;
    acc = add(acc, t);
  }
  element result = mul(acc, constant(inv_c0));
  return result;
}

std::uint64_t ring::nilpotency_index(const element& a) const {
  check_owner(a);
  if (!a.in_ideal()) fail(errc::not_nilpotent, "element has nonzero constant term");
  if (a.is_zero()) return 1;
  element y = a;
  std::uint64_t n = 1;
  while (!y.is_zero()) {
    y = mul(y, a);
    ++n;
    if (n > m_ + 1) fail(errc::internal, "nilpotency index exceeded the ideal bound");
  }
  return n;
}

// ---------------------------------------------------------------------------
// ideal nilpotency (structural, no use of the m-formula)

std::uint64_t ring::ideal_nilpotency_index() const {
  if (dim_ == 1) return 1;
  if (modular()) {
    // Powers of the ideal have monomial bases; push each basis through the
    // generators until it empties.
    std::vector<char> cur(dim_, 0), next(dim_, 0);
    for (std::uint32_t mono = 1; mono < dim_; ++mono) cur[mono] = 1;
    std::uint64_t k = 1;
    for (;;) {
      bool any = false;
      std::fill(next.begin(), next.end(), 0);
      for (std::uint32_t mono = 1; mono < dim_; ++mono) {
        if (!cur[mono]) continue;
        const std::uint16_t* d = digits(mono);
        for (std::uint32_t g = 0; g < length(); ++g)
          if (std::uint64_t(d[g]) + 1 < caps_[g]) {
            next[mono + strides_[g]] = 1;
            any = true;
          }
      }
      if (!any) return k + 1;
      std::swap(cur, next);
      ++k;
      if (k > m_ + 1) fail(errc::internal, "ideal power iteration exceeded the bound");
    }
  }

  if (dim_ > 4096)
    fail(errc::profile_too_large,
         "ideal nilpotency over relation profiles is limited to dim <= 4096");
  const std::uint64_t pp = p();
  auto reduce_insert = [&](std::vector<std::uint32_t> row,
                           std::vector<std::vector<std::uint32_t>>& basis,
                           std::vector<std::int32_t>& pivot_of) {
    for (std::uint32_t j = 0; j < dim_; ++j) {
      if (!row[j]) continue;
      const std::int32_t b = pivot_of[j];
      if (b < 0) {
        // normalize pivot to 1
        const std::uint64_t inv = mod_pow(row[j], pp - 2, pp);
        for (auto& v : row) v = static_cast<std::uint32_t>(v * inv % pp);
        pivot_of[j] = static_cast<std::int32_t>(basis.size());
        basis.push_back(std::move(row));
        return true;
      }
      const std::uint64_t f = row[j];
      const auto& br = basis[b];
      for (std::uint32_t t = j; t < dim_; ++t)
        row[t] = static_cast<std::uint32_t>((row[t] + (pp - br[t] % pp) * f) % pp);
    }
    return false;
  };

  std::vector<std::vector<std::uint32_t>> basis;
  std::vector<std::int32_t> pivot_of(dim_, -1);
  for (std::uint32_t mono = 1; mono < dim_; ++mono) {
    std::vector<std::uint32_t> row(dim_, 0);
    row[mono] = 1;
    reduce_insert(std::move(row), basis, pivot_of);
  }
  std::uint64_t k = 1;
  while (!basis.empty()) {
    std::vector<std::vector<std::uint32_t>> nbasis;
    std::vector<std::int32_t> npivot(dim_, -1);
    for (const auto& row : basis) {
      std::vector<term> row_terms;
      for (std::uint32_t j = 0; j < dim_; ++j)
        if (row[j]) row_terms.push_back({j, row[j]});
      for (std::uint32_t g = 0; g < length(); ++g) {
        std::vector<term> prod = mul_terms(row_terms, {term{strides_[g], 1}});
        if (prod.empty()) continue;
        std::vector<std::uint32_t> nrow(dim_, 0);
        for (const auto& t : prod) nrow[t.mono] = t.coeff;
        reduce_insert(std::move(nrow), nbasis, npivot);
      }
    }
    if (nbasis.empty()) return k + 1;
    basis = std::move(nbasis);
    pivot_of = std::move(npivot);
    ++k;
    if (k > m_ + 1) fail(errc::internal, "ideal power iteration exceeded the bound");
  }
  return k + 1;
}

// ---------------------------------------------------------------------------
// subalgebra membership and sampling

bool ring::subalgebra_membership(const element& x, std::uint32_t i) const {
  check_owner(x);
  if (i < 1 || i > length()) fail(errc::index_out_of_range, "subalgebra index out of range");
  const std::uint64_t cap = caps_[i - 1];
  for (const auto& t : x.terms()) {
    const std::uint16_t* d = digits(t.mono);
    for (std::uint32_t g = 0; g < length(); ++g) {
      if (g >= i - 1) {
        if (d[g]) return false;
      } else if (d[g] % cap) {
        return false;
      }
    }
  }
  return true;
}

element ring::random_ideal_element(std::uint64_t seed, std::uint32_t max_terms) const {
  if (dim_ == 1) return zero();
  if (max_terms < 1) max_terms = 1;
  splitmix64 rng(seed);
  const std::uint64_t n = 1 + rng.below(max_terms);
  std::vector<std::pair<std::uint32_t, std::uint64_t>> picked;
  for (std::uint64_t k = 0; k < n; ++k) {
    const std::uint32_t mono = 1 + static_cast<std::uint32_t>(rng.below(dim_ - 1));
    const std::uint64_t coeff = 1 + rng.below(p() - 1);
    picked.emplace_back(mono, coeff);
  }
  std::vector<term> out;
  sort_accumulate(picked, p(), out);
  return wrap(std::move(out));
}

element ring::ideal_element_from_ordinal(std::uint64_t ord) const {
  std::vector<term> out;
  for (std::uint32_t mono = 1; mono < dim_ && ord; ++mono) {
    const std::uint32_t c = static_cast<std::uint32_t>(ord % p());
    ord /= p();
    if (c) out.push_back(term{mono, c});
  }
  if (ord) fail(errc::index_out_of_range, "ordinal exceeds ideal cardinality");
  return wrap(std::move(out));
}

std::uint64_t ring::ideal_cardinality(std::uint64_t cap) const {
  std::uint64_t n = 1;
  for (std::uint32_t mono = 1; mono < dim_; ++mono) {
    if (n > cap / p()) return cap;
    n *= p();
  }
  return n < cap ? n : cap;
}

// ---------------------------------------------------------------------------
// text form

std::string ring::to_string(const element& x) const {
  check_owner(x);
  if (x.is_zero()) return "0";
  std::vector<term> ordered = x.terms();
  std::sort(ordered.begin(), ordered.end(), [&](const term& a, const term& b) {
    const std::uint32_t da = total_degree(a.mono), db = total_degree(b.mono);
    if (da != db) return da > db;
    const std::uint16_t* xa = digits(a.mono);
    const std::uint16_t* xb = digits(b.mono);
    for (std::uint32_t g = 0; g < length(); ++g)
      if (xa[g] != xb[g]) return xa[g] > xb[g];
    return false;
  });
  std::string out;
  for (std::size_t k = 0; k < ordered.size(); ++k) {
    if (k) out += " + ";
    const term& t = ordered[k];
    if (t.mono == 0) {
      out += std::to_string(t.coeff);
      continue;
    }
    bool need_star = false;
    if (t.coeff != 1) {
      out += std::to_string(t.coeff);
      need_star = true;
    }
    const std::uint16_t* d = digits(t.mono);
    for (std::uint32_t g = 0; g < length(); ++g) {
      if (!d[g]) continue;
      if (need_star) out += "*";
      out += "a" + std::to_string(g + 1);
      if (d[g] > 1) out += "^" + std::to_string(d[g]);
      need_star = true;
    }
  }
  return out;
}

element ring::parse(const std::string& text) const {
  std::size_t pos = 0;
  const auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  const auto parse_int = [&]() -> std::uint64_t {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail(errc::parse_error, "expected integer at position " + std::to_string(pos));
    std::uint64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > (std::uint64_t(1) << 48)) fail(errc::parse_error, "integer literal too large");
      ++pos;
    }
    return v;
  };

  std::vector<raw_term> raws;
  bool negate = false;
  skip_ws();
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negate = text[pos] == '-';
    ++pos;
  }
  for (;;) {
    raw_term rt;
    rt.coeff = 1;
    rt.nu.assign(length(), 0);
    bool saw_factor = false;
    for (;;) {
      skip_ws();
      if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        rt.coeff = rt.coeff * (parse_int() % p()) % p();
        saw_factor = true;
      } else if (pos < text.size() && text[pos] == 'a') {
        ++pos;
        const std::uint64_t idx = parse_int();
        if (idx < 1 || idx > length())
          fail(errc::index_out_of_range, "generator a" + std::to_string(idx) + " out of range");
        std::uint64_t exp = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          exp = parse_int();
        }
        rt.nu[idx - 1] += exp;
        saw_factor = true;
      } else {
        fail(errc::parse_error, "expected term at position " + std::to_string(pos));
      }
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    if (!saw_factor) fail(errc::parse_error, "empty term");
    if (negate) rt.coeff = (p() - rt.coeff % p()) % p();
    raws.push_back(std::move(rt));
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] == '+' || text[pos] == '-') {
      negate = text[pos] == '-';
      ++pos;
      continue;
    }
    fail(errc::parse_error, "unexpected character at position " + std::to_string(pos));
  }
  return from_raw(raws);
}

// ---------------------------------------------------------------------------
// free functions

bool operator==(const element& a, const element& b) {
  if (!a.owner() && !b.owner()) return true;
  if (!a.owner() || !b.owner()) return false;
  if (a.owner() != b.owner() && !(a.owner()->profile() == b.owner()->profile())) return false;
  return a.terms() == b.terms();
}

bool product_vanishes(const std::vector<element>& elements,
                      const std::vector<std::uint64_t>& powers) {
  if (elements.size() != powers.size())
    fail(errc::size_mismatch, "elements and powers differ in length");
  if (elements.empty()) fail(errc::size_mismatch, "empty product");
  const ring_ptr& R = elements.front().owner();
  if (!R) fail(errc::profile_mismatch, "element has no ring");
  for (const auto& m : elements) {
    R->check_owner(m);
    if (!m.in_ideal()) fail(errc::not_in_ideal, "factor has nonzero constant term");
  }
  element acc = R->one();
  for (std::size_t k = 0; k < elements.size(); ++k) {
    acc = R->mul(acc, R->pow(elements[k], powers[k]));
    if (acc.is_zero()) return true;
  }
  return acc.is_zero();
}

}  // namespace insep
