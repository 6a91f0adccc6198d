#include "insep/suite.hpp"

#include <algorithm>
#include <optional>

#include "insep/errors.hpp"
#include "insep/json_io.hpp"
#include "insep/matrix.hpp"
#include "insep/predict.hpp"
#include "insep/ring.hpp"
#include "insep/rng.hpp"
#include "insep/sl2.hpp"
#include "insep/witness.hpp"

namespace insep {

namespace {

std::string profile_tag(const extension_profile& pr) {
  std::string s = "p=" + std::to_string(pr.p) + " e=(";
  for (std::size_t i = 0; i < pr.exponents.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(pr.exponents[i]);
  }
  s += ")";
  if (!pr.relations.empty()) s += " rel";
  return s;
}

struct checker {
  suite_item item;
  explicit checker(std::string name, std::uint64_t seed) {
    item.property = std::move(name);
    item.seed = seed;
  }
  void check(bool ok, const std::string& where) {
    item.cases += 1;
    if (!ok && item.pass) {
      item.pass = false;
      item.details = where;
    }
  }
};

// Mixed sample: ideal element, sometimes with a unit constant added.
element random_mixed(const ring_ptr& r, std::uint64_t seed) {
  splitmix64 g(seed);
  element x = r->random_ideal_element(g.next(), 4);
  if (g.below(2)) x = r->add(x, r->constant(1 + g.below(r->p() - 1)));
  return x;
}

void gen_sequences(std::uint64_t p, std::uint64_t cap, std::vector<std::uint32_t>& cur,
                   std::uint64_t dim, std::vector<extension_profile>& out) {
  extension_profile pr;
  pr.p = p;
  pr.exponents = cur;
  out.push_back(pr);
  const std::uint32_t last = cur.empty() ? 62 : cur.back();
  for (std::uint32_t e = last; e >= 1; --e) {
    std::uint64_t step = 1;
    bool fits = true;
    for (std::uint32_t k = 0; k < e; ++k) {
      if (step > cap / p || dim * (step * p) > cap) {
        fits = false;
        break;
      }
      step *= p;
    }
    if (!fits) continue;
    cur.push_back(e);
    gen_sequences(p, cap, cur, dim * step, out);
    cur.pop_back();
  }
}

struct witness_slot {
  std::optional<witness_report> rep;
  std::string err;
};

}  // namespace

std::vector<extension_profile> modular_grid(const std::vector<std::uint64_t>& ps,
                                            std::uint64_t dim_cap) {
  std::vector<extension_profile> out;
  for (std::uint64_t p : ps) {
    std::vector<std::uint32_t> cur;
    gen_sequences(p, dim_cap, cur, 1, out);
  }
  return out;
}

namespace {

suite_item prop_ring_axioms(const std::vector<ring_ptr>& rings, const suite_config& cfg,
                            std::uint64_t pseed) {
  checker c("ring-axioms", pseed);
  for (std::size_t ri = 0; ri < rings.size(); ++ri) {
    const ring_ptr& r = rings[ri];
    const std::string tag = profile_tag(r->profile());
    for (std::uint64_t t = 0; t < cfg.trials; ++t) {
      const std::uint64_t base = derive_seed(pseed, ri * cfg.trials * 4 + t * 4);
      const element x = random_mixed(r, base);
      const element y = random_mixed(r, derive_seed(base, 1));
      const element z = random_mixed(r, derive_seed(base, 2));
      c.check((x + y) + z == x + (y + z), tag + ": additive associativity");
      c.check(x + y == y + x, tag + ": additive commutativity");
      c.check((x * y) * z == x * (y * z), tag + ": multiplicative associativity");
      c.check(x * y == y * x, tag + ": multiplicative commutativity");
      c.check(x * (y + z) == x * y + x * z, tag + ": distributivity");
      c.check(r->add(x, r->neg(x)).is_zero(), tag + ": additive inverse");
      c.check(r->mul(r->one(), x) == x, tag + ": multiplicative identity");
      c.check(r->mul(r->zero(), x).is_zero(), tag + ": zero annihilates");
      c.check(r->parse(r->to_string(x)) == x, tag + ": text round-trip");
      if (x.is_unit()) {
        const element inv = r->invert_unit(x);
        c.check(r->mul(inv, x) == r->one(), tag + ": unit inverse");
      }
    }
  }
  return c.item;
}

suite_item prop_frobenius(const std::vector<ring_ptr>& rings, const suite_config& cfg,
                          std::uint64_t pseed) {
  checker c("frobenius-coherence", pseed);
  for (std::size_t ri = 0; ri < rings.size(); ++ri) {
    const ring_ptr& r = rings[ri];
    const std::string tag = profile_tag(r->profile());
    const std::uint64_t smax = std::min<std::uint64_t>(
        3, (r->length() ? r->profile().exponents[0] : 0) + 1);
    for (std::uint64_t t = 0; t < cfg.trials; ++t) {
      const std::uint64_t base = derive_seed(pseed, ri * cfg.trials * 2 + t * 2);
      const element x = random_mixed(r, base);
      const element y = random_mixed(r, derive_seed(base, 1));
      for (std::uint64_t s = 0; s <= smax; ++s) {
        c.check(r->frobenius_pow(x, s) == r->pow(x, p_power(r->p(), s)),
                tag + ": frobenius equals iterated power");
        c.check(r->frobenius_pow(r->mul(x, y), s) ==
                    r->mul(r->frobenius_pow(x, s), r->frobenius_pow(y, s)),
                tag + ": frobenius is multiplicative");
        c.check(r->frobenius_pow(r->add(x, y), s) ==
                    r->add(r->frobenius_pow(x, s), r->frobenius_pow(y, s)),
                tag + ": frobenius is additive");
      }
    }
  }
  return c.item;
}

suite_item prop_ideal_nilpotency(const std::vector<ring_ptr>& rings, const suite_config& cfg,
                                 std::uint64_t pseed) {
  checker c("ideal-nilpotency", pseed);
  for (const ring_ptr& r : rings) {
    const extension_profile& pr = r->profile();
    const std::string tag = profile_tag(pr);
    const std::uint64_t m = m_invariant(pr) + (cfg.negate ? 1 : 0);
    const std::uint64_t idx = r->ideal_nilpotency_index();
    if (pr.modular()) {
      c.check(idx == m, tag + ": nilpotency index must equal m");
    } else {
      c.check(idx <= m, tag + ": nilpotency index must be at most m");
    }
    if (r->length() >= 1 && pr.modular()) {
      std::vector<std::uint64_t> nu(r->length());
      for (std::uint32_t g = 0; g < r->length(); ++g) nu[g] = r->cap(g) - 1;
      const element sharp = r->monomial(nu, 1);
      c.check(!sharp.is_zero(), tag + ": sharp monomial must be nonzero");
      for (std::uint32_t g = 1; g <= r->length(); ++g)
        c.check(r->mul(sharp, r->generator(g)).is_zero(),
                tag + ": sharp monomial times a generator must vanish");
    }
  }
  return c.item;
}

suite_item prop_product_vanishing(const std::vector<ring_ptr>& rings, const suite_config& cfg,
                                  std::uint64_t pseed) {
  checker c("product-vanishing", pseed);
  for (std::size_t ri = 0; ri < rings.size(); ++ri) {
    const ring_ptr& r = rings[ri];
    const extension_profile& pr = r->profile();
    const std::string tag = profile_tag(pr);
    for (std::uint64_t t = 0; t < cfg.trials; ++t) {
      splitmix64 g(derive_seed(pseed, ri * cfg.trials + t));
      const std::uint64_t d = 1 + g.below(std::max<std::uint64_t>(r->length(), 2) + 2);
      const std::uint64_t target = m_r_invariant(pr, d) - d + 1 + g.below(3);
      std::vector<element> elems;
      std::vector<std::uint64_t> powers(d, 0);
      for (std::uint64_t k = 0; k < d; ++k)
        elems.push_back(r->random_ideal_element(g.next(), 3));
      for (std::uint64_t u = 0; u < target; ++u) powers[g.below(d)] += 1;
      c.check(product_vanishes(elems, powers), tag + ": product criterion instance must vanish");
    }
    if (r->length() >= 1 && pr.modular()) {
      // One unit below the threshold the bound is sharp: the generators to their
      // top powers survive.
      std::vector<element> elems;
      std::vector<std::uint64_t> powers;
      for (std::uint32_t gidx = 1; gidx <= r->length(); ++gidx) {
        elems.push_back(r->generator(gidx));
        powers.push_back(r->cap(gidx - 1) - 1);
      }
      c.check(!product_vanishes(elems, powers), tag + ": bound must be sharp at sum m_d - d");
    }
  }
  return c.item;
}

suite_item prop_subalgebra(const std::vector<ring_ptr>& rings, const suite_config& cfg,
                           std::uint64_t pseed) {
  checker c("subalgebra-membership", pseed);
  for (std::size_t ri = 0; ri < rings.size(); ++ri) {
    const ring_ptr& r = rings[ri];
    if (!r->profile().modular()) continue;
    const std::string tag = profile_tag(r->profile());
    for (std::uint32_t i = 1; i <= r->length(); ++i) {
      const std::uint64_t ei = r->profile().exponents[i - 1];
      for (std::uint64_t t = 0; t < cfg.trials; ++t) {
        const element m = r->random_ideal_element(
            derive_seed(pseed, (ri * 16 + i) * cfg.trials + t), 4);
        c.check(r->subalgebra_membership(r->frobenius_pow(m, ei), i),
                tag + ": p^e_i power must land in the subalgebra");
      }
      c.check(r->subalgebra_membership(r->zero(), i), tag + ": zero is a member");
    }
    if (r->length() >= 1)
      c.check(!r->subalgebra_membership(r->generator(1), 1),
              tag + ": a_1 must not be a member at level 1");
  }
  return c.item;
}

suite_item prop_cayley_hamilton(const std::vector<ring_ptr>& rings, const suite_config& cfg,
                                std::uint64_t pseed) {
  checker c("cayley-hamilton", pseed);
  const std::uint64_t mt = std::max<std::uint64_t>(2, cfg.trials / 8);
  for (std::size_t ri = 0; ri < rings.size(); ++ri) {
    const ring_ptr& r = rings[ri];
    const extension_profile& pr = r->profile();
    const std::string tag = profile_tag(pr);
    const std::uint64_t e1 = r->length() ? pr.exponents[0] : 0;
    for (std::uint32_t rank : cfg.ranks) {
      for (std::uint64_t t = 0; t < mt; ++t) {
        matrix m(r, rank);
        const std::uint64_t base = derive_seed(pseed, (ri * 8 + rank) * mt + t);
        for (std::uint32_t i = 0; i < rank; ++i)
          for (std::uint32_t j = 0; j < rank; ++j)
            m.at(i, j) = r->random_ideal_element(
                derive_seed(base, i * static_cast<std::uint64_t>(rank) + j), 3);
        const std::vector<element> cp = char_poly(m);
        bool in_ideal = true;
        for (std::uint32_t i = 0; i < rank; ++i) in_ideal = in_ideal && cp[i].in_ideal();
        c.check(in_ideal, tag + ": low characteristic coefficients must lie in the ideal");
        c.check(cp[rank] == r->one(), tag + ": characteristic polynomial must be monic");
        c.check(cayley_hamilton_check(m), tag + ": Cayley-Hamilton evaluation must vanish");
        c.check(ch_bound_check(m), tag + ": M^(r*p^e1) must vanish");
        bool bounded = true;
        std::uint64_t got = 0;
        try {
          got = p_power_exponent(m, e1 + ceil_log(pr.p, rank));
        } catch (const error&) {
          bounded = false;
        }
        c.check(bounded, tag + ": p-power exponent must respect e1 + ceil(log_p r)");
        if (bounded && pr.modular())
          c.check(got <= big_e_m(pr), tag + ": p-power exponent must respect ceil(log_p m)");
      }
    }
  }
  return c.item;
}

suite_item prop_witness_grid(const std::vector<ring_ptr>& rings, const suite_config& cfg,
                             const std::vector<std::vector<witness_slot>>& wits,
                             std::uint64_t pseed) {
  checker c("witness-grid", pseed);
  for (std::size_t ri = 0; ri < rings.size(); ++ri) {
    const ring_ptr& r = rings[ri];
    const extension_profile& pr = r->profile();
    if (!pr.modular() || r->length() == 0) continue;
    const std::string tag = profile_tag(pr);
    for (std::size_t k = 0; k < cfg.ranks.size(); ++k) {
      const std::uint32_t rank = cfg.ranks[k];
      const witness_slot& slot = wits[ri][k];
      if (!slot.rep) {
        c.check(false, tag + " r=" + std::to_string(rank) + ": witness failed: " + slot.err);
        continue;
      }
      std::string diag;
      const bool ok = verify_witness(*slot.rep, &diag);
      c.check(ok, tag + " r=" + std::to_string(rank) + ": " + diag);
      c.check(slot.rep->verified_exponent == e_of(pr, rank),
              tag + " r=" + std::to_string(rank) + ": witness exponent must equal E(r)");
    }
  }
  return c.item;
}

suite_item prop_path_oracle(const std::vector<ring_ptr>& rings, const suite_config& cfg,
                            std::uint64_t pseed) {
  checker c("path-oracle", pseed);
  const std::uint64_t mt = std::max<std::uint64_t>(1, cfg.trials / 8);
  for (std::size_t ri = 0; ri < rings.size(); ++ri) {
    const ring_ptr& r = rings[ri];
    const std::string tag = profile_tag(r->profile());
    for (std::uint64_t t = 0; t < mt; ++t) {
      splitmix64 g(derive_seed(pseed, ri * mt + t));
      const std::uint32_t rank = 2 + static_cast<std::uint32_t>(g.below(2));
      matrix m(r, rank);
      for (std::uint32_t i = 0; i < rank; ++i)
        for (std::uint32_t j = i; j < rank; ++j)
          m.at(i, j) = r->random_ideal_element(g.next(), 2);
      const std::uint64_t n = 1 + g.below(5);
      const matrix x = mat_pow(m, n);
      for (std::uint32_t i = 0; i < rank; ++i)
        for (std::uint32_t j = i; j < rank; ++j)
          c.check(path_expansion_entry(m, n, i, j) == x.at(i, j),
                  tag + ": path expansion must match the matrix power");
    }
  }
  return c.item;
}

suite_item prop_sl2_closed_form(const std::vector<ring_ptr>& rings, const suite_config& cfg,
                                std::uint64_t pseed) {
  checker c("sl2-closed-form", pseed);
  for (std::size_t ri = 0; ri < rings.size(); ++ri) {
    const ring_ptr& r = rings[ri];
    if (r->p() != 2) continue;
    const std::string tag = profile_tag(r->profile());
    const std::uint64_t e1 = r->length() ? r->profile().exponents[0] : 0;
    const std::uint64_t smax = std::min<std::uint64_t>(e1 + 2, 6);
    for (std::uint64_t t = 0; t < cfg.trials; ++t) {
      const std::uint64_t base = derive_seed(pseed, ri * cfg.trials + t);
      matrix m(r, 2);
      for (std::uint32_t i = 0; i < 2; ++i)
        for (std::uint32_t j = 0; j < 2; ++j)
          m.at(i, j) = random_mixed(r, derive_seed(base, i * 2 + j));
      for (std::uint64_t s = 0; s <= smax; ++s)
        c.check(closed_form_power_2(m, s) == mat_pow(m, p_power(2, s)),
                tag + ": closed form must equal repeated squaring");
    }
  }
  return c.item;
}

suite_item prop_sl2_witnesses(const std::vector<ring_ptr>& rings, std::uint64_t pseed) {
  checker c("sl2-witnesses", pseed);
  for (const ring_ptr& r : rings) {
    const extension_profile& pr = r->profile();
    if (pr.p != 2 || !pr.modular() || r->length() == 0) continue;
    const std::string tag = profile_tag(pr);
    const sl2_witness_report borel = sl2_borel_witness(r);
    c.check(borel.pass, tag + ": Borel witness must pass");
    c.check(borel.exponent == pr.exponents[0], tag + ": Borel exponent must equal e1");
    if (r->length() >= 2) {
      const sl2_witness_report full = sl2_full_witness(r);
      const bool jump = pr.exponents[1] == pr.exponents[0];
      c.check(full.pass, tag + ": full witness must pass");
      c.check(full.nonzero_at_e == jump,
              tag + ": full witness survives at 2^e1 exactly when e1 = e2");
      if (jump)
        c.check(borel.exponent < full.exponent,
                tag + ": Borel exponent must lag the full exponent when e1 = e2");
    }
  }
  return c.item;
}

suite_item prop_sl2_dichotomy(const std::vector<ring_ptr>& rings, const suite_config& cfg,
                              std::uint64_t pseed) {
  checker c("sl2-dichotomy", pseed);
  for (std::size_t ri = 0; ri < rings.size(); ++ri) {
    const ring_ptr& r = rings[ri];
    const extension_profile& pr = r->profile();
    if (pr.p != 2 || !pr.modular() || r->length() == 0) continue;
    const std::string tag = profile_tag(pr);
    const sl2_check_result res = sl2_sample_check(r, cfg.trials, derive_seed(pseed, ri));
    c.check(res.violations == 0, tag + ": no unipotent element may exceed the predicted exponent");
    if (res.exhaustive)
      c.check(res.attained, tag + ": exhaustive check must attain the predicted exponent");
  }
  return c.item;
}

suite_item prop_exhaustive(const std::vector<ring_ptr>& rings, const suite_config& cfg,
                           std::uint64_t pseed) {
  checker c("exhaustive-exponents", pseed);
  const std::uint64_t budget = cfg.exhaustive ? (1u << 20) : (1u << 12);
  for (const ring_ptr& r : rings) {
    const extension_profile& pr = r->profile();
    if (!pr.modular() || r->length() == 0) continue;
    const std::string tag = profile_tag(pr);
    const std::uint64_t card = r->ideal_cardinality(budget + 1);
    for (std::uint32_t rank : cfg.ranks) {
      for (const bool tri : {true, false}) {
        const std::uint64_t cells = tri
                                        ? static_cast<std::uint64_t>(rank) * (rank + 1) / 2
                                        : static_cast<std::uint64_t>(rank) * rank;
        std::uint64_t total = 1;
        bool fits = card > 0;
        for (std::uint64_t k = 0; k < cells && fits; ++k) {
          if (total > budget / card) fits = false;
          else total *= card;
        }
        if (!fits) continue;
        const sample_stats st = max_exponent_exhaustive(r, rank, tri);
        const std::string where = tag + " r=" + std::to_string(rank);
        if (tri) {
          c.check(st.max_exponent == e_of(pr, rank),
                  where + ": triangular exhaustive maximum must equal E(r)");
          continue;
        }
        group_spec g;
        g.family = group_family::gl;
        g.rank = rank;
        g.display = "GL(" + std::to_string(rank) + ")";
        const prediction pred = predict(pr, g);
        if (pred.exact) {
          c.check(st.max_exponent == *pred.exact,
                  where + ": full exhaustive maximum must equal the exact prediction");
        } else {
          c.check(pred.lower && pred.upper && *pred.lower <= st.max_exponent &&
                      st.max_exponent <= *pred.upper,
                  where + ": full exhaustive maximum must sit between the bounds");
        }
      }
    }
  }
  return c.item;
}

suite_item prop_predictor(const std::vector<ring_ptr>& rings, const suite_config& cfg,
                          const std::vector<std::vector<witness_slot>>& wits,
                          std::uint64_t pseed) {
  checker c("predictor-coherence", pseed);
  for (std::size_t ri = 0; ri < rings.size(); ++ri) {
    const ring_ptr& r = rings[ri];
    const extension_profile& pr = r->profile();
    if (!pr.modular()) continue;
    const std::string tag = profile_tag(pr);
    // little_e_mr is non-decreasing in rank.
    for (std::uint64_t rk = 1; rk < 8; ++rk)
      c.check(little_e_mr(pr, rk) <= little_e_mr(pr, rk + 1),
              tag + ": little_e_mr must be non-decreasing in rank");
    for (std::size_t k = 0; k < cfg.ranks.size(); ++k) {
      const std::uint32_t rank = cfg.ranks[k];
      group_spec g;
      g.family = group_family::gl;
      g.rank = rank;
      g.display = "GL(" + std::to_string(rank) + ")";
      prediction pred;
      try {
        pred = predict(pr, g);
      } catch (const error& e) {
        c.check(false, tag + ": predictor raised: " + std::string(e.what()));
        continue;
      }
      c.check(pred.applicable, tag + ": GL prediction must be applicable");
      if (r->length() == 0) continue;
      c.check(pred.lower.has_value() && pred.upper.has_value() && *pred.lower <= *pred.upper,
              tag + ": GL bounds must be ordered");
      if (pred.exact)
        c.check(*pred.lower == *pred.exact && *pred.upper == *pred.exact,
                tag + ": exact prediction must pin both bounds");
      const witness_slot& slot = wits[ri][k];
      if (slot.rep) {
        const sample_stats stats = sample_max_exponent(
            r, rank, std::max<std::uint64_t>(4, cfg.trials / 4), derive_seed(pseed, ri * 8 + rank),
            false);
        const cross_check_result cv = cross_validate(pr, rank, *slot.rep, stats);
        std::string joined;
        for (const std::string& n : cv.notes) joined += (joined.empty() ? "" : "; ") + n;
        c.check(cv.pass, tag + " r=" + std::to_string(rank) + ": " + joined);
      }
    }
    if (r->length() >= 1) {
      // The rank-one trio must agree among its members away from characteristic 2.
      const prediction gl2 = predict(pr, parse_group("GL2", 0));
      const prediction pgl2 = predict(pr, parse_group("PGL2", 0));
      c.check(gl2.exact && pgl2.exact && *gl2.exact == *pgl2.exact,
              tag + ": GL2 and PGL2 predictions must coincide");
      if (pr.p != 2) {
        const prediction sl2 = predict(pr, parse_group("SL2", 0));
        c.check(sl2.exact && *sl2.exact == *gl2.exact,
                tag + ": SL2 away from characteristic 2 must match GL2");
      } else {
        // Characteristic-2 gate: spin-type groups are not covered.
        const prediction b3 = predict(pr, parse_group("B3", 0));
        c.check(!b3.applicable, tag + ": simply connected B3 must be inapplicable at p=2");
        const prediction so7 = predict(pr, parse_group("SO7", 0));
        c.check(so7.applicable, tag + ": SO(7) must be applicable at p=2");
      }
    }
  }
  return c.item;
}

}  // namespace

suite_report run_suite(const suite_config& cfg) {
  suite_report rep;
  rep.config = cfg;
  std::vector<ring_ptr> rings;
  rings.reserve(cfg.profiles.size());
  for (const extension_profile& pr : cfg.profiles) rings.push_back(ring::make(pr));

  // One witness per (profile, rank), shared by the witness and predictor properties.
  std::vector<std::vector<witness_slot>> wits(rings.size());
  for (std::size_t ri = 0; ri < rings.size(); ++ri) {
    wits[ri].resize(cfg.ranks.size());
    const ring_ptr& r = rings[ri];
    if (!r->profile().modular() || r->length() == 0) continue;
    for (std::size_t k = 0; k < cfg.ranks.size(); ++k) {
      try {
        wits[ri][k].rep = borel_witness(r, cfg.ranks[k]);
      } catch (const error& e) {
        wits[ri][k].err = e.what();
      }
    }
  }

  rep.items.push_back(prop_ring_axioms(rings, cfg, derive_seed(cfg.seed, 1)));
  rep.items.push_back(prop_frobenius(rings, cfg, derive_seed(cfg.seed, 2)));
  rep.items.push_back(prop_ideal_nilpotency(rings, cfg, derive_seed(cfg.seed, 3)));
  rep.items.push_back(prop_product_vanishing(rings, cfg, derive_seed(cfg.seed, 4)));
  rep.items.push_back(prop_subalgebra(rings, cfg, derive_seed(cfg.seed, 5)));
  rep.items.push_back(prop_cayley_hamilton(rings, cfg, derive_seed(cfg.seed, 6)));
  rep.items.push_back(prop_witness_grid(rings, cfg, wits, derive_seed(cfg.seed, 7)));
  rep.items.push_back(prop_path_oracle(rings, cfg, derive_seed(cfg.seed, 8)));
  rep.items.push_back(prop_sl2_closed_form(rings, cfg, derive_seed(cfg.seed, 9)));
  rep.items.push_back(prop_sl2_witnesses(rings, derive_seed(cfg.seed, 10)));
  rep.items.push_back(prop_sl2_dichotomy(rings, cfg, derive_seed(cfg.seed, 11)));
  rep.items.push_back(prop_predictor(rings, cfg, wits, derive_seed(cfg.seed, 12)));
  rep.items.push_back(prop_exhaustive(rings, cfg, derive_seed(cfg.seed, 13)));

  for (const suite_item& it : rep.items) rep.pass = rep.pass && it.pass;
  return rep;
}

nlohmann::json suite_report_to_json(const suite_report& rep) {
  json cfg;
  json profs = json::array();
  for (const extension_profile& pr : rep.config.profiles) profs.push_back(profile_to_json(pr));
  cfg["profiles"] = profs;
  cfg["ranks"] = rep.config.ranks;
  cfg["trials"] = rep.config.trials;
  cfg["seed"] = rep.config.seed;
  cfg["exhaustive"] = rep.config.exhaustive;
  cfg["negate"] = rep.config.negate;
  json results = json::array();
  for (const suite_item& it : rep.items)
    results.push_back({{"property", it.property},
                       {"status", it.pass ? "pass" : "fail"},
                       {"cases", it.cases},
                       {"seed", it.seed},
                       {"details", it.details}});
  return json{{"config", cfg}, {"results", results}, {"pass", rep.pass}};
}

}  // namespace insep
