#include "insep/predict.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "insep/errors.hpp"

namespace insep {

namespace {

bool parse_uint(const std::string& s, std::uint64_t& out) {
  if (s.empty()) return false;
  out = 0;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    out = out * 10 + static_cast<std::uint64_t>(ch - '0');
    if (out > (1u << 20)) return false;
  }
  return true;
}

group_spec classical_or_type(const std::string& token) {
  group_spec g;
  std::uint64_t num = 0;
  auto tail_num = [&](std::size_t prefix) {
    return parse_uint(token.substr(prefix), num);
  };
  if (token == "SL2") {
    g.family = group_family::sl2;
    g.type = lie_type::A;
    g.rank = 1;
    g.display = "SL2";
    return g;
  }
  if (token == "PGL2") {
    g.family = group_family::pgl2;
    g.type = lie_type::A;
    g.rank = 1;
    g.display = "PGL2";
    return g;
  }
  if (token.rfind("SL", 0) == 0 && tail_num(2)) {
    if (num < 3) fail(errc::unknown_family, "use SL2 for the rank-one special linear group");
    g.family = group_family::simply_connected;
    g.type = lie_type::A;
    g.rank = static_cast<std::uint32_t>(num - 1);
    g.display = "SL(" + std::to_string(num) + ")";
    return g;
  }
  if (token.rfind("PGL", 0) == 0 && tail_num(3)) {
    if (num < 3) fail(errc::unknown_family, "use PGL2 for the rank-one adjoint group");
    g.family = group_family::adjoint;
    g.type = lie_type::A;
    g.rank = static_cast<std::uint32_t>(num - 1);
    g.display = "PGL(" + std::to_string(num) + ")";
    return g;
  }
  if (token.rfind("SO", 0) == 0 && tail_num(2)) {
    if (num < 5 || num == 4)
      fail(errc::unknown_family, "SO(n) needs n >= 5 (lower n is not simple of rank >= 2)");
    g.family = group_family::special_orthogonal;
    g.type = (num % 2) ? lie_type::B : lie_type::D;
    g.rank = static_cast<std::uint32_t>(num / 2);
    g.display = "SO(" + std::to_string(num) + ")";
    return g;
  }
  if (token.rfind("Sp", 0) == 0 && tail_num(2)) {
    if (num < 4 || num % 2) fail(errc::unknown_family, "Sp(2n) needs an even argument >= 4");
    g.family = group_family::symplectic;
    g.type = lie_type::C;
    g.rank = static_cast<std::uint32_t>(num / 2);
    g.display = "Sp(" + std::to_string(num) + ")";
    return g;
  }
  // Bare Dynkin designations: A4, B3, C2, D5, E6, E7, E8, F4, G2.
  if (token.size() >= 2 && tail_num(1)) {
    const char t = token[0];
    g.family = group_family::simply_connected;
    g.rank = static_cast<std::uint32_t>(num);
    g.display = token;
    switch (t) {
      case 'A':
        if (num < 2) fail(errc::unknown_family, "A1: use SL2 or PGL2");
        g.type = lie_type::A;
        return g;
      case 'B':
        if (num < 2) fail(errc::unknown_family, "B needs rank >= 2");
        g.type = lie_type::B;
        return g;
      case 'C':
        if (num < 2) fail(errc::unknown_family, "C needs rank >= 2");
        g.type = lie_type::C;
        return g;
      case 'D':
        if (num < 3) fail(errc::unknown_family, "D needs rank >= 3");
        g.type = lie_type::D;
        return g;
      case 'E':
        if (num < 6 || num > 8) fail(errc::unknown_family, "E needs rank 6, 7 or 8");
        g.type = num == 6 ? lie_type::E6 : (num == 7 ? lie_type::E7 : lie_type::E8);
        return g;
      case 'F':
        if (num != 4) fail(errc::unknown_family, "F needs rank 4");
        g.type = lie_type::F4;
        return g;
      case 'G':
        if (num != 2) fail(errc::unknown_family, "G needs rank 2");
        g.type = lie_type::G2;
        return g;
      default:
        break;
    }
  }
  fail(errc::unknown_family, "unrecognized group '" + token + "'");
}

}  // namespace

group_spec parse_group(const std::string& name, std::uint32_t rank_flag) {
  if (name.rfind("adjoint-", 0) == 0) {
    group_spec g = classical_or_type(name.substr(8));
    if (g.family != group_family::simply_connected)
      fail(errc::unknown_family, "adjoint- prefix applies to bare Dynkin designations");
    g.family = group_family::adjoint;
    g.display = "adjoint-" + g.display;
    if (rank_flag && rank_flag != g.rank) fail(errc::parse_error, "conflicting rank");
    return g;
  }
  if (name == "GL" || (name.rfind("GL", 0) == 0 && name.size() > 2)) {
    std::uint64_t num = 0;
    if (name == "GL") {
      if (rank_flag < 1) fail(errc::index_out_of_range, "GL needs a rank of at least 1");
      num = rank_flag;
    } else {
      if (!parse_uint(name.substr(2), num) || num < 1)
        fail(errc::unknown_family, "unrecognized group '" + name + "'");
      if (rank_flag && rank_flag != num) fail(errc::parse_error, "conflicting rank");
    }
    group_spec g;
    g.family = group_family::gl;
    g.type = lie_type::A;
    g.rank = static_cast<std::uint32_t>(num);
    g.display = "GL(" + std::to_string(num) + ")";
    return g;
  }
  group_spec g = classical_or_type(name);
  if (rank_flag && rank_flag != g.rank) fail(errc::parse_error, "conflicting rank");
  return g;
}

namespace {

struct partial {
  citation cite;
  std::optional<std::uint64_t> lower, upper, exact;
};

void merge(prediction& out, const std::vector<partial>& parts) {
  std::optional<std::uint64_t> lo, hi, ex;
  for (const partial& p : parts) {
    out.citations.push_back(p.cite);
    auto raise = [&](std::uint64_t v) {
      if (!lo || v > *lo) lo = v;
    };
    auto drop = [&](std::uint64_t v) {
      if (!hi || v < *hi) hi = v;
    };
    if (p.lower) raise(*p.lower);
    if (p.upper) drop(*p.upper);
    if (p.exact) {
      if (ex && *ex != *p.exact) fail(errc::internal, "contradictory exact rules");
      ex = *p.exact;
      raise(*p.exact);
      drop(*p.exact);
    }
  }
  if (lo && hi && *lo > *hi) fail(errc::internal, "contradictory rule bounds");
  if (!ex && lo && hi && *lo == *hi) ex = *lo;
  out.lower = lo;
  out.upper = hi;
  out.exact = ex;
  out.applicable = !parts.empty();
}

std::string nums(std::uint64_t v) { return std::to_string(v); }

}  // namespace

prediction predict(const extension_profile& pr, const group_spec& g) {
  validate(pr);
  prediction out;
  const std::uint64_t l = pr.length();
  if (l == 0) {
    out.applicable = true;
    out.exact = out.lower = out.upper = 0;
    out.citations.push_back(
        {"trivial-extension", "a trivial extension has trivial unipotent kernel, so the exponent is 0"});
    return out;
  }
  const std::uint64_t e = pr.exponents[0];
  const std::uint64_t r = g.rank;
  std::vector<partial> parts;

  auto rank_one_trio = [&]() {
    partial pt;
    pt.cite = {"rank-one-trio",
               "for GL2, PGL2 and (p odd) SL2 the exponent is e for a simple extension and e+1 otherwise"};
    pt.exact = (l == 1) ? e : e + 1;
    parts.push_back(pt);
  };

  switch (g.family) {
    case group_family::gl: {
      if (r == 1) {
        partial pt;
        pt.cite = {"gl-rank-one",
                   "the p^e-power map sends the rank-one restriction into its base form, giving exponent e"};
        pt.exact = e;
        parts.push_back(pt);
      }
      if (r >= 2 && r <= pr.p) {
        partial pt;
        pt.cite = {"gl-rank-le-p",
                   "for 2 <= r <= p the exponent is e for a simple extension and e+1 otherwise"};
        pt.exact = (l == 1) ? e : e + 1;
        parts.push_back(pt);
      }
      if (r == 2) rank_one_trio();
      {
        partial pt;
        pt.cite = {"gl-ch-bound",
                   "p^s >= r*p^e forces M^(p^s) = 0, so the exponent is at most e + ceil(log_p r)"};
        pt.upper = e + ceil_log(pr.p, r);
        parts.push_back(pt);
      }
      {
        partial pt;
        pt.cite = {"gl-m-bound",
                   "entries of M^(p^t) are degree-p^t forms in ideal elements, so p^t >= m forces zero"};
        pt.upper = big_e_m(pr);
        parts.push_back(pt);
      }
      {
        partial pt;
        pt.cite = {"gl-borel-lower",
                   "the pseudo-Borel intersection attains E(r) = min(ceil(log_p m), ceil(log_p m_r)) exactly"};
        pt.lower = e_of(pr, r);
        parts.push_back(pt);
      }
      if (exactness_condition(pr, r)) {
        partial pt;
        pt.cite = {"gl-exact-case",
                   "when sum_{i>r}(p^e_i - 1) < r-1 the exponent equals E(r) = ceil(log_p m)"};
        pt.exact = big_e_m(pr);
        parts.push_back(pt);
      }
      break;
    }
    case group_family::sl2: {
      if (pr.p == 2) {
        partial pt;
        pt.cite = {"sl2-char-two",
                   "in characteristic 2 the SL2 exponent is e+1 exactly when e_1 = e_2, else e"};
        pt.exact = (l >= 2 && pr.exponents[1] == e) ? e + 1 : e;
        parts.push_back(pt);
      } else {
        rank_one_trio();
      }
      break;
    }
    case group_family::pgl2: {
      rank_one_trio();
      break;
    }
    case group_family::simply_connected:
    case group_family::adjoint:
    case group_family::special_orthogonal:
    case group_family::symplectic: {
      const bool bcdf = g.type == lie_type::B || g.type == lie_type::C || g.type == lie_type::D ||
                        g.type == lie_type::F4;
      const bool standard_form = g.family == group_family::special_orthogonal ||
                                 g.family == group_family::symplectic;
      if (bcdf && pr.p == 2 && !standard_form) {
        out.reason =
            "types B, C, D and F4 in characteristic 2 are covered only for the SO and Sp forms";
        return out;
      }
      if (g.type == lie_type::E6 && pr.p == 3) {
        out.reason = "type E6 in characteristic 3 is not covered";
        return out;
      }
      {
        partial pt;
        pt.cite = {"simple-borel-lower",
                   "a simple group of rank r >= 2 contains a (possibly skewed) GL_r, so the exponent is at least E(r)"};
        pt.lower = e_of(pr, r);
        parts.push_back(pt);
      }
      if (exactness_condition(pr, r)) {
        partial pt;
        pt.cite = {"simple-exact-case",
                   "when sum_{i>r}(p^e_i - 1) < r-1 the exponent equals E(r) = ceil(log_p m)"};
        pt.exact = big_e_m(pr);
        parts.push_back(pt);
      }
      break;
    }
  }
  merge(out, parts);
  if (!out.applicable && out.reason.empty()) out.reason = "no rule covers this configuration";
  return out;
}

cross_check_result cross_validate(const extension_profile& pr, std::uint32_t rank,
                                  const witness_report& w, const sample_stats& stats) {
  cross_check_result res;
  auto note = [&](const std::string& s) {
    res.pass = false;
    res.notes.push_back(s);
  };
  group_spec g;
  g.family = group_family::gl;
  g.rank = rank;
  g.display = "GL(" + nums(rank) + ")";
  const prediction pred = predict(pr, g);
  if (!pred.applicable) {
    note("prediction unexpectedly inapplicable: " + pred.reason);
    return res;
  }
  if (!pred.lower || !pred.upper) {
    note("GL prediction must carry both bounds");
    return res;
  }
  if (w.verified_exponent != *pred.lower)
    note("witness exponent " + nums(w.verified_exponent) + " != predicted lower bound " +
         nums(*pred.lower));
  if (w.verified_exponent > *pred.upper)
    note("witness exponent " + nums(w.verified_exponent) + " exceeds upper bound " +
         nums(*pred.upper));
  if (stats.max_exponent > *pred.upper)
    note("sampled exponent " + nums(stats.max_exponent) + " exceeds upper bound " +
         nums(*pred.upper));
  if (pred.exact) {
    if (w.verified_exponent > *pred.exact)
      note("witness exponent exceeds the exact prediction");
    if (stats.max_exponent > *pred.exact) note("sampled exponent exceeds the exact prediction");
    if (exactness_condition(pr, rank) && w.verified_exponent != *pred.exact)
      note("exact case witness must attain the predicted exponent");
  }
  return res;
}

}  // namespace insep
