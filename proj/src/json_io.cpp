#include "insep/json_io.hpp"

#include "insep/errors.hpp"

namespace insep {

namespace {

std::uint64_t get_u64(const json& j, const char* what) {
  if (!j.is_number_unsigned()) fail(errc::parse_error, std::string(what) + " must be a non-negative integer");
  return j.get<std::uint64_t>();
}

}  // namespace

json profile_to_json(const extension_profile& pr) {
  json j;
  j["p"] = pr.p;
  j["exponents"] = pr.exponents;
  json rels = json::array();
  for (const generator_relation& rel : pr.relations) {
    json terms = json::array();
    for (const relation_term& t : rel.terms) terms.push_back(json::array({t.coeff, t.nu}));
    rels.push_back({{"i", rel.index}, {"terms", terms}});
  }
  j["relations"] = rels;
  return j;
}

extension_profile profile_from_json(const json& j) {
  if (!j.is_object()) fail(errc::parse_error, "profile must be a JSON object");
  extension_profile pr;
  if (!j.contains("p")) fail(errc::parse_error, "profile needs a field 'p'");
  pr.p = get_u64(j.at("p"), "p");
  if (!j.contains("exponents") || !j.at("exponents").is_array())
    fail(errc::parse_error, "profile needs an array 'exponents'");
  for (const json& e : j.at("exponents"))
    pr.exponents.push_back(static_cast<std::uint32_t>(get_u64(e, "exponent")));
  if (j.contains("relations")) {
    if (!j.at("relations").is_array()) fail(errc::parse_error, "'relations' must be an array");
    for (const json& rj : j.at("relations")) {
      generator_relation rel;
      rel.index = static_cast<std::uint32_t>(get_u64(rj.at("i"), "relation index"));
      if (!rj.contains("terms") || !rj.at("terms").is_array())
        fail(errc::parse_error, "relation needs an array 'terms'");
      for (const json& tj : rj.at("terms")) {
        if (!tj.is_array() || tj.size() != 2 || !tj.at(1).is_array())
          fail(errc::parse_error, "relation term must be [coeff, [nu...]]");
        relation_term t;
        t.coeff = get_u64(tj.at(0), "coefficient");
        for (const json& n : tj.at(1)) t.nu.push_back(get_u64(n, "exponent"));
        rel.terms.push_back(std::move(t));
      }
      pr.relations.push_back(std::move(rel));
    }
  }
  validate(pr);
  return pr;
}

json element_to_json(const element& x) {
  if (!x.owner()) fail(errc::internal, "element has no ring");
  const ring_ptr& r = x.owner();
  json out = json::array();
  for (const term& t : x.terms()) {
    const std::uint16_t* d = r->digits(t.mono);
    std::vector<std::uint64_t> nu(r->length());
    for (std::uint32_t g = 0; g < r->length(); ++g) nu[g] = d[g];
    out.push_back(json::array({t.coeff, nu}));
  }
  return out;
}

element element_from_json(const ring_ptr& r, const json& j) {
  if (!r) fail(errc::internal, "null ring");
  if (!j.is_array()) fail(errc::parse_error, "element must be an array of terms");
  std::vector<raw_term> raw;
  for (const json& tj : j) {
    if (!tj.is_array() || tj.size() != 2 || !tj.at(1).is_array())
      fail(errc::parse_error, "element term must be [coeff, [nu...]]");
    raw_term t;
    t.coeff = get_u64(tj.at(0), "coefficient");
    for (const json& n : tj.at(1)) t.nu.push_back(get_u64(n, "exponent"));
    if (t.nu.size() != r->length()) fail(errc::parse_error, "term exponent vector has wrong length");
    raw.push_back(std::move(t));
  }
  return r->from_raw(raw);
}

json matrix_to_json(const matrix& m) {
  json rows = json::array();
  for (std::uint32_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::uint32_t j = 0; j < m.size(); ++j) row.push_back(element_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return json{{"size", m.size()}, {"entries", rows}};
}

matrix matrix_from_json(const ring_ptr& r, const json& j) {
  if (!j.is_object() || !j.contains("size") || !j.contains("entries"))
    fail(errc::parse_error, "matrix must be {\"size\": n, \"entries\": [[...]]}");
  const std::uint32_t n = static_cast<std::uint32_t>(get_u64(j.at("size"), "size"));
  const json& rows = j.at("entries");
  if (!rows.is_array() || rows.size() != n) fail(errc::parse_error, "matrix rows disagree with size");
  matrix m(r, n);
  for (std::uint32_t i = 0; i < n; ++i) {
    const json& row = rows.at(i);
    if (!row.is_array() || row.size() != n)
      fail(errc::parse_error, "matrix row length disagrees with size");
    for (std::uint32_t c = 0; c < n; ++c) m.at(i, c) = element_from_json(r, row.at(c));
  }
  return m;
}

json witness_to_json(const witness_report& w) {
  json j;
  j["case"] = to_string(w.kind);
  j["q"] = w.q ? json(*w.q) : json(nullptr);
  j["tau"] = w.tau ? json(*w.tau) : json(nullptr);
  j["claimed_power"] = w.claimed_power;
  j["verified_exponent"] = w.verified_exponent;
  j["matrix"] = matrix_to_json(w.mat);
  return j;
}

json prediction_to_json(const prediction& p) {
  json j;
  j["applicable"] = p.applicable;
  j["reason"] = p.reason;
  j["lower"] = p.lower ? json(*p.lower) : json(nullptr);
  j["upper"] = p.upper ? json(*p.upper) : json(nullptr);
  j["exact"] = p.exact ? json(*p.exact) : json(nullptr);
  json cites = json::array();
  for (const citation& c : p.citations) cites.push_back({{"rule", c.rule}, {"quote", c.quote}});
  j["citations"] = cites;
  return j;
}

json sl2_witness_to_json(const sl2_witness_report& w) {
  json j;
  j["matrix"] = matrix_to_json(w.mat);
  j["exponent"] = w.exponent;
  j["expected"] = w.expected;
  j["nonzero_at_e"] = w.nonzero_at_e;
  j["pass"] = w.pass;
  return j;
}

json sl2_check_to_json(const sl2_check_result& c) {
  json j;
  j["trials"] = c.trials;
  j["exhaustive"] = c.exhaustive;
  j["max_exponent"] = c.max_exponent;
  j["expected"] = c.expected;
  j["violations"] = c.violations;
  j["attained"] = c.attained;
  return j;
}

}  // namespace insep
