#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "insep/errors.hpp"
#include "insep/json_io.hpp"
#include "insep/matrix.hpp"
#include "insep/predict.hpp"
#include "insep/profile.hpp"
#include "insep/ring.hpp"
#include "insep/sl2.hpp"
#include "insep/suite.hpp"
#include "insep/witness.hpp"

namespace {

using insep::errc;
using insep::extension_profile;
using insep::fail;
using insep::json;

struct profile_flags {
  std::uint64_t p = 0;
  std::string exponents;
  std::string relations_file;
  bool has_p = false;
  bool has_exponents = false;
};

void add_profile_flags(CLI::App* cmd, profile_flags& pf) {
  cmd->add_option("--p", pf.p, "characteristic (a prime)");
  cmd->add_option("--exponents", pf.exponents,
                  "comma-separated non-increasing exponent sequence; empty for a trivial extension");
  cmd->add_option("--relations", pf.relations_file,
                  "JSON file: either a full profile object or an array of relations");
}

std::vector<std::uint32_t> parse_uint_list(const std::string& text, const char* what) {
  std::vector<std::uint32_t> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      fail(errc::parse_error, std::string(what) + ": expected a comma-separated list of integers");
    unsigned long long v = std::stoull(tok);
    if (v > 62) fail(errc::parse_error, std::string(what) + ": entry too large");
    out.push_back(static_cast<std::uint32_t>(v));
  }
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(errc::parse_error, "invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

bool profile_given(const CLI::App* cmd) {
  return cmd->count("--p") || cmd->count("--exponents") || cmd->count("--relations");
}

extension_profile build_profile(const CLI::App* cmd, profile_flags& pf) {
  pf.has_p = cmd->count("--p") > 0;
  pf.has_exponents = cmd->count("--exponents") > 0;
  extension_profile pr;
  if (!pf.relations_file.empty()) {
    const json j = read_json_file(pf.relations_file);
    if (j.is_object() && j.contains("p")) {
      pr = insep::profile_from_json(j);
      if (pf.has_p && pr.p != pf.p)
        fail(errc::parse_error, "--p disagrees with the profile file");
      if (pf.has_exponents &&
          pr.exponents != parse_uint_list(pf.exponents, "--exponents"))
        fail(errc::parse_error, "--exponents disagrees with the profile file");
      return pr;
    }
    if (!j.is_array()) fail(errc::parse_error, "relations file must be a profile object or an array");
    if (!pf.has_p) fail(errc::parse_error, "a relations array needs --p and --exponents");
    json full;
    full["p"] = pf.p;
    full["exponents"] = parse_uint_list(pf.exponents, "--exponents");
    full["relations"] = j;
    return insep::profile_from_json(full);
  }
  if (!pf.has_p) fail(errc::parse_error, "missing --p");
  pr.p = pf.p;
  pr.exponents = parse_uint_list(pf.exponents, "--exponents");
  insep::validate(pr);
  return pr;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) fail(errc::parse_error, "cannot write file: " + out_path);
  out << text;
}

std::string render_matrix(const insep::matrix& m) {
  std::string s;
  for (std::uint32_t i = 0; i < m.size(); ++i) {
    s += "  [ ";
    for (std::uint32_t j = 0; j < m.size(); ++j) {
      if (j) s += " | ";
      s += m.owner()->to_string(m.at(i, j));
    }
    s += " ]\n";
  }
  return s;
}

int cmd_invariants(const CLI::App* cmd, profile_flags& pf, const std::string& ranks_text,
                   bool as_json, const std::string& out_path) {
  const extension_profile pr = build_profile(cmd, pf);
  std::vector<std::uint32_t> ranks = parse_uint_list(ranks_text, "--ranks");
  if (ranks.empty()) ranks = {1, 2, 3, 4};
  for (std::uint32_t r : ranks)
    if (r < 1) fail(errc::index_out_of_range, "ranks must be positive");
  const std::uint64_t m = insep::m_invariant(pr);
  const std::uint64_t em = insep::big_e_m(pr);
  const std::uint64_t e1 = pr.length() ? pr.exponents[0] : 0;
  if (as_json) {
    json j;
    j["profile"] = insep::profile_to_json(pr);
    j["m"] = m;
    j["e"] = e1;
    j["big_e_m"] = em;
    json rows = json::array();
    for (std::uint32_t r : ranks)
      rows.push_back({{"r", r},
                      {"m_r", insep::m_r_invariant(pr, r)},
                      {"little_e_mr", insep::little_e_mr(pr, r)},
                      {"e_of", insep::e_of(pr, r)},
                      {"exact_case", insep::exactness_condition(pr, r)}});
    j["ranks"] = rows;
    emit(j.dump(2) + "\n", out_path);
    return 0;
  }
  std::string s;
  s += "p=" + std::to_string(pr.p) + " exponents=(";
  for (std::size_t i = 0; i < pr.exponents.size(); ++i)
    s += (i ? "," : "") + std::to_string(pr.exponents[i]);
  s += std::string(")") + (pr.modular() ? "" : " with relations") + "\n";
  s += "m=" + std::to_string(m) + " e=" + std::to_string(e1) + " E_m=" + std::to_string(em) + "\n";
  for (std::uint32_t r : ranks) {
    s += "r=" + std::to_string(r) + ": m_r=" + std::to_string(insep::m_r_invariant(pr, r)) +
         " e_mr=" + std::to_string(insep::little_e_mr(pr, r)) +
         " E=" + std::to_string(insep::e_of(pr, r)) +
         " exact_case=" + (insep::exactness_condition(pr, r) ? "yes" : "no") + "\n";
  }
  emit(s, out_path);
  return 0;
}

int cmd_witness(const CLI::App* cmd, profile_flags& pf, std::uint64_t rank, bool as_json,
                const std::string& out_path) {
  const extension_profile pr = build_profile(cmd, pf);
  if (rank < 1) fail(errc::index_out_of_range, "rank must be at least 1");
  if (!pr.modular()) fail(errc::malformed_relation, "witness construction needs a modular profile");
  const insep::ring_ptr r = insep::ring::make(pr);
  const insep::witness_report w = insep::borel_witness(r, static_cast<std::uint32_t>(rank));
  std::string diag;
  const bool ok = insep::verify_witness(w, &diag);
  if (as_json) {
    json j = insep::witness_to_json(w);
    j["verified"] = ok;
    if (!ok) j["diagnosis"] = diag;
    emit(j.dump(2) + "\n", out_path);
  } else {
    std::string s;
    s += std::string("case: ") + insep::to_string(w.kind) + "\n";
    if (w.q) s += "q: " + std::to_string(*w.q) + "\n";
    if (w.tau) s += "tau: " + std::to_string(*w.tau) + "\n";
    s += "claimed_power: " + std::to_string(w.claimed_power) + "\n";
    s += "verified_exponent: " + std::to_string(w.verified_exponent) + "\n";
    s += "matrix:\n" + render_matrix(w.mat);
    s += std::string("verified: ") + (ok ? "yes" : "no") + "\n";
    if (!ok) s += "diagnosis: " + diag + "\n";
    emit(s, out_path);
  }
  return ok ? 0 : 1;
}

int cmd_verify(const CLI::App* cmd, profile_flags& pf, const std::string& ranks_text,
               std::uint64_t trials, std::uint64_t seed, bool exhaustive, bool negate,
               bool as_json, const std::string& out_path) {
  insep::suite_config cfg;
  if (profile_given(cmd)) {
    cfg.profiles.push_back(build_profile(cmd, pf));
  } else {
    cfg.profiles = insep::modular_grid({2, 3}, 1u << 8);
  }
  std::vector<std::uint32_t> ranks = parse_uint_list(ranks_text, "--ranks");
  if (!ranks.empty()) cfg.ranks = ranks;
  for (std::uint32_t r : cfg.ranks)
    if (r < 1) fail(errc::index_out_of_range, "ranks must be positive");
  if (trials < 1) fail(errc::parse_error, "--trials must be at least 1");
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.exhaustive = exhaustive;
  cfg.negate = negate;
  const insep::suite_report rep = insep::run_suite(cfg);
  if (as_json) {
    emit(insep::suite_report_to_json(rep).dump(2) + "\n", out_path);
  } else {
    std::string s;
    for (const insep::suite_item& it : rep.items) {
      s += (it.pass ? "pass" : "FAIL") + std::string("  ") + it.property +
           " (cases=" + std::to_string(it.cases) + ", seed=" + std::to_string(it.seed) + ")";
      if (!it.pass) s += "\n      " + it.details;
      s += "\n";
    }
    s += rep.pass ? "all properties passed\n" : "PROPERTY FAILURES PRESENT\n";
    emit(s, out_path);
  }
  return rep.pass ? 0 : 1;
}

int cmd_predict(const CLI::App* cmd, profile_flags& pf, const std::string& group,
                std::uint64_t rank, bool as_json, const std::string& out_path) {
  const extension_profile pr = build_profile(cmd, pf);
  const insep::group_spec g = insep::parse_group(group, static_cast<std::uint32_t>(rank));
  const insep::prediction pred = insep::predict(pr, g);
  if (as_json) {
    json j = insep::prediction_to_json(pred);
    j["group"] = g.display;
    emit(j.dump(2) + "\n", out_path);
    return 0;
  }
  std::string s;
  s += "group: " + g.display + "\n";
  s += std::string("applicable: ") + (pred.applicable ? "yes" : "no") + "\n";
  if (!pred.applicable) {
    s += "reason: " + pred.reason + "\n";
  } else {
    if (pred.exact) s += "exact: " + std::to_string(*pred.exact) + "\n";
    if (pred.lower) s += "lower: " + std::to_string(*pred.lower) + "\n";
    if (pred.upper) s += "upper: " + std::to_string(*pred.upper) + "\n";
    for (const insep::citation& c : pred.citations)
      s += "  [" + c.rule + "] " + c.quote + "\n";
  }
  emit(s, out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations around exponents of unipotent kernels of Weil restrictions"};
  app.require_subcommand(1);

  profile_flags pf_inv, pf_wit, pf_ver, pf_pre;
  std::string ranks_inv, ranks_ver;
  std::uint64_t rank_wit = 0, rank_pre = 0;
  std::uint64_t trials = 32, seed = 0;
  bool json_inv = false, json_wit = false, json_ver = false, json_pre = false;
  bool exhaustive = false, negate = false;
  std::string out_inv, out_wit, out_ver, out_pre, group;

  CLI::App* inv = app.add_subcommand("invariants", "numerical invariants of a profile");
  add_profile_flags(inv, pf_inv);
  inv->add_option("--ranks", ranks_inv, "comma-separated ranks (default 1,2,3,4)");
  inv->add_flag("--json", json_inv, "JSON output");
  inv->add_option("--out", out_inv, "write output to a file");

  CLI::App* wit = app.add_subcommand("witness", "upper-triangular witness matrix for a rank");
  add_profile_flags(wit, pf_wit);
  wit->add_option("--rank", rank_wit, "matrix rank")->required();
  wit->add_flag("--json", json_wit, "JSON output");
  wit->add_option("--out", out_wit, "write output to a file");

  CLI::App* ver = app.add_subcommand("verify", "run the property suite");
  add_profile_flags(ver, pf_ver);
  ver->add_option("--ranks", ranks_ver, "comma-separated ranks (default 1,2,3,4)");
  ver->add_option("--trials", trials, "sampled instances per property cell");
  ver->add_option("--seed", seed, "master seed");
  ver->add_flag("--exhaustive", exhaustive, "widen the exhaustive-enumeration budget");
  ver->add_flag("--selftest-negate", negate, "fault injection: force one property to fail")
      ->group("");  // hidden
  ver->add_flag("--json", json_ver, "JSON output");
  ver->add_option("--out", out_ver, "write output to a file");

  CLI::App* pre = app.add_subcommand("predict", "exponent prediction for a group over a profile");
  add_profile_flags(pre, pf_pre);
  pre->add_option("--group", group, "GL | SL2 | PGL2 | SL<n> | PGL<n> | SO<n> | Sp<2n> | A..G<r> | adjoint-<type><r>")
      ->required();
  pre->add_option("--rank", rank_pre, "rank for GL");
  pre->add_flag("--json", json_pre, "JSON output");
  pre->add_option("--out", out_pre, "write output to a file");

  try {
    app.parse(argc, argv);
    if (inv->parsed()) return cmd_invariants(inv, pf_inv, ranks_inv, json_inv, out_inv);
    if (wit->parsed()) return cmd_witness(wit, pf_wit, rank_wit, json_wit, out_wit);
    if (ver->parsed())
      return cmd_verify(ver, pf_ver, ranks_ver, trials, seed, exhaustive, negate, json_ver,
                        out_ver);
    if (pre->parsed()) return cmd_predict(pre, pf_pre, group, rank_pre, json_pre, out_pre);
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const insep::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.is_usage() ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
