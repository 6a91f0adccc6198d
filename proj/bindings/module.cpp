#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "insep/json_io.hpp"
#include "insep/matrix.hpp"
#include "insep/predict.hpp"
#include "insep/profile.hpp"
#include "insep/ring.hpp"
#include "insep/sl2.hpp"
#include "insep/suite.hpp"
#include "insep/witness.hpp"

namespace py = pybind11;
using namespace insep;

namespace {

extension_profile make_profile(std::uint64_t p, const std::vector<std::uint32_t>& exponents,
                               const std::string& relations_json) {
  json j;
  j["p"] = p;
  j["exponents"] = exponents;
  j["relations"] = relations_json.empty() ? json::array() : json::parse(relations_json);
  return profile_from_json(j);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact arithmetic for exponents of unipotent kernels of Weil restrictions";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const error& e) {
      if (e.is_usage())
        PyErr_SetString(PyExc_ValueError, e.what());
      else
        PyErr_SetString(PyExc_RuntimeError, e.what());
    }
  });

  py::class_<extension_profile>(m, "Profile")
      .def(py::init(&make_profile), py::arg("p"), py::arg("exponents"),
           py::arg("relations_json") = std::string())
      .def_readonly("p", &extension_profile::p)
      .def_readonly("exponents", &extension_profile::exponents)
      .def_property_readonly("modular", &extension_profile::modular)
      .def_property_readonly("length", &extension_profile::length)
      .def("m", [](const extension_profile& pr) { return m_invariant(pr); })
      .def("m_r", [](const extension_profile& pr, std::uint64_t r) { return m_r_invariant(pr, r); })
      .def("big_e_m", [](const extension_profile& pr) { return big_e_m(pr); })
      .def("little_e_mr",
           [](const extension_profile& pr, std::uint64_t r) { return little_e_mr(pr, r); })
      .def("e_of", [](const extension_profile& pr, std::uint64_t r) { return e_of(pr, r); })
      .def("exactness_condition",
           [](const extension_profile& pr, std::uint64_t r) { return exactness_condition(pr, r); })
      .def("to_json", [](const extension_profile& pr) { return profile_to_json(pr).dump(); })
      .def("__repr__", [](const extension_profile& pr) { return profile_to_json(pr).dump(); });

  py::class_<element>(m, "Element")
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def("__neg__", [](const element& a) { return -a; })
      .def("__pow__", [](const element& a, std::uint64_t n) { return pow(a, n); })
      .def_property_readonly("is_zero", &element::is_zero)
      .def_property_readonly("is_unit", &element::is_unit)
      .def_property_readonly("in_ideal", &element::in_ideal)
      .def("frobenius_pow", [](const element& a, std::uint64_t s) { return frobenius_pow(a, s); })
      .def("invert_unit", [](const element& a) { return invert_unit(a); })
      .def("nilpotency_index", [](const element& a) { return nilpotency_index(a); })
      .def("to_json", [](const element& a) { return element_to_json(a).dump(); })
      .def("__str__", [](const element& a) { return to_string(a); })
      .def("__repr__", [](const element& a) { return to_string(a); });

  py::class_<ring, std::shared_ptr<ring>>(m, "Ring")
      .def(py::init([](const extension_profile& pr) {
             return std::const_pointer_cast<ring>(ring::make(pr));
           }),
           py::arg("profile"))
      .def_property_readonly("dim", &ring::dim)
      .def_property_readonly("p", &ring::p)
      .def_property_readonly("length", &ring::length)
      .def_property_readonly("profile", &ring::profile)
      .def("zero", &ring::zero)
      .def("one", &ring::one)
      .def("constant", &ring::constant)
      .def("generator", &ring::generator, py::arg("i"))
      .def("parse", &ring::parse)
      .def("monomial", &ring::monomial, py::arg("nu"), py::arg("coeff") = 1)
      .def("random_ideal_element", &ring::random_ideal_element, py::arg("seed"),
           py::arg("max_terms") = 4)
      .def("ideal_nilpotency_index", &ring::ideal_nilpotency_index)
      .def("subalgebra_membership", &ring::subalgebra_membership, py::arg("x"), py::arg("i"));

  py::class_<matrix>(m, "Matrix")
      .def(py::init([](const ring_ptr& r, std::uint32_t n) { return matrix(r, n); }),
           py::arg("ring"), py::arg("size"))
      .def_property_readonly("size", &matrix::size)
      .def("__getitem__",
           [](const matrix& mt, std::pair<std::uint32_t, std::uint32_t> ij) {
             return mt.at(ij.first, ij.second);
           })
      .def("__setitem__",
           [](matrix& mt, std::pair<std::uint32_t, std::uint32_t> ij, const element& x) {
             mt.at(ij.first, ij.second) = x;
           })
      .def(py::self == py::self)
      .def("__mul__", [](const matrix& a, const matrix& b) { return mat_mul(a, b); })
      .def("__add__", [](const matrix& a, const matrix& b) { return mat_add(a, b); })
      .def("pow", [](const matrix& a, std::uint64_t n) { return mat_pow(a, n); })
      .def_property_readonly("is_zero", &matrix::is_zero)
      .def_property_readonly("in_ideal", &matrix::in_ideal)
      .def_property_readonly("is_upper_triangular", &matrix::is_upper_triangular)
      .def("to_json", [](const matrix& mt) { return matrix_to_json(mt).dump(); });

  m.def("char_poly", &char_poly);
  m.def("cayley_hamilton_check", &cayley_hamilton_check);
  m.def("ch_bound_check", &ch_bound_check);
  m.def("p_power_exponent", &p_power_exponent, py::arg("m"), py::arg("s_max"));

  py::class_<witness_report>(m, "WitnessReport")
      .def_property_readonly("kind",
                             [](const witness_report& w) { return std::string(to_string(w.kind)); })
      .def_readonly("q", &witness_report::q)
      .def_readonly("tau", &witness_report::tau)
      .def_readonly("claimed_power", &witness_report::claimed_power)
      .def_readonly("verified_exponent", &witness_report::verified_exponent)
      .def_readonly("matrix", &witness_report::mat)
      .def("to_json", [](const witness_report& w) { return witness_to_json(w).dump(); });
  m.def("borel_witness", &borel_witness, py::arg("ring"), py::arg("rank"));
  m.def(
      "verify_witness",
      [](const witness_report& w) {
        std::string diag;
        const bool ok = verify_witness(w, &diag);
        return py::make_tuple(ok, diag);
      },
      "returns (ok, diagnosis)");

  py::class_<sl2_witness_report>(m, "Sl2Witness")
      .def_readonly("matrix", &sl2_witness_report::mat)
      .def_readonly("exponent", &sl2_witness_report::exponent)
      .def_readonly("expected", &sl2_witness_report::expected)
      .def_readonly("nonzero_at_e", &sl2_witness_report::nonzero_at_e)
      .def_readonly("pass_", &sl2_witness_report::pass)
      .def("to_json", [](const sl2_witness_report& w) { return sl2_witness_to_json(w).dump(); });
  py::class_<sl2_check_result>(m, "Sl2Check")
      .def_readonly("trials", &sl2_check_result::trials)
      .def_readonly("exhaustive", &sl2_check_result::exhaustive)
      .def_readonly("max_exponent", &sl2_check_result::max_exponent)
      .def_readonly("expected", &sl2_check_result::expected)
      .def_readonly("violations", &sl2_check_result::violations)
      .def_readonly("attained", &sl2_check_result::attained);
  m.def("sl2_borel_witness", &sl2_borel_witness);
  m.def("sl2_full_witness", &sl2_full_witness);
  m.def("sl2_sample_check", &sl2_sample_check, py::arg("ring"), py::arg("trials"), py::arg("seed"));
  m.def("closed_form_power_2", &closed_form_power_2, py::arg("m"), py::arg("s"));

  py::class_<prediction>(m, "Prediction")
      .def_readonly("applicable", &prediction::applicable)
      .def_readonly("reason", &prediction::reason)
      .def_readonly("lower", &prediction::lower)
      .def_readonly("upper", &prediction::upper)
      .def_readonly("exact", &prediction::exact)
      .def_property_readonly("citations",
                             [](const prediction& p) {
                               py::list out;
                               for (const citation& c : p.citations)
                                 out.append(py::make_tuple(c.rule, c.quote));
                               return out;
                             })
      .def("to_json", [](const prediction& p) { return prediction_to_json(p).dump(); });
  m.def(
      "predict",
      [](const extension_profile& pr, const std::string& group, std::uint32_t rank) {
        return predict(pr, parse_group(group, rank));
      },
      py::arg("profile"), py::arg("group"), py::arg("rank") = 0);

  m.def(
      "run_verify",
      [](const std::vector<extension_profile>& profiles, std::uint64_t trials, std::uint64_t seed) {
        suite_config cfg;
        cfg.profiles = profiles;
        cfg.trials = trials;
        cfg.seed = seed;
        const suite_report rep = run_suite(cfg);
        return py::make_tuple(rep.pass, suite_report_to_json(rep).dump());
      },
      py::arg("profiles"), py::arg("trials") = 32, py::arg("seed") = 0,
      "returns (pass, report_json)");
  m.def("modular_grid", &modular_grid, py::arg("ps"), py::arg("dim_cap"));
}
