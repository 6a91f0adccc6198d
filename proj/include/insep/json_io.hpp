#pragma once

#include <json.hpp>

#include "insep/matrix.hpp"
#include "insep/predict.hpp"
#include "insep/profile.hpp"
#include "insep/ring.hpp"
#include "insep/sl2.hpp"
#include "insep/witness.hpp"

namespace insep {

using nlohmann::json;

// profile: {"p": 2, "exponents": [2,1], "relations": [{"i": 2, "terms": [[c, [nu...]], ...]}]}
json profile_to_json(const extension_profile& pr);
extension_profile profile_from_json(const json& j);

// element: [[coeff, [nu_1, ..., nu_l]], ...], terms sorted by packed monomial index.
json element_to_json(const element& x);
element element_from_json(const ring_ptr& r, const json& j);

// matrix: {"size": n, "entries": [[element, ...], ...]} row-major.
json matrix_to_json(const matrix& m);
matrix matrix_from_json(const ring_ptr& r, const json& j);

json witness_to_json(const witness_report& w);
json prediction_to_json(const prediction& p);
json sl2_witness_to_json(const sl2_witness_report& w);
json sl2_check_to_json(const sl2_check_result& c);

}  // namespace insep
