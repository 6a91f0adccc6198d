#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "insep/profile.hpp"

namespace insep {

struct suite_config {
  std::vector<extension_profile> profiles;
  std::vector<std::uint32_t> ranks{1, 2, 3, 4};
  std::uint64_t trials = 32;
  std::uint64_t seed = 0;
  bool exhaustive = false;  // widen the exhaustive-enumeration budget
  bool negate = false;      // fault injection used by the harness self-test
};

struct suite_item {
  std::string property;
  bool pass = true;
  std::uint64_t cases = 0;
  std::uint64_t seed = 0;
  std::string details;  // first failure, empty when passing
};

struct suite_report {
  suite_config config;
  std::vector<suite_item> items;
  bool pass = true;
};

// All modular profiles over the given characteristics with dimension <= dim_cap,
// each characteristic contributing its non-increasing exponent sequences
// (including the empty one) in a fixed deterministic order.
std::vector<extension_profile> modular_grid(const std::vector<std::uint64_t>& ps,
                                            std::uint64_t dim_cap);

suite_report run_suite(const suite_config& cfg);

nlohmann::json suite_report_to_json(const suite_report& rep);

}  // namespace insep
