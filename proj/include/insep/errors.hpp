#pragma once

#include <stdexcept>
#include <string>

namespace insep {

// Error categories; the CLI maps validation/usage errors to exit code 2 and
// failed internal verification (e.g. a vanished witness) to exit code 3.
enum class errc {
  non_prime_characteristic,
  non_monotone_exponents,
  malformed_relation,
  profile_too_large,
  profile_mismatch,
  parse_error,
  index_out_of_range,
  size_mismatch,
  not_a_unit,
  not_nilpotent,
  not_in_ideal,
  not_upper_triangular,
  trivial_extension,
  too_few_generators,
  wrong_characteristic,
  exponent_exceeds_bound,
  witness_vanished,
  unknown_family,
  internal,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

  // True for errors caused by bad input rather than a failed verification.
  bool is_usage() const noexcept {
    switch (code_) {
      case errc::witness_vanished:
      case errc::exponent_exceeds_bound:
      case errc::internal:
        return false;
      default:
        return true;
    }
  }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace insep
