#pragma once

#include <cstdint>

#include "insep/matrix.hpp"

namespace insep {

// Characteristic 2 only. Closed form for the 2^s-th power of a 2x2 matrix
// M = [[a,b],[c,d]] with t = a + d:
//   (M^(2^s))_diag = x^(2^s) + sum_{i<s} (bc)^(2^i) t^(2^s - 2^(i+1))  (x = a resp. d)
//   (M^(2^s))_off  = b t^(2^s - 1),  c t^(2^s - 1)
matrix closed_form_power_2(const matrix& m, std::uint64_t s);

struct sl2_witness_report {
  matrix mat;
  std::uint64_t exponent = 0;    // minimal s with M^(2^s) = 0
  std::uint64_t expected = 0;    // target exponent for this witness
  bool nonzero_at_e = false;     // M^(2^(e_1)) != 0
  bool pass = false;
};

// Unipotent-type element of the Borel: a = b = a_1, c = 0, d = a(1+a)^(-1).
// Its exponent is exactly e_1.
sl2_witness_report sl2_borel_witness(const ring_ptr& r);

// a = a_1 a_2, b = a_1, c = a_2, d = 0 (needs l >= 2). M^(2^(e_1)) is nonzero
// precisely when e_1 = e_2: the diagonal terms (a_1 a_2)^(2^(e_1) - 2^i) all
// survive exactly in that case; detects the +1 jump.
sl2_witness_report sl2_full_witness(const ring_ptr& r);

struct sl2_check_result {
  std::uint64_t trials = 0;
  bool exhaustive = false;
  std::uint64_t max_exponent = 0;
  std::uint64_t expected = 0;
  std::uint64_t violations = 0;  // samples exceeding the predicted exponent
  bool attained = false;         // some sample reaches the predicted exponent
};

// Determinant-one sampling check: draws a, b, c from the ideal, solves for d via
// (1+a)(1+d) + bc = 1, and confirms no unipotent element exceeds the predicted
// exponent while the witness value is attained. Exhaustive when |ideal|^3 is small.
sl2_check_result sl2_sample_check(const ring_ptr& r, std::uint64_t trials, std::uint64_t seed);

}  // namespace insep
