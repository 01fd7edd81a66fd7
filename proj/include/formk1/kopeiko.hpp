#pragma once

#include "formk1/reduction.hpp"

namespace formk1 {

/// Blocks of the representative [a; b, c]_n, all r x r over the base ring.
struct KopeikoData {
  std::size_t r = 1;
  unsigned n = 1;
  Matrix a, b, c;
};

/// 0 when valid, otherwise the index of the first failing condition:
///   1. b and ab Lambda-bar-Hermitian, ab = ba*
///   2. c and ca Lambda-Hermitian, ca = a*c
///   3. bc = a^{n+1}, cb = (a*)^{n+1}
int kopeiko_failing_condition(const FormParameter& form, const KopeikoData& d);
bool kopeiko_validate(const FormParameter& form, const KopeikoData& d);
/// Throws ConditionViolated (detail = index) when invalid.
void kopeiko_require(const FormParameter& form, const KopeikoData& d);

/// The polynomial ring and extended form parameter the representative
/// lives over.
struct PolyForm {
  std::shared_ptr<const PolynomialRing> ring;
  FormParameter form;
};
PolyForm poly_form(const FormParameter& base);

/// [[I - aX, bX], [-cX^n, sum_{k<=n} (a*)^k X^k]] over R[X].
Matrix kopeiko_matrix(const PolynomialRing& poly, const KopeikoData& d);

/// Geometric-series inverse of I - aX for nilpotent a. Throws NotNilpotent
/// if no a^N = 0 with N <= bound.
Matrix nilpotent_corner_inverse(const PolynomialRing& poly, const Matrix& a, unsigned bound = 64);

struct KopeikoReduction {
  PolyForm poly;
  Matrix matrix;
  ReductionResult result;
};

/// Validates, builds [a; b, c]_n and reduces it to H(I - aX).
KopeikoReduction kopeiko_to_hyperbolic(const FormParameter& form, const KopeikoData& d, unsigned bound = 64);

}  // namespace formk1
