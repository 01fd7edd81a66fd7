#pragma once

#include "formk1/matrix.hpp"

namespace formk1 {

/// epsilon(b) = b_0 + b_1 X + b_2 X^2 + ..., each b_i the degree-i
/// component as an element of the graded ring.
Elem epsilon(const GradedRing& g, const PolynomialRing& poly, const Elem& b);

/// b+(a) = epsilon(b)(a) = sum b_i a^i. Throws DegreeError unless `a` is
/// homogeneous of degree 0.
Elem plus_eval(const GradedRing& g, const Elem& b, const Elem& a);
/// Entrywise b+(a). Maps GQ into GQ when `a` is fixed by the involution.
Matrix plus_eval_matrix(const GradedRing& g, const Matrix& alpha, const Elem& a);

/// Entrywise degree-0 component.
Matrix degree0_part(const GradedRing& g, const Matrix& alpha);
/// alpha = I mod R_+, i.e. degree0_part(alpha) = I.
bool graded_congruence(const GradedRing& g, const Matrix& alpha);

}  // namespace formk1
