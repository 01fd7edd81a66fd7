#pragma once

#include <optional>

#include "formk1/elementary.hpp"

namespace formk1 {

/// input * eval(certificate) = H(alpha). Certificate factors are block
/// generators (T12, T21); zero blocks are left out.
struct ReductionResult {
  Matrix alpha;
  Matrix alpha_inv;
  ElemWord certificate;
};

/// A = [[alpha, beta], [0, delta]]. Requires delta = (alpha*)^{-1} and
/// alpha^{-1} beta Lambda-bar-Hermitian (NotQuadratic otherwise).
ReductionResult reduce_upper(const FormParameter& form, const Matrix& a,
                             const std::optional<Matrix>& alpha_inv = std::nullopt);
/// B = [[alpha, 0], [gamma, delta]]. Requires delta = (alpha*)^{-1} and
/// alpha* gamma Lambda-Hermitian.
ReductionResult reduce_lower(const FormParameter& form, const Matrix& b,
                             const std::optional<Matrix>& alpha_inv = std::nullopt);
/// sigma Lambda-quadratic with invertible top-left block a: certificate
/// [T12(-a^{-1} b), T21(-a* c)].
ReductionResult reduce_invertible_corner(const FormParameter& form, const Matrix& sigma,
                                         const std::optional<Matrix>& a_inv = std::nullopt);

/// Reconstruction identity plus Lambda-quadraticity of every factor.
bool verify_reduction(const FormParameter& form, const Matrix& input, const ReductionResult& result);

}  // namespace formk1
