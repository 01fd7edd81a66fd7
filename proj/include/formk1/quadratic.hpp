#pragma once

#include <array>

#include <nlohmann/json.hpp>

#include "formk1/form_parameter.hpp"
#include "formk1/matrix.hpp"

namespace formk1 {

/// psi_n = [[0, I_n], [lambda I_n, 0]].
Matrix psi(const Ring& ring, std::size_t n, const Elem& lambda);

/// sigma* psi_n sigma == psi_n. Throws DimensionMismatch unless sigma is
/// square of even size.
bool gq_member(const Ring& ring, const Elem& lambda, const Matrix& sigma);

struct QuadraticConditions {
  std::array<bool, 4> holds{};

  bool all() const { return holds[0] && holds[1] && holds[2] && holds[3]; }
  bool none() const { return !holds[0] && !holds[1] && !holds[2] && !holds[3]; }
  bool agree() const { return all() || none(); }
  nlohmann::json to_json() const;
};

/// With sigma = [[a, b], [c, d]]:
///   1. sigma in GQ, diag(a*c) and diag(b*d) in Lambda
///   2. a*d + lambda c*b = I, a*c and b*d Lambda-Hermitian
///   3. sigma in GQ, diag(ab*) and diag(cd*) in Lambda
///   4. ad* + lambda bc* = I, ab* and cd* Lambda-Hermitian
QuadraticConditions lambda_quadratic_conditions(const FormParameter& form, const Matrix& sigma);
bool is_lambda_quadratic(const FormParameter& form, const Matrix& sigma);

/// alpha = -lambda alpha* with diagonal entries in Lambda.
bool hermitian_check(const FormParameter& form, const Matrix& alpha);
/// beta = -lambda-bar beta* with diagonal entries in Lambda-bar.
bool hermitian_bar_check(const FormParameter& form, const Matrix& beta);

/// H(alpha) = diag(alpha, (alpha*)^{-1}); `alpha_inv` is verified.
Matrix hyperbolic(const Ring& ring, const Matrix& alpha, const Matrix& alpha_inv);
/// Same, computing the inverse. Throws NotInvertible.
Matrix hyperbolic(const Ring& ring, const Matrix& alpha);
/// [[I, beta], [0, I]]; throws NotHermitian unless beta is Lambda-bar-Hermitian.
Matrix t12(const FormParameter& form, const Matrix& beta);
/// [[I, 0], [gamma, I]]; throws NotHermitian unless gamma is Lambda-Hermitian.
Matrix t21(const FormParameter& form, const Matrix& gamma);

}  // namespace formk1
