#include "formk1/quadratic.hpp"

namespace formk1 {

Matrix psi(const Ring& ring, std::size_t n, const Elem& lambda) {
  Matrix m(2 * n, 2 * n, ring.zero());
  for (std::size_t i = 0; i < n; ++i) {
    m(i, n + i) = ring.one();
    m(n + i, i) = lambda;
  }
  return m;
}

namespace {

std::size_t half_rank(const Matrix& sigma) {
  if (!sigma.square() || sigma.rows() % 2 != 0 || sigma.rows() == 0)
    fail(ErrorKind::DimensionMismatch, "expected a square matrix of even size, got " + std::to_string(sigma.rows()) +
                                           "x" + std::to_string(sigma.cols()));
  return sigma.rows() / 2;
}

bool diagonal_in(const FormParameter& form, const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (!form.contains(m(i, i))) return false;
  return true;
}

}  // namespace

bool gq_member(const Ring& ring, const Elem& lambda, const Matrix& sigma) {
  std::size_t n = half_rank(sigma);
  Matrix p = psi(ring, n, lambda);
  return mat_mul(ring, mat_mul(ring, mat_star(ring, sigma), p), sigma) == p;
}

nlohmann::json QuadraticConditions::to_json() const {
  return {{"condition1", holds[0]}, {"condition2", holds[1]}, {"condition3", holds[2]},
          {"condition4", holds[3]}, {"quadratic", all()}};
}

QuadraticConditions lambda_quadratic_conditions(const FormParameter& form, const Matrix& sigma) {
  const Ring& R = *form.ring();
  std::size_t n = half_rank(sigma);
  Matrix a = block(sigma, 0, 0, n, n), b = block(sigma, 0, n, n, n);
  Matrix c = block(sigma, n, 0, n, n), d = block(sigma, n, n, n, n);
  Matrix as = mat_star(R, a), bs = mat_star(R, b), cs = mat_star(R, c), ds = mat_star(R, d);
  const Elem& lam = form.lambda();
  bool in_gq = gq_member(R, lam, sigma);

  Matrix asc = mat_mul(R, as, c), bsd = mat_mul(R, bs, d);
  Matrix abs = mat_mul(R, a, bs), cds = mat_mul(R, c, ds);

  QuadraticConditions q;
  q.holds[0] = in_gq && diagonal_in(form, asc) && diagonal_in(form, bsd);
  q.holds[1] = is_identity(R, mat_add(R, mat_mul(R, as, d), mat_scale(R, lam, mat_mul(R, cs, b)))) &&
               hermitian_check(form, asc) && hermitian_check(form, bsd);
  q.holds[2] = in_gq && diagonal_in(form, abs) && diagonal_in(form, cds);
  q.holds[3] = is_identity(R, mat_add(R, mat_mul(R, a, ds), mat_scale(R, lam, mat_mul(R, b, cs)))) &&
               hermitian_check(form, abs) && hermitian_check(form, cds);
  return q;
}

bool is_lambda_quadratic(const FormParameter& form, const Matrix& sigma) {
  return lambda_quadratic_conditions(form, sigma).holds[1];
}

bool hermitian_check(const FormParameter& form, const Matrix& alpha) {
  const Ring& R = *form.ring();
  if (!alpha.square()) return false;
  if (!(alpha == mat_neg(R, mat_scale(R, form.lambda(), mat_star(R, alpha))))) return false;
  return diagonal_in(form, alpha);
}

bool hermitian_bar_check(const FormParameter& form, const Matrix& beta) {
  return hermitian_check(form.bar(), beta);
}

Matrix hyperbolic(const Ring& ring, const Matrix& alpha, const Matrix& alpha_inv) {
  if (!is_inverse_pair(ring, alpha, alpha_inv))
    fail(ErrorKind::NotInvertible, "supplied inverse of " + format_matrix(ring, alpha) + " does not check");
  std::size_t n = alpha.rows();
  return from_blocks(alpha, zeros(ring, n, n), zeros(ring, n, n), mat_star(ring, alpha_inv));
}

Matrix hyperbolic(const Ring& ring, const Matrix& alpha) {
  auto inv = mat_inverse(ring, alpha);
  if (!inv) fail(ErrorKind::NotInvertible, format_matrix(ring, alpha) + " is not invertible");
  return hyperbolic(ring, alpha, *inv);
}

Matrix t12(const FormParameter& form, const Matrix& beta) {
  const Ring& R = *form.ring();
  if (!hermitian_bar_check(form, beta))
    fail(ErrorKind::NotHermitian, format_matrix(R, beta) + " is not Lambda-bar-Hermitian");
  std::size_t n = beta.rows();
  return from_blocks(identity(R, n), beta, zeros(R, n, n), identity(R, n));
}

Matrix t21(const FormParameter& form, const Matrix& gamma) {
  const Ring& R = *form.ring();
  if (!hermitian_check(form, gamma))
    fail(ErrorKind::NotHermitian, format_matrix(R, gamma) + " is not Lambda-Hermitian");
  std::size_t n = gamma.rows();
  return from_blocks(identity(R, n), zeros(R, n, n), gamma, identity(R, n));
}

}  // namespace formk1
