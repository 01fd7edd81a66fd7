#include "formk1/reduction.hpp"

namespace formk1 {

namespace {

struct Blocks {
  std::size_t n;
  Matrix a, b, c, d;
};

Blocks split(const Matrix& m) {
  if (!m.square() || m.rows() % 2 != 0 || m.rows() == 0)
    fail(ErrorKind::DimensionMismatch, "expected a square matrix of even size");
  std::size_t n = m.rows() / 2;
  return {n, block(m, 0, 0, n, n), block(m, 0, n, n, n), block(m, n, 0, n, n), block(m, n, n, n, n)};
}

Matrix resolve_inverse(const Ring& R, const Matrix& alpha, const std::optional<Matrix>& supplied) {
  if (supplied) {
    if (!is_inverse_pair(R, alpha, *supplied))
      fail(ErrorKind::NotInvertible, "supplied inverse of " + format_matrix(R, alpha) + " does not check");
    return *supplied;
  }
  auto inv = mat_inverse(R, alpha);
  if (!inv) fail(ErrorKind::NotInvertible, format_matrix(R, alpha) + " is not invertible");
  return *inv;
}

void push_block(const Ring& R, ElemWord& w, BlockGen::Kind kind, Matrix blk) {
  if (is_zero_matrix(R, blk)) return;
  BlockGen g;
  g.kind = kind;
  g.block = std::move(blk);
  w.factors.push_back(Factor{std::move(g)});
}

}  // namespace

ReductionResult reduce_upper(const FormParameter& form, const Matrix& a, const std::optional<Matrix>& alpha_inv) {
  const Ring& R = *form.ring();
  Blocks s = split(a);
  if (!is_zero_matrix(R, s.c)) fail(ErrorKind::NotQuadratic, "matrix is not upper block-triangular");
  Matrix inv = resolve_inverse(R, s.a, alpha_inv);
  if (!(s.d == mat_star(R, inv))) fail(ErrorKind::NotQuadratic, "lower-right block is not (alpha*)^{-1}");
  Matrix x = mat_mul(R, inv, s.b);
  if (!hermitian_bar_check(form, x)) fail(ErrorKind::NotQuadratic, "alpha^{-1} beta is not Lambda-bar-Hermitian");
  ReductionResult out{s.a, inv, ElemWord{s.n, {}}};
  push_block(R, out.certificate, BlockGen::Kind::T12, mat_neg(R, x));
  return out;
}

ReductionResult reduce_lower(const FormParameter& form, const Matrix& b, const std::optional<Matrix>& alpha_inv) {
  const Ring& R = *form.ring();
  Blocks s = split(b);
  if (!is_zero_matrix(R, s.b)) fail(ErrorKind::NotQuadratic, "matrix is not lower block-triangular");
  Matrix inv = resolve_inverse(R, s.a, alpha_inv);
  if (!(s.d == mat_star(R, inv))) fail(ErrorKind::NotQuadratic, "lower-right block is not (alpha*)^{-1}");
  Matrix y = mat_mul(R, mat_star(R, s.a), s.c);
  if (!hermitian_check(form, y)) fail(ErrorKind::NotQuadratic, "alpha* gamma is not Lambda-Hermitian");
  ReductionResult out{s.a, inv, ElemWord{s.n, {}}};
  push_block(R, out.certificate, BlockGen::Kind::T21, mat_neg(R, y));
  return out;
}

ReductionResult reduce_invertible_corner(const FormParameter& form, const Matrix& sigma,
                                         const std::optional<Matrix>& a_inv) {
  const Ring& R = *form.ring();
  Blocks s = split(sigma);
  Matrix inv = resolve_inverse(R, s.a, a_inv);
  if (!is_lambda_quadratic(form, sigma)) fail(ErrorKind::NotQuadratic, "matrix is not Lambda-quadratic");
  Matrix x = mat_mul(R, inv, s.b);
  if (!hermitian_bar_check(form, x)) fail(ErrorKind::NotQuadratic, "a^{-1} b is not Lambda-bar-Hermitian");
  Matrix y = mat_mul(R, mat_star(R, s.a), s.c);
  if (!hermitian_check(form, y)) fail(ErrorKind::NotQuadratic, "a* c is not Lambda-Hermitian");
  ReductionResult out{s.a, inv, ElemWord{s.n, {}}};
  push_block(R, out.certificate, BlockGen::Kind::T12, mat_neg(R, x));
  push_block(R, out.certificate, BlockGen::Kind::T21, mat_neg(R, y));
  return out;
}

bool verify_reduction(const FormParameter& form, const Matrix& input, const ReductionResult& result) {
  const Ring& R = *form.ring();
  Matrix h = hyperbolic(R, result.alpha, result.alpha_inv);
  if (!(mat_mul(R, input, word_eval(form, result.certificate)) == h)) return false;
  for (const auto& f : result.certificate.factors) {
    ElemWord single{result.certificate.n, {f}};
    if (!lambda_quadratic_conditions(form, word_eval(form, single)).all()) return false;
  }
  return true;
}

}  // namespace formk1
