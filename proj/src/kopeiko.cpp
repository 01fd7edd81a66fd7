#include "formk1/kopeiko.hpp"

namespace formk1 {

namespace {

void check_shapes(const KopeikoData& d) {
  for (const Matrix* m : {&d.a, &d.b, &d.c})
    if (!is_square_of_dim(*m, d.r)) fail(ErrorKind::DimensionMismatch, "Kopeiko blocks must all be r x r");
  if (d.n < 1) fail(ErrorKind::BadParameter, "Kopeiko degree n must be positive");
}

Matrix lift(const PolynomialRing& poly, const Matrix& m, std::size_t power) {
  return map_entries(m, [&](const Elem& x) { return poly.monomial(x, power); });
}

}  // namespace

int kopeiko_failing_condition(const FormParameter& form, const KopeikoData& d) {
  check_shapes(d);
  const Ring& R = *form.ring();
  Matrix as = mat_star(R, d.a);
  Matrix ab = mat_mul(R, d.a, d.b), ca = mat_mul(R, d.c, d.a);
  if (!hermitian_bar_check(form, d.b) || !hermitian_bar_check(form, ab) || !(ab == mat_mul(R, d.b, as))) return 1;
  if (!hermitian_check(form, d.c) || !hermitian_check(form, ca) || !(ca == mat_mul(R, as, d.c))) return 2;
  if (!(mat_mul(R, d.b, d.c) == mat_pow(R, d.a, d.n + 1)) || !(mat_mul(R, d.c, d.b) == mat_pow(R, as, d.n + 1)))
    return 3;
  return 0;
}

bool kopeiko_validate(const FormParameter& form, const KopeikoData& d) {
  return kopeiko_failing_condition(form, d) == 0;
}

void kopeiko_require(const FormParameter& form, const KopeikoData& d) {
  int k = kopeiko_failing_condition(form, d);
  if (k != 0) fail(ErrorKind::ConditionViolated, "Kopeiko condition " + std::to_string(k) + " fails", k);
}

PolyForm poly_form(const FormParameter& base) {
  auto poly = make_polynomial(base.ring());
  return {poly, FormParameter::extend_poly(base, poly)};
}

Matrix kopeiko_matrix(const PolynomialRing& poly, const KopeikoData& d) {
  check_shapes(d);
  const Ring& R = *poly.base();
  std::size_t r = d.r;
  Matrix tl = mat_sub(poly, identity(poly, r), lift(poly, d.a, 1));
  Matrix tr = lift(poly, d.b, 1);
  Matrix bl = mat_neg(poly, lift(poly, d.c, d.n));
  Matrix br = zeros(poly, r, r);
  Matrix as = mat_star(R, d.a);
  Matrix power = identity(R, r);
  for (unsigned k = 0; k <= d.n; ++k) {
    br = mat_add(poly, br, lift(poly, power, k));
    power = mat_mul(R, power, as);
  }
  return from_blocks(tl, tr, bl, br);
}

Matrix nilpotent_corner_inverse(const PolynomialRing& poly, const Matrix& a, unsigned bound) {
  const Ring& R = *poly.base();
  std::size_t r = a.rows();
  Matrix power = identity(R, r);
  Matrix sum = zeros(poly, r, r);
  for (unsigned k = 0; k <= bound; ++k) {
    if (is_zero_matrix(R, power)) return sum;
    sum = mat_add(poly, sum, lift(poly, power, k));
    power = mat_mul(R, power, a);
  }
  fail(ErrorKind::NotNilpotent, "no power a^N vanishes for N <= " + std::to_string(bound));
}

KopeikoReduction kopeiko_to_hyperbolic(const FormParameter& form, const KopeikoData& d, unsigned bound) {
  kopeiko_require(form, d);
  PolyForm pf = poly_form(form);
  Matrix inv = nilpotent_corner_inverse(*pf.ring, d.a, bound);
  Matrix k = kopeiko_matrix(*pf.ring, d);
  ReductionResult res = reduce_invertible_corner(pf.form, k, inv);
  return {std::move(pf), std::move(k), std::move(res)};
}

}  // namespace formk1
