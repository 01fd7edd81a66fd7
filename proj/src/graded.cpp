#include "formk1/graded.hpp"

namespace formk1 {

Elem epsilon(const GradedRing& g, const PolynomialRing& poly, const Elem& b) {
  if (poly.base().get() != &g) fail(ErrorKind::BadParameter, "polynomial ring is not over this graded ring");
  std::vector<Elem> cs;
  for (std::size_t k = 0; k <= g.top_degree(); ++k) cs.push_back(g.component(b, k));
  return poly.from_coeffs(std::move(cs));
}

Elem plus_eval(const GradedRing& g, const Elem& b, const Elem& a) {
  if (!g.is_homogeneous(a, 0))
    fail(ErrorKind::DegreeError, "evaluation point " + g.format(a) + " is not of degree 0");
  // Horner on the components.
  Elem acc = g.zero();
  for (std::size_t k = g.top_degree() + 1; k-- > 0;) acc = g.add(g.mul(acc, a), g.component(b, k));
  return acc;
}

Matrix plus_eval_matrix(const GradedRing& g, const Matrix& alpha, const Elem& a) {
  return map_entries(alpha, [&](const Elem& x) { return plus_eval(g, x, a); });
}

Matrix degree0_part(const GradedRing& g, const Matrix& alpha) {
  return map_entries(alpha, [&](const Elem& x) { return g.component(x, 0); });
}

bool graded_congruence(const GradedRing& g, const Matrix& alpha) {
  return is_identity(g, degree0_part(g, alpha));
}

}  // namespace formk1
