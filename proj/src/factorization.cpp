#include "formk1/factorization.hpp"

namespace formk1 {

Elem trunc_inverse(const TruncatedRing& rt, const Elem& u) {
  const Ring& B = *rt.base();
  if (!B.inverse(rt.coeff(u, 0)))
    fail(ErrorKind::NotAUnit, "constant term " + B.format(rt.coeff(u, 0)) + " is not a unit");
  auto inv = rt.inverse(u);
  if (!inv) fail(ErrorKind::NotAUnit, rt.format(u) + " is not a unit");
  return *inv;
}

namespace {

/// Coefficients k >= shift moved down by `shift`.
Elem shift_down(const TruncatedRing& rt, const Elem& v, unsigned shift) {
  std::vector<Elem> cs;
  for (std::size_t k = shift; k <= rt.t(); ++k) cs.push_back(rt.coeff(v, k));
  return rt.from_coeffs(std::move(cs));
}

Elem one_plus_monomial(const TruncatedRing& rt, const Elem& c, unsigned power) {
  if (power > rt.t()) return rt.one();
  return rt.add(rt.one(), rt.monomial(c, power));
}

}  // namespace

std::pair<Elem, Elem> trunc_split(const TruncatedRing& rt, const Elem& p, unsigned r) {
  if (r < 1 || r > rt.t())
    fail(ErrorKind::BadParameter, "split needs 1 <= r <= t, got r=" + std::to_string(r) + ", t=" + std::to_string(rt.t()));
  Elem u = rt.add(rt.one(), rt.mul(rt.monomial(rt.base()->one(), r), p));
  Elem c = rt.coeff(p, 0);
  Elem v = rt.mul(trunc_inverse(rt, one_plus_monomial(rt, c, r)), u);
  for (unsigned k = 1; k <= r; ++k)
    if (!rt.base()->is_zero(rt.coeff(v, k)))
      fail(ErrorKind::InvariantViolated, "split left a nonzero X^" + std::to_string(k) + " coefficient");
  return {c, shift_down(rt, v, r + 1)};
}

std::vector<Elem> trunc_product_decomp(const TruncatedRing& rt, const Elem& p) {
  Elem u = rt.add(rt.one(), rt.mul(rt.monomial(rt.base()->one(), 1), p));
  std::vector<Elem> out;
  for (unsigned r = 1; r <= rt.t(); ++r) {
    Elem a = rt.coeff(u, r);
    out.push_back(a);
    u = rt.mul(trunc_inverse(rt, one_plus_monomial(rt, a, r)), u);
  }
  if (!rt.is_one(u)) fail(ErrorKind::InvariantViolated, "decomposition left remainder " + rt.format(u));
  return out;
}

Elem trunc_product(const TruncatedRing& rt, const std::vector<Elem>& a) {
  Elem acc = rt.one();
  for (std::size_t i = 0; i < a.size(); ++i) acc = rt.mul(acc, one_plus_monomial(rt, a[i], i + 1));
  return acc;
}

Elem torsion_descent(const TruncatedRing& rt, const Elem& u, const Int& k, unsigned r) {
  const Ring& B = *rt.base();
  if (!B.inverse(B.from_int(k))) fail(ErrorKind::KNotInvertible, k.str() + " is not invertible in " + B.name());
  if (r < 1 || r > rt.t()) fail(ErrorKind::BadParameter, "descent needs 1 <= r <= t");
  if (!B.is_one(rt.coeff(u, 0))) fail(ErrorKind::HypothesisFailed, "u does not have the shape 1 + X^r P");
  for (unsigned j = 1; j < r; ++j)
    if (!B.is_zero(rt.coeff(u, j))) fail(ErrorKind::HypothesisFailed, "u does not have the shape 1 + X^r P");
  if (!rt.is_one(rt.pow(u, boost::multiprecision::pow(k, r))))
    fail(ErrorKind::HypothesisFailed, "u^(k^r) is not 1");
  Elem p0 = rt.coeff(u, r);
  if (!B.is_central(p0)) fail(ErrorKind::HypothesisFailed, "P(0) is not central");
  if (!B.is_zero(p0)) fail(ErrorKind::InvariantViolated, "X^r coefficient " + B.format(p0) + " is not zero");
  return shift_down(rt, u, r + 1);
}

}  // namespace formk1
