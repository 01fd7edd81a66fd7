#include "formk1/excision.hpp"

#include <algorithm>

namespace formk1 {

Elem fold(const ExcisionRing& ring, const Elem& x) { return ring.base()->add(ring.first(x), ring.second(x)); }

Matrix fold_matrix(const ExcisionRing& ring, const Matrix& m) {
  return map_entries(m, [&](const Elem& x) { return fold(ring, x); });
}

Matrix embed_matrix(const ExcisionRing& ring, const Matrix& m) {
  Elem z = ring.base()->zero();
  return map_entries(m, [&](const Elem& x) { return Elem::composite({x, z}); });
}

namespace {

ElemGen lift_gen(const ExcisionRing& ring, ElemGen g, bool core) {
  const Ring& B = *ring.base();
  g.a = core ? ring.make(B.zero(), g.a) : ring.make(g.a, B.zero());
  return g;
}

}  // namespace

ElemWord lift_relative_word(const ExcisionRing& ring, const ElemWord& w) {
  ElemWord out;
  out.n = w.n;
  for (const auto& f : w.factors) {
    const auto* rg = std::get_if<RelGen>(&f.value);
    if (!rg) fail(ErrorKind::MalformedWord, "only relative factors can be lifted");
    if (rg->conjugator.n != w.n) fail(ErrorKind::MalformedWord, "conjugator size differs from word size");
    std::vector<ElemGen> conj;
    for (const auto& cf : rg->conjugator.factors) {
      const auto* g = std::get_if<ElemGen>(&cf.value);
      if (!g) fail(ErrorKind::MalformedWord, "conjugators must consist of elementary generators");
      conj.push_back(lift_gen(ring, *g, false));
    }
    for (const auto& g : conj) out.factors.push_back(Factor{g});
    out.factors.push_back(Factor{lift_gen(ring, rg->core, true)});
    for (auto it = conj.rbegin(); it != conj.rend(); ++it) {
      ElemGen inv = *it;
      inv.a = ring.neg(inv.a);
      out.factors.push_back(Factor{inv});
    }
  }
  return out;
}

Elem double_iso_f(const DoubleRing& d, const ExcisionRing& e, const Elem& x) {
  const Ring& B = *d.base();
  return e.make(d.first(x), B.sub(d.second(x), d.first(x)));
}

Elem double_iso_g(const DoubleRing& d, const ExcisionRing& e, const Elem& x) {
  const Ring& B = *e.base();
  return d.make(e.first(x), B.add(e.first(x), e.second(x)));
}

Matrix seq_i(const DoubleRing& d, const Matrix& alpha) {
  const Ring& B = *d.base();
  if (!rel_congruent(B, alpha, d.ideal()))
    fail(ErrorKind::NotCongruent, "matrix is not congruent to the identity mod " + d.ideal().format());
  Matrix out(alpha.rows(), alpha.cols(), d.zero());
  for (std::size_t i = 0; i < alpha.rows(); ++i)
    for (std::size_t j = 0; j < alpha.cols(); ++j) out(i, j) = d.make(alpha(i, j), i == j ? B.one() : B.zero());
  return out;
}

Matrix seq_p2(const DoubleRing& d, const Matrix& m) {
  return map_entries(m, [&](const Elem& x) { return d.second(x); });
}

Matrix seq_p1(const DoubleRing& d, const Matrix& m) {
  return map_entries(m, [&](const Elem& x) { return d.first(x); });
}

bool integrality_identity(const ExcisionRing& ring, const Elem& i) {
  const Ring& B = *ring.base();
  Elem zi = ring.make(B.zero(), i);
  Elem i0 = ring.make(i, B.zero());
  return ring.is_zero(ring.sub(ring.mul(zi, zi), ring.mul(i0, zi)));
}

bool form_images_agree(const FormParameter& lambda_prime, const FormParameter& gamma_plus, const DoubleRing& d,
                       const ExcisionRing& e) {
  auto lp = lambda_prime.elements();
  auto gp = gamma_plus.elements();
  if (lp.size() != gp.size()) return false;
  for (const auto& x : lp)
    if (!gamma_plus.contains(double_iso_f(d, e, x))) return false;
  return true;
}

}  // namespace formk1
