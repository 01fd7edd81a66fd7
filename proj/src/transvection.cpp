#include "formk1/transvection.hpp"

namespace formk1 {

namespace {

std::size_t half_length(const HVector& v) {
  if (v.empty() || v.size() % 2 != 0)
    fail(ErrorKind::DimensionMismatch, "hyperbolic vectors need even positive length, got " + std::to_string(v.size()));
  return v.size() / 2;
}

void same_length(const HVector& v, const HVector& w) {
  if (v.size() != w.size())
    fail(ErrorKind::DimensionMismatch,
         "vector lengths " + std::to_string(v.size()) + " and " + std::to_string(w.size()) + " differ");
}

Matrix as_column(const Ring& ring, const HVector& v) {
  Matrix m(v.size(), 1, ring.zero());
  for (std::size_t k = 0; k < v.size(); ++k) m(k, 0) = v[k];
  return m;
}

bool in_ideal(const Ideal& ideal, const HVector& w) {
  for (const auto& x : w)
    if (!ideal.contains(x)) return false;
  return true;
}

}  // namespace

Matrix tilde(const Ring& ring, const Elem& lambda, const HVector& v) {
  std::size_t n = half_length(v);
  Matrix row(1, 2 * n, ring.zero());
  for (std::size_t l = 0; l < n; ++l) {
    row(0, n + l) = ring.conj(v[l]);
    row(0, l) = ring.mul(ring.conj(v[n + l]), lambda);
  }
  return row;
}

Elem inner(const Ring& ring, const Elem& lambda, const HVector& v, const HVector& w) {
  same_length(v, w);
  return mat_mul(ring, tilde(ring, lambda, v), as_column(ring, w))(0, 0);
}

Matrix m_op(const Ring& ring, const Elem& lambda, const HVector& v, const HVector& w) {
  same_length(v, w);
  Matrix vw = mat_mul(ring, as_column(ring, v), tilde(ring, lambda, w));
  Matrix wv = mat_mul(ring, as_column(ring, w), tilde(ring, lambda, v));
  return mat_sub(ring, vw, mat_scale(ring, ring.conj(lambda), wv));
}

nlohmann::json KeyLemmaReport::to_json() const {
  return {{"gq_member", in_gq}, {"congruent", congruent}, {"pass", passed()}};
}

KeyLemmaReport key_lemma_check(const FormParameter& form, const HVector& v, const HVector& w, const Ideal& ideal) {
  const Ring& R = *form.ring();
  const Elem& lam = form.lambda();
  same_length(v, w);
  if (!R.is_zero(inner(R, lam, v, w))) fail(ErrorKind::PreconditionFailed, "<v,w> is not zero");
  if (!R.is_zero(inner(R, lam, v, v))) fail(ErrorKind::PreconditionFailed, "<v,v> is not zero");
  if (!R.is_zero(inner(R, lam, w, w))) fail(ErrorKind::PreconditionFailed, "<w,w> is not zero");
  if (!in_ideal(ideal, w)) fail(ErrorKind::PreconditionFailed, "w is not in J^{2n}");
  Matrix sigma = mat_add(R, identity(R, v.size()), m_op(R, lam, v, w));
  KeyLemmaReport rep;
  rep.in_gq = gq_member(R, lam, sigma);
  rep.congruent = rel_congruent(R, sigma, ideal);
  return rep;
}

Elem form_f(const Ring& ring, const HVector& u, const HVector& v) {
  same_length(u, v);
  std::size_t n = half_length(u);
  Elem acc = ring.zero();
  for (std::size_t i = 0; i < n; ++i) acc = ring.add(acc, ring.mul(ring.conj(u[i]), v[n + i]));
  return acc;
}

Elem form_h(const Ring& ring, const Elem& lambda, const HVector& u, const HVector& v) {
  same_length(u, v);
  std::size_t n = half_length(u);
  Elem acc = ring.zero();
  for (std::size_t i = 0; i < n; ++i) {
    acc = ring.add(acc, ring.mul(ring.conj(u[i]), v[n + i]));
    acc = ring.add(acc, ring.mul(ring.mul(ring.conj(u[n + i]), lambda), v[i]));
  }
  return acc;
}

namespace {

void check_transvection(const FormParameter& form, const HVector& u, const HVector& v, const Elem& a) {
  const Ring& R = *form.ring();
  same_length(u, v);
  if (!form.contains(form_f(R, u, u))) fail(ErrorKind::PreconditionFailed, "f(u,u) is not in Lambda");
  if (!R.is_zero(form_h(R, form.lambda(), u, v))) fail(ErrorKind::PreconditionFailed, "h(u,v) is not zero");
  if (!form.contains(R.sub(form_f(R, v, v), a)))
    fail(ErrorKind::PreconditionFailed, "f(v,v) - a is not in Lambda");
}

HVector apply_unchecked(const Ring& R, const Elem& lam, const HVector& u, const HVector& v, const Elem& a,
                        const HVector& x) {
  Elem lam_bar = R.conj(lam);
  Elem hvx = form_h(R, lam, v, x);
  Elem hux = form_h(R, lam, u, x);
  Elem c2 = R.mul(lam_bar, hux);
  Elem c3 = R.mul(R.mul(lam_bar, a), hux);
  HVector out = x;
  for (std::size_t k = 0; k < x.size(); ++k) {
    out[k] = R.add(out[k], R.mul(u[k], hvx));
    out[k] = R.sub(out[k], R.mul(v[k], c2));
    out[k] = R.sub(out[k], R.mul(u[k], c3));
  }
  return out;
}

}  // namespace

HVector transvection_apply(const FormParameter& form, const HVector& u, const HVector& v, const Elem& a,
                           const HVector& x) {
  check_transvection(form, u, v, a);
  same_length(u, x);
  return apply_unchecked(*form.ring(), form.lambda(), u, v, a, x);
}

Matrix transvection_matrix(const FormParameter& form, const HVector& u, const HVector& v, const Elem& a) {
  check_transvection(form, u, v, a);
  const Ring& R = *form.ring();
  std::size_t dim = u.size();
  Matrix m(dim, dim, R.zero());
  for (std::size_t k = 0; k < dim; ++k) {
    HVector col = apply_unchecked(R, form.lambda(), u, v, a, basis_vector(R, dim, k));
    for (std::size_t r = 0; r < dim; ++r) m(r, k) = col[r];
  }
  return m;
}

bool q_preserved(const FormParameter& form, const Matrix& sigma, std::size_t samples, Rng& rng) {
  const Ring& R = *form.ring();
  for (std::size_t s = 0; s < samples; ++s) {
    HVector x(sigma.cols());
    for (auto& e : x) e = R.random(rng);
    Matrix sx = mat_mul(R, sigma, as_column(R, x));
    HVector y = column(sx, 0);
    if (!form.contains(R.sub(form_f(R, y, y), form_f(R, x, x)))) return false;
  }
  return true;
}

HVector basis_vector(const Ring& ring, std::size_t dim, std::size_t k) {
  HVector v(dim, ring.zero());
  v[k] = ring.one();
  return v;
}

HVector scale_vector(const Ring& ring, const HVector& v, const Elem& c) {
  HVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(ring.mul(x, c));
  return out;
}

HVector column(const Matrix& m, std::size_t k) {
  HVector v;
  v.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) v.push_back(m(r, k));
  return v;
}

}  // namespace formk1
