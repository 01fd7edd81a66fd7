#pragma once

#include <nlohmann/json.hpp>

#include "formk1/elementary.hpp"

namespace formk1 {

/// Row vector v-bar^t psi_n, returned as a 1 x 2n matrix.
Matrix tilde(const Ring& ring, const Elem& lambda, const HVector& v);
/// <v, w> = v~ . w
Elem inner(const Ring& ring, const Elem& lambda, const HVector& v, const HVector& w);
/// M(v, w) = v w~ - lambda-bar w v~.
Matrix m_op(const Ring& ring, const Elem& lambda, const HVector& v, const HVector& w);

struct KeyLemmaReport {
  bool in_gq = false;
  bool congruent = false;
  bool passed() const { return in_gq && congruent; }
  nlohmann::json to_json() const;
};

/// For <v,w> = 0, <v,v> = <w,w> = 0 and w in J^{2n}: checks that
/// I + M(v,w) lies in GQ and is congruent to I mod J. Throws
/// PreconditionFailed naming the first violated hypothesis.
KeyLemmaReport key_lemma_check(const FormParameter& form, const HVector& v, const HVector& w, const Ideal& ideal);

/// f(u,v) = sum_i u_i-bar v_{n+i}.
Elem form_f(const Ring& ring, const HVector& u, const HVector& v);
/// h(u,v) = u-bar^t psi_n v.
Elem form_h(const Ring& ring, const Elem& lambda, const HVector& u, const HVector& v);

/// sigma_{u,v,a}(x) = x + u h(v,x) - v lambda-bar h(u,x) - u lambda-bar a h(u,x).
/// Requires f(u,u) in Lambda, h(u,v) = 0 and f(v,v) - a in Lambda;
/// otherwise PreconditionFailed.
HVector transvection_apply(const FormParameter& form, const HVector& u, const HVector& v, const Elem& a,
                           const HVector& x);
/// Matrix of sigma_{u,v,a} on the standard basis.
Matrix transvection_matrix(const FormParameter& form, const HVector& u, const HVector& v, const Elem& a);

/// f(sigma x, sigma x) - f(x, x) in Lambda on `samples` random x.
bool q_preserved(const FormParameter& form, const Matrix& sigma, std::size_t samples, Rng& rng);

HVector basis_vector(const Ring& ring, std::size_t dim, std::size_t k);
/// v * c
HVector scale_vector(const Ring& ring, const HVector& v, const Elem& c);
HVector column(const Matrix& m, std::size_t k);

}  // namespace formk1
