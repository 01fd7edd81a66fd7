#pragma once

#include "formk1/elementary.hpp"

namespace formk1 {

/// f(r, i) = r + i
Elem fold(const ExcisionRing& ring, const Elem& x);
Matrix fold_matrix(const ExcisionRing& ring, const Matrix& m);
/// r -> (r, 0)
Matrix embed_matrix(const ExcisionRing& ring, const Matrix& m);

/// Lift a word of relative factors over (R, J) to an absolute word over
/// R (+) J: conjugator parameters x become (x, 0), core parameters a
/// become (0, a), and each factor is expanded to conjugator, core and
/// inverse conjugator. Throws MalformedWord for any non-relative factor or
/// a conjugator that is not a plain generator word.
ElemWord lift_relative_word(const ExcisionRing& ring, const ElemWord& w);

/// D -> R (+) J, (a, b) -> (a, b - a)
Elem double_iso_f(const DoubleRing& d, const ExcisionRing& e, const Elem& x);
/// R (+) J -> D, (a, i) -> (a, a + i)
Elem double_iso_g(const DoubleRing& d, const ExcisionRing& e, const Elem& x);

/// alpha -> (alpha, I) entrywise. Throws NotCongruent unless alpha = I mod J.
Matrix seq_i(const DoubleRing& d, const Matrix& alpha);
/// Second projection, entrywise.
Matrix seq_p2(const DoubleRing& d, const Matrix& m);
Matrix seq_p1(const DoubleRing& d, const Matrix& m);

/// (0,i)^2 - (i,0)(0,i) == 0 in R (+) J.
bool integrality_identity(const ExcisionRing& ring, const Elem& i);

/// f maps Lambda' onto Gamma (+) J. This holds exactly when Lambda and
/// Lambda_max agree inside J; checked by enumeration on finite rings.
bool form_images_agree(const FormParameter& lambda_prime, const FormParameter& gamma_plus, const DoubleRing& d,
                       const ExcisionRing& e);

}  // namespace formk1
