#pragma once

#include <utility>
#include <vector>

#include "formk1/ring.hpp"

namespace formk1 {

/// Inverse in R_t. Throws NotAUnit when the constant term is not a unit
/// of the base ring.
Elem trunc_inverse(const TruncatedRing& rt, const Elem& u);

/// 1 + X^r P = (1 + P(0) X^r)(1 + X^{r+1} Q) in R_t. Returns (P(0), Q);
/// Q has degree below t - r. Requires 1 <= r <= t.
std::pair<Elem, Elem> trunc_split(const TruncatedRing& rt, const Elem& p, unsigned r);

/// 1 + X P = prod_{i=1..t} (1 + a_i X^i); returns (a_1, ..., a_t).
std::vector<Elem> trunc_product_decomp(const TruncatedRing& rt, const Elem& p);
/// prod_{i=1..t} (1 + a_i X^i), factors multiplied left to right.
Elem trunc_product(const TruncatedRing& rt, const std::vector<Elem>& a);

/// For u = 1 + X^r P with u^{k^r} = 1 and k invertible in R, returns Q
/// with u = 1 + X^{r+1} Q. Throws KNotInvertible, HypothesisFailed (shape,
/// power or centrality of P(0)) or InvariantViolated when the X^r
/// coefficient survives.
Elem torsion_descent(const TruncatedRing& rt, const Elem& u, const Int& k, unsigned r);

}  // namespace formk1
