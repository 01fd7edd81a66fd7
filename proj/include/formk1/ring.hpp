#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "formk1/element.hpp"
#include "formk1/error.hpp"

namespace formk1 {

enum class RingKind {
  Integers,
  ModularInt,
  GaussianModular,
  Polynomial,
  TruncatedPolynomial,
  Excision,
  Double,
  Graded,
  Matrix,
};

enum class Involution { Trivial, Conjugation, Componentwise };

std::string_view ring_kind_name(RingKind kind);
std::string_view involution_name(Involution inv);

/// Rings larger than this are never enumerated.
inline constexpr std::uint64_t kEnumerationLimit = 1u << 16;

/// An associative ring with identity, an involution and a distinguished
/// central element lambda. Implementations are immutable and are shared
/// through RingPtr; elements are plain `Elem` values in canonical form.
class Ring {
 public:
  virtual ~Ring() = default;

  virtual RingKind kind() const = 0;
  virtual Involution involution() const = 0;
  virtual std::string name() const = 0;

  virtual Elem zero() const = 0;
  virtual Elem one() const = 0;
  virtual Elem from_int(const Int& k) const = 0;

  virtual Elem add(const Elem& a, const Elem& b) const = 0;
  virtual Elem neg(const Elem& a) const = 0;
  virtual Elem mul(const Elem& a, const Elem& b) const = 0;
  virtual Elem conj(const Elem& a) const = 0;

  /// Two-sided inverse if `a` is a unit and the ring can decide it.
  virtual std::optional<Elem> inverse(const Elem& a) const = 0;

  /// True when `a` is a well-formed canonical element of this ring.
  virtual bool contains(const Elem& a) const = 0;

  virtual bool is_commutative() const = 0;
  /// Number of elements, or nullopt for infinite rings.
  virtual std::optional<Int> cardinality() const = 0;
  /// All elements in a fixed order. Throws Undecidable for infinite rings
  /// or rings above kEnumerationLimit.
  virtual std::vector<Elem> elements() const;

  virtual Elem random(Rng& rng) const = 0;

  virtual std::string format(const Elem& a) const = 0;
  virtual Elem parse(std::string_view text) const = 0;
  virtual nlohmann::json descriptor() const = 0;

  const Elem& lambda() const { return lambda_; }

  Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
  bool is_zero(const Elem& a) const { return a == zero(); }
  bool is_one(const Elem& a) const { return a == one(); }
  Elem pow(const Elem& a, const Int& exponent) const;
  bool enumerable() const;
  /// a is nilpotent with a^k = 0 for some k <= bound; returns that k.
  std::optional<unsigned> nilpotency_index(const Elem& a, unsigned bound = 64) const;
  bool is_central(const Elem& a) const;

 protected:
  Elem lambda_;
};

using RingPtr = std::shared_ptr<const Ring>;

/// A two-sided ideal with decidable membership, given by generators.
class Ideal {
 public:
  /// The ideal generated by `gens` in `ring`. Throws Undecidable when no
  /// membership procedure is available for the ring kind.
  static Ideal generated(RingPtr ring, std::vector<Elem> gens);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Elem>& generators() const { return gens_; }

  bool contains(const Elem& x) const;
  Elem random_member(Rng& rng) const;
  /// Explicit member list for finite ideals.
  std::vector<Elem> elements() const;
  bool is_finite() const;
  /// J-bar = J, checked on generators.
  bool involution_invariant() const;
  std::string format() const;

 private:
  enum class Rep { Divisor, Enumerated, Coefficientwise };

  Ideal() = default;

  RingPtr ring_;
  std::vector<Elem> gens_;
  Rep rep_ = Rep::Divisor;
  Int divisor_;                              // Divisor: x in J iff divisor | x
  std::shared_ptr<const std::vector<Elem>> members_;  // Enumerated
  std::shared_ptr<const Ideal> base_;        // Coefficientwise
};

// ---------------------------------------------------------------------------
// Concrete rings.

class IntegerRing final : public Ring {
 public:
  explicit IntegerRing(Int lambda);

  RingKind kind() const override { return RingKind::Integers; }
  Involution involution() const override { return Involution::Trivial; }
  std::string name() const override { return "Z"; }
  Elem zero() const override { return Elem::scalar(0); }
  Elem one() const override { return Elem::scalar(1); }
  Elem from_int(const Int& k) const override { return Elem::scalar(k); }
  Elem add(const Elem& a, const Elem& b) const override { return Elem::scalar(a.v + b.v); }
  Elem neg(const Elem& a) const override { return Elem::scalar(-a.v); }
  Elem mul(const Elem& a, const Elem& b) const override { return Elem::scalar(a.v * b.v); }
  Elem conj(const Elem& a) const override { return a; }
  std::optional<Elem> inverse(const Elem& a) const override;
  bool contains(const Elem& a) const override;
  bool is_commutative() const override { return true; }
  std::optional<Int> cardinality() const override { return std::nullopt; }
  Elem random(Rng& rng) const override;
  std::string format(const Elem& a) const override;
  Elem parse(std::string_view text) const override;
  nlohmann::json descriptor() const override;
};

class ModularRing final : public Ring {
 public:
  ModularRing(Int modulus, Int lambda);

  const Int& modulus() const { return m_; }
  Elem reduce(const Int& x) const;

  RingKind kind() const override { return RingKind::ModularInt; }
  Involution involution() const override { return Involution::Trivial; }
  std::string name() const override;
  Elem zero() const override { return Elem::scalar(0); }
  Elem one() const override { return reduce(1); }
  Elem from_int(const Int& k) const override { return reduce(k); }
  Elem add(const Elem& a, const Elem& b) const override { return reduce(a.v + b.v); }
  Elem neg(const Elem& a) const override { return reduce(-a.v); }
  Elem mul(const Elem& a, const Elem& b) const override { return reduce(a.v * b.v); }
  Elem conj(const Elem& a) const override { return a; }
  std::optional<Elem> inverse(const Elem& a) const override;
  bool contains(const Elem& a) const override;
  bool is_commutative() const override { return true; }
  std::optional<Int> cardinality() const override { return m_; }
  std::vector<Elem> elements() const override;
  Elem random(Rng& rng) const override;
  std::string format(const Elem& a) const override;
  Elem parse(std::string_view text) const override;
  nlohmann::json descriptor() const override;

 private:
  Int m_;
};

/// (Z/m)[i] with i^2 = -1 and conjugation i -> -i.
class GaussianRing final : public Ring {
 public:
  GaussianRing(Int modulus, const Elem& lambda);

  const Int& modulus() const { return m_; }
  Elem make(const Int& re, const Int& im) const;

  RingKind kind() const override { return RingKind::GaussianModular; }
  Involution involution() const override { return Involution::Conjugation; }
  std::string name() const override;
  Elem zero() const override { return Elem::gaussian(0, 0); }
  Elem one() const override { return make(1, 0); }
  Elem from_int(const Int& k) const override { return make(k, 0); }
  Elem add(const Elem& a, const Elem& b) const override { return make(a.v + b.v, a.w + b.w); }
  Elem neg(const Elem& a) const override { return make(-a.v, -a.w); }
  Elem mul(const Elem& a, const Elem& b) const override {
    return make(a.v * b.v - a.w * b.w, a.v * b.w + a.w * b.v);
  }
  Elem conj(const Elem& a) const override { return make(a.v, -a.w); }
  std::optional<Elem> inverse(const Elem& a) const override;
  bool contains(const Elem& a) const override;
  bool is_commutative() const override { return true; }
  std::optional<Int> cardinality() const override { return m_ * m_; }
  std::vector<Elem> elements() const override;
  Elem random(Rng& rng) const override;
  std::string format(const Elem& a) const override;
  Elem parse(std::string_view text) const override;
  nlohmann::json descriptor() const override;

 private:
  Int m_;
};

/// Shared machinery for rings whose elements are coefficient lists over a
/// base ring with a formal variable fixed by the involution.
class CoefficientRing : public Ring {
 public:
  const RingPtr& base() const { return base_; }
  char variable() const { return var_; }

  /// Coefficient of `var^k` (zero beyond the stored length).
  Elem coeff(const Elem& a, std::size_t k) const;
  /// Highest index with a nonzero coefficient, or -1 for zero.
  long degree(const Elem& a) const;
  /// Build an element from a coefficient list (canonicalised).
  virtual Elem from_coeffs(std::vector<Elem> coeffs) const = 0;
  Elem monomial(const Elem& c, std::size_t k) const;

  Involution involution() const override { return Involution::Componentwise; }
  Elem zero() const override { return from_coeffs({}); }
  Elem one() const override { return from_coeffs({base_->one()}); }
  Elem from_int(const Int& k) const override { return from_coeffs({base_->from_int(k)}); }
  Elem add(const Elem& a, const Elem& b) const override;
  Elem neg(const Elem& a) const override;
  Elem conj(const Elem& a) const override;
  bool is_commutative() const override { return base_->is_commutative(); }
  std::string format(const Elem& a) const override;
  Elem parse(std::string_view text) const override;

 protected:
  CoefficientRing(RingPtr base, char var) : base_(std::move(base)), var_(var) {}
  /// Convolution; `limit` caps the stored degree, `overflow_is_error`
  /// makes nonzero terms above it throw DegreeError.
  std::vector<Elem> convolve(const Elem& a, const Elem& b, std::size_t limit,
                             bool overflow_is_error) const;

  RingPtr base_;
  char var_;
};

/// R[X] with X-bar = X.
class PolynomialRing final : public CoefficientRing {
 public:
  explicit PolynomialRing(RingPtr base, char var = 'X', unsigned random_degree = 4);

  Elem from_coeffs(std::vector<Elem> coeffs) const override;
  /// Substitute `x` (an element of the base ring) for the variable.
  Elem evaluate(const Elem& p, const Elem& x) const;

  RingKind kind() const override { return RingKind::Polynomial; }
  std::string name() const override;
  Elem mul(const Elem& a, const Elem& b) const override;
  std::optional<Elem> inverse(const Elem& a) const override;
  bool contains(const Elem& a) const override;
  std::optional<Int> cardinality() const override { return std::nullopt; }
  Elem random(Rng& rng) const override;
  nlohmann::json descriptor() const override;

 private:
  unsigned random_degree_;
};

/// R_t = R[X]/(X^{t+1}); elements always carry t+1 coefficients.
class TruncatedRing final : public CoefficientRing {
 public:
  TruncatedRing(RingPtr base, unsigned t);

  unsigned t() const { return t_; }
  Elem from_coeffs(std::vector<Elem> coeffs) const override;

  RingKind kind() const override { return RingKind::TruncatedPolynomial; }
  std::string name() const override;
  Elem mul(const Elem& a, const Elem& b) const override;
  std::optional<Elem> inverse(const Elem& a) const override;
  bool contains(const Elem& a) const override;
  std::optional<Int> cardinality() const override;
  std::vector<Elem> elements() const override;
  Elem random(Rng& rng) const override;
  nlohmann::json descriptor() const override;

 private:
  unsigned t_;
};

/// R0 + R1 + ... + R_top for R0[Y] graded by Y-degree. Component k holds the
/// coefficient c with homogeneous part c*Y^k. Products that would need a
/// degree above `top` throw DegreeError.
class GradedRing final : public CoefficientRing {
 public:
  GradedRing(RingPtr base, unsigned top_degree);

  unsigned top_degree() const { return top_; }
  Elem from_coeffs(std::vector<Elem> coeffs) const override;
  /// Homogeneous part of degree k, as an element of this ring.
  Elem component(const Elem& a, std::size_t k) const;
  bool is_homogeneous(const Elem& a, std::size_t k) const;

  RingKind kind() const override { return RingKind::Graded; }
  std::string name() const override;
  Elem mul(const Elem& a, const Elem& b) const override;
  std::optional<Elem> inverse(const Elem& a) const override;
  bool contains(const Elem& a) const override;
  std::optional<Int> cardinality() const override;
  std::vector<Elem> elements() const override;
  /// Random element of degree at most top/3, so triple products fit.
  Elem random(Rng& rng) const override;
  nlohmann::json descriptor() const override;

 private:
  unsigned top_;
};

/// Excision ring R (+) J: pairs (r, i), i in J, with
/// (r,i)(s,j) = (rs, rj + is + ij).
class ExcisionRing final : public Ring {
 public:
  ExcisionRing(RingPtr base, Ideal ideal);

  const RingPtr& base() const { return base_; }
  const Ideal& ideal() const { return ideal_; }
  /// Throws ConstraintViolated unless i lies in J.
  Elem make(Elem r, Elem i) const;
  const Elem& first(const Elem& x) const { return x.parts[0]; }
  const Elem& second(const Elem& x) const { return x.parts[1]; }

  RingKind kind() const override { return RingKind::Excision; }
  Involution involution() const override { return Involution::Componentwise; }
  std::string name() const override;
  Elem zero() const override;
  Elem one() const override;
  Elem from_int(const Int& k) const override;
  Elem add(const Elem& a, const Elem& b) const override;
  Elem neg(const Elem& a) const override;
  Elem mul(const Elem& a, const Elem& b) const override;
  Elem conj(const Elem& a) const override;
  std::optional<Elem> inverse(const Elem& a) const override;
  bool contains(const Elem& a) const override;
  bool is_commutative() const override { return base_->is_commutative(); }
  std::optional<Int> cardinality() const override;
  std::vector<Elem> elements() const override;
  Elem random(Rng& rng) const override;
  std::string format(const Elem& a) const override;
  Elem parse(std::string_view text) const override;
  nlohmann::json descriptor() const override;

 private:
  RingPtr base_;
  Ideal ideal_;
};

/// Double ring D = {(a, b) in R x R : a - b in J}, componentwise operations.
class DoubleRing final : public Ring {
 public:
  DoubleRing(RingPtr base, Ideal ideal);

  const RingPtr& base() const { return base_; }
  const Ideal& ideal() const { return ideal_; }
  /// Throws ConstraintViolated unless a - b lies in J.
  Elem make(Elem a, Elem b) const;
  const Elem& first(const Elem& x) const { return x.parts[0]; }
  const Elem& second(const Elem& x) const { return x.parts[1]; }

  RingKind kind() const override { return RingKind::Double; }
  Involution involution() const override { return Involution::Componentwise; }
  std::string name() const override;
  Elem zero() const override;
  Elem one() const override;
  Elem from_int(const Int& k) const override;
  Elem add(const Elem& a, const Elem& b) const override;
  Elem neg(const Elem& a) const override;
  Elem mul(const Elem& a, const Elem& b) const override;
  Elem conj(const Elem& a) const override;
  std::optional<Elem> inverse(const Elem& a) const override;
  bool contains(const Elem& a) const override;
  bool is_commutative() const override { return base_->is_commutative(); }
  std::optional<Int> cardinality() const override;
  std::vector<Elem> elements() const override;
  Elem random(Rng& rng) const override;
  std::string format(const Elem& a) const override;
  Elem parse(std::string_view text) const override;
  nlohmann::json descriptor() const override;

 private:
  RingPtr base_;
  Ideal ideal_;
};

/// M_r(R) with the star involution (conjugate transpose); lambda is
/// lambda_R times the identity.
class MatrixRing final : public Ring {
 public:
  MatrixRing(RingPtr base, std::size_t size);

  const RingPtr& base() const { return base_; }
  std::size_t size() const { return size_; }
  const Elem& entry(const Elem& a, std::size_t i, std::size_t j) const {
    return a.parts[i * size_ + j];
  }

  RingKind kind() const override { return RingKind::Matrix; }
  Involution involution() const override { return Involution::Componentwise; }
  std::string name() const override;
  Elem zero() const override;
  Elem one() const override;
  Elem from_int(const Int& k) const override;
  Elem add(const Elem& a, const Elem& b) const override;
  Elem neg(const Elem& a) const override;
  Elem mul(const Elem& a, const Elem& b) const override;
  Elem conj(const Elem& a) const override;
  std::optional<Elem> inverse(const Elem& a) const override;
  bool contains(const Elem& a) const override;
  bool is_commutative() const override { return size_ == 1 && base_->is_commutative(); }
  std::optional<Int> cardinality() const override;
  std::vector<Elem> elements() const override;
  Elem random(Rng& rng) const override;
  std::string format(const Elem& a) const override;
  Elem parse(std::string_view text) const override;
  nlohmann::json descriptor() const override;

 private:
  RingPtr base_;
  std::size_t size_;
};

// Factories. Lambda arguments are given as base-ring integers where the
// ring is scalar, or as parsed elements otherwise.
RingPtr make_integers(Int lambda = -1);
RingPtr make_modular(Int modulus, Int lambda = 1);
RingPtr make_gaussian(Int modulus, const std::string& lambda = "1");
std::shared_ptr<const PolynomialRing> make_polynomial(RingPtr base, char var = 'X');
std::shared_ptr<const TruncatedRing> make_truncated(RingPtr base, unsigned t);
std::shared_ptr<const GradedRing> make_graded(RingPtr base, unsigned top_degree);
std::shared_ptr<const ExcisionRing> make_excision(RingPtr base, Ideal ideal);
std::shared_ptr<const DoubleRing> make_double(RingPtr base, Ideal ideal);
std::shared_ptr<const MatrixRing> make_matrix_ring(RingPtr base, std::size_t size);

// Small text helpers shared by the parsers.
std::string trim(std::string_view s);
/// Split at top-level occurrences of `sep` (outside (), [] nesting).
std::vector<std::string> split_top_level(std::string_view s, char sep);
Int parse_int(std::string_view s);

}  // namespace formk1
