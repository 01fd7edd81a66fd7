#pragma once

#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "formk1/ring.hpp"

namespace formk1 {

/// A form parameter on a ring with involution: an additive subgroup
/// between Lambda_min and Lambda_max for a fixed unit lambda. Membership is
/// always decidable; finite rings also get an explicit element list.
///
/// The lambda is normally the ring's own, except for `bar()`, which turns
/// a lambda-form parameter into a lambda-bar one.
class FormParameter {
 public:
  enum class Mode { Min, Max, Explicit, Extended };

  static FormParameter min(RingPtr ring);
  static FormParameter max(RingPtr ring);
  /// Throws BadParameter for elements outside the ring.
  static FormParameter explicit_set(RingPtr ring, std::vector<Elem> elems);
  /// Lambda[X]: coefficientwise extension to a polynomial, truncated or
  /// graded ring over this parameter's ring.
  static FormParameter extend_poly(const FormParameter& base, std::shared_ptr<const CoefficientRing> ring);
  /// (Lambda (+) J) intersected with Lambda_max of R (+) J.
  static FormParameter gamma_plus(const FormParameter& base, std::shared_ptr<const ExcisionRing> ring);
  /// {(a,b) in Lambda x Lambda : a - b in J} on the double ring.
  static FormParameter lambda_prime(const FormParameter& base, std::shared_ptr<const DoubleRing> ring);

  /// {a-bar : a in Lambda}, a form parameter for lambda-bar.
  FormParameter bar() const;

  const RingPtr& ring() const { return ring_; }
  const Elem& lambda() const { return lambda_; }
  Mode mode() const { return mode_; }
  /// "min", "max", "explicit", or the construction for extended ones.
  const std::string& tag() const { return tag_; }

  /// Throws Undecidable where no procedure exists (Lambda_min of an
  /// infinite ring outside the supported families).
  bool contains(const Elem& x) const;
  /// Explicit members; throws Undecidable for infinite or large rings.
  std::vector<Elem> elements() const;
  bool has_elements() const { return members_ != nullptr; }
  /// A random member (not necessarily uniform).
  Elem sample(Rng& rng) const;

  nlohmann::json describe() const;

 private:
  FormParameter() = default;
  void cache_members();

  RingPtr ring_;
  Elem lambda_;
  Mode mode_ = Mode::Min;
  std::string tag_;
  std::shared_ptr<const std::vector<Elem>> members_;
  std::shared_ptr<const FormParameter> base_;
};

bool in_lambda_min(const Ring& ring, const Elem& lambda, const Elem& x);
bool in_lambda_max(const Ring& ring, const Elem& lambda, const Elem& x);

struct FormCheck {
  std::string property;
  bool passed = true;
  std::string witness;
};

struct FormReport {
  bool exhaustive = false;
  std::vector<FormCheck> checks;

  bool valid() const;
  nlohmann::json to_json() const;
};

/// Additive subgroup, Lambda_min <= Lambda <= Lambda_max and closure under
/// a -> x-bar a x. Exhaustive on small finite rings, otherwise sampled.
FormReport form_param_validate(const FormParameter& param, std::size_t samples, Rng& rng);

}  // namespace formk1
