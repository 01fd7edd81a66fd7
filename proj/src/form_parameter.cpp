#include "formk1/form_parameter.hpp"

#include <algorithm>

namespace formk1 {

bool in_lambda_max(const Ring& ring, const Elem& lambda, const Elem& x) {
  return x == ring.neg(ring.mul(lambda, ring.conj(x)));
}

bool in_lambda_min(const Ring& ring, const Elem& lambda, const Elem& x) {
  if (ring.enumerable()) {
    for (const auto& a : ring.elements())
      if (ring.sub(a, ring.mul(lambda, ring.conj(a))) == x) return true;
    return false;
  }
  switch (ring.kind()) {
    case RingKind::Integers:
      // Trivial involution and lambda = +-1, so Lambda_min = (1 - lambda)Z.
      if (lambda.v == 1) return x.v == 0;
      return x.v % 2 == 0;
    case RingKind::Polynomial:
    case RingKind::TruncatedPolynomial:
    case RingKind::Graded: {
      const auto& cr = static_cast<const CoefficientRing&>(ring);
      if (cr.degree(lambda) > 0) break;
      Elem lam0 = cr.coeff(lambda, 0);
      for (const auto& c : x.parts)
        if (!in_lambda_min(*cr.base(), lam0, c)) return false;
      return true;
    }
    default:
      break;
  }
  fail(ErrorKind::Undecidable, "Lambda_min membership is not decidable in " + ring.name());
}

namespace {

bool list_contains(const std::vector<Elem>& xs, const Elem& x) {
  return std::find(xs.begin(), xs.end(), x) != xs.end();
}

}  // namespace

void FormParameter::cache_members() {
  if (members_ || !ring_->enumerable()) return;
  std::vector<Elem> out;
  if (mode_ == Mode::Min) {
    for (const auto& a : ring_->elements()) {
      Elem x = ring_->sub(a, ring_->mul(lambda_, ring_->conj(a)));
      if (!list_contains(out, x)) out.push_back(x);
    }
  } else {
    for (const auto& a : ring_->elements())
      if (contains(a)) out.push_back(a);
  }
  members_ = std::make_shared<const std::vector<Elem>>(std::move(out));
}

FormParameter FormParameter::min(RingPtr ring) {
  FormParameter p;
  p.lambda_ = ring->lambda();
  p.ring_ = std::move(ring);
  p.mode_ = Mode::Min;
  p.tag_ = "min";
  p.cache_members();
  return p;
}

FormParameter FormParameter::max(RingPtr ring) {
  FormParameter p;
  p.lambda_ = ring->lambda();
  p.ring_ = std::move(ring);
  p.mode_ = Mode::Max;
  p.tag_ = "max";
  p.cache_members();
  return p;
}

FormParameter FormParameter::explicit_set(RingPtr ring, std::vector<Elem> elems) {
  std::vector<Elem> uniq;
  for (auto& e : elems) {
    if (!ring->contains(e)) fail(ErrorKind::BadParameter, "form parameter element is not in " + ring->name());
    if (!list_contains(uniq, e)) uniq.push_back(std::move(e));
  }
  FormParameter p;
  p.lambda_ = ring->lambda();
  p.ring_ = std::move(ring);
  p.mode_ = Mode::Explicit;
  p.tag_ = "explicit";
  p.members_ = std::make_shared<const std::vector<Elem>>(std::move(uniq));
  return p;
}

FormParameter FormParameter::extend_poly(const FormParameter& base, std::shared_ptr<const CoefficientRing> ring) {
  if (ring->base() != base.ring())
    fail(ErrorKind::BadParameter, "polynomial ring is not built over the parameter's ring");
  FormParameter p;
  p.lambda_ = ring->from_coeffs({base.lambda()});
  p.ring_ = std::move(ring);
  p.mode_ = Mode::Extended;
  p.tag_ = "poly";
  p.base_ = std::make_shared<const FormParameter>(base);
  p.cache_members();
  return p;
}

FormParameter FormParameter::gamma_plus(const FormParameter& base, std::shared_ptr<const ExcisionRing> ring) {
  if (ring->base() != base.ring())
    fail(ErrorKind::BadParameter, "excision ring is not built over the parameter's ring");
  FormParameter p;
  p.lambda_ = Elem::composite({base.lambda(), base.ring()->zero()});
  p.ring_ = std::move(ring);
  p.mode_ = Mode::Extended;
  p.tag_ = "gamma_plus";
  p.base_ = std::make_shared<const FormParameter>(base);
  p.cache_members();
  return p;
}

FormParameter FormParameter::lambda_prime(const FormParameter& base, std::shared_ptr<const DoubleRing> ring) {
  if (ring->base() != base.ring())
    fail(ErrorKind::BadParameter, "double ring is not built over the parameter's ring");
  FormParameter p;
  p.lambda_ = Elem::composite({base.lambda(), base.lambda()});
  p.ring_ = std::move(ring);
  p.mode_ = Mode::Extended;
  p.tag_ = "lambda_prime";
  p.base_ = std::make_shared<const FormParameter>(base);
  p.cache_members();
  return p;
}

FormParameter FormParameter::bar() const {
  FormParameter p;
  p.ring_ = ring_;
  p.lambda_ = ring_->conj(lambda_);
  p.mode_ = Mode::Extended;
  p.tag_ = "bar";
  p.base_ = std::make_shared<const FormParameter>(*this);
  if (members_) {
    std::vector<Elem> out;
    for (const auto& a : *members_) out.push_back(ring_->conj(a));
    p.members_ = std::make_shared<const std::vector<Elem>>(std::move(out));
  }
  return p;
}

bool FormParameter::contains(const Elem& x) const {
  if (!ring_->contains(x)) return false;
  if (members_) return list_contains(*members_, x);
  switch (mode_) {
    case Mode::Min:
      return in_lambda_min(*ring_, lambda_, x);
    case Mode::Max:
      return in_lambda_max(*ring_, lambda_, x);
    case Mode::Explicit:
      return false;
    case Mode::Extended:
      break;
  }
  if (tag_ == "poly") {
    for (const auto& c : x.parts)
      if (!base_->contains(c)) return false;
    return true;
  }
  if (tag_ == "gamma_plus") return base_->contains(x.parts[0]) && in_lambda_max(*ring_, lambda_, x);
  if (tag_ == "lambda_prime") return base_->contains(x.parts[0]) && base_->contains(x.parts[1]);
  if (tag_ == "bar") return base_->contains(ring_->conj(x));
  return false;
}

std::vector<Elem> FormParameter::elements() const {
  if (!members_) fail(ErrorKind::Undecidable, "form parameter on " + ring_->name() + " has no finite member list");
  return *members_;
}

Elem FormParameter::sample(Rng& rng) const {
  if (members_) return (*members_)[draw(rng, members_->size())];
  const Ring& R = *ring_;
  auto min_sample = [&] {
    Elem a = R.random(rng);
    return R.sub(a, R.mul(lambda_, R.conj(a)));
  };
  switch (mode_) {
    case Mode::Min:
      return min_sample();
    case Mode::Max:
      for (int attempt = 0; attempt < 16; ++attempt) {
        Elem a = R.random(rng);
        if (in_lambda_max(R, lambda_, a)) return a;
      }
      return min_sample();
    case Mode::Explicit:
      return R.zero();
    case Mode::Extended:
      break;
  }
  if (tag_ == "poly") {
    const auto& cr = static_cast<const CoefficientRing&>(R);
    Elem shape = cr.random(rng);
    std::vector<Elem> cs;
    for (std::size_t k = 0; k < shape.parts.size(); ++k) cs.push_back(base_->sample(rng));
    return cr.from_coeffs(std::move(cs));
  }
  if (tag_ == "gamma_plus" || tag_ == "lambda_prime") {
    const Ring& B = *base_->ring();
    const Ideal& J = tag_ == "gamma_plus" ? static_cast<const ExcisionRing&>(R).ideal()
                                          : static_cast<const DoubleRing&>(R).ideal();
    Elem a = base_->sample(rng);
    Elem j = J.random_member(rng);
    Elem d = B.sub(j, B.mul(base_->lambda(), B.conj(j)));  // in Lambda_min and in J
    if (tag_ == "gamma_plus") return Elem::composite({std::move(a), std::move(d)});
    Elem b = B.add(a, d);
    return Elem::composite({std::move(a), std::move(b)});
  }
  if (tag_ == "bar") return R.conj(base_->sample(rng));
  return R.zero();
}

nlohmann::json FormParameter::describe() const {
  nlohmann::json out{{"mode", tag_}, {"ring", ring_->name()}, {"lambda", ring_->format(lambda_)}};
  if (members_) {
    nlohmann::json elems = nlohmann::json::array();
    for (const auto& e : *members_) elems.push_back(ring_->format(e));
    out["elements"] = elems;
  }
  return out;
}

// ---------------------------------------------------------------------------

bool FormReport::valid() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

nlohmann::json FormReport::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json e{{"property", c.property}, {"pass", c.passed}};
    if (!c.passed) e["witness"] = c.witness;
    arr.push_back(e);
  }
  return {{"valid", valid()}, {"exhaustive", exhaustive}, {"checks", arr}};
}

FormReport form_param_validate(const FormParameter& param, std::size_t samples, Rng& rng) {
  const Ring& R = *param.ring();
  const Elem& lam = param.lambda();
  auto f = [&](const Elem& x) { return R.format(x); };

  FormReport report;
  auto named = [](const char* name) {
    FormCheck c;
    c.property = name;
    return c;
  };
  FormCheck zero = named("contains_zero"), addition = named("closed_under_addition"),
            negation = named("closed_under_negation"), lower = named("contains_lambda_min"),
            upper = named("within_lambda_max"), conjugation = named("conjugation_closed");
  auto record = [](FormCheck& c, const std::string& witness) {
    if (c.passed) {
      c.passed = false;
      c.witness = witness;
    }
  };

  if (!param.contains(R.zero())) record(zero, "0 not in Lambda");

  std::vector<Elem> lam_elems, ring_elems;
  bool exhaustive = false;
  if (param.has_elements() && R.enumerable()) {
    lam_elems = param.elements();
    ring_elems = R.elements();
    exhaustive = lam_elems.size() * ring_elems.size() <= 400000;
  }
  report.exhaustive = exhaustive;
  if (!exhaustive) {
    lam_elems.clear();
    ring_elems.clear();
    for (std::size_t s = 0; s < samples; ++s) {
      lam_elems.push_back(param.sample(rng));
      ring_elems.push_back(R.random(rng));
    }
  }

  for (const auto& a : lam_elems) {
    if (!in_lambda_max(R, lam, a)) record(upper, f(a) + " not in Lambda_max");
    Elem n = R.neg(a);
    if (!param.contains(n)) record(negation, "-" + f(a) + "=" + f(n) + " not in Lambda");
  }
  if (exhaustive) {
    for (const auto& a : lam_elems)
      for (const auto& b : lam_elems) {
        Elem s = R.add(a, b);
        if (!param.contains(s)) record(addition, f(a) + "+" + f(b) + "=" + f(s) + " not in Lambda");
      }
  } else {
    for (std::size_t k = 0; k + 1 < lam_elems.size(); ++k) {
      Elem s = R.add(lam_elems[k], lam_elems[k + 1]);
      if (!param.contains(s))
        record(addition, f(lam_elems[k]) + "+" + f(lam_elems[k + 1]) + "=" + f(s) + " not in Lambda");
    }
  }
  for (const auto& x : ring_elems) {
    Elem m = R.sub(x, R.mul(lam, R.conj(x)));
    if (!param.contains(m)) record(lower, f(x) + "-lambda*conj(" + f(x) + ")=" + f(m) + " not in Lambda");
  }
  if (exhaustive) {
    for (const auto& a : lam_elems)
      for (const auto& x : ring_elems) {
        Elem c = R.mul(R.mul(R.conj(x), a), x);
        if (!param.contains(c)) record(conjugation, "conj(" + f(x) + ")*" + f(a) + "*" + f(x) + "=" + f(c) + " not in Lambda");
      }
  } else {
    for (std::size_t k = 0; k < lam_elems.size(); ++k) {
      const Elem& a = lam_elems[k];
      const Elem& x = ring_elems[k];
      Elem c = R.mul(R.mul(R.conj(x), a), x);
      if (!param.contains(c)) record(conjugation, "conj(" + f(x) + ")*" + f(a) + "*" + f(x) + "=" + f(c) + " not in Lambda");
    }
  }
  report.checks = {zero, addition, negation, lower, upper, conjugation};
  return report;
}

}  // namespace formk1
