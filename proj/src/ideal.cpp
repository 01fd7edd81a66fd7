#include <map>

#include "formk1/ring.hpp"

namespace formk1 {

namespace {

bool all_constant(const CoefficientRing& cr, const std::vector<Elem>& gens) {
  for (const auto& g : gens)
    if (cr.degree(g) > 0) return false;
  return true;
}

/// Additive closure of the two-sided products r*g*s inside a finite ring.
std::vector<Elem> enumerate_ideal(const Ring& ring, const std::vector<Elem>& gens) {
  auto elems = ring.elements();
  std::map<std::string, Elem> products;
  for (const auto& g : gens)
    for (const auto& r : elems) {
      Elem rg = ring.mul(r, g);
      if (ring.is_commutative()) {
        products.emplace(ring.format(rg), rg);
        continue;
      }
      for (const auto& s : elems) {
        Elem x = ring.mul(rg, s);
        products.emplace(ring.format(x), x);
      }
    }
  std::map<std::string, Elem> members{{ring.format(ring.zero()), ring.zero()}};
  std::vector<Elem> frontier{ring.zero()};
  while (!frontier.empty()) {
    std::vector<Elem> next;
    for (const auto& m : frontier)
      for (const auto& [_, p] : products) {
        Elem x = ring.add(m, p);
        if (members.emplace(ring.format(x), x).second) next.push_back(x);
      }
    frontier = std::move(next);
  }
  std::vector<Elem> out;
  out.reserve(members.size());
  for (auto& [_, e] : members) out.push_back(std::move(e));
  return out;
}

Int gcd_int(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Ideal Ideal::generated(RingPtr ring, std::vector<Elem> gens) {
  for (const auto& g : gens)
    if (!ring->contains(g)) fail(ErrorKind::BadParameter, "ideal generator is not an element of " + ring->name());
  Ideal j;
  j.ring_ = ring;
  j.gens_ = std::move(gens);
  switch (ring->kind()) {
    case RingKind::Integers: {
      Int d = 0;
      for (const auto& g : j.gens_) d = gcd_int(d, g.v);
      j.rep_ = Rep::Divisor;
      j.divisor_ = d;
      return j;
    }
    case RingKind::ModularInt: {
      Int d = static_cast<const ModularRing&>(*ring).modulus();
      for (const auto& g : j.gens_) d = gcd_int(d, g.v);
      j.rep_ = Rep::Divisor;
      j.divisor_ = d;
      return j;
    }
    case RingKind::Polynomial:
    case RingKind::TruncatedPolynomial:
    case RingKind::Graded: {
      const auto& cr = static_cast<const CoefficientRing&>(*ring);
      if (all_constant(cr, j.gens_)) {
        std::vector<Elem> base_gens;
        for (const auto& g : j.gens_) base_gens.push_back(cr.coeff(g, 0));
        j.rep_ = Rep::Coefficientwise;
        j.base_ = std::make_shared<const Ideal>(generated(cr.base(), std::move(base_gens)));
        return j;
      }
      break;
    }
    default:
      break;
  }
  if (!ring->enumerable())
    fail(ErrorKind::Undecidable, "no membership procedure for this ideal of " + ring->name());
  j.rep_ = Rep::Enumerated;
  j.members_ = std::make_shared<const std::vector<Elem>>(enumerate_ideal(*ring, j.gens_));
  return j;
}

bool Ideal::contains(const Elem& x) const {
  if (!ring_->contains(x)) return false;
  switch (rep_) {
    case Rep::Divisor:
      if (divisor_ == 0) return x.v == 0;
      return x.v % divisor_ == 0;
    case Rep::Enumerated:
      for (const auto& m : *members_)
        if (m == x) return true;
      return false;
    case Rep::Coefficientwise:
      for (const auto& c : x.parts)
        if (!base_->contains(c)) return false;
      return true;
  }
  return false;
}

Elem Ideal::random_member(Rng& rng) const {
  switch (rep_) {
    case Rep::Divisor: {
      if (divisor_ == 0) return ring_->zero();
      if (ring_->kind() == RingKind::Integers) return ring_->from_int(divisor_ * draw_range(rng, -5, 5));
      Int m = *ring_->cardinality();
      return ring_->from_int(divisor_ * Int(draw(rng, static_cast<std::uint64_t>(m / divisor_))));
    }
    case Rep::Enumerated:
      return (*members_)[draw(rng, members_->size())];
    case Rep::Coefficientwise: {
      const auto& cr = static_cast<const CoefficientRing&>(*ring_);
      // Draw a ring element for its shape, then replace coefficients.
      Elem shape = cr.random(rng);
      std::vector<Elem> cs;
      for (std::size_t k = 0; k < shape.parts.size(); ++k) cs.push_back(base_->random_member(rng));
      return cr.from_coeffs(std::move(cs));
    }
  }
  return ring_->zero();
}

std::vector<Elem> Ideal::elements() const {
  switch (rep_) {
    case Rep::Divisor: {
      if (ring_->kind() == RingKind::Integers) {
        if (divisor_ == 0) return {ring_->zero()};
        fail(ErrorKind::Undecidable, "ideal " + format() + " of Z is infinite");
      }
      std::vector<Elem> out;
      Int m = *ring_->cardinality();
      for (Int k = 0; k < m; k += divisor_) out.push_back(ring_->from_int(k));
      return out;
    }
    case Rep::Enumerated:
      return *members_;
    case Rep::Coefficientwise: {
      if (!ring_->enumerable()) fail(ErrorKind::Undecidable, "ideal " + format() + " is infinite");
      std::vector<Elem> out;
      for (const auto& x : ring_->elements())
        if (contains(x)) out.push_back(x);
      return out;
    }
  }
  return {};
}

bool Ideal::is_finite() const {
  switch (rep_) {
    case Rep::Divisor:
      return ring_->kind() != RingKind::Integers || divisor_ == 0;
    case Rep::Enumerated:
      return true;
    case Rep::Coefficientwise:
      return ring_->enumerable();
  }
  return false;
}

bool Ideal::involution_invariant() const {
  for (const auto& g : gens_)
    if (!contains(ring_->conj(g))) return false;
  return true;
}

std::string Ideal::format() const {
  std::string out = "(";
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    if (k) out += ",";
    out += ring_->format(gens_[k]);
  }
  return out + ")";
}

}  // namespace formk1
