#include "formk1/axioms.hpp"

#include <functional>

namespace formk1 {

bool AxiomReport::passed() const {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

nlohmann::json AxiomReport::to_json() const {
  nlohmann::json axioms = nlohmann::json::array();
  for (const auto& r : results) {
    nlohmann::json entry{{"axiom", r.axiom}, {"pass", r.passed}, {"checked", r.checked}};
    if (!r.passed) entry["witness"] = r.witness;
    axioms.push_back(entry);
  }
  return {{"ring", ring}, {"exhaustive", exhaustive}, {"pass", passed()}, {"axioms", axioms}};
}

namespace {

using Check = std::function<std::string(const Elem&, const Elem&, const Elem&)>;

struct NamedCheck {
  const char* name;
  Check check;  // returns a witness on failure, empty string on success
};

std::vector<NamedCheck> build_checks(const Ring& R) {
  auto f = [&R](const Elem& x) { return R.format(x); };
  auto eq = [](const Elem& x, const Elem& y) { return x == y; };
  std::vector<NamedCheck> checks;
  checks.push_back({"add_associative", [=, &R](const Elem& a, const Elem& b, const Elem& c) {
                      Elem l = R.add(R.add(a, b), c), r = R.add(a, R.add(b, c));
                      return eq(l, r) ? "" : "(" + f(a) + "+" + f(b) + ")+" + f(c) + "=" + f(l) + " but " +
                                                 f(a) + "+(" + f(b) + "+" + f(c) + ")=" + f(r);
                    }});
  checks.push_back({"add_commutative", [=, &R](const Elem& a, const Elem& b, const Elem&) {
                      Elem l = R.add(a, b), r = R.add(b, a);
                      return eq(l, r) ? "" : f(a) + "+" + f(b) + "=" + f(l) + " but " + f(b) + "+" + f(a) + "=" + f(r);
                    }});
  checks.push_back({"add_identity", [=, &R](const Elem& a, const Elem&, const Elem&) {
                      Elem l = R.add(a, R.zero());
                      return eq(l, a) ? "" : f(a) + "+0=" + f(l);
                    }});
  checks.push_back({"add_inverse", [=, &R](const Elem& a, const Elem&, const Elem&) {
                      Elem l = R.add(a, R.neg(a));
                      return R.is_zero(l) ? "" : f(a) + "+(-" + f(a) + ")=" + f(l);
                    }});
  checks.push_back({"mul_associative", [=, &R](const Elem& a, const Elem& b, const Elem& c) {
                      Elem l = R.mul(R.mul(a, b), c), r = R.mul(a, R.mul(b, c));
                      return eq(l, r) ? "" : "(" + f(a) + "*" + f(b) + ")*" + f(c) + "=" + f(l) + " but " +
                                                 f(a) + "*(" + f(b) + "*" + f(c) + ")=" + f(r);
                    }});
  checks.push_back({"mul_identity", [=, &R](const Elem& a, const Elem&, const Elem&) {
                      Elem l = R.mul(R.one(), a), r = R.mul(a, R.one());
                      return eq(l, a) && eq(r, a) ? "" : "1*" + f(a) + "=" + f(l) + ", " + f(a) + "*1=" + f(r);
                    }});
  checks.push_back({"left_distributive", [=, &R](const Elem& a, const Elem& b, const Elem& c) {
                      Elem l = R.mul(a, R.add(b, c)), r = R.add(R.mul(a, b), R.mul(a, c));
                      return eq(l, r) ? "" : f(a) + "*(" + f(b) + "+" + f(c) + ")=" + f(l) + " but expanded " + f(r);
                    }});
  checks.push_back({"right_distributive", [=, &R](const Elem& a, const Elem& b, const Elem& c) {
                      Elem l = R.mul(R.add(a, b), c), r = R.add(R.mul(a, c), R.mul(b, c));
                      return eq(l, r) ? "" : "(" + f(a) + "+" + f(b) + ")*" + f(c) + "=" + f(l) + " but expanded " + f(r);
                    }});
  checks.push_back({"involution_additive", [=, &R](const Elem& a, const Elem& b, const Elem&) {
                      Elem l = R.conj(R.add(a, b)), r = R.add(R.conj(a), R.conj(b));
                      return eq(l, r) ? "" : "conj(" + f(a) + "+" + f(b) + ")=" + f(l) + " but " + f(r);
                    }});
  checks.push_back({"involution_involutive", [=, &R](const Elem& a, const Elem&, const Elem&) {
                      Elem l = R.conj(R.conj(a));
                      return eq(l, a) ? "" : "conj(conj(" + f(a) + "))=" + f(l);
                    }});
  checks.push_back({"involution_antimultiplicative", [=, &R](const Elem& a, const Elem& b, const Elem&) {
                      Elem l = R.conj(R.mul(a, b)), r = R.mul(R.conj(b), R.conj(a));
                      return eq(l, r) ? "" : "conj(" + f(a) + "*" + f(b) + ")=" + f(l) + " but " + f(r);
                    }});
  checks.push_back({"involution_unital", [=, &R](const Elem&, const Elem&, const Elem&) {
                      Elem l = R.conj(R.one());
                      return R.is_one(l) ? "" : "conj(1)=" + f(l);
                    }});
  checks.push_back({"lambda_central", [=, &R](const Elem& a, const Elem&, const Elem&) {
                      const Elem& lam = R.lambda();
                      Elem l = R.mul(lam, a), r = R.mul(a, lam);
                      return eq(l, r) ? "" : f(lam) + "*" + f(a) + "=" + f(l) + " but " + f(a) + "*" + f(lam) + "=" + f(r);
                    }});
  checks.push_back({"lambda_norm", [=, &R](const Elem&, const Elem&, const Elem&) {
                      const Elem& lam = R.lambda();
                      Elem bar = R.conj(lam);
                      Elem p = R.mul(lam, bar);
                      return R.is_one(p) ? "" : f(lam) + "*" + f(bar) + "=" + f(p);
                    }});
  return checks;
}

}  // namespace

AxiomReport ring_axiom_suite(const Ring& ring, std::size_t samples, Rng& rng) {
  AxiomReport report;
  report.ring = ring.name();
  auto checks = build_checks(ring);
  report.results.resize(checks.size());
  for (std::size_t k = 0; k < checks.size(); ++k) report.results[k].axiom = checks[k].name;

  auto run = [&](const Elem& a, const Elem& b, const Elem& c) {
    for (std::size_t k = 0; k < checks.size(); ++k) {
      auto& res = report.results[k];
      ++res.checked;
      if (!res.passed) continue;
      std::string w = checks[k].check(a, b, c);
      if (!w.empty()) {
        res.passed = false;
        res.witness = w;
      }
    }
  };

  auto card = ring.cardinality();
  if (card && *card * *card * *card <= 100000) {
    report.exhaustive = true;
    auto elems = ring.elements();
    for (const auto& a : elems)
      for (const auto& b : elems)
        for (const auto& c : elems) run(a, b, c);
  } else {
    for (std::size_t s = 0; s < samples; ++s) {
      Elem a = ring.random(rng);
      Elem b = ring.random(rng);
      Elem c = ring.random(rng);
      run(a, b, c);
    }
  }
  return report;
}

}  // namespace formk1
