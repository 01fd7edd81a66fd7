#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "formk1/ring.hpp"

namespace formk1 {

struct AxiomResult {
  std::string axiom;
  bool passed = true;
  std::size_t checked = 0;
  std::string witness;  // first counterexample, empty on pass
};

struct AxiomReport {
  std::string ring;
  bool exhaustive = false;
  std::vector<AxiomResult> results;

  bool passed() const;
  nlohmann::json to_json() const;
};

/// Ring and involution axioms plus centrality and norm of lambda. Runs over
/// all triples when |R|^3 is at most 1e5, otherwise on `samples` random
/// triples.
AxiomReport ring_axiom_suite(const Ring& ring, std::size_t samples, Rng& rng);

}  // namespace formk1
