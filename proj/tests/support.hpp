#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "formk1/error.hpp"
#include "formk1/matrix.hpp"
#include "formk1/ring.hpp"

namespace formk1::test {

/// Kind of the Error thrown by `f`; throws std::logic_error if nothing is
/// thrown so the enclosing CHECK fails loudly.
template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  throw std::logic_error("expected an error");
}

inline Matrix mat(const Ring& r, const std::vector<std::vector<std::string>>& rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size(), r.zero());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = r.parse(rows[i][j]);
  return m;
}

inline Elem el(const Ring& r, const std::string& s) { return r.parse(s); }

inline Ideal ideal_of(const RingPtr& r, const std::vector<std::string>& gens) {
  std::vector<Elem> g;
  for (const auto& s : gens) g.push_back(r->parse(s));
  return Ideal::generated(r, g);
}

}  // namespace formk1::test
