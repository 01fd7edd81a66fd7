#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace formk1 {

using Int = boost::multiprecision::cpp_int;
using Rng = std::mt19937_64;

/// Uniform draw from [0, bound). Plain modulo so sequences are identical
/// across standard libraries for a given seed.
inline std::uint64_t draw(Rng& rng, std::uint64_t bound) { return bound == 0 ? 0 : rng() % bound; }

inline long long draw_range(Rng& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(draw(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

/// A ring element as plain data. It does not know which ring it belongs to;
/// every operation goes through the owning Ring. Scalar rings use `v`
/// (and `w` for the imaginary part of Gaussian residues); composite rings
/// store their coefficients, pair components or matrix entries in `parts`.
/// Every ring keeps its elements in a canonical form, so structural
/// equality is ring equality.
struct Elem {
  Int v;
  Int w;
  std::vector<Elem> parts;

  static Elem scalar(Int value) {
    Elem e;
    e.v = std::move(value);
    return e;
  }
  static Elem gaussian(Int re, Int im) {
    Elem e;
    e.v = std::move(re);
    e.w = std::move(im);
    return e;
  }
  static Elem composite(std::vector<Elem> ps) {
    Elem e;
    e.parts = std::move(ps);
    return e;
  }

  friend bool operator==(const Elem& a, const Elem& b) {
    return a.v == b.v && a.w == b.w && a.parts == b.parts;
  }
};

using HVector = std::vector<Elem>;

}  // namespace formk1
