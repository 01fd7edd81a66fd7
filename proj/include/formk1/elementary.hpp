#pragma once

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "formk1/quadratic.hpp"

namespace formk1 {

enum class Family { QE, QR, QL };

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view s);

/// One of qe_ij(a), qr_ij(a), ql_ij(a); indices are 1-based in 1..n.
struct ElemGen {
  Family family = Family::QE;
  std::size_t i = 1;
  std::size_t j = 2;
  Elem a;
};

/// Block-level generators used by reduction certificates: H(alpha),
/// T12(beta), T21(gamma). For H the inverse block is carried along.
struct BlockGen {
  enum class Kind { H, T12, T21 };
  Kind kind = Kind::H;
  Matrix block;
  Matrix inverse;  // H only
};

struct Factor;

/// An ordered product of generators, the certificate for membership of its
/// value in an elementary subgroup of GQ(2n).
struct ElemWord {
  std::size_t n = 1;
  std::vector<Factor> factors;
};

/// conjugator * core * conjugator^{-1}, with the core parameter in J.
struct RelGen {
  ElemWord conjugator;
  ElemGen core;
};

struct Factor {
  std::variant<ElemGen, RelGen, BlockGen> value;
};

/// Throws BadParameter on index errors, parameters outside the ring, or
/// diagonal parameters outside Lambda-bar (QR) / Lambda (QL).
Matrix elem_gen_eval(const FormParameter& form, std::size_t n, const ElemGen& g);
/// Throws ParameterNotInIdeal when the core parameter is not in J.
Matrix rel_gen_eval(const FormParameter& form, std::size_t n, const RelGen& g, const Ideal& ideal);
Matrix block_gen_eval(const FormParameter& form, std::size_t n, const BlockGen& g);

/// Ordered product. Words containing relative factors need `ideal`
/// (MalformedWord otherwise).
Matrix word_eval(const FormParameter& form, const ElemWord& w, const Ideal* ideal = nullptr);
ElemWord word_inverse(const Ring& ring, const ElemWord& w);

/// Every entry of sigma - I lies in J.
bool rel_congruent(const Ring& ring, const Matrix& sigma, const Ideal& ideal);

/// Random absolute generator with a parameter valid for its position.
ElemGen random_elem_gen(const FormParameter& form, std::size_t n, Rng& rng);
ElemWord random_word(const FormParameter& form, std::size_t n, std::size_t length, Rng& rng);
/// Random relative word: each factor conjugates a J-parameter generator
/// by a short random absolute word.
ElemWord random_relative_word(const FormParameter& form, const Ideal& ideal, std::size_t n, std::size_t length,
                              Rng& rng);

}  // namespace formk1
