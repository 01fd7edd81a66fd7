#include "formk1/elementary.hpp"

namespace formk1 {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::QE: return "QE";
    case Family::QR: return "QR";
    case Family::QL: return "QL";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view s) {
  if (s == "QE") return Family::QE;
  if (s == "QR") return Family::QR;
  if (s == "QL") return Family::QL;
  return std::nullopt;
}

Matrix elem_gen_eval(const FormParameter& form, std::size_t n, const ElemGen& g) {
  const Ring& R = *form.ring();
  if (g.i < 1 || g.i > n || g.j < 1 || g.j > n)
    fail(ErrorKind::BadParameter, "generator indices (" + std::to_string(g.i) + "," + std::to_string(g.j) +
                                      ") out of range for n=" + std::to_string(n));
  if (!R.contains(g.a)) fail(ErrorKind::BadParameter, "generator parameter is not an element of " + R.name());
  std::size_t i = g.i - 1, j = g.j - 1;
  std::size_t ri = n + i, rj = n + j;
  const Elem& a = g.a;
  Elem abar = R.conj(a);
  const Elem& lam = form.lambda();
  Elem lam_bar = R.conj(lam);
  Matrix m = identity(R, 2 * n);
  auto put = [&](std::size_t r, std::size_t c, const Elem& x) { m(r, c) = R.add(m(r, c), x); };

  switch (g.family) {
    case Family::QE:
      if (i == j) fail(ErrorKind::BadParameter, "QE generator needs i != j");
      put(i, j, a);
      put(rj, ri, R.neg(abar));
      break;
    case Family::QR:
      if (i == j) {
        if (!form.bar().contains(a))
          fail(ErrorKind::BadParameter, "diagonal QR parameter " + R.format(a) + " is not in Lambda-bar");
        put(i, ri, a);
      } else {
        put(i, rj, a);
        put(j, ri, R.neg(R.mul(lam_bar, abar)));
      }
      break;
    case Family::QL:
      if (i == j) {
        if (!form.contains(a))
          fail(ErrorKind::BadParameter, "diagonal QL parameter " + R.format(a) + " is not in Lambda");
        put(ri, i, a);
      } else {
        put(ri, j, a);
        put(rj, i, R.neg(R.mul(lam, abar)));
      }
      break;
  }
  return m;
}

Matrix rel_gen_eval(const FormParameter& form, std::size_t n, const RelGen& g, const Ideal& ideal) {
  const Ring& R = *form.ring();
  if (!ideal.contains(g.core.a))
    fail(ErrorKind::ParameterNotInIdeal, "core parameter " + R.format(g.core.a) + " is not in " + ideal.format());
  if (g.conjugator.n != n) fail(ErrorKind::DimensionMismatch, "conjugator size differs from word size");
  Matrix c = word_eval(form, g.conjugator, &ideal);
  Matrix ci = word_eval(form, word_inverse(R, g.conjugator), &ideal);
  return mat_mul(R, mat_mul(R, c, elem_gen_eval(form, n, g.core)), ci);
}

Matrix block_gen_eval(const FormParameter& form, std::size_t n, const BlockGen& g) {
  const Ring& R = *form.ring();
  if (!is_square_of_dim(g.block, n)) fail(ErrorKind::DimensionMismatch, "block generator has the wrong size");
  switch (g.kind) {
    case BlockGen::Kind::H:
      return hyperbolic(R, g.block, g.inverse);
    case BlockGen::Kind::T12:
      return t12(form, g.block);
    case BlockGen::Kind::T21:
      return t21(form, g.block);
  }
  return identity(R, 2 * n);
}

Matrix word_eval(const FormParameter& form, const ElemWord& w, const Ideal* ideal) {
  const Ring& R = *form.ring();
  Matrix acc = identity(R, 2 * w.n);
  for (const auto& f : w.factors) {
    Matrix m;
    if (const auto* g = std::get_if<ElemGen>(&f.value)) {
      m = elem_gen_eval(form, w.n, *g);
    } else if (const auto* rg = std::get_if<RelGen>(&f.value)) {
      if (!ideal) fail(ErrorKind::MalformedWord, "relative factor in a word evaluated without an ideal");
      m = rel_gen_eval(form, w.n, *rg, *ideal);
    } else {
      m = block_gen_eval(form, w.n, std::get<BlockGen>(f.value));
    }
    acc = mat_mul(R, acc, m);
  }
  return acc;
}

ElemWord word_inverse(const Ring& ring, const ElemWord& w) {
  ElemWord out;
  out.n = w.n;
  for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it) {
    Factor f = *it;
    if (auto* g = std::get_if<ElemGen>(&f.value)) {
      g->a = ring.neg(g->a);
    } else if (auto* rg = std::get_if<RelGen>(&f.value)) {
      rg->core.a = ring.neg(rg->core.a);
    } else {
      auto& bg = std::get<BlockGen>(f.value);
      if (bg.kind == BlockGen::Kind::H) std::swap(bg.block, bg.inverse);
      else bg.block = mat_neg(ring, bg.block);
    }
    out.factors.push_back(std::move(f));
  }
  return out;
}

bool rel_congruent(const Ring& ring, const Matrix& sigma, const Ideal& ideal) {
  if (!sigma.square()) return false;
  for (std::size_t i = 0; i < sigma.rows(); ++i)
    for (std::size_t j = 0; j < sigma.cols(); ++j) {
      Elem x = i == j ? ring.sub(sigma(i, j), ring.one()) : sigma(i, j);
      if (!ideal.contains(x)) return false;
    }
  return true;
}

namespace {

Family random_family(std::size_t n, Rng& rng) {
  if (n == 1) return draw(rng, 2) == 0 ? Family::QR : Family::QL;
  switch (draw(rng, 3)) {
    case 0: return Family::QE;
    case 1: return Family::QR;
    default: return Family::QL;
  }
}

std::pair<std::size_t, std::size_t> random_indices(Family f, std::size_t n, Rng& rng) {
  std::size_t i = 1 + draw(rng, n), j = 1 + draw(rng, n);
  if (f == Family::QE)
    while (j == i) j = 1 + draw(rng, n);
  return {i, j};
}

}  // namespace

ElemGen random_elem_gen(const FormParameter& form, std::size_t n, Rng& rng) {
  const Ring& R = *form.ring();
  ElemGen g;
  g.family = random_family(n, rng);
  std::tie(g.i, g.j) = random_indices(g.family, n, rng);
  if (g.i == g.j) g.a = g.family == Family::QR ? form.bar().sample(rng) : form.sample(rng);
  else g.a = R.random(rng);
  return g;
}

ElemWord random_word(const FormParameter& form, std::size_t n, std::size_t length, Rng& rng) {
  ElemWord w;
  w.n = n;
  for (std::size_t k = 0; k < length; ++k) w.factors.push_back(Factor{random_elem_gen(form, n, rng)});
  return w;
}

ElemWord random_relative_word(const FormParameter& form, const Ideal& ideal, std::size_t n, std::size_t length,
                              Rng& rng) {
  const Ring& R = *form.ring();
  ElemWord w;
  w.n = n;
  for (std::size_t k = 0; k < length; ++k) {
    RelGen rg;
    rg.conjugator = random_word(form, n, 1 + draw(rng, 2), rng);
    rg.core.family = random_family(n, rng);
    std::tie(rg.core.i, rg.core.j) = random_indices(rg.core.family, n, rng);
    Elem j = ideal.random_member(rng);
    if (rg.core.i == rg.core.j) {
      // j - mu j-bar lies in J and in the minimal form parameter for mu.
      Elem mu = rg.core.family == Family::QR ? R.conj(form.lambda()) : form.lambda();
      rg.core.a = R.sub(j, R.mul(mu, R.conj(j)));
    } else {
      rg.core.a = j;
    }
    w.factors.push_back(Factor{std::move(rg)});
  }
  return w;
}

}  // namespace formk1
