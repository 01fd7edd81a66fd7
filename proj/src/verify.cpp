#include "formk1/verify.hpp"

#include <array>
#include <functional>
#include <future>
#include <optional>

#include "formk1/excision.hpp"
#include "formk1/factorization.hpp"
#include "formk1/graded.hpp"
#include "formk1/kopeiko.hpp"
#include "formk1/reduction.hpp"
#include "formk1/transvection.hpp"

namespace formk1 {

nlohmann::json SuiteResult::to_json() const {
  nlohmann::json out{{"id", id}, {"name", name}, {"status", passed ? "pass" : "fail"}, {"cases", cases},
                     {"failures", failures}};
  if (!first_failure.empty()) out["firstFailure"] = first_failure;
  return out;
}

namespace {

class Tally {
 public:
  explicit Tally(SuiteResult& r) : r_(r) {}

  void check(bool ok, const std::function<std::string()>& what) {
    ++r_.cases;
    if (ok) return;
    ++r_.failures;
    if (r_.first_failure.empty()) r_.first_failure = what();
  }

 private:
  SuiteResult& r_;
};

// ---------------------------------------------------------------------------
// Generators shared by several suites.

Matrix random_square(const Ring& r, std::size_t d, Rng& rng) {
  Matrix m(d, d, r.zero());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(i, j) = r.random(rng);
  return m;
}

// x - lambda x* with the diagonal replaced by members of the form parameter.
Matrix random_hermitian(const FormParameter& form, std::size_t d, Rng& rng) {
  const Ring& r = *form.ring();
  Matrix x = random_square(r, d, rng);
  Matrix h = mat_sub(r, x, mat_scale(r, form.lambda(), mat_star(r, x)));
  for (std::size_t i = 0; i < d; ++i) h(i, i) = form.sample(rng);
  return h;
}

std::pair<Matrix, Matrix> random_invertible(const Ring& r, std::size_t d, Rng& rng) {
  Matrix g = identity(r, d), ginv = identity(r, d);
  for (int s = 0; s < 5; ++s) {
    std::size_t i = draw(rng, d), j = draw(rng, d);
    if (i == j) continue;
    Elem x = r.random(rng);
    Matrix e = identity(r, d), einv = identity(r, d);
    e(i, j) = x;
    einv(i, j) = r.neg(x);
    g = mat_mul(r, g, e);
    ginv = mat_mul(r, einv, ginv);
  }
  return {g, ginv};
}

std::vector<RingPtr> scalar_rings() {
  return {make_modular(4, 1), make_modular(4, 3), make_modular(8, 1), make_modular(8, 3),
          make_modular(8, 5), make_modular(8, 7), make_modular(9, 1), make_modular(9, 8),
          make_gaussian(5, "1"), make_gaussian(5, "i"), make_integers(-1)};
}

std::vector<FormParameter> matrix_forms() {
  std::vector<FormParameter> out;
  auto rings = scalar_rings();
  rings.push_back(make_polynomial(make_integers(-1)));
  for (const auto& r : rings) {
    out.push_back(FormParameter::min(r));
    out.push_back(FormParameter::max(r));
  }
  return out;
}

std::string label(const FormParameter& f) { return f.ring()->name() + " lambda=" + f.ring()->format(f.lambda()) + " " + f.tag(); }

// ---------------------------------------------------------------------------
// 1. Every elementary generator is in GQ.

void generator_soundness(Tally& t, Rng& rng) {
  const std::size_t n = 3;
  for (const auto& form : matrix_forms()) {
    const Ring& r = *form.ring();
    for (Family fam : {Family::QE, Family::QR, Family::QL}) {
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
          if (fam != Family::QE || i != j) pairs.emplace_back(i, j);
      for (std::size_t s = 0; s < 504; ++s) {
        auto [i, j] = pairs[s % pairs.size()];
        ElemGen g{fam, i, j, r.random(rng)};
        if (i == j) g.a = fam == Family::QR ? form.bar().sample(rng) : form.sample(rng);
        bool ok = gq_member(r, form.lambda(), elem_gen_eval(form, n, g));
        t.check(ok, [&] {
          return label(form) + ": " + std::string(family_name(fam)) + "_" + std::to_string(i) + std::to_string(j) +
                 "(" + r.format(g.a) + ") not in GQ";
        });
      }
    }
  }
}

// 2. The four quadratic conditions agree on words and on perturbations.

void conditions_agree(Tally& t, Rng& rng) {
  std::size_t members = 0, perturbed = 0;
  for (const auto& form : matrix_forms()) {
    const Ring& r = *form.ring();
    for (int s = 0; s < 16; ++s) {
      Matrix m = word_eval(form, random_word(form, 2, 8, rng));
      auto c = lambda_quadratic_conditions(form, m);
      t.check(c.all(), [&] { return label(form) + ": word value fails " + c.to_json().dump(); });
      ++members;
      Matrix p = m;
      std::size_t a = draw(rng, 4), b = draw(rng, 4);
      Elem delta = r.random(rng);
      if (r.is_zero(delta)) delta = r.one();
      p(a, b) = r.add(p(a, b), delta);
      auto cp = lambda_quadratic_conditions(form, p);
      t.check(cp.agree(), [&] { return label(form) + ": perturbed matrix splits " + cp.to_json().dump(); });
      ++perturbed;
    }
  }
  t.check(members >= 300 && perturbed >= 300, [] { return std::string("too few samples"); });
}

// 3. a-bar b a stays in Lambda[X].

void poly_closure(Tally& t, Rng& rng) {
  std::vector<FormParameter> bases;
  auto z4a = make_modular(4, 1);
  bases.push_back(FormParameter::explicit_set(z4a, {z4a->zero(), z4a->from_int(2)}));
  for (const auto& r : scalar_rings()) {
    bases.push_back(FormParameter::min(r));
    bases.push_back(FormParameter::max(r));
  }
  for (const auto& base : bases) {
    auto px = make_polynomial(base.ring());
    auto ext = FormParameter::extend_poly(base, px);
    for (int s = 0; s < 500; ++s) {
      Elem a = px->random(rng);
      Elem b = ext.sample(rng);
      bool ok = px->degree(a) <= 4 && px->degree(b) <= 4 && ext.contains(b) &&
                ext.contains(px->mul(px->mul(px->conj(a), b), a));
      t.check(ok, [&] { return label(base) + ": a=" + px->format(a) + ", b=" + px->format(b); });
    }
  }
}

// 4. I + M(v, w) is in GQ and congruent to I mod J.

void key_lemma(Tally& t, Rng& rng) {
  std::vector<std::pair<FormParameter, std::string>> cases{{FormParameter::max(make_modular(4, 3)), "2"},
                                                           {FormParameter::min(make_modular(4, 1)), "2"},
                                                           {FormParameter::min(make_modular(8, 7)), "2"},
                                                           {FormParameter::max(make_modular(9, 1)), "3"},
                                                           {FormParameter::max(make_gaussian(5, "1")), "1"}};
  const std::size_t n = 3;
  for (const auto& [form, gen] : cases) {
    const Ring& r = *form.ring();
    Ideal j = Ideal::generated(form.ring(), {r.parse(gen)});
    for (int s = 0; s < 110; ++s) {
      // v = E e1 and w = E x with x isotropic in J^{2n} and orthogonal to e1.
      Matrix e = word_eval(form, random_word(form, n, 6, rng));
      HVector v = scale_vector(r, column(e, 0), form.ring()->from_int(1 + static_cast<long>(draw(rng, 3))));
      HVector x(2 * n, r.zero());
      x[0] = j.random_member(rng);
      for (std::size_t k = 1; k < n; ++k) x[draw(rng, 2) ? k : k + n] = j.random_member(rng);
      HVector w(2 * n, r.zero());
      for (std::size_t a = 0; a < 2 * n; ++a)
        for (std::size_t b = 0; b < 2 * n; ++b) w[a] = r.add(w[a], r.mul(e(a, b), x[b]));
      auto rep = key_lemma_check(form, v, w, j);
      t.check(rep.passed(), [&] { return label(form) + ": " + rep.to_json().dump(); });
    }
  }
}

// 5. Excision: fold after lift, the double isomorphism, integrality.

void excision(Tally& t, Rng& rng) {
  struct Case {
    RingPtr ring;
    const char* gen;
    bool use_max;
  };
  std::vector<Case> cases{{make_modular(4, 1), "2", true},  {make_modular(4, 3), "2", false},
                          {make_modular(8, 7), "4", true},  {make_modular(9, 1), "3", false},
                          {make_integers(-1), "2", true}};
  std::size_t lifted = 0;
  for (const auto& c : cases) {
    Ideal j = Ideal::generated(c.ring, {c.ring->parse(c.gen)});
    auto e = make_excision(c.ring, j);
    auto form = c.use_max ? FormParameter::max(c.ring) : FormParameter::min(c.ring);
    auto gp = FormParameter::gamma_plus(form, e);
    for (int s = 0; s < 44; ++s) {
      ElemWord w = random_relative_word(form, j, 2, 3, rng);
      Matrix up = word_eval(gp, lift_relative_word(*e, w));
      bool ok = fold_matrix(*e, up) == word_eval(form, w, &j);
      t.check(ok, [&] { return label(form) + ": fold(lift(w)) differs from w"; });
      ++lifted;
    }
    if (j.is_finite()) {
      for (const auto& i : j.elements())
        t.check(integrality_identity(*e, i), [&] { return "integrality fails at " + c.ring->format(i); });
    } else {
      for (int s = 0; s < 200; ++s) {
        Elem i = j.random_member(rng);
        t.check(integrality_identity(*e, i), [&] { return "integrality fails at " + c.ring->format(i); });
      }
    }
  }
  t.check(lifted >= 200, [] { return std::string("too few lifted words"); });

  for (int lam : {1, 3}) {
    auto r = make_modular(4, lam);
    Ideal j = Ideal::generated(r, {r->from_int(2)});
    auto d = make_double(r, j);
    auto e = make_excision(r, j);
    for (const auto& x : d->elements()) {
      t.check(double_iso_g(*d, *e, double_iso_f(*d, *e, x)) == x, [&] { return "g(f(x)) != x at " + d->format(x); });
      for (const auto& y : d->elements())
        t.check(double_iso_f(*d, *e, d->mul(x, y)) == e->mul(double_iso_f(*d, *e, x), double_iso_f(*d, *e, y)),
                [&] { return "f not multiplicative at " + d->format(x) + ", " + d->format(y); });
    }
    for (const auto& x : e->elements())
      t.check(double_iso_f(*d, *e, double_iso_g(*d, *e, x)) == x, [&] { return "f(g(x)) != x at " + e->format(x); });
  }
}

// 6. Triangular and invertible-corner reductions.

void reductions(Tally& t, Rng& rng) {
  std::vector<FormParameter> forms;
  for (const auto& r : scalar_rings()) {
    forms.push_back(FormParameter::min(r));
    forms.push_back(FormParameter::max(r));
  }
  for (const auto& form : forms) {
    const Ring& r = *form.ring();
    for (int s = 0; s < 10; ++s) {
      std::size_t d = 1 + draw(rng, 3);
      auto [g, ginv] = random_invertible(r, d, rng);
      Matrix h = hyperbolic(r, g, ginv);
      Matrix up = mat_mul(r, h, t12(form, random_hermitian(form.bar(), d, rng)));
      Matrix lo = mat_mul(r, h, t21(form, random_hermitian(form, d, rng)));
      Matrix co = mat_mul(r, lo, t12(form, random_hermitian(form.bar(), d, rng)));
      auto ru = reduce_upper(form, up, ginv);
      t.check(ru.alpha == g && verify_reduction(form, up, ru), [&] { return label(form) + ": upper reduction"; });
      auto rl = reduce_lower(form, lo, ginv);
      t.check(rl.alpha == g && verify_reduction(form, lo, rl), [&] { return label(form) + ": lower reduction"; });
      auto rc = reduce_invertible_corner(form, co, ginv);
      t.check(rc.alpha == g && verify_reduction(form, co, rc), [&] { return label(form) + ": corner reduction"; });
    }
  }
}

// 7. Kopeiko representatives reduce to H(I - aX).

std::vector<std::array<Elem, 3>> scalar_kopeiko(const FormParameter& form, unsigned n, long m) {
  const Ring& r = *form.ring();
  std::vector<std::array<Elem, 3>> out;
  for (long a = 0; a < m; a += 2)
    for (long b = 0; b < m; ++b)
      for (long c = 0; c < m; ++c) {
        KopeikoData d{1, n, Matrix(1, 1, r.from_int(a)), Matrix(1, 1, r.from_int(b)), Matrix(1, 1, r.from_int(c))};
        if (kopeiko_validate(form, d)) out.push_back({d.a(0, 0), d.b(0, 0), d.c(0, 0)});
      }
  return out;
}

void kopeiko(Tally& t, Rng& rng) {
  {
    auto r = make_modular(4, 3);
    KopeikoData d{1, 1, Matrix(1, 1, r->from_int(2)), Matrix(1, 1, r->from_int(2)), Matrix(1, 1, r->from_int(2))};
    auto kr = kopeiko_to_hyperbolic(FormParameter::max(r), d);
    const auto& px = *kr.poly.ring;
    bool ok = kr.result.alpha == Matrix(1, 1, px.parse("1-2X")) &&
              kr.result.alpha_inv == Matrix(1, 1, px.parse("1+2X")) &&
              mat_mul(px, kr.matrix, word_eval(kr.poly.form, kr.result.certificate)) ==
                  hyperbolic(px, kr.result.alpha, kr.result.alpha_inv);
    t.check(ok, [] { return std::string("worked instance a=b=c=2 over Z/4 does not give H(1-2X)"); });
  }
  struct Case {
    long m, lam;
    bool use_max;
  };
  for (const auto& c : std::vector<Case>{{4, 3, true}, {4, 3, false}, {4, 1, true}, {8, 7, true}, {8, 3, true},
                                         {8, 7, false}}) {
    auto r = make_modular(c.m, c.lam);
    auto form = c.use_max ? FormParameter::max(r) : FormParameter::min(r);
    for (unsigned n = 1; n <= 2; ++n) {
      auto scalars = scalar_kopeiko(form, n, c.m);
      for (int s = 0; s < 10; ++s) {
        std::size_t dim = 1 + draw(rng, 3);
        KopeikoData d{dim, n, zeros(*r, dim, dim), zeros(*r, dim, dim), zeros(*r, dim, dim)};
        for (std::size_t k = 0; k < dim; ++k) {
          const auto& sc = scalars[draw(rng, scalars.size())];
          d.a(k, k) = sc[0];
          d.b(k, k) = sc[1];
          d.c(k, k) = sc[2];
        }
        auto [g, ginv] = random_invertible(*r, dim, rng);
        d.a = mat_mul(*r, mat_mul(*r, ginv, d.a), g);
        d.b = mat_mul(*r, mat_mul(*r, ginv, d.b), mat_star(*r, ginv));
        d.c = mat_mul(*r, mat_mul(*r, mat_star(*r, g), d.c), g);
        if (!kopeiko_validate(form, d)) {
          t.check(false, [&] { return label(form) + ": generated data invalid"; });
          continue;
        }
        auto kr = kopeiko_to_hyperbolic(form, d);
        const auto& px = *kr.poly.ring;
        Matrix ax = map_entries(d.a, [&](const Elem& x) { return px.monomial(x, 1); });
        bool ok = lambda_quadratic_conditions(kr.poly.form, kr.matrix).all() &&
                  kr.result.alpha == mat_sub(px, identity(px, dim), ax) &&
                  verify_reduction(kr.poly.form, kr.matrix, kr.result);
        t.check(ok, [&] { return label(form) + ": Kopeiko reduction failed for r=" + std::to_string(dim); });
      }
    }
  }
}

// 8. Truncated splitting and unique product decomposition.

void truncated(Tally& t, Rng& rng) {
  for (long m : {4L, 9L}) {
    auto base = make_modular(m, 1);
    for (unsigned tt = 1; tt <= 8; ++tt) {
      auto rt = make_truncated(base, tt);
      for (int s = 0; s < 64; ++s) {
        Elem p = rt->random(rng);
        unsigned r = 1 + static_cast<unsigned>(draw(rng, tt));
        auto [c, q] = trunc_split(*rt, p, r);
        Elem lhs = rt->add(rt->one(), rt->mul(rt->monomial(base->one(), r), p));
        Elem rhs = rt->mul(rt->add(rt->one(), rt->monomial(c, r)),
                           rt->add(rt->one(), rt->mul(rt->monomial(base->one(), r + 1), q)));
        t.check(lhs == rhs && rt->degree(q) < static_cast<long>(tt - r),
                [&] { return rt->name() + ": split of " + rt->format(p) + " at r=" + std::to_string(r); });

        std::vector<Elem> a;
        for (unsigned i = 0; i < tt; ++i) a.push_back(base->random(rng));
        Elem prod = trunc_product(*rt, a);
        std::vector<Elem> coeffs;
        for (unsigned k = 1; k <= tt; ++k) coeffs.push_back(rt->coeff(prod, k));
        t.check(trunc_product_decomp(*rt, rt->from_coeffs(coeffs)) == a,
                [&] { return rt->name() + ": decomposition of " + rt->format(prod) + " not unique"; });
      }
    }
  }
}

// 9. Torsion descent.

// Kind of the library error thrown by `fn`, if any.
std::optional<ErrorKind> outcome(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

void torsion(Tally& t, Rng& rng) {
  auto z9 = make_modular(9, 1);
  auto rt = make_truncated(z9, 2);
  for (long p0 = 0; p0 < 9; ++p0)
    for (long p1 = 0; p1 < 9; ++p1) {
      Elem u = rt->from_coeffs({z9->one(), z9->from_int(p0), z9->from_int(p1)});
      auto where = [&] { return "descent over (Z/9)[X]/(X^3) at " + rt->format(u); };
      if (!rt->is_one(rt->mul(u, u))) {
        t.check(outcome([&] { torsion_descent(*rt, u, Int(2), 1); }) == ErrorKind::HypothesisFailed, where);
        continue;
      }
      Elem q = torsion_descent(*rt, u, Int(2), 1);
      t.check(rt->add(rt->one(), rt->mul(rt->monomial(z9->one(), 2), q)) == u && rt->is_one(u), where);
    }

  auto z4 = make_modular(4, 1);
  auto r4 = make_truncated(z4, 2);
  Elem u = r4->parse("1+2X");
  t.check(r4->is_one(r4->mul(u, u)) &&
              outcome([&] { torsion_descent(*r4, u, Int(2), 1); }) == ErrorKind::KNotInvertible,
          [] { return std::string("1+2X over Z/4 with k=2 not refused"); });
  t.check(outcome([&] { torsion_descent(*r4, u, Int(3), 1); }) == ErrorKind::HypothesisFailed,
          [] { return std::string("1+2X over Z/4 with k=3 not refused"); });

  // r = 2: whenever descent succeeds its output reconstructs the input.
  auto r9 = make_truncated(z9, 3);
  for (int s = 0; s < 200; ++s) {
    Elem v = r9->from_coeffs({z9->one(), z9->zero(), z9->random(rng), z9->random(rng)});
    Elem v4 = r9->mul(r9->mul(v, v), r9->mul(v, v));
    auto where = [&] { return "descent over (Z/9)[X]/(X^4) at " + r9->format(v); };
    if (!r9->is_one(v4)) {
      t.check(outcome([&] { torsion_descent(*r9, v, Int(2), 2); }) == ErrorKind::HypothesisFailed, where);
      continue;
    }
    Elem q = torsion_descent(*r9, v, Int(2), 2);
    t.check(r9->add(r9->one(), r9->mul(r9->monomial(z9->one(), 3), q)) == v, where);
  }
}

// 10. Graded dilation.

void graded(Tally& t, Rng& rng) {
  for (auto base : {make_integers(-1), make_modular(4, 3), make_modular(9, 1), make_gaussian(5, "1")}) {
    auto g = make_graded(base, 9);
    for (int s = 0; s < 260; ++s) {
      Elem b = g->random(rng);
      Elem x = g->from_coeffs({base->random(rng)}), y = g->from_coeffs({base->random(rng)});
      bool ok = plus_eval(*g, plus_eval(*g, b, x), y) == plus_eval(*g, b, g->mul(x, y)) &&
                plus_eval(*g, b, g->zero()) == g->component(b, 0);
      t.check(ok, [&] { return g->name() + ": composition fails for b=" + g->format(b); });
    }
  }
  struct Case {
    RingPtr base;
    bool use_max;
  };
  for (const auto& c : std::vector<Case>{{make_modular(4, 3), true}, {make_modular(9, 8), true},
                                         {make_gaussian(5, "1"), false}, {make_integers(-1), false}}) {
    auto g = make_graded(c.base, 12);
    auto form = c.use_max ? FormParameter::max(g) : FormParameter::min(g);
    auto bform = c.use_max ? FormParameter::max(c.base) : FormParameter::min(c.base);
    for (int s = 0; s < 55; ++s) {
      // Homogeneous parameters of degree <= 2 keep words below the top degree.
      ElemWord w{2, {}};
      for (int k = 0; k < 3; ++k) {
        ElemGen gen = random_elem_gen(form, 2, rng);
        Elem coeff = gen.i == gen.j ? (gen.family == Family::QR ? bform.bar().sample(rng) : bform.sample(rng))
                                    : c.base->random(rng);
        gen.a = g->monomial(coeff, draw(rng, 3));
        w.factors.push_back({gen});
      }
      Matrix a = word_eval(form, w);
      Elem x;
      do {
        x = g->from_coeffs({c.base->random(rng)});
      } while (g->conj(x) != x);
      bool ok = gq_member(*g, g->lambda(), a) && gq_member(*g, g->lambda(), plus_eval_matrix(*g, a, x));
      t.check(ok, [&] { return g->name() + ": dilated word leaves GQ"; });
    }
  }
}

// 11. Transvections on standard pairs equal elementary generators.

void transvections(Tally& t, Rng& rng) {
  {
    auto r = make_modular(4, 1);
    auto form = FormParameter::max(r);
    Matrix m = transvection_matrix(form, basis_vector(*r, 6, 0), basis_vector(*r, 6, 1), r->zero());
    t.check(m == elem_gen_eval(form, 3, {Family::QR, 1, 2, r->one()}),
            [] { return std::string("sigma(e1, e2, 0) != qr_12(1) at lambda = 1"); });
  }
  const std::size_t n = 3;
  for (const auto& form : matrix_forms()) {
    const Ring& r = *form.ring();
    const Elem& lam = form.lambda();
    auto e = [&](std::size_t k) { return basis_vector(r, 2 * n, k - 1); };
    HVector zero(2 * n, r.zero());
    for (int s = 0; s < 3; ++s)
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
          auto where = [&](const char* what) {
            return label(form) + ": " + what + " at i=" + std::to_string(i) + ", j=" + std::to_string(j);
          };
          if (i != j) {
            Elem c = r.random(rng);
            t.check(transvection_matrix(form, e(i), scale_vector(r, e(j), c), r.zero()) ==
                        elem_gen_eval(form, n, {Family::QR, i, j, r.conj(c)}),
                    [&] { return where("(e_i, e_j c)"); });
            t.check(transvection_matrix(form, e(n + i), scale_vector(r, e(n + j), c), r.zero()) ==
                        elem_gen_eval(form, n, {Family::QL, i, j, r.mul(lam, r.conj(c))}),
                    [&] { return where("(e_n+i, e_n+j c)"); });
            t.check(transvection_matrix(form, e(i), scale_vector(r, e(n + j), c), r.zero()) ==
                        elem_gen_eval(form, n, {Family::QE, i, j, r.mul(lam, r.conj(c))}),
                    [&] { return where("(e_i, e_n+j c)"); });
          } else {
            Elem a = form.sample(rng);
            t.check(transvection_matrix(form, e(i), zero, a) ==
                        elem_gen_eval(form, n, {Family::QR, i, i, r.neg(r.mul(r.conj(lam), a))}),
                    [&] { return where("(e_i, 0, a)"); });
            t.check(transvection_matrix(form, e(n + i), zero, a) == elem_gen_eval(form, n, {Family::QL, i, i, r.neg(a)}),
                    [&] { return where("(e_n+i, 0, a)"); });
          }
        }
  }
}

using SuiteFn = void (*)(Tally&, Rng&);

const std::array<SuiteFn, kSuiteCount> kSuites{generator_soundness, conditions_agree, poly_closure, key_lemma,
                                               excision,            reductions,       kopeiko,      truncated,
                                               torsion,             graded,           transvections};

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "generator_soundness",   "quadratic_conditions_agree", "poly_form_closure",  "key_lemma",
      "excision_and_double",   "reductions",                 "kopeiko_reduction",  "truncated_factorization",
      "torsion_descent",       "graded_dilation",            "transvection_generators"};
  return names;
}

SuiteResult run_suite(int id, std::uint64_t seed) {
  if (id < 1 || id > kSuiteCount) fail(ErrorKind::BadParameter, "no suite " + std::to_string(id));
  SuiteResult res;
  res.id = id;
  res.name = suite_names()[static_cast<std::size_t>(id - 1)];
  Rng rng(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(id)));
  Tally t(res);
  try {
    kSuites[static_cast<std::size_t>(id - 1)](t, rng);
  } catch (const std::exception& e) {
    ++res.failures;
    if (res.first_failure.empty()) res.first_failure = std::string("exception: ") + e.what();
  }
  res.passed = res.failures == 0 && res.cases > 0;
  return res;
}

std::vector<SuiteResult> run_all(std::uint64_t seed, bool parallel) {
  std::vector<SuiteResult> out;
  if (!parallel) {
    for (int id = 1; id <= kSuiteCount; ++id) out.push_back(run_suite(id, seed));
    return out;
  }
  std::vector<std::future<SuiteResult>> jobs;
  for (int id = 1; id <= kSuiteCount; ++id) jobs.push_back(std::async(std::launch::async, run_suite, id, seed));
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

nlohmann::json report_json(const std::vector<SuiteResult>& results, std::uint64_t seed) {
  nlohmann::json suites = nlohmann::json::array();
  bool all = true;
  for (const auto& r : results) {
    suites.push_back(r.to_json());
    all = all && r.passed;
  }
  return {{"seed", seed}, {"status", all ? "pass" : "fail"}, {"suites", suites}};
}

}  // namespace formk1
