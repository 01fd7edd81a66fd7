#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "formk1/elementary.hpp"
#include "formk1/graded.hpp"
#include "support.hpp"

using namespace formk1;
using formk1::test::el;
using formk1::test::kind_of;

namespace {

Elem degree0(const GradedRing& g, Rng& rng) { return g.from_coeffs({g.base()->random(rng)}); }

// Degree-0 point fixed by the involution; dilation at such a point commutes
// with the involution.
Elem fixed_degree0(const GradedRing& g, Rng& rng) {
  for (;;) {
    Elem x = degree0(g, rng);
    if (g.conj(x) == x) return x;
  }
}

// Short word of generators with homogeneous parameters of degree <= 2, so
// products of a few words stay under the top degree.
ElemWord homogeneous_word(const FormParameter& form, const FormParameter& base_form, std::size_t n,
                          std::size_t length, Rng& rng) {
  const auto& g = static_cast<const GradedRing&>(*form.ring());
  ElemWord w{n, {}};
  for (std::size_t s = 0; s < length; ++s) {
    ElemGen gen = random_elem_gen(form, n, rng);
    std::size_t k = draw(rng, 3);
    Elem c = gen.i == gen.j ? (gen.family == Family::QR ? base_form.bar().sample(rng) : base_form.sample(rng))
                            : g.base()->random(rng);
    gen.a = g.monomial(c, k);
    w.factors.push_back({gen});
  }
  return w;
}

}  // namespace

TEST_CASE("epsilon: examples and homomorphism") {
  auto z = make_integers(-1);
  auto g = make_graded(z, 6);
  auto px = make_polynomial(g);
  Elem b = el(*g, "2+3Y");
  CHECK(epsilon(*g, *px, b) == px->from_coeffs({el(*g, "2"), el(*g, "3Y")}));
  CHECK(epsilon(*g, *px, g->one()) == px->one());
  auto other = make_polynomial(make_graded(z, 6));
  CHECK(kind_of([&] { epsilon(*g, *other, b); }) == ErrorKind::BadParameter);

  Rng rng(61);
  for (auto base : {RingPtr(z), make_modular(4, 3), make_gaussian(5, "1")}) {
    auto gg = make_graded(base, 9);
    auto pp = make_polynomial(gg);
    for (int s = 0; s < 1000; ++s) {
      Elem x = gg->random(rng), y = gg->random(rng);
      CHECK(epsilon(*gg, *pp, gg->mul(x, y)) == pp->mul(epsilon(*gg, *pp, x), epsilon(*gg, *pp, y)));
      CHECK(epsilon(*gg, *pp, gg->add(x, y)) == pp->add(epsilon(*gg, *pp, x), epsilon(*gg, *pp, y)));
      CHECK((epsilon(*gg, *pp, x) == epsilon(*gg, *pp, y)) == (x == y));
    }
  }
}

TEST_CASE("plus_eval: examples") {
  auto z = make_integers(-1);
  auto g = make_graded(z, 6);
  Elem b = el(*g, "2+3Y");
  CHECK(plus_eval(*g, b, el(*g, "5")) == el(*g, "2+15Y"));
  CHECK(plus_eval(*g, b, g->zero()) == el(*g, "2"));
  CHECK(plus_eval(*g, b, g->one()) == b);
  CHECK(kind_of([&] { plus_eval(*g, b, el(*g, "Y")); }) == ErrorKind::DegreeError);
  CHECK(kind_of([&] { plus_eval(*g, b, el(*g, "1+Y")); }) == ErrorKind::DegreeError);
  CHECK(kind_of([&] { g->mul(el(*g, "Y^4"), el(*g, "Y^3")); }) == ErrorKind::DegreeError);
}

TEST_CASE("plus_eval composition law on random triples") {
  Rng rng(67);
  for (auto base : {make_integers(-1), make_modular(4, 3), make_modular(9, 1), make_gaussian(5, "1")}) {
    auto g = make_graded(base, 9);
    INFO(g->name());
    for (int s = 0; s < 1000; ++s) {
      Elem b = g->random(rng), x = degree0(*g, rng), y = degree0(*g, rng);
      CHECK(plus_eval(*g, plus_eval(*g, b, x), y) == plus_eval(*g, b, g->mul(x, y)));
      CHECK(plus_eval(*g, b, g->zero()) == g->component(b, 0));
      CHECK(plus_eval(*g, b, g->one()) == b);
      // Oracle: sum of components b_k x^k computed without Horner.
      Elem direct = g->zero();
      for (std::size_t k = 0; k <= g->top_degree(); ++k)
        direct = g->add(direct, g->mul(g->component(b, k), g->pow(x, k)));
      CHECK(plus_eval(*g, b, x) == direct);
    }
  }
}

TEST_CASE("plus_eval_matrix on graded GQ words") {
  Rng rng(71);
  std::size_t words = 0;
  struct Case {
    RingPtr base;
    bool use_max;
  };
  for (const auto& c : std::vector<Case>{{make_modular(4, 3), true}, {make_modular(9, 8), true},
                                         {make_gaussian(5, "1"), false}, {make_integers(-1), false}}) {
    auto g = make_graded(c.base, 12);
    auto form = c.use_max ? FormParameter::max(g) : FormParameter::min(g);
    auto bform = c.use_max ? FormParameter::max(c.base) : FormParameter::min(c.base);
    INFO(g->name());
    CHECK(plus_eval_matrix(*g, identity(*g, 4), degree0(*g, rng)) == identity(*g, 4));
    for (int s = 0; s < 60; ++s) {
      Matrix a = word_eval(form, homogeneous_word(form, bform, 2, 2, rng));
      Matrix b = word_eval(form, homogeneous_word(form, bform, 2, 2, rng));
      Elem x = fixed_degree0(*g, rng);
      REQUIRE(gq_member(*g, g->lambda(), a));
      Matrix ax = plus_eval_matrix(*g, a, x);
      CHECK(gq_member(*g, g->lambda(), ax));
      CHECK(plus_eval_matrix(*g, mat_mul(*g, a, b), x) == mat_mul(*g, ax, plus_eval_matrix(*g, b, x)));
      CHECK(plus_eval_matrix(*g, a, g->zero()) == degree0_part(*g, a));
      ++words;
    }
  }
  CHECK(words >= 200);
}

TEST_CASE("dilation at a point not fixed by the involution can leave GQ") {
  auto base = make_gaussian(5, "1");
  auto g = make_graded(base, 4);
  auto form = FormParameter::min(g);
  Matrix a = elem_gen_eval(form, 1, {Family::QR, 1, 1, el(*g, "iY")});
  CHECK(gq_member(*g, g->lambda(), a));
  CHECK(gq_member(*g, g->lambda(), plus_eval_matrix(*g, a, el(*g, "2"))));
  CHECK_FALSE(gq_member(*g, g->lambda(), plus_eval_matrix(*g, a, el(*g, "i"))));
}

TEST_CASE("graded_congruence") {
  auto r = make_modular(4, 3);
  auto g = make_graded(r, 6);
  auto form = FormParameter::max(g);
  Matrix m = identity(*g, 4);
  m(0, 1) = el(*g, "Y+2Y^2");
  m(3, 2) = el(*g, "3Y^3");
  CHECK(graded_congruence(*g, m));
  CHECK_FALSE(graded_congruence(*g, elem_gen_eval(form, 2, {Family::QE, 1, 2, el(*g, "1")})));
  CHECK(graded_congruence(*g, elem_gen_eval(form, 2, {Family::QE, 1, 2, el(*g, "Y")})));

  Rng rng(73);
  for (int s = 0; s < 500; ++s) {
    Matrix a(4, 4, g->zero());
    bool congruent = draw(rng, 2);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        a(i, j) = g->random(rng);
        if (!congruent) continue;
        a(i, j) = g->sub(a(i, j), g->component(a(i, j), 0));
        if (i == j) a(i, j) = g->add(a(i, j), g->one());
      }
    if (congruent && draw(rng, 3) == 0) {
      std::size_t i = draw(rng, 4), j = draw(rng, 4);
      a(i, j) = g->add(a(i, j), g->from_coeffs({r->random(rng)}));
    }
    bool entrywise = true;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        if (g->component(a(i, j), 0) != (i == j ? g->one() : g->zero())) entrywise = false;
    CHECK(graded_congruence(*g, a) == entrywise);
    CHECK((plus_eval_matrix(*g, a, g->zero()) == identity(*g, 4)) == entrywise);
  }
}
