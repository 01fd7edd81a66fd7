#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "formk1/transvection.hpp"
#include "support.hpp"

using namespace formk1;
using formk1::test::el;
using formk1::test::ideal_of;
using formk1::test::kind_of;
using formk1::test::mat;

namespace {

using IntMat = std::vector<std::vector<long>>;

IntMat int_identity(std::size_t d) {
  IntMat m(d, std::vector<long>(d, 0));
  for (std::size_t i = 0; i < d; ++i) m[i][i] = 1;
  return m;
}

Matrix to_matrix(const Ring& r, const IntMat& m) {
  Matrix out(m.size(), m.size(), r.zero());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = r.from_int(m[i][j]);
  return out;
}

// Generator straight from its defining formula over Z/m, trivial involution,
// 1-based indices, rho(i) = n + i.
IntMat oracle_gen(long lam, Family f, std::size_t n, std::size_t i, std::size_t j, long a) {
  IntMat m = int_identity(2 * n);
  auto at = [&](std::size_t r, std::size_t c) -> long& { return m[r - 1][c - 1]; };
  switch (f) {
    case Family::QE:
      at(i, j) += a;
      at(n + j, n + i) -= a;
      break;
    case Family::QR:
      at(i, n + j) += a;
      if (i != j) at(j, n + i) -= lam * a;  // lambda-bar = lambda here
      break;
    case Family::QL:
      at(n + i, j) += a;
      if (i != j) at(n + j, i) -= lam * a;
      break;
  }
  return m;
}

// sigma^t psi sigma == psi over Z/m with plain integers.
bool oracle_gq(long m, long lam, const IntMat& s) {
  std::size_t d = s.size(), n = d / 2;
  IntMat psi(d, std::vector<long>(d, 0));
  for (std::size_t k = 0; k < n; ++k) {
    psi[k][n + k] = 1;
    psi[n + k][k] = lam;
  }
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      long acc = 0;
      for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q) acc += s[p][r] * psi[p][q] * s[q][c];
      if (((acc - psi[r][c]) % m + m) % m != 0) return false;
    }
  return true;
}

std::vector<FormParameter> test_forms() {
  auto z41 = make_modular(4, 1), z43 = make_modular(4, 3), z9 = make_modular(9, 8), z8 = make_modular(8, 7);
  auto g5 = make_gaussian(5, "1"), gi = make_gaussian(5, "i"), z = make_integers(-1);
  auto pz = make_polynomial(z);
  return {FormParameter::min(z41), FormParameter::max(z41), FormParameter::min(z43), FormParameter::max(z43),
          FormParameter::max(z9),  FormParameter::min(z8),  FormParameter::max(g5),  FormParameter::min(gi),
          FormParameter::max(z),   FormParameter::min(pz)};
}

Matrix random_square(const Ring& r, std::size_t d, Rng& rng) {
  Matrix m(d, d, r.zero());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(i, j) = r.random(rng);
  return m;
}

// Random Lambda-Hermitian block: x - lambda x* plus a diagonal from Lambda.
Matrix random_hermitian(const FormParameter& form, std::size_t d, Rng& rng) {
  const Ring& r = *form.ring();
  Matrix x = random_square(r, d, rng);
  for (std::size_t i = 0; i < d; ++i) x(i, i) = r.zero();
  Matrix h = mat_sub(r, x, mat_scale(r, form.lambda(), mat_star(r, x)));
  for (std::size_t i = 0; i < d; ++i) h(i, i) = form.sample(rng);
  return h;
}

// Invertible block from a product of random elementary transvections.
Matrix random_elementary_block(const Ring& r, std::size_t d, Rng& rng) {
  Matrix g = identity(r, d);
  for (int s = 0; s < 6; ++s) {
    std::size_t i = draw(rng, d), j = draw(rng, d);
    if (i == j) continue;
    Matrix e = identity(r, d);
    e(i, j) = r.random(rng);
    g = mat_mul(r, g, e);
  }
  return g;
}

}  // namespace

TEST_CASE("psi") {
  auto z = make_integers(-1);
  CHECK(psi(*z, 1, z->lambda()) == mat(*z, {{"0", "1"}, {"-1", "0"}}));
  auto z4 = make_modular(4, 1);
  Matrix p = psi(*z4, 2, z4->lambda());
  CHECK(mat_star(*z4, p) == mat_transpose(p));
  auto z43 = make_modular(4, 3);
  Matrix p3 = psi(*z43, 3, z43->lambda());
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      std::string expect = (j == i + 3) ? "1" : (i == j + 3) ? "3" : "0";
      CHECK(z43->format(p3(i, j)) == expect);
    }
}

TEST_CASE("gq_member: examples") {
  auto r = make_modular(4, 3);
  auto form = FormParameter::max(r);
  CHECK(gq_member(*r, r->lambda(), identity(*r, 6)));
  Matrix q = elem_gen_eval(form, 3, {Family::QE, 1, 2, r->one()});
  CHECK(oracle_gq(4, 3, oracle_gen(3, Family::QE, 3, 1, 2, 1)));
  CHECK(gq_member(*r, r->lambda(), q));
  Matrix bare = identity(*r, 6);
  bare(0, 1) = r->one();
  CHECK_FALSE(oracle_gq(4, 3, [] {
    IntMat m = int_identity(6);
    m[0][1] = 1;
    return m;
  }()));
  CHECK_FALSE(gq_member(*r, r->lambda(), bare));
  CHECK(kind_of([&] { gq_member(*r, r->lambda(), identity(*r, 3)); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("elem_gen_eval: examples against the formula oracle") {
  auto r1 = make_modular(4, 1);
  auto f1 = FormParameter::max(r1);
  IntMat qe = int_identity(6);
  qe[0][1] = 1;
  qe[4][3] = -1;
  CHECK(elem_gen_eval(f1, 3, {Family::QE, 1, 2, r1->one()}) == to_matrix(*r1, qe));
  IntMat qr = int_identity(6);
  qr[0][4] = 1;
  qr[1][3] = -1;
  CHECK(elem_gen_eval(f1, 3, {Family::QR, 1, 2, r1->one()}) == to_matrix(*r1, qr));
  CHECK(elem_gen_eval(f1, 3, {Family::QE, 2, 3, r1->zero()}) == identity(*r1, 6));
  CHECK(kind_of([&] { elem_gen_eval(f1, 3, {Family::QR, 1, 1, r1->one()}); }) == ErrorKind::BadParameter);
  CHECK(kind_of([&] { elem_gen_eval(f1, 3, {Family::QE, 2, 2, r1->one()}); }) == ErrorKind::BadParameter);
  CHECK(kind_of([&] { elem_gen_eval(f1, 3, {Family::QL, 1, 4, r1->one()}); }) == ErrorKind::BadParameter);
  CHECK(elem_gen_eval(f1, 3, {Family::QR, 1, 1, el(*r1, "2")}) == to_matrix(*r1, oracle_gen(1, Family::QR, 3, 1, 1, 2)));
}

TEST_CASE("every generator matches the formula oracle over Z/m") {
  for (long m : {4L, 8L, 9L})
    for (long lam = 1; lam < m; ++lam) {
      if ((lam * lam) % m != 1) continue;
      auto r = make_modular(m, lam);
      for (auto form : {FormParameter::min(r), FormParameter::max(r)})
        for (Family f : {Family::QE, Family::QR, Family::QL})
          for (std::size_t i = 1; i <= 3; ++i)
            for (std::size_t j = 1; j <= 3; ++j) {
              if (f == Family::QE && i == j) continue;
              for (long a = 0; a < m; ++a) {
                Elem x = r->from_int(a);
                if (i == j && !form.contains(x)) continue;
                INFO(m << " " << lam << " " << family_name(f) << i << j << " " << a);
                IntMat o = oracle_gen(lam, f, 3, i, j, a);
                CHECK(oracle_gq(m, lam, o));
                CHECK(elem_gen_eval(form, 3, {f, i, j, x}) == to_matrix(*r, o));
              }
            }
    }
}

TEST_CASE("generators: GQ membership, additivity and inverse law") {
  Rng rng(21);
  for (const auto& form : test_forms()) {
    const Ring& r = *form.ring();
    INFO(r.name() << " " << form.tag());
    for (int s = 0; s < 300; ++s) {
      ElemGen g = random_elem_gen(form, 3, rng);
      ElemGen h = random_elem_gen(form, 3, rng);
      h.family = g.family;
      h.i = g.i;
      h.j = g.j;
      if (g.i == g.j) h.a = g.family == Family::QR ? form.bar().sample(rng) : form.sample(rng);
      Matrix mg = elem_gen_eval(form, 3, g);
      CHECK(gq_member(r, form.lambda(), mg));
      ElemGen sum = g;
      sum.a = r.add(g.a, h.a);
      CHECK(mat_mul(r, mg, elem_gen_eval(form, 3, h)) == elem_gen_eval(form, 3, sum));
      ElemGen neg = g;
      neg.a = r.neg(g.a);
      CHECK(is_inverse_pair(r, mg, elem_gen_eval(form, 3, neg)));
    }
  }
}

TEST_CASE("words") {
  auto r = make_modular(4, 1);
  auto form = FormParameter::max(r);
  CHECK(word_eval(form, ElemWord{3, {}}) == identity(*r, 6));
  ElemWord w{3, {{ElemGen{Family::QE, 1, 2, el(*r, "1")}}, {ElemGen{Family::QE, 1, 2, el(*r, "3")}}}};
  CHECK(word_eval(form, w) == identity(*r, 6));

  Rng rng(5);
  auto g = make_gaussian(5, "1");
  auto gf = FormParameter::max(g);
  for (int s = 0; s < 50; ++s) {
    ElemWord rw = random_word(gf, 3, 12, rng);
    CHECK(rw.factors.size() == 12);
    Matrix v = word_eval(gf, rw);
    CHECK(gq_member(*g, g->lambda(), v));
    CHECK(mat_mul(*g, v, word_eval(gf, word_inverse(*g, rw))) == identity(*g, 6));
  }
}

TEST_CASE("relative generators") {
  auto r = make_modular(4, 1);
  auto form = FormParameter::max(r);
  auto j = ideal_of(r, {"2"});
  RelGen g{ElemWord{3, {{ElemGen{Family::QE, 1, 2, el(*r, "1")}}}}, ElemGen{Family::QE, 2, 1, el(*r, "2")}};
  Matrix m = rel_gen_eval(form, 3, g, j);
  CHECK(gq_member(*r, r->lambda(), m));
  CHECK(rel_congruent(*r, m, j));
  CHECK(m != identity(*r, 6));
  // Entrywise residue oracle: m - I is 0 mod 2.
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      long v = std::stol(r->format(r->sub(m(a, b), a == b ? r->one() : r->zero())));
      CHECK(v % 2 == 0);
    }
  RelGen zero = g;
  zero.core.a = r->zero();
  CHECK(rel_gen_eval(form, 3, zero, j) == identity(*r, 6));
  RelGen bad = g;
  bad.core.a = r->one();
  CHECK(kind_of([&] { rel_gen_eval(form, 3, bad, j); }) == ErrorKind::ParameterNotInIdeal);
  ElemWord w{3, {{g}}};
  CHECK(kind_of([&] { word_eval(form, w); }) == ErrorKind::MalformedWord);

  Rng rng(8);
  for (const auto& f : {FormParameter::min(r), FormParameter::max(make_modular(4, 3))}) {
    auto jj = ideal_of(f.ring(), {"2"});
    for (int s = 0; s < 100; ++s) {
      ElemWord rw = random_relative_word(f, jj, 3, 4, rng);
      Matrix v = word_eval(f, rw, &jj);
      CHECK(gq_member(*f.ring(), f.lambda(), v));
      CHECK(rel_congruent(*f.ring(), v, jj));
    }
  }
}

TEST_CASE("tilde, inner and m_op") {
  auto r = make_modular(4, 1);
  auto form = FormParameter::max(r);
  HVector e1 = basis_vector(*r, 6, 0), e2 = basis_vector(*r, 6, 1), e4 = basis_vector(*r, 6, 3);
  Matrix t = tilde(*r, r->lambda(), e1);
  CHECK(t.rows() == 1);
  for (std::size_t k = 0; k < 6; ++k) CHECK(t(0, k) == (k == 3 ? r->one() : r->zero()));
  CHECK(r->is_zero(inner(*r, r->lambda(), e1, e2)));
  CHECK(r->is_zero(inner(*r, r->lambda(), e1, e1)));
  CHECK(r->is_one(inner(*r, r->lambda(), e1, e4)));
  Matrix im = mat_add(*r, identity(*r, 6), m_op(*r, r->lambda(), e1, e2));
  CHECK(im == elem_gen_eval(form, 3, {Family::QR, 1, 2, r->one()}));
  HVector zero(6, r->zero());
  CHECK(is_zero_matrix(*r, m_op(*r, r->lambda(), e1, zero)));
  CHECK(kind_of([&] { inner(*r, r->lambda(), e1, HVector(4, r->zero())); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("key_lemma_check: examples") {
  auto r = make_modular(4, 1);
  auto form = FormParameter::max(r);
  auto j = ideal_of(r, {"2"});
  HVector e1 = basis_vector(*r, 6, 0), e2 = basis_vector(*r, 6, 1), e4 = basis_vector(*r, 6, 3);
  CHECK(key_lemma_check(form, e1, scale_vector(*r, e2, el(*r, "2")), j).passed());
  CHECK(key_lemma_check(form, e1, HVector(6, r->zero()), j).passed());
  CHECK(kind_of([&] { key_lemma_check(form, e1, e4, j); }) == ErrorKind::PreconditionFailed);
  CHECK(kind_of([&] { key_lemma_check(form, e1, e2, j); }) == ErrorKind::PreconditionFailed);
}

TEST_CASE("key lemma consequences on orbit vectors") {
  Rng rng(13);
  // Involution-invariant ideals only; in (Z/5)[i] those are 0 and the whole ring.
  std::vector<std::pair<FormParameter, std::string>> cases{{FormParameter::max(make_modular(4, 3)), "2"},
                                                           {FormParameter::min(make_modular(8, 7)), "2"},
                                                           {FormParameter::max(make_modular(9, 1)), "3"},
                                                           {FormParameter::max(make_gaussian(5, "1")), "1"}};
  for (const auto& [form, jgen] : cases) {
    const Ring& r = *form.ring();
    auto j = ideal_of(form.ring(), {jgen});
    INFO(r.name());
    for (int s = 0; s < 150; ++s) {
      Matrix e = word_eval(form, random_word(form, 3, 6, rng));
      HVector v = column(e, 0);
      HVector x(6, r.zero());
      x[0] = j.random_member(rng);
      for (std::size_t k = 1; k < 3; ++k) x[draw(rng, 2) ? k : k + 3] = j.random_member(rng);
      HVector w(6, r.zero());
      for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b) w[a] = r.add(w[a], r.mul(e(a, b), x[b]));
      CHECK(key_lemma_check(form, v, w, j).passed());
    }
  }
}

TEST_CASE("key lemma congruence needs an involution-invariant ideal") {
  auto g = make_gaussian(5, "1");
  auto j = ideal_of(g, {"1+2i"});
  HVector v = basis_vector(*g, 2, 0);
  HVector w = scale_vector(*g, basis_vector(*g, 2, 0), el(*g, "1+2i"));
  auto rep = key_lemma_check(FormParameter::max(g), v, w, j);
  CHECK(rep.in_gq);
  CHECK_FALSE(rep.congruent);
}

TEST_CASE("conditions: examples") {
  auto z = make_integers(-1);
  auto zmax = FormParameter::max(z);
  auto alpha = mat(*z, {{"2", "1"}, {"1", "1"}});
  CHECK(lambda_quadratic_conditions(zmax, hyperbolic(*z, alpha)).all());

  auto px = make_polynomial(z);
  auto pmax = FormParameter::max(px);
  Matrix k = mat(*px, {{"1-2X", "4X"}, {"-X", "1+2X"}});
  CHECK(lambda_quadratic_conditions(pmax, k).all());
  CHECK(is_lambda_quadratic(pmax, k));

  auto zmin = FormParameter::min(z);
  auto cond = lambda_quadratic_conditions(zmin, mat(*z, {{"1", "1"}, {"0", "1"}}));
  CHECK_FALSE(cond.holds[1]);
  CHECK(cond.none());
  CHECK(kind_of([&] { lambda_quadratic_conditions(zmin, identity(*z, 3)); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("conditions agree on words and on perturbed matrices") {
  Rng rng(17);
  std::size_t members = 0, outsiders = 0;
  for (const auto& form : test_forms()) {
    const Ring& r = *form.ring();
    INFO(r.name() << " " << form.tag());
    for (int s = 0; s < 40; ++s) {
      Matrix m = word_eval(form, random_word(form, 2, 8, rng));
      auto c = lambda_quadratic_conditions(form, m);
      CHECK(c.all());
      ++members;
      Matrix p = m;
      std::size_t a = draw(rng, 4), b = draw(rng, 4);
      Elem delta = r.random(rng);
      if (r.is_zero(delta)) delta = r.one();
      p(a, b) = r.add(p(a, b), delta);
      auto cp = lambda_quadratic_conditions(form, p);
      CHECK(cp.agree());
      if (cp.holds[0]) CHECK(gq_member(r, form.lambda(), p));
      CHECK(cp.holds[0] == cp.holds[1]);
      ++outsiders;
    }
  }
  CHECK(members >= 300);
  CHECK(outsiders >= 300);
}

TEST_CASE("hermitian predicates") {
  auto z = make_integers(-1);
  CHECK(hermitian_check(FormParameter::max(z), mat(*z, {{"3", "-2"}, {"-2", "7"}})));
  auto z1 = make_integers(1);
  CHECK(hermitian_check(FormParameter::min(z1), mat(*z1, {{"0", "1"}, {"-1", "0"}})));
  CHECK_FALSE(hermitian_check(FormParameter::min(z1), mat(*z1, {{"0", "1"}, {"1", "0"}})));
  CHECK_FALSE(hermitian_check(FormParameter::min(z), mat(*z, {{"1"}})));
  CHECK(hermitian_bar_check(FormParameter::max(z), mat(*z, {{"1"}})));
}

TEST_CASE("g* alpha g stays Lambda-Hermitian") {
  Rng rng(19);
  for (const auto& form : test_forms()) {
    const Ring& r = *form.ring();
    INFO(r.name() << " " << form.tag());
    for (int s = 0; s < 40; ++s) {
      Matrix beta = random_hermitian(form, 3, rng);
      REQUIRE(hermitian_check(form, beta));
      Matrix g = random_elementary_block(r, 3, rng);
      CHECK(hermitian_check(form, mat_mul(r, mat_mul(r, mat_star(r, g), beta), g)));
      Matrix any = random_square(r, 3, rng);
      CHECK(hermitian_check(form, mat_mul(r, mat_mul(r, mat_star(r, any), beta), any)));
    }
  }
}

TEST_CASE("hyperbolic, t12 and t21") {
  auto z = make_integers(-1);
  auto zmax = FormParameter::max(z);
  CHECK(hyperbolic(*z, identity(*z, 2)) == identity(*z, 4));
  Matrix t = t12(zmax, mat(*z, {{"1"}}));
  CHECK(t == mat(*z, {{"1", "1"}, {"0", "1"}}));
  CHECK(is_lambda_quadratic(zmax, t));
  auto z1 = make_integers(1);
  CHECK(kind_of([&] { t12(FormParameter::min(z1), mat(*z1, {{"1"}})); }) == ErrorKind::NotHermitian);
  CHECK(kind_of([&] { t21(FormParameter::min(z), mat(*z, {{"1"}})); }) == ErrorKind::NotHermitian);
  CHECK(kind_of([&] { hyperbolic(*z, mat(*z, {{"2"}})); }) == ErrorKind::NotInvertible);
  CHECK(t21(zmax, mat(*z, {{"5"}})) == mat(*z, {{"1", "0"}, {"5", "1"}}));
  Matrix h = hyperbolic(*z, mat(*z, {{"2", "1"}, {"1", "1"}}));
  CHECK(block(h, 2, 2, 2, 2) == mat(*z, {{"1", "-1"}, {"-1", "2"}}));

  Rng rng(23);
  for (const auto& form : test_forms()) {
    const Ring& r = *form.ring();
    for (int s = 0; s < 30; ++s) {
      Matrix g = random_hermitian(form, 2, rng);
      CHECK(lambda_quadratic_conditions(form, t21(form, g)).all());
      Matrix b = random_hermitian(form.bar(), 2, rng);
      CHECK(lambda_quadratic_conditions(form, t12(form, b)).all());
      CHECK(lambda_quadratic_conditions(form, hyperbolic(r, random_elementary_block(r, 2, rng))).all());
    }
  }
}

TEST_CASE("transvection: examples") {
  auto r = make_modular(4, 1);
  auto form = FormParameter::max(r);
  HVector e1 = basis_vector(*r, 6, 0), e2 = basis_vector(*r, 6, 1), e4 = basis_vector(*r, 6, 3);
  Matrix t = transvection_matrix(form, e1, e2, r->zero());
  CHECK(t == elem_gen_eval(form, 3, {Family::QR, 1, 2, r->one()}));
  Rng rng(2);
  HVector u(6, r->zero());
  for (auto& x : u) x = r->random(rng);
  for (std::size_t k = 0; k < 6; ++k)
    CHECK(transvection_apply(form, e1, HVector(6, r->zero()), r->zero(), basis_vector(*r, 6, k)) ==
          basis_vector(*r, 6, k));
  CHECK(kind_of([&] { transvection_apply(form, e1, e4, r->zero(), e1); }) == ErrorKind::PreconditionFailed);
}

TEST_CASE("transvections on standard pairs equal elementary generators") {
  Rng rng(29);
  for (const auto& form : test_forms()) {
    const Ring& r = *form.ring();
    const Elem& lam = form.lambda();
    INFO(r.name() << " " << form.tag());
    const std::size_t n = 3;
    auto e = [&](std::size_t k) { return basis_vector(r, 2 * n, k - 1); };
    for (int s = 0; s < 5; ++s)
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
          Elem c = r.random(rng);
          if (i != j) {
            CHECK(transvection_matrix(form, e(i), scale_vector(r, e(j), c), r.zero()) ==
                  elem_gen_eval(form, n, {Family::QR, i, j, r.conj(c)}));
            CHECK(transvection_matrix(form, e(n + i), scale_vector(r, e(n + j), c), r.zero()) ==
                  elem_gen_eval(form, n, {Family::QL, i, j, r.mul(lam, r.conj(c))}));
            CHECK(transvection_matrix(form, e(i), scale_vector(r, e(n + j), c), r.zero()) ==
                  elem_gen_eval(form, n, {Family::QE, i, j, r.mul(lam, r.conj(c))}));
          } else {
            Elem a = form.sample(rng);
            CHECK(transvection_matrix(form, e(i), HVector(2 * n, r.zero()), a) ==
                  elem_gen_eval(form, n, {Family::QR, i, i, r.neg(r.mul(r.conj(lam), a))}));
            CHECK(transvection_matrix(form, e(n + i), HVector(2 * n, r.zero()), a) ==
                  elem_gen_eval(form, n, {Family::QL, i, i, r.neg(a)}));
          }
        }
  }
}

TEST_CASE("random transvections land in GQ and preserve q") {
  Rng rng(31);
  for (const auto& form : test_forms()) {
    const Ring& r = *form.ring();
    if (!r.is_commutative()) continue;
    INFO(r.name() << " " << form.tag());
    for (int s = 0; s < 40; ++s) {
      HVector u(6, r.zero()), v(6, r.zero());
      for (std::size_t k = 0; k < 3; ++k) {
        u[k] = r.random(rng);
        v[k] = r.random(rng);
      }
      // Bottom half of v orthogonal to u: (conj(u_l) t, -conj(u_k) t) on a pair k, l.
      std::size_t k = draw(rng, 3), l = (k + 1 + draw(rng, 2)) % 3;
      Elem t = r.random(rng);
      v[3 + k] = r.mul(r.conj(u[l]), t);
      v[3 + l] = r.neg(r.mul(r.conj(u[k]), t));
      REQUIRE(r.is_zero(form_h(r, form.lambda(), u, v)));
      Elem a = r.sub(form_f(r, v, v), form.sample(rng));
      Matrix m = transvection_matrix(form, u, v, a);
      CHECK(gq_member(r, form.lambda(), m));
      CHECK(q_preserved(form, m, 20, rng));
      HVector x(6, r.zero());
      for (auto& xi : x) xi = r.random(rng);
      HVector mx(6, r.zero());
      for (std::size_t p = 0; p < 6; ++p)
        for (std::size_t q = 0; q < 6; ++q) mx[p] = r.add(mx[p], r.mul(m(p, q), x[q]));
      CHECK(transvection_apply(form, u, v, a, x) == mx);
    }
  }
}
