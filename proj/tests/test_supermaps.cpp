#include "generators.hpp"
#include "superalg/supermaps.hpp"

#include <doctest.h>

using namespace sa;

static PolySuperFunc xs(int m, int p, int i) { return SymExt::sym_generator(m, p, i); }
static PolySuperFunc ds(int m, int p, int a) { return SymExt::ext_generator(m, p, a); }

// Φ(y) = x + ds1 ds2 from R^1|2 to R^1|0
static SuperMapData shifted_line() {
  return SuperMapData{1, 0, 1, 2, {xs(1, 2, 1) + ds(1, 2, 1) * ds(1, 2, 2)}, {}};
}

static SuperMapData witness() {
  return SuperMapData{2, 0, 2, 4,
                      {xs(2, 4, 1) + ds(2, 4, 1) * ds(2, 4, 2), xs(2, 4, 2) + ds(2, 4, 3) * ds(2, 4, 4)},
                      {}};
}

TEST_CASE("applying a supermap") {
  SuperMapData id = identity_map(2, 3);
  Rng rng(3);
  for (int t = 0; t < 10; ++t) {
    PolySuperFunc f = gen::random_superfunc(rng, 2, 3, {0, 1, 2, 3}, 2);
    CHECK(sa::apply(id, f) == f);
  }
  SuperMapData L = shifted_line();
  PolySuperFunc y2 = SymExt::sym_generator(1, 0, 1) * SymExt::sym_generator(1, 0, 1);
  PolySuperFunc expected = xs(1, 2, 1) * xs(1, 2, 1) + Scalar(2) * xs(1, 2, 1) * ds(1, 2, 1) * ds(1, 2, 2);
  CHECK(sa::apply(L, y2) == expected);
  CHECK(sa::apply(L, PolySuperFunc(1, 0, 1)) == PolySuperFunc(1, 2, 1));

  SuperMapData bad = identity_map(1, 1);
  bad.odd_images[0] += PolySuperFunc(1, 1, 1);
  CHECK_THROWS_AS(validate(bad), DomainError);
  bad = identity_map(1, 1);
  bad.coord_images[0] += ds(1, 1, 1);
  CHECK_THROWS_AS(validate(bad), DomainError);
}

TEST_CASE("supermaps are unital algebra morphisms compatible with evaluation") {
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    int n = rng.uniform(1, 2), q = rng.uniform(0, 3), m = rng.uniform(1, 2), p = rng.uniform(0, 4);
    SuperMapData Phi = gen::random_supermap(rng, n, q, m, p);
    validate(Phi);
    PolySuperFunc f = gen::random_superfunc(rng, n, q, {0, 1, 2}, 2), g = gen::random_superfunc(rng, n, q, {0, 1}, 1);
    CHECK(sa::apply(Phi, f * g) == sa::apply(Phi, f) * sa::apply(Phi, g));
    CHECK(sa::apply(Phi, f + g) == sa::apply(Phi, f) + sa::apply(Phi, g));
    // ε∘Φ = φ*∘ε
    CHECK(sa::apply(Phi, f).body() == f.body().compose(base_map(Phi)));
  }
}

TEST_CASE("twisted commutators and the order bound") {
  SuperMapData L = shifted_line();
  Rng rng(7);
  auto rep = order_bound_check(L, rng);
  CHECK(rep.bound == 1);
  CHECK(rep.passed());
  CHECK(rep.observed == 1);
  for (int t = 0; t < 10; ++t) {
    std::vector<Poly> fs{gen::random_poly(rng, 1, 3), gen::random_poly(rng, 1, 3)};
    CHECK(twisted_commutator(L, fs, PolySuperFunc(1, 0, 1)).is_zero());
  }

  SuperMapData lift = exterior_lift({Poly::variable(2, 1) * Poly::variable(2, 2)},
                                    {{Poly::variable(2, 1)}, {Poly(2, 1)}}, 2);
  auto r0 = order_bound_check(lift, rng);
  CHECK(r0.passed());
  CHECK(r0.observed == 0);

  SuperMapData W = witness();
  auto rw = order_bound_check(W, rng);
  CHECK(rw.bound == 2);
  CHECK(rw.observed == 2);
  CHECK(rw.passed());
  std::vector<Poly> ys{Poly::variable(2, 1), Poly::variable(2, 2)};
  CHECK_FALSE(twisted_commutator(W, ys, PolySuperFunc(2, 0, 1)).is_zero());
  ys.push_back(Poly::variable(2, 1));
  CHECK(twisted_commutator(W, ys, PolySuperFunc(2, 0, 1)).is_zero());

  for (int t = 0; t < 15; ++t) {
    int p = rng.uniform(0, 5);
    SuperMapData Phi = gen::random_supermap(rng, rng.uniform(1, 2), rng.uniform(0, 2), rng.uniform(1, 2), p);
    auto r = order_bound_check(Phi, rng, 4);
    CHECK(r.paths_agree);
    CHECK(r.vanishes_beyond);
  }
}

TEST_CASE("filtration and induced grade maps") {
  Rng rng(11);
  for (int t = 0; t < 15; ++t) {
    SuperMapData Phi = gen::random_supermap(rng, rng.uniform(1, 2), rng.uniform(0, 3), rng.uniform(1, 2),
                                            rng.uniform(0, 4));
    CHECK(filtration_check(Phi).passed);
    PolyMatrix F1 = induced_grade_map(Phi, 1), F2 = induced_grade_map(Phi, 2);
    // Λ²(Φ¹) by 2 × 2 minors
    auto rows = subsets_of_size(Phi.p, 2), cols = subsets_of_size(Phi.q, 2);
    for (size_t i = 0; i < rows.size(); ++i)
      for (size_t j = 0; j < cols.size(); ++j) {
        auto r = indices(rows[i]), c = indices(cols[j]);
        Poly minor = F1[r[0] - 1][c[0] - 1] * F1[r[1] - 1][c[1] - 1] - F1[r[0] - 1][c[1] - 1] * F1[r[1] - 1][c[0] - 1];
        CHECK(F2[i][j] == minor);
      }
  }
  SuperMapData id = identity_map(1, 3);
  PolyMatrix I1 = induced_grade_map(id, 1);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(I1[i][j] == Poly(1, i == j ? 1 : 0));

  SuperMapData S = identity_map(1, 3);
  S.odd_images[0] += ds(1, 3, 1) * ds(1, 3, 2) * ds(1, 3, 3);
  CHECK(filtration_check(S).passed);
  CHECK(induced_grade_map(S, 1)[0][0] == Poly(1, 1));
  CHECK(induced_grade_map(S, 1) == I1);
  CHECK_FALSE(order_zero_criterion(S).order_zero());
}

TEST_CASE("auxiliary codifferential") {
  SuperMapData L = shifted_line();
  ExtElem a = aux_codifferential(L, Poly::variable(1, 1), {Scalar(2)});
  CHECK(a == ExtElem::monomial(2, 3));
  CHECK(aux_codifferential(L, Poly(1, 7), {Scalar(2)}).is_zero());
  SuperMapData lift = exterior_lift({Poly::variable(1, 1)}, {{Poly(1, 1)}, {Poly::variable(1, 1)}}, 2);
  CHECK(aux_codifferential(lift, pow(Poly::variable(1, 1), 3), {Scalar(1)}).is_zero());

  Rng rng(13);
  for (int t = 0; t < 20; ++t) {
    int n = rng.uniform(1, 2), m = rng.uniform(1, 2);
    SuperMapData Phi = gen::random_supermap(rng, n, 1, m, rng.uniform(2, 4));
    Poly f = gen::random_poly(rng, n, 2), g = gen::random_poly(rng, n, 2);
    std::vector<Scalar> pt;
    for (int i = 0; i < m; ++i) pt.push_back(rng.small_rational());
    std::vector<Scalar> img;
    for (const auto& ph : base_map(Phi)) img.push_back(ph.eval(pt));
    ExtElem lhs = aux_codifferential(Phi, f * g, pt);
    ExtElem rhs = g.eval(img) * aux_codifferential(Phi, f, pt) + f.eval(img) * aux_codifferential(Phi, g, pt);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("order zero criterion") {
  SuperMapData lift = exterior_lift({Poly::variable(2, 1), Poly::variable(2, 1) * Poly::variable(2, 2)},
                                    {{Poly::variable(2, 2), Poly(2, 1)}, {Poly(2), Poly::variable(2, 1)}}, 2);
  CHECK(order_zero_criterion(lift).order_zero());
  CHECK_FALSE(order_zero_criterion(shifted_line()).order_zero());
  CHECK_FALSE(order_zero_criterion(shifted_line()).coordinate_images_plain);

  Rng rng(17);
  for (int t = 0; t < 20; ++t) {
    bool nil = rng.coin();
    SuperMapData Phi = gen::random_supermap(rng, 2, 2, 2, 3, nil);
    auto rep = order_zero_criterion(Phi);
    if (!nil) CHECK(rep.order_zero());
    if (rep.order_zero()) {
      Poly f = gen::random_poly(rng, 2, 2);
      PolySuperFunc eta = gen::random_superfunc(rng, 2, 2, {0, 1, 2}, 1);
      CHECK(sa::apply(Phi, SymExt::from_poly(f, 2) * eta) == pull_body(Phi, f) * sa::apply(Phi, eta));
    }
  }
}
