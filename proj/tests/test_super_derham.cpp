#include "generators.hpp"
#include "superalg/super_derham.hpp"

#include <doctest.h>

#include <numeric>

using namespace sa;

static OddConnection random_connection(Rng& rng, int m, int n, double density = 0.5) {
  OddConnection A = OddConnection::flat(m, n);
  for (auto& M : A.A)
    for (auto& row : M)
      for (auto& p : row)
        if (rng.coin(density)) p = gen::random_poly(rng, m, 1, 0.6);
  return A;
}

static SuperForm random_form(Rng& rng, int m, int n, int max_deg, int terms = 4) {
  SuperForm w(m, n);
  for (int t = 0; t < terms; ++t) {
    FormKey k{Mask(rng.uniform(0, int(full_mask(m)))), MultiDegree(n, 0), Mask(rng.uniform(0, int(full_mask(n)))),
              MultiDegree(m, 0)};
    int bdeg = rng.uniform(0, max_deg);
    for (int e = 0; e < bdeg && n > 0; ++e) ++k.b[rng.uniform(0, n - 1)];
    for (int e = rng.uniform(0, 2); e > 0 && m > 0; --e) ++k.x[rng.uniform(0, m - 1)];
    w.add(k, rng.small_integer(3));
  }
  return w;
}

static SuperForm homogeneous(const SuperForm& w, Parity p) {
  SuperForm r(w.m(), w.n());
  for (const auto& [k, c] : w.terms())
    if (k.parity() == p) r.add(k, c);
  return r;
}

// sgn σ · sgn⁻ σ for the permutation sorting the fields, computed from inversion counts
static int permutation_weight(const std::vector<int>& perm, const std::vector<bool>& odd) {
  int inv = 0, odd_inv = 0;
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) {
        ++inv;
        if (odd[perm[i]] && odd[perm[j]]) ++odd_inv;
      }
  return ((inv + odd_inv) % 2) ? -1 : 1;
}

TEST_CASE("form algebra is supercommutative and associative") {
  Rng rng(3);
  for (int t = 0; t < 30; ++t) {
    int m = rng.uniform(1, 3), n = rng.uniform(0, 2);
    SuperForm a = random_form(rng, m, n, 2), b = random_form(rng, m, n, 2), c = random_form(rng, m, n, 1);
    CHECK((a * b) * c == a * (b * c));
    for (Parity pa : {Parity::even, Parity::odd})
      for (Parity pb : {Parity::even, Parity::odd}) {
        SuperForm x = homogeneous(a, pa), y = homogeneous(b, pb);
        int s = (pa == Parity::odd && pb == Parity::odd) ? -1 : 1;
        CHECK(x * y == Scalar(s) * (y * x));
      }
  }
  SuperForm dx1 = SuperForm::dx(2, 1, 1), th = SuperForm::theta(2, 1, 1), vt = SuperForm::vartheta(2, 1, 1);
  CHECK((dx1 * dx1).is_zero());
  CHECK((th * th).is_zero());
  CHECK_FALSE((vt * vt).is_zero());
  CHECK(th * dx1 == Scalar(-1) * (dx1 * th));
  CHECK_THROWS_AS(SuperForm::dx(2, 1, 3), DomainError);
}

TEST_CASE("curvature of the base connection") {
  OddConnection A = OddConnection::flat(2, 1);
  A.A[0][0][0] = Poly::variable(2, 2);
  EndForm R = curvature(A);
  CHECK(R[0][0] == SymExt::monomial(2, 2, {0, 0}, 0b11, -1));
  CHECK(curvature_components(A).at({1, 2})[0][0] == Poly(2, -1));
  CHECK(curvature(OddConnection::flat(3, 2))[1][0].is_zero());

  Rng rng(5);
  for (int t = 0; t < 15; ++t) {
    int m = rng.uniform(1, 3), n = rng.uniform(1, 2);
    OddConnection B = random_connection(rng, m, n);
    EndForm Rf = curvature(B);
    auto comps = curvature_components(B);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (const auto& [ij, M] : comps)
          CHECK(Rf[a][b].coefficient_poly(single(ij.first) | single(ij.second)) == M[a][b]);
    BundleForm s;
    for (int a = 0; a < n; ++a) {
      SymExt f(m, m);
      for (Mask I = 0; I <= full_mask(m); ++I)
        if (card(I) <= 1) f += SymExt::from_poly(gen::random_poly(rng, m, 2), m) * SymExt::monomial(m, m, MultiDegree(m, 0), I);
      s.push_back(f);
    }
    CHECK(twisted_d(B, s) == twisted_d_koszul(B, s));
    CHECK(twisted_d(B, twisted_d(B, s)) == apply_end(Rf, s));
    EndForm bianchi = twisted_d_end(B, Rf, 2);
    bool all_zero = true;
    for (const auto& row : bianchi)
      for (const auto& f : row) all_zero = all_zero && f.is_zero();
    CHECK(all_zero);
  }
  OddConnection bad = OddConnection::flat(2, 2);
  bad.A.pop_back();
  CHECK_THROWS_AS(validate(bad), DomainError);
}

TEST_CASE("super differential examples") {
  SuperForm w = SuperForm::theta(1, 2, 1) * SuperForm::theta(1, 2, 2);
  SuperForm expected = SuperForm::vartheta(1, 2, 1) * SuperForm::theta(1, 2, 2) -
                       SuperForm::vartheta(1, 2, 2) * SuperForm::theta(1, 2, 1);
  CHECK(shift_left_id(w) == expected);
  CHECK(super_d(OddConnection::flat(1, 2), w) == expected);

  Rng rng(7);
  for (int t = 0; t < 10; ++t) {
    int m = rng.uniform(1, 3), n = rng.uniform(0, 2);
    OddConnection A = random_connection(rng, m, n);
    Poly f = gen::random_poly(rng, m, 3);
    SuperForm df(m, n);
    for (int i = 1; i <= m; ++i) df += SuperForm::dx(m, n, i) * SuperForm::function(f.derivative(i), n);
    CHECK(super_d(A, SuperForm::function(f, n)) == df);
  }
}

TEST_CASE("operator form agrees with the generator form") {
  Rng rng(11);
  for (int t = 0; t < 40; ++t) {
    int m = rng.uniform(1, 3), n = rng.uniform(0, 2);
    OddConnection A = t % 3 == 0 ? OddConnection::flat(m, n) : random_connection(rng, m, n);
    SuperForm w = random_form(rng, m, n, 2);
    CHECK(super_d(A, w) == super_d_leibniz(A, w));
  }
}

TEST_CASE("super differential squares to zero and obeys Leibniz") {
  Rng rng(13);
  for (int t = 0; t < 40; ++t) {
    int m = rng.uniform(1, 3), n = rng.uniform(0, 2);
    OddConnection A = t % 2 == 0 ? OddConnection::flat(m, n) : random_connection(rng, m, n);
    SuperForm a = random_form(rng, m, n, 2), b = random_form(rng, m, n, 1);
    CHECK(super_d(A, super_d(A, a)).is_zero());
    for (Parity pa : {Parity::even, Parity::odd}) {
      SuperForm x = homogeneous(a, pa);
      int s = pa == Parity::odd ? -1 : 1;
      CHECK(super_d(A, x * b) == super_d(A, x) * b + Scalar(s) * (x * super_d(A, b)));
    }
  }
}

TEST_CASE("bidegree of the super differential") {
  Rng rng(17);
  for (int t = 0; t < 20; ++t) {
    int m = rng.uniform(1, 3), n = rng.uniform(1, 2);
    FormKey k{Mask(rng.uniform(0, int(full_mask(m)))), MultiDegree(n, 0), Mask(rng.uniform(0, int(full_mask(n)))),
              gen::random_poly(rng, m, 2, 1.0).terms().rbegin()->first};
    ++k.b[rng.uniform(0, n - 1)];
    SuperForm w = SuperForm::monomial(m, n, k);
    int a = card(k.a), b = total_degree(k.b);
    for (const auto& bd : super_d(OddConnection::flat(m, n), w).bidegrees())
      CHECK((bd == std::make_pair(a + 1, b) || bd == std::make_pair(a, b + 1)));
    for (const auto& bd : super_d(random_connection(rng, m, n), w).bidegrees())
      CHECK((bd == std::make_pair(a + 1, b) || bd == std::make_pair(a, b + 1) || bd == std::make_pair(a + 2, b - 1)));
  }
  // a curved connection produces the (a+2, b-1) component
  OddConnection A = OddConnection::flat(2, 1);
  A.A[0][0][0] = Poly::variable(2, 2);
  SuperForm w = SuperForm::vartheta(2, 1, 1);
  CHECK(super_d(A, w).bidegrees().count({2, 0}) == 1);
  CHECK(curvature_shift(A, w) == Scalar(-1) * (SuperForm::dx(2, 1, 1) * SuperForm::dx(2, 1, 2) * SuperForm::theta(2, 1, 1)));
}

TEST_CASE("evaluation on frame fields") {
  int m = 2, n = 2;
  auto E = [&](int i) { return frame_field(m, n, false, i); };
  auto F = [&](int mu) { return frame_field(m, n, true, mu); };
  SymExt one(m, n, 1);
  CHECK(evaluate(SuperForm::dx(m, n, 1), {E(1)}) == one);
  CHECK(evaluate(SuperForm::dx(m, n, 1), {E(2)}).is_zero());
  SuperForm vv = SuperForm::vartheta(m, n, 1) * SuperForm::vartheta(m, n, 1);
  CHECK(evaluate(vv, {F(1), F(1)}) == Scalar(2) * one);
  SuperForm dd = SuperForm::dx(m, n, 1) * SuperForm::dx(m, n, 2);
  CHECK(evaluate(dd, {E(1), E(2)}) == one);
  CHECK(evaluate(dd, {E(2), E(1)}) == Scalar(-1) * one);
  SuperForm v12 = SuperForm::vartheta(m, n, 1) * SuperForm::vartheta(m, n, 2);
  CHECK(evaluate(v12, {F(1), F(2)}) == evaluate(v12, {F(2), F(1)}));

  Rng rng(19);
  for (int t = 0; t < 40; ++t) {
    SuperForm w = random_form(rng, m, n, 3, 6);
    int k = rng.uniform(1, 3);
    std::vector<FieldGen> fs;
    std::vector<bool> odd;
    for (int i = 0; i < k; ++i) {
      bool o = rng.coin();
      fs.push_back(o ? F(rng.uniform(1, n)) : E(rng.uniform(1, m)));
      odd.push_back(o);
    }
    SymExt base = evaluate(w, fs);
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<FieldGen> pf;
      for (int i : perm) pf.push_back(fs[i]);
      CHECK(evaluate(w, pf) == Scalar(permutation_weight(perm, odd)) * base);
    } while (std::next_permutation(perm.begin(), perm.end()));

    // pulling a superfunction coefficient out of one slot
    int j = rng.uniform(0, k - 1);
    SymExt h = gen::random_superfunc(rng, m, n, {rng.uniform(0, 1)}, 1, 0.6);
    if (h.is_zero()) continue;
    Parity hp;
    REQUIRE(h.homogeneous_parity(hp));
    std::vector<FieldGen> hf = fs;
    hf[j].coeff = h;
    CHECK(evaluate(w, hf) == Scalar(coefficient_pull_sign(fs, j, hp)) * (h * base));
  }
}

TEST_CASE("frame field brackets") {
  Rng rng(23);
  for (int t = 0; t < 10; ++t) {
    int m = 2, n = 2;
    OddConnection A = random_connection(rng, m, n);
    SymExt f = gen::random_superfunc(rng, m, n, {0, 1, 2}, 2, 0.5);
    std::vector<FieldGen> frame;
    for (int i = 1; i <= m; ++i) frame.push_back(frame_field(m, n, false, i));
    for (int mu = 1; mu <= n; ++mu) frame.push_back(frame_field(m, n, true, mu));
    for (const auto& X : frame)
      for (const auto& Y : frame) {
        int s = (X.odd && Y.odd) ? -1 : 1;
        SymExt lhs = act(A, X, act(A, Y, f)) - Scalar(s) * act(A, Y, act(A, X, f));
        SymExt rhs(m, n);
        for (const auto& Z : bracket(A, X, Y)) rhs += act(A, Z, f);
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("field formula agrees with the operator") {
  Rng rng(29);
  int nonzero = 0;
  for (int t = 0; t < 80; ++t) {
    int m = rng.uniform(1, 2), n = rng.uniform(1, 2);
    OddConnection A = t % 4 == 0 ? OddConnection::flat(m, n) : random_connection(rng, m, n);
    int deg = rng.uniform(0, 2);
    SuperForm w = random_form(rng, m, n, 2, 6).degree_part(deg);
    std::vector<FieldGen> fs;
    for (int i = 0; i <= deg; ++i)
      fs.push_back(rng.coin() ? frame_field(m, n, true, rng.uniform(1, n)) : frame_field(m, n, false, rng.uniform(1, m)));
    SymExt v = super_d_by_fields(A, w, fs);
    CHECK(v == evaluate(super_d(A, w), fs));
    nonzero += !v.is_zero();
  }
  CHECK(nonzero > 10);
  CHECK_THROWS_AS(super_d_by_fields(OddConnection::flat(1, 1), SuperForm(1, 1), {}), DomainError);
}

TEST_CASE("the Euler-type anticommutator") {
  DeltaReport flat = delta_kernel_check(OddConnection::flat(2, 1), 3);
  CHECK(flat.passed());
  CHECK(flat.euler);
  CHECK(flat.printed_vanishes);
  CHECK(flat.kernel_dim == flat.pure_dim);
  CHECK(flat.eigenvalues.front() == 0);

  Rng rng(31);
  OddConnection A = random_connection(rng, 2, 2, 0.8);
  DeltaReport curved = delta_kernel_check(A, 2);
  CHECK(curved.passed());
  // pure dx forms are exactly the kernel
  SuperForm w = SuperForm::dx(2, 2, 1) * SuperForm::function(Poly::variable(2, 2), 2);
  CHECK(delta_operator(A, w).is_zero());
  SuperForm v = SuperForm::vartheta(2, 2, 1) * SuperForm::theta(2, 2, 2);
  CHECK(delta_operator(A, v) == Scalar(2) * v);
}

TEST_CASE("truncated cohomology") {
  CHECK(cohomology_dim(OddConnection::flat(1, 1), 1, 3) == 0);
  CHECK(cohomology_dim(OddConnection::flat(1, 1), 0, 3) == 1);
  CHECK(cohomology_dim(OddConnection::flat(2, 1), 0, 2) == 1);
  CHECK(cohomology_dim(OddConnection::flat(2, 1), 1, 2) == 0);
  CHECK(cohomology_dim(OddConnection::flat(2, 1), 2, 2) == 0);
  Rng rng(37);
  OddConnection A = random_connection(rng, 2, 1, 0.9);
  for (int k = 0; k <= 2; ++k) CHECK(cohomology_dim(A, k, 3) == (k == 0 ? 1 : 0));
  CHECK_THROWS_AS(cohomology_dim(A, -1, 2), DomainError);
}
