#include "oracles.hpp"
#include "superalg/super_tensor.hpp"

#include <doctest.h>

using namespace sa;

static Permutation swap2() { return Permutation{{2, 1}}; }

TEST_CASE("odd signature") {
  SuperSpace V{2, 2};
  CHECK(odd_signature(Permutation{{2, 3, 1}}, V, {{1, 2, 1}}) == 1);
  CHECK(odd_signature(swap2(), V, {{3, 4}}) == -1);
  CHECK(odd_signature(swap2(), V, {{1, 3}}) == 1);
  CHECK_THROWS_AS(odd_signature(swap2(), V, {{1, 2, 3}}), DomainError);
}

TEST_CASE("twisted actions on two-factor words") {
  SuperSpace V{2, 2};
  TensorWord xx{{3, 4}}, vv{{1, 2}};
  CHECK(act_sym(Permutation::identity(2), V, xx) == xx);
  CHECK(act_sym(swap2(), V, xx) == TensorWord{{4, 3}, -1});
  CHECK(act_sym(swap2(), V, vv) == TensorWord{{2, 1}, 1});
  CHECK(act_alt(Permutation::identity(2), V, xx) == xx);
  CHECK(act_alt(swap2(), V, xx) == TensorWord{{4, 3}, 1});
  CHECK(act_alt(swap2(), V, vv) == TensorWord{{2, 1}, -1});
}

TEST_CASE("twisted actions are group actions") {
  Rng rng(7);
  SuperSpace V{2, 3};
  for (int t = 0; t < 200; ++t) {
    int k = rng.uniform(1, 5);
    TensorWord w;
    for (int i = 0; i < k; ++i) w.factors.push_back(rng.uniform(1, V.size()));
    auto s = rng.permutation(k), u = rng.permutation(k);
    CHECK(act_sym(compose(s, u), V, w) == act_sym(s, V, act_sym(u, V, w)));
    CHECK(act_alt(compose(s, u), V, w) == act_alt(s, V, act_alt(u, V, w)));
  }
}

TEST_CASE("supersymmetric normal form") {
  SuperSpace V{1, 2};
  CHECK(normalize_supersym(V, {{2, 1}}) == SymExt::monomial(1, 2, {1}, single(1)));
  CHECK(normalize_supersym(V, {{3, 2}}) == SymExt::monomial(1, 2, {0}, mask_of({1, 2}, 2), -1));
  CHECK(normalize_supersym(V, {{2, 2}}).is_zero());
  CHECK(normalize_supersym(V, {{1, 1}}) == SymExt::monomial(1, 2, {2}, 0));
}

TEST_CASE("superexterior normal form") {
  SuperSpace V{2, 2};
  CHECK(normalize_superext(V, {{1, 1}}).is_zero());
  CHECK(normalize_superext(V, {{4, 3}}) == SymExt::monomial(2, 2, {1, 1}, 0));
  CHECK(normalize_superext(V, {{2, 1}}) == SymExt::monomial(2, 2, {0, 0}, mask_of({1, 2}, 2), -1));
}

TEST_CASE("actions descend to the quotients") {
  for (int e = 0; e <= 2; ++e)
    for (int o = 0; o <= 2; ++o) {
      SuperSpace V{e, o};
      for (int k = 1; k <= 3; ++k)
        for (const auto& w : all_words(V, k)) {
          auto ns = normalize_supersym(V, w);
          auto ne = normalize_superext(V, w);
          for (const auto& s : all_permutations(k)) {
            CHECK(normalize_supersym(V, act_sym(s, V, w)) == ns);
            CHECK(normalize_superext(V, act_alt(s, V, w)) == ne);
          }
        }
    }
}

TEST_CASE("quotient dimensions match the binomial sums") {
  for (int e = 0; e <= 3; ++e)
    for (int o = 0; o <= 3; ++o)
      for (int k = 0; k <= 3; ++k) {
        SuperSpace V{e, o};
        long sym = 0, ext = 0;
        for (int a = 0; a <= k; ++a) {
          sym += oracle::sym_count(e, a) * oracle::choose(o, k - a);
          ext += oracle::choose(e, a) * oracle::sym_count(o, k - a);
        }
        CHECK(count_supersym_normal_forms(V, k) == sym);
        CHECK(count_superext_normal_forms(V, k) == ext);
        CHECK(supersym_dim_formula(V, k) == sym);
        CHECK(superext_dim_formula(V, k) == ext);
      }
}

TEST_CASE("super wedge is factorwise") {
  int o = 1, e = 2;
  auto x1 = SymExt::ext_generator(o, e, 1), x2 = SymExt::ext_generator(o, e, 2);
  auto s1 = SymExt::sym_generator(o, e, 1);
  CHECK(super_wedge(x1, x2) == SymExt::monomial(o, e, {0}, 3));
  CHECK(super_wedge(x1 * s1, s1) == SymExt::monomial(o, e, {2}, 1));
  CHECK(super_wedge(x1, x1).is_zero());
  Parity p;
  REQUIRE(super_wedge(x1 * s1, x2).homogeneous_parity(p));
  CHECK(p == Parity::even);
}

TEST_CASE("super insert") {
  SuperSpace V{2, 1};
  auto w = SymExt::monomial(1, 2, {0}, 3);
  CHECK(super_insert(V, {1, 0, 0}, w) == SymExt::ext_generator(1, 2, 2));
  CHECK(super_insert(V, {0, 0, 1}, SymExt::monomial(1, 2, {2}, 0)) == SymExt::monomial(1, 2, {1}, 0, 2));
  CHECK(super_insert(V, {0, 0, 1}, SymExt(1, 2, 1)).is_zero());
  CHECK_THROWS_AS(super_insert(V, {1, 0, 1}, w), DomainError);
}

static SymExt random_homogeneous(Rng& rng, const SuperSpace& V, Parity p) {
  SymExt r = zero_superext(V);
  for (int d = 0; d <= 2; ++d)
    for (const auto& md : multidegrees(V.odd_dim, d))
      for (Mask m = 0; m <= full_mask(V.even_dim); ++m)
        if (parity_of(card(m)) == p && rng.coin(0.3)) r.add(md, m, rng.small_rational());
  return r;
}

TEST_CASE("rule of signs for insertion and left multiplication") {
  Rng rng(12);
  SuperSpace V{3, 2};
  for (int t = 0; t < 60; ++t) {
    Parity px = rng.coin() ? Parity::odd : Parity::even;
    std::vector<Scalar> x(V.size());
    for (int g = 1; g <= V.size(); ++g)
      if (V.parity(g) == px) x[g - 1] = rng.small_rational();
    Parity pa = rng.coin() ? Parity::odd : Parity::even;
    auto a = random_homogeneous(rng, V, pa);
    auto b = random_homogeneous(rng, V, rng.coin() ? Parity::odd : Parity::even);
    // insertion by x shifts the total parity by |x|+1
    int tpar = (as_int(px) + 1) % 2;
    auto lhs = super_insert(V, x, super_wedge(a, b));
    auto rhs = super_wedge(super_insert(V, x, a), b) +
               Scalar(sign_pow(tpar * as_int(pa))) * super_wedge(a, super_insert(V, x, b));
    CHECK(lhs == rhs);
    // left multiplication by c is a homogeneous operator of parity |c| obeying the same rule
    Parity pc = rng.coin() ? Parity::odd : Parity::even;
    auto c = random_homogeneous(rng, V, pc);
    auto L = [&](const SymExt& y) { return super_wedge(c, y); };
    CHECK(L(super_wedge(a, b)) == Scalar(sign_pow(as_int(pc) * as_int(pa))) * super_wedge(a, L(b)));
  }
}

TEST_CASE("alternating action carries only the exterior sign") {
  SuperSpace V{3, 3};
  Rng rng(4);
  for (int t = 0; t < 60; ++t) {
    int k = rng.uniform(2, 5);
    TensorWord w;
    for (int i = 0; i < k; ++i) w.factors.push_back(rng.uniform(1, V.size()));
    std::vector<int> ev, od;
    for (int i = 1; i <= k; ++i) (V.parity(w.factors[i - 1]) == Parity::even ? ev : od).push_back(i);
    // permutation preserving the even slots and the odd slots
    auto pe = ev, po = od;
    std::shuffle(pe.begin(), pe.end(), rng.engine());
    std::shuffle(po.begin(), po.end(), rng.engine());
    Permutation s = Permutation::identity(k);
    for (size_t i = 0; i < ev.size(); ++i) s.img[ev[i] - 1] = pe[i];
    for (size_t i = 0; i < od.size(); ++i) s.img[od[i] - 1] = po[i];
    std::vector<int> even_images;
    for (int i : ev) even_images.push_back(s(i));
    CHECK(act_alt(s, V, w).coeff == oracle::bubble_sign(even_images));
  }
}
