#include "acceptance_suite.hpp"

#include "generators.hpp"
#include "oracles.hpp"
#include "superalg/cartan_poincare.hpp"
#include "superalg/derivations.hpp"
#include "superalg/polydiff_jets.hpp"
#include "superalg/super_derham.hpp"
#include "superalg/super_tensor.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

namespace acceptance {

using namespace sa;

namespace {

struct Tally {
  long cases = 0;
  long failures = 0;
  std::string first_failure;
  void check(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    if (!failures) first_failure = what;
    ++failures;
  }
};

int scale(Budget b) { return b == Budget::medium ? 2 : 1; }

ExtElem random_of_parity(Rng& rng, int n, Parity p) {
  ExtElem a(n);
  for (Mask m = 0; m <= full_mask(n); ++m)
    if (parity_of(card(m)) == p && rng.coin(0.4)) a.add(m, rng.small_rational());
  return a;
}

void derivation_dimensions(Rng&, Budget, Tally& t) {
  for (int n = 1; n <= 4; ++n) {
    DerivationDims b = brute_force_derivation_dims(n);
    long half = 1L << (n - 1);
    long formula = n * half + half - (n % 2);
    std::string at = "n=" + std::to_string(n);
    t.check(b.all == formula, at + " brute force " + std::to_string(b.all));
    t.check(dimension_of_derivation_space(n, DerivationGrading::all) == formula, at + " library");
    t.check(b.even + b.odd == n * (1L << n), at + " graded sum");
    t.check(dimension_of_superderivations(n) == b.even + b.odd, at + " library graded");
  }
}

void classification_roundtrip(Rng& rng, Budget b, Tally& t) {
  for (int i = 0; i < 200 * scale(b); ++i) {
    int n = rng.uniform(1, 4);
    auto F = GenImageMap::zero(n);
    for (auto& e : F.images) e = random_of_parity(rng, n, Parity::odd);
    ExtElem eta = random_of_parity(rng, n, Parity::odd);
    for (int mu = 1; mu <= n; ++mu) F.images[mu - 1] += wedge(eta, ExtElem::generator(n, mu));
    std::string at = "trial " + std::to_string(i);
    t.check(is_ungraded_derivation(F), at + " not a derivation");
    t.check(reconstruct(classify(F)) == F, at + " roundtrip");
  }
}

void cartan_poincare(Rng& rng, Budget b, Tally& t) {
  const int kmax = 4, lmax = 4;
  for (int i = 0; i < 50 * scale(b); ++i) {
    int m = rng.uniform(1, 4), n = rng.uniform(1, 4);
    auto fm = gen::random_factored_map(rng, m, n);
    CPHomology h = homology_dims(fm.F, kmax, lmax);
    long r = oracle::naive_rank(fm.F);
    bool ok = r == fm.rank;
    for (int k = 0; k <= kmax; ++k)
      for (int l = 0; l <= lmax; ++l)
        ok = ok && h.dims[k][l] == oracle::sym_count(n - r, k) * oracle::choose(m - r, l);
    std::string at = "trial " + std::to_string(i) + " (" + std::to_string(m) + "x" + std::to_string(n) + ")";
    t.check(ok, at + " dims");
    t.check(h.paths_agree, at + " assembly paths");
  }
}

BigradedElem random_bigraded(Rng& rng, int s, int kmax) {
  BigradedElem x(s, s);
  for (int k = 0; k <= kmax; ++k)
    for (int l = 0; l <= s; ++l)
      for (const auto& key : bigraded_basis(s, s, k, l))
        if (rng.coin(0.3)) x.add(key, rng.small_rational());
  return x;
}

void twisted_shifts(Rng& rng, Budget b, Tally& t) {
  for (int i = 0; i < 50 * scale(b); ++i) {
    int s = rng.uniform(1, 4);
    QMatrix A = gen::random_matrix(rng, s, s), B = gen::random_matrix(rng, s, s);
    auto x = random_bigraded(rng, s, 2);
    auto L = [](const QMatrix& M, const BigradedElem& y) { return twisted_shift_left(M, y); };
    auto R = [](const QMatrix& M, const BigradedElem& y) { return twisted_shift_right(M, y); };
    std::string at = "trial " + std::to_string(i);
    t.check((L(A, L(B, x)) + L(B, L(A, x))).is_zero(), at + " left-left");
    t.check((R(A, R(B, x)) + R(B, R(A, x))).is_zero(), at + " right-right");
    t.check(R(A, L(B, x)) + L(B, R(A, x)) == der_sym(transpose(A * B), x) + der_ext(transpose(B * A), x),
            at + " mixed");
    QMatrix I = QMatrix::identity(s);
    for (int k = 0; k <= 3; ++k)
      for (int l = 0; l <= s; ++l) {
        BigradedElem y = random_bigraded(rng, s, 3).bidegree_part(k, l);
        t.check(L(I, R(I, y)) + R(I, L(I, y)) == Scalar(k + l) * y, at + " identity on bidegree");
      }
  }
}

void straightening(Rng& rng, Budget b, Tally& t) {
  for (int i = 0; i < 30 * scale(b); ++i) {
    int s = rng.uniform(1, 4), k = rng.uniform(1, std::min(2, s));
    OddFamily fam = gen::random_commuting_family(rng, s, k);
    std::string at = "trial " + std::to_string(i) + " s=" + std::to_string(s) + " k=" + std::to_string(k);
    Straightening G = straighten(fam);
    t.check(verify_straightening(fam, G).passed, at + " first solve");
    Straightening other = straighten(fam, {false, true});
    t.check(verify_straightening(fam, other).passed, at + " second solve");
    if (s - k <= 2) t.check(other.G == G.G, at + " uniqueness");
  }
}

void supertensor(Rng&, Budget, Tally& t) {
  for (int e = 0; e <= 3; ++e)
    for (int o = 0; o <= 3; ++o) {
      SuperSpace V{e, o};
      for (int k = 0; k <= 4; ++k) {
        long sym = 0, ext = 0;
        for (int a = 0; a <= k; ++a) {
          sym += oracle::sym_count(e, a) * oracle::choose(o, k - a);
          ext += oracle::choose(e, a) * oracle::sym_count(o, k - a);
        }
        std::string at = "(" + std::to_string(e) + "|" + std::to_string(o) + ") k=" + std::to_string(k);
        t.check(count_supersym_normal_forms(V, k) == sym && supersym_dim_formula(V, k) == sym, at + " sym count");
        t.check(count_superext_normal_forms(V, k) == ext && superext_dim_formula(V, k) == ext, at + " ext count");
        if (k == 0) continue;
        auto perms = all_permutations(k);
        for (const auto& w : all_words(V, k)) {
          auto ns = normalize_supersym(V, w);
          auto ne = normalize_superext(V, w);
          bool ok = true;
          for (const auto& sigma : perms)
            ok = ok && normalize_supersym(V, act_sym(sigma, V, w)) == ns &&
                 normalize_superext(V, act_alt(sigma, V, w)) == ne;
          t.check(ok, at + " invariance");
        }
      }
    }
}

void lie_superalgebras(Rng& rng, Budget b, Tally& t) {
  long pass = 0;
  for (int i = 0; i < 100 * scale(b); ++i) {
    auto d = gen::random_rep_and_form(rng);
    bool a = check_structure_conditions(d).passed();
    bool c = check_lie_superalgebra(build_from_rho_B(d)).passed();
    t.check(a == c, "trial " + std::to_string(i));
    pass += a;
  }
  t.check(pass > 0 && pass < 100 * scale(b), "both outcomes exercised");
}

PolyDiffOp random_op(Rng& rng, int m, int r_out, int r_in, int order) {
  PolyDiffOp D(m, r_out, r_in);
  for (const auto& a : multidegrees_upto(m, order))
    for (int i = 0; i < r_out; ++i)
      for (int j = 0; j < r_in; ++j)
        if (rng.coin(0.3)) D.add(a, i, j, gen::random_poly(rng, m, 2));
  return D;
}

PolySection random_section(Rng& rng, int m, int r, int deg) {
  PolySection s;
  for (int i = 0; i < r; ++i) s.push_back(gen::random_poly(rng, m, deg));
  return s;
}

void jets(Rng& rng, Budget b, Tally& t) {
  for (int i = 0; i < 30 * scale(b); ++i) {
    int m = rng.uniform(1, 2), k = rng.uniform(0, 4), ord = rng.uniform(0, 3);
    PolyDiffOp D = random_op(rng, m, rng.uniform(1, 2), rng.uniform(1, 2), ord);
    std::vector<Poly> fs;
    for (int j = 0; j < k; ++j) fs.push_back(gen::random_poly(rng, m, 2));
    std::string at = "trial " + std::to_string(i);
    t.check(iterated_commutator(D, fs) == nested_commutator(D, fs), at + " subset formula");
    std::vector<Poly> more;
    for (int j = 0; j <= D.order(); ++j) more.push_back(gen::random_poly(rng, m, 2));
    t.check(iterated_commutator(D, more).is_zero(), at + " annihilation");
  }
  for (int i = 0; i < 20 * scale(b); ++i) {
    int m = rng.uniform(1, 2), r_in = rng.uniform(1, 2), r_out = rng.uniform(1, 2);
    PolyDiffOp D = random_op(rng, m, r_out, r_in, 2);
    PolySection s = random_section(rng, m, r_in, 4);
    PolySection Ds = sa::apply(D, s);
    for (int q = 0; q < 10; ++q) {
      std::vector<Scalar> p;
      for (int j = 0; j < m; ++j) p.push_back(rng.small_rational());
      auto v = sa::apply(factor_through_jet(D, 2, p), jet(s, 2, p).coefficients());
      bool ok = true;
      for (int j = 0; j < r_out; ++j) ok = ok && v[j] == Ds[j].eval(p);
      t.check(ok, "factorization " + std::to_string(i));
    }
  }
}

// Φ(fη) = (f∘φ)Φ(η) for functions f on the target, plus Φ(σ_I) ∈ Λ^{|I|}
bool module_linear(const SuperMapData& Phi, Rng& rng) {
  int n = Phi.n, q = Phi.q;
  std::vector<PolySuperFunc> etas{PolySuperFunc(n, q, 1)};
  for (Mask I = 1; I <= full_mask(q); ++I) etas.push_back(SymExt::monomial(n, q, MultiDegree(n, 0), I));
  for (int r = 0; r < 2; ++r) etas.push_back(gen::random_superfunc(rng, n, q, {0, 1, 2}, 1));
  std::vector<Poly> fs;
  for (int j = 1; j <= n; ++j) fs.push_back(Poly::variable(n, j));
  for (int r = 0; r < 2; ++r) fs.push_back(gen::random_poly(rng, n, 2));
  for (const auto& f : fs)
    for (const auto& eta : etas)
      if (sa::apply(Phi, SymExt::from_poly(f, q) * eta) != pull_body(Phi, f) * sa::apply(Phi, eta)) return false;
  for (Mask I = 1; I <= full_mask(q); ++I) {
    PolySuperFunc img = sa::apply(Phi, SymExt::monomial(n, q, MultiDegree(n, 0), I));
    if (img.ext_degree_part(card(I)) != img) return false;
  }
  return true;
}

void supermaps(Rng& rng, Budget b, Tally& t) {
  long zero = 0;
  for (int i = 0; i < 50 * scale(b); ++i) {
    int n = rng.uniform(1, 2), q = rng.uniform(0, 2), m = rng.uniform(1, 2), p = rng.uniform(0, 4);
    SuperMapData Phi = gen::random_supermap(rng, n, q, m, p, rng.coin(0.6));
    std::string at = "trial " + std::to_string(i);
    t.check(order_bound_check(Phi, rng, 4).passed(), at + " order bound");
    PolySuperFunc f = gen::random_superfunc(rng, n, q, {0, 1, 2}, 2);
    t.check(sa::apply(Phi, f).body() == f.body().compose(base_map(Phi)), at + " body");
    bool oz = order_zero_criterion(Phi).order_zero();
    t.check(oz == module_linear(Phi, rng), at + " order zero vs module-linear");
    zero += oz;
  }
  t.check(zero > 0 && zero < 50 * scale(b), "both outcomes exercised");
}

OddConnection random_connection(Rng& rng, int m, int n, double density = 0.5) {
  OddConnection A = OddConnection::flat(m, n);
  for (auto& M : A.A)
    for (auto& row : M)
      for (auto& p : row)
        if (rng.coin(density)) p = gen::random_poly(rng, m, rng.uniform(1, 2), 0.6);
  return A;
}

SuperForm random_form(Rng& rng, int m, int n, int max_b, int terms) {
  SuperForm w(m, n);
  for (int i = 0; i < terms; ++i) {
    FormKey k{Mask(rng.uniform(0, int(full_mask(m)))), MultiDegree(n, 0), Mask(rng.uniform(0, int(full_mask(n)))),
              MultiDegree(m, 0)};
    for (int e = rng.uniform(0, max_b); e > 0; --e) ++k.b[rng.uniform(0, n - 1)];
    for (int e = rng.uniform(0, 2); e > 0; --e) ++k.x[rng.uniform(0, m - 1)];
    w.add(k, rng.small_integer(3));
  }
  return w;
}

void for_each_tuple(int m, int n, int len, std::vector<FieldGen>& cur,
                    const std::function<void(const std::vector<FieldGen>&)>& f) {
  if (int(cur.size()) == len) return f(cur);
  for (int i = 1; i <= m + n; ++i) {
    cur.push_back(i <= m ? frame_field(m, n, false, i) : frame_field(m, n, true, i - m));
    for_each_tuple(m, n, len, cur, f);
    cur.pop_back();
  }
}

void super_derham(Rng& rng, Budget b, Tally& t) {
  for (int i = 0; i < 40 * scale(b); ++i) {
    int m = rng.uniform(1, 2), n = rng.uniform(1, 3);
    OddConnection A = i % 2 ? random_connection(rng, m, n) : OddConnection::flat(m, n);
    SuperForm w = random_form(rng, m, n, 2, 5);
    t.check(super_d(A, super_d(A, w)).is_zero(), "d squared, trial " + std::to_string(i));
  }
  long nonzero = 0;
  for (int i = 0; i < 20 * scale(b); ++i) {
    int m = rng.uniform(1, 2), n = rng.uniform(1, 2);
    OddConnection A = i % 4 == 0 ? OddConnection::flat(m, n) : random_connection(rng, m, n);
    int deg = rng.uniform(0, 2);
    SuperForm w = random_form(rng, m, n, 2, 6).degree_part(deg);
    SuperForm dw = super_d(A, w);
    std::vector<FieldGen> cur;
    bool ok = true;
    for_each_tuple(m, n, deg + 1, cur, [&](const std::vector<FieldGen>& fs) {
      SymExt v = super_d_by_fields(A, w, fs);
      ok = ok && v == evaluate(dw, fs);
      nonzero += !v.is_zero();
    });
    t.check(ok, "field formula, trial " + std::to_string(i));
  }
  t.check(nonzero > 0, "field formula exercised");
  for (int m = 1; m <= 2; ++m)
    for (int n = 1; n <= 2; ++n)
      for (bool curved : {false, true}) {
        OddConnection A = curved ? random_connection(rng, m, n, 0.8) : OddConnection::flat(m, n);
        int cutoff = 3;
        for (int k = 0; k <= 2; ++k)
          t.check(cohomology_dim(A, k, cutoff) == (k == 0 ? 1 : 0),
                  "cohomology m=" + std::to_string(m) + " n=" + std::to_string(n) + " k=" + std::to_string(k));
      }
}

void delta_lemma(Rng& rng, Budget, Tally& t) {
  for (int m = 1; m <= 2; ++m)
    for (int n = 1; n <= 2; ++n)
      for (bool curved : {false, true}) {
        OddConnection A = curved ? random_connection(rng, m, n, 0.8) : OddConnection::flat(m, n);
        int cutoff = 3;
        DeltaReport r = delta_kernel_check(A, cutoff);
        std::string at = "m=" + std::to_string(m) + " n=" + std::to_string(n) + (curved ? " curved" : " flat");
        t.check(r.euler, at + " euler");
        t.check(r.printed_vanishes, at + " printed form");
        t.check(r.square_free && r.kernel_is_pure(), at + " kernel");
      }
}

using Body = void (*)(Rng&, Budget, Tally&);

struct Entry {
  Criterion c;
  Body body;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> e{
      {{1, "derivation-dimensions", 10}, derivation_dimensions},
      {{2, "classification-roundtrip", 10}, classification_roundtrip},
      {{3, "cartan-poincare-homology", 60}, cartan_poincare},
      {{4, "twisted-shift-identities", 30}, twisted_shifts},
      {{5, "straightening", 60}, straightening},
      {{6, "supertensor-quotients", 20}, supertensor},
      {{7, "lie-superalgebra-criterion", 30}, lie_superalgebras},
      {{8, "jets-and-commutators", 30}, jets},
      {{9, "supermap-order", 30}, supermaps},
      {{10, "super-de-rham", 120}, super_derham},
      {{11, "delta-kernel", 60}, delta_lemma},
  };
  return e;
}

}  // namespace

DerivationDims brute_force_derivation_dims(int n) {
  return {oracle::leibniz_solution_dim(n, -1), oracle::leibniz_solution_dim(n, 0), oracle::leibniz_solution_dim(n, 1)};
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> c = [] {
    std::vector<Criterion> v;
    for (const auto& e : entries()) v.push_back(e.c);
    return v;
  }();
  return c;
}

std::uint64_t sub_seed(std::uint64_t seed, int id) { return sa::sub_seed(seed, "acceptance", std::uint64_t(id)); }

CriterionResult run_criterion(int id, std::uint64_t seed, Budget budget) {
  for (const auto& e : entries()) {
    if (e.c.id != id) continue;
    CriterionResult r;
    r.id = id;
    r.name = e.c.name;
    r.limit_seconds = e.c.limit_seconds * scale(budget);
    r.seed = sub_seed(seed, id);
    Rng rng(r.seed);
    Tally t;
    auto start = std::chrono::steady_clock::now();
    try {
      e.body(rng, budget, t);
    } catch (const std::exception& ex) {
      t.check(false, std::string("exception: ") + ex.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.cases = t.cases;
    r.property_holds = t.failures == 0 && t.cases > 0;
    if (t.failures) r.detail = std::to_string(t.failures) + " failing, first: " + t.first_failure;
    else if (r.seconds > r.limit_seconds) r.detail = "time limit exceeded";
    return r;
  }
  throw DomainError("unknown acceptance criterion " + std::to_string(id));
}

std::vector<CriterionResult> run_all(std::uint64_t seed, Budget budget,
                                     const std::function<void(const CriterionResult&)>& on_done) {
  std::vector<CriterionResult> out;
  for (const auto& c : criteria()) {
    out.push_back(run_criterion(c.id, seed, budget));
    if (on_done) on_done(out.back());
  }
  return out;
}

std::string format_line(const CriterionResult& r) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s %2d %-28s %8.2fs / %4.0fs  cases=%-6ld seed=%016llx", r.passed() ? "PASS" : "FAIL",
                r.id, r.name.c_str(), r.seconds, r.limit_seconds, r.cases, (unsigned long long)r.seed);
  std::string s = buf;
  if (!r.detail.empty()) s += "  " + r.detail;
  return s;
}

}  // namespace acceptance
