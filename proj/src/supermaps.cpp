#include "superalg/supermaps.hpp"

#include <algorithm>

namespace sa {

namespace {

void check_ring(const PolySuperFunc& f, int m, int p, const char* what) {
  if (f.nsym() != m || f.next() != p) throw DomainError(std::string(what) + " lives in the wrong superfunction ring");
}

Poly random_probe(Rng& rng, int n) {
  Poly f(n);
  for (const auto& d : multidegrees_upto(n, 2))
    if (total_degree(d) > 0 && rng.coin(0.5)) f.add(d, rng.small_integer(2));
  if (f.is_zero() && n > 0) f = Poly::variable(n, rng.uniform(1, n));
  return f;
}

PolySuperFunc random_superfunc(Rng& rng, int n, int q) {
  PolySuperFunc f(n, q);
  for (const auto& d : multidegrees_upto(n, 1))
    for (Mask I = 0; I <= full_mask(q); ++I)
      if (rng.coin(0.3)) f.add(d, I, rng.small_integer(2));
  if (f.is_zero()) f = PolySuperFunc(n, q, 1);
  return f;
}

}  // namespace

void validate(const SuperMapData& Phi) {
  if (Phi.n < 0 || Phi.m < 0) throw DomainError("negative dimension");
  check_dim(Phi.q);
  check_dim(Phi.p);
  if (int(Phi.coord_images.size()) != Phi.n) throw DomainError("need one image per target coordinate");
  if (int(Phi.odd_images.size()) != Phi.q) throw DomainError("need one image per target odd generator");
  for (const auto& f : Phi.coord_images) {
    check_ring(f, Phi.m, Phi.p, "coordinate image");
    if (!f.odd_part().is_zero()) throw DomainError("coordinate images must be even");
  }
  for (const auto& f : Phi.odd_images) {
    check_ring(f, Phi.m, Phi.p, "odd image");
    if (!f.even_part().is_zero()) throw DomainError("odd generator images must be odd");
  }
}

SuperMapData identity_map(int m, int p) {
  SuperMapData Phi{m, p, m, p, {}, {}};
  for (int i = 1; i <= m; ++i) Phi.coord_images.push_back(SymExt::sym_generator(m, p, i));
  for (int a = 1; a <= p; ++a) Phi.odd_images.push_back(SymExt::ext_generator(m, p, a));
  return Phi;
}

SuperMapData exterior_lift(const std::vector<Poly>& phi, const PolyMatrix& F, int p) {
  if (phi.empty()) throw DomainError("exterior lift needs at least one coordinate");
  int m = phi[0].nvars();
  if (int(F.size()) != p) throw DomainError("bundle map has the wrong shape");
  int q = F.empty() ? 0 : int(F[0].size());
  SuperMapData Phi{int(phi.size()), q, m, p, {}, {}};
  for (const auto& f : phi) Phi.coord_images.push_back(SymExt::from_poly(f, p));
  for (int a = 0; a < q; ++a) {
    PolySuperFunc img(m, p);
    for (int mu = 0; mu < p; ++mu) img += SymExt::from_poly(F[mu][a], p) * SymExt::ext_generator(m, p, mu + 1);
    Phi.odd_images.push_back(img);
  }
  validate(Phi);
  return Phi;
}

PolySuperFunc apply(const SuperMapData& Phi, const PolySuperFunc& f) {
  validate(Phi);
  check_ring(f, Phi.n, Phi.q, "argument");
  std::vector<std::vector<PolySuperFunc>> powers(Phi.n);
  PolySuperFunc r(Phi.m, Phi.p);
  for (const auto& [key, c] : f.terms()) {
    const auto& [beta, I] = key;
    PolySuperFunc t(Phi.m, Phi.p, c);
    for (int j = 0; j < Phi.n; ++j) {
      auto& pw = powers[j];
      if (pw.empty()) pw.emplace_back(Phi.m, Phi.p, 1);
      while (int(pw.size()) <= beta[j]) pw.push_back(pw.back() * Phi.coord_images[j]);
      if (beta[j]) t = t * pw[beta[j]];
    }
    for (int a : indices(I)) t = t * Phi.odd_images[a - 1];
    r += t;
  }
  return r;
}

std::vector<Poly> base_map(const SuperMapData& Phi) {
  validate(Phi);
  std::vector<Poly> phi;
  for (const auto& f : Phi.coord_images) phi.push_back(f.body());
  return phi;
}

PolySuperFunc pull_body(const SuperMapData& Phi, const Poly& f) {
  if (f.nvars() != Phi.n) throw DomainError("function lives on another base");
  auto phi = base_map(Phi);
  Poly g = Phi.n == 0 ? Poly(Phi.m, f.coeff({})) : f.compose(phi);
  return SymExt::from_poly(g, Phi.p);
}

PolySuperFunc twisted_commutator(const SuperMapData& Phi, const std::vector<Poly>& fs, const PolySuperFunc& eta) {
  int k = int(fs.size());
  if (k >= 62) throw DomainError("too many functions");
  PolySuperFunc r(Phi.m, Phi.p);
  for (Mask A = 0; A <= full_mask(k); ++A) {
    Poly fa(Phi.n, 1), fb(Phi.n, 1);
    for (int i = 1; i <= k; ++i) {
      if (has(A, i))
        fa = fa * fs[i - 1];
      else
        fb = fb * fs[i - 1];
    }
    PolySuperFunc t = pull_body(Phi, fa) * apply(Phi, SymExt::from_poly(fb, Phi.q) * eta);
    r += Scalar(sign_pow(card(A))) * t;
  }
  return r;
}

PolySuperFunc twisted_commutator_product(const SuperMapData& Phi, const std::vector<Poly>& fs,
                                         const PolySuperFunc& eta) {
  PolySuperFunc r = apply(Phi, eta);
  for (const auto& f : fs) {
    if (r.is_zero()) break;
    r = (apply(Phi, SymExt::from_poly(f, Phi.q)) - pull_body(Phi, f)) * r;
  }
  return r;
}

OrderReport order_bound_check(const SuperMapData& Phi, Rng& rng, int trials) {
  validate(Phi);
  OrderReport rep;
  rep.bound = Phi.p / 2;
  auto record = [&](int depth, const std::vector<Poly>& fs, const PolySuperFunc& eta) {
    PolySuperFunc a = twisted_commutator(Phi, fs, eta), b = twisted_commutator_product(Phi, fs, eta);
    ++rep.trials;
    if (a != b) rep.paths_agree = false;
    if (!a.is_zero()) {
      rep.observed = std::max(rep.observed, depth);
      if (depth > rep.bound) rep.vanishes_beyond = false;
    }
  };
  for (int depth = 1; depth <= rep.bound + 1; ++depth) {
    // coordinate probes, non-decreasing index tuples
    if (Phi.n > 0) {
      std::vector<int> idx(depth, 1);
      while (true) {
        std::vector<Poly> fs;
        for (int j : idx) fs.push_back(Poly::variable(Phi.n, j));
        record(depth, fs, PolySuperFunc(Phi.n, Phi.q, 1));
        int pos = depth - 1;
        while (pos >= 0 && idx[pos] == Phi.n) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int t = pos + 1; t < depth; ++t) idx[t] = idx[pos];
      }
    }
    for (int t = 0; t < trials; ++t) {
      std::vector<Poly> fs;
      for (int i = 0; i < depth; ++i) fs.push_back(random_probe(rng, Phi.n));
      record(depth, fs, random_superfunc(rng, Phi.n, Phi.q));
    }
  }
  return rep;
}

FiltrationReport filtration_check(const SuperMapData& Phi, int max_poly_degree) {
  validate(Phi);
  FiltrationReport rep;
  for (Mask I = 0; I <= full_mask(Phi.q); ++I)
    for (const auto& beta : multidegrees_upto(Phi.n, max_poly_degree)) {
      PolySuperFunc img = apply(Phi, SymExt::monomial(Phi.n, Phi.q, beta, I));
      ++rep.checked;
      if (!img.is_zero() && img.min_ext_degree() < card(I)) {
        rep.passed = false;
        rep.failure = "image of " + to_string(SymExt::monomial(Phi.n, Phi.q, beta, I), "y", "sigma") +
                      " leaves filtration degree " + std::to_string(card(I));
        return rep;
      }
    }
  return rep;
}

PolyMatrix induced_grade_map(const SuperMapData& Phi, int k) {
  validate(Phi);
  if (k < 0) throw DomainError("negative degree");
  auto rows = subsets_of_size(Phi.p, k), cols = subsets_of_size(Phi.q, k);
  PolyMatrix M = zero_poly_matrix(Phi.m, int(rows.size()), int(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) {
    PolySuperFunc img = apply(Phi, SymExt::monomial(Phi.n, Phi.q, MultiDegree(Phi.n, 0), cols[j]));
    for (size_t i = 0; i < rows.size(); ++i) M[i][j] = img.coefficient_poly(rows[i]);
  }
  return M;
}

PolySuperFunc aux_codifferential_poly(const SuperMapData& Phi, const Poly& f) {
  return (apply(Phi, SymExt::from_poly(f, Phi.q)) - pull_body(Phi, f)).ext_degree_part(2);
}

ExtElem aux_codifferential(const SuperMapData& Phi, const Poly& f, const std::vector<Scalar>& point) {
  if (int(point.size()) != Phi.m) throw DomainError("point has the wrong dimension");
  PolySuperFunc v = aux_codifferential_poly(Phi, f).eval_sym(point);
  ExtElem r(Phi.p);
  for (const auto& [key, c] : v.terms()) r.add(key.second, c);
  return r;
}

OrderZeroReport order_zero_criterion(const SuperMapData& Phi) {
  validate(Phi);
  OrderZeroReport rep;
  for (const auto& f : Phi.coord_images)
    if (f != SymExt::from_poly(f.body(), Phi.p)) rep.coordinate_images_plain = false;
  for (const auto& f : Phi.odd_images)
    if (f != f.ext_degree_part(1)) rep.odd_images_linear = false;
  return rep;
}

}  // namespace sa
