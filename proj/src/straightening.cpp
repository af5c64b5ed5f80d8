#include "superalg/straightening.hpp"

#include <algorithm>

namespace sa {

CompElem comp_product(const CompElem& a, const CompElem& b) {
  validate(a);
  validate(b);
  if (a.n != b.n) throw DomainError("composition elements over different spaces");
  CompElem r = GenImageMap::zero(a.n);
  for (int c = 1; c <= a.n; ++c)
    for (int s = 1; s <= a.n; ++s) {
      if (a(s).is_zero()) continue;
      ExtElem ins = insert_basis(s, b(c));
      if (!ins.is_zero()) r.images[c - 1] += wedge(a(s), ins);
    }
  return r;
}

Parity comp_parity(const CompElem& a) {
  validate(a);
  Parity p = Parity::even;
  bool first = true;
  for (const auto& e : a.images) {
    if (e.is_zero()) continue;
    Parity q;
    if (!e.is_homogeneous_parity(q)) throw DomainError("composition element is not homogeneous");
    if (!first && q != p) throw DomainError("composition element is not homogeneous");
    p = q;
    first = false;
  }
  return p + Parity::odd;
}

CompElem comp_bracket(const CompElem& a, const CompElem& b) {
  int s = sign_pow(as_int(comp_parity(a)) * as_int(comp_parity(b)));
  CompElem ab = comp_product(a, b), ba = comp_product(b, a);
  for (int c = 0; c < a.n; ++c) ab.images[c] -= Scalar(s) * ba.images[c];
  return ab;
}

SuperDerivation psi(const CompElem& a) { return make_superderivation(a, comp_parity(a)); }

PolyCompElem PolyCompElem::zero(int k, int s) {
  check_dim(s);
  return PolyCompElem{k, s, std::vector<SymExt>(s, SymExt(k, s))};
}

bool PolyCompElem::is_zero() const {
  return std::all_of(comp.begin(), comp.end(), [](const SymExt& x) { return x.is_zero(); });
}

PolyCompElem poly_comp_product(const PolyCompElem& a, const PolyCompElem& b) {
  if (a.k != b.k || a.s != b.s) throw DomainError("composition elements over different spaces");
  PolyCompElem r = PolyCompElem::zero(a.k, a.s);
  for (int c = 0; c < a.s; ++c)
    for (int s = 1; s <= a.s; ++s) {
      if (a.comp[s - 1].is_zero()) continue;
      SymExt ins = b.comp[c].ext_insert(s);
      if (!ins.is_zero()) r.comp[c] += a.comp[s - 1] * ins;
    }
  return r;
}

PolyCompElem operator+(const PolyCompElem& a, const PolyCompElem& b) {
  if (a.k != b.k || a.s != b.s) throw DomainError("composition elements over different spaces");
  PolyCompElem r = a;
  for (int c = 0; c < a.s; ++c) r.comp[c] += b.comp[c];
  return r;
}

void validate(const OddFamily& fam) {
  check_dim(fam.s);
  if (fam.k < 0 || int(fam.D.size()) != fam.k) throw DomainError("need one derivation per basis vector of V");
  for (const auto& d : fam.D) {
    validate(d);
    if (d.n != fam.s) throw DomainError("derivation over the wrong space");
    for (const auto& e : d.images)
      if (!e.odd_part().is_zero()) throw DomainError("family members must be odd derivations");
  }
}

QMatrix family_f(const OddFamily& fam) {
  validate(fam);
  QMatrix f(fam.s, fam.k);
  for (int i = 0; i < fam.k; ++i)
    for (int a = 0; a < fam.s; ++a) f.at(a, i) = augmentation(fam.D[i].images[a]);
  return f;
}

CompElem family_part(const CompElem& D, int mu) {
  CompElem r = GenImageMap::zero(D.n);
  for (int a = 0; a < D.n; ++a) r.images[a] = D.images[a].part(2 * mu);
  return r;
}

PolyCompElem family_as_poly(const OddFamily& fam) {
  validate(fam);
  PolyCompElem r = PolyCompElem::zero(fam.k, fam.s);
  for (int i = 1; i <= fam.k; ++i)
    for (int a = 0; a < fam.s; ++a)
      for (const auto& [m, c] : fam.D[i - 1].images[a].terms()) r.comp[a].add(unit_degree(fam.k, i), m, c);
  return r;
}

bool family_is_commuting(const OddFamily& fam) {
  validate(fam);
  for (int i = 0; i < fam.k; ++i)
    for (int j = i; j < fam.k; ++j)
      if (!(comp_bracket(fam.D[i], fam.D[j]) == GenImageMap::zero(fam.s))) return false;
  return true;
}

bool family_square_vanishes(const OddFamily& fam) {
  PolyCompElem D = family_as_poly(fam);
  return poly_comp_product(D, D).is_zero();
}

namespace {

ExtElem insert_vector(const QMatrix& f, int col, const ExtElem& a) {
  std::vector<Scalar> v(f.rows());
  for (int r = 0; r < f.rows(); ++r) v[r] = f.at(r, col);
  return insert(v, a);
}

// coordinates of Λ^deg in the dual basis θ = M^{-1} ds; returns T[θ-mask][ds-mask]
std::map<Mask, std::map<Mask, Scalar>> theta_coordinates(const QMatrix& M, int deg) {
  int s = M.rows();
  std::vector<ExtElem> ds_in_theta(s, ExtElem(s));
  for (int c = 0; c < s; ++c)
    for (int j = 0; j < s; ++j)
      if (sgn(M.at(c, j)) != 0) ds_in_theta[c].add(single(j + 1), M.at(c, j));
  std::map<Mask, std::map<Mask, Scalar>> T;
  for (Mask m : subsets_of_size(s, deg)) {
    ExtElem w(s, 1);
    for (int c : indices(m)) w = wedge(w, ds_in_theta[c - 1]);
    for (const auto& [tm, coef] : w.terms()) T[tm][m] = coef;
  }
  return T;
}

}  // namespace

Straightening straighten(const OddFamily& fam, const SolveOptions& opt) {
  validate(fam);
  int s = fam.s, k = fam.k;
  QMatrix f = family_f(fam);
  if (rank(f) != k) throw PreconditionError("pr∘D is not injective");
  if (!family_is_commuting(fam)) throw PreconditionError("family members do not supercommute");

  // adapted basis: f(v_1..v_k) followed by the least-index standard vectors completing it
  QMatrix M(s, s);
  int cols = 0;
  for (int i = 0; i < k; ++i, ++cols)
    for (int a = 0; a < s; ++a) M.at(a, cols) = f.at(a, i);
  for (int c = 0; c < s && cols < s; ++c) {
    QMatrix trial = M;
    trial.at(c, cols) = 1;
    QMatrix sub(s, cols + 1);
    for (int a = 0; a < s; ++a)
      for (int j = 0; j <= cols; ++j) sub.at(a, j) = trial.at(a, j);
    if (rank(sub) == cols + 1) {
      M = trial;
      ++cols;
    }
  }
  Mask kernel_theta = full_mask(s) & ~full_mask(k);

  Straightening out{s, GenImageMap::zero(s)};
  for (int a = 1; a <= s; ++a) out.G.images[a - 1] = ExtElem::generator(s, a);
  std::vector<CompElem> Gparts{out.G};
  for (int mu = 1; 2 * mu + 1 <= s; ++mu) {
    int deg = 2 * mu + 1;
    // Y_i = -Σ_{α=1}^{μ} D_{α,i}·G_{μ-α}
    std::vector<CompElem> Y(k, GenImageMap::zero(s));
    for (int i = 0; i < k; ++i)
      for (int al = 1; al <= mu; ++al) {
        CompElem t = comp_product(family_part(fam.D[i], al), Gparts[mu - al]);
        for (int a = 0; a < s; ++a) Y[i].images[a] -= t.images[a];
      }
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        for (int a = 0; a < s; ++a)
          if (!(insert_vector(f, j, Y[i].images[a]) + insert_vector(f, i, Y[j].images[a])).is_zero())
            throw InternalError("right-hand side is not D0-closed at order " + std::to_string(mu));

    auto unknowns = subsets_of_size(s, deg);
    auto rows_out = subsets_of_size(s, deg - 1);
    std::map<Mask, int> out_row;
    for (size_t r = 0; r < rows_out.size(); ++r) out_row[rows_out[r]] = int(r);
    auto theta = theta_coordinates(M, deg);
    std::vector<Mask> pinned;
    if (opt.pin_kernel)
      for (Mask m : subsets_of_size(s, deg))
        if ((m & ~kernel_theta) == 0) pinned.push_back(m);
    int nrows = k * int(rows_out.size()) + int(pinned.size());
    QMatrix A(nrows, int(unknowns.size()));
    for (int i = 0; i < k; ++i)
      for (size_t u = 0; u < unknowns.size(); ++u) {
        ExtElem img = insert_vector(f, i, ExtElem::monomial(s, unknowns[u]));
        for (const auto& [m, c] : img.terms()) A.at(i * int(rows_out.size()) + out_row.at(m), int(u)) = c;
      }
    for (size_t p = 0; p < pinned.size(); ++p) {
      auto it = theta.find(pinned[p]);
      if (it == theta.end()) continue;
      for (size_t u = 0; u < unknowns.size(); ++u) {
        auto jt = it->second.find(unknowns[u]);
        if (jt != it->second.end()) A.at(k * int(rows_out.size()) + int(p), int(u)) = jt->second;
      }
    }
    std::vector<int> order(unknowns.size());
    for (size_t u = 0; u < order.size(); ++u) order[u] = int(u);
    if (opt.reverse_columns) std::reverse(order.begin(), order.end());

    CompElem Gmu = GenImageMap::zero(s);
    for (int a = 0; a < s; ++a) {
      std::vector<Scalar> b(nrows);
      for (int i = 0; i < k; ++i)
        for (const auto& [m, c] : Y[i].images[a].terms()) b[i * int(rows_out.size()) + out_row.at(m)] = c;
      auto x = solve(A, b, order);
      if (!x)
        throw InternalError("straightening system is inconsistent at order " + std::to_string(mu) +
                            ", component " + std::to_string(a + 1));
      for (size_t u = 0; u < unknowns.size(); ++u) Gmu.images[a].add(unknowns[u], (*x)[u]);
    }
    Gparts.push_back(Gmu);
    for (int a = 0; a < s; ++a) out.G.images[a] += Gmu.images[a];
  }
  return out;
}

ExtElem apply_morphism(const CompElem& G, const ExtElem& a) {
  validate(G);
  if (a.dim() != G.n) throw DomainError("element lives in another exterior algebra");
  ExtElem r(G.n);
  for (const auto& [m, c] : a.terms()) {
    ExtElem t(G.n, c);
    for (int i : indices(m)) t = wedge(t, G(i));
    r += t;
  }
  return r;
}

StraighteningReport verify_straightening(const OddFamily& fam, const Straightening& G) {
  validate(fam);
  validate(G.G);
  StraighteningReport rep;
  if (G.s != fam.s || G.G.n != fam.s) throw DomainError("straightening over the wrong space");
  QMatrix f = family_f(fam);
  for (int i = 0; i < fam.k; ++i) {
    SuperDerivation Dv{fam.D[i], Parity::odd};
    for (Mask m = 0; m <= full_mask(fam.s); ++m) {
      ExtElem sigma = ExtElem::monomial(fam.s, m);
      ExtElem lhs = extend(Dv, apply_morphism(G.G, sigma));
      ExtElem rhs = apply_morphism(G.G, insert_vector(f, i, sigma));
      ++rep.checked;
      if (lhs != rhs) {
        rep.passed = false;
        rep.failure = std::make_pair(i + 1, m);
        rep.message = "D_v(G sigma) != G(f(v) ins sigma) at v" + std::to_string(i + 1) + ", monomial " +
                      to_string(sigma);
        return rep;
      }
    }
  }
  return rep;
}

CompElem invert_morphism(const CompElem& G) {
  validate(G);
  int s = G.n;
  for (int a = 1; a <= s; ++a)
    if (G(a).part(1) != ExtElem::generator(s, a)) throw DomainError("morphism must be the identity modulo higher order");
  CompElem H = GenImageMap::zero(s);
  for (int a = 1; a <= s; ++a) H.images[a - 1] = ExtElem::generator(s, a);
  for (int it = 0; it <= s; ++it) {
    CompElem next = H;
    bool changed = false;
    for (int a = 1; a <= s; ++a) {
      ExtElem err = apply_morphism(G, H(a)) - ExtElem::generator(s, a);
      if (!err.is_zero()) {
        next.images[a - 1] -= err;
        changed = true;
      }
    }
    H = next;
    if (!changed) return H;
  }
  throw InternalError("morphism inversion did not converge");
}

OddFamily conjugated_family(const CompElem& G, const QMatrix& f) {
  validate(G);
  int s = G.n;
  if (f.rows() != s) throw DomainError("f has the wrong shape");
  CompElem H = invert_morphism(G);
  OddFamily fam{f.cols(), s, {}};
  for (int i = 0; i < f.cols(); ++i) {
    CompElem D = GenImageMap::zero(s);
    for (int a = 1; a <= s; ++a) D.images[a - 1] = apply_morphism(G, insert_vector(f, i, H(a)));
    fam.D.push_back(D);
  }
  return fam;
}

}  // namespace sa
