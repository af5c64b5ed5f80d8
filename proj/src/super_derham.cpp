#include "superalg/super_derham.hpp"

#include "superalg/cartan_poincare.hpp"
#include "superalg/linalg.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <tuple>

namespace sa {

namespace {

MultiDegree plus(MultiDegree a, const MultiDegree& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

MultiDegree bumped(MultiDegree a, int i, int by) {
  a[i - 1] += by;
  return a;
}

void same_space(const SuperForm& a, const SuperForm& b) {
  if (a.m() != b.m() || a.n() != b.n()) throw DomainError("forms live on different superspaces");
}

void check_connection(const OddConnection& A, const SuperForm& w) {
  validate(A);
  if (A.m != w.m() || A.n != w.n()) throw DomainError("connection and form live on different superspaces");
}

// decompose a polynomial matrix into scalar matrices by monomial
std::map<MultiDegree, QMatrix> by_monomial(const PolyMatrix& M, int n) {
  std::map<MultiDegree, QMatrix> r;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto& [d, c] : M[i][j].terms()) {
        auto it = r.try_emplace(d, n, n).first;
        it->second.at(i, j) += c;
      }
  return r;
}

// group terms by (a, x) and hand the ϑ ⊗ θ fiber to op as an element of Sym ⊗ Λ
SuperForm fiberwise(const SuperForm& w, const std::function<void(Mask, const MultiDegree&, const SymExt&, SuperForm&)>& op) {
  std::map<std::pair<Mask, MultiDegree>, SymExt> fibers;
  for (const auto& [k, c] : w.terms()) {
    auto it = fibers.try_emplace({k.a, k.x}, w.n(), w.n()).first;
    it->second.add(k.b, k.c, c);
  }
  SuperForm r(w.m(), w.n());
  for (const auto& [ax, f] : fibers) op(ax.first, ax.second, f, r);
  return r;
}

void scatter(SuperForm& r, Mask a, const MultiDegree& x, const SymExt& f, const Scalar& s = 1) {
  for (const auto& [key, c] : f.terms()) r.add(FormKey{a, key.first, key.second, x}, s * c);
}

SuperForm a_parity_sign(const SuperForm& w) {
  SuperForm r(w.m(), w.n());
  for (const auto& [k, c] : w.terms()) r.add(k, Scalar(sign_pow(card(k.a))) * c);
  return r;
}

// ∇_i on Poly(x) ⊗ Λ(θ)
SymExt nabla(const OddConnection& A, int i, const SymExt& f) {
  SymExt r = f.sym_derivative(i);
  for (int nu = 1; nu <= A.n; ++nu) {
    SymExt in = f.ext_insert(nu);
    if (in.is_zero()) continue;
    for (int ka = 1; ka <= A.n; ++ka) {
      const Poly& p = A.at(i, nu, ka);
      if (!p.is_zero()) r -= in.ext_wedge_left(ka).times_sym(p);
    }
  }
  return r;
}

}  // namespace

bool FormKey::operator<(const FormKey& o) const { return std::tie(a, b, c, x) < std::tie(o.a, o.b, o.c, o.x); }

SuperForm::SuperForm(int m, int n) : m_(m), n_(n) {
  if (m < 0) throw DomainError("negative even dimension");
  check_dim(m);
  check_dim(n);
}

SuperForm SuperForm::monomial(int m, int n, const FormKey& k, const Scalar& c) {
  SuperForm r(m, n);
  r.add(k, c);
  return r;
}

SuperForm SuperForm::function(const Poly& f, int n) {
  SuperForm r(f.nvars(), n);
  for (const auto& [d, c] : f.terms()) r.add(FormKey{0, MultiDegree(n, 0), 0, d}, c);
  return r;
}

SuperForm SuperForm::superfunction(const SymExt& f) {
  SuperForm r(f.nsym(), f.next());
  for (const auto& [key, c] : f.terms()) r.add(FormKey{0, MultiDegree(f.next(), 0), key.second, key.first}, c);
  return r;
}

SuperForm SuperForm::dx(int m, int n, int i) {
  if (i < 1 || i > m) throw DomainError("dx index out of range");
  return monomial(m, n, FormKey{single(i), MultiDegree(n, 0), 0, MultiDegree(m, 0)});
}

SuperForm SuperForm::vartheta(int m, int n, int nu) {
  if (nu < 1 || nu > n) throw DomainError("odd index out of range");
  return monomial(m, n, FormKey{0, unit_degree(n, nu), 0, MultiDegree(m, 0)});
}

SuperForm SuperForm::theta(int m, int n, int nu) {
  if (nu < 1 || nu > n) throw DomainError("odd index out of range");
  return monomial(m, n, FormKey{0, MultiDegree(n, 0), single(nu), MultiDegree(m, 0)});
}

void SuperForm::add(const FormKey& k, const Scalar& c) {
  if (sgn(c) == 0) return;
  if (int(k.b.size()) != n_ || int(k.x.size()) != m_) throw DomainError("form key has the wrong shape");
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
    return;
  }
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

Scalar SuperForm::coeff(const FormKey& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Scalar(0) : it->second;
}

SuperForm& SuperForm::operator+=(const SuperForm& o) {
  same_space(*this, o);
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

SuperForm& SuperForm::operator-=(const SuperForm& o) {
  same_space(*this, o);
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

SuperForm& SuperForm::operator*=(const Scalar& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

SuperForm SuperForm::degree_part(int k) const {
  SuperForm r(m_, n_);
  for (const auto& [key, c] : terms_)
    if (key.form_degree() == k) r.terms_.emplace(key, c);
  return r;
}

SuperForm SuperForm::bidegree_part(int a, int b) const {
  SuperForm r(m_, n_);
  for (const auto& [key, c] : terms_)
    if (card(key.a) == a && total_degree(key.b) == b) r.terms_.emplace(key, c);
  return r;
}

std::set<std::pair<int, int>> SuperForm::bidegrees() const {
  std::set<std::pair<int, int>> r;
  for (const auto& [key, c] : terms_) r.insert({card(key.a), total_degree(key.b)});
  return r;
}

bool SuperForm::homogeneous_parity(Parity& p) const {
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (first) {
      p = key.parity();
      first = false;
    } else if (key.parity() != p) {
      return false;
    }
  }
  if (first) p = Parity::even;
  return true;
}

SymExt SuperForm::superfunction_part() const {
  SymExt r(m_, n_);
  for (const auto& [key, c] : terms_)
    if (key.a == 0 && total_degree(key.b) == 0) r.add(key.x, key.c, c);
  return r;
}

SuperForm operator+(SuperForm a, const SuperForm& b) { return a += b; }
SuperForm operator-(SuperForm a, const SuperForm& b) { return a -= b; }
SuperForm operator*(const Scalar& s, SuperForm a) { return a *= s; }

SuperForm operator*(const SuperForm& a, const SuperForm& b) {
  same_space(a, b);
  SuperForm r(a.m(), a.n());
  for (const auto& [k1, c1] : a.terms())
    for (const auto& [k2, c2] : b.terms()) {
      if ((k1.a & k2.a) || (k1.c & k2.c)) continue;
      int s = merge_sign(k1.a, k2.a) * merge_sign(k1.c, k2.c) * sign_pow(long(card(k1.c)) * card(k2.a));
      r.add(FormKey{k1.a | k2.a, plus(k1.b, k2.b), k1.c | k2.c, plus(k1.x, k2.x)}, Scalar(s) * c1 * c2);
    }
  return r;
}

std::string to_string(const SuperForm& w) {
  if (w.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : w.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c;
    for (int i = 0; i < w.m(); ++i)
      if (k.x[i]) os << "*x" << i + 1 << (k.x[i] > 1 ? "^" + std::to_string(k.x[i]) : "");
    for (int i : indices(k.a)) os << "*dx" << i;
    for (int i = 0; i < w.n(); ++i)
      if (k.b[i]) os << "*dth" << i + 1 << (k.b[i] > 1 ? "^" + std::to_string(k.b[i]) : "");
    for (int i : indices(k.c)) os << "*th" << i;
  }
  return os.str();
}

OddConnection OddConnection::flat(int m, int n) {
  OddConnection A{m, n, {}};
  for (int i = 0; i < m; ++i) A.A.push_back(zero_poly_matrix(m, n, n));
  return A;
}

void validate(const OddConnection& A) {
  if (A.m < 0) throw DomainError("negative even dimension");
  check_dim(A.n);
  if (int(A.A.size()) != A.m) throw DomainError("connection needs one matrix per coordinate direction");
  for (const auto& M : A.A) {
    if (int(M.size()) != A.n) throw DomainError("connection matrix has the wrong shape");
    for (const auto& row : M) {
      if (int(row.size()) != A.n) throw DomainError("connection matrix has the wrong shape");
      for (const auto& p : row)
        if (p.nvars() != A.m) throw DomainError("connection coefficient lives on another base");
    }
  }
}

std::map<std::pair<int, int>, PolyMatrix> curvature_components(const OddConnection& A) {
  validate(A);
  std::map<std::pair<int, int>, PolyMatrix> R;
  for (int i = 1; i <= A.m; ++i)
    for (int j = i + 1; j <= A.m; ++j) {
      PolyMatrix M = zero_poly_matrix(A.m, A.n, A.n);
      for (int a = 1; a <= A.n; ++a)
        for (int b = 1; b <= A.n; ++b) {
          Poly v = A.at(j, a, b).derivative(i) - A.at(i, a, b).derivative(j);
          for (int c = 1; c <= A.n; ++c) v += A.at(i, a, c) * A.at(j, c, b) - A.at(j, a, c) * A.at(i, c, b);
          M[a - 1][b - 1] = v;
        }
      R.emplace(std::make_pair(i, j), M);
    }
  return R;
}

OrdForm exterior_d(const OrdForm& w) {
  if (w.nsym() != w.next()) throw DomainError("ordinary forms need as many differentials as coordinates");
  OrdForm r(w.nsym(), w.next());
  for (int i = 1; i <= w.nsym(); ++i) r += w.sym_derivative(i).ext_wedge_left(i);
  return r;
}

EndForm connection_form(const OddConnection& A) {
  validate(A);
  EndForm E(A.n, std::vector<OrdForm>(A.n, OrdForm(A.m, A.m)));
  for (int a = 1; a <= A.n; ++a)
    for (int b = 1; b <= A.n; ++b)
      for (int i = 1; i <= A.m; ++i)
        E[a - 1][b - 1] += SymExt::from_poly(A.at(i, a, b), A.m) * SymExt::ext_generator(A.m, A.m, i);
  return E;
}

EndForm curvature(const OddConnection& A) {
  EndForm w = connection_form(A);
  EndForm R(A.n, std::vector<OrdForm>(A.n, OrdForm(A.m, A.m)));
  for (int a = 0; a < A.n; ++a)
    for (int b = 0; b < A.n; ++b) {
      R[a][b] = exterior_d(w[a][b]);
      for (int c = 0; c < A.n; ++c) R[a][b] += w[a][c] * w[c][b];
    }
  return R;
}

BundleForm apply_end(const EndForm& E, const BundleForm& w) {
  if (E.size() != w.size()) throw DomainError("endomorphism and section have different ranks");
  BundleForm r;
  for (size_t a = 0; a < E.size(); ++a) {
    if (E[a].size() != w.size()) throw DomainError("endomorphism is not square");
    OrdForm v(w[0].nsym(), w[0].next());
    for (size_t b = 0; b < w.size(); ++b) v += E[a][b] * w[b];
    r.push_back(v);
  }
  return r;
}

static void check_bundle(const OddConnection& A, const BundleForm& w) {
  validate(A);
  if (int(w.size()) != A.n) throw DomainError("bundle-valued form has the wrong rank");
  for (const auto& f : w)
    if (f.nsym() != A.m || f.next() != A.m) throw DomainError("bundle-valued form lives on another base");
}

BundleForm twisted_d(const OddConnection& A, const BundleForm& w) {
  check_bundle(A, w);
  BundleForm r = apply_end(connection_form(A), w);
  for (int a = 0; a < A.n; ++a) r[a] += exterior_d(w[a]);
  return r;
}

BundleForm twisted_d_koszul(const OddConnection& A, const BundleForm& w) {
  check_bundle(A, w);
  BundleForm r(A.n, OrdForm(A.m, A.m));
  for (Mask J = 1; J <= full_mask(A.m); ++J) {
    auto js = indices(J);
    std::vector<Poly> val(A.n, Poly(A.m));
    for (size_t mu = 0; mu < js.size(); ++mu) {
      int j = js[mu];
      Mask I = J & ~single(j);
      std::vector<Poly> v;
      for (int a = 0; a < A.n; ++a) v.push_back(w[a].coefficient_poly(I));
      for (int a = 0; a < A.n; ++a) {
        Poly nv = v[a].derivative(j);
        for (int b = 0; b < A.n; ++b) nv += A.at(j, a + 1, b + 1) * v[b];
        val[a] += Scalar(sign_pow(long(mu))) * nv;
      }
    }
    for (int a = 0; a < A.n; ++a)
      r[a] += SymExt::from_poly(val[a], A.m) * SymExt::monomial(A.m, A.m, MultiDegree(A.m, 0), J);
  }
  return r;
}

EndForm twisted_d_end(const OddConnection& A, const EndForm& B, int p) {
  EndForm w = connection_form(A);
  if (int(B.size()) != A.n) throw DomainError("endomorphism-valued form has the wrong rank");
  EndForm r(A.n, std::vector<OrdForm>(A.n, OrdForm(A.m, A.m)));
  for (int a = 0; a < A.n; ++a)
    for (int b = 0; b < A.n; ++b) {
      r[a][b] = exterior_d(B[a][b]);
      for (int c = 0; c < A.n; ++c) r[a][b] += w[a][c] * B[c][b] - Scalar(sign_pow(p)) * (B[a][c] * w[c][b]);
    }
  return r;
}

SuperForm covariant_derivative(const OddConnection& A, int i, const SuperForm& w) {
  check_connection(A, w);
  if (i < 1 || i > A.m) throw DomainError("direction out of range");
  SuperForm r(A.m, A.n);
  for (const auto& [k, v] : w.terms()) {
    if (k.x[i - 1] > 0) r.add(FormKey{k.a, k.b, k.c, bumped(k.x, i, -1)}, v * k.x[i - 1]);
    for (int nu = 1; nu <= A.n; ++nu) {
      bool in_b = k.b[nu - 1] > 0, in_c = has(k.c, nu);
      if (!in_b && !in_c) continue;
      for (int ka = 1; ka <= A.n; ++ka) {
        const Poly& p = A.at(i, nu, ka);
        if (p.is_zero()) continue;
        for (const auto& [d, pc] : p.terms()) {
          if (in_b)
            r.add(FormKey{k.a, bumped(bumped(k.b, nu, -1), ka, 1), k.c, plus(k.x, d)}, -v * k.b[nu - 1] * pc);
          if (in_c) {
            Mask c0 = k.c & ~single(nu);
            if (has(c0, ka)) continue;
            int s = sign_pow(count_below(k.c, nu)) * sign_pow(count_below(c0, ka));
            r.add(FormKey{k.a, k.b, c0 | single(ka), plus(k.x, d)}, -v * Scalar(s) * pc);
          }
        }
      }
    }
  }
  return r;
}

SuperForm shift_left_id(const SuperForm& w) {
  QMatrix id = QMatrix::identity(w.n());
  return fiberwise(w, [&](Mask a, const MultiDegree& x, const SymExt& f, SuperForm& r) {
    scatter(r, a, x, twisted_shift_left(id, f));
  });
}

SuperForm shift_right_id(const SuperForm& w) {
  QMatrix id = QMatrix::identity(w.n());
  return fiberwise(w, [&](Mask a, const MultiDegree& x, const SymExt& f, SuperForm& r) {
    scatter(r, a, x, twisted_shift_right(id, f));
  });
}

SuperForm curvature_shift(const OddConnection& A, const SuperForm& w) {
  check_connection(A, w);
  std::vector<std::tuple<Mask, MultiDegree, QMatrix>> parts;
  for (const auto& [ij, R] : curvature_components(A))
    for (const auto& [d, M] : by_monomial(R, A.n)) parts.emplace_back(single(ij.first) | single(ij.second), d, M);
  return fiberwise(w, [&](Mask a, const MultiDegree& x, const SymExt& f, SuperForm& r) {
    for (const auto& [ij, d, M] : parts) {
      if (a & ij) continue;
      scatter(r, a | ij, plus(x, d), twisted_shift_right(M, f), Scalar(merge_sign(a, ij)));
    }
  });
}

SuperForm super_d(const OddConnection& A, const SuperForm& w) {
  check_connection(A, w);
  SuperForm r(A.m, A.n);
  for (int i = 1; i <= A.m; ++i) r += SuperForm::dx(A.m, A.n, i) * covariant_derivative(A, i, w);
  r += a_parity_sign(shift_left_id(w) + curvature_shift(A, w));
  return r;
}

SuperForm super_d_leibniz(const OddConnection& A, const SuperForm& w) {
  check_connection(A, w);
  int m = A.m, n = A.n;
  auto R = curvature_components(A);
  auto poly_form = [&](const Poly& p) { return SuperForm::function(p, n); };
  std::vector<SuperForm> d_theta, d_vartheta;
  for (int nu = 1; nu <= n; ++nu) {
    SuperForm t = SuperForm::vartheta(m, n, nu), v(m, n);
    for (int i = 1; i <= m; ++i)
      for (int ka = 1; ka <= n; ++ka) {
        const Poly& p = A.at(i, nu, ka);
        if (p.is_zero()) continue;
        SuperForm dxA = SuperForm::dx(m, n, i) * poly_form(p);
        t -= dxA * SuperForm::theta(m, n, ka);
        v -= dxA * SuperForm::vartheta(m, n, ka);
      }
    for (const auto& [ij, M] : R)
      for (int la = 1; la <= n; ++la) {
        const Poly& p = M[nu - 1][la - 1];
        if (p.is_zero()) continue;
        v += SuperForm::dx(m, n, ij.first) * SuperForm::dx(m, n, ij.second) * poly_form(p) * SuperForm::theta(m, n, la);
      }
    d_theta.push_back(t);
    d_vartheta.push_back(v);
  }

  SuperForm r(m, n);
  for (const auto& [k, c] : w.terms()) {
    // generators in order: dx^a, ϑ^b, θ^c; each entry holds (form, image under d, odd)
    struct Gen {
      SuperForm g, dg;
      bool odd;
    };
    std::vector<Gen> gens;
    for (int i : indices(k.a)) gens.push_back({SuperForm::dx(m, n, i), SuperForm(m, n), true});
    for (int nu = 1; nu <= n; ++nu)
      for (int e = 0; e < k.b[nu - 1]; ++e) gens.push_back({SuperForm::vartheta(m, n, nu), d_vartheta[nu - 1], false});
    for (int nu : indices(k.c)) gens.push_back({SuperForm::theta(m, n, nu), d_theta[nu - 1], true});

    Poly f = Poly::monomial(m, k.x, c);
    SuperForm df(m, n);
    for (int i = 1; i <= m; ++i) df += poly_form(f.derivative(i)) * SuperForm::dx(m, n, i);
    SuperForm rest = SuperForm::function(Poly(m, 1), n);
    for (const auto& g : gens) rest = rest * g.g;
    r += df * rest;

    SuperForm prefix = poly_form(f);
    bool odd_so_far = false;
    for (size_t t = 0; t < gens.size(); ++t) {
      if (!gens[t].dg.is_zero()) {
        SuperForm term = prefix * gens[t].dg;
        for (size_t u = t + 1; u < gens.size(); ++u) term = term * gens[u].g;
        r += Scalar(odd_so_far ? -1 : 1) * term;
      }
      prefix = prefix * gens[t].g;
      odd_so_far ^= gens[t].odd;
    }
  }
  return r;
}

Parity FieldGen::parity() const {
  Parity p;
  if (!coeff.homogeneous_parity(p)) throw DomainError("field coefficient must have a parity");
  return parity_of(int(odd) + int(p == Parity::odd));
}

FieldGen frame_field(int m, int n, bool odd, int index) {
  if (index < 1 || index > (odd ? n : m)) throw DomainError("frame field index out of range");
  return FieldGen{odd, index, SymExt(m, n, 1)};
}

SymExt act(const OddConnection& A, const FieldGen& X, const SymExt& f) {
  validate(A);
  if (f.nsym() != A.m || f.next() != A.n) throw DomainError("function lives on another superspace");
  SymExt base = X.odd ? f.ext_insert(X.index) : nabla(A, X.index, f);
  return X.coeff * base;
}

static bool is_frame(const FieldGen& X, int m, int n) { return X.coeff == SymExt(m, n, 1); }

std::vector<FieldGen> bracket(const OddConnection& A, const FieldGen& X, const FieldGen& Y) {
  validate(A);
  if (!is_frame(X, A.m, A.n) || !is_frame(Y, A.m, A.n)) throw DomainError("brackets are only tabulated for frame fields");
  std::vector<FieldGen> r;
  if (X.odd && Y.odd) return r;
  if (!X.odd && !Y.odd) {
    if (X.index == Y.index) return r;
    int i = std::min(X.index, Y.index), j = std::max(X.index, Y.index);
    Scalar s = X.index < Y.index ? -1 : 1;
    PolyMatrix R = curvature_components(A).at({i, j});
    for (int nu = 1; nu <= A.n; ++nu) {
      SymExt c(A.m, A.n);
      for (int la = 1; la <= A.n; ++la)
        c += SymExt::from_poly(R[nu - 1][la - 1], A.n) * SymExt::ext_generator(A.m, A.n, la);
      if (!c.is_zero()) r.push_back(FieldGen{true, nu, s * c});
    }
    return r;
  }
  const FieldGen& E = X.odd ? Y : X;
  const FieldGen& F = X.odd ? X : Y;
  Scalar s = X.odd ? -1 : 1;
  for (int al = 1; al <= A.n; ++al) {
    const Poly& p = A.at(E.index, al, F.index);
    if (!p.is_zero()) r.push_back(FieldGen{true, al, s * SymExt::from_poly(p, A.n)});
  }
  return r;
}

SuperForm interior(const FieldGen& X, const SuperForm& w) {
  if (X.coeff.nsym() != w.m() || X.coeff.next() != w.n()) throw DomainError("field lives on another superspace");
  SuperForm r(w.m(), w.n());
  for (const auto& [k, c] : w.terms()) {
    if (X.odd) {
      if (X.index < 1 || X.index > w.n()) throw DomainError("frame field index out of range");
      int e = k.b[X.index - 1];
      if (e > 0) r.add(FormKey{k.a, bumped(k.b, X.index, -1), k.c, k.x}, c * e);
    } else {
      if (X.index < 1 || X.index > w.m()) throw DomainError("frame field index out of range");
      if (has(k.a, X.index))
        r.add(FormKey{k.a & ~single(X.index), k.b, k.c, k.x}, c * Scalar(sign_pow(count_below(k.a, X.index))));
    }
  }
  if (is_frame(X, w.m(), w.n())) return r;
  return SuperForm::superfunction(X.coeff) * r;
}

SymExt contraction_chain(const SuperForm& w, const std::vector<FieldGen>& fields) {
  SuperForm r = w;
  for (const auto& X : fields) {
    r = interior(X, r);
    if (r.is_zero()) break;
  }
  return r.superfunction_part();
}

int evaluation_sign(const std::vector<FieldGen>& fields) {
  long inv = 0, odd_seen = 0;
  for (const auto& X : fields) {
    if (X.parity() == Parity::odd)
      ++odd_seen;
    else
      inv += odd_seen;
  }
  return sign_pow(inv);
}

SymExt evaluate(const SuperForm& w, const std::vector<FieldGen>& fields) {
  return Scalar(evaluation_sign(fields)) * contraction_chain(w, fields);
}

int coefficient_pull_sign(const std::vector<FieldGen>& fields, int j, Parity h) {
  if (j < 0 || j >= int(fields.size())) throw DomainError("argument position out of range");
  if (h == Parity::even) return 1;
  long e = 0;
  for (size_t l = j + 1; l < fields.size(); ++l) e += int(fields[l].parity() == Parity::odd) + 1;
  // flipping the parity of argument j changes the inversion count by the number of
  // odd arguments before it plus the number of even arguments after it
  long flip = 0;
  for (int l = 0; l < j; ++l) flip += fields[l].parity() == Parity::odd;
  for (size_t l = j + 1; l < fields.size(); ++l) flip += fields[l].parity() == Parity::even;
  return sign_pow(e + flip);
}

SymExt super_d_by_fields(const OddConnection& A, const SuperForm& w, const std::vector<FieldGen>& fields) {
  check_connection(A, w);
  if (fields.empty()) throw DomainError("the differential of a form needs at least one argument");
  for (const auto& X : fields)
    if (!is_frame(X, A.m, A.n)) throw DomainError("arguments must be frame fields");
  auto par = [](const FieldGen& X) { return int(X.odd); };
  using List = std::vector<FieldGen>;
  // ev(L_X i_P ω; rest from position pos)
  std::function<SymExt(const List&, const FieldGen&, size_t)> lie_term = [&](const List& P, const FieldGen& X,
                                                                             size_t pos) -> SymExt {
    if (pos == fields.size()) return act(A, X, contraction_chain(w, P));
    const FieldGen& Y = fields[pos];
    List P2 = P;
    P2.push_back(Y);
    SymExt r = lie_term(P2, X, pos + 1);
    for (const auto& Z : bracket(A, X, Y)) {
      List L = P;
      L.push_back(Z);
      L.insert(L.end(), fields.begin() + long(pos) + 1, fields.end());
      r -= contraction_chain(w, L);
    }
    return Scalar(sign_pow(par(X) * (par(Y) + 1))) * r;
  };
  // ev(d i_P ω; fields from position pos)
  std::function<SymExt(const List&, size_t)> d_term = [&](const List& P, size_t pos) -> SymExt {
    const FieldGen& X = fields[pos];
    if (pos + 1 == fields.size()) return act(A, X, contraction_chain(w, P));
    List P2 = P;
    P2.push_back(X);
    return lie_term(P, X, pos + 1) - Scalar(sign_pow(par(X))) * d_term(P2, pos + 1);
  };
  return Scalar(evaluation_sign(fields)) * d_term({}, 0);
}

std::vector<FormKey> form_basis(int m, int n, int k, int w) {
  std::vector<FormKey> r;
  for (Mask a = 0; a <= full_mask(m); ++a) {
    int bdeg = k - card(a);
    if (bdeg < 0) continue;
    for (const auto& b : multidegrees(n, bdeg))
      for (Mask c = 0; c <= full_mask(n); ++c) {
        int rest = w - card(a) - bdeg - card(c);
        if (rest < 0) continue;
        for (const auto& x : multidegrees_upto(m, rest)) r.push_back(FormKey{a, b, c, x});
      }
  }
  std::sort(r.begin(), r.end());
  return r;
}

std::vector<FormKey> form_basis_all(int m, int n, int w) {
  std::vector<FormKey> r;
  for (int k = 0; k <= w; ++k) {
    auto part = form_basis(m, n, k, w);
    r.insert(r.end(), part.begin(), part.end());
  }
  return r;
}

SuperForm delta_operator(const OddConnection& A, const SuperForm& w) {
  auto h = [](const SuperForm& v) { return a_parity_sign(shift_right_id(v)); };
  return super_d(A, h(w)) + h(super_d(A, w));
}

DeltaReport delta_kernel_check(const OddConnection& A, int weight_cutoff) {
  validate(A);
  DeltaReport rep;
  auto basis = form_basis_all(A.m, A.n, weight_cutoff);
  std::map<FormKey, int> index;
  for (size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], int(i));
  QMatrix M(int(basis.size()), int(basis.size()));
  std::set<long> eig;
  for (size_t j = 0; j < basis.size(); ++j) {
    const FormKey& k = basis[j];
    if (total_degree(k.b) == 0 && k.c == 0) ++rep.pure_dim;
    long lambda = total_degree(k.b) + card(k.c);
    eig.insert(lambda);
    SuperForm e = SuperForm::monomial(A.m, A.n, k);
    SuperForm D = delta_operator(A, e);
    if (D != Scalar(lambda) * e) rep.euler = false;
    SuperForm printed = D - shift_left_id(shift_right_id(e)) - shift_right_id(shift_left_id(e));
    if (!printed.is_zero()) rep.printed_vanishes = false;
    for (const auto& [key, c] : D.terms()) {
      auto it = index.find(key);
      if (it == index.end()) {
        rep.euler = false;
        continue;
      }
      M.at(it->second, int(j)) = c;
    }
  }
  rep.eigenvalues.assign(eig.begin(), eig.end());
  rep.kernel_dim = long(basis.size()) - rank(M);
  for (const auto& k : basis) {
    SuperForm v = SuperForm::monomial(A.m, A.n, k);
    for (long lambda : rep.eigenvalues) {
      v = delta_operator(A, v) - Scalar(lambda) * v;
      if (v.is_zero()) break;
    }
    if (!v.is_zero()) {
      rep.square_free = false;
      break;
    }
  }
  return rep;
}

static QMatrix differential_matrix(const OddConnection& A, int k, int w) {
  auto src = form_basis(A.m, A.n, k, w), dst = form_basis(A.m, A.n, k + 1, w);
  std::map<FormKey, int> index;
  for (size_t i = 0; i < dst.size(); ++i) index.emplace(dst[i], int(i));
  QMatrix M(int(dst.size()), int(src.size()));
  for (size_t j = 0; j < src.size(); ++j) {
    SuperForm d = super_d(A, SuperForm::monomial(A.m, A.n, src[j]));
    for (const auto& [key, c] : d.terms()) {
      if (key.weight() > w) continue;
      auto it = index.find(key);
      if (it == index.end()) throw InternalError("differential left the truncated complex");
      M.at(it->second, int(j)) = c;
    }
  }
  return M;
}

long cohomology_dim(const OddConnection& A, int k, int weight_cutoff) {
  validate(A);
  if (k < 0 || weight_cutoff < 0) throw DomainError("degree and weight cutoff must be non-negative");
  long dim = long(form_basis(A.m, A.n, k, weight_cutoff).size());
  if (dim == 0) return 0;
  long out = rank(differential_matrix(A, k, weight_cutoff));
  long in = k > 0 ? rank(differential_matrix(A, k - 1, weight_cutoff)) : 0;
  return dim - out - in;
}

}  // namespace sa
