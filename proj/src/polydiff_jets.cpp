#include "superalg/polydiff_jets.hpp"

#include <algorithm>

namespace sa {

PolyMatrix zero_poly_matrix(int m, int rows, int cols) {
  return PolyMatrix(rows, std::vector<Poly>(cols, Poly(m)));
}

PolyMatrix poly_identity(int m, int r) {
  PolyMatrix M = zero_poly_matrix(m, r, r);
  for (int i = 0; i < r; ++i) M[i][i] = Poly(m, 1);
  return M;
}

bool is_zero(const PolyMatrix& a) {
  for (const auto& row : a)
    for (const auto& p : row)
      if (!p.is_zero()) return false;
  return true;
}

namespace {

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b, int m) {
  int rows = int(a.size()), inner = int(b.size()), cols = b.empty() ? 0 : int(b[0].size());
  if (!a.empty() && int(a[0].size()) != inner) throw DomainError("rank mismatch in operator composition");
  PolyMatrix r = zero_poly_matrix(m, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (int j = 0; j < cols; ++j)
        if (!b[k][j].is_zero()) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

std::vector<MultiDegree> below(const MultiDegree& a) {
  std::vector<MultiDegree> out{MultiDegree(a.size(), 0)};
  for (size_t i = 0; i < a.size(); ++i) {
    std::vector<MultiDegree> next;
    for (const auto& d : out)
      for (int e = 0; e <= a[i]; ++e) {
        MultiDegree x = d;
        x[i] = e;
        next.push_back(x);
      }
    out = std::move(next);
  }
  return out;
}

Scalar multi_binomial(const MultiDegree& a, const MultiDegree& b) {
  mpz_class r = 1;
  for (size_t i = 0; i < a.size(); ++i) r *= binomial(a[i], b[i]);
  return Scalar(r);
}

MultiDegree operator-(const MultiDegree& a, const MultiDegree& b) {
  MultiDegree r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

MultiDegree operator+(const MultiDegree& a, const MultiDegree& b) {
  MultiDegree r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

PolySection pullback(const PolySection& eta, const std::vector<Poly>& phi) {
  PolySection r;
  for (const auto& e : eta) {
    if (e.nvars() != int(phi.size())) throw DomainError("section and map have different target dimension");
    r.push_back(phi.empty() ? e : e.compose(phi));
  }
  return r;
}

}  // namespace

PolyDiffOp::PolyDiffOp(int m, int r_out, int r_in) : m_(m), r_out_(r_out), r_in_(r_in) {
  if (m < 0 || r_out < 0 || r_in < 0) throw DomainError("negative dimension");
}

PolyDiffOp PolyDiffOp::identity(int m, int r) {
  PolyDiffOp D(m, r, r);
  D.add(MultiDegree(m, 0), poly_identity(m, r));
  return D;
}

PolyDiffOp PolyDiffOp::multiplication(const PolyMatrix& f, int m) {
  int rows = int(f.size()), cols = f.empty() ? 0 : int(f[0].size());
  PolyDiffOp D(m, rows, cols);
  D.add(MultiDegree(m, 0), f);
  return D;
}

PolyDiffOp PolyDiffOp::multiplication(const Poly& f, int r) {
  PolyMatrix M = zero_poly_matrix(f.nvars(), r, r);
  for (int i = 0; i < r; ++i) M[i][i] = f;
  return multiplication(M, f.nvars());
}

PolyDiffOp PolyDiffOp::partial(int m, int r, const MultiDegree& alpha, const Poly& coeff) {
  PolyDiffOp D(m, r, r);
  PolyMatrix M = zero_poly_matrix(m, r, r);
  for (int i = 0; i < r; ++i) M[i][i] = coeff;
  D.add(alpha, M);
  return D;
}

PolyMatrix PolyDiffOp::coeff(const MultiDegree& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? zero_poly_matrix(m_, r_out_, r_in_) : it->second;
}

void PolyDiffOp::add(const MultiDegree& alpha, const PolyMatrix& P) {
  if (int(alpha.size()) != m_) throw DomainError("multi-index has the wrong length");
  if (int(P.size()) != r_out_) throw DomainError("coefficient matrix has the wrong shape");
  for (const auto& row : P)
    if (int(row.size()) != r_in_) throw DomainError("coefficient matrix has the wrong shape");
  auto it = terms_.find(alpha);
  if (it == terms_.end()) it = terms_.emplace(alpha, zero_poly_matrix(m_, r_out_, r_in_)).first;
  for (int i = 0; i < r_out_; ++i)
    for (int j = 0; j < r_in_; ++j) {
      if (P[i][j].nvars() != m_ && !P[i][j].is_zero()) throw DomainError("coefficient in the wrong ring");
      it->second[i][j] += P[i][j];
    }
  if (sa::is_zero(it->second)) terms_.erase(it);
}

void PolyDiffOp::add(const MultiDegree& alpha, int row, int col, const Poly& p) {
  PolyMatrix M = zero_poly_matrix(m_, r_out_, r_in_);
  M.at(row).at(col) = p;
  add(alpha, M);
}

int PolyDiffOp::order() const {
  int o = -1;
  for (const auto& [a, P] : terms_) o = std::max(o, total_degree(a));
  return o;
}

PolyDiffOp& PolyDiffOp::operator+=(const PolyDiffOp& o) {
  if (m_ != o.m_ || r_out_ != o.r_out_ || r_in_ != o.r_in_) throw DomainError("operators of different shape");
  for (const auto& [a, P] : o.terms_) add(a, P);
  return *this;
}

PolyDiffOp& PolyDiffOp::operator-=(const PolyDiffOp& o) { return *this += Scalar(-1) * o; }

bool PolyDiffOp::operator==(const PolyDiffOp& o) const {
  return m_ == o.m_ && r_out_ == o.r_out_ && r_in_ == o.r_in_ && terms_ == o.terms_;
}

PolyDiffOp operator+(PolyDiffOp a, const PolyDiffOp& b) { return a += b; }
PolyDiffOp operator-(PolyDiffOp a, const PolyDiffOp& b) { return a -= b; }

PolyDiffOp operator*(const Scalar& c, const PolyDiffOp& a) {
  PolyDiffOp r(a.nvars(), a.r_out(), a.r_in());
  if (sgn(c) == 0) return r;
  for (const auto& [al, P] : a.terms()) {
    PolyMatrix Q = P;
    for (auto& row : Q)
      for (auto& p : row) p *= c;
    r.add(al, Q);
  }
  return r;
}

PolySection apply(const PolyDiffOp& D, const PolySection& s) {
  if (int(s.size()) != D.r_in()) throw DomainError("section has the wrong rank");
  for (const auto& p : s)
    if (p.nvars() != D.nvars()) throw DomainError("section lives over another space");
  PolySection r(D.r_out(), Poly(D.nvars()));
  for (const auto& [a, P] : D.terms())
    for (int j = 0; j < D.r_in(); ++j) {
      Poly ds = s[j].derivative(a);
      if (ds.is_zero()) continue;
      for (int i = 0; i < D.r_out(); ++i)
        if (!P[i][j].is_zero()) r[i] += P[i][j] * ds;
    }
  return r;
}

PolyDiffOp compose(const PolyDiffOp& A, const PolyDiffOp& B) {
  if (A.nvars() != B.nvars() || A.r_in() != B.r_out()) throw DomainError("operators cannot be composed");
  int m = A.nvars();
  PolyDiffOp r(m, A.r_out(), B.r_in());
  for (const auto& [al, P] : A.terms())
    for (const auto& [be, Q] : B.terms())
      for (const auto& ga : below(al)) {
        MultiDegree rest = al - ga;
        PolyMatrix dQ = Q;
        for (auto& row : dQ)
          for (auto& p : row) p = p.derivative(rest);
        PolyMatrix prod = mat_mul(P, dQ, m);
        if (sa::is_zero(prod)) continue;
        Scalar c = multi_binomial(al, ga);
        for (auto& row : prod)
          for (auto& p : row) p *= c;
        r.add(ga + be, prod);
      }
  return r;
}

PolyDiffOp commutator(const PolyDiffOp& D, const Poly& f) {
  if (f.nvars() != D.nvars()) throw DomainError("function lives over another space");
  return compose(D, PolyDiffOp::multiplication(f, D.r_in())) - compose(PolyDiffOp::multiplication(f, D.r_out()), D);
}

PolyDiffOp iterated_commutator(const PolyDiffOp& D, const std::vector<Poly>& fs) {
  int k = int(fs.size()), m = D.nvars();
  if (k >= 62) throw DomainError("too many functions");
  for (const auto& f : fs)
    if (f.nvars() != m) throw DomainError("function lives over another space");
  PolyDiffOp r(m, D.r_out(), D.r_in());
  for (Mask A = 0; A <= full_mask(k); ++A) {
    Poly fa(m, 1), fb(m, 1);
    for (int i = 1; i <= k; ++i) {
      if (has(A, i))
        fa = fa * fs[i - 1];
      else
        fb = fb * fs[i - 1];
    }
    PolyDiffOp t = compose(PolyDiffOp::multiplication(fa, D.r_out()),
                           compose(D, PolyDiffOp::multiplication(fb, D.r_in())));
    r += Scalar(sign_pow(card(A))) * t;
  }
  return r;
}

PolyDiffOp nested_commutator(const PolyDiffOp& D, const std::vector<Poly>& fs) {
  PolyDiffOp r = D;
  for (const auto& f : fs) r = commutator(r, f);
  return r;
}

std::optional<int> detect_order(const PolyDiffOp& D, int max_probe) {
  int m = D.nvars();
  // level[j] holds commutators with non-decreasing coordinate tuples of length j, with the last index used
  std::vector<std::pair<PolyDiffOp, int>> level;
  if (!D.is_zero()) level.emplace_back(D, 1);
  for (int n = -1; n <= max_probe; ++n) {
    if (level.empty()) return n;
    if (n == max_probe) break;
    std::vector<std::pair<PolyDiffOp, int>> next;
    for (const auto& [X, last] : level)
      for (int i = last; i <= m; ++i) {
        PolyDiffOp c = commutator(X, Poly::variable(m, i));
        if (!c.is_zero()) next.emplace_back(std::move(c), i);
      }
    level = std::move(next);
  }
  return std::nullopt;
}

PolyMatrix principal_symbol(const PolyDiffOp& D, const std::vector<Poly>& fs) {
  int k = D.order();
  if (int(fs.size()) != std::max(k, 0))
    throw DomainError("principal symbol needs exactly " + std::to_string(std::max(k, 0)) + " functions");
  PolyDiffOp c = iterated_commutator(D, fs);
  if (c.order() > 0) throw InternalError("iterated commutator is not a multiplication operator");
  return c.coeff(MultiDegree(D.nvars(), 0));
}

PolySection JetClass::representative() const {
  int m = int(point.size());
  std::vector<Poly> shift;
  for (int i = 1; i <= m; ++i) shift.push_back(Poly::variable(m, i) - Poly(m, point[i - 1]));
  PolySection r;
  for (const auto& t : taylor) r.push_back(m == 0 ? t : t.compose(shift));
  return r;
}

std::vector<Scalar> JetClass::coefficients() const {
  std::vector<Scalar> out;
  auto mons = multidegrees_upto(int(point.size()), order);
  for (const auto& t : taylor)
    for (const auto& b : mons) out.push_back(t.coeff(b));
  return out;
}

JetClass jet(const PolySection& s, int k, const std::vector<Scalar>& p) {
  if (k < 0) throw DomainError("negative jet order");
  int m = int(p.size());
  std::vector<Poly> shift;
  for (int i = 1; i <= m; ++i) shift.push_back(Poly::variable(m, i) + Poly(m, p[i - 1]));
  JetClass J{p, k, {}};
  for (const auto& c : s) {
    if (c.nvars() != m) throw DomainError("point has the wrong dimension");
    J.taylor.push_back((m == 0 ? c : c.compose(shift)).truncated(k));
  }
  return J;
}

int jet_coefficient_count(int m, int r, int k) { return r * int(multidegrees_upto(m, k).size()); }

QMatrix factor_through_jet(const PolyDiffOp& D, int k, const std::vector<Scalar>& p) {
  if (D.order() > k) throw PreconditionError("operator order exceeds the jet order");
  if (int(p.size()) != D.nvars()) throw DomainError("point has the wrong dimension");
  auto mons = multidegrees_upto(D.nvars(), k);
  std::map<MultiDegree, int> idx;
  for (size_t i = 0; i < mons.size(); ++i) idx[mons[i]] = int(i);
  int N = int(mons.size());
  QMatrix M(D.r_out(), D.r_in() * N);
  for (const auto& [a, P] : D.terms()) {
    Scalar af(multi_factorial(a));
    for (int o = 0; o < D.r_out(); ++o)
      for (int i = 0; i < D.r_in(); ++i)
        if (!P[o][i].is_zero()) M.at(o, i * N + idx.at(a)) += af * P[o][i].eval(p);
  }
  return M;
}

CovariantTensor covariant_derivatives(const PolySection& s, int l, const PolyConnection& A, int m) {
  if (l < 0) throw DomainError("negative order");
  int r = int(s.size());
  if (!A.empty() && int(A.size()) != m) throw DomainError("connection needs one matrix per coordinate");
  for (const auto& Ai : A)
    if (int(Ai.size()) != r) throw DomainError("connection matrix has the wrong shape");
  CovariantTensor cur{{{}, s}};
  for (int j = 1; j <= l; ++j) {
    CovariantTensor next;
    for (const auto& [key, sec] : cur)
      for (int i = 1; i <= m; ++i) {
        PolySection v(r, Poly(m));
        for (int c = 0; c < r; ++c) {
          v[c] = sec[c].derivative(i);
          if (!A.empty())
            for (int d = 0; d < r; ++d)
              if (!A[i - 1][c][d].is_zero()) v[c] += A[i - 1][c][d] * sec[d];
        }
        std::vector<int> k2{i};
        k2.insert(k2.end(), key.begin(), key.end());
        next.emplace(std::move(k2), std::move(v));
      }
    cur = std::move(next);
  }
  return cur;
}

CovariantTensor symmetrized_covariant_jet(const PolySection& s, int l, const PolyConnection& A, int m) {
  CovariantTensor full = covariant_derivatives(s, l, A, m);
  CovariantTensor out;
  for (const auto& [key, sec] : full) {
    if (!std::is_sorted(key.begin(), key.end())) continue;
    std::vector<int> perm = key;
    PolySection sum(s.size(), Poly(m));
    long count = 0;
    do {
      const auto& t = full.at(perm);
      for (size_t c = 0; c < s.size(); ++c) sum[c] += t[c];
      ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (auto& p : sum) p *= Scalar(1, count);
    out.emplace(key, std::move(sum));
  }
  return out;
}

PolySection apply(const DiffOpAlong& Phi, const PolySection& eta) { return sa::apply(Phi.D, pullback(eta, Phi.phi)); }

DiffOpAlong commutator_along(const DiffOpAlong& Phi, const Poly& f) {
  if (f.nvars() != int(Phi.phi.size())) throw DomainError("function lives over another space");
  for (const auto& p : Phi.phi)
    if (p.nvars() != Phi.D.nvars()) throw DomainError("map and operator live over different spaces");
  Poly pulled = Phi.phi.empty() ? Poly(Phi.D.nvars(), f.coeff({})) : f.compose(Phi.phi);
  return {commutator(Phi.D, pulled), Phi.phi};
}

}  // namespace sa
