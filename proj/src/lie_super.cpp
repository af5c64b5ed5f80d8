#include "superalg/lie_super.hpp"

#include <sstream>

namespace sa {

namespace {

Vec zeros(int n) { return Vec(n, Scalar(0)); }

void axpy(Vec& y, const Scalar& a, const Vec& x) {
  if (sgn(a) == 0) return;
  for (size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

std::string triple(int i, int j, int k) {
  std::ostringstream os;
  os << "(" << i << "," << j << "," << k << ")";
  return os.str();
}

}  // namespace

LieSuperData LieSuperData::abelian(int p, int q) {
  if (p < 0 || q < 0) throw DomainError("negative dimension");
  LieSuperData L{p, q, {}};
  L.c.assign(p + q, std::vector<Vec>(p + q, zeros(p + q)));
  return L;
}

Vec LieSuperData::basis(int i) const {
  Vec v = zeros(dim());
  v[i] = 1;
  return v;
}

Vec LieSuperData::bracket(const Vec& x, const Vec& y) const {
  Vec r = zeros(dim());
  for (int i = 0; i < dim(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (int j = 0; j < dim(); ++j)
      if (sgn(y[j]) != 0) axpy(r, x[i] * y[j], c[i][j]);
  }
  return r;
}

void validate(const LieSuperData& L) {
  if (L.even_dim < 0 || L.odd_dim < 0) throw DomainError("negative dimension");
  int n = L.dim();
  if (int(L.c.size()) != n) throw DomainError("structure constant table has wrong size");
  for (const auto& row : L.c) {
    if (int(row.size()) != n) throw DomainError("structure constant table has wrong size");
    for (const auto& v : row)
      if (int(v.size()) != n) throw DomainError("structure constant vector has wrong length");
  }
}

LieReport check_lie_superalgebra(const LieSuperData& L) {
  validate(L);
  LieReport rep;
  int n = L.dim();
  auto par = [&](int i) { return as_int(L.parity(i)); };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int s = sign_pow(par(i) * par(j));
      Vec lhs = L.c[i][j];
      Vec alt = L.c[j][i], prn = L.c[j][i];
      for (auto& x : alt) x *= -s;
      for (auto& x : prn) x *= s;
      if (lhs != alt && rep.superalternating) {
        rep.superalternating = false;
        rep.failures.push_back("superalternation fails at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
      if (lhs != prn) rep.printed_convention = false;
      Parity target = L.parity(i) + L.parity(j);
      for (int k = 0; k < n; ++k)
        if (sgn(lhs[k]) != 0 && L.parity(k) != target && rep.parity_additive) {
          rep.parity_additive = false;
          rep.failures.push_back("bracket of (" + std::to_string(i) + "," + std::to_string(j) +
                                 ") leaves its parity component");
        }
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec ei = L.basis(i), ej = L.basis(j), ek = L.basis(k);
        Vec lhs = L.bracket(ei, L.c[j][k]);
        Vec rhs = L.bracket(L.c[i][j], ek);
        axpy(rhs, sign_pow(par(i) * par(j)), L.bracket(ej, L.c[i][k]));
        if (lhs != rhs) {
          if (rep.jacobi) rep.failures.push_back("super-Jacobi fails at " + triple(i, j, k));
          rep.jacobi = false;
          rep.jacobi_failures.push_back({i, j, k});
        }
      }
  return rep;
}

RepAndForm RepAndForm::zero(int g_dim, int s_dim) {
  if (g_dim < 0 || s_dim < 0) throw DomainError("negative dimension");
  RepAndForm d;
  d.g_dim = g_dim;
  d.s_dim = s_dim;
  d.g_bracket.assign(g_dim, std::vector<Vec>(g_dim, zeros(g_dim)));
  d.rho.assign(g_dim, QMatrix(s_dim, s_dim));
  d.B.assign(s_dim, std::vector<Vec>(s_dim, zeros(g_dim)));
  return d;
}

Vec RepAndForm::g_br(int a, int b) const {
  if (g_bracket.empty()) return zeros(g_dim);
  return g_bracket[a][b];
}

void validate(const RepAndForm& d) {
  if (d.g_dim < 0 || d.s_dim < 0) throw DomainError("negative dimension");
  if (!d.g_bracket.empty()) {
    if (int(d.g_bracket.size()) != d.g_dim) throw DomainError("g bracket table has wrong size");
    for (const auto& row : d.g_bracket) {
      if (int(row.size()) != d.g_dim) throw DomainError("g bracket table has wrong size");
      for (const auto& v : row)
        if (int(v.size()) != d.g_dim) throw DomainError("g bracket vector has wrong length");
    }
  }
  if (int(d.rho.size()) != d.g_dim) throw DomainError("need one matrix per basis element of g");
  for (const auto& m : d.rho)
    if (m.rows() != d.s_dim || m.cols() != d.s_dim) throw DomainError("representation matrix has wrong shape");
  if (int(d.B.size()) != d.s_dim) throw DomainError("B table has wrong size");
  for (const auto& row : d.B) {
    if (int(row.size()) != d.s_dim) throw DomainError("B table has wrong size");
    for (const auto& v : row)
      if (int(v.size()) != d.g_dim) throw DomainError("B value has wrong length");
  }
}

namespace {

QMatrix rho_of(const RepAndForm& d, const Vec& x) {
  QMatrix m(d.s_dim, d.s_dim);
  for (int a = 0; a < d.g_dim; ++a)
    if (sgn(x[a]) != 0) m = m + scaled(d.rho[a], x[a]);
  return m;
}

Vec B_of(const RepAndForm& d, const Vec& s, const Vec& t) {
  Vec r = zeros(d.g_dim);
  for (int i = 0; i < d.s_dim; ++i) {
    if (sgn(s[i]) == 0) continue;
    for (int j = 0; j < d.s_dim; ++j)
      if (sgn(t[j]) != 0) axpy(r, s[i] * t[j], d.B[i][j]);
  }
  return r;
}

Vec g_bracket_of(const RepAndForm& d, const Vec& x, const Vec& y) {
  Vec r = zeros(d.g_dim);
  for (int a = 0; a < d.g_dim; ++a) {
    if (sgn(x[a]) == 0) continue;
    for (int b = 0; b < d.g_dim; ++b)
      if (sgn(y[b]) != 0) axpy(r, x[a] * y[b], d.g_br(a, b));
  }
  return r;
}

Vec unit(int n, int i) {
  Vec v = zeros(n);
  v[i] = 1;
  return v;
}

bool rho_is_rep(const RepAndForm& d, std::vector<std::string>* why) {
  for (int a = 0; a < d.g_dim; ++a)
    for (int b = 0; b < d.g_dim; ++b) {
      QMatrix lhs = rho_of(d, d.g_br(a, b));
      QMatrix rhs = d.rho[a] * d.rho[b] - d.rho[b] * d.rho[a];
      if (!(lhs == rhs)) {
        if (why) why->push_back("rho([X" + std::to_string(a) + ",X" + std::to_string(b) + "]) != [rho,rho]");
        return false;
      }
    }
  return true;
}

}  // namespace

StructureReport check_structure_conditions(const RepAndForm& d) {
  validate(d);
  StructureReport rep;
  int g = d.g_dim, S = d.s_dim;
  for (int a = 0; a < g && rep.g_is_lie; ++a)
    for (int b = 0; b < g && rep.g_is_lie; ++b) {
      Vec ab = d.g_br(a, b), ba = d.g_br(b, a);
      for (auto& x : ba) x = -x;
      if (ab != ba) rep.g_is_lie = false;
      for (int c = 0; c < g && rep.g_is_lie; ++c) {
        Vec lhs = g_bracket_of(d, unit(g, a), d.g_br(b, c));
        Vec rhs = g_bracket_of(d, d.g_br(a, b), unit(g, c));
        axpy(rhs, 1, g_bracket_of(d, unit(g, b), d.g_br(a, c)));
        if (lhs != rhs) rep.g_is_lie = false;
      }
    }
  if (!rep.g_is_lie) rep.failures.push_back("g is not a Lie algebra");
  rep.rho_is_representation = rho_is_rep(d, &rep.failures);
  for (int s = 0; s < S; ++s)
    for (int t = 0; t < S; ++t)
      if (d.B[s][t] != d.B[t][s]) rep.B_symmetric = false;
  if (!rep.B_symmetric) rep.failures.push_back("B is not symmetric");
  // [X, B(s,t)] = B(ρ(X)s, t) + B(s, ρ(X)t)
  for (int a = 0; a < g; ++a)
    for (int s = 0; s < S; ++s)
      for (int t = 0; t < S; ++t) {
        Vec lhs = g_bracket_of(d, unit(g, a), d.B[s][t]);
        Vec rs = sa::apply(d.rho[a], unit(S, s)), rt = sa::apply(d.rho[a], unit(S, t));
        Vec rhs = B_of(d, rs, unit(S, t));
        axpy(rhs, 1, B_of(d, unit(S, s), rt));
        if (lhs != rhs && rep.equivariant) {
          rep.equivariant = false;
          rep.failures.push_back("B is not equivariant at X" + std::to_string(a));
        }
      }
  // ρ(B(s,t))u + ρ(B(t,u))s + ρ(B(u,s))t = 0
  for (int s = 0; s < S; ++s)
    for (int t = 0; t < S; ++t)
      for (int u = 0; u < S; ++u) {
        Vec sum = sa::apply(rho_of(d, d.B[s][t]), unit(S, u));
        axpy(sum, 1, sa::apply(rho_of(d, d.B[t][u]), unit(S, s)));
        axpy(sum, 1, sa::apply(rho_of(d, d.B[u][s]), unit(S, t)));
        if (!is_zero(sum) && rep.cubic_vanishes) {
          rep.cubic_vanishes = false;
          rep.failures.push_back("cubic symmetrization nonzero at " + triple(s, t, u));
        }
      }
  return rep;
}

LieSuperData build_from_rho_B(const RepAndForm& d) {
  validate(d);
  if (!rho_is_rep(d, nullptr)) throw DomainError("rho is not a representation");
  int g = d.g_dim, S = d.s_dim;
  LieSuperData L = LieSuperData::abelian(g, S);
  for (int a = 0; a < g; ++a)
    for (int b = 0; b < g; ++b) {
      Vec v = d.g_br(a, b);
      for (int k = 0; k < g; ++k) L.c[a][b][k] = v[k];
    }
  for (int a = 0; a < g; ++a)
    for (int s = 0; s < S; ++s)
      for (int k = 0; k < S; ++k) {
        L.c[a][g + s][g + k] = d.rho[a].at(k, s);
        L.c[g + s][a][g + k] = -d.rho[a].at(k, s);
      }
  for (int s = 0; s < S; ++s)
    for (int t = 0; t < S; ++t)
      for (int k = 0; k < g; ++k) L.c[g + s][g + t][k] = d.B[s][t][k];
  return L;
}

LieSuperData semidirect(const RepAndForm& d) {
  RepAndForm z = d;
  for (auto& row : z.B)
    for (auto& v : row) v = zeros(d.g_dim);
  return build_from_rho_B(z);
}

LieSuperData endo_superalgebra(int p, int q) {
  if (p < 0 || q < 0 || p + q == 0) throw DomainError("need p, q >= 0 with p + q >= 1");
  int n = p + q;
  // matrix unit E_ij is even when i, j lie in the same block
  std::vector<std::pair<int, int>> ev, od;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ((i < p) == (j < p) ? ev : od).push_back({i, j});
  std::vector<std::pair<int, int>> units = ev;
  units.insert(units.end(), od.begin(), od.end());
  int N = n * n;
  std::vector<std::vector<int>> index(n, std::vector<int>(n));
  for (int k = 0; k < N; ++k) index[units[k].first][units[k].second] = k;
  LieSuperData L = LieSuperData::abelian(int(ev.size()), int(od.size()));
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      auto [i, j] = units[a];
      auto [k, l] = units[b];
      int s = sign_pow(as_int(L.parity(a)) * as_int(L.parity(b)));
      // E_ij E_kl = δ_jk E_il
      if (j == k) L.c[a][b][index[i][l]] += 1;
      if (l == i) L.c[a][b][index[k][j]] -= s;
    }
  return L;
}

LieSuperData even_part(const LieSuperData& L) {
  validate(L);
  LieSuperData E = LieSuperData::abelian(L.even_dim, 0);
  for (int i = 0; i < L.even_dim; ++i)
    for (int j = 0; j < L.even_dim; ++j)
      for (int k = 0; k < L.even_dim; ++k) E.c[i][j][k] = L.c[i][j][k];
  return E;
}

}  // namespace sa
