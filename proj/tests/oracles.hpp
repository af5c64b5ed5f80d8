#pragma once

// Independent reference computations used by the tests. Nothing here calls into the
// sign machinery of the library it is checking.

#include "superalg/core.hpp"
#include "superalg/linalg.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

namespace oracle {

using sa::Scalar;

// sign of a sequence of distinct integers by counting transpositions in a bubble sort
inline int bubble_sign(std::vector<int> v) {
  int s = 1;
  for (size_t pass = 0; pass < v.size(); ++pass)
    for (size_t j = 0; j + 1 < v.size(); ++j)
      if (v[j] > v[j + 1]) {
        std::swap(v[j], v[j + 1]);
        s = -s;
      }
  return s;
}

// sign via cycle decomposition: (-1)^(k - #cycles)
inline int cycle_sign(const std::vector<int>& img) {
  int k = int(img.size()), cycles = 0;
  std::vector<bool> seen(k, false);
  for (int i = 0; i < k; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = i; !seen[j]; j = img[j] - 1) seen[j] = true;
  }
  return (k - cycles) % 2 ? -1 : 1;
}

// Exterior monomials as sorted index lists; product by concatenation and bubble sort.
using Word = std::vector<int>;
using ExtMap = std::map<Word, Scalar>;

inline void ext_add(ExtMap& m, const Word& w, const Scalar& c) {
  if (sgn(c) == 0) return;
  Scalar& t = m[w];
  t += c;
  if (sgn(t) == 0) m.erase(w);
}

inline ExtMap ext_mul(const ExtMap& a, const ExtMap& b) {
  ExtMap r;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      Word s = w;
      std::sort(s.begin(), s.end());
      if (std::adjacent_find(s.begin(), s.end()) != s.end()) continue;
      ext_add(r, s, bubble_sign(w) * ca * cb);
    }
  return r;
}

// <alpha, X> for monomials: 1 when the index lists agree
inline Scalar pairing(const ExtMap& a, const Word& x) {
  auto it = a.find(x);
  return it == a.end() ? Scalar(0) : it->second;
}

// rank by naive Gaussian elimination over Q, different from both library routines
inline long naive_rank(std::vector<std::vector<Scalar>> a) {
  long r = 0;
  int rows = int(a.size());
  int cols = rows ? int(a[0].size()) : 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = int(r); i < rows; ++i)
      if (sgn(a[i][c]) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(a[p], a[r]);
    for (int i = 0; i < rows; ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      Scalar f = a[i][c] / a[r][c];
      for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

inline long naive_rank(const sa::QMatrix& m) {
  std::vector<std::vector<Scalar>> a(m.rows(), std::vector<Scalar>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) a[i][j] = m.at(i, j);
  return naive_rank(a);
}

inline long choose(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// number of monomials of degree k in n commuting variables
inline long sym_count(long n, long k) { return n == 0 ? (k == 0) : choose(n + k - 1, k); }

// Row reduction over Q on sparse rows; returns the rank of everything fed in so far.
class SparseEliminator {
 public:
  void add_row(std::map<int, Scalar> row) {
    for (auto it = row.begin(); it != row.end();) {
      if (sgn(it->second) == 0) {
        it = row.erase(it);
        continue;
      }
      auto p = pivots_.find(it->first);
      if (p == pivots_.end()) {
        ++it;
        continue;
      }
      Scalar f = it->second;
      for (const auto& [j, v] : p->second) {
        Scalar& t = row[j];
        t -= f * v;
      }
      it = row.begin();
    }
    if (row.empty()) return;
    int lead = row.begin()->first;
    Scalar inv = 1 / row.begin()->second;
    for (auto& [j, v] : row) v *= inv;
    pivots_.emplace(lead, std::move(row));
  }
  long rank() const { return long(pivots_.size()); }

 private:
  std::map<int, std::map<int, Scalar>> pivots_;
};

inline int mask_sign(unsigned a, unsigned b) {
  if (a & b) return 0;
  std::vector<int> w;
  for (int i = 0; i < 32; ++i)
    if (a >> i & 1) w.push_back(i);
  for (int i = 0; i < 32; ++i)
    if (b >> i & 1) w.push_back(i);
  return bubble_sign(w);
}

// Dimension of the space of linear T on ΛV* (dim V = n) with T(1) = 0 and
// T(dv_mu ∧ b) = T(dv_mu) ∧ b + s dv_mu ∧ T(b) for every generator and basis monomial b.
// parity < 0: ungraded (s = +1, no restriction); parity 0/1: T of that parity, s = (-1)^parity.
inline long leibniz_solution_dim(int n, int parity) {
  int N = 1 << n;
  auto allowed = [&](unsigned c, unsigned b) {
    if (b == 0) return false;
    if (parity < 0) return true;
    return (__builtin_popcount(c) + __builtin_popcount(b) + parity) % 2 == 0;
  };
  long vars = 0;
  for (int c = 0; c < N; ++c)
    for (int b = 0; b < N; ++b) vars += allowed(c, b);
  int s = parity == 1 ? -1 : 1;
  auto var = [&](unsigned c, unsigned b) { return int(c) * N + int(b); };
  SparseEliminator el;
  for (int mu = 0; mu < n; ++mu) {
    unsigned g = 1u << mu;
    for (unsigned b = 0; b < unsigned(N); ++b) {
      std::map<unsigned, std::map<int, Scalar>> rows;  // output basis c -> linear form
      if (!(b & g)) {
        unsigned gb = g | b;
        int sg = mask_sign(g, b);
        for (unsigned c = 0; c < unsigned(N); ++c)
          if (allowed(c, gb)) rows[c][var(c, gb)] += sg;
      }
      for (unsigned c1 = 0; c1 < unsigned(N); ++c1) {
        if (!allowed(c1, g)) continue;
        int sg = mask_sign(c1, b);
        if (sg) rows[c1 | b][var(c1, g)] -= sg;
      }
      for (unsigned c2 = 0; c2 < unsigned(N); ++c2) {
        if (!allowed(c2, b)) continue;
        int sg = mask_sign(g, c2);
        if (sg) rows[g | c2][var(c2, b)] -= s * sg;
      }
      for (auto& [c, row] : rows) el.add_row(row);
    }
  }
  return vars - el.rank();
}

}  // namespace oracle
