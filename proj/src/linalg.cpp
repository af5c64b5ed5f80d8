#include "superalg/linalg.hpp"

#include <map>
#include <numeric>

namespace sa {

bool QMatrix::is_zero() const {
  for (const auto& x : a_)
    if (sgn(x) != 0) return false;
  return true;
}

bool QMatrix::operator==(const QMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix shape mismatch");
  QMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (sgn(a.at(i, k)) == 0) continue;
      for (int j = 0; j < b.cols(); ++j)
        if (sgn(b.at(k, j)) != 0) c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return c;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DomainError("matrix shape mismatch");
  QMatrix c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
  return c;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) { return a + scaled(b, -1); }

QMatrix scaled(const QMatrix& a, const Scalar& s) {
  QMatrix c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) * s;
  return c;
}

QMatrix transpose(const QMatrix& a) {
  QMatrix t(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) t.at(j, i) = a.at(i, j);
  return t;
}

std::vector<Scalar> apply(const QMatrix& a, const std::vector<Scalar>& x) {
  if (int(x.size()) != a.cols()) throw DomainError("vector length mismatch");
  std::vector<Scalar> y(a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (sgn(a.at(i, j)) != 0) y[i] += a.at(i, j) * x[j];
  return y;
}

long rank_bareiss(const QMatrix& a) {
  int r = a.rows(), c = a.cols();
  std::vector<std::vector<mpz_class>> m(r, std::vector<mpz_class>(c));
  for (int i = 0; i < r; ++i) {
    mpz_class l = 1;
    for (int j = 0; j < c; ++j)
      if (sgn(a.at(i, j)) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.at(i, j).get_den_mpz_t());
    for (int j = 0; j < c; ++j)
      if (sgn(a.at(i, j)) != 0) m[i][j] = a.at(i, j).get_num() * (l / a.at(i, j).get_den());
  }
  mpz_class prev = 1;
  long rank = 0;
  for (int col = 0; col < c && rank < r; ++col) {
    int piv = -1;
    for (int i = int(rank); i < r; ++i)
      if (m[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    const auto& p = m[rank];
    for (int i = int(rank) + 1; i < r; ++i) {
      auto& row = m[i];
      const mpz_class f = row[col];
      for (int j = col + 1; j < c; ++j) {
        if (f == 0) {
          if (row[j] != 0) {
            row[j] *= p[col];
            mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), prev.get_mpz_t());
          }
          continue;
        }
        row[j] = p[col] * row[j] - f * p[j];
        mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), prev.get_mpz_t());
      }
      row[col] = 0;
    }
    prev = p[col];
    ++rank;
  }
  return rank;
}

long rank_sparse(const QMatrix& a) {
  using Row = std::map<int, Scalar>;
  std::map<int, Row> pivots;  // leading column -> normalized row
  long rank = 0;
  for (int i = 0; i < a.rows(); ++i) {
    Row row;
    for (int j = 0; j < a.cols(); ++j)
      if (sgn(a.at(i, j)) != 0) row[j] = a.at(i, j);
    while (!row.empty()) {
      auto lead = row.begin();
      auto it = pivots.find(lead->first);
      if (it == pivots.end()) {
        Scalar inv = 1 / lead->second;
        for (auto& [j, v] : row) v *= inv;
        pivots.emplace(lead->first, std::move(row));
        ++rank;
        break;
      }
      Scalar f = lead->second;
      for (const auto& [j, v] : it->second) {
        Scalar& t = row[j];
        t -= f * v;
        if (sgn(t) == 0) row.erase(j);
      }
    }
  }
  return rank;
}

namespace {

struct Rref {
  QMatrix m;
  std::vector<int> pivot_cols;  // pivot column for row i
  std::vector<Scalar> rhs;
};

Rref reduce(const QMatrix& a, std::vector<Scalar> rhs, const std::vector<int>& order) {
  Rref out{a, {}, std::move(rhs)};
  auto& m = out.m;
  int r = m.rows();
  int row = 0;
  for (int col : order) {
    if (row >= r) break;
    int piv = -1;
    for (int i = row; i < r; ++i)
      if (sgn(m.at(i, col)) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(row, j));
      if (!out.rhs.empty()) std::swap(out.rhs[piv], out.rhs[row]);
    }
    Scalar inv = 1 / m.at(row, col);
    for (int j = 0; j < m.cols(); ++j)
      if (sgn(m.at(row, j)) != 0) m.at(row, j) *= inv;
    if (!out.rhs.empty()) out.rhs[row] *= inv;
    for (int i = 0; i < r; ++i) {
      if (i == row || sgn(m.at(i, col)) == 0) continue;
      Scalar f = m.at(i, col);
      for (int j = 0; j < m.cols(); ++j)
        if (sgn(m.at(row, j)) != 0) m.at(i, j) -= f * m.at(row, j);
      if (!out.rhs.empty()) out.rhs[i] -= f * out.rhs[row];
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  return out;
}

std::vector<int> natural_order(int n) {
  std::vector<int> o(n);
  std::iota(o.begin(), o.end(), 0);
  return o;
}

}  // namespace

QMatrix nullspace(const QMatrix& a) {
  Rref rr = reduce(a, {}, natural_order(a.cols()));
  std::vector<char> is_pivot(a.cols(), 0);
  for (int c : rr.pivot_cols) is_pivot[c] = 1;
  std::vector<int> free;
  for (int j = 0; j < a.cols(); ++j)
    if (!is_pivot[j]) free.push_back(j);
  QMatrix basis(a.cols(), int(free.size()));
  for (size_t k = 0; k < free.size(); ++k) {
    basis.at(free[k], int(k)) = 1;
    for (size_t i = 0; i < rr.pivot_cols.size(); ++i) basis.at(rr.pivot_cols[i], int(k)) = -rr.m.at(int(i), free[k]);
  }
  return basis;
}

std::optional<std::vector<Scalar>> solve(const QMatrix& a, const std::vector<Scalar>& b,
                                         const std::vector<int>& column_order) {
  if (int(b.size()) != a.rows()) throw DomainError("rhs length mismatch");
  std::vector<int> order = column_order.empty() ? natural_order(a.cols()) : column_order;
  Rref rr = reduce(a, b, order);
  for (int i = int(rr.pivot_cols.size()); i < a.rows(); ++i)
    if (sgn(rr.rhs[i]) != 0) return std::nullopt;
  std::vector<Scalar> x(a.cols());
  for (size_t i = 0; i < rr.pivot_cols.size(); ++i) x[rr.pivot_cols[i]] = rr.rhs[i];
  return x;
}

std::optional<QMatrix> inverse(const QMatrix& a) {
  if (a.rows() != a.cols()) throw DomainError("inverse of non-square matrix");
  int n = a.rows();
  QMatrix inv(n, n);
  for (int j = 0; j < n; ++j) {
    std::vector<Scalar> e(n);
    e[j] = 1;
    auto x = solve(a, e);
    if (!x) return std::nullopt;
    for (int i = 0; i < n; ++i) inv.at(i, j) = (*x)[i];
  }
  if (!(a * inv == QMatrix::identity(n))) return std::nullopt;
  return inv;
}

}  // namespace sa
