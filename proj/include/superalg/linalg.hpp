#pragma once

#include "superalg/core.hpp"

#include <optional>
#include <vector>

namespace sa {

class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }
  bool is_zero() const;
  bool operator==(const QMatrix& o) const;

  static QMatrix identity(int n);

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

QMatrix operator*(const QMatrix& a, const QMatrix& b);
QMatrix operator+(const QMatrix& a, const QMatrix& b);
QMatrix operator-(const QMatrix& a, const QMatrix& b);
QMatrix scaled(const QMatrix& a, const Scalar& s);
QMatrix transpose(const QMatrix& a);
std::vector<Scalar> apply(const QMatrix& a, const std::vector<Scalar>& x);

// fraction-free Bareiss elimination on row-integerized copy, lowest-index pivots
long rank_bareiss(const QMatrix& a);
// sparse rational elimination, independent of rank_bareiss
long rank_sparse(const QMatrix& a);
inline long rank(const QMatrix& a) { return rank_bareiss(a); }

// basis of {x : a x = 0}, one column per free variable
QMatrix nullspace(const QMatrix& a);
// a x = b; free variables set to zero; pivot columns taken in column_order (default 0..cols-1)
std::optional<std::vector<Scalar>> solve(const QMatrix& a, const std::vector<Scalar>& b,
                                         const std::vector<int>& column_order = {});
std::optional<QMatrix> inverse(const QMatrix& a);

}  // namespace sa
