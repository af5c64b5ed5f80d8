#pragma once

#include "superalg/linalg.hpp"
#include "superalg/poly.hpp"

#include <map>
#include <optional>
#include <vector>

namespace sa {

using PolyMatrix = std::vector<std::vector<Poly>>;  // [row][col]

PolyMatrix zero_poly_matrix(int m, int rows, int cols);
PolyMatrix poly_identity(int m, int r);
bool is_zero(const PolyMatrix& a);

// Σ_α P_α(x) ∂^α on sections of the trivial rank r_in bundle over R^m, values of rank r_out.
// Coefficients P_α are r_out × r_in.
class PolyDiffOp {
 public:
  PolyDiffOp() = default;
  PolyDiffOp(int m, int r_out, int r_in);
  static PolyDiffOp identity(int m, int r);
  static PolyDiffOp multiplication(const PolyMatrix& f, int m);
  static PolyDiffOp multiplication(const Poly& f, int r);
  static PolyDiffOp partial(int m, int r, const MultiDegree& alpha, const Poly& coeff);

  int nvars() const { return m_; }
  int r_out() const { return r_out_; }
  int r_in() const { return r_in_; }
  const std::map<MultiDegree, PolyMatrix>& terms() const { return terms_; }
  PolyMatrix coeff(const MultiDegree& alpha) const;
  void add(const MultiDegree& alpha, const PolyMatrix& P);
  void add(const MultiDegree& alpha, int row, int col, const Poly& p);
  bool is_zero() const { return terms_.empty(); }
  // max |α| over nonzero coefficients; -1 for the zero operator
  int order() const;

  PolyDiffOp& operator+=(const PolyDiffOp& o);
  PolyDiffOp& operator-=(const PolyDiffOp& o);
  bool operator==(const PolyDiffOp& o) const;

 private:
  int m_ = 0, r_out_ = 0, r_in_ = 0;
  std::map<MultiDegree, PolyMatrix> terms_;
};

PolyDiffOp operator+(PolyDiffOp a, const PolyDiffOp& b);
PolyDiffOp operator-(PolyDiffOp a, const PolyDiffOp& b);
PolyDiffOp operator*(const Scalar& c, const PolyDiffOp& a);

PolySection apply(const PolyDiffOp& D, const PolySection& s);
PolyDiffOp compose(const PolyDiffOp& A, const PolyDiffOp& B);  // A ∘ B
PolyDiffOp commutator(const PolyDiffOp& D, const Poly& f);     // D(f·) - f D
// Σ_{A⊆K} (-1)^{|A|} f_A D(f_{K∖A} ·)
PolyDiffOp iterated_commutator(const PolyDiffOp& D, const std::vector<Poly>& fs);
PolyDiffOp nested_commutator(const PolyDiffOp& D, const std::vector<Poly>& fs);

// smallest n ≤ max_probe with all (n+1)-fold commutators against coordinates vanishing
std::optional<int> detect_order(const PolyDiffOp& D, int max_probe);

PolyMatrix principal_symbol(const PolyDiffOp& D, const std::vector<Poly>& fs);

struct JetClass {
  std::vector<Scalar> point;
  int order = 0;
  PolySection taylor;  // polynomials in t = x - p of degree ≤ order
  PolySection representative() const;  // same jet written in x
  // layout: component-major, graded lexicographic monomials in t
  std::vector<Scalar> coefficients() const;
  bool operator==(const JetClass& o) const = default;
};

JetClass jet(const PolySection& s, int k, const std::vector<Scalar>& p);
int jet_coefficient_count(int m, int r, int k);

// r_out × (r_in · #monomials) with D(s)(p) = D̂ · jet(s,k,p).coefficients()
QMatrix factor_through_jet(const PolyDiffOp& D, int k, const std::vector<Scalar>& p);

// A[i] is the r × r connection matrix along x_{i+1}; ∇_i = ∂_i + A[i]
using PolyConnection = std::vector<PolyMatrix>;
using CovariantTensor = std::map<std::vector<int>, PolySection>;  // 1-based index tuples

// (∇^l s)(∂_{i_1}, ..., ∂_{i_l}) = ∇_{i_1} (∇^{l-1} s)(∂_{i_2}, ...)
CovariantTensor covariant_derivatives(const PolySection& s, int l, const PolyConnection& A, int m);
// symmetrization over the argument order, keyed by non-decreasing tuples
CovariantTensor symmetrized_covariant_jet(const PolySection& s, int l, const PolyConnection& A, int m);

// η ↦ D(η ∘ φ): D acts on sections over the source R^m, φ : R^m → R^n
struct DiffOpAlong {
  PolyDiffOp D;
  std::vector<Poly> phi;
};

PolySection apply(const DiffOpAlong& Phi, const PolySection& eta);
// η ↦ Φ(f η) - (f∘φ) Φ(η), f on the target
DiffOpAlong commutator_along(const DiffOpAlong& Phi, const Poly& f);

}  // namespace sa
