#pragma once

#include "superalg/polydiff_jets.hpp"
#include "superalg/symext.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace sa {

// Forms on R^m | S, S trivial of rank n: monomials f(x) dx^a ϑ^b θ^c where ϑ_ν = dθ_ν + (A θ)_ν
// is the covariant differential of the odd coordinate θ_ν. dx and θ are odd, ϑ is even.
struct FormKey {
  Mask a = 0;
  MultiDegree b;
  Mask c = 0;
  MultiDegree x;
  bool operator<(const FormKey& o) const;
  bool operator==(const FormKey& o) const = default;
  int form_degree() const { return card(a) + total_degree(b); }
  Parity parity() const { return parity_of(card(a) + card(c)); }
  int weight() const { return total_degree(x) + card(a) + total_degree(b) + card(c); }
};

class SuperForm {
 public:
  using Terms = std::map<FormKey, Scalar>;
  SuperForm() = default;
  SuperForm(int m, int n);
  static SuperForm monomial(int m, int n, const FormKey& k, const Scalar& c = 1);
  static SuperForm function(const Poly& f, int n);
  static SuperForm superfunction(const SymExt& f);  // SymExt(m, n): x and θ
  static SuperForm dx(int m, int n, int i);
  static SuperForm vartheta(int m, int n, int nu);
  static SuperForm theta(int m, int n, int nu);

  int m() const { return m_; }
  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const FormKey& k, const Scalar& c);
  Scalar coeff(const FormKey& k) const;

  SuperForm& operator+=(const SuperForm& o);
  SuperForm& operator-=(const SuperForm& o);
  SuperForm& operator*=(const Scalar& s);
  bool operator==(const SuperForm& o) const { return m_ == o.m_ && n_ == o.n_ && terms_ == o.terms_; }
  bool operator!=(const SuperForm& o) const { return !(*this == o); }

  SuperForm degree_part(int k) const;
  SuperForm bidegree_part(int a, int b) const;
  // set of (|a|, |b|) occurring
  std::set<std::pair<int, int>> bidegrees() const;
  bool homogeneous_parity(Parity& p) const;
  // degree-0 part as a superfunction SymExt(m, n)
  SymExt superfunction_part() const;

 private:
  int m_ = 0, n_ = 0;
  Terms terms_;
};

SuperForm operator+(SuperForm a, const SuperForm& b);
SuperForm operator-(SuperForm a, const SuperForm& b);
SuperForm operator*(const Scalar& s, SuperForm a);
SuperForm operator*(const SuperForm& a, const SuperForm& b);
std::string to_string(const SuperForm& w);

// ∇ = d + A on the trivial bundle S: ∇_i s_β = Σ_α A[i][α][β] s_α
struct OddConnection {
  int m = 0, n = 0;
  std::vector<PolyMatrix> A;  // A[i-1] is n × n
  static OddConnection flat(int m, int n);
  const Poly& at(int i, int alpha, int beta) const { return A[i - 1][alpha - 1][beta - 1]; }
};

void validate(const OddConnection& A);

// R_ij = ∂_i A_j - ∂_j A_i + A_i A_j - A_j A_i, keyed by (i, j) with i < j
std::map<std::pair<int, int>, PolyMatrix> curvature_components(const OddConnection& A);

// ordinary forms on R^m: SymExt(m, m) with x as the Sym part and dx as the Λ part
using OrdForm = SymExt;
using BundleForm = std::vector<OrdForm>;                // one form per frame vector of S
using EndForm = std::vector<std::vector<OrdForm>>;      // n × n

OrdForm exterior_d(const OrdForm& w);
EndForm connection_form(const OddConnection& A);
// R = dA + A ∧ A
EndForm curvature(const OddConnection& A);
BundleForm apply_end(const EndForm& E, const BundleForm& w);
// dω + A ∧ ω
BundleForm twisted_d(const OddConnection& A, const BundleForm& w);
// Koszul formula on coordinate fields, Σ_μ (-1)^μ ∇_{j_μ} ω(..., ĵ_μ, ...)
BundleForm twisted_d_koszul(const OddConnection& A, const BundleForm& w);
// dB + A ∧ B - (-1)^p B ∧ A for B of degree p
EndForm twisted_d_end(const OddConnection& A, const EndForm& B, int p);

// ∇̃_i: even derivation, ∂_i on coefficients, θ ↦ -A_i θ and ϑ ↦ -A_i ϑ
SuperForm covariant_derivative(const OddConnection& A, int i, const SuperForm& w);
// fiberwise shifts built from the twisted shift operators
SuperForm shift_left_id(const SuperForm& w);   // id◁ = Σ ϑ_μ ∂/∂θ_μ
SuperForm shift_right_id(const SuperForm& w);  // id▷ = Σ θ_μ ∂/∂ϑ_μ
SuperForm curvature_shift(const OddConnection& A, const SuperForm& w);  // Ř▷
// Σ_i dx_i ∧ ∇̃_i ω + (-1)^{|a|} (id◁ + Ř▷) ω
SuperForm super_d(const OddConnection& A, const SuperForm& w);
// the same derivative from its values on generators and the Leibniz rule
SuperForm super_d_leibniz(const OddConnection& A, const SuperForm& w);

// frame field: E_i = ∇_i (even) or F_μ = ∂/∂θ_μ (odd), times a homogeneous superfunction
struct FieldGen {
  bool odd = false;
  int index = 1;
  SymExt coeff;  // SymExt(m, n)
  Parity parity() const;
};

FieldGen frame_field(int m, int n, bool odd, int index);
SymExt act(const OddConnection& A, const FieldGen& X, const SymExt& f);
std::vector<FieldGen> bracket(const OddConnection& A, const FieldGen& X, const FieldGen& Y);  // frame fields only

SuperForm interior(const FieldGen& X, const SuperForm& w);
// i_{X_k} ⋯ i_{X_1} ω, degree-0 part
SymExt contraction_chain(const SuperForm& w, const std::vector<FieldGen>& fields);
// sign so that permuting arguments multiplies by sgn σ / sgn⁻ σ
int evaluation_sign(const std::vector<FieldGen>& fields);
SymExt evaluate(const SuperForm& w, const std::vector<FieldGen>& fields);
// evaluate(ω; ..., hX_j, ...) = sign · h · evaluate(ω; ..., X_j, ...)
int coefficient_pull_sign(const std::vector<FieldGen>& fields, int j, Parity h);

// dω evaluated on frame fields through the Cartan formula, using only field actions, brackets and ω
SymExt super_d_by_fields(const OddConnection& A, const SuperForm& w, const std::vector<FieldGen>& fields);

// basis monomials with form degree k and weight ≤ w
std::vector<FormKey> form_basis(int m, int n, int k, int w);
std::vector<FormKey> form_basis_all(int m, int n, int w);

struct DeltaReport {
  bool euler = true;            // Δ = (|b| + |c|) id on every basis element
  bool printed_vanishes = true; // Δ - {id◁, id▷} = 0
  bool square_free = true;      // minimal polynomial has simple roots
  long kernel_dim = 0;
  long pure_dim = 0;            // (a, 0, 0) monomials
  std::vector<long> eigenvalues;
  bool kernel_is_pure() const { return kernel_dim == pure_dim; }
  bool passed() const { return euler && printed_vanishes && square_free && kernel_is_pure(); }
};

// Δ := {super_d, (-1)^{|a|} id▷}
SuperForm delta_operator(const OddConnection& A, const SuperForm& w);
DeltaReport delta_kernel_check(const OddConnection& A, int weight_cutoff);

// H^k of super_d on forms of weight ≤ w modulo higher weight
long cohomology_dim(const OddConnection& A, int k, int weight_cutoff);

}  // namespace sa
