#pragma once

#include "superalg/core.hpp"
#include "superalg/exterior.hpp"
#include "superalg/poly.hpp"

#include <map>
#include <string>
#include <utility>

namespace sa {

// Sym(k commuting generators) ⊗ Λ(n anticommuting generators) with the plain tensor product
// algebra structure; parity is the exterior degree mod 2.
class SymExt {
 public:
  using Key = std::pair<MultiDegree, Mask>;
  using Terms = std::map<Key, Scalar>;

  SymExt() = default;
  SymExt(int nsym, int next) : k_(nsym), n_(next) { check_dim(next); }
  SymExt(int nsym, int next, const Scalar& c);
  static SymExt monomial(int nsym, int next, const MultiDegree& d, Mask m, const Scalar& c = 1);
  static SymExt sym_generator(int nsym, int next, int i);
  static SymExt ext_generator(int nsym, int next, int i);
  static SymExt from_poly(const Poly& p, int next);
  static SymExt from_ext(const ExtElem& e, int nsym);

  int nsym() const { return k_; }
  int next() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(const MultiDegree& d, Mask m) const;
  void add(const MultiDegree& d, Mask m, const Scalar& c);
  void add(const Key& k, const Scalar& c) { add(k.first, k.second, c); }

  SymExt& operator+=(const SymExt& o);
  SymExt& operator-=(const SymExt& o);
  SymExt& operator*=(const Scalar& s);
  bool operator==(const SymExt& o) const { return k_ == o.k_ && n_ == o.n_ && terms_ == o.terms_; }
  bool operator!=(const SymExt& o) const { return !(*this == o); }

  SymExt bidegree_part(int k, int l) const;
  SymExt ext_degree_part(int l) const;
  SymExt ext_degree_at_least(int l) const;
  SymExt even_part() const;
  SymExt odd_part() const;
  bool homogeneous_parity(Parity& p) const;
  int min_ext_degree() const;  // next()+1 for zero
  // Λ^0 component as a polynomial in the Sym generators
  Poly body() const;
  // coefficient polynomial of a fixed exterior monomial
  Poly coefficient_poly(Mask m) const;
  Scalar augmentation() const;

  SymExt sym_derivative(int i) const;
  SymExt ext_insert(int mu) const;          // left insertion s_mu ⌟, odd
  SymExt times_sym(const Poly& p) const;    // multiply the Sym factor
  SymExt ext_wedge_left(int mu) const;      // ds_mu ∧ (.)
  SymExt eval_sym(const std::vector<Scalar>& p) const;

 private:
  int k_ = 0, n_ = 0;
  Terms terms_;
};

SymExt operator+(SymExt a, const SymExt& b);
SymExt operator-(SymExt a, const SymExt& b);
SymExt operator-(SymExt a);
SymExt operator*(const Scalar& s, SymExt a);
SymExt operator*(const SymExt& a, const SymExt& b);
SymExt pow(const SymExt& a, int e);

std::string to_string(const SymExt& a, const std::string& sym = "v", const std::string& ext = "w");

}  // namespace sa
