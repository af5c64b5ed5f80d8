#pragma once

#include "superalg/core.hpp"

#include <map>
#include <string>
#include <vector>

namespace sa {

// Element of the exterior algebra on n generators dv_1..dv_n.
class ExtElem {
 public:
  using Terms = std::map<Mask, Scalar>;

  ExtElem() = default;
  explicit ExtElem(int n) : n_(n) { check_dim(n); }
  ExtElem(int n, const Scalar& c);
  static ExtElem generator(int n, int i);
  static ExtElem monomial(int n, Mask m, const Scalar& c = 1);

  int dim() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(Mask m) const;
  void add(Mask m, const Scalar& c);

  ExtElem& operator+=(const ExtElem& o);
  ExtElem& operator-=(const ExtElem& o);
  ExtElem& operator*=(const Scalar& s);
  bool operator==(const ExtElem& o) const { return n_ == o.n_ && terms_ == o.terms_; }
  bool operator!=(const ExtElem& o) const { return !(*this == o); }

  ExtElem part(int degree) const;
  ExtElem even_part() const;
  ExtElem odd_part() const;
  // Some(p) when every term has parity p
  bool is_homogeneous_parity(Parity& p) const;
  bool is_homogeneous_degree(int& d) const;

 private:
  int n_ = 0;
  Terms terms_;
};

ExtElem operator+(ExtElem a, const ExtElem& b);
ExtElem operator-(ExtElem a, const ExtElem& b);
ExtElem operator-(ExtElem a);
ExtElem operator*(const Scalar& s, ExtElem a);

ExtElem wedge(const ExtElem& a, const ExtElem& b);
// v given by its coordinates v = sum v_mu e_mu, paired against dv_mu
ExtElem insert(const std::vector<Scalar>& v, const ExtElem& a);
ExtElem insert_basis(int mu, const ExtElem& a);
Scalar augmentation(const ExtElem& a);
int filtration_degree(const ExtElem& a);
ExtElem invert_unit(const ExtElem& a);

std::string to_string(const ExtElem& a);

}  // namespace sa
