#pragma once

#include "superalg/core.hpp"

#include <map>
#include <string>
#include <vector>

namespace sa {

// Polynomial in m variables x_1..x_m with rational coefficients.
class Poly {
 public:
  using Terms = std::map<MultiDegree, Scalar>;

  Poly() = default;
  explicit Poly(int m) : m_(m) {}
  Poly(int m, const Scalar& c);
  static Poly variable(int m, int i);
  static Poly monomial(int m, const MultiDegree& d, const Scalar& c = 1);

  int nvars() const { return m_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // -1 for zero
  Scalar coeff(const MultiDegree& d) const;
  void add(const MultiDegree& d, const Scalar& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Scalar& s);
  bool operator==(const Poly& o) const { return m_ == o.m_ && terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly derivative(int i) const;  // 1-based
  Poly derivative(const MultiDegree& alpha) const;
  Scalar eval(const std::vector<Scalar>& p) const;
  // substitute x_i -> images[i-1], all in a common ring of images[0].nvars() variables
  Poly compose(const std::vector<Poly>& images) const;
  Poly truncated(int max_degree) const;
  Poly homogeneous_part(int d) const;

 private:
  int m_ = 0;
  Terms terms_;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator-(Poly a);
Poly operator*(const Scalar& s, Poly a);
Poly operator*(const Poly& a, const Poly& b);
Poly pow(const Poly& a, int e);

std::string to_string(const Poly& p);

using PolySection = std::vector<Poly>;

}  // namespace sa
