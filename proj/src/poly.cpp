#include "superalg/poly.hpp"

#include <sstream>

namespace sa {

Poly::Poly(int m, const Scalar& c) : m_(m) { add(MultiDegree(m, 0), c); }

Poly Poly::variable(int m, int i) {
  if (i < 1 || i > m) throw DomainError("variable index out of range");
  return monomial(m, unit_degree(m, i));
}

Poly Poly::monomial(int m, const MultiDegree& d, const Scalar& c) {
  if (int(d.size()) != m) throw DomainError("multidegree length mismatch");
  Poly p(m);
  p.add(d, c);
  return p;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

Scalar Poly::coeff(const MultiDegree& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Poly::add(const MultiDegree& d, const Scalar& c) {
  if (sgn(c) == 0) return;
  auto [it, fresh] = terms_.emplace(d, c);
  if (!fresh) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.m_ != m_) throw DomainError("polynomial ring mismatch");
  for (const auto& [d, c] : o.terms_) add(d, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.m_ != m_) throw DomainError("polynomial ring mismatch");
  for (const auto& [d, c] : o.terms_) add(d, -c);
  return *this;
}

Poly& Poly::operator*=(const Scalar& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [d, c] : terms_) c *= s;
  return *this;
}

Poly Poly::derivative(int i) const {
  Poly r(m_);
  for (const auto& [d, c] : terms_) {
    if (d[i - 1] == 0) continue;
    MultiDegree e = d;
    --e[i - 1];
    r.add(e, c * d[i - 1]);
  }
  return r;
}

Poly Poly::derivative(const MultiDegree& alpha) const {
  Poly r = *this;
  for (int i = 1; i <= m_; ++i)
    for (int k = 0; k < alpha[i - 1]; ++k) r = r.derivative(i);
  return r;
}

Scalar Poly::eval(const std::vector<Scalar>& p) const {
  if (int(p.size()) != m_) throw DomainError("point dimension mismatch");
  Scalar s = 0;
  for (const auto& [d, c] : terms_) {
    Scalar t = c;
    for (int i = 0; i < m_; ++i)
      for (int k = 0; k < d[i]; ++k) t *= p[i];
    s += t;
  }
  return s;
}

Poly Poly::compose(const std::vector<Poly>& images) const {
  if (int(images.size()) != m_) throw DomainError("composition arity mismatch");
  int target = images.empty() ? 0 : images[0].nvars();
  Poly r(target);
  std::vector<std::vector<Poly>> powers(m_);
  for (const auto& [d, c] : terms_) {
    Poly t(target, c);
    for (int i = 0; i < m_; ++i) {
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(Poly(target, 1));
      while (int(pw.size()) <= d[i]) pw.push_back(pw.back() * images[i]);
      if (d[i]) t = t * pw[d[i]];
    }
    r += t;
  }
  return r;
}

Poly Poly::truncated(int max_degree) const {
  Poly r(m_);
  for (const auto& [d, c] : terms_)
    if (total_degree(d) <= max_degree) r.add(d, c);
  return r;
}

Poly Poly::homogeneous_part(int deg) const {
  Poly r(m_);
  for (const auto& [d, c] : terms_)
    if (total_degree(d) == deg) r.add(d, c);
  return r;
}

Poly operator+(Poly a, const Poly& b) { return a += b; }
Poly operator-(Poly a, const Poly& b) { return a -= b; }
Poly operator-(Poly a) { return a *= Scalar(-1); }
Poly operator*(const Scalar& s, Poly a) { return a *= s; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.nvars() != b.nvars()) throw DomainError("polynomial ring mismatch");
  Poly r(a.nvars());
  MultiDegree e(a.nvars());
  for (const auto& [da, ca] : a.terms())
    for (const auto& [db, cb] : b.terms()) {
      for (int i = 0; i < a.nvars(); ++i) e[i] = da[i] + db[i];
      r.add(e, ca * cb);
    }
  return r;
}

Poly pow(const Poly& a, int e) {
  Poly r(a.nvars(), 1);
  for (int k = 0; k < e; ++k) r = r * a;
  return r;
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : p.terms()) {
    if (!first) os << " + ";
    first = false;
    os << to_string(c);
    for (int i = 0; i < p.nvars(); ++i)
      if (d[i]) os << "*x" << i + 1 << (d[i] > 1 ? "^" + std::to_string(d[i]) : "");
  }
  return os.str();
}

}  // namespace sa
