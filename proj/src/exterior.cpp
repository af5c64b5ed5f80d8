#include "superalg/exterior.hpp"

#include <sstream>

namespace sa {

ExtElem::ExtElem(int n, const Scalar& c) : n_(n) {
  check_dim(n);
  add(0, c);
}

ExtElem ExtElem::generator(int n, int i) {
  if (i < 1 || i > n) throw DomainError("generator index out of range");
  return monomial(n, single(i));
}

ExtElem ExtElem::monomial(int n, Mask m, const Scalar& c) {
  ExtElem e(n);
  if (m & ~full_mask(n)) throw DomainError("index set exceeds dimension");
  e.add(m, c);
  return e;
}

Scalar ExtElem::coeff(Mask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void ExtElem::add(Mask m, const Scalar& c) {
  if (sgn(c) == 0) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

ExtElem& ExtElem::operator+=(const ExtElem& o) {
  if (o.n_ != n_) throw DomainError("mismatched exterior spaces");
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

ExtElem& ExtElem::operator-=(const ExtElem& o) {
  if (o.n_ != n_) throw DomainError("mismatched exterior spaces");
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

ExtElem& ExtElem::operator*=(const Scalar& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

ExtElem ExtElem::part(int degree) const {
  ExtElem r(n_);
  for (const auto& [m, c] : terms_)
    if (card(m) == degree) r.terms_.emplace(m, c);
  return r;
}

ExtElem ExtElem::even_part() const {
  ExtElem r(n_);
  for (const auto& [m, c] : terms_)
    if (card(m) % 2 == 0) r.terms_.emplace(m, c);
  return r;
}

ExtElem ExtElem::odd_part() const {
  ExtElem r(n_);
  for (const auto& [m, c] : terms_)
    if (card(m) % 2 == 1) r.terms_.emplace(m, c);
  return r;
}

bool ExtElem::is_homogeneous_parity(Parity& p) const {
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Parity q = parity_of(card(m));
    if (first) p = q, first = false;
    else if (q != p) return false;
  }
  if (first) p = Parity::even;
  return true;
}

bool ExtElem::is_homogeneous_degree(int& d) const {
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (first) d = card(m), first = false;
    else if (card(m) != d) return false;
  }
  if (first) d = 0;
  return true;
}

ExtElem operator+(ExtElem a, const ExtElem& b) { return a += b; }
ExtElem operator-(ExtElem a, const ExtElem& b) { return a -= b; }
ExtElem operator-(ExtElem a) { return a *= Scalar(-1); }
ExtElem operator*(const Scalar& s, ExtElem a) { return a *= s; }

ExtElem wedge(const ExtElem& a, const ExtElem& b) {
  if (a.dim() != b.dim()) throw DomainError("mismatched exterior spaces");
  ExtElem r(a.dim());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      int s = merge_sign(ma, mb);
      if (s) r.add(ma | mb, s > 0 ? Scalar(ca * cb) : Scalar(-ca * cb));
    }
  return r;
}

ExtElem insert_basis(int mu, const ExtElem& a) {
  ExtElem r(a.dim());
  for (const auto& [m, c] : a.terms())
    if (has(m, mu)) r.add(m & ~single(mu), sign_pow(count_below(m, mu)) * c);
  return r;
}

ExtElem insert(const std::vector<Scalar>& v, const ExtElem& a) {
  if (int(v.size()) != a.dim()) throw DomainError("mismatched exterior spaces");
  ExtElem r(a.dim());
  for (int mu = 1; mu <= a.dim(); ++mu)
    if (sgn(v[mu - 1]) != 0) r += v[mu - 1] * insert_basis(mu, a);
  return r;
}

Scalar augmentation(const ExtElem& a) { return a.coeff(0); }

int filtration_degree(const ExtElem& a) {
  if (a.is_zero()) return a.dim() + 1;
  int d = a.dim();
  for (const auto& [m, c] : a.terms()) d = std::min(d, card(m));
  return d;
}

ExtElem invert_unit(const ExtElem& a) {
  Scalar e = augmentation(a);
  if (sgn(e) == 0) throw NotInvertible("augmentation is zero; element is not invertible");
  // a = e(1 + x) with x nilpotent; a^{-1} = e^{-1} sum (-x)^k
  ExtElem x = a;
  x.add(0, -e);
  x *= 1 / e;
  ExtElem term(a.dim(), 1), sum(a.dim(), 1);
  for (int k = 1; k <= a.dim(); ++k) {
    term = -wedge(term, x);
    if (term.is_zero()) break;
    sum += term;
  }
  return (1 / e) * sum;
}

std::string to_string(const ExtElem& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    if (!first) os << " + ";
    first = false;
    os << to_string(c);
    for (int i : indices(m)) os << "*dv" << i;
  }
  return os.str();
}

}  // namespace sa
