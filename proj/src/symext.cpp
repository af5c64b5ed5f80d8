#include "superalg/symext.hpp"

#include <sstream>

namespace sa {

SymExt::SymExt(int nsym, int next, const Scalar& c) : k_(nsym), n_(next) {
  check_dim(next);
  add(MultiDegree(nsym, 0), 0, c);
}

SymExt SymExt::monomial(int nsym, int next, const MultiDegree& d, Mask m, const Scalar& c) {
  if (int(d.size()) != nsym) throw DomainError("multidegree length mismatch");
  if (m & ~full_mask(next)) throw DomainError("index set exceeds dimension");
  SymExt r(nsym, next);
  r.add(d, m, c);
  return r;
}

SymExt SymExt::sym_generator(int nsym, int next, int i) {
  if (i < 1 || i > nsym) throw DomainError("generator index out of range");
  return monomial(nsym, next, unit_degree(nsym, i), 0);
}

SymExt SymExt::ext_generator(int nsym, int next, int i) {
  if (i < 1 || i > next) throw DomainError("generator index out of range");
  return monomial(nsym, next, MultiDegree(nsym, 0), single(i));
}

SymExt SymExt::from_poly(const Poly& p, int next) {
  SymExt r(p.nvars(), next);
  for (const auto& [d, c] : p.terms()) r.add(d, 0, c);
  return r;
}

SymExt SymExt::from_ext(const ExtElem& e, int nsym) {
  SymExt r(nsym, e.dim());
  for (const auto& [m, c] : e.terms()) r.add(MultiDegree(nsym, 0), m, c);
  return r;
}

Scalar SymExt::coeff(const MultiDegree& d, Mask m) const {
  auto it = terms_.find(Key(d, m));
  return it == terms_.end() ? Scalar(0) : it->second;
}

void SymExt::add(const MultiDegree& d, Mask m, const Scalar& c) {
  if (sgn(c) == 0) return;
  auto [it, fresh] = terms_.emplace(Key(d, m), c);
  if (!fresh) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

SymExt& SymExt::operator+=(const SymExt& o) {
  if (o.k_ != k_ || o.n_ != n_) throw DomainError("mismatched Sym⊗Λ spaces");
  for (const auto& [key, c] : o.terms_) add(key, c);
  return *this;
}

SymExt& SymExt::operator-=(const SymExt& o) {
  if (o.k_ != k_ || o.n_ != n_) throw DomainError("mismatched Sym⊗Λ spaces");
  for (const auto& [key, c] : o.terms_) add(key, -c);
  return *this;
}

SymExt& SymExt::operator*=(const Scalar& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= s;
  return *this;
}

SymExt SymExt::bidegree_part(int k, int l) const {
  SymExt r(k_, n_);
  for (const auto& [key, c] : terms_)
    if (total_degree(key.first) == k && card(key.second) == l) r.terms_.emplace(key, c);
  return r;
}

SymExt SymExt::ext_degree_part(int l) const {
  SymExt r(k_, n_);
  for (const auto& [key, c] : terms_)
    if (card(key.second) == l) r.terms_.emplace(key, c);
  return r;
}

SymExt SymExt::ext_degree_at_least(int l) const {
  SymExt r(k_, n_);
  for (const auto& [key, c] : terms_)
    if (card(key.second) >= l) r.terms_.emplace(key, c);
  return r;
}

SymExt SymExt::even_part() const {
  SymExt r(k_, n_);
  for (const auto& [key, c] : terms_)
    if (card(key.second) % 2 == 0) r.terms_.emplace(key, c);
  return r;
}

SymExt SymExt::odd_part() const {
  SymExt r(k_, n_);
  for (const auto& [key, c] : terms_)
    if (card(key.second) % 2 == 1) r.terms_.emplace(key, c);
  return r;
}

bool SymExt::homogeneous_parity(Parity& p) const {
  bool first = true;
  for (const auto& [key, c] : terms_) {
    Parity q = parity_of(card(key.second));
    if (first) p = q, first = false;
    else if (p != q) return false;
  }
  if (first) p = Parity::even;
  return true;
}

int SymExt::min_ext_degree() const {
  int d = n_ + 1;
  for (const auto& [key, c] : terms_) d = std::min(d, card(key.second));
  return d;
}

Poly SymExt::body() const { return coefficient_poly(0); }

Poly SymExt::coefficient_poly(Mask m) const {
  Poly p(k_);
  for (const auto& [key, c] : terms_)
    if (key.second == m) p.add(key.first, c);
  return p;
}

Scalar SymExt::augmentation() const { return coeff(MultiDegree(k_, 0), 0); }

SymExt SymExt::sym_derivative(int i) const {
  SymExt r(k_, n_);
  for (const auto& [key, c] : terms_) {
    int e = key.first[i - 1];
    if (!e) continue;
    MultiDegree d = key.first;
    --d[i - 1];
    r.add(d, key.second, c * e);
  }
  return r;
}

SymExt SymExt::ext_insert(int mu) const {
  SymExt r(k_, n_);
  for (const auto& [key, c] : terms_)
    if (has(key.second, mu))
      r.add(key.first, key.second & ~single(mu), sign_pow(count_below(key.second, mu)) * c);
  return r;
}

SymExt SymExt::times_sym(const Poly& p) const {
  if (p.nvars() != k_) throw DomainError("polynomial ring mismatch");
  SymExt r(k_, n_);
  MultiDegree e(k_);
  for (const auto& [key, c] : terms_)
    for (const auto& [d, pc] : p.terms()) {
      for (int i = 0; i < k_; ++i) e[i] = key.first[i] + d[i];
      r.add(e, key.second, c * pc);
    }
  return r;
}

SymExt SymExt::ext_wedge_left(int mu) const {
  SymExt r(k_, n_);
  for (const auto& [key, c] : terms_)
    if (!has(key.second, mu))
      r.add(key.first, key.second | single(mu), sign_pow(count_below(key.second, mu)) * c);
  return r;
}

SymExt SymExt::eval_sym(const std::vector<Scalar>& p) const {
  SymExt r(0, n_);
  for (const auto& [key, c] : terms_) {
    Scalar t = c;
    for (int i = 0; i < k_; ++i)
      for (int j = 0; j < key.first[i]; ++j) t *= p[i];
    r.add(MultiDegree(), key.second, t);
  }
  return r;
}

SymExt operator+(SymExt a, const SymExt& b) { return a += b; }
SymExt operator-(SymExt a, const SymExt& b) { return a -= b; }
SymExt operator-(SymExt a) { return a *= Scalar(-1); }
SymExt operator*(const Scalar& s, SymExt a) { return a *= s; }

SymExt operator*(const SymExt& a, const SymExt& b) {
  if (a.nsym() != b.nsym() || a.next() != b.next()) throw DomainError("mismatched Sym⊗Λ spaces");
  SymExt r(a.nsym(), a.next());
  MultiDegree e(a.nsym());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      int s = merge_sign(ka.second, kb.second);
      if (!s) continue;
      for (int i = 0; i < a.nsym(); ++i) e[i] = ka.first[i] + kb.first[i];
      r.add(e, ka.second | kb.second, s * ca * cb);
    }
  return r;
}

SymExt pow(const SymExt& a, int e) {
  SymExt r(a.nsym(), a.next(), 1);
  for (int k = 0; k < e; ++k) r = r * a;
  return r;
}

std::string to_string(const SymExt& a, const std::string& sym, const std::string& ext) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : a.terms()) {
    if (!first) os << " + ";
    first = false;
    os << to_string(c);
    for (int i = 0; i < a.nsym(); ++i)
      if (key.first[i]) os << "*" << sym << i + 1 << (key.first[i] > 1 ? "^" + std::to_string(key.first[i]) : "");
    for (int i : indices(key.second)) os << "*" << ext << i;
  }
  return os.str();
}

}  // namespace sa
