#include "superalg/super_tensor.hpp"

#include <set>

namespace sa {

Parity SuperSpace::parity(int g) const {
  if (g < 1 || g > size()) throw DomainError("generator index out of range");
  return g <= even_dim ? Parity::even : Parity::odd;
}

void validate(const SuperSpace& V, const TensorWord& w) {
  if (V.even_dim < 0 || V.odd_dim < 0) throw DomainError("negative dimension");
  check_dim(V.even_dim);
  check_dim(V.odd_dim);
  for (int g : w.factors)
    if (g < 1 || g > V.size()) throw DomainError("generator index out of range");
}

std::vector<int> odd_positions(const SuperSpace& V, const TensorWord& w) {
  std::vector<int> A;
  for (int i = 0; i < int(w.factors.size()); ++i)
    if (V.parity(w.factors[i]) == Parity::odd) A.push_back(i + 1);
  return A;
}

Parity parity(const SuperSpace& V, const TensorWord& w) { return parity_of(long(odd_positions(V, w).size())); }

SuperSymElem zero_supersym(const SuperSpace& V) { return SymExt(V.even_dim, V.odd_dim); }
SuperExtElem zero_superext(const SuperSpace& V) { return SymExt(V.odd_dim, V.even_dim); }

int odd_signature(const Permutation& sigma, const SuperSpace& V, const TensorWord& w) {
  if (sigma.size() != int(w.factors.size())) throw DomainError("permutation degree differs from tensor rank");
  validate(sigma);
  validate(V, w);
  return relative_signature(sigma, odd_positions(V, w));
}

TensorWord act_sym(const Permutation& sigma, const SuperSpace& V, const TensorWord& w) {
  int s = odd_signature(sigma, V, w);
  TensorWord r;
  r.factors.resize(w.factors.size());
  for (int i = 1; i <= sigma.size(); ++i) r.factors[sigma(i) - 1] = w.factors[i - 1];
  r.coeff = s * w.coeff;
  return r;
}

TensorWord act_alt(const Permutation& sigma, const SuperSpace& V, const TensorWord& w) {
  TensorWord r = act_sym(sigma, V, w);
  r.coeff *= signature(sigma);
  return r;
}

namespace {

// rank in the canonical order: even generators before odd, then by index
bool before(int a, int b) { return a < b; }

// sign(a, b) is the factor picked up by swapping an adjacent pair a b
template <class PairSign>
int sorted_with_sign(std::vector<int>& f, PairSign pair_sign) {
  int s = 1;
  for (size_t i = 1; i < f.size(); ++i)
    for (size_t j = i; j > 0 && before(f[j], f[j - 1]); --j) {
      s *= pair_sign(f[j - 1], f[j]);
      std::swap(f[j], f[j - 1]);
    }
  return s;
}

}  // namespace

SuperSymElem normalize_supersym(const SuperSpace& V, const TensorWord& w) {
  validate(V, w);
  std::vector<int> f = w.factors;
  int s = sorted_with_sign(f, [&](int a, int b) {
    return V.parity(a) == Parity::odd && V.parity(b) == Parity::odd ? -1 : 1;
  });
  MultiDegree d(V.even_dim, 0);
  Mask m = 0;
  for (int g : f) {
    if (g <= V.even_dim) {
      ++d[g - 1];
    } else {
      int k = g - V.even_dim;
      if (has(m, k)) return zero_supersym(V);
      m |= single(k);
    }
  }
  return SymExt::monomial(V.even_dim, V.odd_dim, d, m, s * w.coeff);
}

SuperExtElem normalize_superext(const SuperSpace& V, const TensorWord& w) {
  validate(V, w);
  std::vector<int> f = w.factors;
  int s = sorted_with_sign(f, [&](int a, int b) {
    return V.parity(a) == Parity::odd && V.parity(b) == Parity::odd ? 1 : -1;
  });
  MultiDegree d(V.odd_dim, 0);
  Mask m = 0;
  for (int g : f) {
    if (g <= V.even_dim) {
      if (has(m, g)) return zero_superext(V);
      m |= single(g);
    } else {
      ++d[g - V.even_dim - 1];
    }
  }
  return SymExt::monomial(V.odd_dim, V.even_dim, d, m, s * w.coeff);
}

SuperExtElem super_wedge(const SuperExtElem& a, const SuperExtElem& b) { return a * b; }

Parity vector_parity(const SuperSpace& V, const std::vector<Scalar>& x) {
  if (int(x.size()) != V.size()) throw DomainError("vector length differs from space dimension");
  bool ev = false, od = false;
  for (int g = 1; g <= V.size(); ++g)
    if (sgn(x[g - 1]) != 0) (g <= V.even_dim ? ev : od) = true;
  if (ev && od) throw DomainError("vector is not homogeneous");
  return od ? Parity::odd : Parity::even;
}

SuperExtElem super_insert(const SuperSpace& V, const std::vector<Scalar>& x, const SuperExtElem& a) {
  if (a.nsym() != V.odd_dim || a.next() != V.even_dim) throw DomainError("element lives in another space");
  Parity p = vector_parity(V, x);
  SuperExtElem r = zero_superext(V);
  for (int g = 1; g <= V.size(); ++g) {
    const Scalar& c = x[g - 1];
    if (sgn(c) == 0) continue;
    if (p == Parity::even) r += c * a.ext_insert(g);
    else r += c * a.sym_derivative(g - V.even_dim);
  }
  return r;
}

std::vector<TensorWord> all_words(const SuperSpace& V, int k) {
  std::vector<TensorWord> out;
  if (V.size() == 0) {
    if (k == 0) out.push_back(TensorWord{});
    return out;
  }
  std::vector<int> f(k, 1);
  while (true) {
    out.push_back(TensorWord{f, 1});
    int i = k - 1;
    while (i >= 0 && f[i] == V.size()) f[i--] = 1;
    if (i < 0) break;
    ++f[i];
  }
  return out;
}

namespace {

template <class Normalize>
long count_forms(const SuperSpace& V, int k, Normalize norm) {
  std::set<SymExt::Key> seen;
  for (const auto& w : all_words(V, k)) {
    SymExt n = norm(V, w);
    for (const auto& [key, c] : n.terms()) seen.insert(key);
  }
  return long(seen.size());
}

}  // namespace

long count_supersym_normal_forms(const SuperSpace& V, int k) { return count_forms(V, k, normalize_supersym); }
long count_superext_normal_forms(const SuperSpace& V, int k) { return count_forms(V, k, normalize_superext); }

mpz_class supersym_dim_formula(const SuperSpace& V, int k) {
  mpz_class s = 0;
  for (int a = 0; a <= k; ++a) {
    mpz_class sym = V.even_dim == 0 ? mpz_class(a == 0 ? 1 : 0) : binomial(V.even_dim + a - 1, a);
    s += sym * binomial(V.odd_dim, k - a);
  }
  return s;
}

mpz_class superext_dim_formula(const SuperSpace& V, int k) {
  mpz_class s = 0;
  for (int a = 0; a <= k; ++a) {
    int b = k - a;
    mpz_class sym = V.odd_dim == 0 ? mpz_class(b == 0 ? 1 : 0) : binomial(V.odd_dim + b - 1, b);
    s += binomial(V.even_dim, a) * sym;
  }
  return s;
}

}  // namespace sa
