#include "superalg/derivations.hpp"

namespace sa {

GenImageMap GenImageMap::zero(int n) {
  check_dim(n);
  return GenImageMap{n, std::vector<ExtElem>(n, ExtElem(n))};
}

void validate(const GenImageMap& F) {
  check_dim(F.n);
  if (int(F.images.size()) != F.n) throw DomainError("need one image per generator");
  for (const auto& e : F.images)
    if (e.dim() != F.n) throw DomainError("image lives in another exterior algebra");
}

SuperDerivation make_superderivation(GenImageMap F, Parity p) {
  validate(F);
  for (const auto& e : F.images) {
    if (p == Parity::odd && !e.odd_part().is_zero()) throw DomainError("odd superderivation needs even images");
    if (p == Parity::even && !e.even_part().is_zero()) throw DomainError("even superderivation needs odd images");
  }
  return SuperDerivation{std::move(F), p};
}

SuperDerivation number_operator(int n) {
  auto F = GenImageMap::zero(n);
  for (int mu = 1; mu <= n; ++mu) F.images[mu - 1] = ExtElem::generator(n, mu);
  return SuperDerivation{F, Parity::even};
}

SuperDerivation insertion_derivation(int n, int nu) {
  if (nu < 1 || nu > n) throw DomainError("generator index out of range");
  auto F = GenImageMap::zero(n);
  F.images[nu - 1] = ExtElem(n, 1);
  return SuperDerivation{F, Parity::odd};
}

namespace {

ExtElem extend_signed(const GenImageMap& F, const ExtElem& a, bool graded, Parity p) {
  if (a.dim() != F.n) throw DomainError("element lives in another exterior algebra");
  int n = F.n;
  ExtElem r(n);
  for (const auto& [m, c] : a.terms()) {
    auto idx = indices(m);
    for (size_t j = 0; j < idx.size(); ++j) {
      Mask pre = 0, post = 0;
      for (size_t i = 0; i < j; ++i) pre |= single(idx[i]);
      for (size_t i = j + 1; i < idx.size(); ++i) post |= single(idx[i]);
      int s = graded ? sign_pow(long(as_int(p)) * long(j)) : 1;
      ExtElem t = wedge(wedge(ExtElem::monomial(n, pre), F(idx[j])), ExtElem::monomial(n, post));
      r += (s * c) * t;
    }
  }
  return r;
}

}  // namespace

ExtElem extend(const SuperDerivation& D, const ExtElem& a) { return extend_signed(D.F, a, true, D.parity); }

ExtElem extend_ungraded(const GenImageMap& F, const ExtElem& a) {
  return extend_signed(F, a, false, Parity::even);
}

SuperDerivation build_DF(const GenImageMap& F) { return make_superderivation(F, Parity::even); }

ExtElem apply_DF(const GenImageMap& F, const ExtElem& a) {
  validate(F);
  for (const auto& e : F.images)
    if (!e.even_part().is_zero()) throw DomainError("D_F needs odd images");
  ExtElem r(F.n);
  for (int mu = 1; mu <= F.n; ++mu) r += wedge(F(mu), insert_basis(mu, a));
  return r;
}

DerivationClassification classify(const GenImageMap& D) {
  validate(D);
  int n = D.n;
  DerivationClassification c{GenImageMap::zero(n), ExtElem(n)};
  for (int mu = 1; mu <= n; ++mu) {
    c.f_minus.images[mu - 1] = D(mu).odd_part();
    c.eta -= insert_basis(mu, D(mu).even_part());
  }
  if (n % 2 == 1) c.eta = c.eta - c.eta.part(n);
  return c;
}

GenImageMap reconstruct(const DerivationClassification& c) {
  validate(c.f_minus);
  int n = c.f_minus.n;
  if (c.eta.dim() != n) throw DomainError("eta lives in another exterior algebra");
  GenImageMap F = c.f_minus;
  for (int mu = 1; mu <= n; ++mu) {
    ExtElem dv = ExtElem::generator(n, mu);
    for (int d = 1; d < n; d += 2) {
      ExtElem e = c.eta.part(d);
      if (e.is_zero()) continue;
      F.images[mu - 1] += Scalar(1, n - d) * wedge(e, dv);
    }
  }
  return F;
}

bool is_ungraded_derivation(const GenImageMap& F) {
  validate(F);
  int n = F.n;
  for (Mask b = 0; b <= full_mask(n); ++b) {
    ExtElem B = ExtElem::monomial(n, b);
    ExtElem DB = extend_ungraded(F, B);
    for (int mu = 1; mu <= n; ++mu) {
      ExtElem dv = ExtElem::generator(n, mu);
      ExtElem lhs = extend_ungraded(F, wedge(dv, B));
      if (lhs != wedge(F(mu), B) + wedge(dv, DB)) return false;
    }
  }
  return true;
}

mpz_class dimension_of_derivation_space(int n, DerivationGrading g) {
  if (n < 1) throw DomainError("dimension must be at least 1");
  check_dim(n);
  mpz_class half = mpz_class(1) << (n - 1);
  switch (g) {
    case DerivationGrading::z:
      return mpz_class(n) * n;
    case DerivationGrading::z2:
      return n * half;
    case DerivationGrading::all:
      return n * half + half - (n % 2);
  }
  throw InternalError("unknown grading");
}

mpz_class dimension_of_superderivations(int n) {
  if (n < 1) throw DomainError("dimension must be at least 1");
  check_dim(n);
  return mpz_class(n) << n;
}

SuperDerivation superbracket(const SuperDerivation& D1, const SuperDerivation& D2) {
  if (D1.dim() != D2.dim()) throw DomainError("derivations on different spaces");
  int n = D1.dim();
  int s = sign_pow(as_int(D1.parity) * as_int(D2.parity));
  auto F = GenImageMap::zero(n);
  for (int mu = 1; mu <= n; ++mu) {
    ExtElem dv = ExtElem::generator(n, mu);
    F.images[mu - 1] = extend(D1, extend(D2, dv)) - Scalar(s) * extend(D2, extend(D1, dv));
  }
  return make_superderivation(std::move(F), D1.parity + D2.parity);
}

QMatrix operator_matrix(const SuperDerivation& D) {
  return operator_matrix(D.dim(), [&](const ExtElem& a) { return extend(D, a); });
}

ParityParts parity_parts(const QMatrix& A, int n) {
  int N = 1 << n;
  if (A.rows() != N || A.cols() != N) throw DomainError("operator size differs from 2^n");
  QMatrix g(N, N);
  for (int i = 0; i < N; ++i) g.at(i, i) = sign_pow(card(Mask(i)));
  QMatrix conj = g * A * g;
  return {scaled(A + conj, Scalar(1, 2)), scaled(A - conj, Scalar(1, 2))};
}

}  // namespace sa
