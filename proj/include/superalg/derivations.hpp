#pragma once

#include "superalg/exterior.hpp"
#include "superalg/linalg.hpp"

#include <vector>

namespace sa {

// images[mu-1] = F(dv_mu)
struct GenImageMap {
  int n = 0;
  std::vector<ExtElem> images;
  static GenImageMap zero(int n);
  const ExtElem& operator()(int mu) const { return images[mu - 1]; }
  bool operator==(const GenImageMap& o) const { return n == o.n && images == o.images; }
};

void validate(const GenImageMap& F);

// A superderivation of parity p has images of parity p+1.
struct SuperDerivation {
  GenImageMap F;
  Parity parity = Parity::even;
  int dim() const { return F.n; }
  bool operator==(const SuperDerivation& o) const { return parity == o.parity && F == o.F; }
};

SuperDerivation make_superderivation(GenImageMap F, Parity p);
SuperDerivation number_operator(int n);
SuperDerivation insertion_derivation(int n, int nu);  // v_nu ⌟

ExtElem extend(const SuperDerivation& D, const ExtElem& a);
// plain Leibniz rule with no signs; images arbitrary
ExtElem extend_ungraded(const GenImageMap& F, const ExtElem& a);

// the operator Σ F(dv_mu) ∧ (v_mu ⌟ ·) for odd images F
SuperDerivation build_DF(const GenImageMap& F);
ExtElem apply_DF(const GenImageMap& F, const ExtElem& a);

struct DerivationClassification {
  GenImageMap f_minus;
  ExtElem eta;  // odd; top component dropped when n is odd
};

DerivationClassification classify(const GenImageMap& D);
// generator images of D_{F-} + (α ↦ (n-N+1)^{-1} η∧α)
GenImageMap reconstruct(const DerivationClassification& c);
// classify's input must really define an ungraded derivation
bool is_ungraded_derivation(const GenImageMap& F);

enum class DerivationGrading { all, z2, z };
mpz_class dimension_of_derivation_space(int n, DerivationGrading g);
mpz_class dimension_of_superderivations(int n);

SuperDerivation superbracket(const SuperDerivation& D1, const SuperDerivation& D2);

// matrix of a linear map on ΛV* in the basis of index sets ordered by mask value
template <class Op>
QMatrix operator_matrix(int n, Op op) {
  int N = 1 << n;
  QMatrix M(N, N);
  for (int j = 0; j < N; ++j) {
    ExtElem img = op(ExtElem::monomial(n, Mask(j)));
    for (const auto& [m, c] : img.terms()) M.at(int(m), j) = c;
  }
  return M;
}
QMatrix operator_matrix(const SuperDerivation& D);

struct ParityParts {
  QMatrix even, odd;
};
// A = A_even + A_odd with γAγ = ±A_parity, γ the parity involution of ΛV*
ParityParts parity_parts(const QMatrix& A, int n);

}  // namespace sa
