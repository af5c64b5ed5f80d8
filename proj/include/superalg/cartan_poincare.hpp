#pragma once

#include "superalg/linalg.hpp"
#include "superalg/symext.hpp"

#include <functional>
#include <vector>

namespace sa {

// Sym V ⊗ Λ W with n = dim V (nsym), m = dim W (next)
using BigradedElem = SymExt;
using BigradedOp = std::function<BigradedElem(const BigradedElem&)>;

// F : V → W is m × n (column mu = F(v_mu)); G : W → V is n × m.
BigradedElem d_F(const QMatrix& F, const BigradedElem& x);
BigradedElem d_star_G(const QMatrix& G, const BigradedElem& x);
BigradedElem delta(const QMatrix& F, const QMatrix& G, const BigradedElem& x);
// derivation of Sym V extending C : V → V (n × n)
BigradedElem der_sym(const QMatrix& C, const BigradedElem& x);
// derivation of Λ W extending C : W → W (m × m)
BigradedElem der_ext(const QMatrix& C, const BigradedElem& x);

std::vector<SymExt::Key> bigraded_basis(int n, int m, int k, int l);
// matrix of op restricted to A^{k,l} with values read in A^{k2,l2}
QMatrix component_matrix(const BigradedOp& op, int n, int m, int k, int l, int k2, int l2);
// d_F : A^{k,l} → A^{k-1,l+1} assembled from the index formula
QMatrix d_F_matrix_direct(const QMatrix& F, int k, int l);

struct CPHomology {
  std::vector<std::vector<long>> dims;       // [k][l]
  std::vector<std::vector<long>> predicted;  // dim Sym^k(ker F) · dim Λ^l(coker F)
  bool paths_agree = true;
  bool matches() const { return dims == predicted; }
};

CPHomology homology_dims(const QMatrix& F, int k_max, int l_max);

// operators on Sym S* ⊗ Λ S*, A : S → S (s × s)
BigradedElem twisted_shift_left(const QMatrix& A, const BigradedElem& x);
BigradedElem twisted_shift_right(const QMatrix& A, const BigradedElem& x);

// dims of the (co)homology of id◁ or id▷ on bidegrees with k, l ≤ max_deg
std::vector<std::vector<long>> shift_cohomology(int s, int max_deg, bool left);

}  // namespace sa
