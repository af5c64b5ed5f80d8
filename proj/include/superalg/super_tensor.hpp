#pragma once

#include "superalg/core.hpp"
#include "superalg/symext.hpp"

#include <vector>

namespace sa {

// Generators 1..even_dim are even, even_dim+1..even_dim+odd_dim are odd.
struct SuperSpace {
  int even_dim = 0;
  int odd_dim = 0;
  int size() const { return even_dim + odd_dim; }
  Parity parity(int g) const;
  bool operator==(const SuperSpace&) const = default;
};

struct TensorWord {
  std::vector<int> factors;
  Scalar coeff = 1;
  bool operator==(const TensorWord&) const = default;
};

void validate(const SuperSpace& V, const TensorWord& w);
std::vector<int> odd_positions(const SuperSpace& V, const TensorWord& w);
Parity parity(const SuperSpace& V, const TensorWord& w);

// Sym V0 ⊗ Λ V1: SymExt with nsym = even_dim, next = odd_dim
using SuperSymElem = SymExt;
// Λ V0 ⊗ Sym V1: SymExt with nsym = odd_dim, next = even_dim
using SuperExtElem = SymExt;

SuperSymElem zero_supersym(const SuperSpace& V);
SuperExtElem zero_superext(const SuperSpace& V);

int odd_signature(const Permutation& sigma, const SuperSpace& V, const TensorWord& w);
// factor i moves to slot sigma(i)
TensorWord act_sym(const Permutation& sigma, const SuperSpace& V, const TensorWord& w);
TensorWord act_alt(const Permutation& sigma, const SuperSpace& V, const TensorWord& w);

SuperSymElem normalize_supersym(const SuperSpace& V, const TensorWord& w);
SuperExtElem normalize_superext(const SuperSpace& V, const TensorWord& w);

SuperExtElem super_wedge(const SuperExtElem& a, const SuperExtElem& b);
// x has coordinates on all generators and must be homogeneous
SuperExtElem super_insert(const SuperSpace& V, const std::vector<Scalar>& x, const SuperExtElem& a);
Parity vector_parity(const SuperSpace& V, const std::vector<Scalar>& x);

// the distinct normal-form monomials reached from all words of length k
long count_supersym_normal_forms(const SuperSpace& V, int k);
long count_superext_normal_forms(const SuperSpace& V, int k);
mpz_class supersym_dim_formula(const SuperSpace& V, int k);
mpz_class superext_dim_formula(const SuperSpace& V, int k);

std::vector<TensorWord> all_words(const SuperSpace& V, int k);

}  // namespace sa
