#pragma once

#include "superalg/derivations.hpp"
#include "superalg/symext.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sa {

// Λ S* ⊗ S stored as images: X = Σ_a X.images[a-1] ⊗ s_a, i.e. the derivation ds_a ↦ X.images[a-1]
using CompElem = GenImageMap;

CompElem comp_product(const CompElem& a, const CompElem& b);
// parity of Ψ(a), i.e. |σ|+1; throws on inhomogeneous input
Parity comp_parity(const CompElem& a);
CompElem comp_bracket(const CompElem& a, const CompElem& b);
SuperDerivation psi(const CompElem& a);

// Sym V* ⊗ Λ S* ⊗ S; comp[a-1] ∈ SymExt(dim V, dim S) is the s_a component
struct PolyCompElem {
  int k = 0, s = 0;
  std::vector<SymExt> comp;
  static PolyCompElem zero(int k, int s);
  bool is_zero() const;
  bool operator==(const PolyCompElem& o) const { return k == o.k && s == o.s && comp == o.comp; }
};

PolyCompElem poly_comp_product(const PolyCompElem& a, const PolyCompElem& b);
PolyCompElem operator+(const PolyCompElem& a, const PolyCompElem& b);

// one odd superderivation of ΛS* per basis vector of V
struct OddFamily {
  int k = 0, s = 0;
  std::vector<CompElem> D;
};

void validate(const OddFamily& fam);
// f = pr∘D as an s × k matrix
QMatrix family_f(const OddFamily& fam);
// component of Λ-degree 2mu
CompElem family_part(const CompElem& D, int mu);
PolyCompElem family_as_poly(const OddFamily& fam);
bool family_is_commuting(const OddFamily& fam);
// D·D = 0 in the polynomial composition algebra
bool family_square_vanishes(const OddFamily& fam);

struct Straightening {
  int s = 0;
  CompElem G;  // G.images[a-1] = G(ds_a)
};

struct SolveOptions {
  bool pin_kernel = true;
  bool reverse_columns = false;
};

Straightening straighten(const OddFamily& fam, const SolveOptions& opt = {});

struct StraighteningReport {
  bool passed = true;
  long checked = 0;
  std::optional<std::pair<int, Mask>> failure;  // (basis index of V, monomial)
  std::string message;
};

// G extended as a unital algebra morphism
ExtElem apply_morphism(const CompElem& G, const ExtElem& a);
StraighteningReport verify_straightening(const OddFamily& fam, const Straightening& G);

// images H with G∘H = id on generators, for G = id + higher order
CompElem invert_morphism(const CompElem& G);
// D_v = G ∘ f(v)⌟ ∘ G^{-1}
OddFamily conjugated_family(const CompElem& G, const QMatrix& f);

}  // namespace sa
