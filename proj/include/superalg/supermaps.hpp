#pragma once

#include "superalg/polydiff_jets.hpp"
#include "superalg/symext.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sa {

// polynomial superfunction on R^m with m even coordinates x and p odd generators ds
using PolySuperFunc = SymExt;

// unital morphism from functions on the target (n | q) to functions on the source (m | p)
struct SuperMapData {
  int n = 0, q = 0;  // target
  int m = 0, p = 0;  // source
  std::vector<PolySuperFunc> coord_images;  // Φ(y_j), even
  std::vector<PolySuperFunc> odd_images;    // Φ(σ_a), odd
};

void validate(const SuperMapData& Phi);
SuperMapData identity_map(int m, int p);
// Φ(y_j) = φ_j, Φ(σ_a) = Σ_μ F[μ][a] ds_μ with F a p × q matrix of polynomials
SuperMapData exterior_lift(const std::vector<Poly>& phi, const PolyMatrix& F, int p);

PolySuperFunc apply(const SuperMapData& Phi, const PolySuperFunc& f);
std::vector<Poly> base_map(const SuperMapData& Phi);
// f ∘ φ for a polynomial on the target base, as a superfunction on the source
PolySuperFunc pull_body(const SuperMapData& Phi, const Poly& f);

// η ↦ Σ_{A⊆K} (-1)^{|A|} (f_A∘φ) Φ(f_{K∖A} η)
PolySuperFunc twisted_commutator(const SuperMapData& Phi, const std::vector<Poly>& fs, const PolySuperFunc& eta);
// the same through Π (Φ(f_i) - f_i∘φ) · Φ(η)
PolySuperFunc twisted_commutator_product(const SuperMapData& Phi, const std::vector<Poly>& fs,
                                         const PolySuperFunc& eta);

struct OrderReport {
  int bound = 0;                 // ⌊p/2⌋
  bool vanishes_beyond = true;   // every (bound+1)-fold commutator tried is zero
  int observed = 0;              // deepest nonzero commutator seen
  bool paths_agree = true;
  long trials = 0;
  bool passed() const { return vanishes_beyond && paths_agree && observed <= bound; }
};

OrderReport order_bound_check(const SuperMapData& Phi, Rng& rng, int trials = 8);

struct FiltrationReport {
  bool passed = true;
  long checked = 0;
  std::string failure;
};

FiltrationReport filtration_check(const SuperMapData& Phi, int max_poly_degree = 1);

// rows: degree-k monomials of the source, columns: degree-k monomials of the target
PolyMatrix induced_grade_map(const SuperMapData& Phi, int k);

// Λ² part of Φ(f) - f∘φ, with coefficients still polynomial
PolySuperFunc aux_codifferential_poly(const SuperMapData& Phi, const Poly& f);
ExtElem aux_codifferential(const SuperMapData& Phi, const Poly& f, const std::vector<Scalar>& point);

struct OrderZeroReport {
  bool coordinate_images_plain = true;  // no nilpotent part in any Φ(y_j)
  bool odd_images_linear = true;        // every Φ(σ_a) in Λ¹
  bool order_zero() const { return coordinate_images_plain && odd_images_linear; }
};

OrderZeroReport order_zero_criterion(const SuperMapData& Phi);

}  // namespace sa
