#pragma once

#include "superalg/core.hpp"
#include "superalg/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sa {

using Vec = std::vector<Scalar>;

// Homogeneous basis: indices 0..even_dim-1 even, the rest odd.
// c[i][j] = coordinates of ⟦L_i, L_j⟧.
struct LieSuperData {
  int even_dim = 0, odd_dim = 0;
  std::vector<std::vector<Vec>> c;

  int dim() const { return even_dim + odd_dim; }
  Parity parity(int i) const { return i < even_dim ? Parity::even : Parity::odd; }
  static LieSuperData abelian(int p, int q);
  Vec bracket(const Vec& x, const Vec& y) const;
  Vec basis(int i) const;
};

void validate(const LieSuperData& L);

struct LieReport {
  bool superalternating = true;   // ⟦X,Y⟧ = -(-1)^{|X||Y|}⟦Y,X⟧
  bool printed_convention = true;  // ⟦X,Y⟧ = (-1)^{|X||Y|}⟦Y,X⟧
  bool jacobi = true;
  bool parity_additive = true;
  std::vector<std::vector<int>> jacobi_failures;  // failing basis triples
  std::vector<std::string> failures;
  bool passed() const { return superalternating && jacobi && parity_additive; }
};

LieReport check_lie_superalgebra(const LieSuperData& L);

// g (dimension g_dim, bracket g_bracket; empty means abelian) acting on S by rho,
// with a symmetric B : S × S → g.
struct RepAndForm {
  int g_dim = 0, s_dim = 0;
  std::vector<std::vector<Vec>> g_bracket;
  std::vector<QMatrix> rho;              // rho[a] is s_dim × s_dim
  std::vector<std::vector<Vec>> B;       // B[s][t] ∈ g

  static RepAndForm zero(int g_dim, int s_dim);
  Vec g_br(int a, int b) const;
};

void validate(const RepAndForm& d);

struct StructureReport {
  bool g_is_lie = true;
  bool rho_is_representation = true;
  bool B_symmetric = true;
  bool equivariant = true;
  bool cubic_vanishes = true;
  std::vector<std::string> failures;
  bool passed() const { return g_is_lie && rho_is_representation && B_symmetric && equivariant && cubic_vanishes; }
};

StructureReport check_structure_conditions(const RepAndForm& d);
LieSuperData build_from_rho_B(const RepAndForm& d);
LieSuperData semidirect(const RepAndForm& d);  // B ignored
LieSuperData endo_superalgebra(int p, int q);
// the even part as an ordinary Lie algebra
LieSuperData even_part(const LieSuperData& L);

}  // namespace sa
