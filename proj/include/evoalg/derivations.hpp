#pragma once

#include <evoalg/algebra.hpp>
#include <evoalg/linalg.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace evoalg {

/// Linear map in the natural basis: column i holds the coordinates of the
/// image of e_i. Wherever such maps are embedded into K^(n^2) — the
/// derivation space, its derived subalgebra, inner derivations — the matrix
/// is flattened row-major, entry (r,c) at index r*n + c, and canonical rref
/// bases follow that coordinate order.
using DerivationMatrix = RatMatrix;

/// Defect d(e_i e_j) - e_i d(e_j) - d(e_i) e_j for every pair i <= j;
/// identically zero exactly when the map is a derivation.
struct LeibnizDefect {
  std::size_t dim = 0;
  std::vector<Element> entries;  // pair (i,j), i <= j, packed by rows
  const Element& at(std::size_t i, std::size_t j) const;
  bool all_zero() const;
};

LeibnizDefect leibniz_defect(const EvolutionAlgebra& e, const DerivationMatrix& d);
bool is_derivation(const EvolutionAlgebra& e, const DerivationMatrix& d);

/// The derivation Lie algebra D(E) as the exact nullspace of the Leibniz
/// system over the n^2 matrix entries, in canonical rref form.
Subspace derivation_space(const EvolutionAlgebra& e);

/// Commutator d d' - d' d.
DerivationMatrix bracket(const DerivationMatrix& d, const DerivationMatrix& dp);

/// Unflattens the rows of a subspace of K^(rows*cols) back into matrices.
std::vector<RatMatrix> subspace_matrices(const Subspace& s, std::size_t rows, std::size_t cols);

/// Canonical span of all pairwise brackets of the given basis.
Subspace derived_subalgebra(const EvolutionAlgebra& e, const std::vector<DerivationMatrix>& basis);

/// Structure constants of a bracket-closed space of matrices:
/// [b_i, b_j] = sum_k c(i,j,k) b_k. Antisymmetry and the Jacobi identity
/// are verified exactly on construction.
struct LieStructure {
  std::size_t dim = 0;
  std::vector<Rat> constants;  // c(i,j,k) at (i*dim + j)*dim + k
  const Rat& c(std::size_t i, std::size_t j, std::size_t k) const {
    return constants[(i * dim + j) * dim + k];
  }
  bool abelian() const;
};

/// Throws std::invalid_argument if the basis is dependent or its span is
/// not closed under the bracket.
LieStructure lie_structure(const EvolutionAlgebra& e, const std::vector<DerivationMatrix>& basis);

/// Right multiplication R_a: column i holds e_i a = a_i e_i^2.
DerivationMatrix right_mult(const EvolutionAlgebra& e, const Element& a);

/// L(E) = R(E) + [R(E), R(E)], spanned by the generators R_{e_i} and their
/// pairwise brackets.
Subspace lie_transformation_space(const EvolutionAlgebra& e);

/// Inner derivations In(E) = D(E) ∩ L(E), canonical.
Subspace inner_derivations(const EvolutionAlgebra& e);

/// Explicit derivation basis for the associative algebras with e_i^2 =
/// alphas[i] e_n (i < n) and e_n^2 = 0: the skew part H spanned by
/// h_ji = e_ji - alpha_i^{-1} alpha_j e_ij (i < j <= n-1), the last-row
/// part L spanned by e_nj, and g = diag(1, ..., 1, 2).
struct Ann1Basis {
  Subspace h, l;
  std::vector<DerivationMatrix> h_mats, l_mats;
  DerivationMatrix g;
};

/// Requires n >= 3 and n-1 nonzero alphas.
Ann1Basis expected_basis_ann1(std::size_t n, const std::vector<Rat>& alphas);

/// True when a verified derivation is nilpotent with nilpotency index
/// exactly dim(E) — a single nilpotent Jordan block, which carries an
/// adapted basis chain. Throws if d is not a derivation.
bool adn_witness_check(const EvolutionAlgebra& e, const DerivationMatrix& d);

/// Seeded search over integer combinations of the derivation basis
/// (coefficients in {-3..3}); returns the first witness found.
std::optional<DerivationMatrix> adn_search(const EvolutionAlgebra& e, unsigned trials,
                                           std::uint64_t seed);

}  // namespace evoalg
