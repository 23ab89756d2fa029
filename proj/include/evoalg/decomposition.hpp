#pragma once

#include <evoalg/algebra.hpp>
#include <evoalg/derivations.hpp>
#include <evoalg/linalg.hpp>

#include <optional>
#include <vector>

namespace evoalg {

/// Connected components of the support graph: vertices are basis indices,
/// with an edge {i,k} whenever a_ik or a_ki is nonzero (i != k). The span
/// of each component is an ideal and the algebra is their direct sum.
std::vector<std::vector<std::size_t>> support_components(const EvolutionAlgebra& e);

struct Component {
  std::vector<std::size_t> indices;  // original basis positions, ascending
  EvolutionAlgebra algebra;          // structure restricted to those positions
};

/// Natural-basis direct-sum factors, one per support component.
std::vector<Component> decompose(const EvolutionAlgebra& e);

/// Block-diagonal join of two algebras on the concatenated basis.
EvolutionAlgebra direct_sum(const EvolutionAlgebra& a, const EvolutionAlgebra& b);

/// Hom0(I1, I2): linear maps killing I1^2 with image inside ann(I2), as a
/// subspace of the dim(I2) x dim(I1) matrices (flattened row-major).
Subspace hom0(const EvolutionAlgebra& i1, const EvolutionAlgebra& i2);

/// Two-block partition of the basis positions of a direct sum.
struct Split {
  std::vector<std::size_t> first, second;
  std::size_t total() const { return first.size() + second.size(); }
};

/// The four blocks of a derivation of I1 ⊕ I2: f on I1, g on I2, ell from
/// I1 into I2 and k from I2 into I1.
struct Quadruple {
  RatMatrix f, g, ell, k;
};

RatMatrix assemble(const Quadruple& q, const Split& split);
Quadruple disassemble(const RatMatrix& d, const Split& split);

/// Bracket of quadruples matching the matrix commutator of the assembled
/// maps:
///   f'' = [f, f'] + (k ∘ ell' - k' ∘ ell)
///   ell'' = (ell ∘ f' - ell' ∘ f) + (g ∘ ell' - g' ∘ ell)
///   g'' = [g, g'] + (ell ∘ k' - ell' ∘ k)
///   k'' = (k ∘ g' - k' ∘ g) + (f ∘ k' - f' ∘ k)
Quadruple quadruple_bracket(const Quadruple& q, const Quadruple& qp);

/// D(I1 ⊕ I2) assembled from D(I1), D(I2), Hom0(I1,I2) and Hom0(I2,I1),
/// with I1 on the leading block of the concatenated basis. Coincides with
/// derivation_space of the direct-sum algebra.
Subspace derivation_space_of_sum(const EvolutionAlgebra& i1, const EvolutionAlgebra& i2);

struct WedderburnSplit {
  std::vector<Element> idempotents;            // u = c^{-1} e_i, ambient coordinates
  std::vector<std::size_t> idempotent_indices;  // original basis positions
  std::vector<std::size_t> radical_indices;
  std::optional<EvolutionAlgebra> radical;      // empty when the radical is 0
};

/// Splits off basis elements with e_i^2 = c e_i (c != 0) sitting in
/// singleton support components; the rest must test nil. Returns nullopt
/// when the algebra is non-nil but not of this detectable shape. Throws if
/// the algebra is not power-associative.
std::optional<WedderburnSplit> wedderburn(const EvolutionAlgebra& e);

/// True when every basis derivation kills each idempotent and restricts to
/// a derivation of the radical with dim D(E) = dim D(N). Throws when the
/// Wedderburn split is unavailable.
bool derivations_vanish_on_semisimple(const EvolutionAlgebra& e);

}  // namespace evoalg
