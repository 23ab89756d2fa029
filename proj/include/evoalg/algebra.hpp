#pragma once

#include <evoalg/linalg.hpp>
#include <evoalg/matrix.hpp>
#include <evoalg/polynomial.hpp>

#include <cstdint>
#include <vector>

namespace evoalg {

/// Finite-dimensional evolution algebra over the rationals: distinct
/// natural-basis elements multiply to zero and row i of the structure
/// matrix holds the coordinates of e_i^2.
class EvolutionAlgebra {
 public:
  explicit EvolutionAlgebra(RatMatrix structure);

  std::size_t dim() const { return dim_; }
  const RatMatrix& structure() const { return structure_; }
  /// Coordinates of e_i^2 (0-based i).
  RatVector square_of(std::size_t i) const { return structure_.row(i); }

  bool operator==(const EvolutionAlgebra& other) const = default;

 private:
  std::size_t dim_;
  RatMatrix structure_;
};

/// Coordinate vector in the natural basis.
using Element = RatVector;

/// Product x y = sum_i x_i y_i e_i^2; commutative by construction.
Element mul(const EvolutionAlgebra& e, const Element& x, const Element& y);

/// Principal power x^k with x^1 = x and x^(k+1) = x^k x. Requires k >= 1
/// (there is no unit element).
Element principal_power(const EvolutionAlgebra& e, const Element& x, unsigned k);

/// Descending chain E^1 >= E^2 >= ... computed until it reaches zero or the
/// dimension repeats on consecutive steps.
std::vector<Subspace> power_chain(const EvolutionAlgebra& e);

/// Span of the basis vectors whose square is zero.
Subspace annihilator(const EvolutionAlgebra& e);

/// Associativity on basis triples; sufficient by trilinearity.
bool is_associative(const EvolutionAlgebra& e);

/// Fourth-power identity x^2 x^2 = x^4 on a fully generic element; over a
/// field of characteristic zero this settles power associativity.
bool is_power_associative(const EvolutionAlgebra& e);

struct NilVerdict {
  enum class Kind { nil, not_nil, inconclusive };
  Kind kind = Kind::inconclusive;
  unsigned index = 0;  // least k with x^k identically zero (kind == nil)
  Element witness;     // element whose (dim+1)-th power is nonzero (kind == not_nil)
};

/// Nil test via principal powers of the generic element, bounded at
/// exponent dim+1. Beyond the bound the verdict is inconclusive rather
/// than a guess.
NilVerdict nil_check(const EvolutionAlgebra& e, std::uint64_t seed = 42);

/// Element whose coordinates are the indeterminates x_1..x_n.
std::vector<Polynomial> generic_element(const EvolutionAlgebra& e);

/// Evolution product on elements with polynomial coordinates.
std::vector<Polynomial> mul(const EvolutionAlgebra& e, const std::vector<Polynomial>& x,
                            const std::vector<Polynomial>& y);

}  // namespace evoalg
