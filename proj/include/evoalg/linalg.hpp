#pragma once

#include <evoalg/matrix.hpp>

#include <cstddef>
#include <vector>

namespace evoalg {

/// Reduced row echelon form with zero rows dropped, plus the pivot columns.
/// The rref of a matrix is unique, so it doubles as a canonical
/// representative of the row space: two spans are equal iff their Echelon
/// matrices are identical.
struct Echelon {
  RatMatrix mat;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination over the rationals. The per-pivot elimination
/// sweep runs in parallel across rows (OpenMP) once the matrix is large
/// enough to pay for it; the result is bit-identical to the serial kernel.
Echelon rref(RatMatrix m);

namespace linalg_reference {
/// Straightforward serial elimination (forward sweep, then back
/// substitution). Kept as an independent cross-check of the parallel
/// kernel; the benchmark target compares the two.
Echelon rref(RatMatrix m);
}  // namespace linalg_reference

/// Linear subspace of K^ambient held as a canonical rref basis, so equal
/// subspaces compare equal as plain values.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  static Subspace span(const std::vector<RatVector>& generators, std::size_t ambient);
  static Subspace full(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const RatMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  RatVector basis_vector(std::size_t i) const { return basis_.row(i); }

  bool contains(const RatVector& v) const;
  bool contains(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;
  /// Exact intersection (Zassenhaus block elimination).
  Subspace intersect(const Subspace& other) const;

  bool operator==(const Subspace& other) const = default;

 private:
  friend Subspace nullspace(const RatMatrix& a);
  std::size_t ambient_ = 0;
  RatMatrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Canonical solution space of A x = 0.
Subspace nullspace(const RatMatrix& a);

}  // namespace evoalg
