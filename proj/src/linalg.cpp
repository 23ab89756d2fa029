#include <evoalg/linalg.hpp>

#include <cstdint>
#include <stdexcept>

namespace evoalg {

namespace {

// Below this many entries the elimination sweep stays serial; GMP ops on
// catalog-sized systems are cheaper than spawning a team.
constexpr std::size_t kParallelThreshold = 1 << 14;

Echelon drop_zero_rows(RatMatrix m, std::vector<std::size_t> pivots) {
  RatMatrix out(pivots.size(), m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.at(r, c) = std::move(m.at(r, c));
  return Echelon{std::move(out), std::move(pivots)};
}

}  // namespace

Echelon rref(RatMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t col = 0; col < cols && next < rows; ++col) {
    std::size_t pivot = rows;
    for (std::size_t r = next; r < rows; ++r)
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot == rows) continue;
    if (pivot != next)
      for (std::size_t c = col; c < cols; ++c) std::swap(m.at(next, c), m.at(pivot, c));
    {
      Rat inv = 1 / m.at(next, col);
      for (std::size_t c = col; c < cols; ++c) m.at(next, c) *= inv;
    }
    const std::int64_t n = static_cast<std::int64_t>(rows);
#pragma omp parallel for schedule(dynamic, 8) if (rows * cols >= kParallelThreshold)
    for (std::int64_t r = 0; r < n; ++r) {
      if (static_cast<std::size_t>(r) == next) continue;
      Rat factor = m.at(r, col);
      if (factor == 0) continue;
      for (std::size_t c = col; c < cols; ++c) m.at(r, c) -= factor * m.at(next, c);
    }
    pivots.push_back(col);
    ++next;
  }
  return drop_zero_rows(std::move(m), std::move(pivots));
}

namespace linalg_reference {

Echelon rref(RatMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  // Forward sweep to row echelon form.
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t col = 0; col < cols && next < rows; ++col) {
    std::size_t pivot = rows;
    for (std::size_t r = next; r < rows; ++r)
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot == rows) continue;
    if (pivot != next)
      for (std::size_t c = 0; c < cols; ++c) std::swap(m.at(next, c), m.at(pivot, c));
    for (std::size_t r = next + 1; r < rows; ++r) {
      if (m.at(r, col) == 0) continue;
      Rat factor = m.at(r, col) / m.at(next, col);
      for (std::size_t c = col; c < cols; ++c) m.at(r, c) -= factor * m.at(next, c);
    }
    pivots.push_back(col);
    ++next;
  }
  // Back substitution, then pivot normalization.
  for (std::size_t k = pivots.size(); k-- > 0;) {
    const std::size_t col = pivots[k];
    for (std::size_t r = 0; r < k; ++r) {
      if (m.at(r, col) == 0) continue;
      Rat factor = m.at(r, col) / m.at(k, col);
      for (std::size_t c = col; c < cols; ++c) m.at(r, c) -= factor * m.at(k, c);
    }
    Rat inv = 1 / m.at(k, col);
    for (std::size_t c = col; c < cols; ++c) m.at(k, c) *= inv;
  }
  return drop_zero_rows(std::move(m), std::move(pivots));
}

}  // namespace linalg_reference

Subspace Subspace::span(const std::vector<RatVector>& generators, std::size_t ambient) {
  Subspace s(ambient);
  if (generators.empty()) return s;
  for (const RatVector& g : generators)
    if (g.size() != ambient) throw std::invalid_argument("generator has wrong length");
  Echelon e = rref(RatMatrix::from_rows(generators));
  s.basis_ = std::move(e.mat);
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s(ambient);
  s.basis_ = RatMatrix::identity(ambient);
  for (std::size_t i = 0; i < ambient; ++i) s.pivots_.push_back(i);
  return s;
}

bool Subspace::contains(const RatVector& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("vector has wrong length");
  RatVector rem = v;
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    const Rat& coeff = rem[pivots_[r]];
    if (coeff == 0) continue;
    Rat factor = coeff;
    for (std::size_t c = pivots_[r]; c < ambient_; ++c) rem[c] -= factor * basis_.at(r, c);
  }
  return is_zero(rem);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_vector(r))) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("ambient mismatch");
  std::vector<RatVector> gens;
  for (std::size_t r = 0; r < dim(); ++r) gens.push_back(basis_vector(r));
  for (std::size_t r = 0; r < other.dim(); ++r) gens.push_back(other.basis_vector(r));
  return span(gens, ambient_);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("ambient mismatch");
  // Zassenhaus: eliminate rows [u | u] and [w | 0]; rows whose left block
  // vanished carry an intersection basis in the right block.
  const std::size_t n = ambient_;
  RatMatrix block(dim() + other.dim(), 2 * n);
  for (std::size_t r = 0; r < dim(); ++r)
    for (std::size_t c = 0; c < n; ++c) {
      block.at(r, c) = basis_.at(r, c);
      block.at(r, n + c) = basis_.at(r, c);
    }
  for (std::size_t r = 0; r < other.dim(); ++r)
    for (std::size_t c = 0; c < n; ++c) block.at(dim() + r, c) = other.basis_.at(r, c);
  Echelon e = rref(std::move(block));
  std::vector<RatVector> gens;
  for (std::size_t r = 0; r < e.mat.rows(); ++r) {
    if (e.pivots[r] < n) continue;
    RatVector v(n);
    for (std::size_t c = 0; c < n; ++c) v[c] = e.mat.at(r, n + c);
    gens.push_back(std::move(v));
  }
  return span(gens, n);
}

Subspace nullspace(const RatMatrix& a) {
  const std::size_t n = a.cols();
  Echelon e = rref(a);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RatVector v(n, Rat(0));
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.mat.at(r, f);
    basis.push_back(std::move(v));
  }
  return Subspace::span(basis, n);
}

}  // namespace evoalg
