#include <evoalg/derivations.hpp>

#include <evoalg/sampling.hpp>

#include <stdexcept>

namespace evoalg {

const Element& LeibnizDefect::at(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  // Pairs (0,0)..(0,n-1), (1,1)..(1,n-1), ... packed in order.
  const std::size_t offset = i * dim - i * (i - 1) / 2 + (j - i);
  return entries[offset];
}

bool LeibnizDefect::all_zero() const {
  for (const Element& v : entries)
    if (!is_zero(v)) return false;
  return true;
}

LeibnizDefect leibniz_defect(const EvolutionAlgebra& e, const DerivationMatrix& d) {
  const std::size_t n = e.dim();
  if (d.rows() != n || d.cols() != n) throw std::invalid_argument("matrix dimension mismatch");
  std::vector<Element> images(n);
  for (std::size_t i = 0; i < n; ++i) {
    images[i].resize(n);
    for (std::size_t r = 0; r < n; ++r) images[i][r] = d.at(r, i);
  }
  LeibnizDefect defect;
  defect.dim = n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Element ei = unit_vector(n, i), ej = unit_vector(n, j);
      Element lhs = i == j ? Element(e.square_of(i)) : Element(n, Rat(0));
      // d(e_i e_j) with resolved product, then the Leibniz right-hand side.
      Element d_of_product(n, Rat(0));
      for (std::size_t k = 0; k < n; ++k) {
        if (lhs[k] == 0) continue;
        for (std::size_t r = 0; r < n; ++r) d_of_product[r] += lhs[k] * images[k][r];
      }
      Element rhs = mul(e, ei, images[j]);
      Element rhs2 = mul(e, images[i], ej);
      Element entry(n);
      for (std::size_t r = 0; r < n; ++r) entry[r] = d_of_product[r] - rhs[r] - rhs2[r];
      defect.entries.push_back(std::move(entry));
    }
  return defect;
}

bool is_derivation(const EvolutionAlgebra& e, const DerivationMatrix& d) {
  return leibniz_defect(e, d).all_zero();
}

Subspace derivation_space(const EvolutionAlgebra& e) {
  const std::size_t n = e.dim();
  const auto& a = e.structure();
  // Unknown x_(r,c) = entry (r,c) of the matrix, flattened at r*n + c.
  // Pair i < j, coordinate k:   a_ik x_(i,j) + a_jk x_(j,i) = 0.
  // Pair i = i, coordinate r:   sum_k a_ik x_(r,k) - 2 a_ir x_(i,i) = 0.
  const std::size_t pair_rows = n * (n - 1) / 2 * n;
  RatMatrix system(pair_rows + n * n, n * n);
  std::size_t row = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k, ++row) {
        system.at(row, i * n + j) = a.at(i, k);
        system.at(row, j * n + i) += a.at(j, k);
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < n; ++r, ++row) {
      for (std::size_t k = 0; k < n; ++k) system.at(row, r * n + k) += a.at(i, k);
      system.at(row, i * n + i) -= 2 * a.at(i, r);
    }
  return nullspace(system);
}

DerivationMatrix bracket(const DerivationMatrix& d, const DerivationMatrix& dp) {
  if (d.rows() != dp.rows() || d.cols() != dp.cols() || d.rows() != d.cols())
    throw std::invalid_argument("matrix dimension mismatch");
  return d * dp - dp * d;
}

std::vector<RatMatrix> subspace_matrices(const Subspace& s, std::size_t rows, std::size_t cols) {
  if (s.ambient() != rows * cols) throw std::invalid_argument("ambient is not rows*cols");
  std::vector<RatMatrix> out;
  for (std::size_t r = 0; r < s.dim(); ++r)
    out.push_back(RatMatrix::from_flat(s.basis_vector(r), rows, cols));
  return out;
}

Subspace derived_subalgebra(const EvolutionAlgebra& e, const std::vector<DerivationMatrix>& basis) {
  const std::size_t n = e.dim();
  std::vector<RatVector> gens;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      gens.push_back(bracket(basis[i], basis[j]).flat());
  return Subspace::span(gens, n * n);
}

bool LieStructure::abelian() const {
  for (const Rat& x : constants)
    if (x != 0) return false;
  return true;
}

LieStructure lie_structure(const EvolutionAlgebra& e, const std::vector<DerivationMatrix>& basis) {
  const std::size_t n = e.dim();
  const std::size_t m = basis.size();
  std::vector<RatVector> flats;
  for (const auto& b : basis) flats.push_back(b.flat());
  Subspace space = Subspace::span(flats, n * n);
  if (space.dim() != m) throw std::invalid_argument("basis is linearly dependent");

  // Solve for coordinates of all brackets at once against the basis columns.
  const std::size_t npairs = m * (m - 1) / 2;
  RatMatrix augmented(n * n, m + npairs);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t r = 0; r < n * n; ++r) augmented.at(r, k) = flats[k][r];
  {
    std::size_t col = m;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j, ++col) {
        RatVector br = bracket(basis[i], basis[j]).flat();
        for (std::size_t r = 0; r < n * n; ++r) augmented.at(r, col) = br[r];
      }
  }
  Echelon ech = rref(std::move(augmented));
  for (std::size_t p : ech.pivots)
    if (p >= m) throw std::invalid_argument("span is not closed under the bracket");

  LieStructure lie;
  lie.dim = m;
  lie.constants.assign(m * m * m, Rat(0));
  std::size_t col = m;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j, ++col)
      for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
        const std::size_t k = ech.pivots[r];
        lie.constants[(i * m + j) * m + k] = ech.mat.at(r, col);
        lie.constants[(j * m + i) * m + k] = -ech.mat.at(r, col);
      }

  // Jacobi identity, exact: [[b_i,b_j],b_k] + [[b_j,b_k],b_i] + [[b_k,b_i],b_j] = 0.
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) {
          Rat total(0);
          for (std::size_t s = 0; s < m; ++s) {
            total += lie.c(i, j, s) * lie.c(s, k, l);
            total += lie.c(j, k, s) * lie.c(s, i, l);
            total += lie.c(k, i, s) * lie.c(s, j, l);
          }
          if (total != 0) throw std::invalid_argument("structure constants violate Jacobi");
        }
  return lie;
}

DerivationMatrix right_mult(const EvolutionAlgebra& e, const Element& a) {
  const std::size_t n = e.dim();
  if (a.size() != n) throw std::invalid_argument("element dimension mismatch");
  DerivationMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t r = 0; r < n; ++r) m.at(r, i) = a[i] * e.structure().at(i, r);
  }
  return m;
}

Subspace lie_transformation_space(const EvolutionAlgebra& e) {
  const std::size_t n = e.dim();
  std::vector<DerivationMatrix> r_gens;
  for (std::size_t i = 0; i < n; ++i) r_gens.push_back(right_mult(e, unit_vector(n, i)));
  std::vector<RatVector> gens;
  for (const auto& r : r_gens) gens.push_back(r.flat());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) gens.push_back(bracket(r_gens[i], r_gens[j]).flat());
  return Subspace::span(gens, n * n);
}

Subspace inner_derivations(const EvolutionAlgebra& e) {
  return derivation_space(e).intersect(lie_transformation_space(e));
}

Ann1Basis expected_basis_ann1(std::size_t n, const std::vector<Rat>& alphas) {
  if (n < 3) throw std::invalid_argument("needs dim >= 3");
  if (alphas.size() != n - 1) throw std::invalid_argument("needs n-1 alphas");
  for (const Rat& a : alphas)
    if (a == 0) throw std::invalid_argument("alphas must be nonzero");
  Ann1Basis out{Subspace(n * n), Subspace(n * n), {}, {}, RatMatrix(n, n)};
  for (std::size_t i = 0; i < n - 1; ++i)
    for (std::size_t j = i + 1; j < n - 1; ++j) {
      RatMatrix h(n, n);
      h.at(j, i) = 1;
      h.at(i, j) = -alphas[j] / alphas[i];
      out.h_mats.push_back(std::move(h));
    }
  for (std::size_t j = 0; j < n - 1; ++j) {
    RatMatrix l(n, n);
    l.at(n - 1, j) = 1;
    out.l_mats.push_back(std::move(l));
  }
  for (std::size_t i = 0; i + 1 < n; ++i) out.g.at(i, i) = 1;
  out.g.at(n - 1, n - 1) = 2;
  std::vector<RatVector> h_flat, l_flat;
  for (const auto& m : out.h_mats) h_flat.push_back(m.flat());
  for (const auto& m : out.l_mats) l_flat.push_back(m.flat());
  out.h = Subspace::span(h_flat, n * n);
  out.l = Subspace::span(l_flat, n * n);
  return out;
}

namespace {

// Least k with d^k = 0, or 0 if d is not nilpotent within dim steps.
unsigned nilpotency_index(const DerivationMatrix& d) {
  const std::size_t n = d.rows();
  if (d.is_zero()) return 1;
  RatMatrix power = d;
  for (unsigned k = 2; k <= n; ++k) {
    power = power * d;
    if (power.is_zero()) return k;
  }
  return 0;
}

}  // namespace

bool adn_witness_check(const EvolutionAlgebra& e, const DerivationMatrix& d) {
  if (!is_derivation(e, d)) throw std::invalid_argument("not a derivation");
  return nilpotency_index(d) == e.dim();
}

std::optional<DerivationMatrix> adn_search(const EvolutionAlgebra& e, unsigned trials,
                                           std::uint64_t seed) {
  const std::size_t n = e.dim();
  const auto basis = subspace_matrices(derivation_space(e), n, n);
  if (basis.empty()) return std::nullopt;
  SmallRatSampler sampler(seed);
  for (unsigned t = 0; t < trials; ++t) {
    DerivationMatrix d(n, n);
    for (const auto& b : basis) {
      Rat coeff = sampler.next_int();
      if (coeff != 0) d = d + b.scaled(coeff);
    }
    if (d.is_zero()) continue;
    if (nilpotency_index(d) == n) return d;
  }
  return std::nullopt;
}

}  // namespace evoalg
