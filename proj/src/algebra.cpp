#include <evoalg/algebra.hpp>

#include <evoalg/sampling.hpp>

#include <stdexcept>

namespace evoalg {

EvolutionAlgebra::EvolutionAlgebra(RatMatrix structure)
    : dim_(structure.rows()), structure_(std::move(structure)) {
  if (dim_ == 0) throw std::invalid_argument("evolution algebra needs dim >= 1");
  if (structure_.cols() != dim_) throw std::invalid_argument("structure matrix must be square");
}

Element mul(const EvolutionAlgebra& e, const Element& x, const Element& y) {
  const std::size_t n = e.dim();
  if (x.size() != n || y.size() != n) throw std::invalid_argument("element dimension mismatch");
  Element out(n, Rat(0));
  for (std::size_t i = 0; i < n; ++i) {
    Rat w = x[i] * y[i];
    if (w == 0) continue;
    for (std::size_t k = 0; k < n; ++k) out[k] += w * e.structure().at(i, k);
  }
  return out;
}

Element principal_power(const EvolutionAlgebra& e, const Element& x, unsigned k) {
  if (k == 0) throw std::invalid_argument("principal powers start at exponent 1");
  Element p = x;
  for (unsigned i = 1; i < k; ++i) p = mul(e, p, x);
  return p;
}

std::vector<Subspace> power_chain(const EvolutionAlgebra& e) {
  const std::size_t n = e.dim();
  std::vector<Subspace> chain;
  chain.push_back(Subspace::full(n));
  for (;;) {
    const Subspace& prev = chain.back();
    if (prev.dim() == 0) break;
    std::vector<RatVector> products;
    for (std::size_t r = 0; r < prev.dim(); ++r)
      for (std::size_t j = 0; j < n; ++j)
        products.push_back(mul(e, prev.basis_vector(r), unit_vector(n, j)));
    Subspace next = Subspace::span(products, n);
    const bool stabilized = next.dim() == prev.dim();
    chain.push_back(std::move(next));
    if (stabilized) break;
  }
  return chain;
}

Subspace annihilator(const EvolutionAlgebra& e) {
  std::vector<RatVector> gens;
  for (std::size_t i = 0; i < e.dim(); ++i)
    if (is_zero(e.square_of(i))) gens.push_back(unit_vector(e.dim(), i));
  return Subspace::span(gens, e.dim());
}

bool is_associative(const EvolutionAlgebra& e) {
  const std::size_t n = e.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Element ei = unit_vector(n, i), ej = unit_vector(n, j), ek = unit_vector(n, k);
        if (mul(e, mul(e, ei, ej), ek) != mul(e, ei, mul(e, ej, ek))) return false;
      }
  return true;
}

std::vector<Polynomial> generic_element(const EvolutionAlgebra& e) {
  std::vector<Polynomial> x;
  for (std::size_t i = 0; i < e.dim(); ++i) x.push_back(Polynomial::variable(e.dim(), i));
  return x;
}

std::vector<Polynomial> mul(const EvolutionAlgebra& e, const std::vector<Polynomial>& x,
                            const std::vector<Polynomial>& y) {
  const std::size_t n = e.dim();
  if (x.size() != n || y.size() != n) throw std::invalid_argument("element dimension mismatch");
  std::vector<Polynomial> out(n, Polynomial(n));
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial w = x[i] * y[i];
    if (w.is_zero()) continue;
    for (std::size_t k = 0; k < n; ++k) {
      const Rat& a = e.structure().at(i, k);
      if (a == 0) continue;
      out[k] = out[k] + w * a;
    }
  }
  return out;
}

namespace {

bool poly_element_zero(const std::vector<Polynomial>& x) {
  for (const Polynomial& p : x)
    if (!p.is_zero()) return false;
  return true;
}

}  // namespace

bool is_power_associative(const EvolutionAlgebra& e) {
  const std::vector<Polynomial> x = generic_element(e);
  const std::vector<Polynomial> x2 = mul(e, x, x);
  const std::vector<Polynomial> x3 = mul(e, x2, x);
  const std::vector<Polynomial> x4 = mul(e, x3, x);
  const std::vector<Polynomial> x2x2 = mul(e, x2, x2);
  return x2x2 == x4;
}

NilVerdict nil_check(const EvolutionAlgebra& e, std::uint64_t seed) {
  const std::size_t n = e.dim();
  const unsigned bound = static_cast<unsigned>(n) + 1;
  std::vector<Polynomial> power = generic_element(e);
  for (unsigned k = 2; k <= bound; ++k) {
    power = mul(e, power, generic_element(e));
    // Ascending scan, so the first identically-zero power is the nil index.
    if (poly_element_zero(power)) return NilVerdict{NilVerdict::Kind::nil, k, {}};
  }
  // The generic power survived the bound; look for a concrete witness.
  std::vector<Element> candidates;
  for (std::size_t i = 0; i < n; ++i) candidates.push_back(unit_vector(n, i));
  SmallRatSampler sampler(seed);
  for (int t = 0; t < 50; ++t) candidates.push_back(sampler.element(n));
  for (const Element& x : candidates) {
    if (is_zero(x)) continue;
    if (!is_zero(principal_power(e, x, bound)))
      return NilVerdict{NilVerdict::Kind::not_nil, 0, x};
  }
  return NilVerdict{NilVerdict::Kind::inconclusive, 0, {}};
}

}  // namespace evoalg
