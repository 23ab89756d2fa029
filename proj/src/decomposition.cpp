#include <evoalg/decomposition.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace evoalg {

std::vector<std::vector<std::size_t>> support_components(const EvolutionAlgebra& e) {
  const std::size_t n = e.dim();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (i == k) continue;
      if (e.structure().at(i, k) != 0) parent[find(i)] = find(k);
    }
  std::vector<std::vector<std::size_t>> groups(n);
  for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> components;
  for (auto& g : groups)
    if (!g.empty()) components.push_back(std::move(g));
  std::sort(components.begin(), components.end());
  return components;
}

namespace {

EvolutionAlgebra restrict_to(const EvolutionAlgebra& e, const std::vector<std::size_t>& idx) {
  RatMatrix s(idx.size(), idx.size());
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) s.at(r, c) = e.structure().at(idx[r], idx[c]);
  return EvolutionAlgebra(std::move(s));
}

}  // namespace

std::vector<Component> decompose(const EvolutionAlgebra& e) {
  std::vector<Component> out;
  for (auto& idx : support_components(e)) {
    EvolutionAlgebra part = restrict_to(e, idx);
    out.push_back(Component{std::move(idx), std::move(part)});
  }
  return out;
}

EvolutionAlgebra direct_sum(const EvolutionAlgebra& a, const EvolutionAlgebra& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  RatMatrix s(na + nb, na + nb);
  for (std::size_t r = 0; r < na; ++r)
    for (std::size_t c = 0; c < na; ++c) s.at(r, c) = a.structure().at(r, c);
  for (std::size_t r = 0; r < nb; ++r)
    for (std::size_t c = 0; c < nb; ++c) s.at(na + r, na + c) = b.structure().at(r, c);
  return EvolutionAlgebra(std::move(s));
}

Subspace hom0(const EvolutionAlgebra& i1, const EvolutionAlgebra& i2) {
  const std::size_t n1 = i1.dim(), n2 = i2.dim();
  // Unknown h_(r,c) at r*n1 + c maps coordinate c of I1 to coordinate r of I2.
  // (1) h kills I1^2: h applied to every square e_c^2 vanishes.
  // (2) image inside ann(I2): row r must vanish unless e_r^2 = 0 in I2.
  std::vector<RatVector> rows;
  for (std::size_t c = 0; c < n1; ++c) {
    RatVector sq = i1.square_of(c);
    if (is_zero(sq)) continue;
    for (std::size_t r = 0; r < n2; ++r) {
      RatVector eq(n2 * n1, Rat(0));
      for (std::size_t j = 0; j < n1; ++j) eq[r * n1 + j] = sq[j];
      rows.push_back(std::move(eq));
    }
  }
  for (std::size_t r = 0; r < n2; ++r) {
    if (is_zero(i2.square_of(r))) continue;
    for (std::size_t c = 0; c < n1; ++c) {
      RatVector eq(n2 * n1, Rat(0));
      eq[r * n1 + c] = 1;
      rows.push_back(std::move(eq));
    }
  }
  if (rows.empty()) return Subspace::full(n2 * n1);
  return nullspace(RatMatrix::from_rows(rows));
}

RatMatrix assemble(const Quadruple& q, const Split& split) {
  const std::size_t n1 = split.first.size(), n2 = split.second.size();
  if (q.f.rows() != n1 || q.f.cols() != n1 || q.g.rows() != n2 || q.g.cols() != n2 ||
      q.ell.rows() != n2 || q.ell.cols() != n1 || q.k.rows() != n1 || q.k.cols() != n2)
    throw std::invalid_argument("quadruple blocks do not match the split");
  RatMatrix d(split.total(), split.total());
  for (std::size_t r = 0; r < n1; ++r)
    for (std::size_t c = 0; c < n1; ++c) d.at(split.first[r], split.first[c]) = q.f.at(r, c);
  for (std::size_t r = 0; r < n1; ++r)
    for (std::size_t c = 0; c < n2; ++c) d.at(split.first[r], split.second[c]) = q.k.at(r, c);
  for (std::size_t r = 0; r < n2; ++r)
    for (std::size_t c = 0; c < n1; ++c) d.at(split.second[r], split.first[c]) = q.ell.at(r, c);
  for (std::size_t r = 0; r < n2; ++r)
    for (std::size_t c = 0; c < n2; ++c) d.at(split.second[r], split.second[c]) = q.g.at(r, c);
  return d;
}

Quadruple disassemble(const RatMatrix& d, const Split& split) {
  if (d.rows() != split.total() || d.cols() != split.total())
    throw std::invalid_argument("matrix does not match the split");
  const std::size_t n1 = split.first.size(), n2 = split.second.size();
  Quadruple q{RatMatrix(n1, n1), RatMatrix(n2, n2), RatMatrix(n2, n1), RatMatrix(n1, n2)};
  for (std::size_t r = 0; r < n1; ++r)
    for (std::size_t c = 0; c < n1; ++c) q.f.at(r, c) = d.at(split.first[r], split.first[c]);
  for (std::size_t r = 0; r < n1; ++r)
    for (std::size_t c = 0; c < n2; ++c) q.k.at(r, c) = d.at(split.first[r], split.second[c]);
  for (std::size_t r = 0; r < n2; ++r)
    for (std::size_t c = 0; c < n1; ++c) q.ell.at(r, c) = d.at(split.second[r], split.first[c]);
  for (std::size_t r = 0; r < n2; ++r)
    for (std::size_t c = 0; c < n2; ++c) q.g.at(r, c) = d.at(split.second[r], split.second[c]);
  return q;
}

Quadruple quadruple_bracket(const Quadruple& q, const Quadruple& qp) {
  Quadruple out{
      q.f * qp.f - qp.f * q.f + (q.k * qp.ell - qp.k * q.ell),
      q.g * qp.g - qp.g * q.g + (q.ell * qp.k - qp.ell * q.k),
      (q.ell * qp.f - qp.ell * q.f) + (q.g * qp.ell - qp.g * q.ell),
      (q.k * qp.g - qp.k * q.g) + (q.f * qp.k - qp.f * q.k),
  };
  return out;
}

Subspace derivation_space_of_sum(const EvolutionAlgebra& i1, const EvolutionAlgebra& i2) {
  const std::size_t n1 = i1.dim(), n2 = i2.dim(), n = n1 + n2;
  Split split;
  for (std::size_t i = 0; i < n1; ++i) split.first.push_back(i);
  for (std::size_t i = 0; i < n2; ++i) split.second.push_back(n1 + i);

  std::vector<RatVector> gens;
  const Quadruple zero{RatMatrix(n1, n1), RatMatrix(n2, n2), RatMatrix(n2, n1),
                       RatMatrix(n1, n2)};
  for (const auto& f : subspace_matrices(derivation_space(i1), n1, n1)) {
    Quadruple q = zero;
    q.f = f;
    gens.push_back(assemble(q, split).flat());
  }
  for (const auto& g : subspace_matrices(derivation_space(i2), n2, n2)) {
    Quadruple q = zero;
    q.g = g;
    gens.push_back(assemble(q, split).flat());
  }
  for (const auto& ell : subspace_matrices(hom0(i1, i2), n2, n1)) {
    Quadruple q = zero;
    q.ell = ell;
    gens.push_back(assemble(q, split).flat());
  }
  for (const auto& k : subspace_matrices(hom0(i2, i1), n1, n2)) {
    Quadruple q = zero;
    q.k = k;
    gens.push_back(assemble(q, split).flat());
  }
  return Subspace::span(gens, n * n);
}

std::optional<WedderburnSplit> wedderburn(const EvolutionAlgebra& e) {
  if (!is_power_associative(e)) throw std::invalid_argument("not power-associative");
  const std::size_t n = e.dim();
  const auto components = support_components(e);
  std::vector<bool> singleton(n, false);
  for (const auto& comp : components)
    if (comp.size() == 1) singleton[comp.front()] = true;

  WedderburnSplit split;
  for (std::size_t i = 0; i < n; ++i) {
    RatVector sq = e.square_of(i);
    const bool scaled_idempotent = singleton[i] && sq[i] != 0;
    if (scaled_idempotent) {
      Element u(n, Rat(0));
      u[i] = 1 / sq[i];
      split.idempotents.push_back(std::move(u));
      split.idempotent_indices.push_back(i);
    } else {
      split.radical_indices.push_back(i);
    }
  }
  if (!split.radical_indices.empty()) {
    EvolutionAlgebra radical = restrict_to(e, split.radical_indices);
    if (nil_check(radical).kind != NilVerdict::Kind::nil) return std::nullopt;
    split.radical = std::move(radical);
  }
  return split;
}

bool derivations_vanish_on_semisimple(const EvolutionAlgebra& e) {
  auto split = wedderburn(e);
  if (!split) throw std::invalid_argument("Wedderburn split unavailable");
  const std::size_t n = e.dim();
  const auto basis = subspace_matrices(derivation_space(e), n, n);
  for (const auto& d : basis)
    for (std::size_t idx : split->idempotent_indices)
      for (std::size_t r = 0; r < n; ++r)
        if (d.at(r, idx) != 0) return false;
  std::size_t radical_dim_d = 0;
  if (split->radical) {
    const auto& rad_idx = split->radical_indices;
    for (const auto& d : basis) {
      RatMatrix restricted(rad_idx.size(), rad_idx.size());
      for (std::size_t r = 0; r < rad_idx.size(); ++r)
        for (std::size_t c = 0; c < rad_idx.size(); ++c)
          restricted.at(r, c) = d.at(rad_idx[r], rad_idx[c]);
      if (!is_derivation(*split->radical, restricted)) return false;
    }
    radical_dim_d = derivation_space(*split->radical).dim();
  }
  return basis.size() == radical_dim_d;
}

}  // namespace evoalg
