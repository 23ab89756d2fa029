// Acceptance suite: one pass/fail line per criterion, exact arithmetic
// throughout. Exit status is the number of failed criteria.

#include <evoalg/algebra.hpp>
#include <evoalg/catalog.hpp>
#include <evoalg/decomposition.hpp>
#include <evoalg/derivations.hpp>
#include <evoalg/sampling.hpp>

#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace evoalg;

namespace {

std::uint64_t g_seed = 42;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void fail(const std::string& note) {
    pass = false;
    notes.push_back(note);
  }
  void require(bool cond, const std::string& note) {
    if (!cond) fail(note);
  }
};

EvolutionAlgebra zero_algebra(std::size_t n) { return EvolutionAlgebra(RatMatrix(n, n)); }

std::vector<DerivationMatrix> derivation_basis(const EvolutionAlgebra& e) {
  return subspace_matrices(derivation_space(e), e.dim(), e.dim());
}

// ---------------------------------------------------------------------------
// Independent oracle for criterion 10. The Leibniz system is rebuilt from
// scratch by expanding d(e_i e_j) - e_i d(e_j) - d(e_i) e_j on every ordered
// basis pair through the generic product, and solved by a second, naive
// Gaussian elimination (fraction-free forward sweep, then back substitution).
// No code below is shared with derivation_space().

std::vector<RatVector> oracle_leibniz_rows(const EvolutionAlgebra& e) {
  const std::size_t n = e.dim();
  std::vector<RatVector> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Element product = mul(e, unit_vector(n, i), unit_vector(n, j));
      for (std::size_t r = 0; r < n; ++r) {
        RatVector row(n * n, Rat(0));
        for (std::size_t k = 0; k < n; ++k) row[r * n + k] += product[k];
        for (std::size_t s = 0; s < n; ++s) {
          row[s * n + j] -= mul(e, unit_vector(n, i), unit_vector(n, s))[r];
          row[s * n + i] -= mul(e, unit_vector(n, s), unit_vector(n, j))[r];
        }
        rows.push_back(std::move(row));
      }
    }
  return rows;
}

std::vector<RatVector> oracle_nullspace(std::vector<RatVector> rows, std::size_t cols) {
  std::vector<std::size_t> pivot_col;
  std::size_t next = 0;
  for (std::size_t col = 0; col < cols && next < rows.size(); ++col) {
    std::size_t pivot = rows.size();
    for (std::size_t r = next; r < rows.size(); ++r)
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot == rows.size()) continue;
    std::swap(rows[next], rows[pivot]);
    for (std::size_t r = next + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      const Rat a = rows[next][col], b = rows[r][col];
      for (std::size_t c = col; c < cols; ++c) rows[r][c] = rows[r][c] * a - rows[next][c] * b;
    }
    pivot_col.push_back(col);
    ++next;
  }
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : pivot_col) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVector x(cols, Rat(0));
    x[f] = 1;
    for (std::size_t k = pivot_col.size(); k-- > 0;) {
      Rat acc(0);
      for (std::size_t c = pivot_col[k] + 1; c < cols; ++c) acc += rows[k][c] * x[c];
      x[pivot_col[k]] = -acc / rows[k][pivot_col[k]];
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

// ---------------------------------------------------------------------------

Outcome criterion_ann1_law() {
  Outcome out;
  SmallRatSampler sampler(g_seed);
  for (std::size_t n = 3; n <= 7; ++n) {
    std::vector<std::vector<Rat>> tuples;
    tuples.emplace_back(n - 1, Rat(1));
    std::vector<Rat> ramp;
    for (std::size_t i = 0; i + 1 < n; ++i) ramp.emplace_back(static_cast<long>(i + 1));
    tuples.push_back(std::move(ramp));
    std::vector<Rat> sampled;
    for (std::size_t i = 0; i + 1 < n; ++i) sampled.push_back(sampler.next_nonzero(3));
    tuples.push_back(std::move(sampled));

    for (const auto& alphas : tuples) {
      std::ostringstream tag;
      tag << "n=" << n << " alphas=" << to_string(alphas);
      const EvolutionAlgebra e = catalog::associative_ann1(n, alphas);
      const Subspace d = derivation_space(e);
      const Subspace dprime = derived_subalgebra(e, derivation_basis(e));
      const Subspace inner = inner_derivations(e);
      const Ann1Basis expect = expected_basis_ann1(n, alphas);
      out.require(d.dim() == n * (n - 1) / 2 + 1,
                  tag.str() + ": dim D = " + std::to_string(d.dim()));
      if (dprime.dim() != n * (n - 1) / 2) {
        out.fail(tag.str() + ": dim D' = " + std::to_string(dprime.dim()) + ", required " +
                 std::to_string(n * (n - 1) / 2) +
                 " by the stated n(n-1)/2 law; at n=3 the skew part is a single element, its "
                 "self-bracket vanishes, and the bracket table closes on the 2-dimensional "
                 "last-row part (recorded as a disputed ledger entry)");
      }
      out.require(inner.dim() == n - 1, tag.str() + ": dim In = " + std::to_string(inner.dim()));
      const Subspace hlg =
          expect.h.sum(expect.l).sum(Subspace::span({expect.g.flat()}, n * n));
      out.require(d == hlg, tag.str() + ": D does not equal span(H + L + Kg)");
    }
  }
  return out;
}

Outcome criterion_ann2_associative_tables() {
  Outcome out;
  const auto check = [&](const std::string& name, const std::vector<Rat>& params, std::size_t d,
                         std::size_t dp, std::size_t in) {
    const EvolutionAlgebra e = catalog::build(name, params);
    const Subspace space = derivation_space(e);
    out.require(space.dim() == d, name + ": dim D = " + std::to_string(space.dim()));
    const std::size_t dp_dim = derived_subalgebra(e, derivation_basis(e)).dim();
    out.require(dp_dim == dp, name + ": dim D' = " + std::to_string(dp_dim));
    const std::size_t in_dim = inner_derivations(e).dim();
    out.require(in_dim == in, name + ": dim In = " + std::to_string(in_dim));
  };
  check("N_{5,9}", {Rat(1), Rat(1)}, 7, 6, 3);
  check("N_{6,17}", {Rat(1), Rat(1), Rat(1)}, 10, 8, 4);
  check("N_{6,18}", {Rat(1), Rat(1), Rat(1), Rat(2)}, 9, 8, 4);
  return out;
}

Outcome criterion_nonassociative_ann1_tables() {
  Outcome out;
  struct Row {
    const char* name;
    std::size_t d, dp, in;
  };
  const Row rows[] = {
      {"N_{4,6}", 4, 2, 2},  {"N_{5,10}", 6, 4, 3}, {"N_{5,11}", 6, 3, 3},
      {"N_{5,12}", 4, 3, 3}, {"N_{6,19}", 9, 6, 4}, {"N_{6,20}", 8, 5, 4},
      {"N_{6,21}", 6, 5, 4}, {"N_{6,22}", 9, 7, 4}, {"N_{6,23}", 5, 4, 4},
      {"N_{6,24}", 6, 4, 4},
  };
  for (const Row& row : rows) {
    const auto params = catalog::default_param_samples(row.name, g_seed)[0];
    const EvolutionAlgebra e = catalog::build(row.name, params);
    const std::size_t d = derivation_space(e).dim();
    out.require(d == row.d, std::string(row.name) + ": dim D = " + std::to_string(d));
    const std::size_t dp = derived_subalgebra(e, derivation_basis(e)).dim();
    out.require(dp == row.dp, std::string(row.name) + ": dim D' = " + std::to_string(dp));
    const std::size_t in = inner_derivations(e).dim();
    out.require(in == row.in, std::string(row.name) + ": dim In = " + std::to_string(in));
  }
  return out;
}

Outcome criterion_ann2_nonassociative_tables() {
  Outcome out;
  const EvolutionAlgebra n625 = catalog::build("N_{6,25}", {Rat(1)});
  out.require(derivation_space(n625).dim() == 8, "N_{6,25}: dim D");
  out.require(derived_subalgebra(n625, derivation_basis(n625)).dim() == 6, "N_{6,25}: dim D'");
  out.require(inner_derivations(n625).dim() == 3, "N_{6,25}: dim In");

  const EvolutionAlgebra n626 = catalog::build("N_{6,26}");
  out.require(derivation_space(n626).dim() == 7, "N_{6,26}: dim D");
  out.require(derived_subalgebra(n626, derivation_basis(n626)).dim() == 6, "N_{6,26}: dim D'");

  // The recorded In(N_{6,26}) claims disagree (3 vs 2); acceptance asks for a
  // stable exact computation and a report that flags the conflict.
  std::vector<Subspace> runs;
  for (int run = 0; run < 3; ++run) runs.push_back(inner_derivations(catalog::build("N_{6,26}")));
  out.require(runs[0] == runs[1] && runs[1] == runs[2],
              "N_{6,26}: inner-derivation computation is not stable across reruns");
  const catalog::ConformanceReport report = catalog::verify("N_{6,26}", {});
  bool flagged = false;
  for (const auto& c : report.checks)
    if (c.field == "dim In" && c.disputed) flagged = true;
  out.require(flagged, "N_{6,26}: report does not flag the recorded disagreement");
  std::ostringstream note;
  note << "In(N_{6,26}) computed exactly: dim " << runs[0].dim()
       << " (recorded claims: 3 and 2; the computation sides with 3)";
  out.notes.push_back(note.str());
  return out;
}

Outcome criterion_shape_conformance() {
  Outcome out;
  {  // N_{4,6}: relations d31 = 0, d23 = 2 d11 - d22, d43 = -d42.
    const EvolutionAlgebra e = catalog::build("N_{4,6}");
    const Subspace d = derivation_space(e);
    out.require(d.pivots() == std::vector<std::size_t>{0, 5, 12, 13},
                "N_{4,6}: free positions are not {d11, d22, d41, d42}");
    for (const auto& m : derivation_basis(e)) {
      out.require(m.at(2, 0) == 0, "N_{4,6}: d31 != 0");
      out.require(m.at(1, 2) == 2 * m.at(0, 0) - m.at(1, 1), "N_{4,6}: d23 != 2 d11 - d22");
      out.require(m.at(3, 2) == -m.at(3, 1), "N_{4,6}: d43 != -d42");
    }
    RatMatrix m11(4, 4), m22(4, 4), m41(4, 4), m42(4, 4);
    m11.at(0, 0) = 1;
    m11.at(2, 1) = 2;
    m11.at(1, 2) = 2;
    m22.at(1, 1) = 1;
    m22.at(2, 1) = -1;
    m22.at(1, 2) = -1;
    m22.at(2, 2) = 1;
    m22.at(3, 3) = 2;
    m41.at(3, 0) = 1;
    m42.at(3, 1) = 1;
    m42.at(3, 2) = -1;
    const Subspace table =
        Subspace::span({m11.flat(), m22.flat(), m41.flat(), m42.flat()}, 16);
    out.require(d == table, "N_{4,6}: computed space differs from the tabulated relations");
  }

  {  // N_{5,9}: d(e_i) = d11 e_i + d4i e4 + d5i e5, d(e4) = 2 d11 e4, d(e5) = 2 d11 e5.
    for (const auto& params :
         {std::vector<Rat>{Rat(1), Rat(1)}, std::vector<Rat>{rat(2), rat(-3, 2)}}) {
      const EvolutionAlgebra e = catalog::build("N_{5,9}", params);
      const Subspace d = derivation_space(e);
      out.require(d.pivots() == std::vector<std::size_t>{0, 15, 16, 17, 20, 21, 22},
                  "N_{5,9}: free positions are not {d11, d4i, d5i}");
      std::vector<RatVector> gens;
      RatMatrix diag(5, 5);
      diag.at(0, 0) = 1;
      diag.at(1, 1) = 1;
      diag.at(2, 2) = 1;
      diag.at(3, 3) = 2;
      diag.at(4, 4) = 2;
      gens.push_back(diag.flat());
      for (std::size_t r : {3, 4})
        for (std::size_t c : {0, 1, 2}) {
          RatMatrix m(5, 5);
          m.at(r, c) = 1;
          gens.push_back(m.flat());
        }
      out.require(d == Subspace::span(gens, 25),
                  "N_{5,9}: computed space differs from the tabulated relations");
    }
  }

  {  // N_{6,25}: tabulated relations with free d11, d22, d5i, d6i.
    const EvolutionAlgebra e = catalog::build("N_{6,25}", {Rat(1)});
    const Subspace d = derivation_space(e);
    out.require(d.pivots() == std::vector<std::size_t>{0, 7, 24, 25, 27, 30, 31, 33},
                "N_{6,25}: free positions differ from the tabulated parameters");
    RatMatrix m11(6, 6), m22(6, 6);
    m11.at(0, 0) = 1;
    m11.at(2, 1) = 2;
    m11.at(1, 2) = 2;
    m11.at(3, 3) = 1;
    m11.at(5, 5) = 2;
    m22.at(1, 1) = 1;
    m22.at(2, 1) = -1;
    m22.at(1, 2) = -1;
    m22.at(2, 2) = 1;
    m22.at(4, 4) = 2;
    std::vector<RatVector> gens{m11.flat(), m22.flat()};
    for (std::size_t r : {4, 5}) {
      RatMatrix a(6, 6), b(6, 6), c(6, 6);
      a.at(r, 0) = 1;
      b.at(r, 1) = 1;
      b.at(r, 2) = -1;
      c.at(r, 3) = 1;
      gens.push_back(a.flat());
      gens.push_back(b.flat());
      gens.push_back(c.flat());
    }
    out.require(d == Subspace::span(gens, 36),
                "N_{6,25}: computed space differs from the tabulated relations");
  }
  return out;
}

Outcome criterion_direct_sums() {
  Outcome out;
  SmallRatSampler sampler(g_seed + 1);
  struct Sum {
    const char* a;
    const char* b;
    std::size_t dim_d;
  };
  for (const Sum& sum : {Sum{"N_{2,2}", "N_{1,1}", 5}, Sum{"N_{2,2}", "N_{2,2}", 6}}) {
    const EvolutionAlgebra i1 = catalog::build(sum.a);
    const EvolutionAlgebra i2 = catalog::build(sum.b);
    const EvolutionAlgebra e = direct_sum(i1, i2);
    const Subspace direct = derivation_space(e);
    const Subspace assembled = derivation_space_of_sum(i1, i2);
    std::ostringstream tag;
    tag << sum.a << " + " << sum.b;
    out.require(direct.dim() == sum.dim_d,
                tag.str() + ": dim D = " + std::to_string(direct.dim()));
    out.require(direct == assembled, tag.str() + ": assembled space differs from the direct one");

    Split split;
    for (std::size_t i = 0; i < i1.dim(); ++i) split.first.push_back(i);
    for (std::size_t i = 0; i < i2.dim(); ++i) split.second.push_back(i1.dim() + i);
    const auto basis = derivation_basis(e);
    for (int round = 0; round < 30; ++round) {
      DerivationMatrix d(e.dim(), e.dim()), dp(e.dim(), e.dim());
      for (const auto& b : basis) {
        d = d + b.scaled(sampler.next());
        dp = dp + b.scaled(sampler.next());
      }
      const Quadruple q = disassemble(d, split), qp = disassemble(dp, split);
      const bool iso = assemble(quadruple_bracket(q, qp), split) == bracket(d, dp);
      out.require(iso, tag.str() + ": quadruple bracket disagrees with the matrix bracket");
      if (!iso) break;
    }
  }
  return out;
}

Outcome criterion_wedderburn_reduction() {
  Outcome out;
  RatMatrix s(3, 3);
  s.at(0, 0) = 1;  // e1 idempotent
  s.at(1, 2) = 1;  // N_{2,2} block on e2, e3
  const EvolutionAlgebra e(std::move(s));
  const auto basis = derivation_basis(e);
  for (const auto& d : basis)
    for (std::size_t r = 0; r < 3; ++r)
      out.require(d.at(r, 0) == 0, "a derivation does not kill the idempotent");
  const std::size_t dim_n22 = derivation_space(catalog::build("N_{2,2}")).dim();
  out.require(basis.size() == 2 && dim_n22 == 2,
              "dim D(E) = " + std::to_string(basis.size()) + ", dim D(N_{2,2}) = " +
                  std::to_string(dim_n22));
  out.require(derivations_vanish_on_semisimple(e), "vanishing-on-semisimple check failed");
  return out;
}

Outcome criterion_adn() {
  Outcome out;
  const EvolutionAlgebra n22 = catalog::build("N_{2,2}");
  const auto witness = adn_search(n22, 500, g_seed);
  out.require(witness.has_value(), "N_{2,2}: no nilpotent derivation of full index found");
  if (witness) out.require(adn_witness_check(n22, *witness), "N_{2,2}: witness check failed");

  for (const auto& fam : catalog::families()) {
    if (fam.decomposable_example || fam.dim < 3) continue;
    const EvolutionAlgebra e =
        catalog::build(fam.name, catalog::default_param_samples(fam.name, g_seed)[0]);
    const auto found = adn_search(e, 500, g_seed);
    out.require(!found.has_value(),
                fam.name + ": unexpected full-index nilpotent derivation found");
  }
  return out;
}

Outcome criterion_property_suites() {
  Outcome out;
  for (const auto& fam : catalog::families()) {
    const EvolutionAlgebra e =
        catalog::build(fam.name, catalog::default_param_samples(fam.name, g_seed)[0]);
    const Subspace d = derivation_space(e);
    const auto basis = derivation_basis(e);
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i + 1; j < basis.size(); ++j)
        out.require(d.contains(bracket(basis[i], basis[j]).flat()),
                    fam.name + ": bracket escapes D(E)");
    const Subspace inner = inner_derivations(e);
    const auto in_basis = subspace_matrices(inner, e.dim(), e.dim());
    for (const auto& a : basis)
      for (const auto& b : in_basis)
        out.require(inner.contains(bracket(a, b).flat()),
                    fam.name + ": [D, In] escapes In");
    try {
      lie_structure(e, basis);  // verifies antisymmetry and Jacobi exactly
    } catch (const std::exception& ex) {
      out.fail(fam.name + ": " + ex.what());
    }
  }
  return out;
}

Outcome criterion_oracle_equivalence() {
  Outcome out;
  std::vector<std::pair<std::string, EvolutionAlgebra>> algebras;
  for (const auto& fam : catalog::families()) {
    if (fam.dim > 4) continue;
    for (const auto& params : catalog::default_param_samples(fam.name, g_seed))
      algebras.emplace_back(fam.name, catalog::build(fam.name, params));
  }
  for (std::size_t n = 1; n <= 4; ++n)
    algebras.emplace_back("zero dim " + std::to_string(n), zero_algebra(n));
  {
    RatMatrix s(3, 3);
    s.at(0, 0) = 1;
    s.at(1, 2) = 1;
    algebras.emplace_back("idempotent + N_{2,2}", EvolutionAlgebra(std::move(s)));
  }
  {
    RatMatrix s(2, 2);
    s.at(0, 1) = 1;
    s.at(1, 0) = 1;
    algebras.emplace_back("swap squares", EvolutionAlgebra(std::move(s)));
  }
  SmallRatSampler sampler(g_seed + 2);
  for (std::size_t n = 3; n <= 4; ++n) {
    RatMatrix s(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) s.at(r, c) = sampler.next();
    algebras.emplace_back("random dense dim " + std::to_string(n),
                          EvolutionAlgebra(std::move(s)));
  }

  for (const auto& [name, e] : algebras) {
    const Subspace fast = derivation_space(e);
    const auto slow = oracle_nullspace(oracle_leibniz_rows(e), e.dim() * e.dim());
    out.require(fast.dim() == slow.size(),
                name + ": oracle dim " + std::to_string(slow.size()) + " vs " +
                    std::to_string(fast.dim()));
    for (const auto& v : slow)
      out.require(fast.contains(v), name + ": oracle solution missing from derivation_space");
  }
  return out;
}

}  // namespace

int main() {
  if (const char* env = std::getenv("EVOALG_SEED")) g_seed = std::strtoull(env, nullptr, 10);

  struct Criterion {
    int number;
    std::string description;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "associative ann-1 law for n = 3..7 (dims and explicit basis)", criterion_ann1_law},
      {2, "associative ann-2 dimensions (N_{5,9}, N_{6,17}, N_{6,18})",
       criterion_ann2_associative_tables},
      {3, "non-associative ann-1 dimensions (ten families)",
       criterion_nonassociative_ann1_tables},
      {4, "ann-2 non-associative dimensions and the In(N_{6,26}) conflict",
       criterion_ann2_nonassociative_tables},
      {5, "derivation-space shape conformance (N_{4,6}, N_{5,9}, N_{6,25})",
       criterion_shape_conformance},
      {6, "direct sums: block assembly, dims 5 and 6, bracket isomorphism",
       criterion_direct_sums},
      {7, "derivations vanish on the semisimple part, dim D(E) = dim D(N)",
       criterion_wedderburn_reduction},
      {8, "full-index nilpotent derivations: witness on N_{2,2}, none elsewhere", criterion_adn},
      {9, "bracket closure, [D, In] in In, Jacobi on every family",
       criterion_property_suites},
      {10, "independent brute-force oracle agrees on every algebra of dim <= 4",
       criterion_oracle_equivalence},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    const Outcome outcome = criterion.run();
    std::cout << (outcome.pass ? "PASS" : "FAIL") << " criterion " << criterion.number << ": "
              << criterion.description << "\n";
    for (const auto& note : outcome.notes) std::cout << "      " << note << "\n";
    failures += outcome.pass ? 0 : 1;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
  return failures;
}
