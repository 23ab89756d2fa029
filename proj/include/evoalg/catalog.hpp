#pragma once

#include <evoalg/algebra.hpp>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace evoalg::catalog {

/// Nonvanishing condition on the parameters of a family, exactly as the
/// family is defined (each listed value must be nonzero).
struct Constraint {
  std::string text;
  std::function<Rat(const std::vector<Rat>&)> value;
};

struct FamilySpec {
  std::string name;
  std::size_t dim = 0;
  std::vector<std::string> param_names;
  std::vector<Constraint> constraints;
  std::function<EvolutionAlgebra(const std::vector<Rat>&)> builder;
  bool decomposable_example = false;
};

const std::vector<FamilySpec>& families();
const FamilySpec& family(const std::string& name);  // throws std::invalid_argument

/// Builds the named algebra after validating every constraint; a violation
/// throws std::invalid_argument naming the failed condition.
EvolutionAlgebra build(const std::string& name, const std::vector<Rat>& params = {});

/// Expected dimension entry. A disputed entry carries both recorded,
/// mutually inconsistent claims and is never asserted by verify(); the
/// computed value is reported next to them instead.
struct DimClaim {
  bool disputed = false;
  std::size_t value = 0;                 // meaningful when !disputed
  std::size_t claim_a = 0, claim_b = 0;  // the two conflicting records
};

struct ExpectedProfile {
  std::size_t ann_dim = 0;
  bool associative = false;
  bool power_associative = true;
  std::size_t components = 1;
  std::size_t dim_d = 0;
  DimClaim dim_dprime;
  DimClaim dim_in;
};

ExpectedProfile expected_profile(const std::string& name);

/// Deterministic parameter tuples: the all-ones tuple when admissible,
/// otherwise the lexicographically smallest tuple over {1,2,3}, plus
/// n_random seeded rational tuples that meet every constraint.
std::vector<std::vector<Rat>> default_param_samples(const std::string& name, std::uint64_t seed,
                                                    std::size_t n_random = 2);

struct FieldCheck {
  std::string field;
  std::string expected, computed;
  bool match = false;
  bool disputed = false;
};

struct ConformanceReport {
  std::string name;
  std::vector<Rat> params;
  std::vector<FieldCheck> checks;
  bool ok() const;  // every non-disputed field matches
};

/// Computes annihilator dimension, associativity, power associativity,
/// component count and the three derivation dimensions, then compares them
/// with the expected profile.
ConformanceReport verify(const std::string& name, const std::vector<Rat>& params);

/// The associative algebra with e_i^2 = alphas[i] e_n for i < n and
/// e_n^2 = 0; every alpha must be nonzero.
EvolutionAlgebra associative_ann1(std::size_t n, const std::vector<Rat>& alphas);

}  // namespace evoalg::catalog
