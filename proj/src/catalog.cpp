#include <evoalg/catalog.hpp>

#include <evoalg/decomposition.hpp>
#include <evoalg/derivations.hpp>
#include <evoalg/sampling.hpp>

#include <map>
#include <sstream>
#include <stdexcept>

namespace evoalg::catalog {

namespace {

Constraint nonzero(std::size_t i, const std::string& name) {
  return Constraint{name + " != 0", [i](const std::vector<Rat>& p) { return p[i]; }};
}

Constraint product_nonzero(std::vector<std::size_t> idx, const std::string& text) {
  return Constraint{text, [idx = std::move(idx)](const std::vector<Rat>& p) {
                      Rat v(1);
                      for (std::size_t i : idx) v *= p[i];
                      return v;
                    }};
}

FamilySpec make(std::string name, std::size_t dim, std::vector<std::string> params,
                std::vector<Constraint> constraints,
                std::function<void(RatMatrix&, const std::vector<Rat>&)> fill,
                bool decomposable = false) {
  FamilySpec spec;
  spec.name = std::move(name);
  spec.dim = dim;
  spec.param_names = std::move(params);
  spec.constraints = std::move(constraints);
  spec.builder = [dim, fill = std::move(fill)](const std::vector<Rat>& p) {
    RatMatrix s(dim, dim);
    fill(s, p);
    return EvolutionAlgebra(std::move(s));
  };
  spec.decomposable_example = decomposable;
  return spec;
}

std::vector<FamilySpec> make_families() {
  std::vector<FamilySpec> fams;

  fams.push_back(make("N_{1,1}", 1, {}, {}, [](RatMatrix&, const std::vector<Rat>&) {}));

  fams.push_back(make("N_{2,2}", 2, {}, {},
                      [](RatMatrix& s, const std::vector<Rat>&) { s.at(0, 1) = 1; }));

  fams.push_back(make("N_{3,3}", 3, {"alpha"}, {nonzero(0, "alpha")},
                      [](RatMatrix& s, const std::vector<Rat>& p) {
                        s.at(0, 2) = 1;
                        s.at(1, 2) = p[0];
                      }));

  fams.push_back(make("N_{4,5}", 4, {"alpha", "beta"}, {nonzero(0, "alpha"), nonzero(1, "beta")},
                      [](RatMatrix& s, const std::vector<Rat>& p) {
                        s.at(0, 3) = 1;
                        s.at(1, 3) = p[0];
                        s.at(2, 3) = p[1];
                      }));

  fams.push_back(make("N_{4,6}", 4, {}, {}, [](RatMatrix& s, const std::vector<Rat>&) {
    s.at(0, 1) = 1;
    s.at(0, 2) = 1;
    s.at(1, 3) = 1;
    s.at(2, 3) = -1;
  }));

  fams.push_back(make("N_{5,8}", 5, {"alpha", "beta", "gamma"},
                      {nonzero(0, "alpha"), nonzero(1, "beta"), nonzero(2, "gamma")},
                      [](RatMatrix& s, const std::vector<Rat>& p) {
                        s.at(0, 4) = 1;
                        s.at(1, 4) = p[0];
                        s.at(2, 4) = p[1];
                        s.at(3, 4) = p[2];
                      }));

  fams.push_back(make("N_{5,9}", 5, {"alpha", "beta"}, {nonzero(0, "alpha"), nonzero(1, "beta")},
                      [](RatMatrix& s, const std::vector<Rat>& p) {
                        s.at(0, 3) = 1;
                        s.at(1, 3) = p[0];
                        s.at(1, 4) = p[1];
                        s.at(2, 4) = 1;
                      }));

  fams.push_back(make("N_{5,10}", 5, {"alpha"}, {nonzero(0, "alpha")},
                      [](RatMatrix& s, const std::vector<Rat>& p) {
                        s.at(0, 1) = 1;
                        s.at(0, 2) = 1;
                        s.at(1, 4) = 1;
                        s.at(2, 4) = -1;
                        s.at(3, 4) = p[0];
                      }));

  fams.push_back(make("N_{5,11}", 5, {"alpha"}, {nonzero(0, "alpha")},
                      [](RatMatrix& s, const std::vector<Rat>& p) {
                        s.at(0, 1) = 1;
                        s.at(0, 2) = 1;
                        s.at(1, 4) = 1;
                        s.at(2, 4) = -1;
                        s.at(3, 1) = p[0];
                        s.at(3, 2) = p[0];
                      }));

  fams.push_back(make("N_{5,12}", 5, {"alpha", "beta"}, {nonzero(0, "alpha"), nonzero(1, "beta")},
                      [](RatMatrix& s, const std::vector<Rat>& p) {
                        s.at(0, 1) = 1;
                        s.at(0, 2) = 1;
                        s.at(1, 4) = 1;
                        s.at(2, 4) = -1;
                        s.at(3, 1) = p[0];
                        s.at(3, 2) = p[0];
                        s.at(3, 4) = p[1];
                      }));

  fams.push_back(make("N_{6,16}", 6, {"alpha", "beta", "gamma", "delta"},
                      {nonzero(0, "alpha"), nonzero(1, "beta"), nonzero(2, "gamma"),
                       nonzero(3, "delta")},
                      [](RatMatrix& s, const std::vector<Rat>& p) {
                        s.at(0, 5) = 1;
                        s.at(1, 5) = p[0];
                        s.at(2, 5) = p[1];
                        s.at(3, 5) = p[2];
                        s.at(4, 5) = p[3];
                      }));

  fams.push_back(make("N_{6,17}", 6, {"alpha", "beta", "gamma"},
                      {product_nonzero({0, 1, 2}, "alpha*beta*gamma != 0")},
                      [](RatMatrix& s, const std::vector<Rat>& p) {
                        s.at(0, 4) = 1;
                        s.at(1, 4) = p[0];
                        s.at(1, 5) = p[1];
                        s.at(2, 5) = p[2];
                        s.at(3, 5) = 1;
                      }));

  fams.push_back(make(
      "N_{6,18}", 6, {"alpha", "beta", "gamma", "delta"},
      {product_nonzero({0, 1}, "alpha*beta != 0"), product_nonzero({2, 3}, "gamma*delta != 0"),
       Constraint{"alpha*delta - beta*gamma != 0",
                  [](const std::vector<Rat>& p) { return Rat(p[0] * p[3] - p[1] * p[2]); }}},
      [](RatMatrix& s, const std::vector<Rat>& p) {
        s.at(0, 4) = 1;
        s.at(1, 4) = p[0];
        s.at(1, 5) = p[1];
        s.at(2, 4) = p[2];
        s.at(2, 5) = p[3];
        s.at(3, 5) = 1;
      }));

  fams.push_back(make("N_{6,19}", 6, {"alpha", "beta"}, {nonzero(0, "alpha"), nonzero(1, "beta")},
                      [](RatMatrix& s, const std::vector<Rat>& p) {
                        s.at(0, 1) = 1;
                        s.at(0, 2) = 1;
                        s.at(1, 5) = 1;
                        s.at(2, 5) = -1;
                        s.at(3, 5) = p[0];
                        s.at(4, 5) = p[1];
                      }));

  fams.push_back(make("N_{6,20}", 6, {"alpha", "beta"}, {nonzero(0, "alpha"), nonzero(1, "beta")},
                      [](RatMatrix& s, const std::vector<Rat>& p) {
                        s.at(0, 1) = 1;
                        s.at(0, 2) = 1;
                        s.at(1, 5) = 1;
                        s.at(2, 5) = -1;
                        s.at(3, 1) = p[0];
                        s.at(3, 2) = p[0];
                        s.at(4, 5) = p[1];
                      }));

  fams.push_back(make("N_{6,21}", 6, {"alpha", "beta", "gamma"},
                      {nonzero(0, "alpha"), nonzero(1, "beta"), nonzero(2, "gamma")},
                      [](RatMatrix& s, const std::vector<Rat>& p) {
                        s.at(0, 1) = 1;
                        s.at(0, 2) = 1;
                        s.at(1, 5) = 1;
                        s.at(2, 5) = -1;
                        s.at(3, 1) = p[0];
                        s.at(3, 2) = p[0];
                        s.at(3, 5) = p[1];
                        s.at(4, 5) = p[2];
                      }));

  fams.push_back(make("N_{6,22}", 6, {"alpha", "beta"}, {nonzero(0, "alpha"), nonzero(1, "beta")},
                      [](RatMatrix& s, const std::vector<Rat>& p) {
                        s.at(0, 1) = 1;
                        s.at(0, 2) = 1;
                        s.at(1, 5) = 1;
                        s.at(2, 5) = -1;
                        s.at(3, 1) = p[0];
                        s.at(3, 2) = p[0];
                        s.at(4, 1) = p[1];
                        s.at(4, 2) = p[1];
                      }));

  fams.push_back(make(
      "N_{6,23}", 6, {"alpha", "beta", "gamma", "delta"},
      {Constraint{"alpha*delta - beta*gamma != 0",
                  [](const std::vector<Rat>& p) { return Rat(p[0] * p[3] - p[1] * p[2]); }},
       product_nonzero({0, 2}, "alpha*gamma != 0"), product_nonzero({1, 3}, "beta*delta != 0")},
      [](RatMatrix& s, const std::vector<Rat>& p) {
        s.at(0, 1) = 1;
        s.at(0, 2) = 1;
        s.at(1, 5) = 1;
        s.at(2, 5) = -1;
        s.at(3, 1) = p[0];
        s.at(3, 2) = p[0];
        s.at(3, 5) = p[1];
        s.at(4, 1) = p[2];
        s.at(4, 2) = p[2];
        s.at(4, 5) = p[3];
      }));

  fams.push_back(make("N_{6,24}", 6, {"alpha", "beta", "gamma"},
                      {product_nonzero({0, 1, 2}, "alpha*beta*gamma != 0")},
                      [](RatMatrix& s, const std::vector<Rat>& p) {
                        s.at(0, 1) = 1;
                        s.at(0, 2) = 1;
                        s.at(1, 5) = 1;
                        s.at(2, 5) = -1;
                        s.at(3, 1) = p[0];
                        s.at(3, 2) = p[0];
                        s.at(3, 5) = p[1];
                        s.at(4, 1) = p[2];
                        s.at(4, 2) = p[2];
                      }));

  fams.push_back(make("N_{6,25}", 6, {"alpha"}, {nonzero(0, "alpha")},
                      [](RatMatrix& s, const std::vector<Rat>& p) {
                        s.at(0, 1) = 1;
                        s.at(0, 2) = 1;
                        s.at(1, 4) = 1;
                        s.at(2, 4) = -1;
                        s.at(3, 1) = p[0];
                        s.at(3, 2) = p[0];
                        s.at(3, 5) = 1;
                      }));

  fams.push_back(make("N_{6,26}", 6, {}, {}, [](RatMatrix& s, const std::vector<Rat>&) {
    s.at(0, 1) = 1;
    s.at(0, 2) = 1;
    s.at(0, 3) = 1;
    s.at(1, 4) = 1;
    s.at(2, 5) = 1;
    s.at(3, 4) = -1;
    s.at(3, 5) = -1;
  }));

  // Decomposable companions used to exercise the direct-sum machinery.
  fams.push_back(make("N_{3,2}", 3, {}, {},
                      [](RatMatrix& s, const std::vector<Rat>&) { s.at(0, 1) = 1; },
                      /*decomposable=*/true));

  fams.push_back(make("N_{4,4}", 4, {}, {},
                      [](RatMatrix& s, const std::vector<Rat>&) {
                        s.at(0, 1) = 1;
                        s.at(2, 3) = 1;
                      },
                      /*decomposable=*/true));

  return fams;
}

DimClaim dim_of(std::size_t v) { return DimClaim{false, v, v, v}; }
DimClaim disputed(std::size_t a, std::size_t b) { return DimClaim{true, 0, a, b}; }

std::map<std::string, ExpectedProfile> make_profiles() {
  std::map<std::string, ExpectedProfile> m;
  const auto add = [&](const std::string& name, std::size_t ann, bool assoc, std::size_t comps,
                       std::size_t d, DimClaim dp, DimClaim in) {
    m[name] = ExpectedProfile{ann, assoc, true, comps, d, dp, in};
  };
  add("N_{1,1}", 1, true, 1, 1, dim_of(0), dim_of(0));
  add("N_{2,2}", 1, true, 1, 2, dim_of(1), dim_of(1));
  // The general n(n-1)/2 record for D' reads 3 in dimension 3, but the
  // bracket table it comes with closes on a 2-dimensional span there (the
  // skew part is a single element, so its self-brackets vanish). Both
  // records are kept and the computed value is reported.
  add("N_{3,3}", 1, true, 1, 4, disputed(3, 2), dim_of(2));
  add("N_{4,5}", 1, true, 1, 7, dim_of(6), dim_of(3));
  add("N_{4,6}", 1, false, 1, 4, dim_of(2), dim_of(2));
  add("N_{5,8}", 1, true, 1, 11, dim_of(10), dim_of(4));
  add("N_{5,9}", 2, true, 1, 7, dim_of(6), dim_of(3));
  add("N_{5,10}", 1, false, 1, 6, dim_of(4), dim_of(3));
  add("N_{5,11}", 1, false, 1, 6, dim_of(3), dim_of(3));
  add("N_{5,12}", 1, false, 1, 4, dim_of(3), dim_of(3));
  add("N_{6,16}", 1, true, 1, 16, dim_of(15), dim_of(5));
  add("N_{6,17}", 2, true, 1, 10, dim_of(8), dim_of(4));
  add("N_{6,18}", 2, true, 1, 9, dim_of(8), dim_of(4));
  add("N_{6,19}", 1, false, 1, 9, dim_of(6), dim_of(4));
  add("N_{6,20}", 1, false, 1, 8, dim_of(5), dim_of(4));
  add("N_{6,21}", 1, false, 1, 6, dim_of(5), dim_of(4));
  add("N_{6,22}", 1, false, 1, 9, dim_of(7), dim_of(4));
  add("N_{6,23}", 1, false, 1, 5, dim_of(4), dim_of(4));
  add("N_{6,24}", 1, false, 1, 6, dim_of(4), dim_of(4));
  add("N_{6,25}", 2, false, 1, 8, dim_of(6), dim_of(3));
  add("N_{6,26}", 2, false, 1, 7, dim_of(6), disputed(3, 2));
  add("N_{3,2}", 2, true, 2, 5, dim_of(3), dim_of(1));
  add("N_{4,4}", 2, true, 2, 6, dim_of(4), dim_of(2));
  return m;
}

bool admissible(const FamilySpec& spec, const std::vector<Rat>& params) {
  for (const auto& c : spec.constraints)
    if (c.value(params) == 0) return false;
  return true;
}

}  // namespace

const std::vector<FamilySpec>& families() {
  static const std::vector<FamilySpec> fams = make_families();
  return fams;
}

const FamilySpec& family(const std::string& name) {
  for (const auto& f : families())
    if (f.name == name) return f;
  throw std::invalid_argument("unknown family: " + name);
}

EvolutionAlgebra build(const std::string& name, const std::vector<Rat>& params) {
  const FamilySpec& spec = family(name);
  if (params.size() != spec.param_names.size()) {
    std::ostringstream msg;
    msg << name << " takes " << spec.param_names.size() << " parameter(s), got " << params.size();
    throw std::invalid_argument(msg.str());
  }
  for (const auto& c : spec.constraints)
    if (c.value(params) == 0)
      throw std::invalid_argument(name + ": constraint violated: " + c.text);
  return spec.builder(params);
}

ExpectedProfile expected_profile(const std::string& name) {
  static const auto profiles = make_profiles();
  auto it = profiles.find(name);
  if (it == profiles.end()) throw std::invalid_argument("unknown family: " + name);
  return it->second;
}

std::vector<std::vector<Rat>> default_param_samples(const std::string& name, std::uint64_t seed,
                                                    std::size_t n_random) {
  const FamilySpec& spec = family(name);
  const std::size_t k = spec.param_names.size();
  if (k == 0) return {{}};

  std::vector<std::vector<Rat>> samples;
  std::vector<Rat> ones(k, Rat(1));
  if (admissible(spec, ones)) {
    samples.push_back(std::move(ones));
  } else {
    // Lexicographically smallest tuple over {1,2,3} meeting every constraint.
    std::vector<int> tuple(k, 1);
    for (;;) {
      std::vector<Rat> candidate;
      for (int v : tuple) candidate.emplace_back(v);
      if (admissible(spec, candidate)) {
        samples.push_back(std::move(candidate));
        break;
      }
      std::size_t pos = k;
      while (pos-- > 0) {
        if (tuple[pos] < 3) {
          ++tuple[pos];
          std::fill(tuple.begin() + pos + 1, tuple.end(), 1);
          break;
        }
        if (pos == 0) throw std::logic_error(name + ": no admissible tuple over {1,2,3}");
      }
    }
  }
  SmallRatSampler sampler(seed);
  while (samples.size() < 1 + n_random) {
    std::vector<Rat> candidate;
    for (std::size_t i = 0; i < k; ++i) candidate.push_back(sampler.next_nonzero(3));
    if (admissible(spec, candidate)) samples.push_back(std::move(candidate));
  }
  return samples;
}

bool ConformanceReport::ok() const {
  for (const auto& c : checks)
    if (!c.disputed && !c.match) return false;
  return true;
}

ConformanceReport verify(const std::string& name, const std::vector<Rat>& params) {
  const ExpectedProfile expected = expected_profile(name);
  const EvolutionAlgebra e = build(name, params);

  ConformanceReport report;
  report.name = name;
  report.params = params;
  const auto check_num = [&](const std::string& field, std::size_t exp, std::size_t got) {
    report.checks.push_back(
        {field, std::to_string(exp), std::to_string(got), exp == got, false});
  };
  const auto check_bool = [&](const std::string& field, bool exp, bool got) {
    const auto text = [](bool b) { return std::string(b ? "yes" : "no"); };
    report.checks.push_back({field, text(exp), text(got), exp == got, false});
  };

  check_num("dim ann", expected.ann_dim, annihilator(e).dim());
  check_bool("associative", expected.associative, is_associative(e));
  check_bool("power-associative", expected.power_associative, is_power_associative(e));
  check_num("components", expected.components, support_components(e).size());

  const Subspace d = derivation_space(e);
  check_num("dim D", expected.dim_d, d.dim());
  const auto basis = subspace_matrices(d, e.dim(), e.dim());

  const auto check_claim = [&](const std::string& field, const DimClaim& claim,
                               std::size_t computed) {
    if (claim.disputed) {
      std::ostringstream exp_text;
      exp_text << "disputed (" << claim.claim_a << " vs " << claim.claim_b << ")";
      report.checks.push_back({field, exp_text.str(), std::to_string(computed),
                               computed == claim.claim_a || computed == claim.claim_b, true});
    } else {
      check_num(field, claim.value, computed);
    }
  };
  check_claim("dim D'", expected.dim_dprime, derived_subalgebra(e, basis).dim());
  check_claim("dim In", expected.dim_in, inner_derivations(e).dim());
  return report;
}

EvolutionAlgebra associative_ann1(std::size_t n, const std::vector<Rat>& alphas) {
  if (n < 2) throw std::invalid_argument("needs dim >= 2");
  if (alphas.size() != n - 1) throw std::invalid_argument("needs n-1 alphas");
  RatMatrix s(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (alphas[i] == 0) throw std::invalid_argument("alphas must be nonzero");
    s.at(i, n - 1) = alphas[i];
  }
  return EvolutionAlgebra(std::move(s));
}

}  // namespace evoalg::catalog
