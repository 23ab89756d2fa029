#include <evoalg/cli.hpp>

#include <evoalg/algebra.hpp>
#include <evoalg/algebra_io.hpp>
#include <evoalg/catalog.hpp>
#include <evoalg/decomposition.hpp>
#include <evoalg/derivations.hpp>

#include <json.hpp>

#include <iostream>
#include <sstream>

namespace evoalg::cli {

namespace {

using nlohmann::json;

AlgebraFile load(const std::string& path, std::ostream& err) {
  AlgebraFile file = load_algebra_file(path);
  for (const auto& w : file.warnings) err << "warning: " << w << "\n";
  return file;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

std::string nil_text(const NilVerdict& v) {
  switch (v.kind) {
    case NilVerdict::Kind::nil:
      return "nil, index " + std::to_string(v.index);
    case NilVerdict::Kind::not_nil:
      return "not nil (witness " + to_string(v.witness) + ")";
    default:
      return "inconclusive";
  }
}

std::string component_text(const std::vector<std::vector<std::size_t>>& comps) {
  std::ostringstream out;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    out << (c ? " " : "") << "{";
    for (std::size_t i = 0; i < comps[c].size(); ++i)
      out << (i ? "," : "") << "e" << (comps[c][i] + 1);
    out << "}";
  }
  return out.str();
}

json matrix_json(const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

void print_report(const catalog::ConformanceReport& report, std::ostream& out) {
  out << report.name;
  if (!report.params.empty()) {
    out << "(";
    for (std::size_t i = 0; i < report.params.size(); ++i)
      out << (i ? ", " : "") << to_string(report.params[i]);
    out << ")";
  }
  out << ": " << (report.ok() ? "PASS" : "FAIL") << "\n";
  for (const auto& c : report.checks) {
    if (c.disputed)
      out << "  " << c.field << ": computed " << c.computed << ", recorded claims disagree ("
          << c.expected << ") -- reporting the computed value\n";
    else if (!c.match)
      out << "  " << c.field << ": expected " << c.expected << ", computed " << c.computed
          << "  <-- mismatch\n";
    else
      out << "  " << c.field << ": " << c.computed << "\n";
  }
}

json report_json(const catalog::ConformanceReport& report) {
  json doc;
  doc["name"] = report.name;
  json params = json::array();
  for (const auto& p : report.params) params.push_back(to_string(p));
  doc["params"] = std::move(params);
  doc["pass"] = report.ok();
  json checks = json::array();
  for (const auto& c : report.checks) {
    json entry;
    entry["field"] = c.field;
    entry["expected"] = c.expected;
    entry["computed"] = c.computed;
    entry["match"] = c.match;
    entry["disputed"] = c.disputed;
    checks.push_back(std::move(entry));
  }
  doc["checks"] = std::move(checks);
  return doc;
}

}  // namespace

int cmd_info(const std::string& path, std::ostream& out, std::ostream& err) {
  try {
    AlgebraFile file = load(path, err);
    const EvolutionAlgebra& e = file.algebra;
    out << "dim: " << e.dim() << "\n";
    Subspace ann = annihilator(e);
    out << "annihilator: dim " << ann.dim();
    if (ann.dim() > 0) {
      out << ", basis {";
      for (std::size_t r = 0; r < ann.dim(); ++r)
        out << (r ? ", " : " ") << to_string(ann.basis_vector(r));
      out << " }";
    }
    out << "\n";
    out << "associative: " << yesno(is_associative(e)) << "\n";
    out << "power-associative: " << yesno(is_power_associative(e)) << "\n";
    out << "nil: " << nil_text(nil_check(e)) << "\n";
    const auto comps = support_components(e);
    out << "components: " << comps.size() << " " << component_text(comps)
        << (comps.size() == 1 ? " (indecomposable)" : "") << "\n";
    return kOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

int cmd_derivations(const std::string& path, bool as_json, std::ostream& out, std::ostream& err) {
  try {
    AlgebraFile file = load(path, err);
    const EvolutionAlgebra& e = file.algebra;
    const Subspace d = derivation_space(e);
    const auto basis = subspace_matrices(d, e.dim(), e.dim());
    const Subspace dprime = derived_subalgebra(e, basis);
    const LieStructure lie = lie_structure(e, basis);
    if (as_json) {
      json doc;
      doc["algebra"] = json::parse(serialize_algebra(e, file.name));
      doc["dim_derivations"] = d.dim();
      json js_basis = json::array();
      for (const auto& b : basis) js_basis.push_back(matrix_json(b));
      doc["basis"] = std::move(js_basis);
      doc["dim_derived"] = dprime.dim();
      json brackets = json::array();
      for (std::size_t i = 0; i < lie.dim; ++i)
        for (std::size_t j = i + 1; j < lie.dim; ++j)
          for (std::size_t k = 0; k < lie.dim; ++k)
            if (lie.c(i, j, k) != 0)
              brackets.push_back({{"i", i + 1},
                                  {"j", j + 1},
                                  {"k", k + 1},
                                  {"c", to_string(lie.c(i, j, k))}});
      doc["structure_constants"] = std::move(brackets);
      out << doc.dump(2) << "\n";
      return kOk;
    }
    out << "dim D(E): " << d.dim() << "\n";
    for (std::size_t i = 0; i < basis.size(); ++i)
      out << "basis " << (i + 1) << ":\n" << basis[i].str();
    out << "dim D(E)': " << dprime.dim() << "\n";
    if (lie.abelian()) {
      out << "bracket: abelian\n";
    } else {
      out << "bracket structure constants ([b_i, b_j] = sum_k c b_k):\n";
      for (std::size_t i = 0; i < lie.dim; ++i)
        for (std::size_t j = i + 1; j < lie.dim; ++j)
          for (std::size_t k = 0; k < lie.dim; ++k)
            if (lie.c(i, j, k) != 0)
              out << "  c[" << (i + 1) << "," << (j + 1) << "," << (k + 1)
                  << "] = " << to_string(lie.c(i, j, k)) << "\n";
    }
    return kOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

int cmd_inner(const std::string& path, std::ostream& out, std::ostream& err) {
  try {
    AlgebraFile file = load(path, err);
    const EvolutionAlgebra& e = file.algebra;
    const Subspace inner = inner_derivations(e);
    out << "dim In(E): " << inner.dim() << "\n";
    const auto basis = subspace_matrices(inner, e.dim(), e.dim());
    for (std::size_t i = 0; i < basis.size(); ++i)
      out << "basis " << (i + 1) << ":\n" << basis[i].str();
    // The ideal property [D(E), In(E)] ⊆ In(E), checked exactly.
    bool ideal = true;
    for (const auto& d : subspace_matrices(derivation_space(e), e.dim(), e.dim()))
      for (const auto& in : basis)
        if (!inner.contains(bracket(d, in).flat())) ideal = false;
    out << "ideal property [D(E), In(E)] in In(E): " << (ideal ? "verified" : "VIOLATED") << "\n";
    return ideal ? kOk : kMismatch;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

int cmd_decompose(const std::string& path, std::ostream& out, std::ostream& err) {
  try {
    AlgebraFile file = load(path, err);
    const EvolutionAlgebra& e = file.algebra;
    const auto parts = decompose(e);
    if (parts.size() == 1) {
      out << "indecomposable in the given natural basis (single component)\n";
      return kOk;
    }
    out << "components: " << parts.size() << "\n";
    for (std::size_t c = 0; c < parts.size(); ++c) {
      out << "component " << (c + 1) << ": indices {";
      for (std::size_t i = 0; i < parts[c].indices.size(); ++i)
        out << (i ? "," : "") << "e" << (parts[c].indices[i] + 1);
      out << "}, structure:\n" << parts[c].algebra.structure().str();
    }
    // Two-block view: first component against the rest.
    Split split;
    split.first = parts[0].indices;
    for (std::size_t c = 1; c < parts.size(); ++c)
      split.second.insert(split.second.end(), parts[c].indices.begin(), parts[c].indices.end());
    EvolutionAlgebra i1 = parts[0].algebra;
    RatMatrix rest(split.second.size(), split.second.size());
    for (std::size_t r = 0; r < split.second.size(); ++r)
      for (std::size_t cc = 0; cc < split.second.size(); ++cc)
        rest.at(r, cc) = e.structure().at(split.second[r], split.second[cc]);
    EvolutionAlgebra i2(std::move(rest));
    const std::size_t d1 = derivation_space(i1).dim();
    const std::size_t d2 = derivation_space(i2).dim();
    const std::size_t h12 = hom0(i1, i2).dim();
    const std::size_t h21 = hom0(i2, i1).dim();
    const std::size_t total = derivation_space(e).dim();
    out << "dim D(E) = " << total << " = " << d1 << " + " << d2 << " + " << h12 << " + " << h21
        << " (D(I1) + D(I2) + Hom0(I1,I2) + Hom0(I2,I1))\n";
    if (d1 + d2 + h12 + h21 != total) {
      out << "quadruple dimension identity VIOLATED\n";
      return kMismatch;
    }
    return kOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

int cmd_catalog_list(std::ostream& out) {
  for (const auto& f : catalog::families()) {
    out << f.name << "  dim " << f.dim;
    if (!f.param_names.empty()) {
      out << "  params(";
      for (std::size_t i = 0; i < f.param_names.size(); ++i)
        out << (i ? ", " : "") << f.param_names[i];
      out << ")";
    }
    if (!f.constraints.empty()) {
      out << "  with ";
      for (std::size_t i = 0; i < f.constraints.size(); ++i)
        out << (i ? ", " : "") << f.constraints[i].text;
    }
    if (f.decomposable_example) out << "  [decomposable]";
    out << "\n";
  }
  return kOk;
}

int cmd_catalog_verify(const std::vector<std::string>& args, bool as_json, std::uint64_t seed,
                       std::ostream& out, std::ostream& err) {
  try {
    std::vector<std::pair<std::string, std::vector<Rat>>> jobs;
    if (args.empty()) {
      for (const auto& f : catalog::families())
        for (const auto& params : catalog::default_param_samples(f.name, seed))
          jobs.emplace_back(f.name, params);
    } else {
      std::vector<Rat> params;
      for (std::size_t i = 1; i < args.size(); ++i) params.push_back(parse_rat(args[i]));
      jobs.emplace_back(args[0], std::move(params));
    }

    std::vector<catalog::ConformanceReport> reports(jobs.size());
    std::vector<std::string> failures(jobs.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(jobs.size()); ++i) {
      try {
        reports[i] = catalog::verify(jobs[i].first, jobs[i].second);
      } catch (const std::exception& e) {
        failures[i] = e.what();
      }
    }
    for (const auto& f : failures)
      if (!f.empty()) throw std::invalid_argument(f);

    bool all_ok = true;
    if (as_json) {
      json doc = json::array();
      for (const auto& r : reports) {
        doc.push_back(report_json(r));
        all_ok = all_ok && r.ok();
      }
      out << doc.dump(2) << "\n";
    } else {
      std::size_t passed = 0;
      for (const auto& r : reports) {
        print_report(r, out);
        all_ok = all_ok && r.ok();
        passed += r.ok();
      }
      out << passed << "/" << reports.size() << " verifications passed\n";
    }
    return all_ok ? kOk : kMismatch;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace evoalg::cli
