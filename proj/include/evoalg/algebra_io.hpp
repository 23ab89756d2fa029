#pragma once

#include <evoalg/algebra.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace evoalg {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// On-disk algebra document: a JSON object with "dim" and "squares" (row i
/// holds the coordinates of e_i^2 as exact rational strings "p" or "p/q";
/// plain integers are accepted too). Optional "name" and "params"; unknown
/// fields are collected as warnings.
struct AlgebraFile {
  EvolutionAlgebra algebra;
  std::optional<std::string> name;
  std::map<std::string, Rat> params;
  std::vector<std::string> warnings;
};

AlgebraFile parse_algebra_text(const std::string& text);
AlgebraFile load_algebra_file(const std::string& path);

std::string serialize_algebra(const EvolutionAlgebra& e,
                              const std::optional<std::string>& name = std::nullopt);

}  // namespace evoalg
