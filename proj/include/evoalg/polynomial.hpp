#pragma once

#include <evoalg/rational.hpp>

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace evoalg {

/// Sparse multivariate polynomial over the rationals. Terms map an
/// exponent vector (one entry per variable) to a nonzero coefficient;
/// zero coefficients are never stored.
class Polynomial {
 public:
  using Monomial = std::vector<unsigned>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}
  static Polynomial constant(std::size_t nvars, const Rat& c);
  static Polynomial variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rat>& terms() const { return terms_; }

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(const Rat& c) const;
  bool operator==(const Polynomial& other) const = default;

  /// Exact evaluation at a rational point.
  Rat eval(const std::vector<Rat>& point) const;

  std::string str() const;

 private:
  void add_term(const Monomial& m, const Rat& c);
  std::size_t nvars_;
  std::map<Monomial, Rat> terms_;
};

}  // namespace evoalg
