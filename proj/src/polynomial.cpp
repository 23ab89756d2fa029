#include <evoalg/polynomial.hpp>

#include <sstream>
#include <stdexcept>

namespace evoalg {

Polynomial Polynomial::constant(std::size_t nvars, const Rat& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw std::invalid_argument("variable index out of range");
  Polynomial p(nvars);
  Monomial m(nvars, 0);
  m[i] = 1;
  p.add_term(m, Rat(1));
  return p;
}

void Polynomial::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial out = *this;
  for (const auto& [m, c] : other.terms_) out.add_term(m, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  Polynomial out = *this;
  for (const auto& [m, c] : other.terms_) out.add_term(m, -c);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  Polynomial out(nvars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : other.terms_) {
      Monomial m(nvars_);
      for (std::size_t i = 0; i < nvars_; ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, ca * cb);
    }
  return out;
}

Polynomial Polynomial::operator*(const Rat& c) const {
  Polynomial out(nvars_);
  if (c == 0) return out;
  for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
  return out;
}

Rat Polynomial::eval(const std::vector<Rat>& point) const {
  if (point.size() != nvars_) throw std::invalid_argument("evaluation point has wrong length");
  Rat total(0);
  for (const auto& [m, c] : terms_) {
    Rat term = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (unsigned e = 0; e < m[i]; ++e) term *= point[i];
    total += term;
  }
  return total;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << to_string(c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      out << "*x" << (i + 1);
      if (m[i] > 1) out << "^" << m[i];
    }
  }
  return out.str();
}

}  // namespace evoalg
