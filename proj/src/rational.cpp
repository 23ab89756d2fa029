#include <evoalg/rational.hpp>

#include <cctype>
#include <stdexcept>

namespace evoalg {

Rat rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat parse_rat(std::string_view text) {
  const auto bad = [&] {
    return std::invalid_argument("not a rational: '" + std::string(text) + "'");
  };
  std::size_t pos = 0;
  const auto digits = [&](bool allow_sign) {
    if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw bad();
  };
  if (text.empty()) throw bad();
  digits(true);
  if (pos < text.size()) {
    if (text[pos] != '/') throw bad();
    ++pos;
    digits(false);
    if (pos != text.size()) throw bad();
  }
  Rat q(std::string(text), 10);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rat& value) {
  return value.get_str();
}

}  // namespace evoalg
