#include <evoalg/matrix.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace evoalg {

bool is_zero(const RatVector& v) {
  for (const Rat& x : v)
    if (x != 0) return false;
  return true;
}

RatVector unit_vector(std::size_t n, std::size_t i) {
  RatVector v(n, Rat(0));
  v[i] = 1;
  return v;
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows) {
  if (rows.empty()) return RatMatrix();
  RatMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

RatMatrix RatMatrix::from_flat(RatVector flat, std::size_t rows, std::size_t cols) {
  if (flat.size() != rows * cols) throw std::invalid_argument("flat size mismatch");
  RatMatrix m;
  m.rows_ = rows;
  m.cols_ = cols;
  m.data_ = std::move(flat);
  return m;
}

RatVector RatMatrix::row(std::size_t r) const {
  return RatVector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

bool RatMatrix::is_zero() const {
  return evoalg::is_zero(data_);
}

RatMatrix RatMatrix::operator+(const RatMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("shape mismatch");
  RatMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] + other.data_[i];
  return m;
}

RatMatrix RatMatrix::operator-(const RatMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("shape mismatch");
  RatMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] - other.data_[i];
  return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("shape mismatch");
  RatMatrix m(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = at(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) m.at(r, c) += a * other.at(k, c);
    }
  return m;
}

RatMatrix RatMatrix::scaled(const Rat& c) const {
  RatMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = c * data_[i];
  return m;
}

std::string RatMatrix::str() const {
  std::vector<std::size_t> width(cols_, 0);
  std::vector<std::string> cells(data_.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      cells[r * cols_ + c] = to_string(at(r, c));
      width[c] = std::max(width[c], cells[r * cols_ + c].size());
    }
  std::ostringstream out;
  for (std::size_t r = 0; r < rows_; ++r) {
    out << "[ ";
    for (std::size_t c = 0; c < cols_; ++c) {
      const std::string& s = cells[r * cols_ + c];
      out << std::string(width[c] - s.size(), ' ') << s << (c + 1 < cols_ ? "  " : "");
    }
    out << " ]\n";
  }
  return out.str();
}

std::string to_string(const RatVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

}  // namespace evoalg
