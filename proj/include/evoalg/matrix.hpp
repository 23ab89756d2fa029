#pragma once

#include <evoalg/rational.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace evoalg {

using RatVector = std::vector<Rat>;

bool is_zero(const RatVector& v);
RatVector unit_vector(std::size_t n, std::size_t i);

/// Dense matrix over the rationals, row-major storage.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<RatVector>& rows);
  static RatMatrix from_flat(RatVector flat, std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatVector row(std::size_t r) const;
  const RatVector& flat() const { return data_; }

  bool is_zero() const;
  bool operator==(const RatMatrix& other) const = default;

  RatMatrix operator+(const RatMatrix& other) const;
  RatMatrix operator-(const RatMatrix& other) const;
  RatMatrix operator*(const RatMatrix& other) const;
  RatMatrix scaled(const Rat& c) const;

  std::string str() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  RatVector data_;
};

std::string to_string(const RatVector& v);

}  // namespace evoalg
