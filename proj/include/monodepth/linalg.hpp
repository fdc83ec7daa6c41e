#pragma once

// Exact matrix rank over Q (fraction-free Bareiss elimination on GMP integers)
// or over a prime field F_p.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace monodepth {

// Coefficient field: characteristic 0 means Q.
class Field {
 public:
  Field() = default;
  static Field rationals() { return Field(); }
  // Throws std::invalid_argument unless p is prime and fits in 31 bits.
  static Field prime(std::uint64_t p);
  // "q" or "fp:<p>".
  static Field parse(const std::string& text);

  std::uint64_t characteristic() const noexcept { return p_; }
  bool is_rational() const noexcept { return p_ == 0; }
  std::string to_string() const;

  friend bool operator==(Field, Field) = default;

 private:
  std::uint64_t p_ = 0;
};

// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_, cols_;
  std::vector<std::int64_t> data_;
};

std::size_t rank(const IntMatrix& m, Field field);

}  // namespace monodepth
