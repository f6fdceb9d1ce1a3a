#pragma once

#include <cstddef>
#include <vector>

#include "bidisk/errors.hpp"
#include "bidisk/rational.hpp"

namespace bidisk {

/// Dense matrix of exact rationals, row-major.
class RationalMatrix {
 public:
  RationalMatrix() : rows_(0), cols_(0) {}
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), cells_(rows * cols) {}

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& at(std::size_t i, std::size_t j) { return cells_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j]; }

  /// Minor with row i and column j removed.
  RationalMatrix minor_matrix(std::size_t i, std::size_t j) const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> cells_;
};

}  // namespace bidisk
