#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gitstab/rational.hpp"

namespace gitstab::exactla {

// Dense matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {
    if (rows == 0 || cols == 0)
      throw std::invalid_argument("matrix dimensions must be positive");
  }

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<RatVec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RatVec row(std::size_t i) const;
  RatVec col(std::size_t j) const;

  RationalMatrix transpose() const;
  RationalMatrix operator*(const RationalMatrix& other) const;
  RatVec apply(const RatVec& v) const;  // M v

  bool operator==(const RationalMatrix& other) const = default;

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> data_;
};

struct RrefResult {
  std::size_t rank;
  std::vector<std::size_t> pivot_columns;  // strictly increasing
  RationalMatrix reduced;
};

// Reduced row echelon form over the rationals (Gauss-Jordan, exact pivots).
RrefResult rref(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

Rat determinant(const RationalMatrix& m);  // square only

// Inverse of a nonsingular square matrix; throws std::domain_error if singular.
RationalMatrix inverse(const RationalMatrix& m);

// Basis of {x : M x = 0}, one vector per free column of the rref.
std::vector<RatVec> nullspace(const RationalMatrix& m);

// Basis of the row space, read off the nonzero rows of the rref.
std::vector<RatVec> row_space_basis(const RationalMatrix& m);

// Any solution of M x = b, or nothing if inconsistent; free variables are 0.
std::optional<RatVec> solve_linear_system(const RationalMatrix& m, const RatVec& b);

}  // namespace gitstab::exactla
