#include "gitstab/matrix.hpp"

#include <optional>

namespace gitstab::exactla {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RatVec>& rows) {
  if (rows.empty() || rows.front().empty())
    throw std::invalid_argument("matrix dimensions must be positive");
  RationalMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols())
      throw std::invalid_argument("ragged rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

RatVec RationalMatrix::row(std::size_t i) const {
  RatVec r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

RatVec RationalMatrix::col(std::size_t j) const {
  RatVec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("dimension mismatch");
  RationalMatrix p(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) p.at(i, j) += a * other.at(k, j);
    }
  return p;
}

RatVec RationalMatrix::apply(const RatVec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("dimension mismatch");
  RatVec r(rows_, Rat(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0) r[i] += at(i, j) * v[j];
  return r;
}

RrefResult rref(const RationalMatrix& m) {
  RationalMatrix r = m;
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < r.cols() && pivot_row < r.rows(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < r.rows() && r.at(sel, col) == 0) ++sel;
    if (sel == r.rows()) continue;
    if (sel != pivot_row)
      for (std::size_t j = 0; j < r.cols(); ++j) swap(r.at(sel, j), r.at(pivot_row, j));
    Rat inv = 1 / r.at(pivot_row, col);
    for (std::size_t j = col; j < r.cols(); ++j) r.at(pivot_row, j) *= inv;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == pivot_row || r.at(i, col) == 0) continue;
      Rat factor = r.at(i, col);
      for (std::size_t j = col; j < r.cols(); ++j)
        r.at(i, j) -= factor * r.at(pivot_row, j);
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  return RrefResult{pivots.size(), std::move(pivots), std::move(r)};
}

std::size_t rank(const RationalMatrix& m) { return rref(m).rank; }

Rat determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  RationalMatrix a = m;
  Rat det = 1;
  for (std::size_t col = 0; col < a.cols(); ++col) {
    std::size_t sel = col;
    while (sel < a.rows() && a.at(sel, col) == 0) ++sel;
    if (sel == a.rows()) return Rat(0);
    if (sel != col) {
      for (std::size_t j = 0; j < a.cols(); ++j) swap(a.at(sel, j), a.at(col, j));
      det = -det;
    }
    det *= a.at(col, col);
    Rat inv = 1 / a.at(col, col);
    for (std::size_t i = col + 1; i < a.rows(); ++i) {
      if (a.at(i, col) == 0) continue;
      Rat factor = a.at(i, col) * inv;
      for (std::size_t j = col; j < a.cols(); ++j) a.at(i, j) -= factor * a.at(col, j);
    }
  }
  return det;
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  std::size_t n = m.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  RrefResult red = rref(aug);
  if (red.rank < n || red.pivot_columns[n - 1] != n - 1)
    throw std::domain_error("matrix is singular");
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = red.reduced.at(i, n + j);
  return inv;
}

std::vector<RatVec> nullspace(const RationalMatrix& m) {
  RrefResult red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : red.pivot_columns) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVec v(m.cols(), Rat(0));
    v[free] = 1;
    for (std::size_t k = 0; k < red.pivot_columns.size(); ++k)
      v[red.pivot_columns[k]] = -red.reduced.at(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<RatVec> row_space_basis(const RationalMatrix& m) {
  RrefResult red = rref(m);
  std::vector<RatVec> basis;
  for (std::size_t i = 0; i < red.rank; ++i) basis.push_back(red.reduced.row(i));
  return basis;
}

std::optional<RatVec> solve_linear_system(const RationalMatrix& m, const RatVec& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("dimension mismatch");
  RationalMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  RrefResult red = rref(aug);
  for (std::size_t c : red.pivot_columns)
    if (c == m.cols()) return std::nullopt;  // 0 = 1 row
  RatVec x(m.cols(), Rat(0));
  for (std::size_t k = 0; k < red.pivot_columns.size(); ++k)
    x[red.pivot_columns[k]] = red.reduced.at(k, m.cols());
  return x;
}

}  // namespace gitstab::exactla
