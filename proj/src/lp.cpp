#include "gitstab/lp.hpp"

#include <algorithm>
#include <cassert>

namespace gitstab::exactla {

void LpProblem::validate() const {
  std::size_t vars = objective.size();
  std::size_t rows = constraints.rows();
  if (constraints.cols() != vars) throw std::invalid_argument("objective/matrix mismatch");
  if (rhs.size() != rows || senses.size() != rows)
    throw std::invalid_argument("rhs/senses size mismatch");
  if (nonneg.size() != vars) throw std::invalid_argument("bounds size mismatch");
}

namespace {

// Dense tableau kept as B^{-1} A alongside B^{-1} b, with the basis recorded
// per row. Costs are supplied per call; reduced costs are recomputed each
// iteration, which is plenty at the scale this kernel serves.
struct Tableau {
  std::vector<RatVec> a;  // m rows, width n_total
  RatVec b;               // m, kept >= 0
  std::vector<std::size_t> basis;

  std::size_t rows() const { return a.size(); }
  std::size_t cols() const { return a.empty() ? 0 : a.front().size(); }

  void pivot(std::size_t row, std::size_t col) {
    Rat inv = 1 / a[row][col];
    for (Rat& x : a[row]) x *= inv;
    b[row] *= inv;
    for (std::size_t i = 0; i < rows(); ++i) {
      if (i == row || a[i][col] == 0) continue;
      Rat factor = a[i][col];
      for (std::size_t j = 0; j < cols(); ++j) a[i][j] -= factor * a[row][j];
      b[i] -= factor * b[row];
    }
    basis[row] = col;
  }
};

enum class RunStatus { Optimal, Unbounded };

// Primal simplex with Bland's rule: entering = lowest-index column with
// positive reduced cost, leaving = min ratio with ties broken by lowest basis
// index. Exact arithmetic, so termination is unconditional.
RunStatus run_simplex(Tableau& t, const RatVec& cost) {
  for (;;) {
    // y = c_B applied to the current rows; reduced cost = c_j - y . a_j
    RatVec row_cost(t.rows());
    for (std::size_t i = 0; i < t.rows(); ++i) row_cost[i] = cost[t.basis[i]];

    std::size_t entering = t.cols();
    for (std::size_t j = 0; j < t.cols(); ++j) {
      Rat rc = cost[j];
      for (std::size_t i = 0; i < t.rows(); ++i)
        if (t.a[i][j] != 0) rc -= row_cost[i] * t.a[i][j];
      if (rc > 0) {
        entering = j;
        break;
      }
    }
    if (entering == t.cols()) return RunStatus::Optimal;

    std::size_t leaving = t.rows();
    Rat best_ratio;
    for (std::size_t i = 0; i < t.rows(); ++i) {
      if (t.a[i][entering] <= 0) continue;
      Rat ratio = t.b[i] / t.a[i][entering];
      if (leaving == t.rows() || ratio < best_ratio ||
          (ratio == best_ratio && t.basis[i] < t.basis[leaving])) {
        leaving = i;
        best_ratio = ratio;
      }
    }
    if (leaving == t.rows()) return RunStatus::Unbounded;
    t.pivot(leaving, entering);
  }
}

}  // namespace

LpSolution solve_lp(const LpProblem& p) {
  p.validate();
  std::size_t orig_vars = p.objective.size();
  std::size_t rows = p.constraints.rows();

  // Column layout: nonneg vars map to one column, free vars to a (+,-) pair.
  std::vector<std::size_t> plus_col(orig_vars);
  std::vector<std::size_t> minus_col(orig_vars, SIZE_MAX);
  std::size_t structurals = 0;
  for (std::size_t j = 0; j < orig_vars; ++j) {
    plus_col[j] = structurals++;
    if (!p.nonneg[j]) minus_col[j] = structurals++;
  }

  std::size_t slack_count = 0;
  for (RowSense s : p.senses)
    if (s != RowSense::Equal) ++slack_count;

  std::size_t total = structurals + slack_count;  // artificials appended later
  Tableau t;
  t.a.assign(rows, RatVec(total, Rat(0)));
  t.b.assign(rows, Rat(0));
  t.basis.assign(rows, SIZE_MAX);

  std::size_t next_slack = structurals;
  std::vector<std::size_t> needs_artificial;
  for (std::size_t i = 0; i < rows; ++i) {
    Rat sign = p.rhs[i] < 0 ? Rat(-1) : Rat(1);
    RowSense sense = p.senses[i];
    if (sign < 0) {
      if (sense == RowSense::LessEq) sense = RowSense::GreaterEq;
      else if (sense == RowSense::GreaterEq) sense = RowSense::LessEq;
    }
    for (std::size_t j = 0; j < orig_vars; ++j) {
      Rat coeff = sign * p.constraints.at(i, j);
      t.a[i][plus_col[j]] = coeff;
      if (minus_col[j] != SIZE_MAX) t.a[i][minus_col[j]] = -coeff;
    }
    t.b[i] = sign * p.rhs[i];
    if (sense == RowSense::LessEq) {
      t.a[i][next_slack] = 1;
      t.basis[i] = next_slack++;
    } else if (sense == RowSense::GreaterEq) {
      t.a[i][next_slack] = -1;
      ++next_slack;
      needs_artificial.push_back(i);
    } else {
      needs_artificial.push_back(i);
    }
  }

  if (!needs_artificial.empty()) {
    std::size_t art_start = total;
    total += needs_artificial.size();
    for (auto& row : t.a) row.resize(total, Rat(0));
    for (std::size_t k = 0; k < needs_artificial.size(); ++k) {
      std::size_t i = needs_artificial[k];
      t.a[i][art_start + k] = 1;
      t.basis[i] = art_start + k;
    }

    RatVec phase1_cost(total, Rat(0));
    for (std::size_t j = art_start; j < total; ++j) phase1_cost[j] = -1;
    run_simplex(t, phase1_cost);  // bounded above by 0, never Unbounded

    Rat phase1_value = 0;
    for (std::size_t i = 0; i < t.rows(); ++i)
      if (t.basis[i] >= art_start) phase1_value -= t.b[i];
    if (phase1_value != 0) return LpSolution{LpStatus::Infeasible, Rat(0), {}};

    // Drive leftover artificials out of the basis; rows with no structural
    // entry are redundant and dropped.
    for (std::size_t i = 0; i < t.rows();) {
      if (t.basis[i] < art_start) {
        ++i;
        continue;
      }
      std::size_t col = art_start;
      for (std::size_t j = 0; j < art_start; ++j)
        if (t.a[i][j] != 0) {
          col = j;
          break;
        }
      if (col < art_start) {
        t.pivot(i, col);
        ++i;
      } else {
        t.a.erase(t.a.begin() + i);
        t.b.erase(t.b.begin() + i);
        t.basis.erase(t.basis.begin() + i);
      }
    }
    for (auto& row : t.a) row.resize(art_start);
    total = art_start;
  }

  RatVec cost(total, Rat(0));
  for (std::size_t j = 0; j < orig_vars; ++j) {
    cost[plus_col[j]] = p.objective[j];
    if (minus_col[j] != SIZE_MAX) cost[minus_col[j]] = -p.objective[j];
  }
  if (run_simplex(t, cost) == RunStatus::Unbounded)
    return LpSolution{LpStatus::Unbounded, Rat(0), {}};

  RatVec extended(total, Rat(0));
  for (std::size_t i = 0; i < t.rows(); ++i) extended[t.basis[i]] = t.b[i];
  RatVec point(orig_vars);
  for (std::size_t j = 0; j < orig_vars; ++j) {
    point[j] = extended[plus_col[j]];
    if (minus_col[j] != SIZE_MAX) point[j] -= extended[minus_col[j]];
  }
  return LpSolution{LpStatus::Optimal, dot(p.objective, point), std::move(point)};
}

}  // namespace gitstab::exactla
