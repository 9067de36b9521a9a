#pragma once

#include <vector>

#include "gitstab/matrix.hpp"
#include "gitstab/rational.hpp"

namespace gitstab::exactla {

enum class RowSense { LessEq, Equal, GreaterEq };

// Maximization problem: max objective . x subject to constraints x (sense) rhs,
// with x_j >= 0 where nonneg[j] and x_j free otherwise.
struct LpProblem {
  RatVec objective;
  RationalMatrix constraints;
  RatVec rhs;
  std::vector<RowSense> senses;
  std::vector<bool> nonneg;

  void validate() const;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status;
  Rat value;     // meaningful when Optimal
  RatVec point;  // meaningful when Optimal; satisfies all constraints exactly
};

// Two-phase primal simplex with Bland's anti-cycling rule, exact rationals.
LpSolution solve_lp(const LpProblem& p);

}  // namespace gitstab::exactla
