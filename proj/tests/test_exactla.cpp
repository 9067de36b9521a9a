#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gitstab/lp.hpp"
#include "gitstab/matrix.hpp"
#include "oracles.hpp"

using namespace gitstab;
using exactla::LpProblem;
using exactla::LpStatus;
using exactla::RationalMatrix;
using exactla::RowSense;

namespace {

RationalMatrix from_longs(const std::vector<std::vector<long>>& rows) {
  std::vector<RatVec> rat_rows;
  for (const auto& r : rows) {
    RatVec rr(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) rr[i] = Rat(r[i]);
    rat_rows.push_back(std::move(rr));
  }
  return RationalMatrix::from_rows(rat_rows);
}

}  // namespace

TEST_CASE("rref of the 2x2 identity") {
  auto red = exactla::rref(RationalMatrix::identity(2));
  CHECK(red.rank == 2);
  CHECK(red.pivot_columns == std::vector<std::size_t>{0, 1});
  CHECK(red.reduced == RationalMatrix::identity(2));
}

TEST_CASE("rref with dependent rows") {
  auto red = exactla::rref(from_longs({{1, 2}, {2, 4}}));
  CHECK(red.rank == 1);
  CHECK(red.pivot_columns == std::vector<std::size_t>{0});
  CHECK(red.reduced == from_longs({{1, 2}, {0, 0}}));
}

TEST_CASE("rref of the conic multiplication matrix in degree 3") {
  // rows: x_i * (x0 x2 - x1^2) over the canonical degree-3 monomial columns
  // x0^3, x0^2 x1, x0^2 x2, x0 x1^2, x0 x1 x2, x0 x2^2, x1^3, x1^2 x2, x1 x2^2, x2^3
  auto red = exactla::rref(from_longs({
      {0, 0, 1, -1, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 1, 0, -1, 0, 0, 0},
      {0, 0, 0, 0, 0, 1, 0, -1, 0, 0},
  }));
  CHECK(red.rank == 3);
}

TEST_CASE("rref is idempotent and rank is transpose-invariant") {
  std::mt19937_64 rng(20240401);
  for (int trial = 0; trial < 30; ++trial) {
    std::uniform_int_distribution<std::size_t> size(1, 5);
    std::size_t rows = size(rng), cols = size(rng);
    RationalMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = testing::random_rat(rng, 4, 3);
    auto red = exactla::rref(m);
    CHECK(exactla::rref(red.reduced).reduced == red.reduced);
    CHECK(exactla::rank(m) == exactla::rank(m.transpose()));
  }
}

TEST_CASE("solve_lp on the two one-variable examples") {
  // maximize x s.t. x <= 1, x >= 0
  LpProblem p1{RatVec{Rat(1)}, from_longs({{1}}), RatVec{Rat(1)},
               {RowSense::LessEq}, {true}};
  auto s1 = exactla::solve_lp(p1);
  REQUIRE(s1.status == LpStatus::Optimal);
  CHECK(s1.value == 1);
  CHECK(s1.point == RatVec{Rat(1)});

  // maximize x s.t. x <= 1, x >= 2
  LpProblem p2{RatVec{Rat(1)}, from_longs({{1}, {1}}), RatVec{Rat(1), Rat(2)},
               {RowSense::LessEq, RowSense::GreaterEq}, {true}};
  CHECK(exactla::solve_lp(p2).status == LpStatus::Infeasible);
}

TEST_CASE("solve_lp detects unboundedness") {
  LpProblem p{RatVec{Rat(1)}, from_longs({{1}}), RatVec{Rat(0)}, {RowSense::GreaterEq}, {true}};
  CHECK(exactla::solve_lp(p).status == LpStatus::Unbounded);
}

TEST_CASE("solve_lp on the strict-convex-combination system of the conic state") {
  // vars l1, l2, eps; maximize eps
  // l1*(1/3) + l2*(-2/3) = 0 and the other two coordinate rows,
  // l1 + l2 = 1, l_i - eps >= 0
  RatVec chi1{make_rat(1, 3), make_rat(-2, 3), make_rat(1, 3)};
  RatVec chi2{make_rat(-2, 3), make_rat(4, 3), make_rat(-2, 3)};
  std::vector<RatVec> rows;
  for (int c = 0; c < 3; ++c) rows.push_back(RatVec{chi1[c], chi2[c], Rat(0)});
  rows.push_back(RatVec{Rat(1), Rat(1), Rat(0)});
  rows.push_back(RatVec{Rat(1), Rat(0), Rat(-1)});
  rows.push_back(RatVec{Rat(0), Rat(1), Rat(-1)});
  LpProblem p{RatVec{Rat(0), Rat(0), Rat(1)},
              RationalMatrix::from_rows(rows),
              RatVec{Rat(0), Rat(0), Rat(0), Rat(1), Rat(0), Rat(0)},
              {RowSense::Equal, RowSense::Equal, RowSense::Equal, RowSense::Equal,
               RowSense::GreaterEq, RowSense::GreaterEq},
              {true, true, true}};
  auto sol = exactla::solve_lp(p);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.value == make_rat(1, 3));
  CHECK(sol.point[0] == make_rat(2, 3));
  CHECK(sol.point[1] == make_rat(1, 3));
}

TEST_CASE("solve_lp handles free variables") {
  // maximize -x s.t. x >= -3 (x free): optimum -(-3) = 3 at x = -3
  LpProblem p{RatVec{Rat(-1)}, from_longs({{1}}), RatVec{Rat(-3)}, {RowSense::GreaterEq}, {false}};
  auto sol = exactla::solve_lp(p);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.value == 3);
  CHECK(sol.point == RatVec{Rat(-3)});
}

TEST_CASE("Bland's rule terminates on a classic cycling instance") {
  // Beale's example; Dantzig pivoting cycles, Bland must terminate.
  std::vector<RatVec> rows{
      {make_rat(1, 4), Rat(-60), make_rat(-1, 25), Rat(9)},
      {make_rat(1, 2), Rat(-90), make_rat(-1, 50), Rat(3)},
      {Rat(0), Rat(0), Rat(1), Rat(0)},
  };
  LpProblem p{RatVec{make_rat(3, 4), Rat(-150), make_rat(1, 50), Rat(-6)},
              RationalMatrix::from_rows(rows),
              RatVec{Rat(0), Rat(0), Rat(1)},
              {RowSense::LessEq, RowSense::LessEq, RowSense::LessEq},
              {true, true, true, true}};
  auto sol = exactla::solve_lp(p);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.value == make_rat(1, 20));
}

TEST_CASE("solve_lp matches vertex enumeration on random bounded problems") {
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<std::size_t> vars_dist(1, 3);
  std::uniform_int_distribution<std::size_t> rows_dist(1, 4);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<int> sense_pick(0, 1);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t vars = vars_dist(rng);
    std::size_t extra = rows_dist(rng);
    std::vector<RatVec> rows;
    RatVec rhs;
    std::vector<RowSense> senses;
    for (std::size_t r = 0; r < extra; ++r) {
      RatVec row(vars);
      for (Rat& x : row) x = Rat(entry(rng));
      rows.push_back(std::move(row));
      rhs.push_back(Rat(entry(rng)));
      senses.push_back(sense_pick(rng) ? RowSense::LessEq : RowSense::GreaterEq);
    }
    // box rows keep the region bounded and pointed
    for (std::size_t j = 0; j < vars; ++j) {
      RatVec row(vars, Rat(0));
      row[j] = 1;
      rows.push_back(std::move(row));
      rhs.push_back(Rat(6));
      senses.push_back(RowSense::LessEq);
    }
    RatVec objective(vars);
    for (Rat& c : objective) c = Rat(entry(rng));
    LpProblem p{objective, RationalMatrix::from_rows(rows), rhs, senses,
                std::vector<bool>(vars, true)};
    auto sol = exactla::solve_lp(p);
    auto oracle = testing::lp_vertex_enumeration(p);
    if (sol.status == LpStatus::Optimal) {
      REQUIRE(oracle.has_value());
      CHECK(sol.value == *oracle);
    } else {
      CHECK(sol.status == LpStatus::Infeasible);
      CHECK(!oracle.has_value());
    }
  }
}

TEST_CASE("simplex terminates on randomized degenerate instances") {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<int> entry(-2, 2);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t vars = 3;
    std::vector<RatVec> rows;
    RatVec rhs;
    std::vector<RowSense> senses;
    for (std::size_t r = 0; r < 5; ++r) {
      RatVec row(vars);
      for (Rat& x : row) x = Rat(entry(rng));
      rows.push_back(std::move(row));
      rhs.push_back(Rat(0));  // every basic feasible point is degenerate
      senses.push_back(RowSense::LessEq);
    }
    for (std::size_t j = 0; j < vars; ++j) {
      RatVec row(vars, Rat(0));
      row[j] = 1;
      rows.push_back(std::move(row));
      rhs.push_back(Rat(4));
      senses.push_back(RowSense::LessEq);
    }
    RatVec objective(vars);
    for (Rat& c : objective) c = Rat(entry(rng));
    LpProblem p{objective, RationalMatrix::from_rows(rows), rhs, senses,
                std::vector<bool>(vars, true)};
    auto sol = exactla::solve_lp(p);
    REQUIRE(sol.status == LpStatus::Optimal);  // 0 is always feasible here
    auto oracle = testing::lp_vertex_enumeration(p);
    REQUIRE(oracle.has_value());
    CHECK(sol.value == *oracle);
  }
}

TEST_CASE("solve_lp matches vertex enumeration with free variables and equalities") {
  std::mt19937_64 rng(909090);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<int> kind(0, 2);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t vars = 2;
    std::vector<RatVec> rows;
    RatVec rhs;
    std::vector<RowSense> senses;
    for (std::size_t r = 0; r < 3; ++r) {
      RatVec row(vars);
      bool nonzero = false;
      for (Rat& x : row) {
        x = Rat(entry(rng));
        if (x != 0) nonzero = true;
      }
      if (!nonzero) row[0] = 1;
      rows.push_back(std::move(row));
      rhs.push_back(Rat(entry(rng)));
      int k = kind(rng);
      senses.push_back(k == 0 ? RowSense::LessEq
                              : (k == 1 ? RowSense::GreaterEq : RowSense::Equal));
    }
    // two-sided box so free variables stay bounded
    for (std::size_t j = 0; j < vars; ++j) {
      RatVec hi(vars, Rat(0)), lo(vars, Rat(0));
      hi[j] = 1;
      lo[j] = 1;
      rows.push_back(hi);
      rhs.push_back(Rat(5));
      senses.push_back(RowSense::LessEq);
      rows.push_back(lo);
      rhs.push_back(Rat(-5));
      senses.push_back(RowSense::GreaterEq);
    }
    RatVec objective(vars);
    for (Rat& c : objective) c = Rat(entry(rng));
    LpProblem p{objective, RationalMatrix::from_rows(rows), rhs, senses,
                std::vector<bool>{false, trial % 2 == 0}};
    auto sol = exactla::solve_lp(p);
    auto oracle = testing::lp_vertex_enumeration(p);
    if (sol.status == LpStatus::Optimal) {
      REQUIRE(oracle.has_value());
      CHECK(sol.value == *oracle);
      // the returned point satisfies every constraint exactly
      for (std::size_t i = 0; i < rows.size(); ++i) {
        Rat lhs = dot(rows[i], sol.point);
        if (senses[i] == RowSense::LessEq) CHECK(lhs <= rhs[i]);
        if (senses[i] == RowSense::GreaterEq) CHECK(lhs >= rhs[i]);
        if (senses[i] == RowSense::Equal) CHECK(lhs == rhs[i]);
      }
    } else {
      CHECK(sol.status == LpStatus::Infeasible);
      CHECK(!oracle.has_value());
    }
  }
}

TEST_CASE("matrix construction rejects empty shapes") {
  CHECK_THROWS_AS(RationalMatrix(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(RationalMatrix::from_rows({}), std::invalid_argument);
}
