#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gitstab/pointset.hpp"
#include "gitstab/torus.hpp"
#include "oracles.hpp"

using namespace gitstab;
using convex::PointSet;

namespace {

PointSet ps(std::size_t dim, std::vector<std::vector<long>> pts) {
  std::vector<RatVec> rat;
  for (const auto& p : pts) {
    RatVec r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = Rat(p[i]);
    rat.push_back(std::move(r));
  }
  return PointSet::make(dim, std::move(rat));
}

const RatVec conic_chi1{make_rat(1, 3), make_rat(-2, 3), make_rat(1, 3)};
const RatVec conic_chi2{make_rat(-2, 3), make_rat(4, 3), make_rat(-2, 3)};

}  // namespace

TEST_CASE("min_norm_point on a singleton") {
  auto r = convex::min_norm_point(ps(2, {{2, 1}}));
  CHECK(r.point == RatVec{Rat(2), Rat(1)});
  CHECK(r.norm_squared == 5);
  CHECK(r.coefficients == RatVec{Rat(1)});
}

TEST_CASE("min_norm_point on the unit simplex edge") {
  auto r = convex::min_norm_point(ps(2, {{1, 0}, {0, 1}}));
  CHECK(r.point == RatVec{make_rat(1, 2), make_rat(1, 2)});
  CHECK(r.norm_squared == make_rat(1, 2));
}

TEST_CASE("min_norm_point finds the origin inside the projected conic state") {
  PointSet s = PointSet::make(3, {conic_chi1, conic_chi2});
  auto r = convex::min_norm_point(s);
  CHECK(r.norm_squared == 0);
  CHECK(is_zero_vec(r.point));
  // lambda = (2/3, 1/3) on (chi1, chi2); points are stored sorted, chi2 first
  REQUIRE(s.points[0] == conic_chi2);
  CHECK(r.coefficients[0] == make_rat(1, 3));
  CHECK(r.coefficients[1] == make_rat(2, 3));
}

TEST_CASE("contains_origin basics") {
  CHECK(convex::contains_origin(ps(2, {{1, -1}, {-1, 1}})));
  CHECK_FALSE(convex::contains_origin(PointSet::make(2, {{make_rat(1, 2), make_rat(-1, 2)}})));
  CHECK(convex::contains_origin(PointSet::make(3, {conic_chi1, conic_chi2})));
}

TEST_CASE("origin_in_interior basics") {
  CHECK(convex::origin_in_interior(ps(1, {{1}, {-1}})));
  // the conic state spans only a line inside the 2-D sum-zero ambient space
  CHECK_FALSE(convex::origin_in_interior(PointSet::make(3, {conic_chi1, conic_chi2}), 2));
  // SL_2 sum-zero ambient space is a line
  CHECK(convex::origin_in_interior(ps(2, {{1, -1}, {-1, 1}}), 1));
}

TEST_CASE("affine_dim") {
  CHECK(convex::affine_dim(ps(2, {{3, 4}})) == 0);
  CHECK(convex::affine_dim(ps(2, {{0, 0}, {1, 1}})) == 1);
  gitcore::TorusContext ctx{2, gitcore::Mode::SL};
  std::vector<RatVec> quadrics;
  for (const auto& mono : polyalg::monomials_of_degree(2, 2))
    quadrics.push_back(gitcore::project_weight(ctx, mono.exponents));
  CHECK(convex::affine_dim(PointSet::make(3, quadrics)) == 2);
}

TEST_CASE("dual_cone_rays: first quadrant is self-dual") {
  auto rays = convex::dual_cone_rays(ps(2, {{1, 0}, {0, 1}}));
  REQUIRE(rays.size() == 2);
  CHECK(rays[0] == IntVec{Int(0), Int(1)});
  CHECK(rays[1] == IntVec{Int(1), Int(0)});
}

TEST_CASE("dual_cone_rays: half-line in the sum-zero space of SL_2") {
  std::vector<RatVec> eqs{{Rat(1), Rat(1)}};
  auto rays = convex::dual_cone_rays(PointSet::make(2, {{make_rat(1, 2), make_rat(-1, 2)}}), eqs);
  REQUIRE(rays.size() == 1);
  CHECK(rays[0] == IntVec{Int(1), Int(-1)});
}

TEST_CASE("dual_cone_rays: opposite constraints leave only the origin") {
  // full projected weight set of binary quadrics, inside the sum-zero line
  std::vector<RatVec> eqs{{Rat(1), Rat(1)}};
  auto rays = convex::dual_cone_rays(ps(2, {{1, -1}, {0, 0}, {-1, 1}}), eqs);
  CHECK(rays.empty());
  // without the ambient restriction the same constraints leave the diagonal line
  auto unrestricted = convex::dual_cone_rays(ps(2, {{1, -1}, {0, 0}, {-1, 1}}));
  REQUIRE(unrestricted.size() == 2);
  CHECK(unrestricted[0] == IntVec{Int(-1), Int(-1)});
  CHECK(unrestricted[1] == IntVec{Int(1), Int(1)});
}

TEST_CASE("min_norm_point equals the subset-enumeration oracle") {
  std::mt19937_64 rng(90210);
  for (int trial = 0; trial < 60; ++trial) {
    PointSet s = testing::random_point_set(rng, 4, 8);
    auto fast = convex::min_norm_point(s);
    auto slow = testing::brute_force_min_norm(s);
    CHECK(fast.norm_squared == slow.norm_squared);
    CHECK(fast.point == slow.point);

    // certificate: weights are a convex combination reproducing the point
    Rat total = 0;
    RatVec recombined(s.dim, Rat(0));
    for (std::size_t i = 0; i < s.points.size(); ++i) {
      CHECK(fast.coefficients[i] >= 0);
      total += fast.coefficients[i];
      for (std::size_t c = 0; c < s.dim; ++c)
        recombined[c] += fast.coefficients[i] * s.points[i][c];
    }
    CHECK(total == 1);
    CHECK(recombined == fast.point);

    // optimality certificate: <chi, point> >= |point|^2 for every input chi
    for (const RatVec& chi : s.points) CHECK(dot(chi, fast.point) >= fast.norm_squared);
  }
}

TEST_CASE("nearest-point duality: the minimum pairing attains the norm") {
  std::mt19937_64 rng(5150);
  int positive_cases = 0;
  for (int trial = 0; trial < 60; ++trial) {
    PointSet s = testing::random_point_set(rng, 4, 8);
    auto r = convex::min_norm_point(s);
    if (r.norm_squared == 0) continue;
    ++positive_cases;
    Rat low = dot(s.points[0], r.point);
    for (const RatVec& chi : s.points) {
      Rat v = dot(chi, r.point);
      if (v < low) low = v;
    }
    CHECK(low == r.norm_squared);
  }
  CHECK(positive_cases > 10);
}

TEST_CASE("contains_origin agrees with LP feasibility") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 50; ++trial) {
    PointSet s = testing::random_point_set(rng, 3, 6);
    CHECK(convex::contains_origin(s) == testing::lp_origin_in_hull(s));
  }
}

TEST_CASE("origin_in_interior implies contains_origin") {
  std::mt19937_64 rng(271828);
  for (int trial = 0; trial < 50; ++trial) {
    PointSet s = testing::random_point_set(rng, 3, 6);
    if (convex::origin_in_interior(s)) CHECK(convex::contains_origin(s));
  }
}

TEST_CASE("dual cone rays are feasible, primitive, and generate the box points") {
  std::mt19937_64 rng(161803);
  for (int trial = 0; trial < 25; ++trial) {
    PointSet s = testing::random_point_set(rng, 3, 5);
    auto rays = convex::dual_cone_rays(s);
    for (const IntVec& ray : rays) {
      Int g = 0;
      for (const Int& x : ray) g = gcd(g, x);
      CHECK(g == 1);
      for (const RatVec& chi : s.points) CHECK(dot(chi, ray) >= 0);
    }
    for (const IntVec& v : testing::box_vectors(s.dim, 3, false)) {
      bool feasible = true;
      for (const RatVec& chi : s.points)
        if (dot(chi, v) < 0) {
          feasible = false;
          break;
        }
      if (feasible) CHECK(testing::in_cone(rays, to_rat_vec(v)));
    }
  }
}

TEST_CASE("double description agrees with the subset-enumeration ray oracle") {
  std::mt19937_64 rng(424243);
  for (int trial = 0; trial < 40; ++trial) {
    PointSet s = testing::random_point_set(rng, 4, 6);
    bool sum_zero = trial % 3 == 0;
    std::vector<RatVec> eqs;
    if (sum_zero) eqs.push_back(RatVec(s.dim, Rat(1)));
    CHECK(convex::dual_cone_rays(s, eqs) == testing::brute_force_dual_cone(s, eqs));
  }
  // a couple of structured higher-dimensional cones
  PointSet simplex = ps(4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  CHECK(convex::dual_cone_rays(simplex) == testing::brute_force_dual_cone(simplex));
  PointSet slab = ps(3, {{1, 1, -1}, {-1, 1, 1}, {0, -1, 0}});
  CHECK(convex::dual_cone_rays(slab) == testing::brute_force_dual_cone(slab));
}

TEST_CASE("dual cone of the zero point is the whole ambient space") {
  auto rays = convex::dual_cone_rays(ps(2, {{0, 0}}));
  REQUIRE(rays.size() == 4);  // +/- both coordinate directions
  for (const IntVec& r : rays) CHECK(r.size() == 2);
}

TEST_CASE("Wolfe handles structured degenerate inputs") {
  // many multiples of one direction through the origin
  PointSet line = ps(3, {{1, -2, 1}, {-2, 4, -2}, {2, -4, 2}, {-1, 2, -1}});
  auto r = convex::min_norm_point(line);
  CHECK(r.norm_squared == 0);

  // a simplex facet far from the origin
  PointSet facet = ps(3, {{3, 0, 0}, {0, 3, 0}, {0, 0, 3}});
  auto f = convex::min_norm_point(facet);
  CHECK(f.point == RatVec{Rat(1), Rat(1), Rat(1)});
  CHECK(f.norm_squared == 3);
  CHECK(f.coefficients == RatVec{make_rat(1, 3), make_rat(1, 3), make_rat(1, 3)});

  // clustered duplicates collapse to one representative
  PointSet dup = PointSet::make(2, {{make_rat(1, 2), make_rat(1, 2)},
                                    {make_rat(1, 2), make_rat(1, 2)},
                                    {Rat(1), Rat(0)}});
  CHECK(convex::min_norm_point(dup).norm_squared == make_rat(1, 2));
}

TEST_CASE("duplicate points are removed on construction") {
  PointSet s = ps(2, {{1, 1}, {1, 1}, {0, 1}});
  CHECK(s.points.size() == 2);
  CHECK_THROWS_AS(PointSet::make(2, {}), std::invalid_argument);
}
