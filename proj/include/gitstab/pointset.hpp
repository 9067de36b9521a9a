#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "gitstab/rational.hpp"

namespace gitstab::convex {

// Finite set of rational points, deduplicated and kept in lexicographic order
// so that every downstream certificate is reproducible.
struct PointSet {
  std::size_t dim;
  std::vector<RatVec> points;

  static PointSet make(std::size_t dim, std::vector<RatVec> pts);
};

// Nearest point of conv(points) to the origin together with an exact convex
// combination witnessing it. coefficients is indexed like PointSet::points;
// entries absent from the corral are zero.
struct MinNormResult {
  RatVec point;
  RatVec coefficients;
  Rat norm_squared;
};

// Wolfe's nearest-point algorithm run entirely in exact rationals: the
// optimality test min_p <x,p> >= |x|^2 is exact, so there are no tolerance
// knobs and termination is the textbook finite-corral argument. Ties in the
// point-selection step go to the lowest index in the input order.
MinNormResult min_norm_point(const PointSet& s);

// True iff the origin lies in conv(points); decided via min_norm_point.
bool contains_origin(const PointSet& s);

// True iff (a) the linear span of the points has dimension ambient_dim and
// (b) some strictly positive convex combination of the points is zero
// (LP: maximize eps s.t. sum l_i p_i = 0, sum l_i = 1, l_i >= eps).
// ambient_dim = 0 means "use the coordinate dimension"; SL-mode callers pass
// the dimension of the sum-zero hyperplane.
bool origin_in_interior(const PointSet& s, std::size_t ambient_dim = 0);

// Dimension of the affine hull.
std::size_t affine_dim(const PointSet& s);

// Generators of the closed cone {rho : <p, rho> >= 0 for all p}, intersected
// with {rho : <e, rho> = 0} for each ambient equality e. Returned as primitive
// integer vectors: extreme rays of the pointed part (double description with
// exact rank-based adjacency/extremality tests) plus +/- a lattice basis of
// the lineality space. Empty iff the cone is {0}.
std::vector<IntVec> dual_cone_rays(const PointSet& s,
                                   const std::vector<RatVec>& ambient_equalities = {});

}  // namespace gitstab::convex
