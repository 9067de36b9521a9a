#pragma once

#include <cstddef>
#include <vector>

#include "gitstab/pointset.hpp"
#include "gitstab/rational.hpp"

namespace gitstab::gitcore {

enum class Mode { SL, GL };

// Diagonal maximal torus of GL_{n+1} (or its image in SL_{n+1}).
// In SL mode every character and cocharacter has coordinate sum zero.
struct TorusContext {
  int n;  // torus sits in GL_{n+1}
  Mode mode;

  std::size_t coords() const { return static_cast<std::size_t>(n) + 1; }
  // Dimension of the ambient character space: n for SL, n+1 for GL.
  std::size_t ambient_dim() const {
    return mode == Mode::SL ? static_cast<std::size_t>(n) : coords();
  }
};

// A character of the torus as an exact coordinate vector.
using WeightVector = RatVec;

// A primitive integer cocharacter; sum-zero and nonzero in SL mode.
struct OneParamSubgroup {
  IntVec coords;

  static OneParamSubgroup make(const TorusContext& ctx, IntVec raw);
};

// Finite deduplicated set of weight vectors, lexicographically sorted.
struct State {
  TorusContext context;
  std::vector<WeightVector> weights;

  static State make(const TorusContext& ctx, std::vector<WeightVector> ws);
  convex::PointSet point_set() const;
  bool operator==(const State& other) const { return weights == other.weights; }
};

// GL mode: the exponent vector itself. SL mode: projection to the sum-zero
// hyperplane, a |-> a - (sum a / (n+1)) (1,...,1), which kills the
// determinant character.
WeightVector project_weight(const TorusContext& ctx, const std::vector<int>& alpha);
WeightVector project_weight(const TorusContext& ctx, const RatVec& alpha);

// Hilbert-Mumford index: -min over the state of <chi, rho>. A negative value
// means rho destabilizes (every pairing strictly positive); the point is
// semistable with respect to this torus iff the index is >= 0 for every rho.
Rat hm_index(const State& s, const OneParamSubgroup& rho);

// All coordinate permutations of chi: the Weyl group of SL_{n+1}/GL_{n+1} is
// the symmetric group on the torus coordinates.
std::vector<WeightVector> weyl_orbit(const TorusContext& ctx, const WeightVector& chi);

}  // namespace gitstab::gitcore
