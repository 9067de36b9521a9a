#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "gitstab/action.hpp"
#include "gitstab/ideal.hpp"
#include "gitstab/pointset.hpp"
#include "gitstab/torus.hpp"

namespace gitstab::gitcore {

class ProportionalityError : public std::runtime_error {
 public:
  ProportionalityError() : std::runtime_error("nearest point has no integer direction") {}
};

// Worst 1-PS of the fixed torus, from the nearest point chi_o of the state
// polytope: rho is the primitive integer vector on the ray of chi_o, absent
// iff chi_o = 0. norm_squared = |chi_o|^2 is the exact instability measure;
// comparisons between candidates use it so everything stays rational.
struct WorstResult {
  std::optional<OneParamSubgroup> rho;
  Rat norm_squared;
  convex::MinNormResult certificate;
};

WorstResult worst_1ps_for_torus(const State& s);

// Extreme-ray generators of the closed cone {rho : <chi, rho> >= 0 for all
// chi in the state}, restricted to the sum-zero cocharacter space in SL mode.
// open_cone_nonempty reports whether the OPEN destabilizing cone is nonempty,
// i.e. whether the origin is outside the state polytope.
struct DestabResult {
  std::vector<OneParamSubgroup> rays;
  bool open_cone_nonempty;
};

DestabResult destab_rays(const State& s);

// Something whose torus state can be recomputed after a coordinate change:
// either a homogeneous form or the degree-m Hilbert point of an ideal.
struct FormSource {
  TorusContext ctx;
  polyalg::Polynomial f;
};

struct HilbertSource {
  TorusContext ctx;
  polyalg::IdealInput ideal;
  int m;
  polyalg::EnumerationOptions opts = polyalg::enumeration_defaults();
};

using StateSource = std::variant<FormSource, HilbertSource>;

TorusContext source_context(const StateSource& src);

// State of g.v with respect to the standard torus.
State state_at(const StateSource& src, const GroupElement& g);

// The full weight set P(V) of the ambient representation, when enumerable
// within the budget: all degree-d weights for forms, all ell-subset sums for
// Hilbert points.
std::optional<State> full_weight_set(const StateSource& src);

struct SamplerConfig {
  std::uint64_t trials = 50;
  long entry_bound = 5;
  std::uint64_t stall = 5;
  std::uint64_t seed = 0;
};

// Probabilistic certificate for a sampled generic state: what was explored
// and why sampling stopped.
struct SampleCertificate {
  std::uint64_t seed;
  std::uint64_t trials_used;
  long entry_bound;
  bool stalled;  // stopped via the stall window rather than trial exhaustion
};

struct GenericStateSample {
  State state;  // union of every observed state: a subset of the generic state
  SampleCertificate certificate;
};

// Samples g with independent uniform integer entries in [-entry_bound,
// entry_bound] (singular matrices rejected), accumulates the union of the
// observed states of g.v, and stops after `stall` consecutive samples add no
// new weight or after `trials` samples. The union is contained in the true
// generic state and equals it with probability -> 1 as trials grow.
GenericStateSample generic_state_sample(const StateSource& src, const SamplerConfig& cfg);

// Buckets each g by the state of g.v: the sample-level shadow of the
// stratification of G. Keys are canonical states; the bucket whose state is
// set-maximal sits on the dense stratum.
struct StateKeyLess {
  bool operator()(const State& a, const State& b) const;
};

std::map<State, std::vector<GroupElement>, StateKeyLess> stratify_samples(
    const StateSource& src, const std::vector<GroupElement>& gs);

enum class Verdict {
  Unstable,
  SemistableWrtExploredTori,
  GenericallySemistable,
  GenericallyStable,
  NotGenericallyStable,
  Inconclusive,
};

const char* verdict_name(Verdict v);

struct GenericVerdict {
  Verdict verdict;
  GenericStateSample sample;
};

// Semistability of a general torus translate: contains_origin on the sampled
// generic state. A true verdict is a certificate (the sampled state already
// surrounds the origin); a false test is reported as Inconclusive, never as a
// refutation -- for SL the theorem guarantees the origin is there, so a stall
// only means the sampler quit early.
GenericVerdict check_generic_semistable(const StateSource& src, const SamplerConfig& cfg);

// Stability: origin_in_interior on the sampled generic state, taken inside
// the ambient character space (sum-zero hyperplane in SL mode). A definitive
// NotGenericallyStable is only emitted when the sampled state has grown to
// the full representation weight set, which pins the generic state exactly.
GenericVerdict check_generic_stable(const StateSource& src, const SamplerConfig& cfg);

struct SearchCandidate {
  GroupElement g;
  WorstResult worst;
};

struct SearchResult {
  SearchCandidate best;
  std::vector<SearchCandidate> explored;
  Verdict verdict;  // Unstable or SemistableWrtExploredTori
};

// Explores the supplied group elements (the identity if none), computes the
// worst 1-PS of each translated torus, and keeps the candidate of maximal
// instability. Instability 0 everywhere is not a proof of semistability
// unless combined with the generic theorems.
SearchResult worst_1ps_search(const StateSource& src, const std::vector<GroupElement>& gs);
SearchResult worst_1ps_search(const StateSource& src, const SamplerConfig& cfg);

}  // namespace gitstab::gitcore
