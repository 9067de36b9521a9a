#include "gitstab/torus.hpp"

#include <algorithm>
#include <set>

namespace gitstab::gitcore {

OneParamSubgroup OneParamSubgroup::make(const TorusContext& ctx, IntVec raw) {
  if (raw.size() != ctx.coords()) throw std::invalid_argument("cocharacter of wrong length");
  Int g = 0;
  Int sum = 0;
  for (const Int& x : raw) {
    g = gcd(g, x);
    sum += x;
  }
  if (g == 0) throw std::invalid_argument("cocharacter must be nonzero");
  if (ctx.mode == Mode::SL && sum != 0)
    throw std::invalid_argument("SL-mode cocharacter must have coordinate sum zero");
  for (Int& x : raw) x /= g;
  return OneParamSubgroup{std::move(raw)};
}

State State::make(const TorusContext& ctx, std::vector<WeightVector> ws) {
  if (ws.empty()) throw std::invalid_argument("state must be nonempty");
  for (const WeightVector& w : ws) {
    if (w.size() != ctx.coords()) throw std::invalid_argument("weight of wrong length");
    if (ctx.mode == Mode::SL) {
      Rat sum = 0;
      for (const Rat& c : w) sum += c;
      if (sum != 0) throw std::invalid_argument("SL-mode weight must have coordinate sum zero");
    }
  }
  std::sort(ws.begin(), ws.end(), lex_less);
  ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
  return State{ctx, std::move(ws)};
}

convex::PointSet State::point_set() const {
  return convex::PointSet::make(context.coords(), weights);
}

WeightVector project_weight(const TorusContext& ctx, const std::vector<int>& alpha) {
  RatVec v(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) v[i] = Rat(alpha[i]);
  return project_weight(ctx, v);
}

WeightVector project_weight(const TorusContext& ctx, const RatVec& alpha) {
  if (alpha.size() != ctx.coords()) throw std::invalid_argument("weight of wrong length");
  if (ctx.mode == Mode::GL) return alpha;
  Rat total = 0;
  for (const Rat& c : alpha) total += c;
  Rat shift = total / Rat(static_cast<long>(ctx.coords()));
  WeightVector out(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) out[i] = alpha[i] - shift;
  return out;
}

Rat hm_index(const State& s, const OneParamSubgroup& rho) {
  if (rho.coords.size() != s.context.coords())
    throw std::invalid_argument("cocharacter of wrong length");
  bool first = true;
  Rat low;
  for (const WeightVector& chi : s.weights) {
    Rat v = dot(chi, rho.coords);
    if (first || v < low) {
      low = v;
      first = false;
    }
  }
  return -low;
}

std::vector<WeightVector> weyl_orbit(const TorusContext& ctx, const WeightVector& chi) {
  if (chi.size() != ctx.coords()) throw std::invalid_argument("weight of wrong length");
  std::vector<std::size_t> perm(chi.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::vector<WeightVector> orbit;
  do {
    WeightVector image(chi.size());
    for (std::size_t i = 0; i < perm.size(); ++i) image[i] = chi[perm[i]];
    orbit.push_back(std::move(image));
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(orbit.begin(), orbit.end(), lex_less);
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  return orbit;
}

}  // namespace gitstab::gitcore
