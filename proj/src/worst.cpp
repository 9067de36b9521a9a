#include "gitstab/worst.hpp"

#include <algorithm>

namespace gitstab::gitcore {

WorstResult worst_1ps_for_torus(const State& s) {
  convex::MinNormResult nearest = convex::min_norm_point(s.point_set());
  WorstResult out{std::nullopt, nearest.norm_squared, nearest};
  if (nearest.norm_squared == 0) return out;
  IntVec direction;
  try {
    direction = primitive_integer_direction(nearest.point);
  } catch (const std::invalid_argument&) {
    throw ProportionalityError();
  }
  out.rho = OneParamSubgroup::make(s.context, std::move(direction));
  return out;
}

DestabResult destab_rays(const State& s) {
  std::vector<RatVec> equalities;
  if (s.context.mode == Mode::SL)
    equalities.push_back(RatVec(s.context.coords(), Rat(1)));
  std::vector<IntVec> rays = convex::dual_cone_rays(s.point_set(), equalities);
  DestabResult out;
  for (IntVec& ray : rays)
    out.rays.push_back(OneParamSubgroup::make(s.context, std::move(ray)));
  out.open_cone_nonempty = !convex::contains_origin(s.point_set());
  return out;
}

TorusContext source_context(const StateSource& src) {
  return std::visit([](const auto& s) { return s.ctx; }, src);
}

State state_at(const StateSource& src, const GroupElement& g) {
  if (const auto* form = std::get_if<FormSource>(&src)) {
    const polyalg::Polynomial& f =
        g.is_identity() ? form->f : act_on_form(g, form->f);
    return polyalg::state_of_form(f, form->ctx);
  }
  const auto& hilbert = std::get<HilbertSource>(src);
  std::vector<polyalg::Polynomial> gens;
  for (const polyalg::Polynomial& gen : hilbert.ideal.generators)
    gens.push_back(g.is_identity() ? gen : act_on_form(g, gen));
  polyalg::DegreePiece piece =
      polyalg::degree_piece(polyalg::IdealInput::make(std::move(gens), hilbert.ideal.n),
                            hilbert.m);
  return polyalg::plucker_state(piece, hilbert.ctx, hilbert.opts);
}

std::optional<State> full_weight_set(const StateSource& src) {
  if (const auto* form = std::get_if<FormSource>(&src))
    return polyalg::hypersurface_generic_state(form->ctx.n, form->f.degree(), form->ctx);

  const auto& hilbert = std::get<HilbertSource>(src);
  polyalg::DegreePiece piece = polyalg::degree_piece(hilbert.ideal, hilbert.m);
  std::vector<polyalg::Monomial> columns = polyalg::monomials_of_degree(hilbert.ideal.n, hilbert.m);
  auto subsets = polyalg::binomial_u64(columns.size(), piece.ell);
  if (!subsets || *subsets > hilbert.opts.budget) return std::nullopt;

  std::vector<WeightVector> weights;
  std::vector<std::size_t> idx(piece.ell);
  for (std::size_t i = 0; i < piece.ell; ++i) idx[i] = i;
  for (;;) {
    std::vector<int> total(hilbert.ctx.coords(), 0);
    for (std::size_t c : idx)
      for (std::size_t i = 0; i < total.size(); ++i) total[i] += columns[c].exponents[i];
    weights.push_back(project_weight(hilbert.ctx, total));
    std::size_t i = piece.ell;
    while (i > 0 && idx[i - 1] == columns.size() - piece.ell + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < piece.ell; ++j) idx[j] = idx[j - 1] + 1;
  }
  return State::make(hilbert.ctx, std::move(weights));
}

GenericStateSample generic_state_sample(const StateSource& src, const SamplerConfig& cfg) {
  if (cfg.trials < 1 || cfg.entry_bound < 1 || cfg.stall < 1)
    throw std::invalid_argument("sampler parameters must be positive");
  TorusContext ctx = source_context(src);
  std::mt19937_64 rng(cfg.seed);

  std::vector<WeightVector> seen;
  std::uint64_t used = 0;
  std::uint64_t since_growth = 0;
  bool stalled = false;
  while (used < cfg.trials) {
    GroupElement g = random_group_element(rng, ctx.n, cfg.entry_bound);
    ++used;
    State observed = state_at(src, g);
    std::size_t before = seen.size();
    seen.insert(seen.end(), observed.weights.begin(), observed.weights.end());
    std::sort(seen.begin(), seen.end(), lex_less);
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    since_growth = seen.size() > before ? 0 : since_growth + 1;
    if (since_growth >= cfg.stall) {
      stalled = true;
      break;
    }
  }
  return GenericStateSample{State::make(ctx, std::move(seen)),
                            SampleCertificate{cfg.seed, used, cfg.entry_bound, stalled}};
}

bool StateKeyLess::operator()(const State& a, const State& b) const {
  return std::lexicographical_compare(a.weights.begin(), a.weights.end(), b.weights.begin(),
                                      b.weights.end(), lex_less);
}

std::map<State, std::vector<GroupElement>, StateKeyLess> stratify_samples(
    const StateSource& src, const std::vector<GroupElement>& gs) {
  if (gs.empty()) throw std::invalid_argument("no group elements supplied");
  std::map<State, std::vector<GroupElement>, StateKeyLess> buckets;
  for (const GroupElement& g : gs) buckets[state_at(src, g)].push_back(g);
  return buckets;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Unstable: return "UNSTABLE";
    case Verdict::SemistableWrtExploredTori: return "SEMISTABLE_WRT_EXPLORED_TORI";
    case Verdict::GenericallySemistable: return "GENERICALLY_SEMISTABLE";
    case Verdict::GenericallyStable: return "GENERICALLY_STABLE";
    case Verdict::NotGenericallyStable: return "NOT_GENERICALLY_STABLE";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

GenericVerdict check_generic_semistable(const StateSource& src, const SamplerConfig& cfg) {
  GenericStateSample sample = generic_state_sample(src, cfg);
  // The sampled state sits inside the generic state, so origin containment
  // certifies generic semistability; failure only means sampling stopped
  // short and is never reported as a refutation.
  bool origin = convex::contains_origin(sample.state.point_set());
  return GenericVerdict{origin ? Verdict::GenericallySemistable : Verdict::Inconclusive,
                        std::move(sample)};
}

GenericVerdict check_generic_stable(const StateSource& src, const SamplerConfig& cfg) {
  GenericStateSample sample = generic_state_sample(src, cfg);
  TorusContext ctx = source_context(src);
  if (convex::origin_in_interior(sample.state.point_set(), ctx.ambient_dim()))
    return GenericVerdict{Verdict::GenericallyStable, std::move(sample)};
  // Interior failure refutes only if the sampled state is already the whole
  // representation weight set, which pins the generic state exactly.
  std::optional<State> full = full_weight_set(src);
  if (full && *full == sample.state)
    return GenericVerdict{Verdict::NotGenericallyStable, std::move(sample)};
  return GenericVerdict{Verdict::Inconclusive, std::move(sample)};
}

SearchResult worst_1ps_search(const StateSource& src, const std::vector<GroupElement>& gs) {
  std::vector<GroupElement> explored = gs;
  if (explored.empty()) explored.push_back(GroupElement::identity(source_context(src).n));

  SearchResult out{SearchCandidate{explored.front(), worst_1ps_for_torus(state_at(src, explored.front()))},
                   {},
                   Verdict::SemistableWrtExploredTori};
  out.explored.push_back(out.best);
  for (std::size_t i = 1; i < explored.size(); ++i) {
    SearchCandidate cand{explored[i], worst_1ps_for_torus(state_at(src, explored[i]))};
    if (cand.worst.norm_squared > out.best.worst.norm_squared) out.best = cand;
    out.explored.push_back(std::move(cand));
  }
  if (out.best.worst.norm_squared > 0) out.verdict = Verdict::Unstable;
  return out;
}

SearchResult worst_1ps_search(const StateSource& src, const SamplerConfig& cfg) {
  TorusContext ctx = source_context(src);
  std::mt19937_64 rng(cfg.seed);
  std::vector<GroupElement> gs{GroupElement::identity(ctx.n)};
  for (std::uint64_t t = 0; t < cfg.trials; ++t)
    gs.push_back(random_group_element(rng, ctx.n, cfg.entry_bound));
  return worst_1ps_search(src, gs);
}

}  // namespace gitstab::gitcore
