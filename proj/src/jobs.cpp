#include "gitstab/jobs.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gitstab/svg.hpp"

namespace gitstab::cli {

using json = nlohmann::ordered_json;
using gitcore::GroupElement;
using gitcore::Mode;
using gitcore::State;
using gitcore::TorusContext;

namespace {

class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return json(static_cast<long long>(v.get_si()));
  return json(v.get_str());
}

json rat_to_json(const Rat& q) {
  return json::array({int_to_json(q.get_num()), int_to_json(q.get_den())});
}

json vec_to_json(const RatVec& v) {
  json out = json::array();
  for (const Rat& q : v) out.push_back(rat_to_json(q));
  return out;
}

json intvec_to_json(const IntVec& v) {
  json out = json::array();
  for (const Int& x : v) out.push_back(int_to_json(x));
  return out;
}

json weights_to_json(const std::vector<RatVec>& ws) {
  json out = json::array();
  for (const RatVec& w : ws) out.push_back(vec_to_json(w));
  return out;
}

json matrix_to_json(const exactla::RationalMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vec_to_json(m.row(i)));
  return out;
}

std::string norm_decimal(const Rat& norm_squared) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", std::sqrt(norm_squared.get_d()));
  return buf;
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return Int(j.get<std::string>());
  throw InputError("expected an integer or integer string");
}

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(int_from_json(j));
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_array() && j.size() == 2) return make_rat(int_from_json(j[0]), int_from_json(j[1]));
  throw InputError("expected a rational as integer, \"n/d\" string, or [num, den] pair");
}

// "(1,0),(0,1)" or "[(1,0),(0,1)]", entries integer or "n/d"
std::vector<RatVec> parse_points(const std::string& text) {
  std::vector<RatVec> points;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
      ++pos;
  };
  skip();
  if (pos < text.size() && text[pos] == '[') ++pos;
  for (;;) {
    skip();
    if (pos >= text.size() || text[pos] == ']') break;
    if (text[pos] != '(') throw InputError("expected '(' in point list");
    ++pos;
    RatVec point;
    std::string entry;
    while (pos < text.size() && text[pos] != ')') {
      if (text[pos] == ',') {
        point.push_back(parse_rat(entry));
        entry.clear();
      } else if (!std::isspace(static_cast<unsigned char>(text[pos]))) {
        entry += text[pos];
      }
      ++pos;
    }
    if (pos >= text.size()) throw InputError("unterminated point");
    ++pos;  // ')'
    if (entry.empty()) throw InputError("empty coordinate in point");
    point.push_back(parse_rat(entry));
    points.push_back(std::move(point));
  }
  if (points.empty()) throw InputError("no points supplied");
  return points;
}

IntVec parse_int_vector(const std::string& text) {
  IntVec out;
  std::string entry;
  for (char c : text) {
    if (c == ',' || c == '(' || c == ')' || c == '[' || c == ']' ||
        std::isspace(static_cast<unsigned char>(c))) {
      if (!entry.empty()) {
        out.emplace_back(entry);
        entry.clear();
      }
    } else {
      entry += c;
    }
  }
  if (!entry.empty()) out.emplace_back(entry);
  if (out.empty()) throw InputError("empty integer vector");
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> split_generators(const std::string& text) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == ';' || c == '\n') {
      if (current.find_first_not_of(" \t\r") != std::string::npos) parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  if (current.find_first_not_of(" \t\r") != std::string::npos) parts.push_back(current);
  return parts;
}

struct JobContext {
  const JobSpec& job;
  TorusContext torus;
  polyalg::EnumerationOptions enum_opts;

  std::string polynomial_text() const {
    if (job.polynomial) return *job.polynomial;
    if (job.input_path) return read_file(*job.input_path);
    throw InputError("no polynomial supplied (use --f or --input)");
  }

  std::vector<std::string> generator_texts() const {
    std::vector<std::string> gens = job.ideal_generators;
    if (gens.empty() && job.input_path) gens = split_generators(read_file(*job.input_path));
    if (gens.size() == 1) {
      std::vector<std::string> split = split_generators(gens.front());
      if (split.size() > 1) gens = std::move(split);
    }
    if (gens.empty()) throw InputError("no ideal generators supplied (use --ideal or --input)");
    return gens;
  }

  polyalg::Polynomial parse_form(bool require_homogeneous) const {
    std::string text = polynomial_text();
    polyalg::Polynomial f = polyalg::parse_polynomial(text, torus.n);
    if (f.is_zero()) throw polyalg::ZeroPolynomial();
    if (require_homogeneous) f.require_homogeneous("input polynomial");
    return f;
  }

  polyalg::IdealInput parse_ideal() const {
    std::vector<polyalg::Polynomial> gens;
    for (const std::string& text : generator_texts())
      gens.push_back(polyalg::parse_polynomial(text, torus.n));
    return polyalg::IdealInput::make(std::move(gens), torus.n);
  }

  gitcore::StateSource form_source() const {
    return gitcore::FormSource{torus, parse_form(true)};
  }

  gitcore::StateSource resolve_source() const {
    if (!job.ideal_generators.empty() || (job.degree_m && !job.polynomial))
      return hilbert_source();
    return form_source();
  }

  gitcore::StateSource hilbert_source() const {
    if (!job.degree_m) throw InputError("hilbert computations need --m");
    return gitcore::HilbertSource{torus, parse_ideal(), *job.degree_m, enum_opts};
  }

  std::vector<GroupElement> load_group_elements() const {
    std::vector<GroupElement> gs;
    if (job.use_permutations) {
      for (GroupElement& g : gitcore::all_permutation_matrices(torus.n))
        gs.push_back(std::move(g));
    }
    if (job.gs_file) {
      json doc = json::parse(read_file(*job.gs_file));
      if (!doc.is_array()) throw InputError("matrix file must hold a JSON array of matrices");
      for (const json& jm : doc) {
        std::size_t size = torus.coords();
        if (!jm.is_array() || jm.size() != size)
          throw InputError("matrix of wrong shape in matrix file");
        exactla::RationalMatrix m(size, size);
        for (std::size_t i = 0; i < size; ++i) {
          if (!jm[i].is_array() || jm[i].size() != size)
            throw InputError("matrix of wrong shape in matrix file");
          for (std::size_t j = 0; j < size; ++j) m.at(i, j) = rat_from_json(jm[i][j]);
        }
        gs.push_back(GroupElement::make(std::move(m)));
      }
    }
    if (job.samples > 0) {
      std::mt19937_64 rng(job.sampler.seed);
      for (std::uint64_t t = 0; t < job.samples; ++t)
        gs.push_back(gitcore::random_group_element(rng, torus.n, job.sampler.entry_bound));
    }
    return gs;
  }
};

json source_input_json(const gitcore::StateSource& src) {
  if (const auto* form = std::get_if<gitcore::FormSource>(&src))
    return json{{"polynomial", form->f.str()}};
  const auto& hilbert = std::get<gitcore::HilbertSource>(src);
  json gens = json::array();
  for (const polyalg::Polynomial& g : hilbert.ideal.generators) gens.push_back(g.str());
  return json{{"ideal", gens}, {"m", hilbert.m}};
}

json sampler_certificate_json(const gitcore::SampleCertificate& cert) {
  json out;
  out["seed"] = cert.seed;
  out["trials_used"] = cert.trials_used;
  out["entry_bound"] = cert.entry_bound;
  out["stalled"] = cert.stalled;
  return out;
}

void attach_nearest(json& doc, const convex::MinNormResult& nearest) {
  doc["nearest_point"] = vec_to_json(nearest.point);
  doc["norm_squared"] = rat_to_json(nearest.norm_squared);
  if (auto norm = exact_sqrt(nearest.norm_squared)) doc["norm"] = rat_to_json(*norm);
  doc["norm_decimal"] = norm_decimal(nearest.norm_squared);
  doc["coefficients"] = vec_to_json(nearest.coefficients);
}

void write_svg_if_requested(const JobSpec& job, const State& state,
                            const std::optional<gitcore::WeightVector>& nearest) {
  if (!job.svg_path) return;
  bool natural_plane = state.context.mode == Mode::SL && state.context.n == 2;
  bool flat = state.context.coords() == 2;
  if (!job.svg_coords && !natural_plane && !flat)
    throw InputError("svg output needs --svg-coords for this mode/dimension");
  std::string svg = render_state_svg(state, nearest, job.svg_coords);
  std::ofstream out(*job.svg_path);
  if (!out) throw InputError("cannot write svg file: " + *job.svg_path);
  out << svg;
}

json run_state(const JobContext& ctx) {
  polyalg::Polynomial f = ctx.parse_form(true);
  State s = polyalg::state_of_form(f, ctx.torus);
  json doc;
  doc["input"] = {{"polynomial", f.str()}};
  doc["state"] = weights_to_json(s.weights);
  doc["count"] = s.weights.size();
  write_svg_if_requested(ctx.job, s, std::nullopt);
  return doc;
}

json run_hm_index(const JobContext& ctx) {
  if (!ctx.job.rho_text) throw InputError("hm-index needs --rho");
  polyalg::Polynomial f = ctx.parse_form(true);
  State s = polyalg::state_of_form(f, ctx.torus);
  gitcore::OneParamSubgroup rho =
      gitcore::OneParamSubgroup::make(ctx.torus, parse_int_vector(*ctx.job.rho_text));
  Rat mu = gitcore::hm_index(s, rho);
  json doc;
  doc["input"] = {{"polynomial", f.str()}, {"rho", intvec_to_json(rho.coords)}};
  doc["state"] = weights_to_json(s.weights);
  doc["hm_index"] = rat_to_json(mu);
  doc["destabilizing"] = mu < 0;
  return doc;
}

json run_nearest(const JobContext& ctx) {
  if (!ctx.job.points_text) throw InputError("nearest needs --points");
  std::vector<RatVec> raw = parse_points(*ctx.job.points_text);
  std::size_t dim = raw.front().size();
  for (const RatVec& p : raw)
    if (p.size() != dim) throw InputError("points of mixed dimension");
  convex::PointSet ps = convex::PointSet::make(dim, raw);
  convex::MinNormResult nearest = convex::min_norm_point(ps);
  json doc;
  doc["input"] = {{"points", weights_to_json(ps.points)}};
  attach_nearest(doc, nearest);
  doc["contains_origin"] = nearest.norm_squared == 0;
  if (ctx.job.svg_path) {
    if (dim != 2 && !ctx.job.svg_coords)
      throw InputError("svg output needs --svg-coords for this dimension");
    State drawable{TorusContext{static_cast<int>(dim) - 1, Mode::GL}, ps.points};
    write_svg_if_requested(ctx.job, drawable, nearest.point);
  }
  return doc;
}

json run_worst(const JobContext& ctx) {
  gitcore::StateSource src = ctx.resolve_source();
  std::vector<GroupElement> gs{GroupElement::identity(ctx.torus.n)};
  for (GroupElement& g : ctx.load_group_elements()) gs.push_back(std::move(g));
  gitcore::SearchResult result = gitcore::worst_1ps_search(src, gs);

  State best_state = gitcore::state_at(src, result.best.g);
  json doc;
  doc["input"] = source_input_json(src);
  doc["state"] = weights_to_json(best_state.weights);
  attach_nearest(doc, result.best.worst.certificate);
  doc["worst_1ps"] =
      result.best.worst.rho ? intvec_to_json(result.best.worst.rho->coords) : json(nullptr);
  if (!result.best.g.is_identity()) doc["g"] = matrix_to_json(result.best.g.matrix);
  doc["explored_tori"] = result.explored.size();
  doc["verdict"] = gitcore::verdict_name(result.verdict);
  std::optional<gitcore::WeightVector> nearest_pt;
  if (result.best.worst.norm_squared > 0) nearest_pt = result.best.worst.certificate.point;
  write_svg_if_requested(ctx.job, best_state, nearest_pt);
  return doc;
}

json run_destab(const JobContext& ctx) {
  gitcore::StateSource src = ctx.resolve_source();
  State s = gitcore::state_at(src, GroupElement::identity(ctx.torus.n));
  gitcore::DestabResult destab = gitcore::destab_rays(s);
  json doc;
  doc["input"] = source_input_json(src);
  doc["state"] = weights_to_json(s.weights);
  json rays = json::array();
  for (const auto& ray : destab.rays) rays.push_back(intvec_to_json(ray.coords));
  doc["destab_rays"] = rays;
  doc["open_cone_nonempty"] = destab.open_cone_nonempty;
  doc["verdict"] = gitcore::verdict_name(destab.open_cone_nonempty
                                             ? gitcore::Verdict::Unstable
                                             : gitcore::Verdict::SemistableWrtExploredTori);
  return doc;
}

json run_generic_state(const JobContext& ctx) {
  gitcore::StateSource src = ctx.resolve_source();
  gitcore::GenericStateSample sample = gitcore::generic_state_sample(src, ctx.job.sampler);
  json doc;
  doc["input"] = source_input_json(src);
  doc["generic_state"] = weights_to_json(sample.state.weights);
  doc["count"] = sample.state.weights.size();
  doc["certificate"] = sampler_certificate_json(sample.certificate);
  write_svg_if_requested(ctx.job, sample.state, std::nullopt);
  return doc;
}

json run_certify(const JobContext& ctx) {
  gitcore::StateSource src = ctx.resolve_source();
  gitcore::GenericVerdict semi = gitcore::check_generic_semistable(src, ctx.job.sampler);
  gitcore::GenericVerdict stable = gitcore::check_generic_stable(src, ctx.job.sampler);
  json doc;
  doc["input"] = source_input_json(src);
  doc["semistable_verdict"] = gitcore::verdict_name(semi.verdict);
  doc["stable_verdict"] = gitcore::verdict_name(stable.verdict);
  if (stable.verdict == gitcore::Verdict::GenericallyStable)
    doc["verdict"] = gitcore::verdict_name(stable.verdict);
  else
    doc["verdict"] = gitcore::verdict_name(semi.verdict);
  doc["generic_state"] = weights_to_json(semi.sample.state.weights);
  doc["certificate"] = sampler_certificate_json(semi.sample.certificate);
  return doc;
}

json run_stratify(const JobContext& ctx) {
  gitcore::StateSource src = ctx.resolve_source();
  std::vector<GroupElement> gs = ctx.load_group_elements();
  if (gs.empty()) gs.push_back(GroupElement::identity(ctx.torus.n));
  auto buckets = gitcore::stratify_samples(src, gs);

  // the dense stratum is the bucket whose state contains every other one
  auto contains = [](const State& big, const State& small) {
    return std::includes(big.weights.begin(), big.weights.end(), small.weights.begin(),
                         small.weights.end(), lex_less);
  };
  const State* maximal = nullptr;
  bool unique_maximal = true;
  for (const auto& [state, members] : buckets)
    if (!maximal || contains(state, *maximal)) maximal = &state;
  for (const auto& [state, members] : buckets)
    if (!contains(*maximal, state)) unique_maximal = false;

  json doc;
  doc["input"] = source_input_json(src);
  json bucket_list = json::array();
  for (const auto& [state, members] : buckets) {
    json b;
    b["state"] = weights_to_json(state.weights);
    b["count"] = members.size();
    json reps = json::array();
    for (const GroupElement& g : members) reps.push_back(matrix_to_json(g.matrix));
    b["group_elements"] = reps;
    bucket_list.push_back(std::move(b));
  }
  doc["buckets"] = bucket_list;
  doc["bucket_count"] = buckets.size();
  doc["maximal_state"] =
      unique_maximal && maximal ? weights_to_json(maximal->weights) : json(nullptr);
  return doc;
}

RatVec parse_rat_vector(const std::string& text) {
  RatVec out;
  std::string entry;
  for (char c : text) {
    if (c == ',' || c == '(' || c == ')' || c == '[' || c == ']' ||
        std::isspace(static_cast<unsigned char>(c))) {
      if (!entry.empty()) {
        out.push_back(parse_rat(entry));
        entry.clear();
      }
    } else {
      entry += c;
    }
  }
  if (!entry.empty()) out.push_back(parse_rat(entry));
  if (out.empty()) throw InputError("empty weight vector");
  return out;
}

json run_hilbert_state(const JobContext& ctx) {
  if (!ctx.job.degree_m) throw InputError("hilbert-state needs --m");
  polyalg::IdealInput ideal = ctx.parse_ideal();
  polyalg::DegreePiece piece = polyalg::degree_piece(ideal, *ctx.job.degree_m);

  if (ctx.job.vertex_weight_text) {
    // single vertex query through the initial-subspace oracle; no subset
    // enumeration, so this works far beyond the Pluecker budget
    RatVec w = parse_rat_vector(*ctx.job.vertex_weight_text);
    json doc;
    json gens = json::array();
    for (const polyalg::Polynomial& g : ideal.generators) gens.push_back(g.str());
    doc["input"] = {{"ideal", gens}, {"m", *ctx.job.degree_m}, {"w", vec_to_json(w)}};
    doc["ell"] = piece.ell;
    doc["monomial_count"] = piece.monomial_order.size();
    doc["vertex"] = vec_to_json(polyalg::vertex_oracle(piece, w, ctx.torus));
    return doc;
  }

  State s = polyalg::plucker_state(piece, ctx.torus, ctx.enum_opts);
  convex::MinNormResult nearest = convex::min_norm_point(s.point_set());
  json doc;
  json gens = json::array();
  for (const polyalg::Polynomial& g : ideal.generators) gens.push_back(g.str());
  doc["input"] = {{"ideal", gens}, {"m", *ctx.job.degree_m}};
  doc["ell"] = piece.ell;
  doc["monomial_count"] = piece.monomial_order.size();
  doc["state"] = weights_to_json(s.weights);
  doc["count"] = s.weights.size();
  doc["contains_origin"] = nearest.norm_squared == 0;
  doc["origin_in_interior"] =
      convex::origin_in_interior(s.point_set(), ctx.torus.ambient_dim());
  attach_nearest(doc, nearest);
  std::optional<gitcore::WeightVector> nearest_pt;
  if (nearest.norm_squared > 0) nearest_pt = nearest.point;
  write_svg_if_requested(ctx.job, s, nearest_pt);
  return doc;
}

std::string csv_of(const json& doc) {
  // one weight vector per row, coordinates as exact "num/den" strings
  const json* list = nullptr;
  for (const char* key : {"state", "generic_state", "destab_rays", "nearest_point"})
    if (doc.contains(key) && doc[key].is_array()) {
      list = &doc[key];
      break;
    }
  if (!list) throw InputError("csv output is not available for this command");
  std::ostringstream out;
  auto cell = [](const json& entry) -> std::string {
    if (entry.is_array() && entry.size() == 2) {
      Rat q = rat_from_json(entry);
      return rat_str(q);
    }
    return entry.dump();
  };
  if (!list->empty() && !(*list)[0].is_array()) {
    // a single vector (nearest_point fallback)
    for (std::size_t i = 0; i < list->size(); ++i) out << (i ? "," : "") << cell((*list)[i]);
    out << "\n";
    return out.str();
  }
  for (const json& row : *list) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell(row[i]);
    out << "\n";
  }
  return out.str();
}

const char* command_name(Command c) {
  switch (c) {
    case Command::State: return "state";
    case Command::HmIndex: return "hm-index";
    case Command::Nearest: return "nearest";
    case Command::Worst: return "worst";
    case Command::Destab: return "destab";
    case Command::GenericState: return "generic-state";
    case Command::Certify: return "certify";
    case Command::Stratify: return "stratify";
    case Command::HilbertState: return "hilbert-state";
  }
  return "?";
}

}  // namespace

std::string rat_to_json_text(const Rat& q) { return rat_to_json(q).dump(); }

Rat rat_from_json_text(const std::string& text) { return rat_from_json(json::parse(text)); }

JobResult run(const JobSpec& job) {
  json doc;
  doc["command"] = command_name(job.command);
  doc["mode"] = job.mode == Mode::SL ? "SL" : "GL";
  if (job.n >= 0) doc["n"] = job.n;
  doc["seed"] = job.sampler.seed;

  int exit_code = 0;
  try {
    if (job.command != Command::Nearest && job.n < 1)
      throw InputError("this command needs --n >= 1");
    polyalg::EnumerationOptions opts = polyalg::enumeration_defaults();
    if (job.budget_override) opts.budget = *job.budget_override;
    opts.threads = job.threads;
    JobContext ctx{job, TorusContext{job.n, job.mode}, opts};
    json body;
    switch (job.command) {
      case Command::State: body = run_state(ctx); break;
      case Command::HmIndex: body = run_hm_index(ctx); break;
      case Command::Nearest: body = run_nearest(ctx); break;
      case Command::Worst: body = run_worst(ctx); break;
      case Command::Destab: body = run_destab(ctx); break;
      case Command::GenericState: body = run_generic_state(ctx); break;
      case Command::Certify: body = run_certify(ctx); break;
      case Command::Stratify: body = run_stratify(ctx); break;
      case Command::HilbertState: body = run_hilbert_state(ctx); break;
    }
    doc.update(body);
  } catch (const polyalg::TooLarge& err) {
    doc["error"] = {{"type", "TooLarge"}, {"message", err.what()}};
    exit_code = 2;
  } catch (const polyalg::ParseError& err) {
    doc["error"] = {{"type", "ParseError"}, {"message", err.what()}, {"offset", err.offset()}};
    exit_code = 1;
  } catch (const polyalg::NonHomogeneous& err) {
    doc["error"] = {{"type", "NonHomogeneous"}, {"message", err.what()}};
    exit_code = 1;
  } catch (const polyalg::ZeroPolynomial& err) {
    doc["error"] = {{"type", "ZeroPolynomial"}, {"message", err.what()}};
    exit_code = 1;
  } catch (const polyalg::DegreeTooSmall& err) {
    doc["error"] = {{"type", "DegreeTooSmall"}, {"message", err.what()}};
    exit_code = 1;
  } catch (const gitcore::NotMonomialMatrix& err) {
    doc["error"] = {{"type", "NotMonomialMatrix"}, {"message", err.what()}};
    exit_code = 1;
  } catch (const gitcore::SamplerExhausted& err) {
    doc["error"] = {{"type", "SamplerExhausted"}, {"message", err.what()}};
    exit_code = 1;
  } catch (const InputError& err) {
    doc["error"] = {{"type", "InputError"}, {"message", err.what()}};
    exit_code = 1;
  } catch (const json::exception& err) {
    doc["error"] = {{"type", "InputError"}, {"message", err.what()}};
    exit_code = 1;
  } catch (const std::invalid_argument& err) {
    doc["error"] = {{"type", "InputError"}, {"message", err.what()}};
    exit_code = 1;
  }

  std::string rendered;
  if (exit_code == 0 && job.format == OutputFormat::Csv) {
    try {
      rendered = csv_of(doc);
    } catch (const InputError& err) {
      doc["error"] = {{"type", "InputError"}, {"message", err.what()}};
      exit_code = 1;
      rendered = doc.dump(2) + "\n";
    }
  } else {
    rendered = doc.dump(2) + "\n";
  }
  return JobResult{exit_code, std::move(rendered)};
}

}  // namespace gitstab::cli
