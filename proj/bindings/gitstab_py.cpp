#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gitstab/ideal.hpp"
#include "gitstab/jobs.hpp"
#include "gitstab/pointset.hpp"
#include "gitstab/worst.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// mpq_class <-> fractions.Fraction, exact in both directions.
template <>
struct type_caster<gitstab::Rat> {
  PYBIND11_TYPE_CASTER(gitstab::Rat, const_name("Fraction"));

  bool load(handle src, bool) {
    if (py::isinstance<py::int_>(src)) {
      value = gitstab::Int(py::str(src).cast<std::string>());
      return true;
    }
    if (py::hasattr(src, "numerator") && py::hasattr(src, "denominator")) {
      gitstab::Int num(py::str(src.attr("numerator")).cast<std::string>());
      gitstab::Int den(py::str(src.attr("denominator")).cast<std::string>());
      if (den == 0) return false;
      value = gitstab::make_rat(num, den);
      return true;
    }
    return false;
  }

  static handle cast(const gitstab::Rat& q, return_value_policy, handle) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    py::object big = py::module_::import("builtins").attr("int");
    py::object num = big(py::str(q.get_num().get_str()));
    py::object den = big(py::str(q.get_den().get_str()));
    return fraction(num, den).release();
  }
};

template <>
struct type_caster<gitstab::Int> {
  PYBIND11_TYPE_CASTER(gitstab::Int, const_name("int"));

  bool load(handle src, bool) {
    if (!py::isinstance<py::int_>(src)) return false;
    value = gitstab::Int(py::str(src).cast<std::string>());
    return true;
  }

  static handle cast(const gitstab::Int& v, return_value_policy, handle) {
    py::object big = py::module_::import("builtins").attr("int");
    return big(py::str(v.get_str())).release();
  }
};

}  // namespace pybind11::detail

namespace {

using namespace gitstab;

gitcore::TorusContext make_ctx(int n, const std::string& mode) {
  if (mode != "SL" && mode != "GL") throw std::invalid_argument("mode must be SL or GL");
  return gitcore::TorusContext{n, mode == "SL" ? gitcore::Mode::SL : gitcore::Mode::GL};
}

convex::PointSet make_point_set(const std::vector<RatVec>& points) {
  if (points.empty()) throw std::invalid_argument("point set must be nonempty");
  return convex::PointSet::make(points.front().size(), points);
}

gitcore::GroupElement matrix_from_rows(const std::vector<RatVec>& rows) {
  return gitcore::GroupElement::make(exactla::RationalMatrix::from_rows(rows));
}

gitcore::StateSource form_source(const std::string& f, int n, const std::string& mode) {
  return gitcore::FormSource{make_ctx(n, mode), polyalg::parse_polynomial(f, n)};
}

py::dict min_norm_dict(const convex::MinNormResult& r, const std::vector<RatVec>& points) {
  py::dict out;
  out["point"] = r.point;
  out["norm_squared"] = r.norm_squared;
  out["coefficients"] = r.coefficients;
  out["points"] = points;
  return out;
}

py::dict certificate_dict(const gitcore::SampleCertificate& c) {
  py::dict out;
  out["seed"] = c.seed;
  out["trials_used"] = c.trials_used;
  out["entry_bound"] = c.entry_bound;
  out["stalled"] = c.stalled;
  return out;
}

gitcore::SamplerConfig sampler_config(std::uint64_t trials, long entry_bound,
                                      std::uint64_t stall, std::uint64_t seed) {
  return gitcore::SamplerConfig{trials, entry_bound, stall, seed};
}

}  // namespace

PYBIND11_MODULE(_gitstab, m) {
  m.doc() = "exact torus-(semi)stability toolkit: states, state polytopes, "
            "Hilbert-Mumford indices, worst one-parameter subgroups";

  m.def(
      "min_norm_point",
      [](const std::vector<RatVec>& points) {
        convex::PointSet ps = make_point_set(points);
        return min_norm_dict(convex::min_norm_point(ps), ps.points);
      },
      py::arg("points"),
      "Nearest point of the convex hull to the origin, with an exact convex "
      "combination certificate. Coordinates are fractions.Fraction values.");

  m.def(
      "contains_origin",
      [](const std::vector<RatVec>& points) {
        return convex::contains_origin(make_point_set(points));
      },
      py::arg("points"));

  m.def(
      "origin_in_interior",
      [](const std::vector<RatVec>& points, std::size_t ambient_dim) {
        return convex::origin_in_interior(make_point_set(points), ambient_dim);
      },
      py::arg("points"), py::arg("ambient_dim") = 0);

  m.def(
      "dual_cone_rays",
      [](const std::vector<RatVec>& points, bool sum_zero) {
        convex::PointSet ps = make_point_set(points);
        std::vector<RatVec> eqs;
        if (sum_zero) eqs.push_back(RatVec(ps.dim, Rat(1)));
        return convex::dual_cone_rays(ps, eqs);
      },
      py::arg("points"), py::arg("sum_zero") = false,
      "Primitive integer generators of {rho : <p, rho> >= 0 for all p}, "
      "optionally restricted to the sum-zero subspace.");

  m.def(
      "affine_dim",
      [](const std::vector<RatVec>& points) { return convex::affine_dim(make_point_set(points)); },
      py::arg("points"));

  m.def(
      "project_weight",
      [](const std::vector<RatVec>& alphas, int n, const std::string& mode) {
        gitcore::TorusContext ctx = make_ctx(n, mode);
        std::vector<RatVec> out;
        for (const RatVec& a : alphas) out.push_back(gitcore::project_weight(ctx, a));
        return out;
      },
      py::arg("alphas"), py::arg("n"), py::arg("mode") = "SL");

  m.def(
      "state_of_form",
      [](const std::string& f, int n, const std::string& mode) {
        gitcore::TorusContext ctx = make_ctx(n, mode);
        return polyalg::state_of_form(polyalg::parse_polynomial(f, n), ctx).weights;
      },
      py::arg("f"), py::arg("n"), py::arg("mode") = "SL");

  m.def(
      "hm_index",
      [](const std::string& f, int n, const IntVec& rho, const std::string& mode) {
        gitcore::TorusContext ctx = make_ctx(n, mode);
        gitcore::State s = polyalg::state_of_form(polyalg::parse_polynomial(f, n), ctx);
        return gitcore::hm_index(s, gitcore::OneParamSubgroup::make(ctx, rho));
      },
      py::arg("f"), py::arg("n"), py::arg("rho"), py::arg("mode") = "SL",
      "-min over the state of <chi, rho>; negative iff rho destabilizes.");

  m.def(
      "worst_1ps",
      [](const std::string& f, int n, const std::string& mode) {
        gitcore::TorusContext ctx = make_ctx(n, mode);
        gitcore::State s = polyalg::state_of_form(polyalg::parse_polynomial(f, n), ctx);
        gitcore::WorstResult w = gitcore::worst_1ps_for_torus(s);
        py::dict out;
        out["rho"] = w.rho ? py::cast(w.rho->coords) : py::none();
        out["norm_squared"] = w.norm_squared;
        out["nearest"] = w.certificate.point;
        out["state"] = s.weights;
        return out;
      },
      py::arg("f"), py::arg("n"), py::arg("mode") = "SL");

  m.def(
      "destab_rays",
      [](const std::string& f, int n, const std::string& mode) {
        gitcore::TorusContext ctx = make_ctx(n, mode);
        gitcore::State s = polyalg::state_of_form(polyalg::parse_polynomial(f, n), ctx);
        gitcore::DestabResult d = gitcore::destab_rays(s);
        py::dict out;
        std::vector<IntVec> rays;
        for (const auto& r : d.rays) rays.push_back(r.coords);
        out["rays"] = rays;
        out["open_cone_nonempty"] = d.open_cone_nonempty;
        return out;
      },
      py::arg("f"), py::arg("n"), py::arg("mode") = "SL");

  m.def(
      "act_on_form",
      [](const std::vector<RatVec>& g, const std::string& f, int n) {
        return gitcore::act_on_form(matrix_from_rows(g), polyalg::parse_polynomial(f, n)).str();
      },
      py::arg("g"), py::arg("f"), py::arg("n"),
      "Substitution action x_i -> sum_j g[j][i] x_j; returns the canonical rendering.");

  m.def(
      "weyl_orbit",
      [](const RatVec& chi, const std::string& mode) {
        gitcore::TorusContext ctx = make_ctx(static_cast<int>(chi.size()) - 1, mode);
        return gitcore::weyl_orbit(ctx, chi);
      },
      py::arg("chi"), py::arg("mode") = "SL");

  m.def(
      "generic_state",
      [](const std::string& f, int n, const std::string& mode, std::uint64_t trials,
         long entry_bound, std::uint64_t stall, std::uint64_t seed) {
        auto sample = gitcore::generic_state_sample(
            form_source(f, n, mode), sampler_config(trials, entry_bound, stall, seed));
        py::dict out;
        out["weights"] = sample.state.weights;
        out["certificate"] = certificate_dict(sample.certificate);
        return out;
      },
      py::arg("f"), py::arg("n"), py::arg("mode") = "SL", py::arg("trials") = 50,
      py::arg("entry_bound") = 5, py::arg("stall") = 5, py::arg("seed") = 0);

  m.def(
      "certify",
      [](const std::string& f, int n, const std::string& mode, std::uint64_t trials,
         long entry_bound, std::uint64_t stall, std::uint64_t seed) {
        gitcore::StateSource src = form_source(f, n, mode);
        gitcore::SamplerConfig cfg = sampler_config(trials, entry_bound, stall, seed);
        auto semi = gitcore::check_generic_semistable(src, cfg);
        auto stable = gitcore::check_generic_stable(src, cfg);
        py::dict out;
        out["semistable_verdict"] = gitcore::verdict_name(semi.verdict);
        out["stable_verdict"] = gitcore::verdict_name(stable.verdict);
        out["generic_state"] = semi.sample.state.weights;
        out["certificate"] = certificate_dict(semi.sample.certificate);
        return out;
      },
      py::arg("f"), py::arg("n"), py::arg("mode") = "SL", py::arg("trials") = 50,
      py::arg("entry_bound") = 5, py::arg("stall") = 5, py::arg("seed") = 0);

  m.def(
      "hilbert_state",
      [](const std::vector<std::string>& generators, int n, int m, const std::string& mode) {
        gitcore::TorusContext ctx = make_ctx(n, mode);
        std::vector<polyalg::Polynomial> gens;
        for (const std::string& g : generators) gens.push_back(polyalg::parse_polynomial(g, n));
        polyalg::DegreePiece piece =
            polyalg::degree_piece(polyalg::IdealInput::make(std::move(gens), n), m);
        gitcore::State s = polyalg::plucker_state(piece, ctx);
        py::dict out;
        out["ell"] = piece.ell;
        out["weights"] = s.weights;
        out["contains_origin"] = convex::contains_origin(s.point_set());
        out["origin_in_interior"] = convex::origin_in_interior(s.point_set(), ctx.ambient_dim());
        return out;
      },
      py::arg("generators"), py::arg("n"), py::arg("m"), py::arg("mode") = "SL");

  m.def(
      "vertex_oracle",
      [](const std::vector<std::string>& generators, int n, int m, const RatVec& w,
         const std::string& mode) {
        gitcore::TorusContext ctx = make_ctx(n, mode);
        std::vector<polyalg::Polynomial> gens;
        for (const std::string& g : generators) gens.push_back(polyalg::parse_polynomial(g, n));
        polyalg::DegreePiece piece =
            polyalg::degree_piece(polyalg::IdealInput::make(std::move(gens), n), m);
        return polyalg::vertex_oracle(piece, w, ctx);
      },
      py::arg("generators"), py::arg("n"), py::arg("m"), py::arg("w"), py::arg("mode") = "SL",
      "Vertex of the state polytope of I_m maximizing w (initial subspace at w).");

  m.def("trivial_weight_necessary", &polyalg::trivial_weight_necessary, py::arg("n"),
        py::arg("m"), py::arg("ell"));

  m.def(
      "hypersurface_generic_state",
      [](int n, int d, const std::string& mode) {
        return polyalg::hypersurface_generic_state(n, d, make_ctx(n, mode)).weights;
      },
      py::arg("n"), py::arg("d"), py::arg("mode") = "SL");

  m.attr("__version__") = "0.1.0";
}
