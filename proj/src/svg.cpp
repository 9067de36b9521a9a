#include "gitstab/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace gitstab::cli {

namespace {

using Plane = std::vector<std::array<Rat, 2>>;

std::array<Rat, 2> to_plane(const RatVec& w, std::optional<std::pair<int, int>> proj) {
  if (proj) {
    return {w[static_cast<std::size_t>(proj->first)], w[static_cast<std::size_t>(proj->second)]};
  }
  if (w.size() == 2) return {w[0], w[1]};
  if (w.size() != 3)
    throw std::invalid_argument("svg output needs a 2-D projection for this dimension");
  // sum-zero plane of SL_3: an affine-faithful pair of coordinates
  return {w[0] - w[1], w[0] + w[1] - Rat(2) * w[2]};
}

Rat cross(const std::array<Rat, 2>& o, const std::array<Rat, 2>& a, const std::array<Rat, 2>& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Andrew monotone chain, exact orientation tests.
std::vector<std::size_t> hull_indices(const Plane& pts) {
  std::vector<std::size_t> order(pts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    int c = cmp(pts[a][0], pts[b][0]);
    if (c != 0) return c < 0;
    return cmp(pts[a][1], pts[b][1]) < 0;
  });
  order.erase(std::unique(order.begin(), order.end(),
                          [&](std::size_t a, std::size_t b) { return pts[a] == pts[b]; }),
              order.end());
  if (order.size() <= 2) return order;
  std::vector<std::size_t> hull;
  auto build = [&](auto begin, auto end) {
    std::size_t base = hull.size();
    for (auto it = begin; it != end; ++it) {
      while (hull.size() >= base + 2 &&
             cross(pts[hull[hull.size() - 2]], pts[hull[hull.size() - 1]], pts[*it]) <= 0)
        hull.pop_back();
      hull.push_back(*it);
    }
  };
  build(order.begin(), order.end());
  hull.pop_back();
  build(order.rbegin(), order.rend());
  hull.pop_back();
  return hull;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

}  // namespace

std::string render_state_svg(const gitcore::State& state,
                             const std::optional<gitcore::WeightVector>& nearest,
                             std::optional<std::pair<int, int>> coord_projection) {
  Plane pts;
  for (const RatVec& w : state.weights) pts.push_back(to_plane(w, coord_projection));
  std::optional<std::array<Rat, 2>> near2;
  if (nearest) near2 = to_plane(*nearest, coord_projection);

  double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;  // always show the origin
  for (const auto& p : pts) {
    lo_x = std::min(lo_x, p[0].get_d());
    hi_x = std::max(hi_x, p[0].get_d());
    lo_y = std::min(lo_y, p[1].get_d());
    hi_y = std::max(hi_y, p[1].get_d());
  }
  double span = std::max({hi_x - lo_x, hi_y - lo_y, 1.0});
  double margin = 0.15 * span;
  lo_x -= margin, lo_y -= margin, hi_x += margin, hi_y += margin;
  double width = 480, height = 480;
  double scale = std::min(width / (hi_x - lo_x), height / (hi_y - lo_y));
  auto X = [&](const Rat& v) { return fmt((v.get_d() - lo_x) * scale); };
  auto Y = [&](const Rat& v) { return fmt(height - (v.get_d() - lo_y) * scale); };
  auto Xd = [&](double v) { return fmt((v - lo_x) * scale); };
  auto Yd = [&](double v) { return fmt(height - (v - lo_y) * scale); };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "  <line x1=\"" << Xd(lo_x) << "\" y1=\"" << Yd(0) << "\" x2=\"" << Xd(hi_x)
      << "\" y2=\"" << Yd(0) << "\" stroke=\"#cccccc\"/>\n";
  svg << "  <line x1=\"" << Xd(0) << "\" y1=\"" << Yd(lo_y) << "\" x2=\"" << Xd(0)
      << "\" y2=\"" << Yd(hi_y) << "\" stroke=\"#cccccc\"/>\n";

  std::vector<std::size_t> hull = hull_indices(pts);
  if (hull.size() >= 2) {
    svg << "  <polygon points=\"";
    for (std::size_t i = 0; i < hull.size(); ++i) {
      if (i) svg << " ";
      svg << X(pts[hull[i]][0]) << "," << Y(pts[hull[i]][1]);
    }
    svg << "\" fill=\"#4a90d9\" fill-opacity=\"0.12\" stroke=\"#4a90d9\" stroke-width=\"1.5\"/>\n";
  }

  if (near2) {
    svg << "  <line x1=\"" << Xd(0) << "\" y1=\"" << Yd(0) << "\" x2=\"" << X((*near2)[0])
        << "\" y2=\"" << Y((*near2)[1])
        << "\" stroke=\"#d0021b\" stroke-width=\"1.5\" stroke-dasharray=\"5,3\"/>\n";
    svg << "  <circle cx=\"" << X((*near2)[0]) << "\" cy=\"" << Y((*near2)[1])
        << "\" r=\"4\" fill=\"#d0021b\"/>\n";
  }

  for (const auto& p : pts)
    svg << "  <circle cx=\"" << X(p[0]) << "\" cy=\"" << Y(p[1])
        << "\" r=\"3.5\" fill=\"#222222\"/>\n";

  svg << "  <circle cx=\"" << Xd(0) << "\" cy=\"" << Yd(0)
      << "\" r=\"3\" fill=\"none\" stroke=\"#d0021b\" stroke-width=\"1.5\"/>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace gitstab::cli
