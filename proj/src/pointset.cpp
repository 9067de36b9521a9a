#include "gitstab/pointset.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "gitstab/lp.hpp"
#include "gitstab/matrix.hpp"

namespace gitstab::convex {

using exactla::RationalMatrix;

PointSet PointSet::make(std::size_t dim, std::vector<RatVec> pts) {
  if (dim == 0) throw std::invalid_argument("point set needs a positive dimension");
  if (pts.empty()) throw std::invalid_argument("point set must be nonempty");
  for (const RatVec& p : pts)
    if (p.size() != dim) throw std::invalid_argument("point of wrong dimension");
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return PointSet{dim, std::move(pts)};
}

namespace {

// Minimum-norm point of the affine hull of the selected points, through the
// bordered system  [G 1; 1^T 0] [mu; nu] = [0; 1]  with G the Gram matrix.
// Solvable even when the selection is affinely dependent; the projection
// itself is unique, the barycentric weights need not be.
struct AffineMin {
  RatVec point;
  RatVec weights;  // aligned with the selection
};

AffineMin affine_minimizer(const PointSet& s, const std::vector<std::size_t>& sel) {
  std::size_t k = sel.size();
  RationalMatrix sys(k + 1, k + 1);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j)
      sys.at(i, j) = dot(s.points[sel[i]], s.points[sel[j]]);
    sys.at(i, k) = 1;
    sys.at(k, i) = 1;
  }
  RatVec rhs(k + 1, Rat(0));
  rhs[k] = 1;
  auto sol = exactla::solve_linear_system(sys, rhs);
  if (!sol) throw std::logic_error("affine minimizer system inconsistent");
  RatVec weights(sol->begin(), sol->begin() + k);
  RatVec point(s.dim, Rat(0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t c = 0; c < s.dim; ++c) point[c] += weights[i] * s.points[sel[i]][c];
  return AffineMin{std::move(point), std::move(weights)};
}

}  // namespace

MinNormResult min_norm_point(const PointSet& s) {
  std::size_t count = s.points.size();

  // start from the shortest input point
  std::size_t start = 0;
  Rat best = norm_squared(s.points[0]);
  for (std::size_t j = 1; j < count; ++j) {
    Rat nsq = norm_squared(s.points[j]);
    if (nsq < best) {
      best = nsq;
      start = j;
    }
  }

  std::vector<std::size_t> corral{start};
  RatVec lambda{Rat(1)};
  RatVec x = s.points[start];

  long guard = 200000;
  for (;;) {
    if (--guard < 0) throw std::logic_error("nearest-point iteration guard tripped");
    Rat xx = norm_squared(x);

    std::size_t entering = 0;
    Rat low = dot(x, s.points[0]);
    for (std::size_t j = 1; j < count; ++j) {
      Rat v = dot(x, s.points[j]);
      if (v < low) {
        low = v;
        entering = j;
      }
    }
    if (low >= xx) break;  // exact optimality: min_p <x,p> >= |x|^2

    corral.push_back(entering);
    lambda.push_back(Rat(0));

    for (;;) {
      if (--guard < 0) throw std::logic_error("nearest-point iteration guard tripped");
      AffineMin aff = affine_minimizer(s, corral);
      bool inside = true;
      for (const Rat& w : aff.weights)
        if (w <= 0) {
          inside = false;
          break;
        }
      if (inside) {
        lambda = aff.weights;
        x = aff.point;
        break;
      }
      // step toward the affine minimizer until the first weight hits zero
      Rat theta(1);
      for (std::size_t i = 0; i < corral.size(); ++i) {
        if (aff.weights[i] > 0) continue;
        Rat ratio = lambda[i] / (lambda[i] - aff.weights[i]);
        if (ratio < theta) theta = ratio;
      }
      std::vector<std::size_t> kept;
      RatVec kept_lambda;
      for (std::size_t i = 0; i < corral.size(); ++i) {
        Rat next = (1 - theta) * lambda[i] + theta * aff.weights[i];
        if (next > 0) {
          kept.push_back(corral[i]);
          kept_lambda.push_back(next);
        }
      }
      corral = std::move(kept);
      lambda = std::move(kept_lambda);
      x.assign(s.dim, Rat(0));
      for (std::size_t i = 0; i < corral.size(); ++i)
        for (std::size_t c = 0; c < s.dim; ++c) x[c] += lambda[i] * s.points[corral[i]][c];
    }
  }

  MinNormResult result;
  result.point = std::move(x);
  result.coefficients.assign(count, Rat(0));
  for (std::size_t i = 0; i < corral.size(); ++i) result.coefficients[corral[i]] = lambda[i];
  result.norm_squared = norm_squared(result.point);
  return result;
}

bool contains_origin(const PointSet& s) { return min_norm_point(s).norm_squared == 0; }

bool origin_in_interior(const PointSet& s, std::size_t ambient_dim) {
  std::size_t ambient = ambient_dim == 0 ? s.dim : ambient_dim;
  if (exactla::rank(RationalMatrix::from_rows(s.points)) != ambient) return false;

  // maximize eps  s.t.  sum l_i p_i = 0, sum l_i = 1, l_i - eps >= 0
  std::size_t count = s.points.size();
  std::size_t vars = count + 1;  // lambdas then eps
  std::size_t rows = s.dim + 1 + count;
  RationalMatrix a(rows, vars);
  RatVec rhs(rows, Rat(0));
  std::vector<exactla::RowSense> senses(rows, exactla::RowSense::Equal);
  for (std::size_t c = 0; c < s.dim; ++c)
    for (std::size_t i = 0; i < count; ++i) a.at(c, i) = s.points[i][c];
  for (std::size_t i = 0; i < count; ++i) a.at(s.dim, i) = 1;
  rhs[s.dim] = 1;
  for (std::size_t i = 0; i < count; ++i) {
    a.at(s.dim + 1 + i, i) = 1;
    a.at(s.dim + 1 + i, count) = -1;
    senses[s.dim + 1 + i] = exactla::RowSense::GreaterEq;
  }
  RatVec objective(vars, Rat(0));
  objective[count] = 1;
  exactla::LpProblem lp{objective, std::move(a), std::move(rhs), std::move(senses),
                        std::vector<bool>(vars, true)};
  exactla::LpSolution sol = exactla::solve_lp(lp);
  return sol.status == exactla::LpStatus::Optimal && sol.value > 0;
}

std::size_t affine_dim(const PointSet& s) {
  if (s.points.size() == 1) return 0;
  std::vector<RatVec> diffs;
  for (std::size_t i = 1; i < s.points.size(); ++i) {
    RatVec d(s.dim);
    for (std::size_t c = 0; c < s.dim; ++c) d[c] = s.points[i][c] - s.points[0][c];
    diffs.push_back(std::move(d));
  }
  return exactla::rank(RationalMatrix::from_rows(diffs));
}

namespace {

// --- double description for a pointed cone {u : M u >= 0}, M full column rank ---

Rat row_dot(const RatVec& a, const RatVec& b) { return dot(a, b); }

std::vector<std::size_t> tight_rows(const std::vector<RatVec>& rows, const RatVec& ray) {
  std::vector<std::size_t> t;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (row_dot(rows[i], ray) == 0) t.push_back(i);
  return t;
}

std::size_t rank_of_rows(const std::vector<RatVec>& rows, const std::vector<std::size_t>& idx) {
  if (idx.empty()) return 0;
  std::vector<RatVec> sel;
  for (std::size_t i : idx) sel.push_back(rows[i]);
  return exactla::rank(RationalMatrix::from_rows(sel));
}

RatVec primitive_rat(const RatVec& v) {
  IntVec p = primitive_integer_direction(v);
  return to_rat_vec(p);
}

std::vector<RatVec> dd_pointed(const std::vector<RatVec>& all_rows, std::size_t k) {
  if (k == 0) return {};

  // greedy choice of k independent rows for the initial simplicial cone
  std::vector<std::size_t> chosen;
  std::vector<RatVec> chosen_rows;
  for (std::size_t i = 0; i < all_rows.size() && chosen.size() < k; ++i) {
    chosen_rows.push_back(all_rows[i]);
    if (exactla::rank(RationalMatrix::from_rows(chosen_rows)) == chosen.size() + 1)
      chosen.push_back(i);
    else
      chosen_rows.pop_back();
  }
  if (chosen.size() < k) throw std::logic_error("cone matrix lost full column rank");

  RationalMatrix initial(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) initial.at(i, j) = all_rows[chosen[i]][j];
  RationalMatrix inv = exactla::inverse(initial);

  std::vector<RatVec> rays;
  for (std::size_t j = 0; j < k; ++j) rays.push_back(primitive_rat(inv.col(j)));

  std::vector<RatVec> processed = chosen_rows;
  std::vector<bool> is_chosen(all_rows.size(), false);
  for (std::size_t i : chosen) is_chosen[i] = true;

  auto dedupe = [](std::vector<RatVec>& rs) {
    std::sort(rs.begin(), rs.end(), lex_less);
    rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
  };

  for (std::size_t r = 0; r < all_rows.size(); ++r) {
    if (is_chosen[r]) continue;
    const RatVec& m = all_rows[r];
    std::vector<RatVec> pos, zero, neg;
    RatVec pos_val, neg_val;
    for (const RatVec& ray : rays) {
      Rat v = row_dot(m, ray);
      if (v > 0) {
        pos.push_back(ray);
        pos_val.push_back(v);
      } else if (v == 0) {
        zero.push_back(ray);
      } else {
        neg.push_back(ray);
        neg_val.push_back(v);
      }
    }
    if (neg.empty()) continue;

    std::vector<RatVec> next = pos;
    next.insert(next.end(), zero.begin(), zero.end());
    for (std::size_t pi = 0; pi < pos.size(); ++pi) {
      for (std::size_t ni = 0; ni < neg.size(); ++ni) {
        if (k >= 2) {
          std::vector<std::size_t> common;
          for (std::size_t t = 0; t < processed.size(); ++t)
            if (row_dot(processed[t], pos[pi]) == 0 && row_dot(processed[t], neg[ni]) == 0)
              common.push_back(t);
          if (rank_of_rows(processed, common) != k - 2) continue;
        } else {
          continue;  // 1-D: a positive and a negative ray only meet at 0
        }
        RatVec combo(k);
        for (std::size_t j = 0; j < k; ++j)
          combo[j] = pos_val[pi] * neg[ni][j] - neg_val[ni] * pos[pi][j];
        if (!is_zero_vec(combo)) next.push_back(primitive_rat(combo));
      }
    }
    dedupe(next);
    rays = std::move(next);
    processed.push_back(m);
  }

  // exact extremality: a ray is extreme iff its tight rows have rank k-1
  std::vector<RatVec> extreme;
  for (const RatVec& ray : rays) {
    if (k == 1 || rank_of_rows(all_rows, tight_rows(all_rows, ray)) == k - 1)
      extreme.push_back(ray);
  }
  dedupe(extreme);
  return extreme;
}

}  // namespace

std::vector<IntVec> dual_cone_rays(const PointSet& s,
                                   const std::vector<RatVec>& ambient_equalities) {
  // basis of the ambient subspace W = {y : <e, y> = 0 for all equalities}
  std::vector<RatVec> ambient_basis;
  if (ambient_equalities.empty()) {
    for (std::size_t i = 0; i < s.dim; ++i) {
      RatVec e(s.dim, Rat(0));
      e[i] = 1;
      ambient_basis.push_back(std::move(e));
    }
  } else {
    ambient_basis = exactla::nullspace(RationalMatrix::from_rows(ambient_equalities));
    if (ambient_basis.empty()) return {};
  }
  std::size_t w = ambient_basis.size();

  // constraint rows expressed in W coordinates, zero rows dropped
  std::vector<RatVec> constraint_rows;
  for (const RatVec& p : s.points) {
    RatVec row(w);
    for (std::size_t j = 0; j < w; ++j) row[j] = dot(p, ambient_basis[j]);
    if (!is_zero_vec(row)) constraint_rows.push_back(std::move(row));
  }

  auto lift = [&](const RatVec& z) {
    RatVec y(s.dim, Rat(0));
    for (std::size_t j = 0; j < z.size(); ++j)
      for (std::size_t c = 0; c < s.dim; ++c) y[c] += z[j] * ambient_basis[j][c];
    return primitive_integer_direction(y);
  };

  std::vector<IntVec> out;
  if (constraint_rows.empty()) {
    // no effective constraints: the cone is all of W
    for (std::size_t j = 0; j < w; ++j) {
      RatVec z(w, Rat(0));
      z[j] = 1;
      out.push_back(lift(z));
      z[j] = -1;
      out.push_back(lift(z));
    }
  } else {
    RationalMatrix cmat = RationalMatrix::from_rows(constraint_rows);
    std::vector<RatVec> lineality = exactla::nullspace(cmat);
    std::vector<RatVec> pointed_basis = exactla::row_space_basis(cmat);
    std::size_t k = pointed_basis.size();

    // constraints restricted to the pointed part span(pointed_basis)
    std::vector<RatVec> reduced;
    for (const RatVec& row : constraint_rows) {
      RatVec rr(k);
      for (std::size_t j = 0; j < k; ++j) rr[j] = dot(row, pointed_basis[j]);
      reduced.push_back(std::move(rr));
    }
    for (const RatVec& u : dd_pointed(reduced, k)) {
      RatVec z(w, Rat(0));
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t c = 0; c < w; ++c) z[c] += u[j] * pointed_basis[j][c];
      out.push_back(lift(z));
    }
    for (const RatVec& l : lineality) {
      out.push_back(lift(l));
      RatVec neg(l.size());
      for (std::size_t c = 0; c < l.size(); ++c) neg[c] = -l[c];
      out.push_back(lift(neg));
    }
  }

  std::sort(out.begin(), out.end(),
            [](const IntVec& a, const IntVec& b) { return lex_less(to_rat_vec(a), to_rat_vec(b)); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace gitstab::convex
