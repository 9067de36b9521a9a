#include "gitstab/ideal.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <thread>

namespace gitstab::polyalg {

using exactla::RationalMatrix;
using gitcore::State;
using gitcore::TorusContext;
using gitcore::WeightVector;

IdealInput IdealInput::make(std::vector<Polynomial> gens, int n) {
  if (gens.empty()) throw std::invalid_argument("ideal needs at least one generator");
  for (const Polynomial& g : gens) {
    if (g.is_zero()) throw ZeroPolynomial();
    if (g.n() != n) throw std::invalid_argument("generator in wrong number of variables");
    g.require_homogeneous("ideal generator");
  }
  return IdealInput{std::move(gens), n};
}

std::optional<std::uint64_t> binomial_u64(std::uint64_t a, std::uint64_t b) {
  if (b > a) return 0;
  b = std::min(b, a - b);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= b; ++i) {
    acc = acc * (a - b + i) / i;
    if (acc > UINT64_MAX) return std::nullopt;
  }
  return static_cast<std::uint64_t>(acc);
}

DegreePiece degree_piece(const IdealInput& ideal, int m) {
  for (const Polynomial& g : ideal.generators)
    if (g.degree() > m)
      throw DegreeTooSmall("degree " + std::to_string(m) + " is below a generator of degree " +
                           std::to_string(g.degree()));

  std::vector<Monomial> columns = monomials_of_degree(ideal.n, m);
  std::vector<RatVec> rows;
  for (const Polynomial& g : ideal.generators) {
    for (const Monomial& shift : monomials_of_degree(ideal.n, m - g.degree())) {
      RatVec row(columns.size(), Rat(0));
      for (const auto& [mono, coeff] : g.terms()) {
        Monomial prod{std::vector<int>(mono.exponents.size())};
        for (std::size_t i = 0; i < prod.exponents.size(); ++i)
          prod.exponents[i] = mono.exponents[i] + shift.exponents[i];
        auto it = std::lower_bound(columns.begin(), columns.end(), prod, monomial_before);
        row[static_cast<std::size_t>(it - columns.begin())] = coeff;
      }
      rows.push_back(std::move(row));
    }
  }

  exactla::RrefResult red = exactla::rref(RationalMatrix::from_rows(rows));
  if (red.rank == 0) throw ZeroPolynomial();
  RationalMatrix basis(red.rank, columns.size());
  for (std::size_t i = 0; i < red.rank; ++i)
    for (std::size_t j = 0; j < columns.size(); ++j) basis.at(i, j) = red.reduced.at(i, j);
  return DegreePiece{m, std::move(columns), std::move(basis), red.rank};
}

EnumerationOptions enumeration_defaults() {
  EnumerationOptions opts;
  if (const char* env = std::getenv("GIT_INSTAB_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) opts.budget = v;
  }
  return opts;
}

namespace {

bool minor_nonzero(const RationalMatrix& basis, const std::vector<std::size_t>& cols) {
  std::size_t l = basis.rows();
  RationalMatrix sub(l, l);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) sub.at(i, j) = basis.at(i, cols[j]);
  return exactla::rank(sub) == l;
}

// Visits every ell-subset of {0..count-1} in lexicographic order.
template <typename Visit>
void for_each_subset(std::size_t count, std::size_t ell, Visit&& visit) {
  std::vector<std::size_t> idx(ell);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    visit(idx);
    std::size_t i = ell;
    while (i > 0 && idx[i - 1] == count - ell + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < ell; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

State plucker_state(const DegreePiece& piece, const TorusContext& ctx,
                    const EnumerationOptions& opts) {
  std::size_t count = piece.monomial_order.size();
  std::size_t ell = piece.ell;
  auto subsets = binomial_u64(count, ell);
  if (!subsets || *subsets > opts.budget)
    throw TooLarge("C(" + std::to_string(count) + ", " + std::to_string(ell) +
                   ") exceeds the enumeration budget");

  std::size_t vars = ctx.coords();
  auto weight_of = [&](const std::vector<std::size_t>& cols) {
    std::vector<int> total(vars, 0);
    for (std::size_t c : cols)
      for (std::size_t i = 0; i < vars; ++i)
        total[i] += piece.monomial_order[c].exponents[i];
    return gitcore::project_weight(ctx, total);
  };

  std::vector<WeightVector> weights;
  unsigned workers = std::max(1u, opts.threads);
  if (workers == 1) {
    for_each_subset(count, ell, [&](const std::vector<std::size_t>& cols) {
      if (minor_nonzero(piece.basis, cols)) weights.push_back(weight_of(cols));
    });
  } else {
    // each worker takes every workers-th subset; the union is order-free
    std::vector<std::vector<WeightVector>> partial(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w]() {
        std::uint64_t counter = 0;
        for_each_subset(count, ell, [&](const std::vector<std::size_t>& cols) {
          if (counter++ % workers != w) return;
          if (minor_nonzero(piece.basis, cols)) partial[w].push_back(weight_of(cols));
        });
      });
    }
    for (std::thread& t : pool) t.join();
    for (auto& part : partial)
      weights.insert(weights.end(), std::make_move_iterator(part.begin()),
                     std::make_move_iterator(part.end()));
  }
  return State::make(ctx, std::move(weights));
}

WeightVector vertex_oracle(const DegreePiece& piece, const RatVec& w, const TorusContext& ctx) {
  if (w.size() != ctx.coords()) throw std::invalid_argument("weight vector of wrong length");
  std::size_t count = piece.monomial_order.size();

  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::vector<Rat> keys(count);
  for (std::size_t j = 0; j < count; ++j) {
    Rat k = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
      k += w[i] * Rat(piece.monomial_order[j].exponents[i]);
    keys[j] = k;
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    int c = cmp(keys[a], keys[b]);
    if (c != 0) return c > 0;   // decreasing <w, exponent>
    return a < b;               // canonical (lexicographic) tie-break
  });

  RationalMatrix permuted(piece.ell, count);
  for (std::size_t i = 0; i < piece.ell; ++i)
    for (std::size_t j = 0; j < count; ++j) permuted.at(i, j) = piece.basis.at(i, order[j]);
  exactla::RrefResult red = exactla::rref(permuted);

  std::vector<int> total(ctx.coords(), 0);
  for (std::size_t pc : red.pivot_columns) {
    const Monomial& mono = piece.monomial_order[order[pc]];
    for (std::size_t i = 0; i < total.size(); ++i) total[i] += mono.exponents[i];
  }
  return gitcore::project_weight(ctx, total);
}

bool trivial_weight_necessary(int n, int m, int ell) {
  if (n < 1 || m < 1 || ell < 1) throw std::invalid_argument("arguments must be positive");
  return (static_cast<long>(ell) * m) % (n + 1) == 0;
}

State hypersurface_generic_state(int n, int d, const TorusContext& ctx) {
  if (n < 1 || d < 1) throw std::invalid_argument("n and d must be positive");
  std::vector<WeightVector> weights;
  for (const Monomial& mono : monomials_of_degree(n, d))
    weights.push_back(gitcore::project_weight(ctx, mono.exponents));
  return State::make(ctx, std::move(weights));
}

State state_of_form(const Polynomial& f, const TorusContext& ctx) {
  if (f.is_zero()) throw ZeroPolynomial();
  f.require_homogeneous("state of form");
  std::vector<WeightVector> weights;
  for (const auto& [mono, coeff] : f.terms())
    weights.push_back(gitcore::project_weight(ctx, mono.exponents));
  return State::make(ctx, std::move(weights));
}

}  // namespace gitstab::polyalg
