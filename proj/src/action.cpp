#include "gitstab/action.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gitstab/ideal.hpp"

namespace gitstab::gitcore {

using exactla::RationalMatrix;
using polyalg::Monomial;
using polyalg::Polynomial;

GroupElement GroupElement::make(RationalMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("group element must be square");
  if (exactla::determinant(m) == 0)
    throw std::invalid_argument("group element must be invertible");
  return GroupElement{std::move(m)};
}

GroupElement GroupElement::identity(int n) {
  return GroupElement{RationalMatrix::identity(static_cast<std::size_t>(n) + 1)};
}

GroupElement GroupElement::permutation(int n, const std::vector<int>& sigma) {
  std::size_t size = static_cast<std::size_t>(n) + 1;
  if (sigma.size() != size) throw std::invalid_argument("permutation of wrong length");
  RationalMatrix m(size, size);
  std::vector<bool> seen(size, false);
  for (std::size_t i = 0; i < size; ++i) {
    int target = sigma[i];
    if (target < 0 || static_cast<std::size_t>(target) >= size || seen[target])
      throw std::invalid_argument("not a permutation");
    seen[target] = true;
    m.at(static_cast<std::size_t>(target), i) = 1;
  }
  return GroupElement{std::move(m)};
}

bool GroupElement::is_identity() const {
  return matrix == RationalMatrix::identity(matrix.rows());
}

bool GroupElement::is_monomial() const {
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    std::size_t nonzero = 0;
    for (std::size_t j = 0; j < matrix.cols(); ++j)
      if (matrix.at(i, j) != 0) ++nonzero;
    if (nonzero != 1) return false;
  }
  for (std::size_t j = 0; j < matrix.cols(); ++j) {
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < matrix.rows(); ++i)
      if (matrix.at(i, j) != 0) ++nonzero;
    if (nonzero != 1) return false;
  }
  return true;
}

Polynomial act_on_form(const GroupElement& g, const Polynomial& f) {
  int n = f.n();
  if (g.matrix.rows() != static_cast<std::size_t>(n) + 1)
    throw std::invalid_argument("group element size does not match variable count");

  // image of each variable: g.x_i = sum_j g_ji x_j
  std::vector<Polynomial> images;
  for (int i = 0; i <= n; ++i) {
    Polynomial li(n);
    for (int j = 0; j <= n; ++j) {
      std::vector<int> exps(static_cast<std::size_t>(n) + 1, 0);
      exps[static_cast<std::size_t>(j)] = 1;
      li.add_term(Monomial{exps}, g.matrix.at(static_cast<std::size_t>(j),
                                              static_cast<std::size_t>(i)));
    }
    images.push_back(std::move(li));
  }

  std::map<std::pair<int, int>, Polynomial> power_cache;
  auto image_power = [&](int var, int e) -> const Polynomial& {
    auto key = std::make_pair(var, e);
    auto it = power_cache.find(key);
    if (it != power_cache.end()) return it->second;
    Polynomial acc(n);
    acc.add_term(Monomial{std::vector<int>(static_cast<std::size_t>(n) + 1, 0)}, Rat(1));
    for (int k = 0; k < e; ++k) acc = acc * images[static_cast<std::size_t>(var)];
    return power_cache.emplace(key, std::move(acc)).first->second;
  };

  Polynomial out(n);
  for (const auto& [mono, coeff] : f.terms()) {
    Polynomial term(n);
    term.add_term(Monomial{std::vector<int>(static_cast<std::size_t>(n) + 1, 0)}, coeff);
    for (int i = 0; i <= n; ++i) {
      int e = mono.exponents[static_cast<std::size_t>(i)];
      if (e > 0) term = term * image_power(i, e);
    }
    out = out + term;
  }
  return out;
}

namespace {

// Column i of a monomial matrix has its unique nonzero entry in row sigma(i).
std::vector<std::size_t> monomial_sigma(const GroupElement& g) {
  if (!g.is_monomial()) throw NotMonomialMatrix();
  std::vector<std::size_t> sigma(g.matrix.cols());
  for (std::size_t j = 0; j < g.matrix.cols(); ++j)
    for (std::size_t i = 0; i < g.matrix.rows(); ++i)
      if (g.matrix.at(i, j) != 0) sigma[j] = i;
  return sigma;
}

}  // namespace

WeightVector pushforward_weight(const GroupElement& g, const WeightVector& chi) {
  std::vector<std::size_t> sigma = monomial_sigma(g);
  if (chi.size() != sigma.size()) throw std::invalid_argument("weight of wrong length");
  WeightVector out(chi.size());
  for (std::size_t i = 0; i < chi.size(); ++i) out[sigma[i]] = chi[i];
  return out;
}

State pushforward_state(const GroupElement& g, const State& s) {
  std::vector<WeightVector> images;
  for (const WeightVector& chi : s.weights) images.push_back(pushforward_weight(g, chi));
  return State::make(s.context, std::move(images));
}

TransportedOneParamSubgroup transport_1ps(const GroupElement& g, const OneParamSubgroup& rho) {
  if (g.matrix.rows() != rho.coords.size())
    throw std::invalid_argument("group element size does not match cocharacter");
  return TransportedOneParamSubgroup{g, rho};
}

Rat hm_index_via_transport(const polyalg::Polynomial& f, const TorusContext& ctx,
                           const TransportedOneParamSubgroup& t) {
  return hm_index(polyalg::state_of_form(act_on_form(t.g, f), ctx), t.rho);
}

GroupElement random_group_element(std::mt19937_64& rng, int n, long entry_bound) {
  if (entry_bound < 1) throw std::invalid_argument("entry bound must be positive");
  std::uniform_int_distribution<long> dist(-entry_bound, entry_bound);
  std::size_t size = static_cast<std::size_t>(n) + 1;
  for (int attempt = 0; attempt < 10000; ++attempt) {
    RationalMatrix m(size, size);
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j) m.at(i, j) = Rat(dist(rng));
    if (exactla::determinant(m) != 0) return GroupElement{std::move(m)};
  }
  throw SamplerExhausted();
}

std::vector<GroupElement> all_permutation_matrices(int n) {
  std::vector<int> sigma(static_cast<std::size_t>(n) + 1);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<GroupElement> out;
  do {
    out.push_back(GroupElement::permutation(n, sigma));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

}  // namespace gitstab::gitcore
