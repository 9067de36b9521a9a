#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "gitstab/matrix.hpp"
#include "gitstab/polynomial.hpp"
#include "gitstab/torus.hpp"

namespace gitstab::gitcore {

class NotMonomialMatrix : public std::runtime_error {
 public:
  NotMonomialMatrix() : std::runtime_error("matrix is not monomial") {}
};

class SamplerExhausted : public std::runtime_error {
 public:
  SamplerExhausted() : std::runtime_error("every sampled matrix was singular") {}
};

// Invertible (n+1) x (n+1) rational matrix acting by substitution on
// coordinates: g.x_i = sum_j g_ji x_j.
struct GroupElement {
  exactla::RationalMatrix matrix;

  static GroupElement make(exactla::RationalMatrix m);  // rejects singular
  static GroupElement identity(int n);
  static GroupElement permutation(int n, const std::vector<int>& sigma);  // x_i -> x_sigma(i)
  int n() const { return static_cast<int>(matrix.rows()) - 1; }
  bool is_identity() const;
  bool is_monomial() const;
};

// Substitution action with exact coefficient arithmetic; degree is preserved.
polyalg::Polynomial act_on_form(const GroupElement& g, const polyalg::Polynomial& f);

// For a monomial matrix g = (permutation sigma) x (invertible diagonal), the
// induced map on characters: coordinate i of the image is coordinate
// sigma^{-1}(i) of the input. Matches state_of_form(act_on_form(g, f)) on
// states of forms. Throws NotMonomialMatrix otherwise.
State pushforward_state(const GroupElement& g, const State& s);
WeightVector pushforward_weight(const GroupElement& g, const WeightVector& chi);

// The 1-PS t -> g^{-1} rho(t) g of the conjugate torus g^{-1} R g,
// represented by the pair (g, rho). Its Hilbert-Mumford index on v equals
// hm_index(state of g.v, rho).
struct TransportedOneParamSubgroup {
  GroupElement g;
  OneParamSubgroup rho;
};

TransportedOneParamSubgroup transport_1ps(const GroupElement& g, const OneParamSubgroup& rho);

Rat hm_index_via_transport(const polyalg::Polynomial& f, const TorusContext& ctx,
                           const TransportedOneParamSubgroup& t);

// Uniform integer entries in [-entry_bound, entry_bound], resampled until the
// matrix is invertible.
GroupElement random_group_element(std::mt19937_64& rng, int n, long entry_bound);

std::vector<GroupElement> all_permutation_matrices(int n);

}  // namespace gitstab::gitcore
