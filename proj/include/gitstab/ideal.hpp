#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gitstab/matrix.hpp"
#include "gitstab/polynomial.hpp"
#include "gitstab/torus.hpp"

namespace gitstab::polyalg {

class DegreeTooSmall : public std::runtime_error {
 public:
  explicit DegreeTooSmall(const std::string& what) : std::runtime_error(what) {}
};

// Budget for l-subset enumeration in plucker_state; beyond it the operation
// fails fast and callers fall back to vertex_oracle sweeps.
class TooLarge : public std::runtime_error {
 public:
  explicit TooLarge(const std::string& what) : std::runtime_error(what) {}
};

struct IdealInput {
  std::vector<Polynomial> generators;  // nonzero, homogeneous
  int n;

  static IdealInput make(std::vector<Polynomial> gens, int n);
};

// Degree-m piece I_m of the ideal, as a reduced-row-echelon basis over the
// canonical degree-m monomial columns.
struct DegreePiece {
  int m;
  std::vector<Monomial> monomial_order;
  exactla::RationalMatrix basis;  // ell rows, in rref
  std::size_t ell;
};

DegreePiece degree_piece(const IdealInput& ideal, int m);

struct EnumerationOptions {
  std::uint64_t budget = 2'000'000;  // max number of l-subsets inspected
  unsigned threads = 1;              // output is independent of the partitioning
};

// Reads GIT_INSTAB_BUDGET if set, else the default budget.
EnumerationOptions enumeration_defaults();

// State of the Hilbert point wedge(I_m): one weight per l-subset of monomial
// columns whose l x l minor of the basis matrix is nonzero (the bases of the
// column matroid, i.e. the nonzero Pluecker coordinates), each weight being
// the projected sum of the chosen exponent vectors. Throws TooLarge when
// C(#monomials, ell) exceeds the budget.
gitcore::State plucker_state(const DegreePiece& piece, const gitcore::TorusContext& ctx,
                             const EnumerationOptions& opts = enumeration_defaults());

// Vertex of the state polytope maximizing w: orders the monomial columns by
// decreasing <w, exponent> with canonical-order tie-break, row-reduces, and
// returns the projected weight of the pivot columns (the initial subspace of
// I_m at the weight order w).
gitcore::WeightVector vertex_oracle(const DegreePiece& piece, const RatVec& w,
                                    const gitcore::TorusContext& ctx);

// Necessary condition for a trivial-weight wedge monomial to exist:
// (n+1) divides ell*m.
bool trivial_weight_necessary(int n, int m, int ell);

// Projected exponent vectors of all degree-d monomials: the generic state of
// any nonzero degree-d hypersurface.
gitcore::State hypersurface_generic_state(int n, int d, const gitcore::TorusContext& ctx);

// Projected support of a nonzero homogeneous polynomial.
gitcore::State state_of_form(const Polynomial& f, const gitcore::TorusContext& ctx);

// C(a, b) without overflow; nullopt when the value exceeds uint64.
std::optional<std::uint64_t> binomial_u64(std::uint64_t a, std::uint64_t b);

}  // namespace gitstab::polyalg
