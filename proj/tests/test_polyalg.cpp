#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "gitstab/action.hpp"
#include "gitstab/ideal.hpp"
#include "gitstab/worst.hpp"
#include "oracles.hpp"

using namespace gitstab;
using gitcore::Mode;
using gitcore::State;
using gitcore::TorusContext;
using polyalg::DegreePiece;
using polyalg::IdealInput;
using polyalg::Monomial;
using polyalg::Polynomial;

namespace {

const TorusContext SL2{1, Mode::SL};
const TorusContext SL3{2, Mode::SL};
const TorusContext GL3{2, Mode::GL};

Polynomial form(const std::string& text, int n) { return polyalg::parse_polynomial(text, n); }

IdealInput conic() { return IdealInput::make({form("x0*x2 - x1^2", 2)}, 2); }

// all ell-subsets of the degree-m monomials whose column sums agree
bool trivial_wedge_exists(int n, int m, int ell) {
  std::vector<Monomial> monos = polyalg::monomials_of_degree(n, m);
  if (ell > static_cast<int>(monos.size())) return false;
  std::vector<std::size_t> idx(ell);
  for (int i = 0; i < ell; ++i) idx[i] = i;
  for (;;) {
    std::vector<int> sums(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t c : idx)
      for (std::size_t j = 0; j < sums.size(); ++j) sums[j] += monos[c].exponents[j];
    bool equal = true;
    for (std::size_t j = 1; j < sums.size(); ++j)
      if (sums[j] != sums[0]) equal = false;
    if (equal) return true;
    std::size_t i = idx.size();
    while (i > 0 && idx[i - 1] == monos.size() - idx.size() + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < idx.size(); ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

TEST_CASE("degree_piece dimensions") {
  CHECK(polyalg::degree_piece(conic(), 2).ell == 1);
  CHECK(polyalg::degree_piece(conic(), 3).ell == 3);
  IdealInput maximal = IdealInput::make({form("x0", 1), form("x1", 1)}, 1);
  CHECK(polyalg::degree_piece(maximal, 1).ell == 2);
  CHECK_THROWS_AS(polyalg::degree_piece(conic(), 1), polyalg::DegreeTooSmall);
}

TEST_CASE("plucker_state of the conic at m=2") {
  State s = polyalg::plucker_state(polyalg::degree_piece(conic(), 2), SL3);
  REQUIRE(s.weights.size() == 2);
  CHECK(s.weights[0] == RatVec{make_rat(-2, 3), make_rat(4, 3), make_rat(-2, 3)});
  CHECK(s.weights[1] == RatVec{make_rat(1, 3), make_rat(-2, 3), make_rat(1, 3)});
}

TEST_CASE("plucker_state of a full wedge is the single invariant weight") {
  IdealInput maximal = IdealInput::make({form("x0", 1), form("x1", 1)}, 1);
  State s = polyalg::plucker_state(polyalg::degree_piece(maximal, 1), SL2);
  REQUIRE(s.weights.size() == 1);
  CHECK(s.weights[0] == RatVec{Rat(0), Rat(0)});
}

TEST_CASE("wedge weights of the conic at m=3 all have coordinate sum ell*m") {
  DegreePiece piece = polyalg::degree_piece(conic(), 3);
  State s = polyalg::plucker_state(piece, GL3);  // GL mode: unprojected sums
  CHECK(piece.ell == 3);
  for (const RatVec& w : s.weights) {
    Rat total = 0;
    for (const Rat& c : w) total += c;
    CHECK(total == Rat(static_cast<long>(piece.ell) * 3));
  }
}

TEST_CASE("plucker_state respects the enumeration budget") {
  polyalg::EnumerationOptions tiny;
  tiny.budget = 10;
  CHECK_THROWS_AS(polyalg::plucker_state(polyalg::degree_piece(conic(), 3), SL3, tiny),
                  polyalg::TooLarge);
}

TEST_CASE("plucker_state is independent of the thread partition") {
  DegreePiece piece = polyalg::degree_piece(conic(), 3);
  polyalg::EnumerationOptions serial, parallel;
  parallel.threads = 3;
  CHECK(polyalg::plucker_state(piece, SL3, serial) ==
        polyalg::plucker_state(piece, SL3, parallel));
}

TEST_CASE("vertex_oracle picks the initial monomial of the conic") {
  DegreePiece piece = polyalg::degree_piece(conic(), 2);
  CHECK(polyalg::vertex_oracle(piece, RatVec{Rat(1), Rat(0), Rat(0)}, SL3) ==
        RatVec{make_rat(1, 3), make_rat(-2, 3), make_rat(1, 3)});
  CHECK(polyalg::vertex_oracle(piece, RatVec{Rat(0), Rat(1), Rat(0)}, SL3) ==
        RatVec{make_rat(-2, 3), make_rat(4, 3), make_rat(-2, 3)});
}

TEST_CASE("vertex_oracle at w=0 lands inside the Pluecker state") {
  for (int m : {2, 3}) {
    DegreePiece piece = polyalg::degree_piece(conic(), m);
    State s = polyalg::plucker_state(piece, SL3);
    RatVec vertex = polyalg::vertex_oracle(piece, RatVec(3, Rat(0)), SL3);
    CHECK(std::binary_search(s.weights.begin(), s.weights.end(), vertex, lex_less));
  }
}

TEST_CASE("vertex_oracle maximizes the weight functional over the Pluecker state") {
  std::mt19937_64 rng(1729);
  for (int m : {2, 3}) {
    DegreePiece piece = polyalg::degree_piece(conic(), m);
    State s = polyalg::plucker_state(piece, SL3);
    for (int trial = 0; trial < 25; ++trial) {
      RatVec w(3);
      for (Rat& c : w) c = testing::random_rat(rng, 4, 3);
      RatVec vertex = polyalg::vertex_oracle(piece, w, SL3);
      CHECK(std::binary_search(s.weights.begin(), s.weights.end(), vertex, lex_less));
      Rat best = dot(w, vertex);
      for (const RatVec& chi : s.weights) CHECK(dot(w, chi) <= best);
    }
  }
}

TEST_CASE("nonzero minors form a matroid: basis exchange spot check") {
  std::mt19937_64 rng(31415);
  for (int trial = 0; trial < 10; ++trial) {
    std::size_t rows = 2, cols = 5;
    exactla::RationalMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Rat(static_cast<long>(rng() % 5) - 2);
    if (exactla::rank(m) != rows) continue;

    std::vector<std::vector<std::size_t>> bases;
    for (std::size_t a = 0; a < cols; ++a)
      for (std::size_t b = a + 1; b < cols; ++b) {
        exactla::RationalMatrix sub(rows, 2);
        for (std::size_t i = 0; i < rows; ++i) {
          sub.at(i, 0) = m.at(i, a);
          sub.at(i, 1) = m.at(i, b);
        }
        if (exactla::rank(sub) == 2) bases.push_back({a, b});
      }
    auto is_basis = [&](std::size_t a, std::size_t b) {
      if (a > b) std::swap(a, b);
      return std::find(bases.begin(), bases.end(), std::vector<std::size_t>{a, b}) != bases.end();
    };
    for (const auto& b1 : bases)
      for (const auto& b2 : bases)
        for (std::size_t e : b1) {
          if (std::find(b2.begin(), b2.end(), e) != b2.end()) continue;
          std::size_t keep = b1[0] == e ? b1[1] : b1[0];
          bool exchanged = false;
          for (std::size_t f : b2)
            if (std::find(b1.begin(), b1.end(), f) == b1.end() && is_basis(keep, f))
              exchanged = true;
          CHECK(exchanged);
        }
  }
}

TEST_CASE("trivial_weight_necessary on the quoted cases") {
  CHECK(polyalg::trivial_weight_necessary(1, 2, 2));
  CHECK_FALSE(polyalg::trivial_weight_necessary(1, 3, 1));
  CHECK(polyalg::trivial_weight_necessary(2, 3, 2));
}

TEST_CASE("trivial_weight_necessary matches the exhaustive wedge search") {
  for (int n = 1; n <= 2; ++n)
    for (int m = 1; m <= 3; ++m)
      for (int ell = 1; ell <= 4; ++ell) {
        auto count = polyalg::binomial_u64(
            static_cast<std::uint64_t>(polyalg::monomials_of_degree(n, m).size()), ell);
        if (!count || *count == 0) continue;  // ell exceeds the monomial count
        CHECK(polyalg::trivial_weight_necessary(n, m, ell) == trivial_wedge_exists(n, m, ell));
      }
}

TEST_CASE("hypersurface_generic_state") {
  State binary = polyalg::hypersurface_generic_state(1, 2, SL2);
  CHECK(binary.weights == std::vector<RatVec>{
                              RatVec{Rat(-1), Rat(1)}, RatVec{Rat(0), Rat(0)},
                              RatVec{Rat(1), Rat(-1)}});
  State planes = polyalg::hypersurface_generic_state(2, 1, SL3);
  CHECK(planes.weights.size() == 3);
  for (int n = 1; n <= 3; ++n)
    for (int d = 1; d <= 4; ++d)
      CHECK(polyalg::hypersurface_generic_state(n, d, TorusContext{n, Mode::SL}).weights.size() ==
            polyalg::monomials_of_degree(n, d).size());
}

TEST_CASE("state_of_form") {
  CHECK(polyalg::state_of_form(form("x0*x2 - x1^2", 2), SL3).weights.size() == 2);
  CHECK(polyalg::state_of_form(form("x0^4", 1), SL2).weights ==
        std::vector<RatVec>{RatVec{Rat(2), Rat(-2)}});
  Polynomial full(2);
  for (const auto& mono : polyalg::monomials_of_degree(2, 3)) full.add_term(mono, Rat(1));
  CHECK(polyalg::state_of_form(full, SL3) == polyalg::hypersurface_generic_state(2, 3, SL3));
  CHECK_THROWS_AS(polyalg::state_of_form(Polynomial(2), SL3), polyalg::ZeroPolynomial);
  CHECK_THROWS_AS(polyalg::state_of_form(form("x0 + x1^2", 1), SL2), polyalg::NonHomogeneous);
}

TEST_CASE("Pluecker states push forward along monomial matrices") {
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 6; ++trial) {
    Polynomial f = testing::random_form(rng, 2, 2);
    IdealInput principal = IdealInput::make({f}, 2);
    for (const auto& g : gitcore::all_permutation_matrices(2)) {
      IdealInput moved = IdealInput::make({gitcore::act_on_form(g, f)}, 2);
      for (int m : {2, 3}) {
        State lhs = polyalg::plucker_state(polyalg::degree_piece(moved, m), SL3);
        State rhs = gitcore::pushforward_state(
            g, polyalg::plucker_state(polyalg::degree_piece(principal, m), SL3));
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("twisted cubic Hilbert point at m=2") {
  TorusContext sl4{3, Mode::SL};
  IdealInput twisted = IdealInput::make(
      {form("x0*x2 - x1^2", 3), form("x0*x3 - x1*x2", 3), form("x1*x3 - x2^2", 3)}, 3);
  DegreePiece piece = polyalg::degree_piece(twisted, 2);
  CHECK(piece.ell == 3);  // 10 quadrics minus h^0 of degree 6 on the curve
  State s = polyalg::plucker_state(piece, sl4);
  // wedge weights carry total exponent sum 6 before projection, so 0 after
  for (const RatVec& w : s.weights) {
    Rat total = 0;
    for (const Rat& c : w) total += c;
    CHECK(total == 0);
  }
  // generically stable as a Hilbert point of SL_4
  gitcore::StateSource src = gitcore::HilbertSource{sl4, twisted, 2};
  CHECK(gitcore::check_generic_stable(src, gitcore::SamplerConfig{60, 5, 6, 303}).verdict ==
        gitcore::Verdict::GenericallyStable);
}

TEST_CASE("monomial order and enumeration") {
  auto monos = polyalg::monomials_of_degree(2, 2);
  REQUIRE(monos.size() == 6);
  CHECK(monos.front().exponents == std::vector<int>{2, 0, 0});
  CHECK(monos.back().exponents == std::vector<int>{0, 0, 2});
  for (std::size_t i = 0; i + 1 < monos.size(); ++i)
    CHECK(polyalg::monomial_before(monos[i], monos[i + 1]));
}
