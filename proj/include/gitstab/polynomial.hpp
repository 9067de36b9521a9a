#pragma once

#include <map>
#include <string>
#include <vector>

#include "gitstab/rational.hpp"

namespace gitstab::polyalg {

// Exponent vector of a monomial in x_0..x_n.
struct Monomial {
  std::vector<int> exponents;

  int degree() const;
  bool operator==(const Monomial& other) const = default;
};

// Canonical monomial order: graded-lexicographic with x_0 > x_1 > ... > x_n.
// Used everywhere a monomial list or a column indexing must be reproducible.
bool monomial_before(const Monomial& a, const Monomial& b);

struct MonomialOrderLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return monomial_before(a, b);
  }
};

// All degree-m monomials in n+1 variables, in canonical order.
std::vector<Monomial> monomials_of_degree(int n, int m);

class ZeroPolynomial : public std::runtime_error {
 public:
  ZeroPolynomial() : std::runtime_error("polynomial is identically zero") {}
};

class NonHomogeneous : public std::runtime_error {
 public:
  explicit NonHomogeneous(const std::string& what) : std::runtime_error(what) {}
};

// Polynomial with exact rational coefficients; zero coefficients are never
// stored. Terms are kept in the canonical monomial order.
class Polynomial {
 public:
  explicit Polynomial(int n) : n_(n) {}

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Rat, MonomialOrderLess>& terms() const { return terms_; }

  void add_term(const Monomial& mono, const Rat& coeff);
  Rat coefficient(const Monomial& mono) const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(const Rat& scalar) const;

  // Degree of the polynomial; throws ZeroPolynomial on the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  void require_homogeneous(const std::string& context) const;

  // Canonical rendering, terms in monomial order, e.g. "x0*x2 - x1^2".
  std::string str() const;

  bool operator==(const Polynomial& other) const {
    return n_ == other.n_ && terms_ == other.terms_;
  }

 private:
  int n_;
  std::map<Monomial, Rat, MonomialOrderLess> terms_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : std::runtime_error(message + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Parses "3*x0^2*x1 - 1/2*x1^3": variables x0..xn, integer or rational
// coefficients, ^ powers, * products, +/- between terms.
Polynomial parse_polynomial(const std::string& text, int n);

}  // namespace gitstab::polyalg
