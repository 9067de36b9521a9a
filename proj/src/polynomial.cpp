#include "gitstab/polynomial.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace gitstab::polyalg {

int Monomial::degree() const {
  return std::accumulate(exponents.begin(), exponents.end(), 0);
}

bool monomial_before(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  return a.exponents > b.exponents;  // lex with x_0 > x_1 > ...
}

std::vector<Monomial> monomials_of_degree(int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("bad monomial parameters");
  std::vector<Monomial> out;
  std::vector<int> exps(static_cast<std::size_t>(n) + 1, 0);
  // depth-first, largest exponent on x_0 first, which is canonical order
  auto rec = [&](auto&& self, std::size_t var, int remaining) -> void {
    if (var + 1 == exps.size()) {
      exps[var] = remaining;
      out.push_back(Monomial{exps});
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      exps[var] = e;
      self(self, var + 1, remaining - e);
    }
    exps[var] = 0;
  };
  rec(rec, 0, m);
  return out;
}

void Polynomial::add_term(const Monomial& mono, const Rat& coeff) {
  if (static_cast<int>(mono.exponents.size()) != n_ + 1)
    throw std::invalid_argument("monomial in wrong number of variables");
  for (int e : mono.exponents)
    if (e < 0) throw std::invalid_argument("negative exponent");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(mono, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Rat Polynomial::coefficient(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? Rat(0) : it->second;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  if (n_ != other.n_) throw std::invalid_argument("variable count mismatch");
  Polynomial out = *this;
  for (const auto& [mono, coeff] : other.terms_) out.add_term(mono, coeff);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (n_ != other.n_) throw std::invalid_argument("variable count mismatch");
  Polynomial out(n_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : other.terms_) {
      Monomial prod{std::vector<int>(ma.exponents.size())};
      for (std::size_t i = 0; i < prod.exponents.size(); ++i)
        prod.exponents[i] = ma.exponents[i] + mb.exponents[i];
      out.add_term(prod, ca * cb);
    }
  return out;
}

Polynomial Polynomial::operator*(const Rat& scalar) const {
  Polynomial out(n_);
  if (scalar == 0) return out;
  for (const auto& [mono, coeff] : terms_) out.add_term(mono, coeff * scalar);
  return out;
}

int Polynomial::degree() const {
  if (terms_.empty()) throw ZeroPolynomial();
  int d = 0;
  for (const auto& [mono, coeff] : terms_) d = std::max(d, mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->first.degree();
  for (const auto& [mono, coeff] : terms_)
    if (mono.degree() != d) return false;
  return true;
}

void Polynomial::require_homogeneous(const std::string& context) const {
  if (!is_homogeneous())
    throw NonHomogeneous(context + ": polynomial is not homogeneous");
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [mono, coeff] : terms_) {
    Rat c = coeff;
    if (first) {
      if (c < 0) {
        out << "-";
        c = -c;
      }
    } else {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    bool constant = mono.degree() == 0;
    bool wrote_coeff = false;
    if (c != 1 || constant) {
      out << rat_str(c);
      wrote_coeff = true;
    }
    for (std::size_t i = 0; i < mono.exponents.size(); ++i) {
      if (mono.exponents[i] == 0) continue;
      if (wrote_coeff) out << "*";
      wrote_coeff = true;
      out << "x" << i;
      if (mono.exponents[i] > 1) out << "^" << mono.exponents[i];
    }
  }
  return out.str();
}

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;
  int n;

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool at_end() {
    skip_space();
    return pos >= text.size();
  }

  char peek() {
    skip_space();
    return pos < text.size() ? text[pos] : '\0';
  }

  [[noreturn]] void fail(const std::string& message) { throw ParseError(message, pos); }

  Int read_integer() {
    skip_space();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected a number");
    return Int(text.substr(start, pos - start));
  }

  // factor := rational | x<idx>(^exp)?
  void read_factor(Rat& coeff, std::vector<int>& exps) {
    skip_space();
    if (pos >= text.size()) fail("expected a factor");
    char c = text[pos];
    if (c == 'x') {
      ++pos;
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        fail("expected a variable index after 'x'");
      Int idx = read_integer();
      if (idx > n) fail("variable index exceeds n = " + std::to_string(n));
      std::size_t var = idx.get_ui();
      int power = 1;
      skip_space();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        Int p = read_integer();
        if (!p.fits_sint_p()) fail("exponent too large");
        power = static_cast<int>(p.get_si());
      }
      exps[var] += power;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      Int num = read_integer();
      Int den = 1;
      skip_space();
      if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = read_integer();
        if (den == 0) fail("zero denominator");
      }
      coeff *= make_rat(num, den);
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, int n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  Parser p{text, 0, n};
  Polynomial poly(n);
  bool any_term = false;
  while (!p.at_end()) {
    Rat sign = 1;
    char c = p.peek();
    if (c == '+' || c == '-') {
      if (c == '-') sign = -1;
      ++p.pos;
    } else if (any_term) {
      p.fail("expected '+' or '-' between terms");
    }
    Rat coeff = sign;
    std::vector<int> exps(static_cast<std::size_t>(n) + 1, 0);
    p.read_factor(coeff, exps);
    while (p.peek() == '*') {
      ++p.pos;
      p.read_factor(coeff, exps);
    }
    poly.add_term(Monomial{exps}, coeff);
    any_term = true;
  }
  if (!any_term) p.fail("empty polynomial");
  return poly;
}

}  // namespace gitstab::polyalg
