#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gitstab {

// Exact rational scalar. mpq_class arithmetic keeps values canonical as long
// as they start canonical, so all construction funnels through make_rat.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat make_rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Accepts "n", "-n", "n/d".
inline Rat parse_rat(const std::string& text) {
  Rat q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + text);
  if (q.get_den() == 0)
    throw std::invalid_argument("rational with zero denominator: " + text);
  q.canonicalize();
  return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

using RatVec = std::vector<Rat>;
using IntVec = std::vector<Int>;

inline Rat dot(const RatVec& a, const RatVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rat dot(const RatVec& a, const IntVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
  return s;
}

inline Rat norm_squared(const RatVec& a) { return dot(a, a); }

inline bool is_zero_vec(const RatVec& a) {
  for (const Rat& x : a)
    if (x != 0) return false;
  return true;
}

// Scales a nonzero rational vector to the unique primitive integer vector on
// the same ray (lcm of denominators, then divide by the gcd of entries).
// The direction is preserved, never flipped.
inline IntVec primitive_integer_direction(const RatVec& v) {
  Int scale = 1;
  for (const Rat& x : v) scale = lcm(scale, x.get_den());
  IntVec w(v.size());
  Int g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rat scaled = v[i] * Rat(scale);
    w[i] = scaled.get_num();  // denominator is 1 by construction
    g = gcd(g, w[i]);
  }
  if (g == 0) throw std::invalid_argument("zero vector has no primitive direction");
  for (Int& x : w) x /= g;
  return w;
}

inline RatVec to_rat_vec(const IntVec& v) {
  RatVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

// Exact square root when q is the square of a rational, nothing otherwise.
inline std::optional<Rat> exact_sqrt(const Rat& q) {
  if (q < 0) return std::nullopt;
  const Int& num = q.get_num();
  const Int& den = q.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 ||
      mpz_perfect_square_p(den.get_mpz_t()) == 0)
    return std::nullopt;
  Int rnum, rden;
  mpz_sqrt(rnum.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rden.get_mpz_t(), den.get_mpz_t());
  return make_rat(rnum, rden);
}

// Lexicographic order used wherever a canonical, reproducible ordering of
// rational vectors is needed (state weights, ray lists, map keys).
inline bool lex_less(const RatVec& a, const RatVec& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

}  // namespace gitstab
