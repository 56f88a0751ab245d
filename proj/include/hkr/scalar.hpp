#pragma once

// Elements of Q(i)(sqrt r_1, ..., sqrt r_k): a finite sum of Gaussian
// rationals times square roots of square-free positive integers.

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace hkr {

using Rational = mpq_class;
using Integer = mpz_class;

// p/q in lowest terms; mpq_class(p, q) alone does not reduce.
inline Rational frac(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

class Scalar {
 public:
  struct Term {
    std::uint64_t radicand;  // square-free, 1 is the rational part
    Rational re;
    Rational im;
  };

  Scalar() = default;
  Scalar(long v) : Scalar(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : Scalar(Rational(v)) {}   // NOLINT(google-explicit-constructor)
  Scalar(const Rational& v);               // NOLINT(google-explicit-constructor)
  Scalar(const Rational& re, const Rational& im);

  static Scalar i();
  // sqrt of a rational; negative arguments give i*sqrt(|q|).
  static Scalar sqrt(const Rational& q);
  // Builds a canonical value from arbitrary (not necessarily reduced) terms.
  static Scalar from_terms(std::vector<Term> terms);
  static Scalar parse(std::string_view text);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_rational() const;
  bool is_real() const;
  // Valid only when is_rational().
  Rational to_rational() const;

  Scalar conj() const;
  Scalar inverse() const;
  Scalar operator-() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string str() const;

 private:
  void add_scaled(const Scalar& o, int sign);
  std::vector<Term> terms_;  // sorted by radicand, no zero coefficients
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Square-free part of a positive integer and the square root of the rest:
// n = root^2 * squarefree.
void squarefree_split(const Integer& n, Integer& root, Integer& squarefree);

}  // namespace hkr
