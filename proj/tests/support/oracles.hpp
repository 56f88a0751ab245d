#pragma once

// Independent reference computations used by the tests. None of these
// call into the code paths they are compared against.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "hkr/rootsys.hpp"

namespace hkr::oracle {

// Determinant by the permutation expansion.
template <class T>
T leibniz_det(const Matrix<T>& a) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  T total;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    T term(1);
    for (std::size_t i = 0; i < n; ++i) term = term * a(i, perm[i]);
    total = inversions % 2 ? T(total - term) : T(total + term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Power series of 1/det(1 - t g) up to t^order.
inline QVec inverse_det_series(const Matrix<Rational>& g, int order) {
  const std::size_t n = g.rows();
  // det(1 - t g) as a polynomial in t, from Leibniz on entries (delta - t g).
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  QVec den(n + 1);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    QVec term{Rational(1)};
    for (std::size_t i = 0; i < n; ++i) {
      Rational c0 = i == perm[i] ? 1 : 0;
      Rational c1 = -g(i, perm[i]);
      QVec next(term.size() + 1);
      for (std::size_t k = 0; k < term.size(); ++k) {
        next[k] += term[k] * c0;
        next[k + 1] += term[k] * c1;
      }
      term = std::move(next);
    }
    for (std::size_t k = 0; k <= n; ++k) den[k] += inversions % 2 ? Rational(-term[k]) : term[k];
  } while (std::next_permutation(perm.begin(), perm.end()));
  QVec inv(order + 1);
  inv[0] = 1 / den[0];
  for (int k = 1; k <= order; ++k) {
    Rational acc;
    for (int j = 1; j <= k && j <= static_cast<int>(n); ++j) acc += den[j] * inv[k - j];
    inv[k] = -acc / den[0];
  }
  return inv;
}

// Degrees of the basic invariants of a finite reflection group, read off
// the Molien series prod 1/(1 - t^d).
inline std::vector<int> molien_degrees(const WeylGroup& w, int order) {
  QVec series(order + 1);
  for (const auto& g : w.elements) {
    QVec s = inverse_det_series(g, order);
    for (int k = 0; k <= order; ++k) series[k] += s[k];
  }
  for (auto& c : series) c /= static_cast<long>(w.order());
  std::vector<int> degrees;
  const std::size_t rank = w.generators.empty() ? 0 : w.generators[0].rows();
  while (degrees.size() < rank) {
    int d = 1;
    while (d <= order && sgn(series[d]) == 0) ++d;
    if (d > order) break;
    // Multiply by (1 - t^d) once per basic invariant of that degree.
    long mult = series[d].get_num().get_si();
    for (long k = 0; k < mult; ++k) {
      degrees.push_back(d);
      for (int j = order; j >= d; --j) series[j] -= series[j - d];
    }
  }
  return degrees;
}

// Simple roots as unit vectors with a symmetric form reproducing the
// Cartan matrix (connected diagrams).
inline std::pair<std::vector<QVec>, Matrix<Rational>> symmetrized(const Matrix<Rational>& cartan) {
  const std::size_t r = cartan.rows();
  std::vector<Rational> len2(r);
  len2[0] = 2;
  std::vector<bool> done(r, false);
  done[0] = true;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        if (done[i] && !done[j] && sgn(cartan(i, j)) != 0) {
          len2[j] = cartan(j, i) * len2[i] / cartan(i, j);
          done[j] = changed = true;
        }
  }
  Matrix<Rational> b(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) b(i, j) = cartan(i, j) * len2[j] / 2;
  std::vector<QVec> simple;
  for (std::size_t i = 0; i < r; ++i) {
    QVec e(r);
    e[i] = 1;
    simple.push_back(e);
  }
  // weyl_group takes the form on a*; with unit simple roots that is b.
  return {simple, b};
}

inline Rational small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-7, 7), den(1, 5);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

// Scalars over Q(i, sqrt 2, sqrt 3) with small coefficients.
inline Scalar small_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 3);
  Scalar s = small_rational(rng);
  if (pick(rng) == 0) s += Scalar(small_rational(rng)) * Scalar::sqrt(2);
  if (pick(rng) == 0) s += Scalar(small_rational(rng)) * Scalar::sqrt(3);
  if (pick(rng) == 0) s += Scalar(0, small_rational(rng)) * Scalar::sqrt(6);
  if (pick(rng) == 0) s += Scalar(0, small_rational(rng));
  return s;
}

inline Scalar nonzero_scalar(std::mt19937_64& rng) {
  Scalar s;
  while (s.is_zero()) s = small_scalar(rng);
  return s;
}

}  // namespace hkr::oracle
