#pragma once

// Dense exact linear algebra over Rational or Scalar.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hkr/errors.hpp"
#include "hkr/scalar.hpp"

namespace hkr {

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const Scalar& s) { return s.is_zero(); }
inline Rational inv(const Rational& q) {
  if (sgn(q) == 0) throw ZeroDivision("1/0");
  return 1 / q;
}
inline Scalar inv(const Scalar& s) { return s.inverse(); }

template <class T>
using Vec = std::vector<T>;
using QVec = Vec<Rational>;
using CVec = Vec<Scalar>;

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<T>& data() const { return data_; }
  std::vector<T>& data() { return data_; }

  Vec<T> row(std::size_t r) const {
    return Vec<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }
  Vec<T> col(std::size_t c) const {
    Vec<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }
  void set_col(std::size_t c, const Vec<T>& v) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!hkr::is_zero(x)) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k)
      if (!hkr::is_zero(o.data_[k])) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k)
      if (!hkr::is_zero(o.data_[k])) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_)
      if (!hkr::is_zero(x)) x *= s;
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
  Matrix operator-() const {
    Matrix m = *this;
    for (auto& x : m.data_) x = -x;
    return m;
  }

  // Skips zero entries, which dominate the sparse basis matrices we use.
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shapes");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (hkr::is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& y = b(k, j);
          if (hkr::is_zero(y)) continue;
          c(i, j) += x * y;
        }
      }
    return c;
  }

  Vec<T> apply(const Vec<T>& v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix-vector shapes");
    Vec<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) {
        const T& x = (*this)(r, c);
        if (hkr::is_zero(x) || hkr::is_zero(v[c])) continue;
        out[r] += x * v[c];
      }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix shapes differ");
  }
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

template <class T>
bool is_zero_vec(const Vec<T>& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

template <class T>
Vec<T> axpy(const T& a, const Vec<T>& x, Vec<T> y) {
  for (std::size_t k = 0; k < y.size(); ++k)
    if (!is_zero(x[k])) y[k] += a * x[k];
  return y;
}

template <class T>
Vec<T> scale(const T& a, Vec<T> x) {
  for (auto& v : x)
    if (!is_zero(v)) v *= a;
  return x;
}

template <class T>
Vec<T> add(Vec<T> x, const Vec<T>& y) {
  for (std::size_t k = 0; k < x.size(); ++k)
    if (!is_zero(y[k])) x[k] += y[k];
  return x;
}

template <class T>
Vec<T> sub(Vec<T> x, const Vec<T>& y) {
  for (std::size_t k = 0; k < x.size(); ++k)
    if (!is_zero(y[k])) x[k] -= y[k];
  return x;
}

inline CVec to_cvec(const QVec& v) { return CVec(v.begin(), v.end()); }

template <class T>
Matrix<T> from_rows(const std::vector<Vec<T>>& rows, std::size_t cols) {
  Matrix<T> m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  return m;
}

inline Matrix<Scalar> to_scalar(const Matrix<Rational>& m) {
  Matrix<Scalar> out(m.rows(), m.cols());
  for (std::size_t k = 0; k < m.data().size(); ++k) out.data()[k] = Scalar(m.data()[k]);
  return out;
}

// In-place reduced row echelon form; returns pivot columns.
template <class T>
std::vector<std::size_t> rref(Matrix<T>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    T iv = inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j)
      if (!is_zero(m(r, j))) m(r, j) *= iv;
    for (std::size_t q = 0; q < m.rows(); ++q) {
      if (q == r || is_zero(m(q, c))) continue;
      T f = m(q, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!is_zero(m(r, j))) m(q, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class T>
std::size_t rank(Matrix<T> m) {
  return rref(m).size();
}

// Basis of {v : m v = 0}, one vector per free column.
template <class T>
std::vector<Vec<T>> kernel(Matrix<T> m) {
  auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec<T>> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec<T> v(m.cols());
    v[f] = T(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (!is_zero(m(r, f))) v[pivots[r]] = -m(r, f);
    out.push_back(std::move(v));
  }
  return out;
}

template <class T>
std::optional<Vec<T>> solve(const Matrix<T>& a, const Vec<T>& b) {
  Matrix<T> aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  Vec<T> x(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
  return x;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("inverse of non-square matrix");
  const std::size_t n = a.rows();
  Matrix<T> aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n + r) = T(1);
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw ZeroDivision("singular matrix");
  Matrix<T> out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = aug(r, n + c);
  return out;
}

// Coefficients p[0..n] of det(t I - a), p[n] = 1 (Faddeev-LeVerrier).
template <class T>
Vec<T> charpoly(const Matrix<T>& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("charpoly of non-square matrix");
  const std::size_t n = a.rows();
  Vec<T> p(n + 1);
  p[n] = T(1);
  Matrix<T> m(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t j = 0; j < n; ++j) m(j, j) += p[n - k + 1];
    m = a * m;
    T tr;
    for (std::size_t j = 0; j < n; ++j) tr += m(j, j);
    p[n - k] = -tr * inv(T(Rational(static_cast<long>(k))));
  }
  return p;
}

template <class T>
T trace(const Matrix<T>& a) {
  T t;
  for (std::size_t j = 0; j < a.rows(); ++j) t += a(j, j);
  return t;
}

// Incrementally built span with fully reduced echelon rows, giving exact
// membership tests and coordinates with respect to the inserted basis.
template <class T>
class Span {
 public:
  Span() = default;
  explicit Span(std::size_t ambient) : ambient_(ambient) {}

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec<T>>& basis() const { return basis_; }

  // Adds v if independent; returns whether it was added.
  bool add(const Vec<T>& v) {
    if (v.size() != ambient_) throw DimensionMismatch("span vector length");
    Vec<T> red = v;
    Vec<T> comb(basis_.size() + 1);
    comb.back() = T(1);
    for (std::size_t r = 0; r < echelon_.size(); ++r) {
      if (is_zero(red[pivots_[r]])) continue;
      T f = red[pivots_[r]];
      sub_scaled(red, echelon_[r], f);
      sub_scaled_prefix(comb, trans_[r], f);
    }
    std::size_t p = 0;
    while (p < ambient_ && is_zero(red[p])) ++p;
    if (p == ambient_) return false;
    T iv = inv(red[p]);
    red = scale(iv, std::move(red));
    comb = scale(iv, std::move(comb));
    for (std::size_t r = 0; r < echelon_.size(); ++r) {
      if (is_zero(echelon_[r][p])) continue;
      T f = echelon_[r][p];
      sub_scaled(echelon_[r], red, f);
      trans_[r].resize(comb.size());
      sub_scaled(trans_[r], comb, f);
    }
    for (auto& t : trans_) t.resize(comb.size());
    echelon_.push_back(std::move(red));
    trans_.push_back(std::move(comb));
    pivots_.push_back(p);
    basis_.push_back(v);
    return true;
  }

  bool contains(const Vec<T>& v) const { return coords(v).has_value(); }

  std::optional<Vec<T>> coords(const Vec<T>& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("span vector length");
    Vec<T> c(basis_.size());
    Vec<T> rebuilt(ambient_);
    for (std::size_t r = 0; r < echelon_.size(); ++r) {
      const T& f = v[pivots_[r]];
      if (is_zero(f)) continue;
      for (std::size_t k = 0; k < c.size(); ++k)
        if (!is_zero(trans_[r][k])) c[k] += f * trans_[r][k];
      for (std::size_t k = 0; k < ambient_; ++k)
        if (!is_zero(echelon_[r][k])) rebuilt[k] += f * echelon_[r][k];
    }
    if (rebuilt != v) return std::nullopt;
    return c;
  }

 private:
  static void sub_scaled(Vec<T>& x, const Vec<T>& y, const T& f) {
    for (std::size_t k = 0; k < y.size(); ++k)
      if (!is_zero(y[k])) x[k] -= f * y[k];
  }
  static void sub_scaled_prefix(Vec<T>& x, const Vec<T>& y, const T& f) {
    for (std::size_t k = 0; k < y.size() && k < x.size(); ++k)
      if (!is_zero(y[k])) x[k] -= f * y[k];
  }

  std::size_t ambient_ = 0;
  std::vector<Vec<T>> basis_;
  std::vector<Vec<T>> echelon_;
  std::vector<Vec<T>> trans_;  // echelon_[r] = sum_k trans_[r][k] * basis_[k]
  std::vector<std::size_t> pivots_;
};

// Rational roots of a polynomial with rational coefficients p[0..n].
std::vector<Rational> rational_roots(const QVec& p);

}  // namespace hkr
