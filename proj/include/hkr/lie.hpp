#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hkr/linalg.hpp"

namespace hkr {

using Mat = Matrix<Scalar>;

inline Rational mulq(const Rational& q, const Rational& x) { return q * x; }
inline Scalar mulq(const Rational& q, const Scalar& x) { return Scalar(q) * x; }

Mat bracket(const Mat& x, const Mat& y);
Mat conj_transpose(const Mat& x);
Vec<Scalar> flatten(const Mat& x);
Mat unflatten(const Vec<Scalar>& v, std::size_t n);

// A subspace of gl(n) over the Scalar field.
class Subspace {
 public:
  explicit Subspace(std::size_t n = 0) : n_(n), span_(n * n) {}
  static Subspace spanned_by(const std::vector<Mat>& gens, std::size_t n);

  std::size_t matrix_size() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Mat>& basis() const { return basis_; }

  bool add(const Mat& x);
  bool contains(const Mat& x) const { return span_.contains(flatten(x)); }
  std::optional<CVec> coords(const Mat& x) const { return span_.coords(flatten(x)); }
  // Same span (dimension and mutual containment).
  bool same_as(const Subspace& o) const;

 private:
  std::size_t n_;
  std::vector<Mat> basis_;
  Span<Scalar> span_;
};

// Matrix of v -> [x, v] on V's basis; throws NotInvariant naming the basis
// vector whose image leaves V.
Matrix<Scalar> ad_operator(const Mat& x, const Subspace& v);
Subspace centralizer(const Subspace& v, const Mat& x);
Subspace generate_subalgebra(const std::vector<Mat>& gens, std::size_t n);

struct SparseEntry {
  std::uint32_t index;
  Rational value;
};
using SparseVec = std::vector<SparseEntry>;

// A real matrix Lie algebra g = h + m with theta(X) = -X*, B(X,Y) = Re tr(XY)
// and a chosen maximal abelian a in m. Elements of g^C are handled in
// coordinates on the real basis (h basis first, then m basis).
class RealForm {
 public:
  RealForm(std::string name, std::size_t n, std::vector<Mat> h_basis, std::vector<Mat> m_basis,
           const std::vector<Mat>& a_basis);

  const std::string& name() const { return name_; }
  std::size_t matrix_size() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  std::size_t dim_h() const { return dim_h_; }
  std::size_t dim_m() const { return basis_.size() - dim_h_; }
  std::size_t real_rank() const { return a_.size(); }
  bool in_h_index(std::size_t k) const { return k < dim_h_; }
  const std::vector<Mat>& basis() const { return basis_; }
  const std::vector<QVec>& a_coords() const { return a_; }
  const Matrix<Rational>& gram() const { return gram_; }
  const SparseVec& structure(std::size_t i, std::size_t j) const { return sc_[i * dim() + j]; }

  std::optional<CVec> try_coords(const Mat& x) const { return span_.coords(flatten(x)); }
  CVec coords(const Mat& x) const;
  Mat to_matrix(const CVec& v) const;
  Mat to_matrix(const QVec& v) const { return to_matrix(to_cvec(v)); }

  template <class T>
  Vec<T> bracket(const Vec<T>& x, const Vec<T>& y) const {
    const std::size_t d = dim();
    Vec<T> out(d);
    for (std::size_t i = 0; i < d; ++i) {
      if (is_zero(x[i])) continue;
      for (std::size_t j = 0; j < d; ++j) {
        if (is_zero(y[j])) continue;
        const auto& s = structure(i, j);
        if (s.empty()) continue;
        T xy = x[i] * y[j];
        for (const auto& e : s) out[e.index] += mulq(e.value, xy);
      }
    }
    return out;
  }

  template <class T>
  Matrix<T> ad(const Vec<T>& x) const {
    const std::size_t d = dim();
    Matrix<T> m(d, d);
    for (std::size_t i = 0; i < d; ++i) {
      if (is_zero(x[i])) continue;
      for (std::size_t j = 0; j < d; ++j)
        for (const auto& e : structure(i, j)) m(e.index, j) += mulq(e.value, x[i]);
    }
    return m;
  }

  // Block of ad(x) mapping the coordinate range [c0,c1) into rows [r0,r1).
  template <class T>
  Matrix<T> ad_block(const Vec<T>& x, std::size_t r0, std::size_t r1, std::size_t c0,
                     std::size_t c1) const {
    Matrix<T> m(r1 - r0, c1 - c0);
    for (std::size_t i = 0; i < dim(); ++i) {
      if (is_zero(x[i])) continue;
      for (std::size_t j = c0; j < c1; ++j)
        for (const auto& e : structure(i, j))
          if (e.index >= r0 && e.index < r1) m(e.index - r0, j - c0) += mulq(e.value, x[i]);
    }
    return m;
  }

  // Complex-linear extension of theta.
  template <class T>
  Vec<T> theta(Vec<T> x) const {
    for (std::size_t k = dim_h_; k < x.size(); ++k) x[k] = -x[k];
    return x;
  }

  template <class T>
  T form(const Vec<T>& x, const Vec<T>& y) const {
    T acc;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (is_zero(x[i])) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (is_zero(y[j]) || is_zero(gram_(i, j))) continue;
        acc += mulq(gram_(i, j), x[i] * y[j]);
      }
    }
    return acc;
  }

  bool in_h(const CVec& x) const;
  bool in_m(const CVec& x) const;
  CVec a_element(std::size_t j) const { return to_cvec(a_[j]); }

 private:
  std::string name_;
  std::size_t n_;
  std::size_t dim_h_;
  std::vector<Mat> basis_;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> sparse_;
  Span<Scalar> span_;
  std::vector<SparseVec> sc_;
  Matrix<Rational> gram_;
  std::vector<QVec> a_;
};

struct Complexification {
  Subspace g, h, m, a;
};
Complexification complexify(const RealForm& s);

// Exhaustive exact check of the Cartan decomposition, bracket relations,
// invariance and definiteness of B, and maximality of a; throws
// VerificationFailure describing the first violation.
void check_structure(const RealForm& s);

// Signs of the pivots of an LDL^T elimination of a symmetric rational
// matrix; all +1 means positive definite.
std::vector<int> ldl_signs(const Matrix<Rational>& g);

}  // namespace hkr
