#include "hkr/lie.hpp"

#include <sstream>

namespace hkr {

Mat bracket(const Mat& x, const Mat& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols() || x.rows() != x.cols())
    throw DimensionMismatch("bracket of " + std::to_string(x.rows()) + "x" +
                            std::to_string(x.cols()) + " and " + std::to_string(y.rows()) + "x" +
                            std::to_string(y.cols()) + " matrices");
  return x * y - y * x;
}

Mat conj_transpose(const Mat& x) {
  Mat t(x.cols(), x.rows());
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c) t(c, r) = x(r, c).conj();
  return t;
}

Vec<Scalar> flatten(const Mat& x) { return x.data(); }

Mat unflatten(const Vec<Scalar>& v, std::size_t n) {
  if (v.size() != n * n) throw DimensionMismatch("unflatten length");
  Mat m(n, n);
  m.data() = v;
  return m;
}

Subspace Subspace::spanned_by(const std::vector<Mat>& gens, std::size_t n) {
  Subspace s(n);
  for (const auto& g : gens) s.add(g);
  return s;
}

bool Subspace::add(const Mat& x) {
  if (x.rows() != n_ || x.cols() != n_) throw DimensionMismatch("subspace element size");
  if (!span_.add(flatten(x))) return false;
  basis_.push_back(x);
  return true;
}

bool Subspace::same_as(const Subspace& o) const {
  if (o.dim() != dim() || o.n_ != n_) return false;
  for (const auto& b : o.basis_)
    if (!contains(b)) return false;
  return true;
}

Matrix<Scalar> ad_operator(const Mat& x, const Subspace& v) {
  Matrix<Scalar> out(v.dim(), v.dim());
  for (std::size_t j = 0; j < v.dim(); ++j) {
    auto c = v.coords(bracket(x, v.basis()[j]));
    if (!c) throw NotInvariant("[X, v_" + std::to_string(j) + "] leaves the subspace");
    out.set_col(j, *c);
  }
  return out;
}

Subspace centralizer(const Subspace& v, const Mat& x) {
  const std::size_t n = v.matrix_size();
  Subspace out(n);
  if (v.dim() == 0) return out;
  // Columns: flattened [v_j, x]; kernel gives combinations commuting with x.
  Matrix<Scalar> m(n * n, v.dim());
  for (std::size_t j = 0; j < v.dim(); ++j) m.set_col(j, flatten(bracket(v.basis()[j], x)));
  for (const auto& k : kernel(m)) {
    Mat y(n, n);
    for (std::size_t j = 0; j < v.dim(); ++j)
      if (!k[j].is_zero()) y += v.basis()[j] * k[j];
    out.add(y);
  }
  return out;
}

Subspace generate_subalgebra(const std::vector<Mat>& gens, std::size_t n) {
  Subspace s = Subspace::spanned_by(gens, n);
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < i; ++j) s.add(bracket(s.basis()[i], s.basis()[j]));
  return s;
}

RealForm::RealForm(std::string name, std::size_t n, std::vector<Mat> h_basis,
                   std::vector<Mat> m_basis, const std::vector<Mat>& a_basis)
    : name_(std::move(name)), n_(n), dim_h_(h_basis.size()), span_(n * n) {
  basis_ = std::move(h_basis);
  for (auto& m : m_basis) basis_.push_back(std::move(m));
  const std::size_t d = basis_.size();
  for (std::size_t k = 0; k < d; ++k) {
    if (!span_.add(flatten(basis_[k])))
      throw ConstructionFailure(name_ + ": basis element " + std::to_string(k) +
                                " is dependent over C");
    std::vector<std::pair<std::size_t, Scalar>> sp;
    for (std::size_t e = 0; e < n * n; ++e)
      if (!basis_[k].data()[e].is_zero()) sp.push_back({e, basis_[k].data()[e]});
    sparse_.push_back(std::move(sp));
  }
  sc_.assign(d * d, {});
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      Mat br = hkr::bracket(basis_[i], basis_[j]);
      if (br.is_zero()) continue;
      auto c = span_.coords(flatten(br));
      if (!c)
        throw ConstructionFailure(name_ + ": basis is not bracket-closed at (" +
                                  std::to_string(i) + "," + std::to_string(j) + ")");
      SparseVec fwd, rev;
      for (std::size_t k = 0; k < d; ++k) {
        if ((*c)[k].is_zero()) continue;
        if (!(*c)[k].is_rational())
          throw ConstructionFailure(name_ + ": non-rational structure constant");
        Rational q = (*c)[k].to_rational();
        fwd.push_back({static_cast<std::uint32_t>(k), q});
        rev.push_back({static_cast<std::uint32_t>(k), -q});
      }
      sc_[i * d + j] = std::move(fwd);
      sc_[j * d + i] = std::move(rev);
    }
  gram_ = Matrix<Rational>(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Scalar tr;
      for (const auto& [e, x] : sparse_[i]) {
        std::size_t r = e / n, c = e % n;
        const Scalar& y = basis_[j](c, r);
        if (!y.is_zero()) tr += x * y;
      }
      if (!tr.is_zero()) {
        Scalar re = (tr + tr.conj()) * Scalar(Rational(1, 2));
        gram_(i, j) = gram_(j, i) = re.to_rational();
      }
    }
  for (const auto& am : a_basis) {
    CVec c = coords(am);
    QVec q(d);
    for (std::size_t k = 0; k < d; ++k) {
      if (!c[k].is_rational())
        throw ConstructionFailure(name_ + ": a-basis element is not a real element");
      q[k] = c[k].to_rational();
    }
    a_.push_back(std::move(q));
  }
}

CVec RealForm::coords(const Mat& x) const {
  auto c = try_coords(x);
  if (!c) throw DimensionMismatch(name_ + ": matrix does not lie in g^C");
  return *c;
}

Mat RealForm::to_matrix(const CVec& v) const {
  if (v.size() != dim()) throw DimensionMismatch("coordinate vector length");
  Mat m(n_, n_);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    for (const auto& [e, x] : sparse_[k]) m.data()[e] += v[k] * x;
  }
  return m;
}

bool RealForm::in_h(const CVec& x) const {
  for (std::size_t k = dim_h_; k < x.size(); ++k)
    if (!x[k].is_zero()) return false;
  return true;
}

bool RealForm::in_m(const CVec& x) const {
  for (std::size_t k = 0; k < dim_h_; ++k)
    if (!x[k].is_zero()) return false;
  return true;
}

Complexification complexify(const RealForm& s) {
  const std::size_t n = s.matrix_size();
  Complexification c{Subspace(n), Subspace(n), Subspace(n), Subspace(n)};
  for (std::size_t k = 0; k < s.dim(); ++k) {
    c.g.add(s.basis()[k]);
    (s.in_h_index(k) ? c.h : c.m).add(s.basis()[k]);
  }
  for (const auto& a : s.a_coords()) c.a.add(s.to_matrix(a));
  return c;
}

std::vector<int> ldl_signs(const Matrix<Rational>& g) {
  Matrix<Rational> m = g;
  const std::size_t n = m.rows();
  std::vector<int> signs;
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      signs.push_back(0);
      continue;
    }
    signs.push_back(sgn(m(k, k)));
    for (std::size_t r = k + 1; r < n; ++r) {
      if (sgn(m(r, k)) == 0) continue;
      Rational f = m(r, k) / m(k, k);
      for (std::size_t c = k; c < n; ++c) m(r, c) -= f * m(k, c);
    }
  }
  return signs;
}

namespace {

[[noreturn]] void fail(const RealForm& s, const std::string& what) {
  throw VerificationFailure(s.name() + ": " + what);
}

}  // namespace

void check_structure(const RealForm& s) {
  const std::size_t d = s.dim(), dh = s.dim_h();
  for (std::size_t k = 0; k < d; ++k) {
    Mat th = -conj_transpose(s.basis()[k]);
    Mat expect = s.in_h_index(k) ? s.basis()[k] : -s.basis()[k];
    if (th != expect) fail(s, "theta does not act by +-1 on basis element " + std::to_string(k));
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      bool target_h = s.in_h_index(i) == s.in_h_index(j);
      for (const auto& e : s.structure(i, j))
        if (s.in_h_index(e.index) != target_h)
          fail(s, "bracket relation violated by basis pair (" + std::to_string(i) + "," +
                      std::to_string(j) + ")");
    }
  const auto& g = s.gram();
  for (std::size_t i = 0; i < dh; ++i)
    for (std::size_t j = dh; j < d; ++j)
      if (sgn(g(i, j)) != 0) fail(s, "B is not theta-invariant");
  for (std::size_t z = 0; z < d; ++z) {
    QVec e(d);
    e[z] = 1;
    Matrix<Rational> ad = s.ad(e);
    Matrix<Rational> inv = ad.transpose() * g + g * ad;
    if (!inv.is_zero()) fail(s, "B is not ad-invariant under basis element " + std::to_string(z));
  }
  Matrix<Rational> gh(dh, dh), gm(d - dh, d - dh);
  for (std::size_t i = 0; i < dh; ++i)
    for (std::size_t j = 0; j < dh; ++j) gh(i, j) = -g(i, j);
  for (std::size_t i = dh; i < d; ++i)
    for (std::size_t j = dh; j < d; ++j) gm(i - dh, j - dh) = g(i, j);
  for (int sign : ldl_signs(gh))
    if (sign != 1) fail(s, "B is not negative definite on h");
  for (int sign : ldl_signs(gm))
    if (sign != 1) fail(s, "B is not positive definite on m");
  const auto& a = s.a_coords();
  for (const auto& v : a) {
    CVec c = to_cvec(v);
    if (!s.in_m(c)) fail(s, "a is not contained in m");
  }
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (!is_zero_vec(s.bracket(a[i], a[j]))) fail(s, "a is not abelian");
  if (!a.empty()) {
    Matrix<Rational> stacked(d * a.size(), d - dh);
    for (std::size_t j = 0; j < a.size(); ++j) {
      Matrix<Rational> blk = s.ad_block(a[j], 0, d, dh, d);
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d - dh; ++c) stacked(j * d + r, c) = blk(r, c);
    }
    if (kernel(stacked).size() != a.size()) fail(s, "a is not maximal abelian in m");
  }
}

}  // namespace hkr
