#include "hkr/rootsys.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace hkr {

namespace {

bool lex_positive(const QVec& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return sgn(x) > 0;
  return false;
}

// Eigenspaces of an operator on span(space), given the images of the
// spanning vectors and a superset of the possible eigenvalues.
std::vector<std::pair<Rational, std::vector<QVec>>> eigen_split(
    const std::vector<QVec>& space, const std::vector<QVec>& images,
    const std::vector<Rational>& candidates) {
  std::vector<std::pair<Rational, std::vector<QVec>>> out;
  if (space.empty()) return out;
  const std::size_t d = space[0].size();
  for (const auto& c : candidates) {
    Matrix<Rational> m(d, space.size());
    for (std::size_t j = 0; j < space.size(); ++j)
      m.set_col(j, axpy(Rational(-c), space[j], images[j]));
    auto ker = kernel(m);
    if (ker.empty()) continue;
    std::vector<QVec> vecs;
    for (const auto& k : ker) {
      QVec v(d);
      for (std::size_t j = 0; j < space.size(); ++j)
        if (sgn(k[j]) != 0) v = axpy(k[j], space[j], std::move(v));
      vecs.push_back(std::move(v));
    }
    out.push_back({c, std::move(vecs)});
  }
  return out;
}

Matrix<Rational> rational_matrix(const Mat& m) {
  Matrix<Rational> out(m.rows(), m.cols());
  for (std::size_t k = 0; k < m.data().size(); ++k) out.data()[k] = m.data()[k].to_rational();
  return out;
}

struct Joint {
  QVec functional;
  std::vector<QVec> space;
};

// Simultaneous eigenspaces of commuting operators given as image maps.
template <class ImageFn>
std::vector<Joint> joint_split(std::vector<QVec> start, std::size_t count, ImageFn images_of,
                               const std::vector<std::vector<Rational>>& candidates,
                               const std::string& what) {
  std::vector<Joint> cur{{QVec{}, std::move(start)}};
  for (std::size_t j = 0; j < count; ++j) {
    std::vector<Joint> next;
    for (auto& piece : cur) {
      std::vector<QVec> imgs;
      for (const auto& v : piece.space) imgs.push_back(images_of(j, v));
      auto parts = eigen_split(piece.space, imgs, candidates[j]);
      std::size_t total = 0;
      for (auto& [val, vecs] : parts) {
        total += vecs.size();
        QVec f = piece.functional;
        f.push_back(val);
        next.push_back({std::move(f), std::move(vecs)});
      }
      if (total != piece.space.size())
        throw NonRationalSpectrum(what + ": operator " + std::to_string(j) +
                                  " is not diagonalizable with rational eigenvalues");
    }
    cur = std::move(next);
  }
  return cur;
}

std::vector<Rational> distinct_eigenvalues(const Matrix<Rational>& m) {
  return rational_roots(charpoly(m));
}

}  // namespace

Rational RestrictedRootData::ip(const QVec& x, const QVec& y) const {
  Rational acc;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) acc += x[i] * dual_gram(i, j) * y[j];
  return acc;
}

long RestrictedRootData::find(const QVec& coords) const {
  for (std::size_t k = 0; k < roots.size(); ++k)
    if (roots[k].coords == coords) return static_cast<long>(k);
  return -1;
}

bool RestrictedRootData::is_reduced(std::size_t k) const {
  return std::find(reduced.begin(), reduced.end(), k) != reduced.end();
}

Matrix<Rational> RestrictedRootData::cartan_matrix() const {
  std::vector<QVec> s;
  for (auto k : simple) s.push_back(roots[k].coords);
  return hkr::cartan_matrix(s, dual_gram);
}

std::vector<std::size_t> simple_system(const std::vector<QVec>& roots) {
  std::vector<std::size_t> pos;
  for (std::size_t k = 0; k < roots.size(); ++k)
    if (lex_positive(roots[k])) pos.push_back(k);
  std::set<QVec> sums;
  for (auto i : pos)
    for (auto j : pos) sums.insert(add(roots[i], roots[j]));
  std::vector<std::size_t> simple;
  for (auto k : pos)
    if (!sums.count(roots[k])) simple.push_back(k);
  return simple;
}

Matrix<Rational> cartan_matrix(const std::vector<QVec>& simple, const Matrix<Rational>& g) {
  auto ip = [&](const QVec& x, const QVec& y) {
    Rational acc;
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < y.size(); ++j) acc += x[i] * g(i, j) * y[j];
    return acc;
  };
  const std::size_t r = simple.size();
  Matrix<Rational> a(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      a(i, j) = 2 * ip(simple[i], simple[j]) / ip(simple[j], simple[j]);
  return a;
}

Matrix<Rational> standard_cartan(const std::string& fam, int n) {
  Matrix<Rational> a(n, n);
  for (int k = 0; k < n; ++k) a(k, k) = 2;
  auto link = [&](int i, int j, int aij = -1, int aji = -1) {
    a(i, j) = aij;
    a(j, i) = aji;
  };
  if (fam == "A" || fam == "B" || fam == "C") {
    for (int k = 0; k + 1 < n; ++k) link(k, k + 1);
    if (n >= 2 && fam == "B") link(n - 2, n - 1, -2, -1);
    if (n >= 2 && fam == "C") link(n - 2, n - 1, -1, -2);
  } else if (fam == "D") {
    for (int k = 0; k + 2 < n; ++k) link(k, k + 1);
    link(n - 3, n - 1);
  } else if (fam == "E") {
    link(0, 2);
    link(1, 3);
    for (int k = 2; k + 1 < n; ++k) link(k, k + 1);
  } else if (fam == "F") {
    link(0, 1);
    link(1, 2, -2, -1);
    link(2, 3);
  } else if (fam == "G") {
    link(0, 1, -1, -3);
  } else {
    throw UnrecognizedDiagram("no standard Cartan matrix for " + fam);
  }
  return a;
}

namespace {

std::vector<Rational> permuted(const Matrix<Rational>& a, const std::vector<std::size_t>& p) {
  std::vector<Rational> out;
  for (auto i : p)
    for (auto j : p) out.push_back(a(i, j));
  return out;
}

std::vector<Rational> normal_form(const Matrix<Rational>& a) {
  std::vector<std::size_t> p(a.rows());
  std::iota(p.begin(), p.end(), 0);
  std::vector<Rational> best = permuted(a, p);
  while (std::next_permutation(p.begin(), p.end())) {
    auto cand = permuted(a, p);
    if (cand < best) best = std::move(cand);
  }
  return best;
}

std::vector<std::pair<std::string, int>> candidates_for_rank(int n) {
  std::vector<std::pair<std::string, int>> c{{"A", n}};
  if (n >= 2) c.push_back({"B", n});
  if (n >= 3) c.push_back({"C", n});
  if (n >= 4) c.push_back({"D", n});
  if (n >= 6 && n <= 8) c.push_back({"E", n});
  if (n == 4) c.push_back({"F", 4});
  if (n == 2) c.push_back({"G", 2});
  return c;
}

std::string component_label(const CartanComponent& c) {
  if (c.family == "E" || c.family == "F" || c.family == "G")
    return c.family + "_" + std::to_string(c.rank);
  return c.family + "_" + std::to_string(c.rank);
}

}  // namespace

int CartanType::rank() const {
  int r = 0;
  for (const auto& c : components) r += c.rank;
  return r;
}

std::string CartanType::label() const {
  if (components.empty()) return "0";
  std::string s;
  for (const auto& c : components) {
    if (!s.empty()) s += "x";
    s += component_label(c);
  }
  return s;
}

std::string canonical_type_label(const std::string& label) {
  if (label == "0" || label.empty()) return "0";
  std::vector<std::string> parts;
  std::stringstream ss(label);
  std::string item;
  while (std::getline(ss, item, 'x')) {
    auto us = item.find('_');
    if (us == std::string::npos) throw UnrecognizedDiagram("bad type label '" + label + "'");
    std::string fam = item.substr(0, us);
    int n = std::stoi(item.substr(us + 1));
    if ((fam == "B" || fam == "C") && n == 1) fam = "A";
    if (fam == "C" && n == 2) fam = "B";
    if (fam == "D" && n == 3) fam = "A";
    if (fam == "D" && n == 2) {
      parts.push_back("A_1");
      parts.push_back("A_1");
      continue;
    }
    parts.push_back(fam + "_" + std::to_string(n));
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "x") + p;
  return out;
}

std::string CartanType::canonical() const { return canonical_type_label(label()); }

CartanType classify_cartan(const Matrix<Rational>& a, const std::vector<bool>& dbl) {
  const std::size_t r = a.rows();
  std::vector<int> comp(r, -1);
  CartanType type;
  for (std::size_t s = 0; s < r; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> members{s};
    comp[s] = static_cast<int>(type.components.size());
    for (std::size_t k = 0; k < members.size(); ++k)
      for (std::size_t t = 0; t < r; ++t)
        if (comp[t] < 0 && sgn(a(members[k], t)) != 0) {
          comp[t] = comp[s];
          members.push_back(t);
        }
    std::sort(members.begin(), members.end());
    Matrix<Rational> sub(members.size(), members.size());
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = 0; j < members.size(); ++j) sub(i, j) = a(members[i], members[j]);
    const int n = static_cast<int>(members.size());
    auto nf = normal_form(sub);
    CartanComponent c;
    c.rank = n;
    c.simple = members;
    for (const auto& [fam, rank] : candidates_for_rank(n)) {
      if (normal_form(standard_cartan(fam, rank)) == nf) {
        c.family = fam;
        break;
      }
    }
    if (c.family.empty()) throw UnrecognizedDiagram("component of rank " + std::to_string(n));
    if (n == 2 && c.family == "B") {
      // B_2 and C_2 share a diagram; the long simple root decides.
      std::size_t long_root = sgn(sub(0, 1) + 2) == 0 ? 0 : 1;
      bool is_c = !dbl.empty() && dbl[members[long_root]];
      c.family = is_c ? "C" : "B";
    }
    if (n == 1) c.family = "A";
    type.components.push_back(std::move(c));
  }
  return type;
}

CartanType classify_type(const RestrictedRootData& data, bool reduced) {
  std::vector<bool> dbl;
  for (auto k : data.simple) {
    QVec half = scale(Rational(1, 2), data.roots[k].coords);
    dbl.push_back(std::find(data.rep_weights.begin(), data.rep_weights.end(), half) !=
                  data.rep_weights.end());
  }
  CartanType t = classify_cartan(data.cartan_matrix(), dbl);
  if (reduced) return t;
  // A component is BC when it carries a root whose half is also a root.
  const std::size_t r = data.simple.size();
  Matrix<Rational> basis(data.real_rank, r);
  for (std::size_t j = 0; j < r; ++j) basis.set_col(j, data.roots[data.simple[j]].coords);
  for (std::size_t k = 0; k < data.roots.size(); ++k) {
    if (data.is_reduced(k)) continue;
    auto coeff = solve(basis, data.roots[k].coords);
    if (!coeff) throw UnrecognizedDiagram("root outside the span of the simple roots");
    for (auto& c : t.components) {
      bool inside = false;
      for (auto s : c.simple)
        if (sgn((*coeff)[s]) != 0) inside = true;
      if (inside) c.family = "BC";
    }
  }
  return t;
}

std::vector<int> exponents(const CartanType& type) {
  std::vector<int> out;
  for (const auto& c : type.components) {
    const int n = c.rank;
    if (c.family == "A") {
      for (int k = 2; k <= n + 1; ++k) out.push_back(k);
    } else if (c.family == "B" || c.family == "C" || c.family == "BC") {
      for (int k = 1; k <= n; ++k) out.push_back(2 * k);
    } else if (c.family == "D") {
      for (int k = 1; k < n; ++k) out.push_back(2 * k);
      out.push_back(n);
    } else if (c.family == "E" && n == 6) {
      out.insert(out.end(), {2, 5, 6, 8, 9, 12});
    } else if (c.family == "E" && n == 7) {
      out.insert(out.end(), {2, 6, 8, 10, 12, 14, 18});
    } else if (c.family == "E" && n == 8) {
      out.insert(out.end(), {2, 8, 12, 14, 18, 20, 24, 30});
    } else if (c.family == "F") {
      out.insert(out.end(), {2, 6, 8, 12});
    } else if (c.family == "G") {
      out.insert(out.end(), {2, 6});
    } else {
      throw UnrecognizedDiagram("no exponents for " + c.family);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

WeylGroup weyl_group(const std::vector<QVec>& simple, const Matrix<Rational>& g) {
  WeylGroup w;
  const std::size_t r = g.rows();
  auto ip = [&](const QVec& x, const QVec& y) {
    Rational acc;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) acc += x[i] * g(i, j) * y[j];
    return acc;
  };
  for (const auto& al : simple) {
    Matrix<Rational> s(r, r);
    Rational aa = ip(al, al);
    for (std::size_t k = 0; k < r; ++k) {
      QVec e(r);
      e[k] = 1;
      s.set_col(k, axpy(Rational(-2 * ip(e, al) / aa), al, e));
    }
    w.generators.push_back(std::move(s));
  }
  std::set<std::vector<Rational>> seen;
  w.elements.push_back(Matrix<Rational>::identity(r));
  seen.insert(w.elements[0].data());
  for (std::size_t k = 0; k < w.elements.size(); ++k) {
    for (const auto& s : w.generators) {
      Matrix<Rational> p = s * w.elements[k];
      if (seen.insert(p.data()).second) w.elements.push_back(std::move(p));
    }
    if (w.elements.size() > 1000000) throw Error("Weyl group closure too large");
  }
  return w;
}

WeylGroup weyl_group(const RestrictedRootData& data) {
  std::vector<QVec> s;
  for (auto k : data.simple) s.push_back(data.roots[k].coords);
  return weyl_group(s, data.dual_gram);
}

std::vector<QVec> common_centralizer(const RealForm& s, const std::vector<QVec>& elems,
                                     std::size_t c0, std::size_t c1) {
  const std::size_t d = s.dim();
  std::vector<QVec> out;
  if (c1 <= c0) return out;
  Matrix<Rational> m(std::max<std::size_t>(1, d * elems.size()), c1 - c0);
  for (std::size_t j = 0; j < elems.size(); ++j) {
    Matrix<Rational> blk = s.ad_block(elems[j], 0, d, c0, c1);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < c1 - c0; ++c) m(j * d + r, c) = blk(r, c);
  }
  for (const auto& k : kernel(m)) {
    QVec v(d);
    for (std::size_t c = 0; c < c1 - c0; ++c) v[c0 + c] = k[c];
    out.push_back(std::move(v));
  }
  return out;
}

RestrictedRootData restricted_roots(const RealForm& s) {
  RestrictedRootData data;
  const std::size_t d = s.dim(), r = s.real_rank(), n = s.matrix_size();
  data.real_rank = r;
  // Possible ad-eigenvalues are differences of eigenvalues on C^n.
  std::vector<Matrix<Rational>> amat;
  std::vector<std::vector<Rational>> rep_cands, ad_cands;
  for (std::size_t j = 0; j < r; ++j) {
    amat.push_back(rational_matrix(s.to_matrix(s.a_coords()[j])));
    auto mu = distinct_eigenvalues(amat.back());
    std::set<Rational> diffs;
    for (const auto& x : mu)
      for (const auto& y : mu) diffs.insert(x - y);
    rep_cands.push_back(mu);
    ad_cands.emplace_back(diffs.begin(), diffs.end());
  }
  std::vector<QVec> std_basis;
  for (std::size_t k = 0; k < n; ++k) {
    QVec e(n);
    e[k] = 1;
    std_basis.push_back(std::move(e));
  }
  auto weights = joint_split(
      std_basis, r, [&](std::size_t j, const QVec& v) { return amat[j].apply(v); }, rep_cands,
      s.name() + " (defining representation)");
  for (const auto& w : weights) data.rep_weights.push_back(w.functional);

  std::vector<QVec> g_basis;
  for (std::size_t k = 0; k < d; ++k) {
    QVec e(d);
    e[k] = 1;
    g_basis.push_back(std::move(e));
  }
  auto parts = joint_split(
      g_basis, r, [&](std::size_t j, const QVec& v) { return s.bracket(s.a_coords()[j], v); },
      ad_cands, s.name());
  std::sort(parts.begin(), parts.end(),
            [](const Joint& x, const Joint& y) { return y.functional < x.functional; });
  for (auto& p : parts) {
    if (is_zero_vec(p.functional)) {
      data.zero_space = std::move(p.space);
      continue;
    }
    RestrictedRoot root;
    root.coords = p.functional;
    root.multiplicity = static_cast<int>(p.space.size());
    root.space = std::move(p.space);
    data.roots.push_back(std::move(root));
  }
  Matrix<Rational> ga(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) ga(i, j) = s.form(s.a_coords()[i], s.a_coords()[j]);
  data.dual_gram = r ? inverse(ga) : Matrix<Rational>();
  std::vector<QVec> coords;
  for (const auto& root : data.roots) coords.push_back(root.coords);
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (lex_positive(coords[k])) data.positive.push_back(k);
  data.simple = simple_system(coords);
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (data.find(scale(Rational(1, 2), coords[k])) < 0) data.reduced.push_back(k);
  data.type = classify_type(data, false);
  data.reduced_type = classify_type(data, true);
  data.weyl_order = weyl_group(data).order();
  return data;
}

namespace {

std::vector<QVec> intersect(const std::vector<QVec>& x, const std::vector<QVec>& y) {
  std::vector<QVec> out;
  if (x.empty() || y.empty()) return out;
  const std::size_t d = x[0].size();
  Matrix<Rational> m(d, x.size() + y.size());
  for (std::size_t j = 0; j < x.size(); ++j) m.set_col(j, x[j]);
  for (std::size_t j = 0; j < y.size(); ++j) m.set_col(x.size() + j, y[j]);
  for (const auto& k : kernel(m)) {
    QVec v(d);
    for (std::size_t j = 0; j < x.size(); ++j)
      if (sgn(k[j]) != 0) v = axpy(k[j], x[j], std::move(v));
    if (!is_zero_vec(v)) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

ComplexRootData full_root_classification(const RealForm& s, const RestrictedRootData& data) {
  ComplexRootData out;
  const std::size_t d = s.dim(), dh = s.dim_h();
  const auto& a = s.a_coords();
  std::vector<QVec> cha = common_centralizer(s, a, 0, dh);
  // Grow t inside c_h(a) until it is its own centralizer there.
  std::vector<QVec> t;
  for (;;) {
    std::vector<QVec> cent = t.empty() ? cha : intersect(common_centralizer(s, t, 0, dh), cha);
    Span<Rational> tspan(d);
    for (const auto& x : t) tspan.add(x);
    auto fresh = std::find_if(cent.begin(), cent.end(),
                              [&](const QVec& v) { return !tspan.contains(v); });
    if (fresh == cent.end()) break;
    t.push_back(*fresh);
  }
  out.t_basis = t;
  out.dim_d = t.size() + a.size();
  std::vector<QVec> dgen = t;
  dgen.insert(dgen.end(), a.begin(), a.end());
  std::size_t cd = common_centralizer(s, dgen, 0, d).size();
  if (cd != out.dim_d)
    throw ConstructionFailure(s.name() + ": t + a is not a Cartan subalgebra (centralizer dim " +
                              std::to_string(cd) + ")");
  out.num_roots = d - out.dim_d;
  for (std::size_t k = 0; k < data.roots.size(); ++k) {
    const auto& root = data.roots[k];
    RootClassCount rc;
    rc.restricted_index = k;
    if (t.empty()) {
      rc.real = root.multiplicity;
    } else {
      Matrix<Rational> m(d * t.size(), root.space.size());
      for (std::size_t j = 0; j < root.space.size(); ++j) {
        for (std::size_t i = 0; i < t.size(); ++i) {
          QVec b = s.bracket(t[i], root.space[j]);
          for (std::size_t e = 0; e < d; ++e) m(i * d + e, j) = b[e];
        }
      }
      rc.real = static_cast<int>(kernel(m).size());
    }
    rc.complex = root.multiplicity - rc.real;
    out.num_real += rc.real;
    out.num_complex += rc.complex;
    out.per_restricted.push_back(rc);
  }
  out.num_imaginary = data.zero_space.size() - out.dim_d;
  if (out.num_real + out.num_complex + out.num_imaginary != out.num_roots)
    throw ConstructionFailure(s.name() + ": root classification does not partition the roots");
  return out;
}

}  // namespace hkr
