#include "hkr/kostant_rallis.hpp"

#include <algorithm>
#include <set>

namespace hkr {

namespace {

bool is_rational_square(const Rational& q) {
  if (sgn(q) < 0) return false;
  return mpz_perfect_square_p(q.get_num_mpz_t()) && mpz_perfect_square_p(q.get_den_mpz_t());
}

CVec cscale(const Scalar& s, CVec v) { return scale(s, std::move(v)); }

QVec a_element(const RealForm& s, const QVec& a_coords) {
  QVec v(s.dim());
  for (std::size_t k = 0; k < a_coords.size(); ++k)
    if (sgn(a_coords[k]) != 0) v = axpy(a_coords[k], s.a_coords()[k], std::move(v));
  return v;
}

// Values lambda(a_k) of the simple roots on an element of a given by a-coordinates.
Rational eval_root(const QVec& lambda, const QVec& a_coords) {
  Rational acc;
  for (std::size_t k = 0; k < lambda.size(); ++k) acc += lambda[k] * a_coords[k];
  return acc;
}

std::vector<CVec> embed(const std::vector<CVec>& ker, std::size_t offset, std::size_t d) {
  std::vector<CVec> out;
  for (const auto& k : ker) {
    CVec v(d);
    for (std::size_t j = 0; j < k.size(); ++j) v[offset + j] = k[j];
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Scalar> eigen_candidates(std::size_t bound, bool halves) {
  std::vector<Scalar> out;
  const long step = halves ? 1 : 2;
  for (long k = -2 * static_cast<long>(bound); k <= 2 * static_cast<long>(bound); k += step)
    out.push_back(Scalar(frac(k, 2)));
  return out;
}

}  // namespace

TdsConstruction build_tds(const RealForm& s, const RestrictedRootData& roots) {
  TdsConstruction t;
  const std::size_t r = roots.simple.size();
  std::vector<QVec> hdual_a;  // h_i in a-coordinates
  for (auto k : roots.simple) {
    const QVec& lam = roots.roots[k].coords;
    QVec x = roots.dual_gram.apply(lam);
    hdual_a.push_back(x);
    t.h_dual.push_back(a_element(s, x));
    t.lambda_h.push_back(eval_root(lam, x));
  }
  // Sum_i c_i lambda_j(h_i) = 2 for every simple lambda_j.
  Matrix<Rational> sys(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      sys(j, i) = eval_root(roots.roots[roots.simple[j]].coords, hdual_a[i]);
  auto c = solve(sys, QVec(r, Rational(2)));
  if (!c) throw ConstructionFailure(s.name() + ": no solution for lambda(w) = 2");
  t.c = *c;
  t.w = QVec(s.dim());
  for (std::size_t i = 0; i < r; ++i) t.w = axpy(t.c[i], t.h_dual[i], std::move(t.w));

  for (std::size_t i = 0; i < r; ++i) {
    const auto& space = roots.roots[roots.simple[i]].space;
    // Prefer a root vector for which -c_i/b_i is a rational square, so d_i is rational.
    std::vector<QVec> cands(space.begin(), space.end());
    for (std::size_t j = 0; j < space.size(); ++j)
      for (std::size_t k = 0; k < space.size(); ++k)
        if (j != k) {
          cands.push_back(add(space[j], space[k]));
          cands.push_back(axpy(Rational(2), space[k], space[j]));
        }
    QVec y = space[0];
    for (const auto& cand : cands) {
      Rational b = s.form(cand, s.theta(cand));
      if (sgn(b) != 0 && is_rational_square(-t.c[i] / b)) {
        y = cand;
        break;
      }
    }
    Rational b = s.form(y, s.theta(y));
    if (sgn(b) >= 0) throw ConstructionFailure(s.name() + ": B(y, theta y) is not negative");
    if (is_rational_square(-t.c[i] / b)) {
      // Absorb the rational d_i into y_i, leaving d_i = 1 and b_i = -c_i.
      Integer num, den, sf;
      Rational q = -t.c[i] / b;
      squarefree_split(q.get_num(), num, sf);
      squarefree_split(q.get_den(), den, sf);
      y = scale(Rational(num, den), std::move(y));
      b = s.form(y, s.theta(y));
    }
    t.y.push_back(y);
    t.b.push_back(b);
    t.z.push_back(scale(Rational(Rational(2) / (t.lambda_h[i] * b)), s.theta(y)));
    t.w_list.push_back(scale(Rational(Rational(2) / t.lambda_h[i]), t.h_dual[i]));
    t.d.push_back(Scalar::sqrt(-t.c[i] / b));
  }
  t.e_c = CVec(s.dim());
  for (std::size_t i = 0; i < r; ++i) t.e_c = axpy(t.d[i], to_cvec(t.y[i]), std::move(t.e_c));
  t.e_c = cscale(Scalar::i(), std::move(t.e_c));
  t.f_c = s.theta(t.e_c);
  return t;
}

void verify_tds(const RealForm& s, const RestrictedRootData& roots, const TdsConstruction& t) {
  auto fail = [&](const std::string& what) {
    throw ConstructionFailure(s.name() + ": " + what);
  };
  const std::size_t r = roots.simple.size();
  for (std::size_t i = 0; i < r; ++i) {
    const std::string idx = " (i = " + std::to_string(i + 1) + ")";
    if (s.bracket(t.y[i], s.theta(t.y[i])) != scale(t.b[i], t.h_dual[i]))
      fail("[y_i, theta y_i] != b_i h_i" + idx);
    if (sgn(t.b[i]) >= 0) fail("b_i is not negative" + idx);
    if (sgn(t.c[i]) <= 0) fail("c_i is not positive" + idx);
    if (s.bracket(t.y[i], t.z[i]) != t.w_list[i]) fail("[y_i, z_i] != w_i" + idx);
    if (s.bracket(t.w_list[i], t.y[i]) != scale(Rational(2), t.y[i])) fail("[w_i, y_i] != 2 y_i" + idx);
    if (s.bracket(t.w, t.y[i]) != scale(Rational(2), t.y[i])) fail("lambda_i(w) != 2" + idx);
    if (t.d[i] * t.d[i] != Scalar(-t.c[i] / t.b[i])) fail("d_i^2 != -c_i/b_i" + idx);
  }
  CVec w = to_cvec(t.w);
  if (t.f_c != s.theta(t.e_c)) fail("f_c != theta e_c");
  if (s.bracket(w, t.e_c) != cscale(Scalar(2), t.e_c)) fail("[w, e_c] != 2 e_c");
  if (s.bracket(w, t.f_c) != cscale(Scalar(-2), t.f_c)) fail("[w, f_c] != -2 f_c");
  if (s.bracket(t.e_c, t.f_c) != w) fail("[e_c, f_c] != w");
}

bool satisfies_triple_relations(const RealForm& s, const NormalTriple& t) {
  return s.bracket(t.x, t.e) == t.e && s.bracket(t.x, t.f) == cscale(Scalar(-1), t.f) &&
         s.bracket(t.e, t.f) == t.x;
}

NormalTriple normal_triple(const RealForm& s, const TdsConstruction& tds) {
  const Scalar k = Scalar::sqrt(Rational(2)) * Scalar(Rational(1, 4));  // 1/(2 sqrt 2)
  CVec w = to_cvec(tds.w);
  CVec p = cscale(k, add(sub(tds.f_c, tds.e_c), w));
  CVec q = cscale(k, add(sub(tds.e_c, tds.f_c), w));
  CVec x = cscale(Scalar(Rational(1, 2)), add(tds.e_c, tds.f_c));
  NormalTriple first{p, q, x}, second{q, p, x};
  bool ok1 = satisfies_triple_relations(s, first);
  bool ok2 = satisfies_triple_relations(s, second);
  if (ok1 == ok2)
    throw RelationFailure(s.name() + (ok1 ? ": both sign assignments verify"
                                          : ": neither sign assignment verifies"));
  return ok1 ? first : second;
}

void verify_normal_triple(const RealForm& s, const TdsConstruction& tds, const NormalTriple& t) {
  auto fail = [&](const std::string& what) { throw RelationFailure(s.name() + ": " + what); };
  if (s.bracket(t.x, t.e) != t.e) fail("[x, e] != e");
  if (s.bracket(t.x, t.f) != cscale(Scalar(-1), t.f)) fail("[x, f] != -f");
  if (s.bracket(t.e, t.f) != t.x) fail("[e, f] != x");
  if (!s.in_m(t.e) || !s.in_m(t.f)) fail("e or f is not in m^C");
  if (!s.in_h(t.x)) fail("x is not in h^C");
  const std::size_t n = s.matrix_size();
  for (const CVec* v : {&t.e, &t.f}) {
    Mat m = s.to_matrix(*v), p = m;
    for (std::size_t k = 1; k < n; ++k) p = p * m;
    if (!p.is_zero()) fail("e or f is not nilpotent");
  }
  Mat xm = s.to_matrix(t.x);
  std::size_t total = 0;
  for (const auto& mu : eigen_candidates(n, true)) {
    Mat shifted = xm - Mat::identity(n) * mu;
    total += n - rank(shifted);
  }
  if (total != n) fail("x is not semisimple with half-integer eigenvalues");
  CVec sum = add(t.e, t.f);
  CVec expect = cscale(Scalar::sqrt(Rational(1, 2)), to_cvec(tds.w));
  if (sum != expect) fail("e + f != w / sqrt(2)");
}

CenterData center(const RealForm& s) {
  std::vector<QVec> all;
  for (std::size_t k = 0; k < s.dim(); ++k) {
    QVec e(s.dim());
    e[k] = 1;
    all.push_back(std::move(e));
  }
  return {common_centralizer(s, all, 0, s.dim_h()), common_centralizer(s, all, s.dim_h(), s.dim())};
}

SplitSubalgebra maximal_split_subalgebra(const RealForm& s, const RestrictedRootData& roots,
                                         const TdsConstruction& tds, const TableOneEntry* ref) {
  const std::size_t d = s.dim();
  std::vector<QVec> gens;
  for (std::size_t i = 0; i < tds.y.size(); ++i) {
    gens.push_back(tds.y[i]);
    gens.push_back(tds.z[i]);
    gens.push_back(tds.w_list[i]);
  }
  for (auto& v : common_centralizer(s, s.a_coords(), s.dim_h(), d)) gens.push_back(v);
  Span<Rational> span(d);
  for (const auto& g : gens) span.add(g);
  for (std::size_t i = 0; i < span.dim(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      QVec b = s.bracket(span.basis()[i], span.basis()[j]);
      if (!is_zero_vec(b)) span.add(b);
    }
  SplitSubalgebra out;
  out.basis = span.basis();
  auto fail = [&](const std::string& what) {
    throw MismatchWithTable1(s.name() + ": maximal split subalgebra " + what);
  };
  for (const auto& v : out.basis)
    if (!span.contains(s.theta(v))) fail("is not theta-stable");

  auto meet = [&](const std::vector<QVec>& sub) {
    if (sub.empty() || out.basis.empty()) return std::size_t{0};
    Matrix<Rational> m(d, out.basis.size() + sub.size());
    for (std::size_t j = 0; j < out.basis.size(); ++j) m.set_col(j, out.basis[j]);
    for (std::size_t j = 0; j < sub.size(); ++j) m.set_col(out.basis.size() + j, sub[j]);
    return kernel(m).size();
  };
  std::vector<QVec> hat_roots;
  for (std::size_t k = 0; k < roots.roots.size(); ++k) {
    std::size_t m = meet(roots.roots[k].space);
    if (m) {
      out.root_multiplicities.push_back({k, static_cast<int>(m)});
      hat_roots.push_back(roots.roots[k].coords);
    }
  }
  out.zero_dim = meet(roots.zero_space);
  std::vector<QVec> simple;
  for (auto k : simple_system(hat_roots)) simple.push_back(hat_roots[k]);
  std::vector<bool> dbl;
  for (const auto& al : simple)
    dbl.push_back(std::find(roots.rep_weights.begin(), roots.rep_weights.end(),
                            scale(Rational(1, 2), al)) != roots.rep_weights.end());
  out.type = classify_cartan(cartan_matrix(simple, roots.dual_gram), dbl);

  // Center of the subalgebra: combinations commuting with its whole basis.
  const std::size_t n = out.basis.size();
  Matrix<Rational> cm(std::max<std::size_t>(1, d * n), n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) {
      QVec b = s.bracket(out.basis[k], out.basis[j]);
      for (std::size_t e = 0; e < d; ++e) cm(k * d + e, j) = b[e];
    }
  out.center_dim = n ? kernel(cm).size() : 0;

  std::set<std::size_t> seen;
  for (const auto& [k, m] : out.root_multiplicities) {
    if (m != 1) fail("has a restricted root of multiplicity " + std::to_string(m));
    seen.insert(k);
  }
  if (seen != std::set<std::size_t>(roots.reduced.begin(), roots.reduced.end()))
    fail("does not have the reduced restricted root system");
  if (out.zero_dim != s.real_rank()) fail("has a weight-zero part larger than a");
  if (out.center_dim != center(s).z_m.size()) fail("center differs from z(g) in m");
  if (ref) {
    if (static_cast<int>(n) != ref->split_dim)
      fail("has dimension " + std::to_string(n) + ", expected " + std::to_string(ref->split_dim) +
           " (" + ref->split_sub + ")");
    if (out.type.canonical() != canonical_type_label(ref->reduced_type))
      fail("has type " + out.type.label() + ", expected " + ref->reduced_type + " (" +
           ref->split_sub + ")");
  }
  return out;
}

ModuleDecomposition module_decomposition(const RealForm& s, const NormalTriple& t) {
  const std::size_t d = s.dim(), dh = s.dim_h();
  ModuleDecomposition md;
  md.a = s.real_rank();
  md.b = common_centralizer(s, s.a_coords(), 0, dh).size();
  auto ker_h = embed(kernel(s.ad_block(t.e, dh, d, 0, dh)), 0, d);
  auto ker_m = embed(kernel(s.ad_block(t.e, 0, dh, dh, d)), dh, d);
  for (int loc = 1; loc >= 0; --loc) {
    const auto& space = loc ? ker_m : ker_h;
    if (space.empty()) continue;
    Span<Scalar> sp(d);
    for (const auto& v : space) sp.add(v);
    const std::size_t r = space.size();
    Matrix<Scalar> xm(r, r);
    for (std::size_t j = 0; j < r; ++j) {
      auto c = sp.coords(s.bracket(t.x, space[j]));
      if (!c) throw GradingFailure(s.name() + ": ad(x) does not preserve ker ad(e)");
      xm.set_col(j, *c);
    }
    std::size_t total = 0;
    for (long k = 0; k <= static_cast<long>(d); ++k) {
      Matrix<Scalar> shifted = xm - Matrix<Scalar>::identity(r) * Scalar(k);
      for (const auto& kv : kernel(shifted)) {
        CVec v(d);
        for (std::size_t j = 0; j < r; ++j)
          if (!kv[j].is_zero()) v = axpy(kv[j], space[j], std::move(v));
        md.blocks.push_back({static_cast<int>(k) + 1, std::move(v), loc == 1});
        ++total;
      }
    }
    if (total != r)
      throw GradingFailure(s.name() + ": ad(x) is not diagonalizable over the integers on ker ad(e)");
  }
  Matrix<Scalar> ef = s.ad_block(t.e, dh, d, 0, dh);
  Matrix<Scalar> ff = s.ad_block(t.f, dh, d, 0, dh);
  Matrix<Scalar> stacked(2 * (d - dh), dh);
  for (std::size_t rr = 0; rr < d - dh; ++rr)
    for (std::size_t c = 0; c < dh; ++c) {
      stacked(rr, c) = ef(rr, c);
      stacked(d - dh + rr, c) = ff(rr, c);
    }
  md.c = dh ? kernel(stacked).size() : 0;
  std::size_t total = 0;
  for (const auto& b : md.blocks) total += 2 * b.m - 1;
  if (total != d)
    throw GradingFailure(s.name() + ": module dimensions sum to " + std::to_string(total) +
                         ", expected " + std::to_string(d));
  return md;
}

QuasiSplitResult is_quasi_split(const RealForm& s, const RestrictedRootData& roots,
                                const NormalTriple& t) {
  QuasiSplitResult r{true, false};
  const auto& z = roots.zero_space;
  for (std::size_t i = 0; i < z.size() && r.abelian_centralizer; ++i)
    for (std::size_t j = i + 1; j < z.size(); ++j)
      if (!is_zero_vec(s.bracket(z[i], z[j]))) {
        r.abelian_centralizer = false;
        break;
      }
  const std::size_t d = s.dim();
  Matrix<Scalar> ae = s.ad(t.e), af = s.ad(t.f);
  Matrix<Scalar> stacked(2 * d, d);
  for (std::size_t rr = 0; rr < d; ++rr)
    for (std::size_t c = 0; c < d; ++c) {
      stacked(rr, c) = ae(rr, c);
      stacked(d + rr, c) = af(rr, c);
    }
  CenterData zc = center(s);
  r.tds_centralizer = kernel(stacked).size() == zc.z_h.size() + zc.z_m.size();
  if (r.abelian_centralizer != r.tds_centralizer)
    throw RouteDisagreement(s.name() + ": quasi-split routes disagree");
  return r;
}

SectionBasis section_basis(const RealForm& s, const NormalTriple& t, const ModuleDecomposition& md) {
  SectionBasis sb;
  sb.f = t.f;
  std::vector<std::pair<int, CVec>> graded;
  for (const auto& b : md.blocks) {
    if (!b.in_m) continue;
    if (b.m == 1)
      sb.z_m_basis.push_back(b.highest);
    else
      graded.push_back({b.m, b.highest});
  }
  std::stable_sort(graded.begin(), graded.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  // Replace the degree-two directions by a basis starting with e itself.
  Span<Scalar> two(s.dim());
  two.add(t.e);
  std::size_t count_two = 0;
  for (const auto& [m, v] : graded)
    if (m == 2) ++count_two;
  sb.e_basis.push_back(t.e);
  sb.degrees.push_back(2);
  // Scale the other directions by the factor 1/(2 sqrt 2) carried by e and f,
  // so a section point with rational gamma is that factor times a Q(i) element.
  const Scalar k = Scalar::sqrt(Rational(2)) * Scalar(Rational(1, 4));
  for (const auto& [m, v] : graded) {
    if (m == 2 && !two.add(v)) continue;
    sb.e_basis.push_back(cscale(k, v));
    sb.degrees.push_back(m);
  }
  if (two.dim() != count_two || count_two == 0)
    throw GradingFailure(s.name() + ": e is not among the degree-two highest vectors");
  return sb;
}

CVec section_point(const SectionBasis& basis, const std::vector<Scalar>& gamma) {
  if (gamma.size() != basis.e_basis.size())
    throw DimensionMismatch("gamma has length " + std::to_string(gamma.size()) + ", expected " +
                            std::to_string(basis.e_basis.size()));
  CVec x = basis.f;
  for (std::size_t i = 0; i < gamma.size(); ++i)
    if (!gamma[i].is_zero()) x = axpy(gamma[i], basis.e_basis[i], std::move(x));
  return x;
}

std::size_t centralizer_dim_in_m(const RealForm& s, const CVec& x) {
  const std::size_t d = s.dim(), dh = s.dim_h();
  if (!s.in_m(x)) throw DimensionMismatch(s.name() + ": element is not in m^C");
  // Rescaling does not change the rank and usually clears the radicals.
  CVec y = x;
  for (const auto& v : x)
    if (!v.is_zero()) {
      y = cscale(v.inverse(), std::move(y));
      break;
    }
  return (d - dh) - rank(s.ad_block(y, 0, dh, dh, d));
}

bool is_regular(const RealForm& s, const CVec& x) {
  return centralizer_dim_in_m(s, x) == s.real_rank();
}

CVec defining_charpoly(const RealForm& s, const CVec& x) { return charpoly(s.to_matrix(x)); }

std::vector<Scalar> section_fiber_match(const RealForm& s, const SectionBasis& basis,
                                        const CVec& d) {
  const std::size_t n = s.matrix_size();
  const std::size_t r = basis.e_basis.size();
  bool in_a = s.in_m(d);
  for (std::size_t j = 0; in_a && j < s.real_rank(); ++j) in_a = is_zero_vec(s.bracket(s.a_element(j), d));
  if (!in_a || !is_regular(s, d))
    throw InvalidParams(s.name() + ": fiber matching needs a regular semisimple target");
  CVec target = defining_charpoly(s, d);
  std::vector<Scalar> gamma(r);
  for (std::size_t i = 0; i < r; ++i) {
    const std::size_t deg = static_cast<std::size_t>(basis.degrees[i]);
    for (std::size_t j = 0; j < r; ++j)
      if (j != i && basis.degrees[j] == basis.degrees[i])
        throw NoSolution(s.name() + ": repeated degree " + std::to_string(deg) +
                         "; the characteristic polynomial does not separate the directions");
    if (deg > n) throw NoSolution(s.name() + ": degree exceeds the representation size");
    // The degree-m_i coefficient is affine in gamma_i once the later ones vanish.
    gamma[i] = Scalar(0);
    Scalar f0 = defining_charpoly(s, section_point(basis, gamma))[n - deg];
    gamma[i] = Scalar(1);
    Scalar f1 = defining_charpoly(s, section_point(basis, gamma))[n - deg];
    Scalar slope = f1 - f0;
    Scalar rhs = target[n - deg] - f0;
    if (slope.is_zero()) {
      if (rhs.is_zero())
        throw NonUnique(s.name() + ": coefficient of degree " + std::to_string(deg) +
                        " does not depend on gamma_" + std::to_string(i + 1));
      throw NoSolution(s.name() + ": coefficient of degree " + std::to_string(deg) +
                       " cannot be matched");
    }
    gamma[i] = rhs / slope;
  }
  if (defining_charpoly(s, section_point(basis, gamma)) != target)
    throw NoSolution(s.name() + ": characteristic polynomials differ after solving");
  return gamma;
}

}  // namespace hkr
