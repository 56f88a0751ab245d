#include "hkr/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hkr {

Rational random_rational(std::mt19937_64& rng) {
  long p = static_cast<long>(rng() % 19) - 9;
  long q = static_cast<long>(rng() % 4) + 1;
  return frac(p, q);
}

std::vector<Scalar> random_gamma(std::mt19937_64& rng, std::size_t n) {
  std::vector<Scalar> g;
  for (std::size_t i = 0; i < n; ++i) g.push_back(Scalar(random_rational(rng)));
  return g;
}

Mat cayley(const Mat& a) {
  const Mat id = Mat::identity(a.rows());
  return inverse(id - a) * (id + a);
}

Mat exp_nilpotent(const Mat& n) {
  const std::size_t dim = n.rows();
  Mat out = Mat::identity(dim), term = Mat::identity(dim);
  for (std::size_t k = 1; k <= dim; ++k) {
    term = term * n * Scalar(Rational(1, static_cast<long>(k)));
    if (term.is_zero()) break;
    out = out + term;
  }
  return out;
}

std::vector<CVec> nilpotent_directions_in_h(const FormAnalysis& fa) {
  const auto& s = fa.form;
  const std::size_t dh = s.dim_h();
  std::vector<CVec> out;
  if (dh == 0) return out;
  Matrix<Scalar> ax = s.ad_block(fa.triple.x, 0, dh, 0, dh);
  for (long k = 1; k <= static_cast<long>(2 * s.matrix_size()); ++k) {
    Matrix<Scalar> shifted = ax - Matrix<Scalar>::identity(dh) * Scalar(k);
    for (auto& v : kernel(shifted)) {
      v.resize(s.dim());
      out.push_back(std::move(v));
    }
  }
  return out;
}

namespace {

std::uint64_t mix_seed(std::uint64_t seed, const std::string& name) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (unsigned char ch : name) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h ^ (seed * 0x9E3779B97F4A7C15ULL);
}

std::string gamma_str(const std::vector<Scalar>& g) {
  std::string out = "(";
  for (std::size_t i = 0; i < g.size(); ++i) out += (i ? ", " : "") + g[i].str();
  return out + ")";
}

class Suite {
 public:
  explicit Suite(const FormAnalysis& fa) : fa_(fa) {}

  template <class F>
  void run(const std::string& check, F&& body) {
    CheckResult r{fa_.id.str(), check, true, true, ""};
    try {
      body(r);
    } catch (const std::exception& e) {
      r.ok = false;
      r.detail = e.what();
    }
    results_.push_back(std::move(r));
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  const FormAnalysis& fa_;
  std::vector<CheckResult> results_;
};

std::size_t weyl_order_of(const CartanType& t) {
  auto fact = [](std::size_t n) {
    std::size_t f = 1;
    for (std::size_t k = 2; k <= n; ++k) f *= k;
    return f;
  };
  std::size_t order = 1;
  for (const auto& c : t.components) {
    const std::size_t n = static_cast<std::size_t>(c.rank);
    if (c.family == "A") order *= fact(n + 1);
    else if (c.family == "B" || c.family == "C" || c.family == "BC") order *= (std::size_t{1} << n) * fact(n);
    else if (c.family == "D") order *= (std::size_t{1} << (n - 1)) * fact(n);
    else if (c.family == "G") order *= 12;
    else if (c.family == "F") order *= 1152;
    else if (c.family == "E") order *= n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
  }
  return order;
}

void check_roots(const FormAnalysis& fa, CheckResult& r) {
  const auto& rd = fa.roots;
  const auto& s = fa.form;
  std::size_t total = rd.zero_space.size();
  for (const auto& root : rd.roots) total += static_cast<std::size_t>(root.multiplicity);
  if (total != s.dim())
    throw VerificationFailure("root spaces and c_g(a) have total dimension " + std::to_string(total));
  for (std::size_t k = 0; k < rd.roots.size(); ++k)
    if (rd.find(scale(Rational(-1), rd.roots[k].coords)) < 0)
      throw VerificationFailure("root set is not closed under negation");
  std::vector<QVec> hat;
  for (auto k : rd.reduced) hat.push_back(rd.roots[k].coords);
  for (const auto& l : hat) {
    Rational ll = rd.ip(l, l);
    for (const auto& m : hat) {
      Rational n = 2 * rd.ip(m, l) / ll;
      if (n.get_den() != 1) throw VerificationFailure("non-integral Cartan number");
      if (std::find(hat.begin(), hat.end(), axpy(Rational(-n), l, m)) == hat.end())
        throw VerificationFailure("reduced system is not closed under reflections");
      if (m == scale(Rational(2), l)) throw VerificationFailure("reduced system contains a double");
    }
  }
  // Positive roots are nonnegative integer combinations of the simple ones.
  const std::size_t rank = rd.simple.size();
  Matrix<Rational> sm(rd.real_rank, rank);
  for (std::size_t j = 0; j < rank; ++j) sm.set_col(j, rd.roots[rd.simple[j]].coords);
  for (auto k : rd.positive) {
    auto c = solve(sm, rd.roots[k].coords);
    if (!c) throw VerificationFailure("positive root outside the span of the simple roots");
    for (const auto& x : *c)
      if (x.get_den() != 1 || sgn(x) < 0)
        throw VerificationFailure("positive root is not a nonnegative integer combination");
  }
  if (rd.weyl_order != weyl_order_of(rd.reduced_type))
    throw VerificationFailure("Weyl group order " + std::to_string(rd.weyl_order) +
                              " differs from the standard order for " + rd.reduced_type.label());
  const bool bc = rd.type.label().find("BC") != std::string::npos;
  if ((rd.reduced.size() != rd.roots.size()) != bc)
    throw VerificationFailure("reduced system differs from the full one off the BC types");
  const auto& cr = fa.complex_roots;
  if ((cr.num_imaginary == 0) != fa.quasi.value())
    throw VerificationFailure("imaginary roots do not detect quasi-splitness");
  r.detail = std::to_string(rd.roots.size()) + " restricted roots, type " + rd.type.label() +
             ", |W| = " + std::to_string(rd.weyl_order);
}

void check_lie(const FormAnalysis& fa, std::mt19937_64& rng, int samples, CheckResult& r) {
  const auto& s = fa.form;
  check_structure(s);
  const std::size_t d = s.dim();
  auto unit = [&](std::size_t k) {
    QVec v(d);
    v[k] = 1;
    return v;
  };
  for (int t = 0; t < samples; ++t) {
    QVec x = unit(rng() % d), y = unit(rng() % d), z = unit(rng() % d);
    QVec j = add(add(s.bracket(x, s.bracket(y, z)), s.bracket(y, s.bracket(z, x))),
                 s.bracket(z, s.bracket(x, y)));
    if (!is_zero_vec(j)) throw VerificationFailure("Jacobi identity fails on a basis triple");
  }
  // Centralizer in m^C of a random element of g.
  QVec x(d);
  for (std::size_t k = 0; k < d; ++k)
    if (rng() % 3 == 0) x[k] = random_rational(rng);
  Complexification cx = complexify(s);
  Mat xm = s.to_matrix(x);
  Subspace c = centralizer(cx.m, xm);
  for (const auto& v : c.basis()) {
    if (!cx.m.contains(v)) throw VerificationFailure("centralizer leaves m^C");
    if (!bracket(v, xm).is_zero()) throw VerificationFailure("centralizer element does not commute");
  }
  r.detail = "Cartan decomposition, form and Jacobi identity exact";
}

void check_modules(const FormAnalysis& fa, CheckResult& r) {
  const auto& md = fa.modules;
  const auto& s = fa.form;
  std::size_t total = 0, ones = 0, ones_h = 0;
  for (const auto& b : md.blocks) {
    total += 2 * static_cast<std::size_t>(b.m) - 1;
    if (b.m == 1) {
      ++ones;
      if (!b.in_m) ++ones_h;
    }
  }
  if (total != s.dim()) throw VerificationFailure("sum of 2m_k - 1 is " + std::to_string(total));
  const std::size_t zdim = fa.center.z_h.size() + fa.center.z_m.size();
  if (fa.quasi.value() ? ones != zdim : ones <= zdim)
    throw VerificationFailure(std::to_string(ones) + " blocks with m_k = 1 against dim z = " +
                              std::to_string(zdim));
  if (ones_h != md.c) throw VerificationFailure("c differs from the number of trivial blocks in h^C");
  if (static_cast<long>(md.a) - static_cast<long>(md.b) !=
      static_cast<long>(s.dim_m()) - static_cast<long>(s.dim_h()))
    throw VerificationFailure("a - b differs from dim m - dim h");
  std::size_t h_blocks = 0;
  for (const auto& b : md.blocks) h_blocks += b.in_m ? 0 : 1;
  if (h_blocks != md.b) throw VerificationFailure("number of h-located blocks differs from b");
  r.detail = std::to_string(md.blocks.size()) + " blocks, a = " + std::to_string(md.a) +
             ", b = " + std::to_string(md.b) + ", c = " + std::to_string(md.c);
}

void check_regularity(const FormAnalysis& fa, std::mt19937_64& rng, int samples, CheckResult& r) {
  const auto& s = fa.form;
  if (!is_regular(s, fa.section.f)) throw VerificationFailure("f is not regular");
  for (int t = 0; t < samples; ++t) {
    auto g = random_gamma(rng, fa.section.e_basis.size());
    CVec x = section_point(fa.section, g);
    if (!s.in_m(x)) throw VerificationFailure("section point outside m^C at gamma = " + gamma_str(g));
    std::size_t c = centralizer_dim_in_m(s, x);
    if (c != s.real_rank())
      throw VerificationFailure("dim c_m(X) = " + std::to_string(c) + " at gamma = " + gamma_str(g));
  }
  r.detail = std::to_string(samples) + " section points regular";
}

void check_invariance(const FormAnalysis& fa, std::mt19937_64& rng, int samples, CheckResult& r) {
  const auto& s = fa.form;
  const auto nil = nilpotent_directions_in_h(fa);
  int cayleys = 0, exps = 0;
  for (int t = 0; t < samples; ++t) {
    auto g = random_gamma(rng, fa.section.e_basis.size());
    Mat x = s.to_matrix(section_point(fa.section, g));
    Mat u, uinv;
    if (t % 2 == 1 && !nil.empty()) {
      CVec n(s.dim());
      for (const auto& v : nil)
        if (rng() % 2) n = axpy(Scalar(random_rational(rng)), v, std::move(n));
      Mat nm = s.to_matrix(n);
      u = exp_nilpotent(nm);
      uinv = exp_nilpotent(nm * Scalar(-1));
      ++exps;
    } else {
      QVec a(s.dim());
      for (std::size_t k = 0; k < s.dim_h(); ++k) a[k] = random_rational(rng);
      Mat am = s.to_matrix(a);
      u = cayley(am);
      uinv = cayley(am * Scalar(-1));
      ++cayleys;
    }
    if (!(u * uinv == Mat::identity(x.rows()))) throw VerificationFailure("group element inverse");
    Mat y = u * x * uinv;
    auto yc = s.try_coords(y);
    if (!yc || !s.in_m(*yc))
      throw VerificationFailure("conjugated section point leaves m^C at gamma = " + gamma_str(g));
    if (charpoly(y) != charpoly(x))
      throw VerificationFailure("characteristic polynomial changed at gamma = " + gamma_str(g));
    if (centralizer_dim_in_m(s, *yc) != s.real_rank())
      throw VerificationFailure("conjugate is not regular at gamma = " + gamma_str(g));
  }
  r.detail = std::to_string(cayleys) + " Cayley and " + std::to_string(exps) +
             " nilpotent-exponential conjugations";
}

void check_fiber(const FormAnalysis& fa, std::mt19937_64& rng, int samples, CheckResult& r) {
  if (auto why = fa.fiber_match_obstruction()) {
    r.applicable = false;
    r.detail = *why;
    return;
  }
  const auto& s = fa.form;
  for (int t = 0; t < samples; ++t) {
    CVec d;
    for (int attempt = 0;; ++attempt) {
      std::vector<Rational> c;
      for (std::size_t j = 0; j < s.real_rank(); ++j) c.push_back(random_rational(rng));
      d = fa.a_element(c);
      if (fa.is_regular_in_a(c)) break;
      if (attempt > 100) throw VerificationFailure("no regular element of a^C found");
    }
    auto g = section_fiber_match(s, fa.section, d);
    if (defining_charpoly(s, section_point(fa.section, g)) != defining_charpoly(s, d))
      throw VerificationFailure("fiber match does not reproduce the characteristic polynomial");
  }
  r.detail = std::to_string(samples) + " regular semisimple targets matched";
}

void check_injectivity(const FormAnalysis& fa, std::mt19937_64& rng, int pairs, CheckResult& r) {
  if (auto why = fa.fiber_match_obstruction()) {
    r.applicable = false;
    r.detail = *why;
    return;
  }
  const auto& s = fa.form;
  for (int t = 0; t < pairs; ++t) {
    auto g1 = random_gamma(rng, fa.section.e_basis.size());
    auto g2 = random_gamma(rng, fa.section.e_basis.size());
    if (g1 == g2) continue;
    if (defining_charpoly(s, section_point(fa.section, g1)) ==
        defining_charpoly(s, section_point(fa.section, g2)))
      throw VerificationFailure("gamma = " + gamma_str(g1) + " and " + gamma_str(g2) +
                                " have the same characteristic polynomial");
  }
  r.detail = std::to_string(pairs) + " pairs separated";
}

void check_dims(const FormAnalysis& fa, CheckResult& r) {
  const StructureSummary sum = fa.summary();
  std::ostringstream detail;
  for (int g : {2, 3}) {
    for (const auto& ctx : {CurveContext::K(g), CurveContext::degree(g, 2L * g - 1),
                            CurveContext::degree(g, 4L * g)}) {
      DimensionReport rep = dimension_report(fa, ctx);
      const std::string where = " (g = " + std::to_string(g) + ", L = " + ctx.label() + ")";
      if (sum.is_split && rep.base.value != rep.moduli.value)
        throw VerificationFailure("split form with base dimension " + std::to_string(rep.base.value) +
                                  " and expected dimension " + std::to_string(rep.moduli.value) + where);
      if (!rep.openness || rep.hkr_open != sum.is_split)
        throw VerificationFailure("openness differs from splitness" + where);
      if (rep.openness->open && (sum.b != 0 || sum.num_roots != sum.num_reduced_restricted))
        throw VerificationFailure("open, but b or the root counts are off" + where);
      if (g == 2 && ctx.canonical)
        detail << "base " << rep.base.value << ", expected " << rep.moduli.value << " at g = 2, K";
    }
    auto o = hitchin_base_dim(sum, CurveContext::O(g));
    if (o.value != static_cast<long>(sum.a)) throw VerificationFailure("trivial-L base is not dim a");
  }
  r.detail = detail.str();
}

}  // namespace

std::vector<CheckResult> verify_form(const FormAnalysis& fa, const VerifyOptions& opt) {
  std::mt19937_64 rng(mix_seed(opt.seed, fa.id.str()));
  Suite suite(fa);
  suite.run("construction", [&](CheckResult& r) {
    r.detail = "split subalgebra " + fa.table.split_sub + " of dimension " +
               std::to_string(fa.split.basis.size()) + ", type " + fa.split.type.label();
  });
  suite.run("lie_structure", [&](CheckResult& r) { check_lie(fa, rng, opt.jacobi_samples, r); });
  suite.run("root_system", [&](CheckResult& r) { check_roots(fa, r); });
  suite.run("modules", [&](CheckResult& r) { check_modules(fa, r); });
  suite.run("regularity", [&](CheckResult& r) { check_regularity(fa, rng, opt.regularity_samples, r); });
  suite.run("invariance", [&](CheckResult& r) { check_invariance(fa, rng, opt.invariance_samples, r); });
  suite.run("fiber_match", [&](CheckResult& r) { check_fiber(fa, rng, opt.fiber_samples, r); });
  suite.run("injectivity", [&](CheckResult& r) { check_injectivity(fa, rng, opt.injectivity_pairs, r); });
  suite.run("dimensions", [&](CheckResult& r) { check_dims(fa, r); });
  return suite.take();
}

std::vector<CheckResult> verify_form(const FormId& id, const VerifyOptions& opt) {
  try {
    FormAnalysis fa(id);
    return verify_form(fa, opt);
  } catch (const std::exception& e) {
    return {CheckResult{id.str(), "construction", false, true, e.what()}};
  }
}

}  // namespace hkr
