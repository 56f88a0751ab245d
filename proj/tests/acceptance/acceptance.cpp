// Acceptance criteria, one per invocation: `hkr_acceptance <id>` prints a
// single PASS/FAIL line and exits nonzero on failure. `all` runs every one.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <regex>
#include <sstream>

#include "hkr/cli.hpp"
#include "hkr/verify.hpp"
#include "oracles.hpp"

using namespace hkr;

namespace {

struct Result {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Dimension of a split algebra from its name, independently of the table.
int split_dim_from_name(const std::string& name) {
  std::smatch m;
  static const std::regex sl(R"(^sl\((\d+),R\)$)"), so(R"(^so\((\d+),(\d+)\)$)"),
      sp(R"(^sp\((\d+),R\)$)");
  if (std::regex_match(name, m, sl)) {
    int n = std::stoi(m[1]);
    return n * n - 1;
  }
  if (std::regex_match(name, m, so)) {
    int n = std::stoi(m[1]) + std::stoi(m[2]);
    return n * (n - 1) / 2;
  }
  if (std::regex_match(name, m, sp)) {
    int n = std::stoi(m[1]) / 2;
    return n * (2 * n + 1);
  }
  return -1;
}

// Split real forms among the built-in ones: sl(n,R), sp(2n,R), so(p,q) with
// |p - q| <= 1, and su(1,1) = sl(2,R).
bool expected_split(const FormId& id) {
  switch (id.family) {
    case Family::sl_R:
    case Family::sp2n_R: return true;
    case Family::so_pq: return std::abs(id.p - id.q) <= 1;
    case Family::su_pq: return id.p == 1 && id.q == 1;
    default: return false;
  }
}

// Quasi-split: split forms, su(p,p), su(p,p+1), so(p,p+2) and the complex
// groups; every other built-in form is not.
bool expected_quasi_split(const FormId& id) {
  if (expected_split(id)) return true;
  switch (id.family) {
    case Family::su_pq: return std::abs(id.p - id.q) <= 1;
    case Family::so_pq: return std::abs(id.p - id.q) == 2;
    case Family::sl_C_as_real: return true;
    default: return false;
  }
}

Result table_reproduction() {
  const auto t0 = Clock::now();
  const std::vector<FormId> rows = {
      FormId::su(1, 2),  FormId::su(1, 3),   FormId::su(2, 3),   FormId::su(2, 2),
      FormId::su(3, 3),  FormId::sp(1, 2),   FormId::su_star(2), FormId::so(2, 3),
      FormId::so(2, 4),  FormId::so(3, 3),   FormId::so_star(3), FormId::so_star(4),
      FormId::sl_r(2),   FormId::sl_r(3),    FormId::sl_r(4),    FormId::sp_r(1),
      FormId::sp_r(2),   FormId::sp_r(3),    FormId::sl_c(2)};
  Result r;
  for (const auto& id : rows) {
    try {
      FormAnalysis fa(id);
      const int want = split_dim_from_name(fa.table.split_sub);
      if (static_cast<int>(fa.split.basis.size()) != want || fa.table.split_dim != want)
        r.fail(id.label() + ": split dimension " + std::to_string(fa.split.basis.size()) +
               ", row " + fa.table.split_sub);
      if (fa.split.type.canonical() != canonical_type_label(fa.table.reduced_type))
        r.fail(id.label() + ": split type " + fa.split.type.label() + ", row " +
               fa.table.reduced_type);
    } catch (const std::exception& e) {
      r.fail(id.label() + ": " + e.what());
    }
  }
  const double secs = seconds_since(t0);
  if (secs > 120) r.fail("took " + std::to_string(secs) + " s");
  if (r.ok) r.detail = std::to_string(rows.size()) + " rows in " + std::to_string(int(secs)) + " s";
  return r;
}

bool is_nilpotent_matrix(Mat m) {
  Mat p = m;
  for (std::size_t k = 1; k < m.rows(); ++k) p = p * m;
  return p.is_zero();
}

Result tds_relations() {
  Result r;
  std::size_t forms = 0;
  for (const auto& id : default_forms()) {
    try {
      FormAnalysis fa(id);
      const RealForm& s = fa.form;
      const auto& t = fa.tds;
      const auto& tr = fa.triple;
      const std::string n = id.label() + ": ";
      CVec w = to_cvec(t.w);
      if (s.bracket(w, t.e_c) != scale(Scalar(2), t.e_c)) r.fail(n + "[w,e_c] != 2e_c");
      if (s.bracket(w, t.f_c) != scale(Scalar(-2), t.f_c)) r.fail(n + "[w,f_c] != -2f_c");
      for (std::size_t i = 0; i < t.b.size(); ++i)
        if (sgn(t.b[i]) >= 0 || sgn(t.c[i]) <= 0) r.fail(n + "sign of b_i or c_i");
      Span<Rational> a(s.dim());
      for (const auto& v : s.a_coords()) a.add(v);
      auto wc = a.coords(t.w);
      if (!wc) {
        r.fail(n + "w is not in a");
        continue;
      }
      for (auto k : fa.roots.simple) {
        Rational v;
        for (std::size_t j = 0; j < wc->size(); ++j) v += fa.roots.roots[k].coords[j] * (*wc)[j];
        if (v != 2) r.fail(n + "simple root takes " + v.get_str() + " on w");
      }
      if (s.bracket(tr.x, tr.e) != tr.e) r.fail(n + "[x,e] != e");
      if (s.bracket(tr.x, tr.f) != scale(Scalar(-1), tr.f)) r.fail(n + "[x,f] != -f");
      if (s.bracket(tr.e, tr.f) != tr.x) r.fail(n + "[e,f] != x");
      if (!s.in_m(tr.e) || !s.in_m(tr.f)) r.fail(n + "e or f not in m^C");
      if (!s.in_h(tr.x)) r.fail(n + "x not in h^C");
      if (!is_nilpotent_matrix(s.to_matrix(tr.e)) || !is_nilpotent_matrix(s.to_matrix(tr.f)))
        r.fail(n + "e or f not nilpotent");
      ++forms;
    } catch (const std::exception& e) {
      r.fail(id.label() + ": " + e.what());
    }
  }
  if (r.ok) r.detail = std::to_string(forms) + " forms";
  return r;
}

Result section_regularity() {
  Result r;
  std::mt19937_64 rng(0);
  std::size_t samples = 0;
  for (const auto& id : default_forms()) {
    try {
      FormAnalysis fa(id);
      const std::size_t a = fa.form.real_rank();
      for (int k = 0; k < 100; ++k) {
        auto gamma = random_gamma(rng, fa.section.e_basis.size());
        CVec p = section_point(fa.section, gamma);
        ++samples;
        if (centralizer_dim_in_m(fa.form, p) != a) {
          r.fail(id.label() + ": irregular section point at sample " + std::to_string(k));
          break;
        }
      }
    } catch (const std::exception& e) {
      r.fail(id.label() + ": " + e.what());
    }
  }
  if (r.ok) r.detail = std::to_string(samples) + " points, all regular";
  return r;
}

Result module_identities() {
  Result r;
  for (const auto& id : default_forms()) {
    try {
      FormAnalysis fa(id);
      std::size_t total = 0, ones = 0;
      for (const auto& b : fa.modules.blocks) {
        total += 2 * b.m - 1;
        ones += b.m == 1;
      }
      const std::size_t z = fa.center.z_h.size() + fa.center.z_m.size();
      const bool qs = fa.quasi.value();
      if (total != fa.form.dim()) r.fail(id.label() + ": block dimensions do not add up");
      if (qs && ones != z) r.fail(id.label() + ": quasi-split but extra trivial blocks");
      if (!qs && ones <= z) r.fail(id.label() + ": not quasi-split but no extra trivial blocks");
      if (qs != expected_quasi_split(id)) r.fail(id.label() + ": quasi-split flag");
      if (qs != fa.quasi.tds_centralizer) r.fail(id.label() + ": quasi-split routes differ");
    } catch (const std::exception& e) {
      r.fail(id.label() + ": " + e.what());
    }
  }
  if (r.ok) r.detail = std::to_string(default_forms().size()) + " forms";
  return r;
}

Result exponent_oracle() {
  const auto t0 = Clock::now();
  Result r;
  std::size_t groups = 0;
  auto compare = [&](const std::string& what, const WeylGroup& w, const std::vector<int>& shipped) {
    auto got = oracle::molien_degrees(w, 13);
    ++groups;
    if (got != shipped) r.fail(what + ": Molien degrees differ from the exponent table");
  };
  const std::pair<const char*, int> types[] = {{"A", 1}, {"A", 2}, {"A", 3}, {"A", 4}, {"B", 2},
                                               {"B", 3}, {"B", 4}, {"C", 3}, {"C", 4}, {"D", 4},
                                               {"G", 2}, {"F", 4}};
  for (const auto& [fam, n] : types) {
    auto [simple, gram] = oracle::symmetrized(standard_cartan(fam, n));
    compare(std::string(fam) + "_" + std::to_string(n), weyl_group(simple, gram),
            exponents(CartanType{{CartanComponent{fam, n, {}}}}));
  }
  for (const auto& id : default_forms()) {
    try {
      auto d = restricted_roots(build(id));
      if (d.real_rank > 4) continue;
      compare(id.label(), weyl_group(d), exponents(d.reduced_type));
    } catch (const std::exception& e) {
      r.fail(id.label() + ": " + e.what());
    }
  }
  const double secs = seconds_since(t0);
  if (secs > 60) r.fail("oracle took " + std::to_string(secs) + " s");
  if (r.ok) r.detail = std::to_string(groups) + " groups in " + std::to_string(int(secs)) + " s";
  return r;
}

std::vector<CurveContext> dimension_contexts() {
  std::vector<CurveContext> out;
  for (int g : {2, 3}) {
    out.push_back(CurveContext::K(g));
    out.push_back(CurveContext::degree(g, 2L * g - 1));
    out.push_back(CurveContext::degree(g, 4L * g));
  }
  return out;
}

Result dimension_routes() {
  Result r;
  std::size_t cases = 0;
  for (const auto& id : default_forms()) {
    try {
      FormAnalysis fa(id);
      const auto s = fa.summary();
      for (const auto& ctx : dimension_contexts()) {
        const std::string n = id.label() + " g=" + std::to_string(ctx.genus) + " L=" + ctx.label();
        auto base = hitchin_base_dim(s, ctx);
        auto mod = expected_moduli_dim(s, ctx);
        ++cases;
        if (Rational(base.direct) != base.closed) r.fail(n + ": base routes differ");
        if (mod.closed != mod.graded) r.fail(n + ": moduli routes differ");
        if (s.is_quasi_split && (!mod.smooth || *mod.smooth != mod.closed))
          r.fail(n + ": smooth-point count differs");
        if ((base.value == mod.value) != expected_split(id))
          r.fail(n + ": base " + std::to_string(base.value) + ", expected dimension " +
                 std::to_string(mod.value));
      }
    } catch (const std::exception& e) {
      r.fail(id.label() + ": " + e.what());
    }
  }
  if (r.ok) r.detail = std::to_string(cases) + " cases";
  return r;
}

Result split_openness() {
  Result r;
  std::size_t open = 0;
  for (const auto& id : default_forms()) {
    try {
      FormAnalysis fa(id);
      const auto s = fa.summary();
      for (const auto& ctx : dimension_contexts()) {
        const std::string n = id.label() + " g=" + std::to_string(ctx.genus) + " L=" + ctx.label();
        auto t = split_openness_test(s, ctx);
        if (t.open != expected_split(id)) r.fail(n + ": openness " + (t.open ? "true" : "false"));
        const bool terms = s.b == 0 && s.num_roots == s.num_reduced_restricted;
        if (terms != t.open) r.fail(n + ": term breakdown disagrees with openness");
        if (t.open != (t.b_term == 0 && t.root_term == 0)) r.fail(n + ": nonzero term when open");
        open += t.open;
      }
    } catch (const std::exception& e) {
      r.fail(id.label() + ": " + e.what());
    }
  }
  if (r.ok) r.detail = std::to_string(open) + " open cases, all on split forms";
  return r;
}

Result so_star_block_traces() {
  Result r;
  for (int n : {3, 5}) {
    try {
      auto rep = so_star_lemma_check(n);
      for (const auto& c : rep.computed)
        if (!c.ok())
          r.fail("so*(" + std::to_string(2 * n) + ") " + c.what + ": traces " + c.trace_a.str() +
                 ", " + c.trace_b.str());
      if (rep.computed.size() < 2) r.fail("so*(" + std::to_string(2 * n) + "): nothing checked");
    } catch (const std::exception& e) {
      r.fail(e.what());
    }
  }
  if (r.ok) r.detail = "x and y_i of so*(6) and so*(10) have trace-free blocks";
  return r;
}

Result so_star_displayed_matrix() {
  Result r;
  try {
    auto rep = so_star_lemma_check(3);
    if (!rep.reproduces_displayed) {
      std::string rows;
      for (auto k : rep.differing_rows) rows += (rows.empty() ? "" : ",") + std::to_string(k);
      r.fail("displayed y is not a multiple of any element of g_lambda" +
             std::string(rep.displayed_in_algebra ? "" : " (it is not in so*(6))") +
             "; nearest eigenvector differs in row " + rows);
    }
  } catch (const std::exception& e) {
    r.fail(e.what());
  }
  return r;
}

Result fiber_matching() {
  Result r;
  std::mt19937_64 rng(0);
  std::size_t matched = 0, pairs = 0, skipped = 0;
  for (const auto& id : default_forms()) {
    try {
      FormAnalysis fa(id);
      const std::string ref = fa.table.reduced_type;
      const bool abc = ref.rfind("A", 0) == 0 || ref.rfind("B", 0) == 0 || ref.rfind("C", 0) == 0;
      if (!abc) {
        ++skipped;
        continue;
      }
      if (auto why = fa.fiber_match_obstruction()) {
        r.fail(id.label() + ": " + *why);
        continue;
      }
      const RealForm& s = fa.form;
      for (int k = 0; k < 25; ++k) {
        std::vector<Rational> coeffs;
        do {
          coeffs.clear();
          for (std::size_t j = 0; j < s.real_rank(); ++j) coeffs.push_back(random_rational(rng));
        } while (!fa.is_regular_in_a(coeffs));
        CVec d = fa.a_element(coeffs);
        auto gamma = section_fiber_match(s, fa.section, d);
        if (defining_charpoly(s, section_point(fa.section, gamma)) != defining_charpoly(s, d)) {
          r.fail(id.label() + ": charpoly mismatch at sample " + std::to_string(k));
          break;
        }
        ++matched;
      }
      for (int k = 0; k < 100;) {
        auto g1 = random_gamma(rng, fa.section.e_basis.size());
        auto g2 = random_gamma(rng, fa.section.e_basis.size());
        if (g1 == g2) continue;
        ++k;
        ++pairs;
        if (defining_charpoly(s, section_point(fa.section, g1)) ==
            defining_charpoly(s, section_point(fa.section, g2))) {
          r.fail(id.label() + ": two section points share a characteristic polynomial");
          break;
        }
      }
    } catch (const std::exception& e) {
      r.fail(id.label() + ": " + e.what());
    }
  }
  if (r.ok)
    r.detail = std::to_string(matched) + " fibers matched, " + std::to_string(pairs) +
               " pairs distinct, " + std::to_string(skipped) + " D-type forms not applicable";
  return r;
}

Result sl2_moduli_grid() {
  Result r;
  int cases = 0;
  for (int alpha : {-1, 0, 1, 2})
    for (long d = -3; d <= 3; ++d)
      for (long dl : {0L, 2L, 4L}) {
        // Empty if d > |d_L/2| or d < alpha; otherwise Pic^d when alpha = d,
        // and all semistable when d > alpha.
        Sl2Moduli want;
        if (2 * d > std::abs(dl) || d < alpha)
          want = Sl2Moduli::empty;
        else if (d == alpha)
          want = Sl2Moduli::picard_torsor;
        else
          want = Sl2Moduli::all_semistable;
        ++cases;
        auto got = sl2_moduli_classify(Rational(alpha), d, dl);
        if (got != want)
          r.fail("alpha=" + std::to_string(alpha) + " d=" + std::to_string(d) +
                 " d_L=" + std::to_string(dl) + ": " + to_string(got));
      }
  if (r.ok) r.detail = std::to_string(cases) + " grid points";
  return r;
}

Result verify_all() {
  Result r;
  const auto t0 = Clock::now();
  std::ostringstream out, err;
  const int rc = run({"verify", "--all", "--seed", "0"}, out, err);
  const double secs = seconds_since(t0);
  std::string last;
  std::istringstream lines(out.str());
  for (std::string line; std::getline(lines, line);)
    if (!line.empty()) last = line;
  if (rc != 0) r.fail("exit code " + std::to_string(rc) + ": " + last + err.str());
  if (secs > 600) r.fail("took " + std::to_string(secs) + " s");
  if (r.ok) r.detail = last;
  return r;
}

const std::vector<std::pair<std::string, std::pair<std::string, std::function<Result()>>>>&
criteria() {
  static const std::vector<std::pair<std::string, std::pair<std::string, std::function<Result()>>>>
      list = {
          {"1", {"maximal split subalgebras match the reference rows", table_reproduction}},
          {"2", {"TDS and normal triple relations", tds_relations}},
          {"3", {"section points are regular", section_regularity}},
          {"4", {"module decomposition and quasi-splitness", module_identities}},
          {"5", {"exponents agree with Molien series", exponent_oracle}},
          {"6", {"dimension formulas agree across routes", dimension_routes}},
          {"7", {"split-openness holds exactly on split forms", split_openness}},
          {"8a", {"so* normal triples have trace-free blocks", so_star_block_traces}},
          {"8b", {"so*(6) displayed y reproduced up to a scalar", so_star_displayed_matrix}},
          {"9", {"section fiber matching and injectivity", fiber_matching}},
          {"10", {"SL(2,R) moduli classifier grid", sl2_moduli_grid}},
          {"11", {"verify --all --seed 0", verify_all}},
      };
  return list;
}

bool run_one(const std::string& id, const std::string& name, const std::function<Result()>& fn) {
  Result r;
  try {
    r = fn();
  } catch (const std::exception& e) {
    r.fail(e.what());
  }
  std::cout << "criterion " << id << ": " << (r.ok ? "PASS" : "FAIL") << "  " << name;
  if (!r.detail.empty()) std::cout << "  [" << r.detail << "]";
  std::cout << std::endl;
  return r.ok;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: hkr_acceptance <criterion id | all>\n";
    return 2;
  }
  const std::string want = argv[1];
  bool ok = true, found = false;
  for (const auto& [id, entry] : criteria()) {
    if (want != "all" && want != id) continue;
    found = true;
    ok = run_one(id, entry.first, entry.second) && ok;
  }
  if (!found) {
    std::cerr << "unknown criterion '" << want << "'\n";
    return 2;
  }
  return ok ? 0 : 1;
}
