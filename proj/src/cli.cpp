#include "hkr/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <ostream>
#include <sstream>

#include "hkr/serialize.hpp"
#include "hkr/verify.hpp"

namespace hkr {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<Scalar> parse_gamma(const std::string& text) {
  std::vector<Scalar> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Scalar::parse(item));
  return out;
}

FormId parse_form(const std::string& text) {
  try {
    return FormId::parse(text);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

void print_matrix(std::ostream& out, const Mat& m, const std::string& indent = "  ") {
  std::vector<std::vector<std::string>> cells(m.rows());
  std::size_t width = 1;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      cells[r].push_back(m(r, c).str());
      width = std::max(width, cells[r].back().size());
    }
  for (const auto& row : cells) {
    out << indent << "[";
    for (std::size_t c = 0; c < row.size(); ++c)
      out << (c ? "  " : "") << std::string(width - row[c].size(), ' ') << row[c];
    out << "]\n";
  }
}

template <class T>
std::string join(const std::vector<T>& v, const std::string& sep = ", ") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

std::string qvec_str(const QVec& v) {
  std::vector<std::string> parts;
  for (const auto& q : v) parts.push_back(q.get_str());
  return "(" + join(parts) + ")";
}

int cmd_list(bool json, std::ostream& out) {
  const auto forms = default_forms();
  if (json) {
    Json arr = Json::array();
    for (const auto& id : forms)
      arr.push_back({{"form", id.str()}, {"label", id.label()}, {"matrix_size", id.matrix_size()}});
    out << Json{{"schema", kSchemaVersion}, {"forms", arr}}.dump(2) << "\n";
    return 0;
  }
  for (const auto& id : forms) {
    auto e = lookup_table1(id);
    out << id.str() << std::string(id.str().size() < 18 ? 18 - id.str().size() : 1, ' ') << id.label()
        << "  restricted " << e.restricted_type << ", split subalgebra " << e.split_sub << "\n";
  }
  return 0;
}

int cmd_describe(const FormId& id, bool json, std::ostream& out) {
  FormAnalysis fa(id);
  if (json) {
    out << describe_json(fa).dump(2) << "\n";
    return 0;
  }
  const auto& rd = fa.roots;
  out << fa.id.label() << "  (" << fa.id.str() << ")\n"
      << "  dim " << fa.form.dim() << " = " << fa.form.dim_h() << " (h) + " << fa.form.dim_m()
      << " (m), real rank " << fa.form.real_rank() << "\n"
      << "  restricted roots: type " << rd.type.label() << ", reduced " << rd.reduced_type.label()
      << ", |W| = " << rd.weyl_order << ", exponents " << join(fa.exponents) << "\n";
  for (auto k : rd.positive)
    out << "    " << qvec_str(rd.roots[k].coords) << "  mult " << rd.roots[k].multiplicity
        << (rd.is_reduced(k) ? "" : "  (not reduced)") << "\n";
  std::vector<std::string> simple;
  for (auto k : rd.simple) simple.push_back(qvec_str(rd.roots[k].coords));
  out << "  simple: " << join(simple) << "\n"
      << "  roots of g^C: " << fa.complex_roots.num_roots << " (" << fa.complex_roots.num_imaginary
      << " imaginary, " << fa.complex_roots.num_real << " real, " << fa.complex_roots.num_complex
      << " complex)\n"
      << "  maximal split subalgebra: " << fa.table.split_sub << ", dim " << fa.split.basis.size()
      << ", type " << fa.split.type.label() << "\n"
      << "  split: " << (fa.is_split() ? "yes" : "no")
      << ", quasi-split: " << (fa.quasi.value() ? "yes" : "no") << "\n";
  return 0;
}

int cmd_hkr(const FormId& id, bool json, std::ostream& out) {
  FormAnalysis fa(id);
  if (json) {
    out << hkr_json(fa).dump(2) << "\n";
    return 0;
  }
  const auto& s = fa.form;
  out << fa.id.label() << ": principal normal triple, relations verified\n";
  out << "w =\n";
  print_matrix(out, s.to_matrix(fa.tds.w));
  out << "e =\n";
  print_matrix(out, s.to_matrix(fa.triple.e));
  out << "f =\n";
  print_matrix(out, s.to_matrix(fa.triple.f));
  out << "x =\n";
  print_matrix(out, s.to_matrix(fa.triple.x));
  for (std::size_t i = 1; i < fa.section.e_basis.size(); ++i) {
    out << "e_" << i + 1 << " (degree " << fa.section.degrees[i] << ") =\n";
    print_matrix(out, s.to_matrix(fa.section.e_basis[i]));
  }
  out << "maximal split subalgebra: " << fa.table.split_sub << "\n";
  return 0;
}

int cmd_section(const FormId& id, const std::string& gamma_text, bool json, std::ostream& out) {
  FormAnalysis fa(id);
  std::vector<Scalar> gamma = gamma_text.empty()
                                  ? std::vector<Scalar>(fa.section.e_basis.size(), Scalar(0))
                                  : parse_gamma(gamma_text);
  if (gamma.size() != fa.section.e_basis.size())
    throw UsageError("--gamma needs " + std::to_string(fa.section.e_basis.size()) + " entries");
  Json j = section_json(fa, gamma);
  if (json) {
    out << j.dump(2) << "\n";
    return 0;
  }
  out << fa.id.label() << ": f + sum gamma_i e_i, degrees " << join(fa.section.degrees) << "\n";
  print_matrix(out, matrix_from_json(j["point"]));
  out << "regular: " << (j["regular"].get<bool>() ? "true" : "false") << " (dim c_m = "
      << j["centralizer_dim"].get<std::size_t>() << ")\n";
  return 0;
}

int cmd_dims(const FormId& id, const CurveContext& ctx, long n_cosets, bool json, std::ostream& out) {
  FormAnalysis fa(id);
  DimensionReport rep = dimension_report(fa, ctx);
  Json j = dims_json(rep);
  std::optional<Integer> comps;
  if (n_cosets > 0) comps = component_count(Integer(n_cosets), ctx.genus);
  if (json) {
    if (comps) j["component_count"] = comps->get_str();
    out << j.dump(2) << "\n";
    return 0;
  }
  const auto& s = rep.structure;
  out << fa.id.label() << ", g = " << ctx.genus << ", L = " << ctx.label() << " (degree " << ctx.d_L
      << ")\n"
      << "  a = " << s.a << ", b = " << s.b << ", c = " << s.c << ", dim z_m = " << s.dim_z_m
      << ", dim z_h = " << s.dim_z_h << "\n"
      << "  exponents " << join(rep.exponents) << "\n"
      << "  base_dim " << rep.base.value << "\n";
  if (rep.moduli.applicable)
    out << "  expected_moduli_dim " << rep.moduli.value << "\n";
  else
    out << "  expected_moduli_dim not applicable for degree 0\n";
  if (rep.openness)
    out << "  openness terms: roots " << rep.openness->root_term << ", b " << rep.openness->b_term
        << ", z_h " << rep.openness->z_h_term << "\n";
  out << "  hkr_open " << (rep.hkr_open ? "true" : "false") << "\n";
  if (comps) out << "  components " << comps->get_str() << "\n";
  return 0;
}

int cmd_table1(const std::string& label, bool json, std::ostream& out) {
  if (!label.empty()) {
    TableOneEntry e;
    try {
      e = lookup_table1(label);
    } catch (const NotInTable& err) {
      throw UsageError(err.what());
    }
    if (json) {
      Json j = table1_json(e);
      j["schema"] = kSchemaVersion;
      out << j.dump(2) << "\n";
    } else {
      out << e.form << " (" << e.cartan_class << "): maximal split subalgebra " << e.split_sub
          << ", restricted type " << e.restricted_type << ", quasi-split "
          << (e.quasi_split ? "yes" : "no") << "\n";
    }
    return 0;
  }
  if (json) {
    Json rows = Json::array();
    for (const auto& r : table1_rows())
      rows.push_back({{"class", r.cartan_class}, {"form", r.form}, {"split_sub", r.split_sub}});
    out << Json{{"schema", kSchemaVersion}, {"rows", rows}}.dump(2) << "\n";
    return 0;
  }
  for (const auto& r : table1_rows())
    out << r.cartan_class << std::string(r.cartan_class.size() < 8 ? 8 - r.cartan_class.size() : 1, ' ')
        << r.form << std::string(r.form.size() < 22 ? 22 - r.form.size() : 1, ' ') << r.split_sub << "\n";
  return 0;
}

int cmd_lemma73(int n, bool json, std::ostream& out) {
  std::vector<int> ns = n ? std::vector<int>{n} : std::vector<int>{3, 5};
  bool ok = true;
  Json all = Json::array();
  for (int k : ns) {
    SoStarReport rep = so_star_lemma_check(k);
    ok = ok && rep.computed_ok();
    if (json) {
      all.push_back(lemma73_json(rep));
      continue;
    }
    out << "so*(" << 2 * k << ")\n";
    for (const auto& c : rep.computed)
      out << "  computed " << c.what << ": tr A = " << c.trace_a << ", tr B = " << c.trace_b
          << (c.ok() ? "" : "  FAIL") << "\n";
    for (const auto& c : rep.displayed)
      out << "  displayed " << c.what << ": tr A = " << c.trace_a << ", tr B = " << c.trace_b << "\n";
    for (const auto& note : rep.displayed_notes) out << "  note: " << note << "\n";
    if (k == 3) {
      out << "  displayed y lies in g_lambda: " << (rep.reproduces_displayed ? "yes" : "no") << "\n";
      if (rep.closest) {
        out << "  eigenvector agreeing on rows 1-5 (differs in rows " << join(rep.differing_rows)
            << "):\n";
        print_matrix(out, *rep.closest, "    ");
      }
    }
  }
  if (json) out << Json{{"schema", kSchemaVersion}, {"reports", all}}.dump(2) << "\n";
  return ok ? 0 : 1;
}

int cmd_verify(const std::string& form, bool all, const VerifyOptions& opt, bool json,
               std::ostream& out) {
  if (all == !form.empty()) throw UsageError("verify needs either a form or --all");
  std::vector<FormId> forms = all ? default_forms() : std::vector<FormId>{parse_form(form)};
  std::vector<CheckResult> results;
  const CheckResult* first_failure = nullptr;
  auto t0 = std::chrono::steady_clock::now();
  for (const auto& id : forms) {
    auto rs = verify_form(id, opt);
    for (auto& r : rs) {
      if (!json) {
        out << (!r.applicable ? "SKIP" : r.ok ? "PASS" : "FAIL") << "  " << r.form << "  " << r.check;
        if (!r.detail.empty()) out << "  " << r.detail;
        out << "\n" << std::flush;
      }
      results.push_back(std::move(r));
    }
  }
  for (const auto& r : results)
    if (!r.ok) {
      first_failure = &r;
      break;
    }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (json) {
    Json arr = Json::array();
    for (const auto& r : results)
      arr.push_back({{"form", r.form},
                     {"check", r.check},
                     {"ok", r.ok},
                     {"applicable", r.applicable},
                     {"detail", r.detail}});
    Json j{{"schema", kSchemaVersion}, {"seed", opt.seed}, {"results", arr}, {"ok", !first_failure}};
    if (first_failure)
      j["first_failure"] = first_failure->form + " " + first_failure->check + ": " + first_failure->detail;
    out << j.dump(2) << "\n";
  } else {
    std::size_t failed = 0;
    for (const auto& r : results) failed += r.ok ? 0 : 1;
    out << results.size() << " checks on " << forms.size() << " forms, " << failed << " failed ("
        << std::fixed << std::setprecision(1) << secs << " s)\n";
    if (first_failure)
      out << "first failure: " << first_failure->form << " " << first_failure->check << ": "
          << first_failure->detail << "\n";
  }
  return first_failure ? 1 : 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kostant-Rallis sections and Hitchin base dimensions for classical real forms", "hkr"};
  app.require_subcommand(1);
  bool json = false;
  std::string form, gamma, line = "K", label;
  int genus = 2, lemma_n = 0;
  long n_cosets = 0;
  bool all = false;
  VerifyOptions vopt;

  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", json, "Emit JSON"); };
  auto* list = app.add_subcommand("list", "List the built-in forms");
  add_json(list);
  auto* describe = app.add_subcommand("describe", "Restricted roots, types and the split subalgebra");
  describe->add_option("form", form, "Form, e.g. su:p=1,q=2")->required();
  add_json(describe);
  auto* hkr = app.add_subcommand("hkr", "Principal normal triple and section basis");
  hkr->add_option("form", form, "Form")->required();
  add_json(hkr);
  auto* section = app.add_subcommand("section", "Point f + sum gamma_i e_i of the section");
  section->add_option("form", form, "Form")->required();
  section->add_option("--gamma", gamma, "Comma-separated scalars");
  section->add_option("--genus", genus, "Genus (accepted for symmetry with dims)");
  add_json(section);
  auto* dims = app.add_subcommand("dims", "Hitchin base and expected moduli dimensions");
  dims->add_option("form", form, "Form")->required();
  dims->add_option("--genus", genus, "Genus, at least 2");
  dims->add_option("--L", line, "K, O or deg:<int>");
  dims->add_option("--N", n_cosets, "Number of cosets N, to count components");
  add_json(dims);
  auto* table1 = app.add_subcommand("table1", "Maximal split subalgebras by form");
  table1->add_option("label", label, "Row label, e.g. su(1,2) or e6(-26)");
  add_json(table1);
  auto* lemma73 = app.add_subcommand("lemma73", "Block traces of the so*(6) and so*(10) triples");
  lemma73->add_option("--n", lemma_n, "3 or 5")->check(CLI::IsMember({3, 5}));
  add_json(lemma73);
  auto* verify = app.add_subcommand("verify", "Run the invariant suites");
  verify->add_option("form", form, "Form");
  verify->add_flag("--all", all, "All built-in forms");
  verify->add_option("--seed", vopt.seed, "Seed for the sampling checks");
  verify->add_option("--samples", vopt.regularity_samples, "Regularity samples per form")
      ->check(CLI::PositiveNumber);
  add_json(verify);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (list->parsed()) return cmd_list(json, out);
    if (describe->parsed()) return cmd_describe(parse_form(form), json, out);
    if (hkr->parsed()) return cmd_hkr(parse_form(form), json, out);
    if (section->parsed()) return cmd_section(parse_form(form), gamma, json, out);
    if (dims->parsed()) {
      CurveContext ctx;
      try {
        ctx = CurveContext::parse(line, genus);
        ctx.validate();
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
      return cmd_dims(parse_form(form), ctx, n_cosets, json, out);
    }
    if (table1->parsed()) return cmd_table1(label, json, out);
    if (lemma73->parsed()) return cmd_lemma73(lemma_n, json, out);
    if (verify->parsed()) return cmd_verify(form, all, vopt, json, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace hkr
