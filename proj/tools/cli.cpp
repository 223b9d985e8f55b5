#include "cli.hpp"

#include <chrono>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hopfkit/algebroid.hpp"
#include "hopfkit/doubles.hpp"
#include "hopfkit/dpr.hpp"
#include "hopfkit/io.hpp"
#include "hopfkit/vertex.hpp"

namespace hopfkit::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Big instances (working dimension 36 and up) run only with --slow.
constexpr std::size_t slow_dim = 36;

struct Options {
  std::string family, input, out, suite, field, report, which, group, cocycle;
  bool slow = false, timings = false;
};

const std::vector<std::string> suite_names = {
    "quasibialgebra", "quasihopf", "quasitriangular", "starproduct", "heisenberg", "factorizable",
    "pentagon",       "algebroid", "corollary",       "vertexgroup", "dpr",        "z3"};

std::string patch_field(const std::string& text, const std::string& field) {
  if (field.empty()) return text;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw io::ParseError(e.what());
  }
  j["field"] = field;
  return j.dump();
}

Field field_or(const Options& o, const char* fallback) {
  return Field::parse(o.field.empty() ? fallback : o.field);
}

GroupTable group_from(const std::string& name_or_file) {
  try {
    return GroupTable::named(name_or_file);
  } catch (const PresentationError&) {
    if (name_or_file.find('/') == std::string::npos && name_or_file.find('.') == std::string::npos) throw;
  }
  return io::read_group_table(io::read_file(name_or_file));
}

bool is_group_file(const std::string& text) {
  try {
    const json j = json::parse(text);
    return j.is_object() && j.contains("order") && j.contains("table");
  } catch (const json::exception&) {
    return false;
  }
}

Presentation load_input(const Options& o) {
  if (!o.input.empty()) {
    const std::string text = io::read_file(o.input);
    if (is_group_file(text)) return hopf::group_algebra(io::read_group_table(text), field_or(o, "q"));
    return io::read_presentation(patch_field(text, o.field));
  }
  if (!o.group.empty()) return hopf::group_algebra(group_from(o.group), field_or(o, "q"));
  throw UsageError("an --input file or --group is required");
}

dpr::Cocycle3 load_cocycle(const Options& o) {
  const std::string& path = o.cocycle.empty() ? o.input : o.cocycle;
  if (path.empty()) throw UsageError("a cocycle file is required (--cocycle)");
  dpr::Cocycle3 w = dpr::read_cocycle(patch_field(io::read_file(path), o.field));
  if (!o.group.empty()) {
    const GroupTable g = group_from(o.group);
    if (g.mul != w.group.mul) throw UsageError("cocycle group does not match --group " + o.group);
  }
  return w;
}

void write_out(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) out << text;
  else io::write_file(o.out, text);
}

// ---- gen ----

int gen(const Options& o, std::ostream& out) {
  const std::string& fam = o.family;
  std::string text;
  if (fam.rfind("group:", 0) == 0) {
    text = io::write_presentation(hopf::group_algebra(group_from(fam.substr(6)), field_or(o, "q")));
  } else if (fam == "dual") {
    text = io::write_presentation(hopf::dual_hopf(load_input(o)));
  } else if (fam == "double") {
    text = io::write_presentation(doubles::drinfeld_double(load_input(o)));
  } else if (fam == "heisenberg") {
    text = io::write_algebra(doubles::heisenberg_double(load_input(o)), true);
  } else if (fam == "tensor-opcop") {
    const Presentation h = load_input(o);
    text = io::write_presentation(hopf::tensor_hopf(h, hopf::variant(h, hopf::Variant::op_cop)));
  } else if (fam == "dpr" || fam.rfind("dpr:", 0) == 0) {
    Options c = o;
    if (fam.size() > 4) c.cocycle = fam.substr(4);
    text = io::write_presentation(dpr::build_dpr(load_cocycle(c)).h);
  } else {
    throw UsageError("unknown family '" + fam + "'");
  }
  write_out(o, text, out);
  return 0;
}

// ---- verify ----

struct Run {
  std::vector<VerdictReport> reports;
  std::vector<double> ms;
};

class SuiteRunner {
 public:
  explicit SuiteRunner(const Options& o) : o_(o) {}

  Run run(const std::string& suite) {
    if (suite == "quasibialgebra") {
      const Presentation h = input(1);
      add([&] { return hopf::check_quasi_bialgebra(h); });
    } else if (suite == "quasihopf") {
      const Presentation h = input(1);
      add([&] { return hopf::check_quasi_hopf(h); });
    } else if (suite == "quasitriangular") {
      const Presentation h = input(1);
      add([&] { return hopf::check_quasitriangular(h); });
    } else if (suite == "starproduct") {
      starproduct(input(1));
    } else if (suite == "heisenberg") {
      const Presentation a = input(2);
      add([&] { return doubles::check_star_equals_heisenberg(a); });
      add([&] { return doubles::check_dual_double_formulas(a); });
    } else if (suite == "factorizable") {
      factorizable();
    } else if (suite == "pentagon") {
      const Presentation a = input(2);
      add([&] { return doubles::pentagon_check(doubles::heisenberg_double(a), doubles::canonical_w(a)); });
      add([&] { return doubles::lambda_check(a); });
      add([&] { return doubles::w_from_r_check(a); });
      add([&] { return doubles::realization_isomorphism_check(a); });
      add([&] { return doubles::alt_star_product_check(a); });
      add([&] { return doubles::phi_splitting(a); });
    } else if (suite == "algebroid") {
      const Presentation a = input(2);
      vl("Lu algebroid over A*", [&] { return algebroid::lu_module(a); });
      vl("algebroid over A, twisted action", [&] { return algebroid::remark_module(a); });
    } else if (suite == "corollary") {
      const Presentation a = input(4);
      add([&] { return algebroid::corollary_instance(a).report; });
    } else if (suite == "vertexgroup") {
      const Presentation a = input(2);
      add([&] { return vertex::check_vertex_group(vertex::heisenberg_vertex_group(a)); }, "Heisenberg vertex group");
      add([&] { return vertex::check_vertex_group(vertex::dual_vertex_group(a)); }, "dual vertex group");
      add([&] { return vertex::restricted_action_check(a); });
      add([&] { return vertex::tau_cross_check(a); });
    } else if (suite == "dpr") {
      dpr_suite();
    } else if (suite == "z3") {
      const Field f = field_or(o_, "cyclo:3");
      add([&] { return doubles::z3_counterexample(f).verdicts; });
    } else {
      throw UsageError("unknown suite '" + suite + "'");
    }
    return std::move(run_);
  }

 private:
  // Loads the input and checks its working dimension dim^power against --slow.
  Presentation input(int power) {
    Presentation h = load_input(o_);
    need(h.dim(), power);
    return h;
  }

  void need(std::size_t n, int power) {
    std::size_t d = 1;
    for (int i = 0; i < power; ++i) d *= n;
    if (d >= slow_dim && !o_.slow)
      throw UsageError("instance of working dimension " + std::to_string(d) + " needs --slow");
  }

  void add(const std::function<VerdictReport()>& f, const std::string& subject = {}) {
    const auto t0 = std::chrono::steady_clock::now();
    VerdictReport r = f();
    if (!subject.empty()) {
      VerdictReport named(subject);
      named.merge(r);
      r = std::move(named);
    }
    run_.ms.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
    run_.reports.push_back(std::move(r));
  }

  void vl(const std::string& name, const std::function<algebroid::ModuleAlgebra()>& make) {
    add([&] {
      VerdictReport r(name);
      try {
        const algebroid::VLAlgebroid a = algebroid::build_VL_algebroid(make());
        r.merge(a.preconditions, "preconditions: ");
        r.merge(algebroid::check_bialgebroid(a.p), "bialgebroid: ");
        r.merge(algebroid::check_hopf_algebroid(a.p), "hopf algebroid: ");
        r.merge(algebroid::check_vl_identities(a), "V # L: ");
      } catch (const algebroid::PreconditionError& e) {
        r.merge(e.report, "preconditions: ");
      }
      return r;
    });
  }

  void starproduct(const Presentation& h) {
    const star::StarProduct s = star::build_star_product(h);
    add([&] { return star::check_bimodule_algebra(s); });
    add([&] { return star::check_quantum_commutative_lr(s); });
    add([&] {
      VerdictReport r("left quantum commutativity");
      const bool trivial = star::r_is_trivial(s);
      r.add("holds exactly when R = 1 (x) 1").check(star::check_left_quantum_commutative(s).passed() == trivial);
      r.note("R = 1 (x) 1", trivial);
      return r;
    });
    if (h.has_trivial_phi() && h.antipode) add([&] { return star::check_covariantised(s); });
  }

  void factorizable() {
    Presentation h = load_input(o_);
    if (!h.R) {
      const Presentation a = h;
      need(a.dim(), 2);
      add([&] { return doubles::double_q_explicit(a); });
      h = doubles::drinfeld_double(a);
    } else {
      need(h.dim(), 1);
    }
    const doubles::Factorizability fz = doubles::factorizability(h);
    add([&] {
      VerdictReport r("factorizability");
      r.add("Q bijective").check(fz.q_inv.has_value());
      return r;
    });
    add([&] { return doubles::radford_check(h); });
    add([&] { return doubles::check_drinfeld_element(h); });
    add([&] { return doubles::q_multiplicativity(h); });
    add([&] { return star::check_covariantised(star::build_star_product(h), &fz.q); });
  }

  void dpr_suite() {
    const dpr::Cocycle3 w = load_cocycle(o_);
    need(w.order(), 2);
    add([&] { return dpr::check_3cocycle(w); });
    const dpr::DPRAlgebra d = dpr::build_dpr(w);
    add([&] { return hopf::check_quasi_bialgebra(d.h); });
    add([&] { return hopf::check_quasitriangular(d.h); });
    add([&] { return dpr::gamma_theta_identity(d); });
    add([&] { return dpr::dpr_star_product(d).report; });
    const star::StarProduct s = star::build_star_product(d.h);
    add([&] { return star::check_bimodule_algebra(s); });
    add([&] { return star::check_quantum_commutative_lr(s); });
    add([&] {
      VerdictReport r("associator");
      r.note("phi trivial", d.h.has_trivial_phi());
      return r;
    });
    if (d.h.has_trivial_phi()) {
      add([&] { return dpr::trivial_reduction(d); });
      add([&] { return dpr::check_trivial_is_double_cop(d); });
    }
  }

  const Options& o_;
  Run run_;
};

bool all_passed(const Run& r) {
  for (const auto& rep : r.reports)
    if (!rep.passed()) return false;
  return true;
}

int verify(const Options& o, std::ostream& out) {
  if (o.suite.empty()) throw UsageError("--suite is required");
  const Run r = SuiteRunner(o).run(o.suite);
  const bool ok = all_passed(r);
  std::ostringstream text;
  for (std::size_t i = 0; i < r.reports.size(); ++i) {
    text << "== " << r.reports[i].subject();
    if (o.timings) text << " (" << static_cast<long>(r.ms[i]) << " ms)";
    text << "\n" << r.reports[i].summary();
  }
  if (o.suite == "z3") {
    const Verdict* v = r.reports.front().find("W12 W13 W23 != W23 W12");
    text << "pentagon: " << (v && v->passed() ? "FAILS (as claimed)" : "holds (claim not reproduced)") << "\n";
  }
  text << "suite " << o.suite << ": " << (ok ? "PASS" : "FAIL") << "\n";
  out << text.str();
  if (!o.report.empty()) {
    json j;
    j["suite"] = o.suite;
    if (!o.input.empty()) j["input"] = o.input;
    if (!o.group.empty()) j["group"] = o.group;
    if (!o.cocycle.empty()) j["cocycle"] = o.cocycle;
    if (!o.field.empty()) j["field"] = o.field;
    j["passed"] = ok;
    auto& arr = j["reports"] = json::array();
    for (std::size_t i = 0; i < r.reports.size(); ++i) {
      json e = json::parse(r.reports[i].to_json());
      if (o.timings) e["ms"] = r.ms[i];
      arr.push_back(std::move(e));
    }
    io::write_file(o.report, j.dump(2) + "\n");
  }
  return ok ? 0 : 1;
}

// ---- table ----

std::vector<std::string> dual_labels(std::size_t n) {
  std::vector<std::string> l;
  for (std::size_t i = 0; i < n; ++i) l.push_back("e^" + std::to_string(i));
  return l;
}

// Group-like tables print as a grid of labels, anything else line by line.
std::string mult_table(const Algebra& a) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      const SparseVec& p = a.product(i, j);
      if (p.nnz() != 1 || !p.begin()->second.is_one()) return star::format_table(a, a.basis);
      idx.push_back(p.begin()->first);
    }
  std::size_t w = 1;
  for (const auto& l : a.basis) w = std::max(w, l.size());
  auto cell = [&](const std::string& s) { return s + std::string(w + 1 - s.size(), ' '); };
  std::string out = cell("");
  for (const auto& l : a.basis) out += cell(l);
  out.back() = '\n';
  for (std::size_t i = 0; i < a.dim; ++i) {
    out += cell(a.basis[i]);
    for (std::size_t j = 0; j < a.dim; ++j) out += cell(a.basis[idx[i * a.dim + j]]);
    while (out.back() == ' ') out.pop_back();
    out += '\n';
  }
  return out;
}

// Squares first, then each unordered pair once when the two orders agree.
std::string star_table(const Algebra& a) {
  const auto l = dual_labels(a.dim);
  if (!hopf::is_commutative(a)) return star::format_table(a, l);
  std::string out;
  for (std::size_t i = 0; i < a.dim; ++i)
    out += l[i] + " . " + l[i] + " = " + io::format_element(a.product(i, i), l) + "\n";
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = i + 1; j < a.dim; ++j)
      out += l[i] + " . " + l[j] + " = " + l[j] + " . " + l[i] + " = " + io::format_element(a.product(i, j), l) + "\n";
  return out;
}

int table(const Options& o, std::ostream& out) {
  const Presentation h = load_input(o);
  std::string text;
  if (o.which == "mult") {
    text = mult_table(h.alg);
  } else if (o.which == "star") {
    if (!h.R) throw UsageError("the star table needs an R-matrix");
    text = star_table(star::build_star_product(h).alg);
  } else if (o.which == "Q") {
    if (!h.R) throw UsageError("Q needs an R-matrix");
    const doubles::Factorizability fz = doubles::factorizability(h);
    const auto l = dual_labels(h.dim());
    for (std::size_t k = 0; k < h.dim(); ++k)
      text += "Q(" + l[k] + ") = " + io::format_element(fz.q.column(k), h.basis()) + "\n";
  } else if (o.which == "W") {
    if (!h.R) throw UsageError("W needs an R-matrix");
    if (!doubles::factorizability(h).q_inv) throw UsageError("W needs a factorizable R-matrix");
    const auto l = dual_labels(h.dim());
    std::vector<std::string> pl;
    for (const auto& a : l)
      for (const auto& b : l) pl.push_back(a + "(x)" + b);
    text = "W = " + io::format_element(doubles::w_of(h).coeffs(), pl) + "\n";
  } else {
    throw UsageError("--which must be mult, star, Q or W");
  }
  write_out(o, text, out);
  return 0;
}

int counterexample(const Options& o, std::ostream& out) {
  const doubles::CounterexampleReport r = doubles::z3_counterexample(field_or(o, "cyclo:3"));
  write_out(o, r.to_text(), out);
  return r.verdicts.passed() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app("Exact verification of finite-dimensional (quasi-)Hopf algebra identities", "hopfkit");
  app.require_subcommand(1);
  auto field = [&](CLI::App* c) {
    c->add_option("--field", o.field, "q | gf:<p> | cyclo:<n>");
  };
  auto inputs = [&](CLI::App* c) {
    c->add_option("--input", o.input, "presentation or group-table file");
    c->add_option("--group", o.group, "built-in group (Z<n>, S3) or group-table file");
    field(c);
  };

  CLI::App* g = app.add_subcommand("gen", "write a presentation file for a built-in family");
  g->add_option("family", o.family, "group:<name|file>, dual, double, heisenberg, tensor-opcop, dpr[:<cocycle>]")->required();
  inputs(g);
  g->add_option("--cocycle", o.cocycle, "cocycle file for dpr");
  g->add_option("--out", o.out, "output path (default stdout)");

  CLI::App* v = app.add_subcommand("verify", "run a verification suite");
  v->add_option("--suite", o.suite, "suite name")->required()->check(CLI::IsMember(suite_names));
  inputs(v);
  v->add_option("--cocycle", o.cocycle, "cocycle file for dpr");
  v->add_option("--report", o.report, "write a JSON report");
  v->add_flag("--slow", o.slow, "allow instances of working dimension 36 and up");
  v->add_flag("--timings", o.timings, "add wall times to the output and report");

  CLI::App* t = app.add_subcommand("table", "print a structure table");
  inputs(t);
  t->add_option("--which", o.which, "mult, star, Q or W")->required();
  t->add_option("--out", o.out, "output path (default stdout)");

  CLI::App* c = app.add_subcommand("counterexample", "Z/3 counterexample report");
  field(c);
  c->add_option("--out", o.out, "output path (default stdout)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (g->parsed()) return gen(o, out);
    if (v->parsed()) return verify(o, out);
    if (t->parsed()) return table(o, out);
    return counterexample(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const io::ParseError& e) {
    err << "parse error: " << e.what() << "\n";
  } catch (const FieldError& e) {
    err << "field error: " << e.what() << "\n";
  } catch (const PresentationError& e) {
    err << "input error: " << e.what() << "\n";
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
  }
  return 2;
}

}  // namespace hopfkit::cli
