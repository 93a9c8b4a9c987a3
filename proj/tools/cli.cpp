#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "fiberbound/bounds.hpp"
#include "fiberbound/errors.hpp"
#include "fiberbound/invariants.hpp"
#include "fiberbound/scheme_file.hpp"
#include "fiberbound/version.hpp"
#include "verify.hpp"

#ifndef FIBERBOUND_SCENARIO_DIR
#define FIBERBOUND_SCENARIO_DIR "scenarios"
#endif

namespace fiberbound::cli {

namespace {

using json = nlohmann::json;

// Bad command-line input that is not a ParseError from a scheme file.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Outcome {
  json result;
  std::string text;
  int code = ok;
};

std::string rational(const Scalar& q) { return q.get_num().get_str() + "/" + q.get_den().get_str(); }

MonomialOrder default_order() {
  const char* env = std::getenv("FIBERBOUND_ORDER");
  if (env == nullptr || *env == '\0') return MonomialOrder::grevlex;
  auto o = parse_order(env);
  if (!o) throw InputError("FIBERBOUND_ORDER must be grevlex, grlex or lex, not '" + std::string(env) + "'");
  return *o;
}

SchemeFile load(const std::string& path) {
  try {
    return load_scheme_file(path, default_order());
  } catch (const ParseError& e) {
    throw InputError(path + ":" + e.what());
  }
}

json scheme_json(const std::string& path, const SchemeFile& f) {
  return json{{"file", path},
              {"field", f.ring->field().to_string()},
              {"vars", f.ring->variables()},
              {"order", to_string(f.ring->order())},
              {"generators", f.generators.size()}};
}

json bound_json(const BoundReport& r) {
  json j{{"kind", to_string(r.kind)},
         {"lhs", rational(r.lhs)},
         {"rhs", rational(r.rhs)},
         {"margin", rational(r.margin)},
         {"satisfied", r.satisfied},
         {"inputs", r.inputs}};
  if (r.kind == BoundKind::thom_boardman) j["coranks"] = r.coranks;
  return j;
}

std::string bound_text(const BoundReport& r) {
  std::ostringstream os;
  os << to_string(r.kind) << ": " << rational(r.lhs) << " <= " << rational(r.rhs) << "  "
     << (r.satisfied ? "satisfied" : "VIOLATED") << " (margin " << rational(r.margin) << ")\n";
  return os.str();
}

// ------------------------------------------------------------------ commands

Outcome cmd_invariants(const std::string& path) {
  SchemeFile f = load(path);
  SchemeInvariants inv = scheme_invariants(f.ideal());
  Outcome o;
  o.result = json{{"scheme", scheme_json(path, f)},
                  {"degree", inv.degree},
                  {"omega_degree", inv.omega_degree},
                  {"tangent_degree", inv.tangent_degree},
                  {"normal_degree", inv.normal_degree}};
  std::ostringstream os;
  os << "degree          " << inv.degree << "\n"
     << "omega_degree    " << inv.omega_degree << "\n"
     << "tangent_degree  " << inv.tangent_degree << "\n"
     << "normal_degree   " << inv.normal_degree << "\n";
  o.text = os.str();
  return o;
}

struct BoundArgs {
  std::string kind;
  long n = 0, c = 0, m = 0;
  std::vector<long> coranks;
  std::vector<std::string> files;
  std::optional<long> deg_y, deg_t, deg_u, min_deg_t, deg_z, deg_closure;
};

Outcome cmd_bound(const BoundArgs& a) {
  FiberScenario s{a.n, a.c, a.m};
  try {
    s.validate();
  } catch (const InvalidArgument& e) {
    throw InputError(e.what());
  }
  if (a.kind != "subscheme" && a.kind != "tb" && a.kind != "family" && a.kind != "fiber")
    throw InputError("unknown bound kind '" + a.kind + "' (expected subscheme, tb, family or fiber)");
  auto forbid = [&](bool present, const char* flag) {
    if (present) throw InputError(std::string(flag) + " does not apply to 'bound " + a.kind + "'");
  };
  auto need = [&](const std::optional<long>& v, const char* flag) {
    if (!v) throw InputError("'bound " + a.kind + "' needs scheme files or " + flag);
    return *v;
  };
  forbid(a.kind != "tb" && !a.coranks.empty(), "--coranks");
  forbid(a.kind != "family" && a.m != 0, "--m");
  forbid(a.kind != "subscheme" && (a.deg_y || a.deg_t), "--deg-y/--deg-t");
  forbid(a.kind != "family" && (a.deg_u || a.min_deg_t), "--deg-u/--min-deg-t");
  forbid(a.kind != "fiber" && (a.deg_z || a.deg_closure), "--deg-z/--deg-closure");
  forbid(!a.files.empty() && (a.deg_y || a.deg_t || a.deg_u || a.min_deg_t || a.deg_z || a.deg_closure),
         "a degree flag together with scheme files");

  std::vector<std::pair<json, BoundReport>> reports;  // (scheme echo or null, report)
  auto wrap = [](auto&& f) {
    try {
      return f();
    } catch (const InvalidArgument& e) {
      throw InputError(e.what());
    }
  };

  if (a.kind == "tb") {
    forbid(!a.files.empty(), "a scheme file");
    if (a.coranks.empty()) throw InputError("'bound tb' needs --coranks");
    reports.emplace_back(nullptr, wrap([&] { return check_thom_boardman(a.coranks, s); }));
  } else if (a.kind == "subscheme") {
    if (a.files.empty()) {
      long dy = need(a.deg_y, "--deg-y"), dt = need(a.deg_t, "--deg-t");
      reports.emplace_back(nullptr, wrap([&] { return check_subscheme_bound(dy, dt, s); }));
    }
    for (const auto& p : a.files) {
      SchemeFile f = load(p);
      AlgebraPtr A = quotient_algebra(f.ideal());
      long dy = static_cast<long>(A->degree()), dt = static_cast<long>(tangent_degree(A));
      reports.emplace_back(scheme_json(p, f), check_subscheme_bound(dy, dt, s));
    }
  } else if (a.kind == "family") {
    if (a.files.empty()) {
      long du = need(a.deg_u, "--deg-u"), dt = need(a.min_deg_t, "--min-deg-t");
      reports.emplace_back(nullptr, wrap([&] { return check_family_bound(du, dt, s); }));
    } else {
      // The members' minimum deg T; all members of a flat family share one degree.
      std::optional<long> du, dt;
      json members = json::array();
      for (const auto& p : a.files) {
        SchemeFile f = load(p);
        AlgebraPtr A = quotient_algebra(f.ideal());
        long d = static_cast<long>(A->degree());
        long t = static_cast<long>(tangent_degree(A));
        if (du && *du != d) throw InputError("family members have different degrees (" + std::to_string(*du) +
                                             " and " + std::to_string(d) + ")");
        du = d;
        dt = dt ? std::min(*dt, t) : t;
        json m = scheme_json(p, f);
        m["tangent_degree"] = t;
        members.push_back(m);
      }
      reports.emplace_back(json{{"members", members}}, check_family_bound(*du, *dt, s));
    }
  } else {  // fiber
    if (a.files.empty()) {
      long dz = need(a.deg_z, "--deg-z"), dc = need(a.deg_closure, "--deg-closure");
      reports.emplace_back(nullptr, wrap([&] { return check_fiber_bound(dz, dc, s); }));
    }
    for (const auto& p : a.files) {
      SchemeFile f = load(p);
      FixedOmegaDeformations def = deformations_fixing_omega(f.ideal());
      long dz = static_cast<long>(def.conormal.algebra->degree());
      long dc = static_cast<long>(def.closure.dim());
      reports.emplace_back(scheme_json(p, f), wrap([&] { return check_fiber_bound(dz, dc, s); }));
    }
  }

  Outcome o;
  json list = json::array();
  bool all = true;
  std::ostringstream os;
  for (auto& [scheme, r] : reports) {
    json j = bound_json(r);
    if (scheme.contains("members"))
      j["members"] = scheme["members"];
    else if (!scheme.is_null())
      j["scheme"] = scheme;
    list.push_back(j);
    all = all && r.satisfied;
    if (scheme.contains("file")) os << scheme["file"].get<std::string>() << ": ";
    os << bound_text(r);
  }
  o.result = json{{"reports", list}, {"all_satisfied", all}};
  o.text = os.str();
  o.code = all ? ok : bound_violated;
  return o;
}

Outcome cmd_deform(const std::string& path, bool closure) {
  SchemeFile f = load(path);
  FixedOmegaDeformations def = deformations_fixing_omega(f.ideal());
  Outcome o;
  o.result = json{{"scheme", scheme_json(path, f)},
                  {"degree", def.conormal.algebra->degree()},
                  {"conormal_degree", def.conormal.module.dim()},
                  {"normal_degree", def.normal.module.dim()},
                  {"fixed_omega_dim", def.space.dim()}};
  std::ostringstream os;
  os << "degree           " << def.conormal.algebra->degree() << "\n"
     << "normal_degree    " << def.normal.module.dim() << "\n"
     << "fixed_omega_dim  " << def.space.dim() << "\n";
  if (closure) {
    o.result["closure_dim"] = def.closure.dim();
    os << "closure_dim      " << def.closure.dim() << "\n";
  }
  o.text = os.str();
  return o;
}

Outcome cmd_qinv(const std::string& xpath, const std::string& ypath, std::optional<long> dim_x) {
  SchemeFile fx = load(xpath);
  SchemeFile fy = load(ypath);
  if (fx.ring->field() != fy.ring->field() || fx.ring->variables() != fy.ring->variables())
    throw InputError("X and Y must use the same field and variables");
  std::vector<Poly> ygens;
  for (const auto& p : fy.generators) ygens.push_back(p.in_ring(fx.ring));
  Ideal ix = fx.ideal();
  Ideal iy(fx.ring, ygens);
  std::optional<std::size_t> declared;
  if (dim_x) {
    if (*dim_x < 0) throw InputError("--dim-x must be nonnegative");
    declared = static_cast<std::size_t>(*dim_x);
  } else if (fx.dim) {
    declared = fx.dim;
  }
  QInvariant q = q_invariant(ix, iy, declared);
  Outcome o;
  o.result = json{{"x", scheme_json(xpath, fx)},
                  {"y", scheme_json(ypath, fy)},
                  {"q", rational(q.q)},
                  {"degree_z", q.degree_z},
                  {"dim_x", q.dim_x},
                  {"codim_y", q.codim_y},
                  {"hom_dim", q.hom_dim},
                  {"target_dim", q.target_dim},
                  {"cokernel_dim", q.cokernel_dim}};
  std::ostringstream os;
  os << "q             " << rational(q.q) << "\n"
     << "degree_z      " << q.degree_z << "\n"
     << "cokernel_dim  " << q.cokernel_dim << "\n"
     << "denominator   " << q.codim_y - q.dim_x << "\n";
  if (fx.ring->field().is_rationals()) {
    LciCheck c = check_lci_hypotheses(ix, iy);
    o.result["lci_hypotheses"] =
        json{{"x_smooth", c.x_smooth}, {"y_smooth", c.y_smooth}, {"z_lci_in_x", c.z_lci_in_x}, {"holds", c.holds()}};
    os << "lci           " << (c.holds() ? "yes" : "no") << "\n";
  } else {
    o.result["lci_hypotheses"] = nullptr;
  }
  o.text = os.str();
  return o;
}

Outcome cmd_verify(const std::string& dir) {
  std::vector<Check> checks = verify_scenarios(dir, default_order());
  Outcome o;
  json list = json::array();
  std::size_t passed = 0;
  std::ostringstream os;
  for (const auto& c : checks) {
    json j{{"name", c.name}, {"expected", c.expected}, {"passed", c.passed}};
    j["actual"] = c.error.empty() ? json(c.actual) : json(nullptr);
    if (!c.error.empty()) j["error"] = c.error;
    list.push_back(j);
    passed += c.passed;
    os << (c.passed ? "PASS  " : "FAIL  ") << c.name << " = " << c.expected;
    if (!c.passed) os << (c.error.empty() ? " (got " + c.actual + ")" : " (error: " + c.error + ")");
    os << "\n";
  }
  os << passed << "/" << checks.size() << " checks passed\n";
  o.result = json{{"checks", list}, {"passed", passed}, {"total", checks.size()}, {"all_passed", passed == checks.size()}};
  o.text = os.str();
  o.code = passed == checks.size() ? ok : bound_violated;
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants of zero-dimensional schemes and bounds on fibers of generic projections",
               "fiberbound"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  bool as_json = false, no_timing = false;
  auto common = [&](CLI::App* sub) {
    sub->add_flag("--json", as_json, "Emit a JSON report");
    sub->add_flag("--no-timing", no_timing, "Leave the timing block out of JSON reports");
  };
  common(&app);

  std::string file, xfile, yfile;
  auto* inv = app.add_subcommand("invariants", "Degree, omega, tangent and normal degrees of a scheme");
  inv->add_option("file", file, "Scheme file")->required();
  common(inv);

  BoundArgs ba;
  auto* bound = app.add_subcommand("bound", "Evaluate one of the fiber bounds");
  bound->add_option("kind", ba.kind, "subscheme | tb | family | fiber")->required();
  bound->add_option("files", ba.files, "Scheme files supplying the degrees");
  bound->add_option("--n", ba.n, "Dimension of the projected variety")->required();
  bound->add_option("--c", ba.c, "Codimension increment of the projection")->required();
  bound->add_option("--m", ba.m, "Dimension of the family's parameter space");
  bound->add_option("--coranks", ba.coranks, "Comma-separated coranks for tb")->delimiter(',');
  bound->add_option("--deg-y", ba.deg_y, "deg Y (subscheme, without files)");
  bound->add_option("--deg-t", ba.deg_t, "deg T_Y (subscheme, without files)");
  bound->add_option("--deg-u", ba.deg_u, "deg U_b (family, without files)");
  bound->add_option("--min-deg-t", ba.min_deg_t, "minimum deg T over the family (without files)");
  bound->add_option("--deg-z", ba.deg_z, "deg Z (fiber, without files)");
  bound->add_option("--deg-closure", ba.deg_closure, "degree of the module closure (fiber, without files)");
  common(bound);

  bool closure = false, fix_omega = false;
  auto* deform = app.add_subcommand("deform", "First-order deformations that keep omega flat");
  deform->add_option("file", file, "Scheme file")->required();
  deform->add_flag("--fix-omega", fix_omega, "Compute V' (always on)");
  deform->add_flag("--closure", closure, "Also report the module closure of V'");
  common(deform);

  std::optional<long> dim_x;
  auto* qinv = app.add_subcommand("qinv", "The q invariant of X and a complete intersection Y");
  qinv->add_option("--x", xfile, "Scheme file for X")->required();
  qinv->add_option("--y", yfile, "Scheme file for Y")->required();
  qinv->add_option("--dim-x", dim_x, "Declared dimension of X (checked)");
  common(qinv);

  std::string scenarios = FIBERBOUND_SCENARIO_DIR;
  auto* verify = app.add_subcommand("verify-paper", "Run the golden checks on the bundled scenario files");
  verify->add_option("--scenarios", scenarios, "Directory holding the scenario files");
  common(verify);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  }

  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  std::string name;
  try {
    if (*inv) {
      name = "invariants";
      o = cmd_invariants(file);
    } else if (*bound) {
      name = "bound";
      o = cmd_bound(ba);
    } else if (*deform) {
      name = "deform";
      o = cmd_deform(file, closure);
    } else if (*qinv) {
      name = "qinv";
      o = cmd_qinv(xfile, yfile, dim_x);
    } else {
      name = "verify-paper";
      o = cmd_verify(scenarios);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  } catch (const RingMismatch& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  } catch (const NotZeroDimensional& e) {
    err << "error: " << e.what() << "\n";
    return precondition_failed;
  } catch (const ImproperIdeal& e) {
    err << "error: " << e.what() << "\n";
    return precondition_failed;
  } catch (const ZeroDenominator& e) {
    err << "error: " << e.what() << "\n";
    return precondition_failed;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return internal_error;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (as_json) {
    json report{{"schema_version", kReportSchemaVersion},
                {"engine", {{"name", "fiberbound"}, {"version", kVersion}}},
                {"command", {{"name", name}, {"arguments", args}}},
                {"result", o.result},
                {"exit_code", o.code}};
    if (!no_timing) report["timing"] = {{"seconds", seconds}};
    out << report.dump(2) << "\n";
  } else {
    out << o.text;
  }
  return o.code;
}

}  // namespace fiberbound::cli
