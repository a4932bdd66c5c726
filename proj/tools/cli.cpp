#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "pnc/canonical.hpp"
#include "pnc/cosexp.hpp"
#include "pnc/error.hpp"
#include "pnc/functions.hpp"
#include "pnc/integration.hpp"
#include "pnc/json_io.hpp"
#include "pnc/matrixrep.hpp"
#include "pnc/polynomial.hpp"
#include "pnc/verify.hpp"

namespace pnc::cli {

namespace {

using json_io::json;

// Inline JSON when the text starts like JSON, otherwise a file to read.
json load_json(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
    return json_io::parse(arg);
  }
  std::ifstream in(arg);
  if (!in) throw InvalidArgument("cannot read " + arg);
  std::ostringstream text;
  text << in.rdbuf();
  return json_io::parse(text.str());
}

json pairs(const std::vector<std::complex<double>>& zs) {
  json a = json::array();
  for (const auto& z : zs) a.push_back(json::array({z.real(), z.imag()}));
  return a;
}

json nullable(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

void emit(std::ostream& out, const json& j) { out << json_io::dump(j, 2) << '\n'; }

struct Options {
  std::string fn;
  std::string value;
  std::string poly;
  std::string pole;
  std::string loop;
  std::string residue;
  double m = 2.0;
  double tol = kDefaultNodalTolerance;
  int n = 4;
  double from = 0.0;
  double to = 1.0;
  double step = 0.1;
  std::size_t limit = kDefaultEnumerateLimit;
  bool all = false;
  bool quadrature = false;
  std::uint64_t seed = 0;
};

int cmd_eval(const Options& o, std::ostream& out) {
  const PlanarNC u = json_io::value_from_json(load_json(o.value));
  PlanarNC r(u.dim());
  if (o.fn == "ln") {
    r = pnc::ln(u, o.tol);
  } else if (o.fn == "pow") {
    r = pnc::pow(u, o.m, o.tol);
  } else {
    r = verify::function_by_name(o.fn)(u);
  }
  emit(out, json_io::value_to_json(r));
  return kOk;
}

int cmd_canonical(const Options& o, std::ostream& out) {
  const PlanarNC u = json_io::value_from_json(load_json(o.value));
  const CanonicalCoords c = to_canonical(u);
  const PolarForm p = polar_form(u, o.tol);
  json planes = json::array();
  for (const Plane& pl : c.planes) planes.push_back(json::array({pl.v, pl.vt}));
  json phi = json::array();
  for (const auto& a : p.phi_k) phi.push_back(a ? json(*a) : json(nullptr));
  emit(out, json{{"planes", planes},
                 {"rho_k", p.rho_k},
                 {"phi_k", phi},
                 {"psi", p.psi},
                 {"d", p.d},
                 {"amplitude", p.rho}});
  return kOk;
}

int cmd_tabulate(const Options& o, std::ostream& out) {
  if (o.n < 1) throw InvalidArgument("tabulate needs n >= 1");
  if (!(o.step > 0.0)) throw InvalidArgument("step must be positive");
  if (o.to < o.from) throw InvalidArgument("--to must not be below --from");
  out << "y";
  for (int k = 0; k < o.n; ++k) out << ",f_" << o.n << k;
  out << '\n';
  // Rows are indexed so the grid does not drift with repeated addition.
  const auto rows = static_cast<long long>(std::floor((o.to - o.from) / o.step + 1e-9)) + 1;
  for (long long i = 0; i < rows; ++i) {
    const double y = o.from + static_cast<double>(i) * o.step;
    out << json_io::format_double(y);
    for (double f : cosexp::f_all(o.n, y)) out << ',' << json_io::format_double(f);
    out << '\n';
  }
  return kOk;
}

int cmd_factor(const Options& o, std::ostream& out) {
  const NPolynomial p = json_io::poly_from_json(load_json(o.poly));
  const auto assemblies = factor(p, o.limit, o.all);
  json list = json::array();
  for (const RootAssembly& a : assemblies) {
    json roots = json::array();
    for (const PlanarNC& r : a.assembled_roots) roots.push_back(json_io::value_to_json(r));
    json planes = json::array();
    for (const auto& row : a.per_plane_roots) planes.push_back(pairs(row));
    list.push_back(json{{"roots", roots},
                        {"per_plane_roots", planes},
                        {"reexpansion_error", reexpansion_error(p, a)}});
  }
  emit(out, json{{"assembly_count", assemblies.front().assembly_count}, {"assemblies", list}});
  return kOk;
}

int cmd_residue(const Options& o, std::ostream& out) {
  const PlanarNC u0 = json_io::value_from_json(load_json(o.pole));
  std::vector<PlanarNC> pts = json_io::path_from_json(load_json(o.loop));
  if (pts.empty()) throw InvalidArgument("loop is empty");
  // A loop file may omit the repeated closing sample.
  if (max_abs_diff(pts.front(), pts.back()) != 0.0) pts.push_back(pts.front());
  const SampledPath loop(u0.dim(), std::move(pts), true);
  PlanarNC r = PlanarNC::one(u0.dim());
  if (!o.residue.empty()) r = json_io::value_from_json(load_json(o.residue));
  const ResidueResult res = residue_integral(u0, loop);
  json j{{"value", json_io::value_to_json(mul(res.value, r))}, {"winding", res.winding}};
  if (o.quadrature) {
    QuadratureOptions q;
    q.poles.push_back(u0);
    const PlanarNC quad = line_integral(
        [&](const PlanarNC& u) { return mul(r, inverse(u - u0)); }, loop, q);
    j["quadrature"] = json_io::value_to_json(quad);
  }
  emit(out, j);
  return kOk;
}

int cmd_matrix(const Options& o, std::ostream& out) {
  const PlanarNC u = json_io::value_from_json(load_json(o.value));
  const int n = u.dim();
  const RepMatrix m = matrix_rep(u);
  const RepMatrix b = block_diagonalize(u);
  json rows = json::array();
  for (int r = 0; r < n; ++r) {
    json row = json::array();
    for (int c = 0; c < n; ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  json blocks = json::array();
  for (int k = 0; k < n / 2; ++k) {
    blocks.push_back(json::array({json::array({b(2 * k, 2 * k), b(2 * k, 2 * k + 1)}),
                                  json::array({b(2 * k + 1, 2 * k), b(2 * k + 1, 2 * k + 1)})}));
  }
  emit(out, json{{"U", rows}, {"blocks", blocks}});
  return kOk;
}

int cmd_verify_all(const Options& o, std::ostream& out) {
  const auto checks = verify::run_all(o.n, o.seed);
  json list = json::array();
  bool ok = true;
  for (const verify::Check& c : checks) {
    ok = ok && c.passed;
    list.push_back(json{{"name", c.name},
                        {"passed", c.passed},
                        {"measured", nullable(c.measured)},
                        {"threshold", c.threshold}});
  }
  emit(out, json{{"n", o.n}, {"seed", o.seed}, {"passed", ok}, {"checks", list}});
  return ok ? kOk : kDomain;
}

int cmd_verify_cr(const Options& o, std::ostream& out) {
  const CrReport r = verify::run_cr(o.fn, o.n, o.seed);
  const bool ok = r.first_order_residual <= verify::kCrThreshold &&
                  r.second_order_residual <= verify::kCrThreshold;
  emit(out, json{{"fn", o.fn},
                 {"n", r.n},
                 {"seed", o.seed},
                 {"step", r.step},
                 {"second_step", r.second_step},
                 {"first_order_residual", r.first_order_residual},
                 {"second_order_residual", r.second_order_residual},
                 {"threshold", verify::kCrThreshold},
                 {"passed", ok}});
  return ok ? kOk : kDomain;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Planar n-complex numbers: arithmetic, functions, residues, factorization", "pnc"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);
  Options o;

  auto* eval = app.add_subcommand("eval", "Evaluate an elementary function at a value");
  eval->add_option("--fn", o.fn, "exp|ln|pow|cos|sin|cosh|sinh")
      ->required()
      ->check(CLI::IsMember({"exp", "ln", "pow", "cos", "sin", "cosh", "sinh"}));
  eval->add_option("--value", o.value, "Value JSON (inline or file)")->required();
  eval->add_option("--m", o.m, "Exponent for pow");
  eval->add_option("--tol", o.tol, "Nodal tolerance");

  auto* canonical = app.add_subcommand("canonical", "Print canonical planes and polar data");
  canonical->add_option("--value", o.value, "Value JSON (inline or file)")->required();
  canonical->add_option("--tol", o.tol, "Nodal tolerance");

  auto* tabulate = app.add_subcommand("tabulate", "CSV table of f_n0 .. f_n,n-1");
  tabulate->add_option("--n", o.n, "Order n >= 1")->required();
  tabulate->add_option("--from", o.from, "First y");
  tabulate->add_option("--to", o.to, "Last y");
  tabulate->add_option("--step", o.step, "Grid step");

  auto* fac = app.add_subcommand("factor", "Factor a monic polynomial into linear factors");
  fac->add_option("--poly", o.poly, "Polynomial JSON (inline or file)")->required();
  fac->add_option("--limit", o.limit, "Largest number of assemblies listed");
  fac->add_flag("--all", o.all, "Fail unless every assembly fits within --limit");

  auto* res = app.add_subcommand("residue", "Closed-loop integral of r/(u - u0)");
  res->add_option("--pole", o.pole, "Pole JSON (inline or file)")->required();
  res->add_option("--loop", o.loop, "Path file: JSON array of values")->required();
  res->add_option("--residue", o.residue, "Residue JSON, default 1");
  res->add_flag("--quadrature", o.quadrature, "Also integrate numerically");

  auto* matrix = app.add_subcommand("matrix", "Print the matrix representation and its blocks");
  matrix->add_option("--value", o.value, "Value JSON (inline or file)")->required();

  auto* ver = app.add_subcommand("verify", "Run property suites");
  ver->require_subcommand(1);
  auto* ver_all = ver->add_subcommand("all", "Every property suite");
  ver_all->add_option("--n", o.n, "Even dimension");
  ver_all->add_option("--seed", o.seed, "Random seed");
  auto* ver_cr = ver->add_subcommand("cr", "Finite-difference check of the Riemann-type relations");
  ver_cr->add_option("--fn", o.fn, "exp|ln|pow|cos|sin|cosh|sinh|square|cube")->required();
  ver_cr->add_option("--n", o.n, "Even dimension")->required();
  ver_cr->add_option("--seed", o.seed, "Random seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    // Prints help for the subcommand in use, or the error and a synopsis.
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (*eval) return cmd_eval(o, out);
    if (*canonical) return cmd_canonical(o, out);
    if (*tabulate) return cmd_tabulate(o, out);
    if (*fac) return cmd_factor(o, out);
    if (*res) return cmd_residue(o, out);
    if (*matrix) return cmd_matrix(o, out);
    if (*ver_all) return cmd_verify_all(o, out);
    if (*ver_cr) return cmd_verify_cr(o, out);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  }
  err << app.help();
  return kUsage;
}

}  // namespace pnc::cli
