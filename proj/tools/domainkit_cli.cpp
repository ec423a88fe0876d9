// Command line surface for the state-order library: order queries, entropy,
// irreducible/Hasse export, the classical-to-quantum embedding, interval
// calculus demos, simplex region plots, and the property-suite runner.
//
// Exit codes: 0 success / property suites green / order answered "true",
//             1 order answered "false" or a property suite failed,
//             2 input or usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "domainkit/calculus.hpp"
#include "domainkit/checks.hpp"
#include "domainkit/errors.hpp"
#include "domainkit/exactness.hpp"
#include "domainkit/json_io.hpp"
#include "domainkit/logics.hpp"
#include "domainkit/simplex.hpp"
#include "domainkit/spectra.hpp"
#include "domainkit/svg.hpp"

namespace {

using namespace domainkit;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise("io-error", "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) raise("io-error", "cannot write '" + path + "'");
  out << content;
}

StateDocument load(const std::string& path) { return parse_state_document(read_file(path)); }

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(15) << v;
  return os.str();
}

const std::map<std::string, RealFunction>& function_registry() {
  static const std::map<std::string, RealFunction> registry = {
      {"square", [](double v) { return v * v; }},
      {"sin", [](double v) { return std::sin(v); }},
      {"cos", [](double v) { return std::cos(v); }},
      {"exp", [](double v) { return std::exp(v); }},
      {"3x+1", [](double v) { return 3.0 * v + 1.0; }},
      {"halfplus", [](double v) { return 0.5 * v + 1.0; }},
      {"identity", [](double v) { return v; }},
  };
  return registry;
}

RealFunction lookup_function(const std::string& name) {
  const auto& registry = function_registry();
  const auto it = registry.find(name);
  if (it == registry.end()) {
    std::string known;
    for (const auto& [k, fn] : registry) known += (known.empty() ? "" : ", ") + k;
    raise("bad-flags", "unknown function '" + name + "' (known: " + known + ")");
  }
  return it->second;
}

ClassicalState as_classical(const StateDocument& doc) {
  if (const auto* c = std::get_if<ClassicalState>(&doc.value)) return *c;
  if (const auto* r = std::get_if<RationalState>(&doc.value)) return to_float(*r);
  raise("bad-flags", "expected a classical state document");
}

int cmd_order(const std::string& a_path, const std::string& b_path, bool explain) {
  const StateDocument a = load(a_path);
  const StateDocument b = load(b_path);

  bool result = false;
  std::ostringstream note;
  if (a.kind() == "classical" && b.kind() == "classical") {
    const auto* ra = std::get_if<RationalState>(&a.value);
    const auto* rb = std::get_if<RationalState>(&b.value);
    if (ra != nullptr && rb != nullptr) {
      const OrderExplanation e = bayesian_leq_explain(*ra, *rb);
      result = e.result;
      if (explain) {
        if (e.result) {
          note << "arrangement:";
          for (int i : e.permutation) note << " " << i + 1;
        } else {
          note << e.detail;
        }
      }
    } else {
      const OrderExplanation e = bayesian_leq_explain(as_classical(a), as_classical(b));
      result = e.result;
      if (explain) {
        if (e.result) {
          note << "arrangement:";
          for (int i : e.permutation) note << " " << i + 1;
        } else {
          note << e.detail;
        }
      }
    }
  } else if (a.kind() == "density" && b.kind() == "density") {
    const SpectralExplanation e =
        spectral_leq_explain(std::get<DensityMatrix>(a.value), std::get<DensityMatrix>(b.value));
    result = e.result;
    if (explain) {
      if (!e.commuting) {
        note << e.detail;
      } else {
        note << "aligned spectra:";
        for (double v : e.rho_spectrum) note << " " << fmt(v);
        note << " vs";
        for (double v : e.sigma_spectrum) note << " " << fmt(v);
        if (!e.result) note << "; " << e.detail;
      }
    }
  } else if (a.kind() == "interval" && b.kind() == "interval") {
    result = interval_leq(std::get<Interval>(a.value), std::get<Interval>(b.value));
  } else {
    raise("bad-flags", "order needs two documents of the same kind (classical, density, interval)");
  }

  std::cout << (result ? "true" : "false") << "\n";
  if (explain && !note.str().empty()) std::cout << note.str() << "\n";
  return result ? 0 : 1;
}

int cmd_entropy(const std::string& in_path, double base) {
  const StateDocument doc = load(in_path);
  double h = 0.0;
  if (doc.kind() == "classical") {
    h = shannon_entropy(as_classical(doc), base);
  } else if (doc.kind() == "density") {
    h = von_neumann_entropy(std::get<DensityMatrix>(doc.value), base);
  } else {
    raise("bad-flags", "entropy needs a classical state or a density matrix");
  }
  std::cout << fmt(h) << "\n";
  return 0;
}

int cmd_irreducibles(int n, const std::string& format, const std::string& out) {
  const auto ir = irreducibles_classical(n);
  if (format == "json") {
    std::string dump = "[";
    for (std::size_t i = 0; i < ir.size(); ++i) {
      std::string one = serialize_state_document({ir[i]});
      while (!one.empty() && (one.back() == '\n' || one.back() == ' ')) one.pop_back();
      dump += (i ? "," : "") + std::string("\n") + one;
    }
    dump += "\n]\n";
    write_output(out, dump);
  } else if (format == "text") {
    std::ostringstream os;
    for (const auto& state : ir) {
      for (int i = 0; i < state.dim(); ++i) {
        os << (i ? " " : "") << state[i].str();
      }
      os << "\n";
    }
    write_output(out, os.str());
  } else {
    raise("bad-flags", "format must be json or text");
  }
  return 0;
}

int cmd_hasse(int n, const std::string& format, const std::string& out) {
  const HasseDiagram h = hasse_classical(n);
  if (format == "dot") {
    write_output(out, hasse_to_dot(h));
  } else if (format == "json") {
    write_output(out, hasse_to_json(h));
  } else {
    raise("bad-flags", "format must be dot or json");
  }
  return 0;
}

int cmd_embed(const std::string& in_path, const std::string& out, bool verify) {
  const ClassicalState x = as_classical(load(in_path));
  const DensityMatrix rho = diag_embedding(x);
  if (verify) {
    const double mu = shannon_entropy(x);
    const double sigma = von_neumann_entropy(rho);
    std::ostringstream os;
    os << "{\n  \"shannon\": " << fmt(mu) << ",\n  \"von_neumann\": " << fmt(sigma)
       << ",\n  \"conserved\": " << (std::abs(mu - sigma) <= 1e-9 ? "true" : "false") << "\n}\n";
    write_output(out, os.str());
    return std::abs(mu - sigma) <= 1e-9 ? 0 : 1;
  }
  write_output(out, serialize_state_document({rho}));
  return 0;
}

int cmd_derivative(const std::string& fn_name, double p) {
  const double d = informatic_derivative(lookup_function(fn_name), p);
  std::cout << fmt(d) << "\n";
  return 0;
}

int cmd_fixpoint(const std::string& fn_name, double lo, double hi, int steps) {
  const Interval result = fixpoint_iterate(lookup_function(fn_name), Interval(lo, hi), steps);
  std::cout << "[" << fmt(result.lo()) << ", " << fmt(result.hi()) << "] width "
            << fmt(result.width()) << "\n";
  return 0;
}

int cmd_plot_updown(const std::string& in_path, int grid, const std::string& out) {
  const ClassicalState x = as_classical(load(in_path));
  UpdownPlotOptions options;
  options.grid = grid;
  write_output(out, emit_updown_svg(x, options));
  return 0;
}

int cmd_check(std::uint64_t seed, int samples, const std::string& suite, bool full) {
  CheckOptions options;
  options.seed = seed;
  if (!full) options = options.scaled(samples);

  std::vector<CheckResult> results;
  if (suite == "all") {
    results = run_all_checks(options);
  } else if (suite == "kernel") {
    results = run_kernel_checks(options);
  } else if (suite == "simplex") {
    results = run_simplex_checks(options);
  } else if (suite == "spectra") {
    results = run_spectra_checks(options);
  } else if (suite == "logics") {
    results = run_logics_checks(options);
  } else if (suite == "exactness") {
    results = run_exactness_checks(options);
  } else {
    raise("bad-flags", "suite must be one of all, kernel, simplex, spectra, logics, exactness");
  }
  std::cout << check_results_to_json(results);
  return all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"domainkit: partial orders, measurements and logics of classical and quantum states"};
  app.require_subcommand(1);

  std::string a_path, b_path, in_path, out_path = "-";
  std::string format = "json";
  std::string fn_name = "halfplus";
  std::string suite = "all";
  bool explain = false;
  bool verify = false;
  double base = 0.0;
  double p = 0.0;
  double lo = 0.0, hi = 1.0;
  int steps = 60;
  int n = 3;
  int grid = 60;
  int samples = 200;
  bool full = false;
  std::uint64_t seed = Rng::kDefaultSeed;

  auto* order = app.add_subcommand("order", "decide a ⊑ b for two state documents");
  order->add_option("--a", a_path, "left state (JSON file)")->required();
  order->add_option("--b", b_path, "right state (JSON file)")->required();
  order->add_flag("--explain", explain, "print the witnessing arrangement or failure reason");

  auto* entropy = app.add_subcommand("entropy", "entropy of a classical state or density matrix");
  entropy->add_option("--in", in_path, "state (JSON file)")->required();
  entropy->add_option("--base", base, "logarithm base (default: natural)");

  auto* irr = app.add_subcommand("irreducibles", "enumerate the irreducible classical states");
  irr->add_option("--n", n, "number of outcomes")->required();
  irr->add_option("--format", format, "json or text");
  irr->add_option("--out", out_path, "output file (default: stdout)");

  auto* hasse = app.add_subcommand("hasse", "covering diagram of the irreducible states");
  hasse->add_option("--n", n, "number of outcomes")->required();
  hasse->add_option("--format", format, "dot or json")->default_val("dot");
  hasse->add_option("--out", out_path, "output file (default: stdout)");

  auto* embed = app.add_subcommand("embed", "diagonal embedding of a classical state");
  embed->add_option("--in", in_path, "classical state (JSON file)")->required();
  embed->add_option("--out", out_path, "output file (default: stdout)");
  embed->add_flag("--verify", verify, "report entropy conservation instead of the matrix");

  auto* deriv = app.add_subcommand("derivative", "informatic derivative of a named function");
  deriv->add_option("--fn", fn_name, "square, sin, cos, exp, 3x+1, halfplus or identity")
      ->required();
  deriv->add_option("--p", p, "point")->required();

  auto* fix = app.add_subcommand("fixpoint", "iterate the induced interval map");
  fix->add_option("--fn", fn_name, "function name")->required();
  fix->add_option("--lo", lo, "seed lower endpoint")->required();
  fix->add_option("--hi", hi, "seed upper endpoint")->required();
  fix->add_option("--steps", steps, "iterations")->default_val(60);

  auto* plot = app.add_subcommand("plot-updown", "SVG of the up/down sets of a three-outcome state");
  plot->add_option("--in", in_path, "classical state (JSON file)")->required();
  plot->add_option("--grid", grid, "barycentric resolution (<= 2000)")->default_val(60);
  plot->add_option("--out", out_path, "output file (default: stdout)");

  auto* check = app.add_subcommand("check", "run the property suites, print JSON results");
  check->add_option("--seed", seed, "random seed");
  check->add_option("--samples", samples, "samples per property (quick mode)");
  check->add_option("--suite", suite, "all, kernel, simplex, spectra, logics or exactness");
  check->add_flag("--full", full, "run at acceptance-level sample counts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(order)) return cmd_order(a_path, b_path, explain);
    if (app.got_subcommand(entropy)) return cmd_entropy(in_path, base);
    if (app.got_subcommand(irr)) return cmd_irreducibles(n, format, out_path);
    if (app.got_subcommand(hasse)) return cmd_hasse(n, format, out_path);
    if (app.got_subcommand(embed)) return cmd_embed(in_path, out_path, verify);
    if (app.got_subcommand(deriv)) return cmd_derivative(fn_name, p);
    if (app.got_subcommand(fix)) return cmd_fixpoint(fn_name, lo, hi, steps);
    if (app.got_subcommand(plot)) return cmd_plot_updown(in_path, grid, out_path);
    if (app.got_subcommand(check)) return cmd_check(seed, samples, suite, full);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
