#include "ffdyn/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "ffdyn/report.hpp"

namespace ffdyn::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct FieldArgs {
  std::uint64_t q = 0;
  std::string c;
  std::string a;
  std::string modulus;
  bool coeffs = false;
  std::uint64_t field_bound = FieldLimits{}.max_order;
};

struct VerifyArgs {
  bool verify = false;
  std::uint64_t oracle_bound = 0;  // 0: FFDYN_ORACLE_BOUND or the default
};

std::vector<std::uint32_t> parse_digits(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw UsageError("malformed coefficient list '" + text + "'");
    }
    out.push_back(static_cast<std::uint32_t>(std::stoul(item)));
  }
  if (out.empty()) throw UsageError("empty coefficient list");
  return out;
}

Elt parse_element(const Field& f, const std::string& text, bool coeffs, const char* what) {
  try {
    if (coeffs || text.find(',') != std::string::npos) return f.from_coeffs(parse_digits(text));
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
      throw UsageError(std::string(what) + " must be a decimal encoding, got '" + text + "'");
    }
    return f.element(std::stoull(text));
  } catch (const FieldError& e) {
    throw UsageError(std::string(what) + ": " + e.what());
  } catch (const std::out_of_range&) {
    throw UsageError(std::string(what) + " is out of range");
  }
}

QuadCtx make_context(const FieldArgs& args) {
  const auto pp = as_prime_power(args.q);
  if (!pp) throw UsageError("q = " + std::to_string(args.q) + " is not a prime power");
  const FieldLimits limits{args.field_bound};
  Field f = [&] {
    try {
      if (args.modulus.empty()) return Field::build(pp->prime, pp->exponent, limits);
      auto m = parse_digits(args.modulus);
      if (m.size() != pp->exponent + 1) {
        throw UsageError("modulus must have " + std::to_string(pp->exponent + 1) +
                         " coefficients for q = " + std::to_string(args.q));
      }
      return Field::with_modulus(pp->prime, std::move(m), limits);
    } catch (const FieldError& e) {
      throw UsageError(e.what());
    }
  }();
  if (args.a.empty()) return QuadCtx(std::move(f));
  const Elt a = parse_element(f, args.a, args.coeffs, "a");
  try {
    return QuadCtx(std::move(f), a);
  } catch (const FieldError& e) {
    throw UsageError(e.what());
  }
}

Elt parse_c(const QuadCtx& ctx, const FieldArgs& args) {
  const Elt c = parse_element(ctx.base(), args.c, args.coeffs, "c");
  if (c.is_zero()) throw UsageError("c must be nonzero");
  return c;
}

OracleLimits oracle_limits(const VerifyArgs& v) {
  OracleLimits limits = OracleLimits::from_env();
  if (v.oracle_bound != 0) limits.max_q = v.oracle_bound;
  return limits;
}

void add_field_options(CLI::App* cmd, FieldArgs& args, bool need_c) {
  cmd->add_option("--q", args.q, "Order of the base field F_q (a prime power)")->required();
  auto* c = cmd->add_option("--c", args.c, "c in F_q^*, as a decimal encoding");
  if (need_c) c->required();
  cmd->add_option("--a", args.a, "Override the defining constant a of F_{q^2}");
  cmd->add_option("--modulus", args.modulus,
                  "Modulus of F_q as comma-separated coefficients, low degree first");
  cmd->add_flag("--coeffs", args.coeffs, "Read --c and --a as comma-separated base-p digits");
  cmd->add_option("--field-bound", args.field_bound, "Largest field order accepted")
      ->capture_default_str();
}

struct Verification {
  bool shape_match = false;
  bool fixed_points_match = false;
  bool permutation_match = false;
  std::string detail;

  bool ok() const { return shape_match && fixed_points_match && permutation_match; }
};

Verification verify(const QuadCtx& ctx, Elt c, const Analysis& analysis, OracleLimits limits) {
  Verification v;
  const FunctionalGraph graph = build_functional_graph(ctx, c, limits);
  try {
    const GraphShape actual = oracle_shape(graph);
    const auto cmp = compare_shapes(analysis.prediction.shape, actual);
    v.shape_match = cmp.match;
    v.detail = cmp.describe(analysis.prediction.shape, actual);
  } catch (const StructuralAnomaly& e) {
    v.detail = std::string("MISMATCH\n  structural anomaly: ") + e.what();
  }
  const std::uint64_t fixed = count_fixed_points(graph);
  v.fixed_points_match = fixed == analysis.fixed_points;
  if (!v.fixed_points_match) {
    v.detail += "\n  fixed points: predicted " + std::to_string(analysis.fixed_points) +
                ", actual " + std::to_string(fixed);
  }
  v.permutation_match = is_bijection(graph) == analysis.permutation;
  if (!v.permutation_match) v.detail += "\n  permutation status differs from the oracle";
  if (v.shape_match && !v.ok()) v.detail = "MISMATCH" + v.detail.substr(5);
  return v;
}

int cmd_analyze(const FieldArgs& fa, const VerifyArgs& va, bool json, std::ostream& out) {
  const QuadCtx ctx = make_context(fa);
  const Elt c = parse_c(ctx, fa);
  const Analysis analysis = analyze(ctx, c);
  std::optional<Verification> v;
  if (va.verify) {
    try {
      v = verify(ctx, c, analysis, oracle_limits(va));
    } catch (const OracleBoundError& e) {
      throw UsageError(e.what());
    }
  }
  if (json) {
    Json j = analysis_json(ctx, c, analysis);
    if (v) {
      j["verification"] = {{"match", v->ok()},
                           {"shape_match", v->shape_match},
                           {"fixed_points_match", v->fixed_points_match},
                           {"permutation_match", v->permutation_match}};
    }
    out << dump(j);
  } else {
    write_analysis_text(out, ctx, c, analysis);
    if (v) out << "verification against brute-force graph: " << v->detail << "\n";
  }
  return v && !v->ok() ? kVerificationFailed : kSuccess;
}

int cmd_fixed(const FieldArgs& fa, bool json, std::ostream& out) {
  const QuadCtx ctx = make_context(fa);
  const Elt c = parse_c(ctx, fa);
  const std::uint64_t n = fixed_point_count(ctx, c);
  if (json) {
    Json j;
    j["q"] = ctx.q();
    j["c"] = c.code;
    j["fixed_points"] = n;
    out << dump(j);
  } else {
    out << n << "\n";
  }
  return kSuccess;
}

int cmd_graph(const FieldArgs& fa, const VerifyArgs& va, const std::string& path,
              const std::string& component, std::ostream& out) {
  const QuadCtx ctx = make_context(fa);
  const Elt c = parse_c(ctx, fa);
  FunctionalGraph graph;
  try {
    graph = build_functional_graph(ctx, c, oracle_limits(va));
  } catch (const OracleBoundError& e) {
    throw UsageError(e.what());
  }
  const DotScope scope = component == "zero" ? DotScope::zero_component : DotScope::whole_graph;
  if (path == "-") {
    write_dot(out, ctx, graph, scope);
    return kSuccess;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + path + "' for writing");
  write_dot(file, ctx, graph, scope);
  file.close();
  if (!file) throw UsageError("failed writing '" + path + "'");
  return kSuccess;
}

int cmd_scan(std::uint64_t q_min, std::uint64_t q_max, unsigned threads, bool json,
             std::ostream& out) {
  if (q_min > q_max) throw UsageError("--q-min must not exceed --q-max");
  ScanOptions options;
  options.threads = threads;
  const ScanReport report = max_cycle_scan(q_min, q_max, options);
  if (json) {
    out << dump(scan_json(report));
  } else {
    write_scan_text(out, report);
  }
  return report.failure_count() == 0 ? kSuccess : kVerificationFailed;
}

int cmd_bounds(double t, std::optional<std::uint64_t> sweep, DivisorWeight weight, bool json,
               std::ostream& out) {
  AtBoundReport at;
  try {
    at = compute_a_t(t);
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  std::vector<std::uint64_t> failures;
  if (sweep) failures = sqrt_bound_failures(*sweep, weight);
  if (json) {
    out << dump(bounds_json(at, sweep, failures, weight));
  } else {
    write_bounds_text(out, at, sweep, failures, weight);
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Functional graph of f(X) = X(X^{q-1} - c)^{q+1} over F_{q^2}", "ffdyn"};
  app.require_subcommand(1);

  FieldArgs fa;
  VerifyArgs va;
  bool json = false;

  auto* analyze_cmd = app.add_subcommand("analyze", "Closed-form description of the graph");
  add_field_options(analyze_cmd, fa, true);
  analyze_cmd->add_flag("--verify", va.verify, "Cross-check against the brute-force graph");
  analyze_cmd->add_flag("--json", json, "Emit JSON");
  analyze_cmd->add_option("--oracle-bound", va.oracle_bound, "Largest q for brute-force graphs");

  auto* fixed_cmd = app.add_subcommand("fixed", "Number of fixed points");
  add_field_options(fixed_cmd, fa, true);
  fixed_cmd->add_flag("--json", json, "Emit JSON");

  std::string dot_path;
  std::string component = "all";
  auto* graph_cmd = app.add_subcommand("graph", "Write the functional graph in DOT");
  add_field_options(graph_cmd, fa, true);
  graph_cmd->add_option("--dot", dot_path, "Output path, '-' for stdout")->required();
  graph_cmd->add_option("--component", component, "all | zero")
      ->check(CLI::IsMember({"all", "zero"}))
      ->capture_default_str();
  graph_cmd->add_option("--oracle-bound", va.oracle_bound, "Largest q for brute-force graphs");

  std::uint64_t q_min = 2, q_max = 0;
  unsigned threads = 0;
  auto* scan_cmd = app.add_subcommand("scan", "Search every (q, c) for a cycle of length q-1");
  scan_cmd->add_option("--q-min", q_min, "Smallest q")->capture_default_str();
  scan_cmd->add_option("--q-max", q_max, "Largest q")->required();
  scan_cmd->add_option("--threads", threads, "Worker threads (0: all cores)");
  scan_cmd->add_flag("--json", json, "Emit JSON");

  double t = 4.08;
  std::optional<std::uint64_t> sweep;
  auto* bounds_cmd = app.add_subcommand("bounds", "A_t threshold and the 3W(q-1) sweep");
  bounds_cmd->add_option("--t", t, "Parameter t > 2")->capture_default_str();
  bounds_cmd->add_option("--w-sweep", sweep, "Report prime powers up to LIMIT failing the bound");
  bool all_divisors = false;
  bounds_cmd->add_flag("--all-divisors", all_divisors,
                       "Count every divisor in W(q-1) instead of the squarefree ones");
  bounds_cmd->add_flag("--json", json, "Emit JSON");

  std::vector<const char*> argv{"ffdyn"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(fa, va, json, out);
    if (*fixed_cmd) return cmd_fixed(fa, json, out);
    if (*graph_cmd) return cmd_graph(fa, va, dot_path, component, out);
    if (*scan_cmd) return cmd_scan(q_min, q_max, threads, json, out);
    if (*bounds_cmd) return cmd_bounds(t, sweep, all_divisors ? DivisorWeight::all : DivisorWeight::squarefree,
                                         json, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace ffdyn::cli
