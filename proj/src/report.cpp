#include "ffdyn/report.hpp"

#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

namespace ffdyn {

Analysis analyze(const QuadCtx& ctx, Elt c) {
  Analysis a;
  a.prediction = predict(ctx, c);
  a.fixed_points = fixed_point_count(ctx, c);
  a.permutation = is_permutation(ctx, c);
  a.max_cycle = exists_primitive_g(ctx, c);
  return a;
}

Json analysis_json(const QuadCtx& ctx, Elt c, const Analysis& analysis) {
  const Field& f = ctx.base();
  const std::uint64_t q = ctx.q();
  const auto& pred = analysis.prediction;
  Json j;
  j["q"] = q;
  j["p"] = f.characteristic();
  j["n"] = f.degree();
  j["modulus"] = f.modulus();
  j["a"] = ctx.a().code;
  j["c"] = c.code;
  j["parity"] = ctx.parity() == Parity::odd ? "odd" : "even";
  j["is_permutation"] = analysis.permutation;
  j["fixed_points"] = analysis.fixed_points;
  j["zero_component"] = {
      {"kind", pred.zero.kind == ZeroKind::C1 ? "C1" : "C1_with_tree"},
      {"tree_size", pred.zero.tree_size},
  };
  Json lines = Json::array();
  for (const auto& line : pred.lines) {
    Json l;
    l["u"] = line.label.u.code;
    l["v"] = line.label.v.code;
    l["g"] = line.g.code;
    l["order"] = line.order ? Json(*line.order) : Json(nullptr);
    l["cycles"] = line.order ? Json(line.cycle_count(q)) : Json(nullptr);
    lines.push_back(std::move(l));
  }
  j["lines"] = std::move(lines);
  Json multiset = Json::array();
  for (const auto& [len, count] : pred.shape.cycles) multiset.push_back(Json::array({len, count}));
  j["cycle_multiset"] = std::move(multiset);
  const auto& mc = analysis.max_cycle;
  j["max_cycle"] = {
      {"witness", mc.witness ? Json::array({mc.witness->u.code, mc.witness->v.code})
                             : Json(nullptr)},
      {"order", mc.max_order_found},
  };
  return j;
}

std::string element_text(const Field& f, Elt e) {
  if (f.degree() == 1) return std::to_string(e.code);
  if (e.is_zero()) return "0";
  const auto coeffs = f.coeffs(e);
  std::string out;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0 || coeffs[i] != 1) out += std::to_string(coeffs[i]);
    if (i >= 1) out += "t";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

std::string label_text(const Field& f, LineLabel label) {
  return "[" + element_text(f, label.u) + ":" + element_text(f, label.v) + "]";
}

namespace {

std::string modulus_text(const Field& f) {
  const auto& m = f.modulus();
  std::string out;
  for (std::size_t i = m.size(); i-- > 0;) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0 || m[i] != 1) out += std::to_string(m[i]);
    if (i >= 1) out += "t";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace

void write_analysis_text(std::ostream& os, const QuadCtx& ctx, Elt c, const Analysis& analysis) {
  const Field& f = ctx.base();
  const std::uint64_t q = ctx.q();
  const auto& pred = analysis.prediction;
  os << "f(X) = X(X^" << q - 1 << " - c)^" << q + 1 << " over F_{" << q << "^2}\n";
  os << "base field: p = " << f.characteristic() << ", n = " << f.degree()
     << ", modulus " << modulus_text(f) << "\n";
  os << "a = " << element_text(f, ctx.a())
     << (ctx.parity() == Parity::odd ? "  (beta^2 = a)" : "  (beta^2 + beta + a = 0)") << "\n";
  os << "c = " << element_text(f, c) << "\n";
  os << "permutation polynomial: " << (analysis.permutation ? "yes" : "no") << "\n";
  os << "fixed points: " << analysis.fixed_points << "\n";
  os << "zero component: "
     << (pred.zero.kind == ZeroKind::C1 ? std::string("C1")
                                        : "(C1,T" + std::to_string(pred.zero.tree_size) + ")");
  if (pred.zero.absorbed_line) os << ", fed by line " << label_text(f, *pred.zero.absorbed_line);
  os << "\n\n";

  // One row per order, lines listed in enumeration order.
  std::map<std::uint64_t, std::vector<const LineReport*>> by_order;
  for (const auto& line : pred.lines) {
    if (line.order) by_order[*line.order].push_back(&line);
  }
  os << "d = ord(g)  cycles of length d  lines [u:v]\n";
  for (const auto& [order, lines] : by_order) {
    std::string labels, counts;
    for (const auto* l : lines) {
      if (!labels.empty()) {
        labels += ",";
        counts += "+";
      }
      labels += label_text(f, l->label);
      counts += std::to_string(l->cycle_count(q));
    }
    os << std::left << std::setw(12) << order << std::setw(20)
       << (counts + "=" + std::to_string(pred.shape.cycles.at(order))) << labels << "\n";
  }
  os << "\nshape: " << to_string(pred.shape) << "\n";
  const auto& mc = analysis.max_cycle;
  os << "maximal cycle length " << q - 1 << ": ";
  if (mc.witness) {
    os << "yes, line " << label_text(f, *mc.witness) << "\n";
  } else {
    os << "no (largest order " << mc.max_order_found << ")\n";
  }
}

Json scan_json(const ScanReport& report) {
  Json out = Json::array();
  for (const auto& e : report.entries) {
    Json failures = Json::array();
    for (const auto& r : e.failures) {
      failures.push_back({{"c", r.c.code}, {"max_order", r.max_order_found}});
    }
    out.push_back({{"q", e.q},
                   {"checked", e.checked},
                   {"min_max_order", e.min_max_order},
                   {"failures", std::move(failures)}});
  }
  return out;
}

void write_scan_text(std::ostream& os, const ScanReport& report) {
  for (const auto& e : report.entries) {
    os << "q=" << e.q << " c_checked=" << e.checked << " failures=" << e.failures.size()
       << " time_ms=" << static_cast<long long>(e.seconds * 1000.0 + 0.5) << "\n";
    for (const auto& r : e.failures) {
      os << "  no maximal cycle: q=" << r.q << " c=" << r.c.code
         << " largest order=" << r.max_order_found << "\n";
    }
  }
  os << "prime powers scanned: " << report.entries.size()
     << ", failures: " << report.failure_count() << "\n";
}

Json bounds_json(const AtBoundReport& at, const std::optional<std::uint64_t>& sweep_limit,
                 const std::vector<std::uint64_t>& failures, DivisorWeight weight) {
  Json j;
  j["t"] = at.t;
  j["primes"] = at.primes;
  j["a_t"] = at.a_t;
  j["threshold"] = at.threshold;
  if (sweep_limit) {
    j["w_sweep"] = {
        {"limit", *sweep_limit},
        {"divisors", weight == DivisorWeight::all ? "all" : "squarefree"},
        {"failing_prime_powers", failures.size()},
        {"largest_failing", failures.empty() ? Json(nullptr) : Json(failures.back())},
    };
  }
  return j;
}

void write_bounds_text(std::ostream& os, const AtBoundReport& at,
                       const std::optional<std::uint64_t>& sweep_limit,
                       const std::vector<std::uint64_t>& failures, DivisorWeight weight) {
  os << std::setprecision(10);
  os << "t = " << at.t << "\n";
  os << "primes below 2^t:";
  for (auto s : at.primes) os << " " << s;
  os << "\nA_t = " << at.a_t << "\n";
  os << "threshold (3 A_t)^(2t/(t-2)) = " << at.threshold << "\n";
  if (sweep_limit) {
    os << "prime powers q <= " << *sweep_limit << " with sqrt(q) < 3 W(q-1) ("
       << (weight == DivisorWeight::all ? "all" : "squarefree") << " divisors): " << failures.size()
       << "\n";
    os << "largest: " << (failures.empty() ? std::string("none") : std::to_string(failures.back()))
       << "\n";
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace ffdyn
