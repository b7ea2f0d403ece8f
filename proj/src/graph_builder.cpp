#include "ffdyn/graph_builder.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <sstream>

namespace ffdyn {

OracleLimits OracleLimits::from_env() {
  OracleLimits limits;
  if (const char* env = std::getenv("FFDYN_ORACLE_BOUND")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) limits.max_q = v;
  }
  return limits;
}

namespace {

void decompose(FunctionalGraph& g) {
  const std::size_t n = g.successor.size();
  enum : std::uint8_t { white, gray, black };
  std::vector<std::uint8_t> color(n, white);
  std::vector<std::uint32_t> pos(n, 0);
  std::vector<std::uint32_t> path;
  g.tail_length.assign(n, 0);
  g.cycles.clear();

  for (std::size_t start = 0; start < n; ++start) {
    if (color[start] != white) continue;
    path.clear();
    auto cur = static_cast<std::uint32_t>(start);
    while (color[cur] == white) {
      color[cur] = gray;
      pos[cur] = static_cast<std::uint32_t>(path.size());
      path.push_back(cur);
      cur = g.successor[cur];
    }
    std::size_t tail_end = path.size();
    std::uint32_t base = 0;
    if (color[cur] == gray) {
      // Closed a new cycle inside the current path.
      tail_end = pos[cur];
      std::vector<std::uint32_t> cycle(path.begin() + static_cast<std::ptrdiff_t>(tail_end),
                                       path.end());
      std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
      for (auto node : cycle) {
        g.tail_length[node] = 0;
        color[node] = black;
      }
      g.cycles.push_back(std::move(cycle));
    } else {
      base = g.tail_length[cur];
    }
    for (std::size_t k = tail_end; k-- > 0;) {
      g.tail_length[path[k]] = base + static_cast<std::uint32_t>(tail_end - k);
      color[path[k]] = black;
    }
  }
  std::sort(g.cycles.begin(), g.cycles.end());
}

}  // namespace

FunctionalGraph build_functional_graph(const QuadCtx& ctx, Elt c, OracleLimits limits,
                                       simd::Isa isa) {
  const std::uint64_t q = ctx.q();
  if (q > limits.max_q) {
    throw OracleBoundError("q = " + std::to_string(q) + " exceeds the oracle bound " +
                           std::to_string(limits.max_q) + " (set FFDYN_ORACLE_BOUND to raise it)");
  }
  if (c.is_zero() || !ctx.base().contains(c)) throw FieldError("c must be a nonzero element of F_q");

  FunctionalGraph g;
  g.q = q;
  g.successor.resize(q * q);
  std::vector<std::uint32_t> xs(q), ys(q), out_x(q), out_y(q);
  std::iota(xs.begin(), xs.end(), 0u);
  for (std::uint64_t y = 0; y < q; ++y) {
    std::fill(ys.begin(), ys.end(), static_cast<std::uint32_t>(y));
    simd::evaluate_map(ctx, c, xs, ys, out_x, out_y, isa);
    for (std::uint64_t x = 0; x < q; ++x) {
      g.successor[x + q * y] = static_cast<std::uint32_t>(out_x[x] + q * out_y[x]);
    }
  }
  decompose(g);
  return g;
}

Trajectory trajectory(const QuadCtx& ctx, Elt c, QuadElt start) {
  auto step = [&](QuadElt s) { return eval_f_direct(ctx, s, c); };

  // Brent: cycle length first, then the tail length.
  std::uint64_t power = 1, lam = 1;
  QuadElt tortoise = start, hare = step(start);
  while (tortoise != hare) {
    if (power == lam) {
      tortoise = hare;
      power *= 2;
      lam = 0;
    }
    hare = step(hare);
    ++lam;
  }
  tortoise = hare = start;
  for (std::uint64_t i = 0; i < lam; ++i) hare = step(hare);
  std::uint64_t mu = 0;
  while (tortoise != hare) {
    tortoise = step(tortoise);
    hare = step(hare);
    ++mu;
  }

  Trajectory t;
  QuadElt cur = start;
  for (std::uint64_t i = 0; i < mu; ++i, cur = step(cur)) t.tail.push_back(cur);
  for (std::uint64_t i = 0; i < lam; ++i, cur = step(cur)) t.cycle.push_back(cur);
  return t;
}

GraphShape oracle_shape(const FunctionalGraph& graph) {
  if (graph.successor.empty() || graph.successor[0] != 0) {
    throw StructuralAnomaly("0 is not a fixed point");
  }
  GraphShape shape;
  for (std::size_t i = 1; i < graph.size(); ++i) {
    if (graph.tail_length[i] == 0) continue;
    if (graph.successor[i] != 0) {
      throw StructuralAnomaly("node " + std::to_string(i) + " lies on a tail of length " +
                              std::to_string(graph.tail_length[i]) +
                              " that does not end directly in 0");
    }
    ++shape.tree_size;
  }
  shape.zero_kind = shape.tree_size > 0 ? ZeroKind::C1_with_tree : ZeroKind::C1;
  for (const auto& cycle : graph.cycles) {
    if (cycle.size() == 1 && cycle.front() == 0) continue;
    ++shape.cycles[cycle.size()];
  }
  return shape;
}

std::uint64_t count_fixed_points(const FunctionalGraph& graph) {
  std::uint64_t n = 0;
  for (std::size_t i = 0; i < graph.size(); ++i) n += graph.successor[i] == i;
  return n;
}

bool is_bijection(const FunctionalGraph& graph) {
  std::vector<std::uint32_t> indegree(graph.size(), 0);
  for (auto s : graph.successor) ++indegree[s];
  return std::all_of(indegree.begin(), indegree.end(), [](std::uint32_t d) { return d == 1; });
}

ShapeComparison compare_shapes(const GraphShape& predicted, const GraphShape& actual) {
  ShapeComparison out;
  out.zero_differs =
      predicted.zero_kind != actual.zero_kind || predicted.tree_size != actual.tree_size;
  std::map<std::uint64_t, std::pair<std::uint64_t, std::uint64_t>> merged;
  for (const auto& [len, count] : predicted.cycles) merged[len].first = count;
  for (const auto& [len, count] : actual.cycles) merged[len].second = count;
  for (const auto& [len, counts] : merged) {
    if (counts.first != counts.second) out.cycle_diffs.push_back({len, counts.first, counts.second});
  }
  out.match = !out.zero_differs && out.cycle_diffs.empty();
  return out;
}

namespace {

std::string zero_text(ZeroKind kind, std::uint64_t tree) {
  return kind == ZeroKind::C1 ? "C1" : "(C1,T" + std::to_string(tree) + ")";
}

}  // namespace

std::string ShapeComparison::describe(const GraphShape& predicted, const GraphShape& actual) const {
  if (match) return "MATCH";
  std::ostringstream os;
  os << "MISMATCH";
  if (zero_differs) {
    os << "\n  zero component: predicted " << zero_text(predicted.zero_kind, predicted.tree_size)
       << ", actual " << zero_text(actual.zero_kind, actual.tree_size);
  }
  for (const auto& d : cycle_diffs) {
    os << "\n  cycles of length " << d.length << ": predicted " << d.predicted << ", actual "
       << d.actual;
  }
  return os.str();
}

std::string to_string(const GraphShape& shape) {
  std::string out = zero_text(shape.zero_kind, shape.tree_size);
  for (const auto& [len, count] : shape.cycles) {
    out += " + " + std::to_string(count) + "xC" + std::to_string(len);
  }
  return out;
}

void write_dot(std::ostream& os, const QuadCtx& ctx, const FunctionalGraph& graph,
               DotScope scope) {
  const std::uint64_t n = graph.size();
  std::vector<bool> keep(n, true);
  if (scope == DotScope::zero_component) {
    // 0 is its own cycle, so a node belongs to its component iff its tail ends in 0.
    for (std::uint64_t i = 0; i < n; ++i) {
      std::uint32_t cur = static_cast<std::uint32_t>(i);
      for (std::uint32_t k = 0; k < graph.tail_length[i]; ++k) cur = graph.successor[cur];
      keep[i] = cur == 0;
    }
  }
  auto name = [&](std::uint64_t i) {
    const QuadElt s = ctx.from_index(i);
    return "\"(" + std::to_string(s.x.code) + "," + std::to_string(s.y.code) + ")\"";
  };
  os << "digraph functional_graph {\n";
  for (std::uint64_t i = 0; i < n; ++i) {
    if (keep[i]) os << "  " << name(i) << ";\n";
  }
  for (std::uint64_t i = 0; i < n; ++i) {
    if (keep[i]) os << "  " << name(i) << " -> " << name(graph.successor[i]) << ";\n";
  }
  os << "}\n";
}

}  // namespace ffdyn
