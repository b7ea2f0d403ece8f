#pragma once

// Closed-form description of the functional graph of f over F_{q^2}.
//
// F_{q^2}^* splits into the q+1 punctured lines L_[u:v] through the origin.
// f multiplies every point of L_[u:v] by the same scalar g(u, v), so a line
// either collapses onto 0 (g = 0) or splits into (q-1)/d cycles of length
// d = ord(g(u, v)). Nothing here iterates f.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ffdyn/quadratic_extension.hpp"

namespace ffdyn {

/// Normalized point of P^1: either [1:0] or [u:1].
struct LineLabel {
  Elt u;
  Elt v;

  friend constexpr auto operator<=>(const LineLabel&, const LineLabel&) = default;
};

struct LineReport {
  LineLabel label;
  Elt g;
  /// ord(g) in F_q^*; empty when g == 0 and the line falls into zero.
  std::optional<std::uint64_t> order;

  std::uint64_t cycle_count(std::uint64_t q) const { return order ? (q - 1) / *order : 0; }
};

enum class ZeroKind { C1, C1_with_tree };

struct ZeroComponent {
  ZeroKind kind = ZeroKind::C1;
  std::uint64_t tree_size = 0;
  /// The line whose nonzero points map straight to 0, when one exists.
  std::optional<LineLabel> absorbed_line;
};

/// Isomorphism invariant of these graphs: the component of zero plus the
/// multiset of remaining cycle lengths. Every tree is a star into 0, so equal
/// shapes mean isomorphic graphs.
struct GraphShape {
  ZeroKind zero_kind = ZeroKind::C1;
  std::uint64_t tree_size = 0;
  std::map<std::uint64_t, std::uint64_t> cycles;  // length -> count, zero's loop excluded

  /// 1 + tree_size + sum(length * count); equals q^2 for a valid shape.
  std::uint64_t total_points() const;

  bool operator==(const GraphShape&) const = default;
};

std::vector<LineLabel> enumerate_lines(const QuadCtx& ctx);

LineReport line_report(const QuadCtx& ctx, LineLabel label, Elt c);

ZeroComponent zero_component(const QuadCtx& ctx, Elt c);

std::uint64_t fixed_point_count(const QuadCtx& ctx, Elt c);

bool is_permutation(const QuadCtx& ctx, Elt c);

/// All line reports together with the assembled shape.
struct Prediction {
  std::vector<LineReport> lines;
  ZeroComponent zero;
  GraphShape shape;
};

/// Throws std::logic_error if the per-line data contradicts zero_component
/// (more than one collapsing line, or the wrong one).
Prediction predict(const QuadCtx& ctx, Elt c);

GraphShape predicted_graph(const QuadCtx& ctx, Elt c);

}  // namespace ffdyn
