#include "ffdyn/line_decomposition.hpp"

#include <stdexcept>
#include <string>

namespace ffdyn {

namespace {

bool is_minus_one(const Field& f, Elt c) { return c == f.neg(f.one()); }

}  // namespace

std::uint64_t GraphShape::total_points() const {
  std::uint64_t total = 1 + tree_size;
  for (const auto& [length, count] : cycles) total += length * count;
  return total;
}

std::vector<LineLabel> enumerate_lines(const QuadCtx& ctx) {
  const Field& f = ctx.base();
  std::vector<LineLabel> lines;
  lines.reserve(ctx.q() + 1);
  lines.push_back({f.one(), f.zero()});
  for (std::uint64_t u = 0; u < ctx.q(); ++u) lines.push_back({f.element(u), f.one()});
  return lines;
}

LineReport line_report(const QuadCtx& ctx, LineLabel label, Elt c) {
  LineReport r{label, eval_g(ctx, label.u, label.v, c), std::nullopt};
  if (!r.g.is_zero()) r.order = ctx.base().multiplicative_order(r.g);
  return r;
}

ZeroComponent zero_component(const QuadCtx& ctx, Elt c) {
  const Field& f = ctx.base();
  if (c.is_zero()) throw FieldError("c must be nonzero");
  const std::uint64_t tree = ctx.q() - 1;
  if (c == f.one()) return {ZeroKind::C1_with_tree, tree, LineLabel{f.one(), f.zero()}};
  if (ctx.parity() == Parity::odd && is_minus_one(f, c)) {
    return {ZeroKind::C1_with_tree, tree, LineLabel{f.zero(), f.one()}};
  }
  return {};
}

std::uint64_t fixed_point_count(const QuadCtx& ctx, Elt c) {
  const Field& f = ctx.base();
  if (c.is_zero()) throw FieldError("c must be nonzero");
  const std::uint64_t q = ctx.q();
  if (ctx.parity() == Parity::odd) {
    const Elt two = f.from_int(2);
    // c^2 = 4 first: (c+2)/(c-2) is undefined at c = 2 and degenerate at c = -2.
    if (f.mul(c, c) == f.mul(two, two)) return q;
    const int chi = f.quadratic_character(f.div(f.add(c, two), f.sub(c, two)));
    return chi == -1 ? 2 * q - 1 : 1;
  }
  return f.absolute_trace(f.inv(c)) == 1 ? 2 * q - 1 : 1;
}

bool is_permutation(const QuadCtx& ctx, Elt c) {
  const Field& f = ctx.base();
  if (c.is_zero()) throw FieldError("c must be nonzero");
  if (c == f.one()) return false;
  return !(ctx.parity() == Parity::odd && is_minus_one(f, c));
}

Prediction predict(const QuadCtx& ctx, Elt c) {
  Prediction out;
  out.zero = zero_component(ctx, c);
  out.shape.zero_kind = out.zero.kind;
  out.shape.tree_size = out.zero.tree_size;
  const std::uint64_t q = ctx.q();
  std::optional<LineLabel> collapsed;
  for (const auto& label : enumerate_lines(ctx)) {
    LineReport r = line_report(ctx, label, c);
    if (r.order) {
      out.shape.cycles[*r.order] += r.cycle_count(q);
    } else {
      if (collapsed) {
        throw std::logic_error("more than one line collapses onto zero for c = " +
                               std::to_string(c.code));
      }
      collapsed = label;
    }
    out.lines.push_back(r);
  }
  if (collapsed != out.zero.absorbed_line) {
    throw std::logic_error("collapsing line disagrees with the zero-component rule for c = " +
                           std::to_string(c.code));
  }
  if (out.shape.total_points() != ctx.size()) {
    throw std::logic_error("predicted shape does not account for q^2 points");
  }
  return out;
}

GraphShape predicted_graph(const QuadCtx& ctx, Elt c) { return predict(ctx, c).shape; }

}  // namespace ffdyn
