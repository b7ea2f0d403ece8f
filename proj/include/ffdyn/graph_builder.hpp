#pragma once

// Brute-force oracle. Materializes the functional graph by evaluating f on
// every element of F_{q^2} (generic exponentiation only, never g) and reads
// its structure off the successor array.

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "ffdyn/line_decomposition.hpp"
#include "ffdyn/simd/map_kernel.hpp"

namespace ffdyn {

struct OracleLimits {
  std::uint64_t max_q = 512;

  /// Default bound, overridden by FFDYN_ORACLE_BOUND when set to a positive integer.
  static OracleLimits from_env();
};

class OracleBoundError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown by oracle_shape when the graph is not of the form "star into 0 plus
/// disjoint cycles".
class StructuralAnomaly : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FunctionalGraph {
  std::uint64_t q = 0;
  /// successor[i] = index(f(from_index(i))), index = x + q*y.
  std::vector<std::uint32_t> successor;
  /// Each cycle once, starting from its smallest index.
  std::vector<std::vector<std::uint32_t>> cycles;
  /// Steps until the node reaches its cycle; 0 on cycles.
  std::vector<std::uint32_t> tail_length;

  std::uint64_t size() const { return successor.size(); }
};

struct Trajectory {
  std::vector<QuadElt> tail;
  std::vector<QuadElt> cycle;
};

FunctionalGraph build_functional_graph(const QuadCtx& ctx, Elt c, OracleLimits limits = {},
                                       simd::Isa isa = simd::best_isa());

/// Pre-cycle and cycle through `start`, found with Brent's algorithm without
/// building the graph.
Trajectory trajectory(const QuadCtx& ctx, Elt c, QuadElt start);

GraphShape oracle_shape(const FunctionalGraph& graph);

std::uint64_t count_fixed_points(const FunctionalGraph& graph);

/// True when every node has exactly one preimage.
bool is_bijection(const FunctionalGraph& graph);

struct CycleDiff {
  std::uint64_t length;
  std::uint64_t predicted;
  std::uint64_t actual;
};

struct ShapeComparison {
  bool match = true;
  bool zero_differs = false;
  std::vector<CycleDiff> cycle_diffs;

  std::string describe(const GraphShape& predicted, const GraphShape& actual) const;
};

ShapeComparison compare_shapes(const GraphShape& predicted, const GraphShape& actual);

std::string to_string(const GraphShape& shape);

enum class DotScope { whole_graph, zero_component };

/// Directed graph in DOT. Nodes are "(x,y)" with canonical encodings and appear
/// in index order, edges follow in the order of their source node.
void write_dot(std::ostream& os, const QuadCtx& ctx, const FunctionalGraph& graph,
               DotScope scope = DotScope::whole_graph);

}  // namespace ffdyn
