#pragma once

// Machine-readable (JSON) and table-style text renderings of analysis, scan
// and bound results. Elements are written as canonical integer encodings.

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "ffdyn/graph_builder.hpp"
#include "ffdyn/maximal_cycle.hpp"

namespace ffdyn {

using Json = nlohmann::ordered_json;

struct Analysis {
  Prediction prediction;
  std::uint64_t fixed_points = 0;
  bool permutation = false;
  MaxCycleReport max_cycle;
};

Analysis analyze(const QuadCtx& ctx, Elt c);

/// Keys, in order: q, p, n, modulus, a, c, parity, is_permutation,
/// fixed_points, zero_component, lines, cycle_multiset, max_cycle.
Json analysis_json(const QuadCtx& ctx, Elt c, const Analysis& analysis);

/// Decimal encoding for prime fields, polynomial in t otherwise (e.g. "t^2+t+1").
std::string element_text(const Field& f, Elt e);
std::string label_text(const Field& f, LineLabel label);

void write_analysis_text(std::ostream& os, const QuadCtx& ctx, Elt c, const Analysis& analysis);

/// One object per q: {"q", "checked", "min_max_order", "failures": [{"c", "max_order"}]}.
Json scan_json(const ScanReport& report);
void write_scan_text(std::ostream& os, const ScanReport& report);

Json bounds_json(const AtBoundReport& at, const std::optional<std::uint64_t>& sweep_limit,
                 const std::vector<std::uint64_t>& failures,
                 DivisorWeight weight = DivisorWeight::squarefree);
void write_bounds_text(std::ostream& os, const AtBoundReport& at,
                       const std::optional<std::uint64_t>& sweep_limit,
                       const std::vector<std::uint64_t>& failures,
                       DivisorWeight weight = DivisorWeight::squarefree);

/// Canonical serialization used for every JSON the tool prints.
std::string dump(const Json& j);

}  // namespace ffdyn
