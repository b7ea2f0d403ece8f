#pragma once

// Existence of cycles of the maximal length q-1, i.e. of a line whose
// g-value generates F_q^*, together with the two sufficient conditions used to
// bound the search: sqrt(q) >= 3 W(q-1), and q >= (3 A_t)^{2t/(t-2)}.

#include <cstdint>
#include <optional>
#include <vector>

#include "ffdyn/line_decomposition.hpp"

namespace ffdyn {

struct MaxCycleReport {
  std::uint64_t q = 0;
  Elt c;
  /// First line, in enumeration order, with a primitive g-value.
  std::optional<LineLabel> witness;
  /// Largest ord(g(u, v)) seen; q-1 whenever a witness exists.
  std::uint64_t max_order_found = 0;
};

/// Scans the lines in enumerate_lines order and stops at the first primitive
/// g-value (no larger order is possible).
MaxCycleReport exists_primitive_g(const QuadCtx& ctx, Elt c);

/// How W(m) counts divisors. The squarefree count 2^omega(m) is what the
/// character-sum bound and the A_t estimate W(m) < A_t m^{1/t} are about, and
/// it is the one under which the bound holds for every prime power q > 8971.
/// Counting all divisors is stricter and fails for e.g. q = 9001.
enum class DivisorWeight { squarefree, all };

std::uint64_t divisor_weight(std::uint64_t m, DivisorWeight weight);

struct SqrtBoundReport {
  std::uint64_t q = 0;
  std::uint64_t w = 0;  // W(q-1)
  bool passes = false;  // q >= 9 W(q-1)^2, i.e. sqrt(q) >= 3 W(q-1)
};

SqrtBoundReport sqrt_bound_check(std::uint64_t q, DivisorWeight weight = DivisorWeight::squarefree);

struct AtBoundReport {
  double t = 0;
  std::vector<std::uint64_t> primes;  // all primes s < 2^t
  double a_t = 0;                     // prod 2 / s^{1/t}
  double threshold = 0;               // (3 A_t)^{2t/(t-2)}
};

/// Throws std::domain_error for t <= 2 (or non-finite t).
AtBoundReport compute_a_t(double t);

/// Prime powers q in [2, limit] that fail q >= 9 W(q-1)^2, ascending.
std::vector<std::uint64_t> sqrt_bound_failures(std::uint64_t limit,
                                               DivisorWeight weight = DivisorWeight::squarefree);

struct ScanEntry {
  std::uint64_t q = 0;
  std::uint64_t checked = 0;               // number of c values examined
  std::uint64_t min_max_order = 0;         // smallest max_order_found over c
  std::vector<MaxCycleReport> failures;    // (q, c) without a witness
  double seconds = 0;
};

struct ScanReport {
  std::vector<ScanEntry> entries;  // ascending q

  std::uint64_t failure_count() const;
};

struct ScanOptions {
  unsigned threads = 0;  // 0: hardware concurrency
  FieldLimits field_limits{};
};

/// Every prime power q in [q_min, q_max] and every c in F_q^*, with the default
/// field modulus and defining constant.
ScanReport max_cycle_scan(std::uint64_t q_min, std::uint64_t q_max, ScanOptions options = {});

}  // namespace ffdyn
