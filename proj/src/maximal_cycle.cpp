#include "ffdyn/maximal_cycle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <thread>

namespace ffdyn {

MaxCycleReport exists_primitive_g(const QuadCtx& ctx, Elt c) {
  MaxCycleReport r;
  r.q = ctx.q();
  r.c = c;
  const std::uint64_t full = ctx.q() - 1;
  for (const auto& label : enumerate_lines(ctx)) {
    const LineReport line = line_report(ctx, label, c);
    if (!line.order) continue;
    r.max_order_found = std::max(r.max_order_found, *line.order);
    if (*line.order == full) {
      r.witness = label;
      break;
    }
  }
  return r;
}

std::uint64_t divisor_weight(std::uint64_t m, DivisorWeight weight) {
  return weight == DivisorWeight::all ? divisor_count(m) : squarefree_divisor_count(m);
}

SqrtBoundReport sqrt_bound_check(std::uint64_t q, DivisorWeight weight) {
  if (q < 2) throw std::invalid_argument("sqrt_bound_check: q must be >= 2");
  SqrtBoundReport r{q, divisor_weight(q - 1, weight), false};
  r.passes = q >= 9 * r.w * r.w;
  return r;
}

AtBoundReport compute_a_t(double t) {
  if (!std::isfinite(t) || t <= 2.0) throw std::domain_error("compute_a_t: t must be > 2");
  if (t > 40.0) throw std::domain_error("compute_a_t: t above 40 is not supported");
  AtBoundReport r;
  r.t = t;
  const double bound = std::exp2(t);
  for (auto s : primes_below(static_cast<std::uint64_t>(std::ceil(bound)) + 1)) {
    if (static_cast<double>(s) < bound) r.primes.push_back(s);
  }
  // Accumulated in logs; A_t overflows doubles well before t = 40 otherwise.
  double log_a = 0;
  for (auto s : r.primes) log_a += std::log(2.0) - std::log(static_cast<double>(s)) / t;
  r.a_t = std::exp(log_a);
  r.threshold = std::exp((std::log(3.0) + log_a) * 2.0 * t / (t - 2.0));
  return r;
}

std::vector<std::uint64_t> sqrt_bound_failures(std::uint64_t limit, DivisorWeight weight) {
  std::vector<std::uint64_t> out;
  for (auto q : prime_powers_in_range(2, limit)) {
    if (!sqrt_bound_check(q, weight).passes) out.push_back(q);
  }
  return out;
}

std::uint64_t ScanReport::failure_count() const {
  std::uint64_t n = 0;
  for (const auto& e : entries) n += e.failures.size();
  return n;
}

namespace {

ScanEntry scan_one(std::uint64_t q, const FieldLimits& limits) {
  const auto start = std::chrono::steady_clock::now();
  const auto pp = *as_prime_power(q);
  const QuadCtx ctx(Field::build(pp.prime, pp.exponent, limits));
  ScanEntry e;
  e.q = q;
  e.min_max_order = q - 1;
  for (std::uint64_t code = 1; code < q; ++code) {
    const MaxCycleReport r = exists_primitive_g(ctx, ctx.base().element(code));
    ++e.checked;
    e.min_max_order = std::min(e.min_max_order, r.max_order_found);
    if (!r.witness) e.failures.push_back(r);
  }
  e.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return e;
}

}  // namespace

ScanReport max_cycle_scan(std::uint64_t q_min, std::uint64_t q_max, ScanOptions options) {
  if (q_min > q_max) throw std::invalid_argument("max_cycle_scan: q_min exceeds q_max");
  const auto qs = prime_powers_in_range(q_min, q_max);
  ScanReport report;
  report.entries.resize(qs.size());
  if (qs.empty()) return report;

  unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(qs.size()));

  // Largest q first so the long jobs do not end up last in the queue.
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < qs.size();) {
      if (failed) return;
      const std::size_t slot = qs.size() - 1 - k;
      try {
        report.entries[slot] = scan_one(qs[slot], options.field_limits);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  pool.clear();
  if (error) std::rethrow_exception(error);
  return report;
}

}  // namespace ffdyn
