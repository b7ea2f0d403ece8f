#include "ffdyn/number_theory.hpp"

#include <algorithm>
#include <stdexcept>

namespace ffdyn {

bool is_prime(std::uint64_t m) {
  if (m < 2) return false;
  if (m % 2 == 0) return m == 2;
  for (std::uint64_t d = 3; d * d <= m; d += 2) {
    if (m % d == 0) return false;
  }
  return true;
}

std::vector<PrimePower> factorize(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("factorize: m must be positive");
  std::vector<PrimePower> out;
  for (std::uint64_t d = 2; d * d <= m; d += (d == 2 ? 1 : 2)) {
    if (m % d != 0) continue;
    unsigned e = 0;
    while (m % d == 0) {
      m /= d;
      ++e;
    }
    out.push_back({d, e});
  }
  if (m > 1) out.push_back({m, 1});
  return out;
}

std::uint64_t divisor_count(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("divisor_count: m must be positive");
  std::uint64_t w = 1;
  for (const auto& f : factorize(m)) w *= f.exponent + 1;
  return w;
}

std::uint64_t squarefree_divisor_count(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("squarefree_divisor_count: m must be positive");
  return std::uint64_t{1} << factorize(m).size();
}

std::optional<PrimePower> as_prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  auto f = factorize(q);
  if (f.size() != 1) return std::nullopt;
  return f.front();
}

std::vector<std::uint64_t> primes_below(std::uint64_t bound) {
  std::vector<std::uint64_t> primes;
  if (bound <= 2) return primes;
  std::vector<bool> composite(bound, false);
  for (std::uint64_t i = 2; i < bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j < bound; j += i) composite[j] = true;
  }
  return primes;
}

std::vector<std::uint64_t> prime_powers_in_range(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  if (hi < 2 || lo > hi) return out;
  for (auto p : primes_below(hi + 1)) {
    for (std::uint64_t q = p;; q *= p) {
      if (q >= lo) out.push_back(q);
      if (q > hi / p) break;
    }
  }
  std::erase_if(out, [hi](std::uint64_t q) { return q > hi; });
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

}  // namespace ffdyn
