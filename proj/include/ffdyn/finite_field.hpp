#pragma once

// Arithmetic in F_q = F_p[t]/(m(t)) for prime powers q up to a configurable
// bound. Elements are carried by their canonical encoding
// sum_i coeff_i * p^i; the coefficient view is available through Field::coeffs.

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

#include "ffdyn/number_theory.hpp"

namespace ffdyn {

/// Element of a finite field, identified by its base-p digit packing.
/// The owning Field is not stored; every Field method range-checks the code.
struct Elt {
  std::uint32_t code = 0;

  constexpr bool is_zero() const { return code == 0; }
  friend constexpr auto operator<=>(const Elt&, const Elt&) = default;
};

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct FieldLimits {
  std::uint64_t max_order = std::uint64_t{1} << 20;
};

class Field {
 public:
  /// F_{p^n} with the smallest monic irreducible modulus, where polynomials
  /// are ordered by the integer sum_{i<n} m_i p^i of their lower coefficients.
  static Field build(std::uint64_t p, unsigned n, FieldLimits limits = {});

  /// F_{p^n} with a caller-supplied modulus (n+1 coefficients, low degree first,
  /// monic). Throws FieldError if it is not irreducible over F_p.
  static Field with_modulus(std::uint64_t p, std::vector<std::uint32_t> modulus,
                            FieldLimits limits = {});

  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return n_; }
  std::uint64_t order() const { return q_; }
  bool odd() const { return p_ != 2; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  const std::vector<PrimePower>& order_minus_one_factors() const { return factors_; }

  Elt zero() const { return Elt{0}; }
  Elt one() const { return Elt{1}; }
  /// Image of an integer in the prime subfield.
  Elt from_int(std::int64_t k) const;
  /// Validated element from its canonical encoding.
  Elt element(std::uint64_t code) const;
  Elt from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(Elt a) const;
  bool contains(Elt a) const { return a.code < q_; }

  Elt add(Elt a, Elt b) const;
  Elt sub(Elt a, Elt b) const;
  Elt neg(Elt a) const;
  Elt mul(Elt a, Elt b) const;
  Elt inv(Elt a) const;
  Elt div(Elt a, Elt b) const;
  /// Negative exponents go through the inverse; 0^0 == 1, 0^e == 0 for e > 0.
  Elt pow(Elt a, std::int64_t e) const;

  /// Schoolbook polynomial product reduced by the modulus. Never touches the
  /// log tables; used to build them and as an independent check in tests.
  Elt mul_reference(Elt a, Elt b) const;

  /// chi_2 in {-1, 0, +1}; odd characteristic only.
  int quadratic_character(Elt a) const;
  /// Tr_{F_q/F_2}(a) in {0, 1}; characteristic 2 only.
  int absolute_trace(Elt a) const;
  /// Least d >= 1 with a^d = 1, obtained by stripping prime factors of q-1.
  std::uint64_t multiplicative_order(Elt a) const;

  /// Smallest-encoding non-square (odd) / trace-one element (even).
  Elt find_nonsquare() const;
  Elt find_trace_one() const;

  bool operator==(const Field& other) const {
    return p_ == other.p_ && modulus_ == other.modulus_;
  }

 private:
  struct Tables {
    std::vector<std::uint32_t> exp;   // exp[i] = g^i, i < q-1
    std::vector<std::uint32_t> log;   // log[exp[i]] = i; log[0] unused
    std::vector<std::uint32_t> zech;  // g^zech[i] = 1 + g^i; kNoZech when 1 + g^i = 0
  };
  static constexpr std::uint32_t kNoZech = 0xffffffffu;

  Field(std::uint32_t p, std::vector<std::uint32_t> modulus, FieldLimits limits);
  void check(Elt a) const;
  Elt add_digits(Elt a, Elt b) const;
  void build_tables();

  std::uint32_t p_ = 0;
  unsigned n_ = 0;
  std::uint64_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<PrimePower> factors_;
  std::shared_ptr<const Tables> tables_;  // only for n > 1
};

/// True if the monic polynomial (low degree first) is irreducible over F_p.
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly);

}  // namespace ffdyn
