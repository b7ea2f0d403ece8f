#pragma once

// F_{q^2} = F_q(beta) in coordinates x + y*beta, where
//   odd q:  beta^2 = a with a a non-square,
//   even q: beta^2 + beta + a = 0 with Tr(a) = 1.
// The map under study is f(X) = X (X^{q-1} - c)^{q+1} with c in F_q^*.

#include <cstdint>

#include "ffdyn/finite_field.hpp"

namespace ffdyn {

enum class Parity { odd, even };

struct QuadElt {
  Elt x;
  Elt y;

  bool is_zero() const { return x.is_zero() && y.is_zero(); }
  friend constexpr auto operator<=>(const QuadElt&, const QuadElt&) = default;
};

class QuadCtx {
 public:
  /// Uses find_nonsquare / find_trace_one for the defining constant.
  explicit QuadCtx(Field base);
  /// Validates `a` (non-square for odd q, trace one for even q).
  QuadCtx(Field base, Elt a);

  const Field& base() const { return base_; }
  Elt a() const { return a_; }
  Parity parity() const { return parity_; }
  std::uint64_t q() const { return base_.order(); }
  std::uint64_t size() const { return q() * q(); }

  QuadElt embed(Elt x) const { return {x, base_.zero()}; }
  QuadElt add(QuadElt s, QuadElt t) const;
  QuadElt sub(QuadElt s, QuadElt t) const;
  QuadElt mul(QuadElt s, QuadElt t) const;
  QuadElt scale(Elt k, QuadElt s) const;
  QuadElt pow(QuadElt s, std::uint64_t e) const;

  /// Flat index x + q*y, the node id used by the functional graph and DOT export.
  std::uint64_t index(QuadElt s) const { return s.x.code + q() * s.y.code; }
  QuadElt from_index(std::uint64_t i) const;

 private:
  Field base_;
  Elt a_;
  Parity parity_;
};

/// alpha -> alpha^q. Odd: (x, y) -> (x, -y). Even: (x, y) -> (x + y, y).
QuadElt frobenius(const QuadCtx& ctx, QuadElt s);

/// f(alpha) by generic exponentiation in F_{q^2}. Throws on c == 0.
QuadElt eval_f_direct(const QuadCtx& ctx, QuadElt s, Elt c);

/// The scalar g(x, y) in F_q with f(x + y beta) = g(x, y) (x + y beta).
///   odd:  ((1-c)^2 x^2 - (1+c)^2 y^2 a) / (x^2 - y^2 a)
///   even: c^2 + 1 + c y^2 / (x^2 + x y + y^2 a)
/// Undefined at the origin; throws there and on c == 0.
Elt eval_g(const QuadCtx& ctx, Elt x, Elt y, Elt c);

/// g(x, y) * alpha, with f(0) = 0.
QuadElt eval_f_via_g(const QuadCtx& ctx, QuadElt s, Elt c);

}  // namespace ffdyn
