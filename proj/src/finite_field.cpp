#include "ffdyn/finite_field.hpp"

#include <algorithm>
#include <string>

namespace ffdyn {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1 % p;
  base %= p;
  while (e > 0) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p) { return mod_pow(a, p - 2, p); }

// Remainder of a modulo b (b nonzero, trimmed).
Poly poly_rem(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::uint32_t lead_inv = mod_inv(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t factor = std::uint64_t{a.back()} * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      const std::uint64_t sub = factor * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  return poly_rem(std::move(prod), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint32_t p) {
  Poly r{1};
  while (e > 0) {
    if (e & 1) r = poly_mulmod(r, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly) {
  Poly f(poly.begin(), poly.end());
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t n = f.size() - 1;
  if (n == 1) return true;
  // Ben-Or: f has no factor of degree i iff gcd(f, x^{p^i} - x) == 1.
  const Poly x{0, 1};
  Poly h = x;
  for (std::size_t i = 1; i <= n / 2; ++i) {
    h = poly_powmod(h, p, f, p);
    Poly diff = h;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;
    if (poly_gcd(f, diff, p).size() > 1) return false;
  }
  return true;
}

Field::Field(std::uint32_t p, std::vector<std::uint32_t> modulus, FieldLimits limits)
    : p_(p), modulus_(std::move(modulus)) {
  if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
  if (modulus_.size() < 2) throw FieldError("modulus must have degree >= 1");
  if (modulus_.back() != 1) throw FieldError("modulus must be monic");
  for (auto m : modulus_) {
    if (m >= p) throw FieldError("modulus coefficient out of range");
  }
  n_ = static_cast<unsigned>(modulus_.size() - 1);
  q_ = 1;
  for (unsigned i = 0; i < n_; ++i) {
    q_ *= p;
    if (q_ > limits.max_order) {
      throw FieldError("field order " + std::to_string(p) + "^" + std::to_string(n_) +
                       " exceeds the configured bound " + std::to_string(limits.max_order));
    }
  }
  if (!is_irreducible(p, modulus_)) throw FieldError("modulus is not irreducible");
  factors_ = factorize(q_ - 1);
  if (n_ > 1) build_tables();
}

Field Field::build(std::uint64_t p, unsigned n, FieldLimits limits) {
  if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
  if (n == 0) throw FieldError("extension degree must be >= 1");
  if (p > limits.max_order) throw FieldError("field order exceeds the configured bound");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < n; ++i) {
    q *= p;
    if (q > limits.max_order) {
      throw FieldError("field order " + std::to_string(p) + "^" + std::to_string(n) +
                       " exceeds the configured bound " + std::to_string(limits.max_order));
    }
  }
  const auto pp = static_cast<std::uint32_t>(p);
  if (n == 1) return Field(pp, {0, 1}, limits);
  Poly candidate(n + 1, 0);
  candidate[n] = 1;
  for (std::uint64_t low = 1; low < q; ++low) {
    std::uint64_t rest = low;
    for (unsigned i = 0; i < n; ++i) {
      candidate[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    if (candidate[0] == 0) continue;
    if (is_irreducible(pp, candidate)) return Field(pp, candidate, limits);
  }
  throw std::logic_error("no irreducible polynomial found");
}

Field Field::with_modulus(std::uint64_t p, std::vector<std::uint32_t> modulus,
                          FieldLimits limits) {
  if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
  return Field(static_cast<std::uint32_t>(p), std::move(modulus), limits);
}

void Field::check(Elt a) const {
  if (a.code >= q_) {
    throw FieldError("element code " + std::to_string(a.code) + " does not belong to F_" +
                     std::to_string(q_));
  }
}

Elt Field::from_int(std::int64_t k) const {
  const std::int64_t p = p_;
  return Elt{static_cast<std::uint32_t>(((k % p) + p) % p)};
}

Elt Field::element(std::uint64_t code) const {
  if (code >= q_) {
    throw FieldError("element code " + std::to_string(code) + " does not belong to F_" +
                     std::to_string(q_));
  }
  return Elt{static_cast<std::uint32_t>(code)};
}

Elt Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > n_) throw FieldError("too many coefficients for F_" + std::to_string(q_));
  std::uint64_t code = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_) throw FieldError("coefficient out of range");
    code = code * p_ + coeffs[i];
  }
  return Elt{static_cast<std::uint32_t>(code)};
}

std::vector<std::uint32_t> Field::coeffs(Elt a) const {
  check(a);
  std::vector<std::uint32_t> out(n_);
  std::uint32_t rest = a.code;
  for (unsigned i = 0; i < n_; ++i) {
    out[i] = rest % p_;
    rest /= p_;
  }
  return out;
}

Elt Field::add_digits(Elt a, Elt b) const {
  if (p_ == 2) return Elt{a.code ^ b.code};
  std::uint32_t x = a.code, y = b.code, scale = 1, out = 0;
  for (unsigned i = 0; i < n_; ++i) {
    out += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return Elt{out};
}

Elt Field::add(Elt a, Elt b) const {
  check(a);
  check(b);
  if (n_ == 1) return Elt{static_cast<std::uint32_t>((std::uint64_t{a.code} + b.code) % p_)};
  if (p_ == 2) return Elt{a.code ^ b.code};
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const auto& t = *tables_;
  const std::uint64_t m = q_ - 1;
  const std::uint64_t la = t.log[a.code];
  const std::uint64_t lb = t.log[b.code];
  const std::uint32_t z = t.zech[(lb + m - la) % m];
  if (z == kNoZech) return zero();
  return Elt{t.exp[(la + z) % m]};
}

Elt Field::neg(Elt a) const {
  check(a);
  if (a.is_zero() || p_ == 2) return a;
  if (n_ == 1) return Elt{p_ - a.code};
  const auto& t = *tables_;
  const std::uint64_t m = q_ - 1;
  return Elt{t.exp[(t.log[a.code] + m / 2) % m]};
}

Elt Field::sub(Elt a, Elt b) const { return add(a, neg(b)); }

Elt Field::mul(Elt a, Elt b) const {
  check(a);
  check(b);
  if (n_ == 1) return Elt{static_cast<std::uint32_t>(std::uint64_t{a.code} * b.code % p_)};
  if (a.is_zero() || b.is_zero()) return zero();
  const auto& t = *tables_;
  return Elt{t.exp[(std::uint64_t{t.log[a.code]} + t.log[b.code]) % (q_ - 1)]};
}

Elt Field::inv(Elt a) const {
  check(a);
  if (a.is_zero()) throw FieldError("division by zero");
  if (n_ == 1) return Elt{mod_inv(a.code, p_)};
  const auto& t = *tables_;
  const std::uint64_t m = q_ - 1;
  return Elt{t.exp[(m - t.log[a.code]) % m]};
}

Elt Field::div(Elt a, Elt b) const { return mul(a, inv(b)); }

Elt Field::pow(Elt a, std::int64_t e) const {
  check(a);
  if (a.is_zero()) {
    if (e < 0) throw FieldError("division by zero");
    return e == 0 ? one() : zero();
  }
  const auto m = static_cast<std::int64_t>(q_ - 1);
  const auto r = static_cast<std::uint64_t>(((e % m) + m) % m);
  if (n_ == 1) return Elt{mod_pow(a.code, r, p_)};
  const auto& t = *tables_;
  return Elt{t.exp[(t.log[a.code] * r) % (q_ - 1)]};
}

Elt Field::mul_reference(Elt a, Elt b) const {
  check(a);
  check(b);
  const auto pa = coeffs(a);
  const auto pb = coeffs(b);
  Poly r = poly_mulmod(Poly(pa.begin(), pa.end()), Poly(pb.begin(), pb.end()), modulus_, p_);
  return from_coeffs(r);
}

void Field::build_tables() {
  const std::uint64_t m = q_ - 1;
  auto is_generator = [&](Elt g) {
    for (const auto& f : factors_) {
      Elt acc = one(), base = g;
      for (std::uint64_t e = m / f.prime; e > 0; e >>= 1) {
        if (e & 1) acc = mul_reference(acc, base);
        base = mul_reference(base, base);
      }
      if (acc == one()) return false;
    }
    return true;
  };
  Elt gen{0};
  for (std::uint32_t code = 2; code < q_; ++code) {
    if (is_generator(Elt{code})) {
      gen = Elt{code};
      break;
    }
  }
  if (gen.is_zero()) throw std::logic_error("no primitive element found");

  auto t = std::make_shared<Tables>();
  t->exp.resize(m);
  t->log.assign(q_, 0);
  Elt cur = one();
  for (std::uint64_t i = 0; i < m; ++i) {
    t->exp[i] = cur.code;
    t->log[cur.code] = static_cast<std::uint32_t>(i);
    cur = mul_reference(cur, gen);
  }
  t->zech.assign(m, kNoZech);
  for (std::uint64_t i = 0; i < m; ++i) {
    const Elt s = add_digits(Elt{t->exp[i]}, one());
    if (!s.is_zero()) t->zech[i] = t->log[s.code];
  }
  tables_ = std::move(t);
}

int Field::quadratic_character(Elt a) const {
  if (!odd()) throw FieldError("quadratic character requires odd characteristic");
  check(a);
  if (a.is_zero()) return 0;
  return pow(a, static_cast<std::int64_t>((q_ - 1) / 2)) == one() ? 1 : -1;
}

int Field::absolute_trace(Elt a) const {
  if (odd()) throw FieldError("absolute trace requires characteristic 2");
  check(a);
  Elt sum = a, conj = a;
  for (unsigned i = 1; i < n_; ++i) {
    conj = mul(conj, conj);
    sum = add(sum, conj);
  }
  if (sum.code > 1) throw std::logic_error("trace left the prime field");
  return static_cast<int>(sum.code);
}

std::uint64_t Field::multiplicative_order(Elt a) const {
  check(a);
  if (a.is_zero()) throw FieldError("zero has no multiplicative order");
  std::uint64_t d = q_ - 1;
  for (const auto& f : factors_) {
    for (unsigned k = 0; k < f.exponent; ++k) {
      if (pow(a, static_cast<std::int64_t>(d / f.prime)) != one()) break;
      d /= f.prime;
    }
  }
  return d;
}

Elt Field::find_nonsquare() const {
  if (!odd()) throw FieldError("non-squares are only sought in odd characteristic");
  for (std::uint32_t code = 1; code < q_; ++code) {
    if (quadratic_character(Elt{code}) == -1) return Elt{code};
  }
  throw std::logic_error("field without non-squares");
}

Elt Field::find_trace_one() const {
  if (odd()) throw FieldError("trace-one elements are only sought in characteristic 2");
  for (std::uint32_t code = 1; code < q_; ++code) {
    if (absolute_trace(Elt{code}) == 1) return Elt{code};
  }
  throw std::logic_error("field without trace-one elements");
}

}  // namespace ffdyn
