#include <doctest.h>

#include <set>

#include "ffdyn/finite_field.hpp"

using namespace ffdyn;

namespace {

using Poly = std::vector<std::uint32_t>;

// Irreducibility by trial division against every monic polynomial of degree
// at most n/2. Independent of the Ben-Or test in the library.
bool brute_irreducible(std::uint32_t p, const Poly& f) {
  const std::size_t n = f.size() - 1;
  for (std::size_t k = 1; k <= n / 2; ++k) {
    const std::uint64_t count = ipow(p, static_cast<unsigned>(k));
    for (std::uint64_t low = 0; low < count; ++low) {
      Poly d(k + 1, 1);
      std::uint64_t rest = low;
      for (std::size_t i = 0; i < k; ++i) {
        d[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      Poly r = f;  // long division by monic d
      for (std::size_t top = r.size(); top-- > k;) {
        const std::uint32_t lead = r[top];
        for (std::size_t i = 0; i <= k; ++i) {
          r[top - k + i] = static_cast<std::uint32_t>((r[top - k + i] + p - lead * d[i] % p) % p);
        }
      }
      bool zero = true;
      for (std::size_t i = 0; i < k; ++i) zero = zero && r[i] == 0;
      if (zero) return false;
    }
  }
  return true;
}

Poly brute_smallest_irreducible(std::uint32_t p, unsigned n) {
  const std::uint64_t count = ipow(p, n);
  for (std::uint64_t low = 0; low < count; ++low) {
    Poly f(n + 1, 1);
    std::uint64_t rest = low;
    for (unsigned i = 0; i < n; ++i) {
      f[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    if (brute_irreducible(p, f)) return f;
  }
  return {};
}

std::vector<Field> small_fields(std::uint64_t max_q) {
  std::vector<Field> out;
  for (auto q : prime_powers_in_range(2, max_q)) {
    const auto pp = *as_prime_power(q);
    out.push_back(Field::build(pp.prime, pp.exponent));
  }
  return out;
}

}  // namespace

TEST_CASE("build_field picks the smallest irreducible modulus") {
  const Field f11 = Field::build(11, 1);
  CHECK(f11.order() == 11);
  CHECK(f11.modulus() == Poly{0, 1});
  CHECK(f11.order_minus_one_factors() == std::vector<PrimePower>{{2, 1}, {5, 1}});

  const Field f8 = Field::build(2, 3);
  CHECK(f8.modulus() == Poly{1, 1, 0, 1});
  CHECK(f8.order_minus_one_factors() == std::vector<PrimePower>{{7, 1}});

  const Field f9 = Field::build(3, 2);
  CHECK(f9.modulus() == Poly{1, 0, 1});
  CHECK(f9.order_minus_one_factors() == std::vector<PrimePower>{{2, 3}});

  for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{
           {2, 2}, {2, 4}, {2, 5}, {2, 6}, {2, 7}, {3, 3}, {3, 4}, {5, 2}, {5, 3}, {7, 2}}) {
    CAPTURE(p);
    CAPTURE(n);
    CHECK(Field::build(p, n).modulus() == brute_smallest_irreducible(p, n));
  }
  CHECK(Field::build(2, 6) == Field::build(2, 6));
}

TEST_CASE("Ben-Or irreducibility agrees with trial division") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (unsigned n = 2; n <= (p == 2 ? 6u : 3u); ++n) {
      const std::uint64_t count = ipow(p, n);
      for (std::uint64_t low = 0; low < count; ++low) {
        Poly f(n + 1, 1);
        std::uint64_t rest = low;
        for (unsigned i = 0; i < n; ++i) {
          f[i] = static_cast<std::uint32_t>(rest % p);
          rest /= p;
        }
        REQUIRE(is_irreducible(p, f) == brute_irreducible(p, f));
      }
    }
  }
}

TEST_CASE("field construction errors") {
  CHECK_THROWS_AS(Field::build(12, 1), FieldError);
  CHECK_THROWS_AS(Field::build(1, 1), FieldError);
  CHECK_THROWS_AS(Field::build(2, 0), FieldError);
  CHECK_THROWS_AS(Field::build(2, 21), FieldError);
  CHECK_THROWS_AS(Field::build(2, 11, FieldLimits{1024}), FieldError);
  CHECK_NOTHROW(Field::build(2, 11, FieldLimits{2048}));
  CHECK_THROWS_AS(Field::build(1048583, 1), FieldError);
  CHECK_THROWS_AS(Field::with_modulus(2, {1, 0, 1}), FieldError);  // (t+1)^2
  CHECK_THROWS_AS(Field::with_modulus(2, {1, 1, 0}), FieldError);  // not monic
  CHECK_THROWS_AS(Field::with_modulus(3, {1, 5, 1}), FieldError);  // coefficient >= p
  CHECK_NOTHROW(Field::with_modulus(2, {1, 1, 1, 1, 1}));
}

TEST_CASE("basic arithmetic") {
  const Field f11 = Field::build(11, 1);
  CHECK(f11.inv(Elt{4}) == Elt{3});
  CHECK(f11.inv(Elt{8}) == Elt{7});
  CHECK(f11.div(Elt{1}, Elt{4}) == Elt{3});
  CHECK(f11.sub(Elt{2}, Elt{5}) == Elt{8});
  CHECK(f11.neg(Elt{0}) == Elt{0});
  CHECK(f11.pow(Elt{2}, -1) == Elt{6});
  CHECK(f11.pow(Elt{2}, 10) == f11.one());
  CHECK(f11.pow(Elt{0}, 0) == f11.one());
  CHECK(f11.from_int(-1) == Elt{10});
  CHECK_THROWS_AS(f11.inv(Elt{0}), FieldError);
  CHECK_THROWS_AS(f11.pow(Elt{0}, -2), FieldError);
  CHECK_THROWS_AS(f11.add(Elt{11}, Elt{1}), FieldError);
  CHECK_THROWS_AS(f11.element(11), FieldError);

  // F_4 = F_2[t]/(t^2 + t + 1): t * t = t + 1.
  const Field f4 = Field::build(2, 2);
  REQUIRE(f4.modulus() == Poly{1, 1, 1});
  CHECK(f4.mul(Elt{2}, Elt{2}) == Elt{3});
  CHECK(f4.mul_reference(Elt{2}, Elt{2}) == Elt{3});
}

TEST_CASE("log-table arithmetic agrees with polynomial arithmetic") {
  for (const Field& f : small_fields(256)) {
    if (f.degree() == 1) continue;
    CAPTURE(f.order());
    const std::uint32_t q = static_cast<std::uint32_t>(f.order());
    for (std::uint32_t a = 0; a < q; ++a) {
      const auto ca = f.coeffs(Elt{a});
      for (std::uint32_t b = 0; b < q; ++b) {
        REQUIRE(f.mul(Elt{a}, Elt{b}) == f.mul_reference(Elt{a}, Elt{b}));
        const auto cb = f.coeffs(Elt{b});
        std::vector<std::uint32_t> sum(ca.size());
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = (ca[i] + cb[i]) % f.characteristic();
        REQUIRE(f.add(Elt{a}, Elt{b}) == f.from_coeffs(sum));
      }
      REQUIRE(f.add(Elt{a}, f.neg(Elt{a})) == f.zero());
      if (a != 0) REQUIRE(f.mul(Elt{a}, f.inv(Elt{a})) == f.one());
    }
  }
}

TEST_CASE("encode/decode round-trip for every field up to 1024") {
  for (const Field& f : small_fields(1024)) {
    for (std::uint32_t code = 0; code < f.order(); ++code) {
      const auto coeffs = f.coeffs(Elt{code});
      REQUIRE(coeffs.size() == f.degree());
      for (auto d : coeffs) REQUIRE(d < f.characteristic());
      REQUIRE(f.from_coeffs(coeffs) == Elt{code});
    }
  }
}

TEST_CASE("quadratic character") {
  const Field f11 = Field::build(11, 1);
  CHECK(f11.quadratic_character(Elt{3}) == 1);
  CHECK(f11.quadratic_character(Elt{8}) == -1);
  CHECK(f11.quadratic_character(Elt{0}) == 0);
  CHECK_THROWS_AS(Field::build(2, 3).quadratic_character(Elt{1}), FieldError);

  for (const Field& f : small_fields(49)) {
    if (!f.odd()) continue;
    CAPTURE(f.order());
    const std::uint32_t q = static_cast<std::uint32_t>(f.order());
    std::set<std::uint32_t> squares;
    for (std::uint32_t x = 1; x < q; ++x) squares.insert(f.mul_reference(Elt{x}, Elt{x}).code);
    for (std::uint32_t a = 1; a < q; ++a) {
      REQUIRE(f.quadratic_character(Elt{a}) == (squares.count(a) ? 1 : -1));
      for (std::uint32_t b = 1; b < q; ++b) {
        REQUIRE(f.quadratic_character(f.mul(Elt{a}, Elt{b})) ==
                f.quadratic_character(Elt{a}) * f.quadratic_character(Elt{b}));
      }
    }
  }
}

TEST_CASE("absolute trace") {
  CHECK(Field::build(2, 1).absolute_trace(Elt{1}) == 1);
  const Field f16 = Field::with_modulus(2, {1, 1, 1, 1, 1});
  CHECK(f16.absolute_trace(Elt{2}) == 1);  // the root t of t^4+t^3+t^2+t+1
  CHECK(f16.absolute_trace(Elt{1}) == 0);
  CHECK_THROWS_AS(Field::build(3, 1).absolute_trace(Elt{1}), FieldError);

  for (unsigned n = 1; n <= 5; ++n) {
    const Field f = Field::build(2, n);
    const std::uint32_t q = static_cast<std::uint32_t>(f.order());
    int ones = 0;
    for (std::uint32_t a = 0; a < q; ++a) {
      const int tr = f.absolute_trace(Elt{a});
      ones += tr;
      REQUIRE(f.absolute_trace(f.mul(Elt{a}, Elt{a})) == tr);
      for (std::uint32_t b = 0; b < q; ++b) {
        REQUIRE(f.absolute_trace(f.add(Elt{a}, Elt{b})) == (tr ^ f.absolute_trace(Elt{b})));
      }
    }
    CHECK(ones == static_cast<int>(q / 2));
  }
}

TEST_CASE("multiplicative order") {
  const Field f11 = Field::build(11, 1);
  CHECK(f11.multiplicative_order(Elt{4}) == 5);
  CHECK(f11.multiplicative_order(Elt{2}) == 10);
  CHECK(f11.multiplicative_order(Elt{1}) == 1);
  CHECK_THROWS_AS(f11.multiplicative_order(Elt{0}), FieldError);

  for (const Field& f : small_fields(64)) {
    CAPTURE(f.order());
    for (std::uint32_t a = 1; a < f.order(); ++a) {
      // Brute force: first power that returns to 1.
      std::uint64_t brute = 1;
      for (Elt x{a}; x != f.one(); x = f.mul_reference(x, Elt{a})) ++brute;
      const std::uint64_t d = f.multiplicative_order(Elt{a});
      REQUIRE(d == brute);
      REQUIRE((f.order() - 1) % d == 0);
      for (const auto& s : factorize(d)) {
        REQUIRE(f.pow(Elt{a}, static_cast<std::int64_t>(d / s.prime)) != f.one());
      }
    }
  }
}

TEST_CASE("defining constants") {
  CHECK(Field::build(11, 1).find_nonsquare() == Elt{2});
  CHECK(Field::build(2, 1).find_trace_one() == Elt{1});
  CHECK(Field::build(7, 1).find_nonsquare() == Elt{3});
  // F_9 = F_3[t]/(t^2+1): squares are {1, 2, 3, 6}, so 4 = t+1 is the first non-square.
  CHECK(Field::build(3, 2).find_nonsquare() == Elt{4});
  CHECK_THROWS_AS(Field::build(2, 2).find_nonsquare(), FieldError);
  CHECK_THROWS_AS(Field::build(3, 1).find_trace_one(), FieldError);
}
