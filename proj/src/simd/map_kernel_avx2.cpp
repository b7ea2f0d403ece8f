// Built with -mavx2; only reached through dispatch after a CPU check.

#include <immintrin.h>

#include "ffdyn/simd/map_kernel.hpp"

namespace ffdyn::simd {

namespace {

// Residues live in double lanes as exact integers. With p < 2^26 every
// product and every sum formed below is below 2^53, so the only inexact step
// is the quotient estimate, which is off by at most one and corrected.
struct ModP {
  __m256d p;
  __m256d inv_p;
  __m256d a;

  __m256d reduce(__m256d v) const {
    const __m256d quo = _mm256_floor_pd(_mm256_mul_pd(v, inv_p));
    __m256d r = _mm256_sub_pd(v, _mm256_mul_pd(quo, p));
    r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, _mm256_setzero_pd(), _CMP_LT_OQ), p));
    r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, p, _CMP_GE_OQ), p));
    return r;
  }
};

struct Pair {
  __m256d x;
  __m256d y;
};

inline Pair mul(const ModP& m, Pair s, Pair t) {
  const __m256d yy = m.reduce(_mm256_mul_pd(s.y, t.y));
  const __m256d x = m.reduce(_mm256_add_pd(_mm256_mul_pd(s.x, t.x), _mm256_mul_pd(m.a, yy)));
  const __m256d y = m.reduce(_mm256_add_pd(_mm256_mul_pd(s.x, t.y), _mm256_mul_pd(s.y, t.x)));
  return {x, y};
}

inline Pair pow(const ModP& m, Pair s, std::uint64_t e) {
  Pair r{_mm256_set1_pd(1.0), _mm256_setzero_pd()};
  while (e > 0) {
    if (e & 1) r = mul(m, r, s);
    s = mul(m, s, s);
    e >>= 1;
  }
  return r;
}

inline __m256d load4(const std::uint32_t* src) {
  return _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(src)));
}

inline void store4(std::uint32_t* dst, __m256d v) {
  _mm_storeu_si128(reinterpret_cast<__m128i*>(dst), _mm256_cvttpd_epi32(v));
}

}  // namespace

void map_avx2(const MapParams& params, std::span<const std::uint32_t> xs,
              std::span<const std::uint32_t> ys, std::span<std::uint32_t> out_x,
              std::span<std::uint32_t> out_y) {
  const double p = params.p;
  const ModP m{_mm256_set1_pd(p), _mm256_set1_pd(1.0 / p), _mm256_set1_pd(params.a)};
  const __m256d minus_c = _mm256_set1_pd(static_cast<double>((params.p - params.c) % params.p));
  const std::uint64_t q = params.p;

  const std::size_t n = xs.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const Pair s{load4(xs.data() + i), load4(ys.data() + i)};
    Pair t = pow(m, s, q - 1);
    t.x = m.reduce(_mm256_add_pd(t.x, minus_c));
    const Pair r = mul(m, s, pow(m, t, q + 1));
    store4(out_x.data() + i, r.x);
    store4(out_y.data() + i, r.y);
  }
  if (i < n) {
    map_scalar(params, xs.subspan(i), ys.subspan(i), out_x.subspan(i), out_y.subspan(i));
  }
}

}  // namespace ffdyn::simd
