#include "ffdyn/simd/map_kernel.hpp"

namespace ffdyn::simd {

namespace {

struct Pair {
  std::uint64_t x;
  std::uint64_t y;
};

struct ModP {
  std::uint64_t p;
  std::uint64_t a;

  Pair mul(Pair s, Pair t) const {
    const std::uint64_t yy = s.y * t.y % p;
    return {(s.x * t.x + a * yy) % p, (s.x * t.y + s.y * t.x) % p};
  }

  Pair pow(Pair s, std::uint64_t e) const {
    Pair r{1, 0};
    while (e > 0) {
      if (e & 1) r = mul(r, s);
      s = mul(s, s);
      e >>= 1;
    }
    return r;
  }
};

}  // namespace

void map_scalar(const MapParams& params, std::span<const std::uint32_t> xs,
                std::span<const std::uint32_t> ys, std::span<std::uint32_t> out_x,
                std::span<std::uint32_t> out_y) {
  const ModP m{params.p, params.a};
  const std::uint64_t q = params.p;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const Pair s{xs[i], ys[i]};
    Pair t = m.pow(s, q - 1);
    t.x = (t.x + m.p - params.c) % m.p;
    const Pair r = m.mul(s, m.pow(t, q + 1));
    out_x[i] = static_cast<std::uint32_t>(r.x);
    out_y[i] = static_cast<std::uint32_t>(r.y);
  }
}

}  // namespace ffdyn::simd
