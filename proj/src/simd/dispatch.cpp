#include <cstdlib>
#include <stdexcept>
#include <string>

#include "ffdyn/simd/map_kernel.hpp"

namespace ffdyn::simd {

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(FFDYN_WITH_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa best_isa() {
  if (std::getenv("FFDYN_FORCE_SCALAR") != nullptr) return Isa::scalar;
  return isa_available(Isa::avx2) ? Isa::avx2 : Isa::scalar;
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out{Isa::scalar};
  if (isa_available(Isa::avx2)) out.push_back(Isa::avx2);
  return out;
}

bool kernel_applicable(const QuadCtx& ctx) {
  const Field& f = ctx.base();
  return f.degree() == 1 && f.odd() && f.characteristic() < (1u << 26);
}

void evaluate_map(const QuadCtx& ctx, Elt c, std::span<const std::uint32_t> xs,
                  std::span<const std::uint32_t> ys, std::span<std::uint32_t> out_x,
                  std::span<std::uint32_t> out_y, Isa isa) {
  if (ys.size() != xs.size() || out_x.size() != xs.size() || out_y.size() != xs.size()) {
    throw std::invalid_argument("evaluate_map: span sizes differ");
  }
  if (!isa_available(isa)) {
    throw std::invalid_argument("evaluate_map: ISA " + std::string(to_string(isa)) +
                                " is not available");
  }
  const Field& f = ctx.base();
  if (c.is_zero() || !f.contains(c)) throw FieldError("c must be a nonzero element of F_q");

  if (!kernel_applicable(ctx)) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const QuadElt r = eval_f_direct(ctx, {f.element(xs[i]), f.element(ys[i])}, c);
      out_x[i] = r.x.code;
      out_y[i] = r.y.code;
    }
    return;
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] >= f.order() || ys[i] >= f.order()) throw FieldError("coordinate out of range");
  }
  const MapParams params{f.characteristic(), ctx.a().code, c.code};
  switch (isa) {
    case Isa::scalar:
      map_scalar(params, xs, ys, out_x, out_y);
      return;
    case Isa::avx2:
#if defined(FFDYN_WITH_AVX2)
      map_avx2(params, xs, ys, out_x, out_y);
      return;
#else
      break;
#endif
  }
  throw std::logic_error("evaluate_map: no kernel for ISA");
}

}  // namespace ffdyn::simd
