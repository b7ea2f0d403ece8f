#pragma once

// Batch evaluation of f(X) = X (X^{q-1} - c)^{q+1} over F_{p^2}, p an odd
// prime, on structure-of-arrays coordinates. This is the hot loop of the
// brute-force oracle (q^2 evaluations per graph).
//
// Every variant performs the same square-and-multiply schedule as
// eval_f_direct; none of them uses the g(x, y) shortcut. The scalar variant
// is the reference, the AVX2 variant must agree with it bit for bit.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "ffdyn/quadratic_extension.hpp"

namespace ffdyn::simd {

enum class Isa { scalar, avx2 };

std::string_view to_string(Isa isa);

/// Compiled in and supported by the running CPU.
bool isa_available(Isa isa);

/// Widest available variant, unless FFDYN_FORCE_SCALAR is set in the environment.
Isa best_isa();

std::vector<Isa> available_isas();

/// Prime base field of odd characteristic below 2^26, so that a product of
/// two residues stays exact in a double.
bool kernel_applicable(const QuadCtx& ctx);

struct MapParams {
  std::uint32_t p;
  std::uint32_t a;  // beta^2 = a
  std::uint32_t c;
};

/// Raw kernels. Inputs are residues in [0, p); all spans have equal length.
void map_scalar(const MapParams& params, std::span<const std::uint32_t> xs,
                std::span<const std::uint32_t> ys, std::span<std::uint32_t> out_x,
                std::span<std::uint32_t> out_y);
#if defined(FFDYN_WITH_AVX2)
void map_avx2(const MapParams& params, std::span<const std::uint32_t> xs,
              std::span<const std::uint32_t> ys, std::span<std::uint32_t> out_x,
              std::span<std::uint32_t> out_y);
#endif

/// f over a batch of points. Uses the requested kernel when it applies to
/// `ctx` and falls back to eval_f_direct otherwise (extension base fields,
/// characteristic 2). Throws std::invalid_argument on unavailable ISA or
/// mismatched span sizes.
void evaluate_map(const QuadCtx& ctx, Elt c, std::span<const std::uint32_t> xs,
                  std::span<const std::uint32_t> ys, std::span<std::uint32_t> out_x,
                  std::span<std::uint32_t> out_y, Isa isa);

}  // namespace ffdyn::simd
