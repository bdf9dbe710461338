#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

// Fixed-width kernels for matrices over Z[s]/(s^N).
//
// Layout is planar: coefficient d of entry (i, j) lives at
// data[(d * n + i) * stride + j], with stride = padded_stride(n) and the
// padding columns held at zero.
//
// trunc_matmul requires |a|, |b| < 2^31 entrywise and
// n * N * max|a| * max|b| < 2^62, so every partial sum is exact in int64.
// Callers check this with product_fits() before dispatching.

namespace burau::kernels {

enum class Isa { Scalar, Avx2 };

constexpr int kLane = 4;

inline int padded_stride(int n) { return (n + kLane - 1) / kLane * kLane; }

bool product_fits(std::int64_t max_a, std::int64_t max_b, int n, int precision);

void trunc_matmul_scalar(const std::int64_t* a, const std::int64_t* b, std::int64_t* c, int n, int precision,
                         int stride);
std::int64_t max_abs_scalar(const std::int64_t* x, std::size_t count);

#if defined(BURAU_HAVE_AVX2)
void trunc_matmul_avx2(const std::int64_t* a, const std::int64_t* b, std::int64_t* c, int n, int precision,
                       int stride);
std::int64_t max_abs_avx2(const std::int64_t* x, std::size_t count);
#endif

bool isa_available(Isa isa);
/// Best ISA supported by this CPU and build, unless overridden by BURAU_SIMD=scalar|avx2.
Isa detect_isa();
Isa active_isa();
/// Forces an ISA (tests); throws if unavailable.
void set_active_isa(Isa isa);
std::string isa_name(Isa isa);

void trunc_matmul(const std::int64_t* a, const std::int64_t* b, std::int64_t* c, int n, int precision, int stride);
std::int64_t max_abs(const std::int64_t* x, std::size_t count);

}  // namespace burau::kernels
