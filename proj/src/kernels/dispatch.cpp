#include "burau/kernels.hpp"

#include "burau/errors.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace burau::kernels {

namespace {

using MatmulFn = void (*)(const std::int64_t*, const std::int64_t*, std::int64_t*, int, int, int);
using MaxAbsFn = std::int64_t (*)(const std::int64_t*, std::size_t);

struct Table {
    Isa isa;
    MatmulFn matmul;
    MaxAbsFn max_abs;
};

Table table_for(Isa isa)
{
#if defined(BURAU_HAVE_AVX2)
    if (isa == Isa::Avx2)
        return {Isa::Avx2, &trunc_matmul_avx2, &max_abs_avx2};
#endif
    return {Isa::Scalar, &trunc_matmul_scalar, &max_abs_scalar};
}

std::atomic<int>& active_slot()
{
    static std::atomic<int> slot{static_cast<int>(detect_isa())};
    return slot;
}

}  // namespace

bool isa_available(Isa isa)
{
    switch (isa) {
    case Isa::Scalar:
        return true;
    case Isa::Avx2:
#if defined(BURAU_HAVE_AVX2)
        return __builtin_cpu_supports("avx2");
#else
        return false;
#endif
    }
    return false;
}

Isa detect_isa()
{
    if (const char* env = std::getenv("BURAU_SIMD")) {
        if (std::strcmp(env, "scalar") == 0)
            return Isa::Scalar;
        if (std::strcmp(env, "avx2") == 0 && isa_available(Isa::Avx2))
            return Isa::Avx2;
    }
    return isa_available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
}

Isa active_isa() { return static_cast<Isa>(active_slot().load(std::memory_order_relaxed)); }

void set_active_isa(Isa isa)
{
    if (!isa_available(isa))
        throw Error("ISA " + isa_name(isa) + " is not available on this machine");
    active_slot().store(static_cast<int>(isa), std::memory_order_relaxed);
}

std::string isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

void trunc_matmul(const std::int64_t* a, const std::int64_t* b, std::int64_t* c, int n, int precision, int stride)
{
    table_for(active_isa()).matmul(a, b, c, n, precision, stride);
}

std::int64_t max_abs(const std::int64_t* x, std::size_t count) { return table_for(active_isa()).max_abs(x, count); }

}  // namespace burau::kernels
