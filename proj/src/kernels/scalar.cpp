#include "burau/kernels.hpp"

#include <cstdlib>

namespace burau::kernels {

bool product_fits(std::int64_t max_a, std::int64_t max_b, int n, int precision)
{
    constexpr std::int64_t lane_limit = std::int64_t{1} << 31;
    if (max_a >= lane_limit || max_b >= lane_limit)
        return false;
    const __int128 bound = static_cast<__int128>(max_a) * max_b * n * precision;
    return bound < (static_cast<__int128>(1) << 62);
}

void trunc_matmul_scalar(const std::int64_t* a, const std::int64_t* b, std::int64_t* c, int n, int precision,
                         int stride)
{
    const std::size_t plane = static_cast<std::size_t>(n) * stride;
    for (std::size_t k = 0; k < plane * precision; ++k)
        c[k] = 0;
    for (int d = 0; d < precision; ++d)
        for (int x = 0; x <= d; ++x) {
            const std::int64_t* ap = a + plane * x;
            const std::int64_t* bp = b + plane * (d - x);
            std::int64_t* cp = c + plane * d;
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < n; ++k) {
                    const std::int64_t aik = ap[i * stride + k];
                    if (aik == 0)
                        continue;
                    for (int j = 0; j < n; ++j)
                        cp[i * stride + j] += aik * bp[k * stride + j];
                }
        }
}

std::int64_t max_abs_scalar(const std::int64_t* x, std::size_t count)
{
    std::int64_t m = 0;
    for (std::size_t k = 0; k < count; ++k) {
        // INT64_MIN never appears: inputs come from kernels that respect the product bound.
        const std::int64_t v = x[k] < 0 ? -x[k] : x[k];
        if (v > m)
            m = v;
    }
    return m;
}

}  // namespace burau::kernels
