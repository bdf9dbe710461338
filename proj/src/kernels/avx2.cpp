#include "burau/kernels.hpp"

#include <immintrin.h>

namespace burau::kernels {

// _mm256_mul_epi32 multiplies the sign-extended low 32 bits of each 64-bit lane,
// which is exact under the |x| < 2^31 precondition.
void trunc_matmul_avx2(const std::int64_t* a, const std::int64_t* b, std::int64_t* c, int n, int precision,
                       int stride)
{
    const std::size_t plane = static_cast<std::size_t>(n) * stride;
    for (int d = 0; d < precision; ++d) {
        std::int64_t* cp = c + plane * d;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < stride; j += kLane) {
                __m256i acc = _mm256_setzero_si256();
                for (int x = 0; x <= d; ++x) {
                    const std::int64_t* arow = a + plane * x + static_cast<std::size_t>(i) * stride;
                    const std::int64_t* bp = b + plane * (d - x) + j;
                    for (int k = 0; k < n; ++k) {
                        if (arow[k] == 0)
                            continue;
                        const __m256i av = _mm256_set1_epi64x(arow[k]);
                        const __m256i bv =
                            _mm256_loadu_si256(reinterpret_cast<const __m256i*>(bp + static_cast<std::size_t>(k) * stride));
                        acc = _mm256_add_epi64(acc, _mm256_mul_epi32(av, bv));
                    }
                }
                _mm256_storeu_si256(reinterpret_cast<__m256i*>(cp + static_cast<std::size_t>(i) * stride + j), acc);
            }
    }
}

std::int64_t max_abs_avx2(const std::int64_t* x, std::size_t count)
{
    __m256i m = _mm256_setzero_si256();
    std::size_t k = 0;
    const __m256i zero = _mm256_setzero_si256();
    for (; k + kLane <= count; k += kLane) {
        const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + k));
        const __m256i neg = _mm256_cmpgt_epi64(zero, v);
        const __m256i absv = _mm256_sub_epi64(_mm256_xor_si256(v, neg), neg);
        const __m256i gt = _mm256_cmpgt_epi64(absv, m);
        m = _mm256_blendv_epi8(m, absv, gt);
    }
    alignas(32) std::int64_t lanes[kLane];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), m);
    std::int64_t best = 0;
    for (const auto v : lanes)
        if (v > best)
            best = v;
    const std::int64_t tail = max_abs_scalar(x + k, count - k);
    return tail > best ? tail : best;
}

}  // namespace burau::kernels
