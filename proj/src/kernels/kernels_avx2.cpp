// Compiled with -mavx2; only reached after cpu_supports(Isa::kAvx2).

#include <immintrin.h>

#include "swan/kernels.hpp"

namespace swan::kernels {

void mul_acc_avx2(std::uint64_t* acc, std::uint64_t scale, const std::uint32_t* src,
                  std::size_t n) {
  // _mm256_mul_epu32 multiplies the low 32 bits of each 64-bit lane.
  const __m256i s = _mm256_set1_epi64x(static_cast<long long>(scale));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m128i raw = _mm_loadu_si128(reinterpret_cast<const __m128i*>(src + i));
    const __m256i wide = _mm256_cvtepu32_epi64(raw);
    const __m256i prod = _mm256_mul_epu32(wide, s);
    __m256i* dst = reinterpret_cast<__m256i*>(acc + i);
    _mm256_storeu_si256(dst, _mm256_add_epi64(_mm256_loadu_si256(dst), prod));
  }
  for (; i < n; ++i) acc[i] += scale * src[i];
}

}  // namespace swan::kernels
