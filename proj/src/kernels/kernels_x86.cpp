#include "shiftlab/kernels.hpp"

#include <cstdlib>
#include <cstring>

#if defined(__x86_64__) || defined(_M_X64)
#define SHIFTLAB_X86 1
#include <immintrin.h>
#else
#define SHIFTLAB_X86 0
#endif

namespace shiftlab::kernels {

#if SHIFTLAB_X86

namespace {

__attribute__((target("avx2"))) void gfp_submul_avx2(std::uint64_t* dst, const std::uint64_t* src,
                                                      std::size_t len, std::uint64_t c,
                                                      std::uint64_t companion, std::uint64_t p) {
  const __m256i vc = _mm256_set1_epi64x(static_cast<long long>(c));
  const __m256i vcs = _mm256_set1_epi64x(static_cast<long long>(companion));
  const __m256i vp = _mm256_set1_epi64x(static_cast<long long>(p));
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    // Shoup: q = floor(companion * x / 2^32), c*x - q*p lies in [0, 2p).
    const __m256i prod = _mm256_mul_epu32(x, vc);
    const __m256i q = _mm256_srli_epi64(_mm256_mul_epu32(x, vcs), 32);
    __m256i r = _mm256_sub_epi64(prod, _mm256_mul_epu32(q, vp));
    const __m256i below = _mm256_cmpgt_epi64(vp, r);
    r = _mm256_sub_epi64(r, _mm256_andnot_si256(below, vp));
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    d = _mm256_sub_epi64(d, r);
    const __m256i negative = _mm256_cmpgt_epi64(zero, d);
    d = _mm256_add_epi64(d, _mm256_and_si256(negative, vp));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), d);
  }
  for (; i < len; ++i) {
    const std::uint64_t prod = (c * src[i]) % p;
    dst[i] = dst[i] >= prod ? dst[i] - prod : dst[i] + p - prod;
  }
}

__attribute__((target("avx2"))) void xor_words_avx2(std::uint64_t* dst, const std::uint64_t* src,
                                                     std::size_t len) {
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(a, b));
  }
  for (; i < len; ++i) dst[i] ^= src[i];
}

struct U128 {
  std::uint64_t lo;
  std::uint64_t hi;
};

__attribute__((target("pclmul,sse4.1"))) inline U128 clmul(std::uint64_t a, std::uint64_t b) {
  const __m128i prod = _mm_clmulepi64_si128(_mm_cvtsi64_si128(static_cast<long long>(a)),
                                            _mm_cvtsi64_si128(static_cast<long long>(b)), 0x00);
  return {static_cast<std::uint64_t>(_mm_cvtsi128_si64(prod)),
          static_cast<std::uint64_t>(_mm_extract_epi64(prod, 1))};
}

inline std::uint64_t shift_right(U128 v, unsigned e) {
  // 1 <= e <= 63
  return (v.lo >> e) | (v.hi << (64U - e));
}

// Barrett reduction in GF(2)[t]: for deg a < 2e the quotient
// floor(a / f) equals floor(floor(a / t^e) * mu / t^e) exactly.
__attribute__((target("pclmul,sse4.1"))) std::uint64_t gf2e_mul_pclmul(std::uint64_t a,
                                                                        std::uint64_t b,
                                                                        const Gf2eModulus& m) {
  const unsigned e = m.degree;
  const U128 prod = clmul(a, b);
  const std::uint64_t quot = shift_right(clmul(shift_right(prod, e), m.barrett), e);
  const U128 qf = clmul(quot, m.poly);
  const std::uint64_t mask = (std::uint64_t{1} << e) - 1;
  return (prod.lo ^ qf.lo) & mask;
}

__attribute__((target("pclmul,sse4.1"))) void gf2e_addmul_pclmul(std::uint64_t* dst,
                                                                  const std::uint64_t* src,
                                                                  std::size_t len, std::uint64_t c,
                                                                  const Gf2eModulus& m) {
  for (std::size_t i = 0; i < len; ++i) dst[i] ^= gf2e_mul_pclmul(c, src[i], m);
}

bool cpu_has_simd() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("pclmul") &&
         __builtin_cpu_supports("sse4.1");
}

}  // namespace

const KernelTable* simd_kernels() {
  static const KernelTable table{"avx2+pclmul", gfp_submul_avx2, xor_words_avx2, gf2e_mul_pclmul,
                                 gf2e_addmul_pclmul};
  static const bool supported = cpu_has_simd();
  return supported ? &table : nullptr;
}

#else

const KernelTable* simd_kernels() { return nullptr; }

#endif

const KernelTable& active() {
  static const KernelTable& chosen = [&]() -> const KernelTable& {
    const char* env = std::getenv("SHIFTLAB_SIMD");
    const bool forced_scalar = env != nullptr && std::strcmp(env, "scalar") == 0;
    const KernelTable* simd = simd_kernels();
    return (simd != nullptr && !forced_scalar) ? *simd : scalar_kernels();
  }();
  return chosen;
}

}  // namespace shiftlab::kernels
