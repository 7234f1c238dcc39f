#include "ghc/kern/kernels.hpp"

#if defined(__AVX2__) && (defined(__x86_64__) || defined(_M_X64))
#define GHC_HAVE_AVX2 1
#include <immintrin.h>
#endif

namespace ghc::kern {

#ifdef GHC_HAVE_AVX2
namespace {

// Digits stay below p <= 7, so every intermediate fits comfortably in a signed
// byte lane and the conditional reduction is a compare-and-masked-subtract.

inline __m256i reduce_once(__m256i t, __m256i vp, __m256i vpm1) {
    const __m256i ge = _mm256_cmpgt_epi8(t, vpm1);
    return _mm256_sub_epi8(t, _mm256_and_si256(ge, vp));
}

void sub_mod_avx2(uint8_t* dst, const uint8_t* a, const uint8_t* b, size_t n_elems, uint8_t p) {
    const size_t nb = n_elems * kDigitStride;
    const __m256i vp = _mm256_set1_epi8(char(p));
    const __m256i vpm1 = _mm256_set1_epi8(char(p - 1));
    size_t i = 0;
    for (; i + 32 <= nb; i += 32) {
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        __m256i t = _mm256_sub_epi8(_mm256_add_epi8(va, vp), vb);
        t = reduce_once(t, vp, vpm1);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), t);
    }
    for (; i < nb; ++i) {
        int t = int(a[i]) - int(b[i]);
        dst[i] = uint8_t(t < 0 ? t + p : t);
    }
}

void add_mod_avx2(uint8_t* dst, const uint8_t* a, const uint8_t* b, size_t n_elems, uint8_t p) {
    const size_t nb = n_elems * kDigitStride;
    const __m256i vp = _mm256_set1_epi8(char(p));
    const __m256i vpm1 = _mm256_set1_epi8(char(p - 1));
    size_t i = 0;
    for (; i + 32 <= nb; i += 32) {
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        __m256i t = _mm256_add_epi8(va, vb);
        t = reduce_once(t, vp, vpm1);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), t);
    }
    for (; i < nb; ++i) {
        int t = int(a[i]) + int(b[i]);
        dst[i] = uint8_t(t >= p ? t - p : t);
    }
}

void add_const_mod_avx2(uint8_t* dst, const uint8_t* a, const uint8_t c4[4], size_t n_elems,
                        uint8_t p) {
    uint32_t c32;
    __builtin_memcpy(&c32, c4, 4);
    const size_t nb = n_elems * kDigitStride;
    const __m256i vc = _mm256_set1_epi32(int(c32));
    const __m256i vp = _mm256_set1_epi8(char(p));
    const __m256i vpm1 = _mm256_set1_epi8(char(p - 1));
    size_t i = 0;
    for (; i + 32 <= nb; i += 32) {
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i t = _mm256_add_epi8(va, vc);
        t = reduce_once(t, vp, vpm1);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), t);
    }
    for (; i < nb; ++i) {
        int t = int(a[i]) + int(c4[i % 4]);
        dst[i] = uint8_t(t >= p ? t - p : t);
    }
}

void pack_keys_avx2(uint16_t* dst, const uint8_t* digits, size_t n_elems) {
    // (d0 + 8*d1) and (d2 + 8*d3) via maddubs, then + 64*high via madd.
    const __m256i w8 = _mm256_set1_epi16(0x0801);
    const __m256i w64 = _mm256_set1_epi32(0x00400001);
    size_t e = 0;
    for (; e + 8 <= n_elems; e += 8) {
        const __m256i v =
            _mm256_loadu_si256(reinterpret_cast<const __m256i*>(digits + e * kDigitStride));
        const __m256i pairs = _mm256_maddubs_epi16(v, w8);
        const __m256i keys32 = _mm256_madd_epi16(pairs, w64);
        const __m256i keys16 = _mm256_packus_epi32(keys32, keys32);
        _mm_storel_epi64(reinterpret_cast<__m128i*>(dst + e), _mm256_castsi256_si128(keys16));
        _mm_storel_epi64(reinterpret_cast<__m128i*>(dst + e + 4),
                         _mm256_extracti128_si256(keys16, 1));
    }
    for (; e < n_elems; ++e) {
        const uint8_t* d = digits + e * kDigitStride;
        dst[e] = uint16_t(d[0] | (d[1] << 3) | (d[2] << 6) | (d[3] << 9));
    }
}

}  // namespace

const Ops* avx2_ops() {
    if (!__builtin_cpu_supports("avx2")) return nullptr;
    static const Ops ops{"avx2", &sub_mod_avx2, &add_mod_avx2, &add_const_mod_avx2,
                         &pack_keys_avx2};
    return &ops;
}
#else
const Ops* avx2_ops() { return nullptr; }
#endif

}  // namespace ghc::kern
