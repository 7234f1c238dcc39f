#include "ghc/kern/kernels.hpp"

#if defined(__ARM_NEON) && defined(__aarch64__)
#define GHC_HAVE_NEON 1
#include <arm_neon.h>
#endif

namespace ghc::kern {

#ifdef GHC_HAVE_NEON
namespace {

inline uint8x16_t reduce_once(uint8x16_t t, uint8x16_t vp) {
    const uint8x16_t ge = vcgeq_u8(t, vp);
    return vsubq_u8(t, vandq_u8(ge, vp));
}

void sub_mod_neon(uint8_t* dst, const uint8_t* a, const uint8_t* b, size_t n_elems, uint8_t p) {
    const size_t nb = n_elems * kDigitStride;
    const uint8x16_t vp = vdupq_n_u8(p);
    size_t i = 0;
    for (; i + 16 <= nb; i += 16) {
        uint8x16_t t = vsubq_u8(vaddq_u8(vld1q_u8(a + i), vp), vld1q_u8(b + i));
        vst1q_u8(dst + i, reduce_once(t, vp));
    }
    for (; i < nb; ++i) {
        int t = int(a[i]) - int(b[i]);
        dst[i] = uint8_t(t < 0 ? t + p : t);
    }
}

void add_mod_neon(uint8_t* dst, const uint8_t* a, const uint8_t* b, size_t n_elems, uint8_t p) {
    const size_t nb = n_elems * kDigitStride;
    const uint8x16_t vp = vdupq_n_u8(p);
    size_t i = 0;
    for (; i + 16 <= nb; i += 16) {
        uint8x16_t t = vaddq_u8(vld1q_u8(a + i), vld1q_u8(b + i));
        vst1q_u8(dst + i, reduce_once(t, vp));
    }
    for (; i < nb; ++i) {
        int t = int(a[i]) + int(b[i]);
        dst[i] = uint8_t(t >= p ? t - p : t);
    }
}

void add_const_mod_neon(uint8_t* dst, const uint8_t* a, const uint8_t c4[4], size_t n_elems,
                        uint8_t p) {
    uint32_t c32;
    __builtin_memcpy(&c32, c4, 4);
    const uint8x16_t vc = vreinterpretq_u8_u32(vdupq_n_u32(c32));
    const uint8x16_t vp = vdupq_n_u8(p);
    const size_t nb = n_elems * kDigitStride;
    size_t i = 0;
    for (; i + 16 <= nb; i += 16) {
        uint8x16_t t = vaddq_u8(vld1q_u8(a + i), vc);
        vst1q_u8(dst + i, reduce_once(t, vp));
    }
    for (; i < nb; ++i) {
        int t = int(a[i]) + int(c4[i % 4]);
        dst[i] = uint8_t(t >= p ? t - p : t);
    }
}

void pack_keys_neon(uint16_t* dst, const uint8_t* digits, size_t n_elems) {
    // Key packing is not a bottleneck on this path; reuse the reference version.
    scalar_ops().pack_keys(dst, digits, n_elems);
}

}  // namespace

const Ops* neon_ops() {
    static const Ops ops{"neon", &sub_mod_neon, &add_mod_neon, &add_const_mod_neon,
                         &pack_keys_neon};
    return &ops;
}
#else
const Ops* neon_ops() { return nullptr; }
#endif

}  // namespace ghc::kern
