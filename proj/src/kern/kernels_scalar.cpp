#include "ghc/kern/kernels.hpp"

namespace ghc::kern {
namespace {

void sub_mod_scalar(uint8_t* dst, const uint8_t* a, const uint8_t* b, size_t n_elems, uint8_t p) {
    const size_t nb = n_elems * kDigitStride;
    for (size_t i = 0; i < nb; ++i) {
        int t = int(a[i]) - int(b[i]);
        dst[i] = uint8_t(t < 0 ? t + p : t);
    }
}

void add_mod_scalar(uint8_t* dst, const uint8_t* a, const uint8_t* b, size_t n_elems, uint8_t p) {
    const size_t nb = n_elems * kDigitStride;
    for (size_t i = 0; i < nb; ++i) {
        int t = int(a[i]) + int(b[i]);
        dst[i] = uint8_t(t >= p ? t - p : t);
    }
}

void add_const_mod_scalar(uint8_t* dst, const uint8_t* a, const uint8_t c4[4], size_t n_elems, uint8_t p) {
    for (size_t e = 0; e < n_elems; ++e) {
        const size_t base = e * kDigitStride;
        for (size_t d = 0; d < kDigitStride; ++d) {
            int t = int(a[base + d]) + int(c4[d]);
            dst[base + d] = uint8_t(t >= p ? t - p : t);
        }
    }
}

void pack_keys_scalar(uint16_t* dst, const uint8_t* digits, size_t n_elems) {
    for (size_t e = 0; e < n_elems; ++e) {
        const uint8_t* d = digits + e * kDigitStride;
        dst[e] = uint16_t(d[0] | (d[1] << 3) | (d[2] << 6) | (d[3] << 9));
    }
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops ops{"scalar", &sub_mod_scalar, &add_mod_scalar, &add_const_mod_scalar,
                         &pack_keys_scalar};
    return ops;
}

}  // namespace ghc::kern
