#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ghc::kern {

// Hot inner loops operate on digit-plane buffers: each field element occupies
// kDigitStride bytes, one base-p digit per byte, zero-padded above degree e.
// The scalar implementation is the reference; the AVX2/NEON variants are
// selected at runtime and must match it byte for byte (see test_kernels).
struct Ops {
    const char* name;
    // dst[i] = (a[i] - b[i]) mod p, bytewise. Buffers hold n_elems * 4 bytes.
    void (*sub_mod)(uint8_t* dst, const uint8_t* a, const uint8_t* b, size_t n_elems, uint8_t p);
    // dst[i] = (a[i] + b[i]) mod p, bytewise.
    void (*add_mod)(uint8_t* dst, const uint8_t* a, const uint8_t* b, size_t n_elems, uint8_t p);
    // dst = a + c, where c is one element (4 digit bytes) broadcast across all positions.
    void (*add_const_mod)(uint8_t* dst, const uint8_t* a, const uint8_t c4[4], size_t n_elems, uint8_t p);
    // dst[i] = d0 | d1<<3 | d2<<6 | d3<<9; injective per element for p <= 7.
    void (*pack_keys)(uint16_t* dst, const uint8_t* digits, size_t n_elems);
};

constexpr unsigned kDigitStride = 4;
constexpr unsigned kKeyBitsPerDigit = 3;  // digits must satisfy p <= 7
constexpr unsigned kKeySpace = 1u << (kKeyBitsPerDigit * kDigitStride);

const Ops& scalar_ops();
const Ops* avx2_ops();  // nullptr when not compiled in or not supported by the CPU
const Ops* neon_ops();

// Runtime selection: GHC_KERNEL=scalar|avx2|neon overrides, otherwise the widest
// available variant wins.
const Ops& active_ops();

// Every variant usable on this machine (reference first). For equivalence tests.
std::vector<const Ops*> available_ops();

}  // namespace ghc::kern
