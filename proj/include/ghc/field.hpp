#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ghc/error.hpp"

namespace ghc {

using felt_t = std::uint16_t;

bool is_prime(unsigned n);

/// GF(p^e) in the power basis {1, w, ..., w^{e-1}} of a primitive element w.
///
/// Elements are canonical integer codes: code = sum_i coords[i] * p^i
/// (little-endian base p), so 0 is the additive identity, 1 the multiplicative
/// identity and, for e > 1, code p is w itself. The defining relation is
/// w^e = poly[0] + poly[1] w + ... + poly[e-1] w^{e-1}; poly must be primitive
/// (w has multiplicative order q - 1). For e = 1 the poly is empty and w is the
/// smallest primitive root mod p (or an explicit one-coefficient poly [w]).
class Field {
public:
    static constexpr unsigned kMaxQ = 625;  // 5^4; larger fields need allow_large

    unsigned p() const { return p_; }
    unsigned e() const { return e_; }
    unsigned q() const { return q_; }
    const std::vector<uint8_t>& poly() const { return poly_; }
    std::string poly_string() const;  // "c_0,c_1,..." as written in .ghm files

    felt_t omega() const { return omega_; }
    /// Row/column index order of multiplicative tables: 0, 1, w, w^2, ...
    felt_t idx(unsigned k) const { return k == 0 ? 0 : exp(k - 1); }
    unsigned idx_of(felt_t a) const { return a == 0 ? 0 : 1 + log(a); }

    felt_t add(felt_t a, felt_t b) const {
        return add_tab_.empty() ? add_slow(a, b) : add_tab_[size_t(a) * q_ + b];
    }
    felt_t neg(felt_t a) const { return neg_tab_[a]; }
    felt_t sub(felt_t a, felt_t b) const { return add(a, neg(b)); }
    felt_t mul(felt_t a, felt_t b) const {
        if (a == 0 || b == 0) return 0;
        return exp_tab_[log_tab_[a] + log_tab_[b]];
    }
    felt_t inv(felt_t a) const {
        if (a == 0) fail(Errc::DivisionByZero, "inverse of zero");
        return exp_tab_[q_ - 1 - log_tab_[a]];
    }
    felt_t div(felt_t a, felt_t b) const {
        if (b == 0) fail(Errc::DivisionByZero, "division by zero");
        return mul(a, inv(b));
    }
    felt_t pow(felt_t a, long long k) const;
    felt_t frobenius(felt_t a) const { return pow(a, p_); }

    unsigned log(felt_t a) const {
        if (a == 0) fail(Errc::DivisionByZero, "log of zero");
        return log_tab_[a];
    }
    felt_t exp(long long k) const {
        long long m = k % (q_ - 1);
        if (m < 0) m += q_ - 1;
        return exp_tab_[size_t(m)];
    }
    unsigned mul_order(felt_t a) const;

    uint8_t digit(felt_t a, unsigned i) const { return digits_[size_t(a) * e_ + i]; }
    felt_t from_digits(std::span<const uint8_t> d) const;
    /// Writes digits padded to `stride` bytes (stride >= e).
    void write_digits(felt_t a, uint8_t* out, unsigned stride) const;

    bool in_prime_subfield(felt_t a) const { return a < p_; }

    std::string render(felt_t a) const;  // "0", "1", "w", "w^k"

    bool same(const Field& o) const { return p_ == o.p_ && e_ == o.e_ && poly_ == o.poly_; }

private:
    friend std::shared_ptr<const Field> make_field(unsigned, unsigned,
                                                   std::optional<std::vector<uint8_t>>, bool);
    Field() = default;

    felt_t add_slow(felt_t a, felt_t b) const;

    unsigned p_ = 0, e_ = 0, q_ = 0;
    std::vector<uint8_t> poly_;
    felt_t omega_ = 0;
    std::vector<felt_t> exp_tab_;   // size 2(q-1): w^0 .. w^{2q-4}
    std::vector<unsigned> log_tab_; // size q, log_tab_[0] unused
    std::vector<felt_t> neg_tab_;
    std::vector<felt_t> add_tab_;   // q*q, only for q <= 1024
    std::vector<uint8_t> digits_;   // q*e
};

using FieldPtr = std::shared_ptr<const Field>;

/// Builds GF(p^e). With no poly, picks the lexicographically smallest primitive
/// polynomial (ordered by the integer encoding of its coefficient vector) so
/// runs are reproducible. Throws NonPrime, NotPrimitive, FieldTooLarge.
FieldPtr make_field(unsigned p, unsigned e, std::optional<std::vector<uint8_t>> poly = {},
                    bool allow_large = false);

/// Element value bound to its field, for the convenience operator API.
struct Felt {
    felt_t code = 0;
    const Field* field = nullptr;
};

inline const Field& common_field(const Felt& a, const Felt& b) {
    if (a.field == nullptr || b.field == nullptr || !a.field->same(*b.field))
        fail(Errc::FieldMismatch, "operands from different fields");
    return *a.field;
}

inline Felt operator+(Felt a, Felt b) { return {common_field(a, b).add(a.code, b.code), a.field}; }
inline Felt operator-(Felt a, Felt b) { return {common_field(a, b).sub(a.code, b.code), a.field}; }
inline Felt operator*(Felt a, Felt b) { return {common_field(a, b).mul(a.code, b.code), a.field}; }
inline Felt operator/(Felt a, Felt b) { return {common_field(a, b).div(a.code, b.code), a.field}; }
inline Felt operator-(Felt a) { return {a.field->neg(a.code), a.field}; }
inline bool operator==(Felt a, Felt b) { return common_field(a, b).same(*b.field) && a.code == b.code; }

/// Coordinate projection GF(p^t) -> GF(p^e), e < t: keeps the first e power
/// basis coordinates. With the little-endian code encoding this is a plain
/// truncation, code mod p^e.
felt_t project_code(const Field& src, felt_t a, const Field& dst);
Felt project(Felt a, const Field& dst);

}  // namespace ghc
