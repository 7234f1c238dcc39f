#include "ghc/field.hpp"

#include <algorithm>

namespace ghc {

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// Polynomial arithmetic over F_p on coordinate vectors of length e, reducing
// with w^e = poly. Used only to bootstrap the exp/log tables.
std::vector<uint8_t> poly_mul(const std::vector<uint8_t>& a, const std::vector<uint8_t>& b,
                              const std::vector<uint8_t>& poly, unsigned p) {
    const size_t e = poly.size();
    std::vector<unsigned> prod(2 * e - 1, 0);
    for (size_t i = 0; i < e; ++i)
        for (size_t j = 0; j < e; ++j) prod[i + j] += unsigned(a[i]) * b[j];
    for (size_t d = 2 * e - 2; d >= e && d < prod.size(); --d) {
        const unsigned c = prod[d] % p;
        prod[d] = 0;
        for (size_t i = 0; i < e; ++i) prod[d - e + i] += c * poly[i];
    }
    std::vector<uint8_t> out(e);
    for (size_t i = 0; i < e; ++i) out[i] = uint8_t(prod[i] % p);
    return out;
}

felt_t encode(const std::vector<uint8_t>& v, unsigned p) {
    felt_t code = 0;
    for (size_t i = v.size(); i-- > 0;) code = felt_t(code * p + v[i]);
    return code;
}

std::vector<uint8_t> decode(felt_t code, unsigned p, unsigned e) {
    std::vector<uint8_t> v(e);
    for (unsigned i = 0; i < e; ++i) {
        v[i] = uint8_t(code % p);
        code = felt_t(code / p);
    }
    return v;
}

// Walks the powers of w for the given poly. Returns the exp table (size q-1)
// when w is primitive, nullopt otherwise.
std::optional<std::vector<felt_t>> power_walk(const std::vector<uint8_t>& poly, unsigned p,
                                              unsigned q) {
    const unsigned e = unsigned(poly.size());
    std::vector<uint8_t> omega(e, 0);
    if (e > 1)
        omega[1] = 1;
    else
        omega[0] = poly[0];
    std::vector<felt_t> exp;
    exp.reserve(q - 1);
    std::vector<uint8_t> cur(e, 0);
    cur[0] = 1;  // w^0
    for (unsigned k = 0; k < q - 1; ++k) {
        const felt_t c = encode(cur, p);
        if (c == 1 && k > 0) return std::nullopt;  // order smaller than q-1
        if (c == 0) return std::nullopt;           // w not invertible
        exp.push_back(c);
        cur = poly_mul(cur, omega, poly, p);
    }
    if (encode(cur, p) != 1) return std::nullopt;  // w^{q-1} != 1
    return exp;
}

unsigned smallest_primitive_root(unsigned p) {
    if (p == 2) return 1;
    for (unsigned g = 2; g < p; ++g) {
        unsigned x = 1, order = 0;
        do {
            x = x * g % p;
            ++order;
        } while (x != 1);
        if (order == p - 1) return g;
    }
    fail(Errc::NonPrime, "no primitive root; modulus not prime?");
}

}  // namespace

FieldPtr make_field(unsigned p, unsigned e, std::optional<std::vector<uint8_t>> poly,
                    bool allow_large) {
    if (!is_prime(p)) fail(Errc::NonPrime, "p = " + std::to_string(p) + " is not prime");
    if (e < 1 || e > 12) fail(Errc::ParamRange, "extension degree out of range");
    unsigned long long qq = 1;
    for (unsigned i = 0; i < e; ++i) {
        qq *= p;
        if (qq > 65535) fail(Errc::FieldTooLarge, "q does not fit the element encoding");
    }
    const unsigned q = unsigned(qq);
    if (q > Field::kMaxQ && !allow_large)
        fail(Errc::FieldTooLarge,
             "q = " + std::to_string(q) + " exceeds the desk-scale bound " +
                 std::to_string(Field::kMaxQ) + " (pass allow_large to override)");

    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->e_ = e;
    f->q_ = q;

    std::vector<felt_t> exp;
    if (e == 1) {
        unsigned root;
        if (poly && !poly->empty()) {
            if (poly->size() != 1) fail(Errc::ParamRange, "poly for e = 1 takes one coefficient");
            root = (*poly)[0];
            if (root >= p) fail(Errc::ParamRange, "poly coefficient out of range");
            f->poly_ = *poly;
        } else {
            root = smallest_primitive_root(p);
        }
        std::vector<uint8_t> rel{uint8_t(root)};
        auto walk = power_walk(rel, p, q);
        if (!walk) fail(Errc::NotPrimitive, std::to_string(root) + " is not a primitive root");
        exp = std::move(*walk);
        f->omega_ = felt_t(root);
    } else {
        if (poly) {
            if (poly->size() != e) fail(Errc::ParamRange, "poly must have e coefficients");
            for (uint8_t c : *poly)
                if (c >= p) fail(Errc::ParamRange, "poly coefficient out of range");
            auto walk = power_walk(*poly, p, q);
            if (!walk)
                fail(Errc::NotPrimitive, "supplied polynomial is not primitive (w has order < q-1)");
            exp = std::move(*walk);
            f->poly_ = *poly;
        } else {
            bool found = false;
            for (felt_t cand = 0; cand < q && !found; ++cand) {
                auto rel = decode(cand, p, e);
                if (auto walk = power_walk(rel, p, q)) {
                    exp = std::move(*walk);
                    f->poly_ = rel;
                    found = true;
                }
            }
            if (!found) fail(Errc::NotPrimitive, "no primitive polynomial found");
        }
        f->omega_ = felt_t(p);
    }

    f->exp_tab_.resize(2 * (q - 1));
    for (unsigned i = 0; i < q - 1; ++i) {
        f->exp_tab_[i] = exp[i];
        f->exp_tab_[i + q - 1] = exp[i];
    }
    f->log_tab_.assign(q, 0);
    for (unsigned i = 0; i < q - 1; ++i) f->log_tab_[exp[i]] = i;

    f->digits_.resize(size_t(q) * e);
    for (unsigned c = 0; c < q; ++c) {
        auto d = decode(felt_t(c), p, e);
        std::copy(d.begin(), d.end(), f->digits_.begin() + size_t(c) * e);
    }

    f->neg_tab_.resize(q);
    for (unsigned c = 0; c < q; ++c) {
        felt_t out = 0, pw = 1;
        for (unsigned i = 0; i < e; ++i) {
            const unsigned d = f->digits_[size_t(c) * e + i];
            out = felt_t(out + ((p - d) % p) * pw);
            pw = felt_t(pw * p);
        }
        f->neg_tab_[c] = out;
    }

    if (q <= 1024) {
        f->add_tab_.resize(size_t(q) * q);
        for (unsigned a = 0; a < q; ++a)
            for (unsigned b = 0; b <= a; ++b) {
                felt_t out = 0, pw = 1;
                for (unsigned i = 0; i < e; ++i) {
                    const unsigned s =
                        unsigned(f->digits_[size_t(a) * e + i]) + f->digits_[size_t(b) * e + i];
                    out = felt_t(out + (s >= p ? s - p : s) * pw);
                    pw = felt_t(pw * p);
                }
                f->add_tab_[size_t(a) * q + b] = out;
                f->add_tab_[size_t(b) * q + a] = out;
            }
    }
    return f;
}

felt_t Field::add_slow(felt_t a, felt_t b) const {
    felt_t out = 0, pw = 1;
    for (unsigned i = 0; i < e_; ++i) {
        const unsigned s = unsigned(digit(a, i)) + digit(b, i);
        out = felt_t(out + (s >= p_ ? s - p_ : s) * pw);
        pw = felt_t(pw * p_);
    }
    return out;
}

felt_t Field::pow(felt_t a, long long k) const {
    if (a == 0) {
        if (k == 0) return 1;
        if (k < 0) fail(Errc::DivisionByZero, "negative power of zero");
        return 0;
    }
    if (k < 0) return pow(inv(a), -k);
    felt_t acc = 1, base = a;
    unsigned long long m = (unsigned long long)k;
    while (m) {
        if (m & 1) acc = mul(acc, base);
        base = mul(base, base);
        m >>= 1;
    }
    return acc;
}

unsigned Field::mul_order(felt_t a) const {
    if (a == 0) fail(Errc::DivisionByZero, "order of zero");
    felt_t x = a;
    unsigned k = 1;
    while (x != 1) {
        x = mul(x, a);
        ++k;
        if (k > q_) fail(Errc::NotPrimitive, "element order exceeds group size");
    }
    return k;
}

felt_t Field::from_digits(std::span<const uint8_t> d) const {
    felt_t out = 0, pw = 1;
    for (unsigned i = 0; i < e_; ++i) {
        out = felt_t(out + (i < d.size() ? d[i] : 0) * pw);
        pw = felt_t(pw * p_);
    }
    return out;
}

void Field::write_digits(felt_t a, uint8_t* out, unsigned stride) const {
    for (unsigned i = 0; i < stride; ++i) out[i] = i < e_ ? digit(a, i) : 0;
}

std::string Field::poly_string() const {
    std::string s;
    for (size_t i = 0; i < poly_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(poly_[i]);
    }
    return s;
}

std::string Field::render(felt_t a) const {
    if (a == 0) return "0";
    const unsigned k = log(a);
    if (k == 0) return "1";
    if (k == 1 && e_ > 1) return "w";
    if (e_ == 1) return std::to_string(a);
    return "w^" + std::to_string(k);
}

felt_t project_code(const Field& src, felt_t a, const Field& dst) {
    if (src.p() != dst.p()) fail(Errc::DegreeMismatch, "projection requires the same prime");
    if (dst.e() >= src.e()) fail(Errc::DegreeMismatch, "projection target degree must be smaller");
    return felt_t(a % dst.q());
}

Felt project(Felt a, const Field& dst) {
    if (a.field == nullptr) fail(Errc::FieldMismatch, "unbound element");
    return {project_code(*a.field, a.code, dst), &dst};
}

}  // namespace ghc
