#pragma once

#include <cstdint>
#include <numeric>
#include <string>

namespace ghc {

// Exact fraction for dimension bookkeeping (e.g. a p-rank of 5/2 in q-units)
// and for half-integral quantum dimensions. Denominator stays positive.
struct Frac {
    long long num = 0;
    long long den = 1;

    static Frac of(long long n, long long d) { return Frac{n, d}; }

    Frac reduced() const {
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g == 0) return Frac{0, 1};
        return Frac{num / g, den / g};
    }

    bool operator==(const Frac& o) const {
        return static_cast<__int128>(num) * o.den == static_cast<__int128>(o.num) * den;
    }
    bool operator!=(const Frac& o) const { return !(*this == o); }

    // "3", "2.5" for halves, "7/3" otherwise.
    std::string str() const {
        const Frac r = reduced();
        if (r.den == 1) return std::to_string(r.num);
        if (r.den == 2) return std::to_string(r.num / 2) + "." + (r.num % 2 ? "5" : "0");
        return std::to_string(r.num) + "/" + std::to_string(r.den);
    }
};

}  // namespace ghc
