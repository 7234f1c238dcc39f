#include "ghc/linalg.hpp"

#include <algorithm>

namespace ghc::linalg {

std::vector<felt_t> FqBasis::reduce(std::span<const felt_t> w) const {
    std::vector<felt_t> v(w.begin(), w.end());
    const Field& f = *f_;
    for (size_t r = 0; r < rows_.size(); ++r) {
        const size_t piv = pivots_[r];
        if (v[piv] == 0) continue;
        const felt_t c = v[piv];  // pivot rows carry leading 1
        for (size_t j = piv; j < len_; ++j) v[j] = f.sub(v[j], f.mul(c, rows_[r][j]));
    }
    return v;
}

bool FqBasis::insert(std::span<const felt_t> w) {
    std::vector<felt_t> v = reduce(w);
    size_t piv = 0;
    while (piv < len_ && v[piv] == 0) ++piv;
    if (piv == len_) return false;
    const Field& f = *f_;
    const felt_t inv = f.inv(v[piv]);
    for (size_t j = piv; j < len_; ++j) v[j] = f.mul(v[j], inv);
    const auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, piv);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
}

bool FqBasis::in_span(std::span<const felt_t> w) const {
    const auto v = reduce(w);
    return std::all_of(v.begin(), v.end(), [](felt_t x) { return x == 0; });
}

std::vector<uint8_t> FpBasis::expand(std::span<const felt_t> w) const {
    const unsigned e = f_->e();
    std::vector<uint8_t> v(len_ * e);
    for (size_t i = 0; i < len_; ++i)
        for (unsigned d = 0; d < e; ++d) v[i * e + d] = f_->digit(w[i], d);
    return v;
}

bool FpBasis::insert_word(std::span<const felt_t> w) { return insert_vec(expand(w)); }

bool FpBasis::insert_vec(std::vector<uint8_t> v) {
    const unsigned p = f_->p();
    const size_t n = v.size();
    for (size_t r = 0; r < rows_.size(); ++r) {
        const size_t piv = pivots_[r];
        if (v[piv] == 0) continue;
        const unsigned c = v[piv];
        for (size_t j = piv; j < n; ++j) v[j] = uint8_t((v[j] + (p - c) * rows_[r][j]) % p);
    }
    size_t piv = 0;
    while (piv < n && v[piv] == 0) ++piv;
    if (piv == n) return false;
    // scale to leading 1 (inverse mod p by exhaustion; p <= 7 at desk scale)
    unsigned inv = 1;
    for (unsigned x = 1; x < p; ++x)
        if (x * v[piv] % p == 1) { inv = x; break; }
    for (size_t j = piv; j < n; ++j) v[j] = uint8_t(v[j] * inv % p);
    const auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, piv);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
}

std::vector<std::vector<felt_t>> FpBasis::word_basis() const {
    const unsigned e = f_->e();
    std::vector<std::vector<felt_t>> out;
    out.reserve(rows_.size());
    for (const auto& v : rows_) {
        std::vector<felt_t> w(len_);
        for (size_t i = 0; i < len_; ++i)
            w[i] = f_->from_digits(std::span<const uint8_t>(v.data() + i * e, e));
        out.push_back(std::move(w));
    }
    return out;
}

}  // namespace ghc::linalg
