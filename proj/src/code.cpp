#include "ghc/code.hpp"

#include <algorithm>

#include "ghc/linalg.hpp"

namespace ghc {

namespace {

struct WordLess {
    size_t len;
    bool operator()(const felt_t* a, const felt_t* b) const {
        return std::lexicographical_compare(a, a + len, b, b + len);
    }
};

}  // namespace

Code Code::from_words(FieldPtr f, size_t len, const std::vector<std::vector<felt_t>>& words) {
    std::vector<felt_t> flat;
    flat.reserve(words.size() * len);
    for (const auto& w : words) {
        if (w.size() != len) fail(Errc::SizeMismatch, "word length mismatch");
        flat.insert(flat.end(), w.begin(), w.end());
    }
    return from_flat(std::move(f), len, std::move(flat));
}

Code Code::from_flat(FieldPtr f, size_t len, std::vector<felt_t> flat) {
    if (len == 0 || flat.size() % len != 0) fail(Errc::SizeMismatch, "ragged word buffer");
    const size_t m = flat.size() / len;
    std::vector<const felt_t*> ptrs(m);
    for (size_t i = 0; i < m; ++i) ptrs[i] = flat.data() + i * len;
    std::sort(ptrs.begin(), ptrs.end(), WordLess{len});
    ptrs.erase(std::unique(ptrs.begin(), ptrs.end(),
                           [len](const felt_t* a, const felt_t* b) {
                               return std::equal(a, a + len, b);
                           }),
               ptrs.end());
    Code c(std::move(f), len);
    c.buf_.reserve(ptrs.size() * len);
    for (const felt_t* w : ptrs) c.buf_.insert(c.buf_.end(), w, w + len);
    return c;
}

bool Code::contains(std::span<const felt_t> w) const {
    if (w.size() != len_) return false;
    const size_t m = size();
    size_t lo = 0, hi = m;
    while (lo < hi) {
        const size_t mid = (lo + hi) / 2;
        const felt_t* cand = buf_.data() + mid * len_;
        if (std::lexicographical_compare(cand, cand + len_, w.data(), w.data() + len_))
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo == m) return false;
    const felt_t* cand = buf_.data() + lo * len_;
    return std::equal(cand, cand + len_, w.data());
}

bool Code::contains_zero() const {
    if (!zero_) {
        const std::vector<felt_t> z(len_, 0);
        zero_ = contains(z);
    }
    return *zero_;
}

bool Code::is_p_additive() const {
    if (!additive_) {
        // |C| = p^dim of the F_p-span iff C is that span, i.e. closed under
        // addition (scalar closure is free since p is prime).
        linalg::FpBasis basis(f_, len_);
        for (size_t i = 0; i < size(); ++i) basis.insert_word(word(i));
        unsigned long long span = 1;
        bool overflow = false;
        for (size_t i = 0; i < basis.dim(); ++i) {
            span *= f_->p();
            if (span > (1ULL << 62)) { overflow = true; break; }
        }
        additive_ = !overflow && contains_zero() && span == size();
    }
    return *additive_;
}

bool Code::is_q_linear() const {
    if (!linear_) {
        linalg::FqBasis basis(f_, len_);
        for (size_t i = 0; i < size(); ++i) basis.insert(word(i));
        unsigned long long span = 1;
        bool overflow = false;
        for (size_t i = 0; i < basis.dim(); ++i) {
            span *= f_->q();
            if (span > (1ULL << 62)) { overflow = true; break; }
        }
        linear_ = !overflow && contains_zero() && span == size();
    }
    return *linear_;
}

}  // namespace ghc
