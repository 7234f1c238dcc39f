#pragma once

#include <span>
#include <vector>

#include "ghc/field.hpp"

namespace ghc::linalg {

// Incremental Gaussian elimination over F_q. Pivot = first nonzero coordinate;
// pivot rows are kept scaled to leading 1 and sorted by pivot position, so the
// basis is deterministic for a fixed insertion order.
class FqBasis {
public:
    FqBasis(FieldPtr f, size_t len) : f_(std::move(f)), len_(len) {}

    // Returns true when the word enlarged the span.
    bool insert(std::span<const felt_t> w);
    bool in_span(std::span<const felt_t> w) const;
    size_t dim() const { return rows_.size(); }
    const std::vector<std::vector<felt_t>>& rows() const { return rows_; }

private:
    std::vector<felt_t> reduce(std::span<const felt_t> w) const;
    FieldPtr f_;
    size_t len_;
    std::vector<std::vector<felt_t>> rows_;
    std::vector<size_t> pivots_;
};

// Same over F_p on the digit expansion (length len * e).
class FpBasis {
public:
    FpBasis(FieldPtr f, size_t len) : f_(std::move(f)), len_(len) {}

    bool insert_word(std::span<const felt_t> w);
    size_t dim() const { return rows_.size(); }
    size_t expanded_len() const { return len_ * f_->e(); }
    // Echelon basis rows mapped back to words over F_q.
    std::vector<std::vector<felt_t>> word_basis() const;

private:
    std::vector<uint8_t> expand(std::span<const felt_t> w) const;
    bool insert_vec(std::vector<uint8_t> v);
    FieldPtr f_;
    size_t len_;
    std::vector<std::vector<uint8_t>> rows_;
    std::vector<size_t> pivots_;
};

}  // namespace ghc::linalg
