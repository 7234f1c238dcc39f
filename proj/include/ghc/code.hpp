#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ghc/field.hpp"

namespace ghc {

/// A set of equal-length words over one field, stored as a flat sorted buffer
/// (lexicographic by element code, i.e. canonical encoding order). Membership
/// is binary search; additivity/linearity flags are computed lazily via
/// span-size tests and cached.
class Code {
public:
    static Code from_words(FieldPtr f, size_t len, const std::vector<std::vector<felt_t>>& words);
    // Takes words concatenated back to back; sorts and dedupes.
    static Code from_flat(FieldPtr f, size_t len, std::vector<felt_t> flat);

    const FieldPtr& field() const { return f_; }
    size_t length() const { return len_; }
    size_t size() const { return len_ == 0 ? 0 : buf_.size() / len_; }
    std::span<const felt_t> word(size_t i) const { return {buf_.data() + i * len_, len_}; }
    const std::vector<felt_t>& flat() const { return buf_; }

    bool contains(std::span<const felt_t> w) const;
    bool contains_zero() const;
    bool is_p_additive() const;
    bool is_q_linear() const;

    bool operator==(const Code& o) const { return len_ == o.len_ && buf_ == o.buf_; }

private:
    Code(FieldPtr f, size_t len) : f_(std::move(f)), len_(len) {}
    FieldPtr f_;
    size_t len_;
    std::vector<felt_t> buf_;
    mutable std::optional<bool> zero_, additive_, linear_;
};

}  // namespace ghc
