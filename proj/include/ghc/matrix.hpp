#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ghc/code.hpp"
#include "ghc/field.hpp"

namespace ghc {

struct GhViolation {
    size_t i = 0, j = 0;   // offending row pair, i < j, first in row-major scan
    felt_t element = 0;    // element whose multiplicity is off
    unsigned count = 0;    // its multiplicity in the difference multiset
};

struct VerifyReport {
    bool ok = false;
    std::optional<GhViolation> violation;
};

enum class VerifyPath { Auto, Kernels, Tables };

/// An n x n entry table over GF(p^e) with q | n; lambda = n / q. The GH
/// difference property is checked by verify_gh, not by the constructor.
class GHMatrix {
public:
    GHMatrix(FieldPtr field, size_t n, std::vector<felt_t> entries);

    const FieldPtr& field() const { return f_; }
    size_t order() const { return n_; }
    size_t lambda() const { return lambda_; }
    felt_t at(size_t i, size_t j) const { return a_[i * n_ + j]; }
    std::span<const felt_t> row(size_t i) const { return {a_.data() + i * n_, n_}; }
    const std::vector<felt_t>& entries() const { return a_; }

    bool first_row_col_zero() const;

    // Digit-plane mirror (4 bytes/element) for the SIMD verification path;
    // built lazily, only usable when e <= 4 and p <= 7.
    const std::vector<uint8_t>& digit_mirror() const;
    bool kernel_path_supported() const { return f_->e() <= 4 && f_->p() <= 7; }

private:
    FieldPtr f_;
    size_t n_, lambda_;
    std::vector<felt_t> a_;
    mutable std::vector<uint8_t> digits_;
};

/// Checks the GH property: for every row pair i < j the difference multiset
/// {h_is - h_js} contains each field element exactly lambda times. Reports the
/// first violating pair in row-major scan order.
VerifyReport verify_gh(const GHMatrix& m, VerifyPath path = VerifyPath::Auto);

/// Zeroes the first row and column: subtracts h_{1j} from column j, then the
/// resulting h_{i1} from row i. Requires a GH matrix.
GHMatrix normalize(const GHMatrix& m);

// Equivalence transforms. Each preserves the GH property.
GHMatrix permute_rows(const GHMatrix& m, const std::vector<size_t>& perm);
GHMatrix permute_cols(const GHMatrix& m, const std::vector<size_t>& perm);
GHMatrix add_const_to_row(const GHMatrix& m, size_t i, felt_t a);
GHMatrix add_const_to_col(const GHMatrix& m, size_t j, felt_t a);

GHMatrix transpose(const GHMatrix& m);

struct CodePair {
    Code f_h;  // rows of the normalized matrix
    Code c_h;  // union of F_H + alpha*1 over all alpha
};

/// Requires a normalized matrix (the rank/kernel relations depend on it).
CodePair extract_codes(const GHMatrix& m);

// .ghm text format (UTF-8, LF): "GHM 1", field line, order line, then n rows
// of space-separated element codes. Lines starting with '#' after the magic
// line are ignored on input and never emitted by to_ghm.
std::string to_ghm(const GHMatrix& m);
GHMatrix from_ghm(const std::string& text, bool allow_large = false);
GHMatrix read_ghm_file(const std::string& path, bool allow_large = false);
void write_ghm_file(const GHMatrix& m, const std::string& path);

}  // namespace ghc
