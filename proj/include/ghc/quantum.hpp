#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ghc/invariants.hpp"
#include "ghc/matrix.hpp"
#include "ghc/rational.hpp"

namespace ghc {

/// Trace Hermitian ("additive") inner product on GF(p^2)^n:
/// sum(v_i w_i^p - v_i^p w_i), scaled by beta = w^{(p+1)/2} for odd p.
/// The result lies in F_p (asserted). Requires e = 2.
felt_t additive_inner(const Field& f, std::span<const felt_t> v, std::span<const felt_t> w);

/// Hermitian inner product sum v_i w_i^p. Requires e = 2.
felt_t hermitian_inner(const Field& f, std::span<const felt_t> v, std::span<const felt_t> w);

struct RowOrthReport {
    bool ok = true;
    size_t i = 0, j = 0;   // first offending pair when !ok
    felt_t value = 0;      // measured inner product
    felt_t expected = 0;
};

/// Checks the row inner-product lemmas on a GH matrix over GF(p^2): all pairs
/// vanish for odd p; for p = 2 distinct rows give lambda mod 2 and equal rows 0.
RowOrthReport row_orthogonality_check(const GHMatrix& m);

/// True iff the additive inner product vanishes on all pairs of F_p-generators
/// (equivalent to all codeword pairs by bilinearity). Requires a p-additive code.
bool is_self_orthogonal(const Code& c);

struct DualScanResult {
    std::vector<std::vector<felt_t>> words;  // members of C-perp \ C with weight <= wmax
    size_t candidates = 0;                   // how many words were enumerated
};

/// Enumerates every word of weight <= wmax (default 2) and keeps those
/// orthogonal to all generators of C but not in C. An empty list certifies
/// that C-perp \ C has no word of weight below 3.
DualScanResult dual_low_weight_scan(const Code& c, unsigned wmax = 2);

struct QuantumReport {
    size_t n = 0;
    Frac k;          // p^t - (t+2)/2, exact
    unsigned d = 3;
    unsigned q = 0;  // p^2
    bool self_orthogonal = false;
    std::string dual_scan;  // "empty" | "skipped"
    std::vector<std::vector<felt_t>> generators;  // F_p-generators of C_H

    std::string to_json_string() const;
    std::string params_string() const;  // "[[n, k, 3]]_q"
};

/// Certifies |C_H| = p^{t+2}, self-orthogonality and (within budget) the empty
/// weight-<=2 dual scan, then reports [[p^t, p^t-(t+2)/2, 3]]_{p^2}.
/// Preconditions: e = 2, C_H p-additive, lambda even when p = 2.
QuantumReport quantum_report(const GHMatrix& m, size_t max_cells = default_cell_budget());

}  // namespace ghc
