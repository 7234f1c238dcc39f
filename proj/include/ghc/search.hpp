#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "ghc/matrix.hpp"

namespace ghc {

struct SearchBudget {
    unsigned long long node_limit = 1'000'000'000;
    double seconds = 900.0;
};

struct SearchSpec {
    FieldPtr field;
    unsigned lambda = 1;                  // only lambda = 1 is in scope
    std::optional<unsigned> target_rank;  // rank of C_H
    SearchBudget budget;
    bool allow_incomplete = false;        // required for q > 9
};

struct SearchResult {
    std::vector<GHMatrix> matrices;  // normalized, rows sorted, zero row first
    bool complete = false;           // enumeration tree exhausted within budget
    unsigned long long nodes = 0;
};

using ProgressFn = std::function<void(unsigned long long nodes, size_t found)>;

/// Exhaustive search for F_p-additive GH matrices H(q,1), normalized, up to
/// column permutations fixing the canonical first generator
/// (0, 1, w, ..., w^{q-2}). For lambda = 1 every nonzero word of F_H must be a
/// permutation of F_q with its zero in the first coordinate; the search walks
/// generator words depth-first, position by position, pruning on repeated
/// values in any partial F_p-combination. With target_rank = rho, later
/// generators are restricted to the F_q-span of the earlier ones whenever the
/// span already has dimension rho - 1.
SearchResult search_additive_gh(const SearchSpec& spec, const ProgressFn& progress = {});

}  // namespace ghc
