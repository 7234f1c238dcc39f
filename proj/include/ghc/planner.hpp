#pragma once

#include <string>
#include <vector>

#include "ghc/recipe.hpp"

namespace ghc {

/// Admissible kernel dimensions for F_p-additive GH codes of length p^t over
/// GF(p^e): {1..floor(t/e)}, plus 1 + t/e (the linear case) when e | t.
std::vector<unsigned> admissible_kernels(unsigned p, unsigned e, unsigned t);

/// [lo, hi] rank range once the kernel dimension is fixed:
/// lo = ceil((e+t-k)/(e-1)), hi = 1 + t - (e-1)(k-1); lo = hi = k when
/// k = 1 + t/e. Throws InadmissibleKernel.
std::pair<unsigned, unsigned> rank_bounds(unsigned e, unsigned t, unsigned k);

enum class Verdict { Impossible, Constructible, OpenUnknown };
const char* verdict_name(Verdict v);

struct PairStatus {
    unsigned p = 0, e = 0, t = 0, k = 0, r = 0;
    Verdict verdict = Verdict::OpenUnknown;
    RecipePtr recipe;     // set for Constructible
    std::string reason;   // set for Impossible / context for OpenUnknown
};

/// Theorem-level verdict, independent of p: bounds, Sylvester, the t=e=2
/// minimum-rank construction, the max-rank theorem, and the switching ranges.
/// This is what the published tables encode (open = "bold").
Verdict generic_verdict(unsigned e, unsigned t, unsigned r, unsigned k);

/// Point query: the generic catalog plus p-specific facts (the q=4
/// classification, the q=8 / q=3^4 / q=5^4 fixed examples and their Kronecker
/// chains). Constructible statuses carry a recipe.
PairStatus pair_status(unsigned p, unsigned e, unsigned t, unsigned r, unsigned k);

struct BuildOutcome {
    RecipePtr recipe;
    GHMatrix matrix;
    bool verified = false;        // measured invariants checked against (r, k)
    std::string note;             // "declared, unverified at this size" etc.
};

size_t planner_cell_budget();  // same env knob as invariants

/// Materializes the recipe for a Constructible pair. With verify set and
/// |C_H| * n within budget, measures the invariants and insists they equal
/// (r, k); a mismatch raises VerificationFailed (never swallowed).
BuildOutcome plan_and_build(unsigned p, unsigned e, unsigned t, unsigned r, unsigned k,
                            bool verify, size_t max_cells = planner_cell_budget());

/// Text table in the published layout (generic verdicts; '*' marks open
/// entries) or CSV rows p,e,t,k,r,verdict,recipe,rank_p_num,rank_p_den,verified
/// (point-query verdicts).
std::string emit_pair_table(unsigned p, unsigned e, unsigned t_lo, unsigned t_hi, bool csv);

struct Seed {
    RecipePtr recipe;
    unsigned t = 0, r = 0, k = 0;
};

/// Builds and measures a seed; requires a p-additive GH matrix of length p^t
/// with measured kernel dimension 1 (SeedUnverified otherwise).
Seed make_seed(const RecipePtr& recipe, size_t max_cells = planner_cell_budget());

/// Kronecker closure of the seeds: pairwise sums keep k = 1, and S_q chains
/// raise t, r, k in lockstep. Returns the constructible pairs with t <= t_max
/// that the closure certifies (recipes included).
std::vector<PairStatus> extend_with_seed(const std::vector<Seed>& seeds, unsigned p, unsigned e,
                                         unsigned t_max);

}  // namespace ghc
