#pragma once

#include <string>

#include "ghc/code.hpp"
#include "ghc/matrix.hpp"
#include "ghc/rational.hpp"

namespace ghc {

/// Dimension over F_q of the F_q-linear span.
unsigned rank_q(const Code& c);

/// F_p-dimension of the F_p-additive span, as a fraction of e (q-units).
Frac rank_p(const Code& c);

/// F_p-basis of the F_p-additive span (reduced echelon, deterministic).
std::vector<std::vector<felt_t>> additive_generators(const Code& c);

struct Classification {
    bool p_additive = false;
    bool q_linear = false;
};
Classification classify(const Code& c);

/// K(C) = {x : ax + C = C for all a in F_q}. Candidates come from C itself
/// (sound because 0 is in C). Uses the scalar-closure shortcut when C is
/// p-additive, the full coset test otherwise.
Code kernel_q(const Code& c);
/// Shortcut route: x in K(C) iff mu*x in C for every scalar mu. Valid only for
/// p-additive codes (checked).
Code kernel_q_via_scalar_closure(const Code& c);
/// Definition route, independent of the shortcut: per candidate and scalar,
/// tests the set equality ax + C = C element by element.
Code kernel_q_via_coset_test(const Code& c);

/// K_p(C) = {x : x + C = C}. Equals C itself when C is p-additive.
Code kernel_p(const Code& c);
Code kernel_p_via_coset_test(const Code& c);

struct InvariantReport {
    unsigned p = 0, e = 0;
    size_t n = 0, lambda = 0;
    struct Side {
        unsigned rank_q = 0;
        unsigned ker_q = 0;
        Frac rank_p;
        Frac ker_p;
    } f_h, c_h;
    bool p_additive = false;
    bool q_linear = false;

    std::string to_json_string() const;
};

size_t default_cell_budget();  // GHC_MAX_CELLS, defaults to 1e8

/// All eight quantities plus flags for a normalized GH matrix. Asserts the
/// +1 relations between F_H and C_H and, for additive codes, the rank/kernel
/// bounds; a violation raises VerificationFailed. Refuses inputs whose
/// |C_H| * n exceeds max_cells.
InvariantReport invariant_report(const GHMatrix& m, size_t max_cells = default_cell_budget());

unsigned dim_q_of_size(const Field& f, size_t size);   // exact log_q, throws if not a power
unsigned dim_p_of_size(const Field& f, size_t size);   // exact log_p

}  // namespace ghc
