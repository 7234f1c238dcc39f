#pragma once

#include <vector>

#include "ghc/matrix.hpp"
#include "ghc/recipe.hpp"

namespace ghc {

/// S^1 is the multiplicative table of F_q with rows/columns indexed
/// 0, 1, w, ..., w^{q-2}; S^h = S_q (+) S^{h-1}. Order q^h, normalized,
/// C_{S^h} is F_q-linear with rank = ker = 1 + h.
GHMatrix sylvester(const FieldPtr& field, unsigned h);

/// Kronecker sum: block (i,j) = h_ij + B_i. Both forms keep the field and
/// require equal orders among the B_i.
GHMatrix kronecker_sum(const GHMatrix& h, const GHMatrix& b);
GHMatrix kronecker_sum(const GHMatrix& h, const std::vector<GHMatrix>& bs);

/// The block-supported vector g_j^{(z)}: values 0,1,w,...,w^{q-2} each repeated
/// q^{z-1} times at positions j*q^z ... (j+1)*q^z - 1 (0-based), zeros elsewhere.
std::vector<felt_t> block_vector(const Field& f, size_t n, unsigned z, unsigned j);

/// Order q^2 switching of S^2: cosets K + beta*v1 shifted by beta_{e-1} * g,
/// g supported on the last q positions. C_H is p-additive with (rank, ker) = (4, 2).
GHMatrix switching_i(unsigned p, unsigned e);

/// Order q^h: K = <v2..vh>, coset labels beta with shifts sum_{j<=s} beta_j g_j.
/// ker = h, rank = h + s + 1.
GHMatrix switching_ii(unsigned p, unsigned e, unsigned h, unsigned s);

/// m = |s_list| rounds; K = <v_{m+1}..v_h>; label tuple (beta^(1)..beta^(m))
/// with per-round shifts on scale-z block vectors. ker = h - m + 1,
/// rank = h + 1 + sum s_z.
GHMatrix switching_iii(unsigned p, unsigned e, unsigned h, const std::vector<unsigned>& s_list);

/// Entrywise coordinate projection of the multiplicative table of GF(p^t)
/// down to GF(p^e), t > e > 1. Order p^t, lambda = p^{t-e}, invariants (t+1, 1).
GHMatrix projection_construction(unsigned p, unsigned e, unsigned t, bool allow_large = false);

/// Odd p: rows are all F_p-combinations of v1 = (0, w^0, ..., w^{p^2-2}) and
/// v2 with w^{ip} in position i+1. Order p^2, invariants (3, 1).
GHMatrix gh_p2_one(unsigned p);

/// The transcribed fixed matrices: an 8x8 over GF(8) with invariants (4, 1),
/// and the order-81 / order-625 F_p-spans over GF(3^4) / GF(5^4) with (3, 1).
GHMatrix fixed_example(FixedId id);

// Embedded .ghm fixtures (paper transcriptions, byte-exact).
namespace fixtures {
const char* sw1_16x16_ghm();   // switching_i(2,2) output
const char* proj_8x8_ghm();    // projection_construction(2,2,3) output
const char* h8_rank4_ghm();    // fixed_example(H8_rank4), repaired entry annotated
const char* h8_rank4_note();   // annotation for the repaired entry
}  // namespace fixtures

}  // namespace ghc
