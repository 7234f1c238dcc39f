#include "ghc/constructions.hpp"

// Transcriptions of the displayed matrices, in .ghm codes. Over GF(4) with
// w^2 = w + 1 the codes are 0, 1, w = 2, w^2 = 3; over GF(8) with w^3 = w + 1
// the nonzero powers encode as 1, w = 2, w^2 = 4, w^3 = 3, w^4 = 6, w^5 = 7,
// w^6 = 5.

namespace ghc::fixtures {

const char* sw1_16x16_ghm() {
    return
        "GHM 1\n"
        "field p=2 e=2 poly=1,1\n"
        "order n=16\n"
        "0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0\n"
        "0 0 0 0 1 1 1 1 2 2 2 2 3 3 3 3\n"
        "0 0 0 0 2 2 2 2 3 3 3 3 1 1 1 1\n"
        "0 0 0 0 3 3 3 3 1 1 1 1 2 2 2 2\n"
        "0 1 2 3 0 1 2 3 0 1 2 3 0 1 2 3\n"
        "0 1 2 3 1 0 3 2 2 3 0 1 3 2 1 0\n"
        "0 1 2 3 2 3 0 1 3 2 1 0 1 0 3 2\n"
        "0 1 2 3 3 2 1 0 1 0 3 2 2 3 0 1\n"
        "0 2 3 1 0 2 3 1 0 2 3 1 0 3 1 2\n"
        "0 2 3 1 1 3 2 0 2 0 1 3 3 0 2 1\n"
        "0 2 3 1 2 0 1 3 3 1 0 2 1 2 0 3\n"
        "0 2 3 1 3 1 0 2 1 3 2 0 2 1 3 0\n"
        "0 3 1 2 0 3 1 2 0 3 1 2 0 2 3 1\n"
        "0 3 1 2 1 2 0 3 2 1 3 0 3 1 0 2\n"
        "0 3 1 2 2 1 3 0 3 0 2 1 1 3 2 0\n"
        "0 3 1 2 3 0 2 1 1 2 0 3 2 0 1 3\n";
}

const char* proj_8x8_ghm() {
    return
        "GHM 1\n"
        "field p=2 e=2 poly=1,1\n"
        "order n=8\n"
        "0 0 0 0 0 0 0 0\n"
        "0 1 2 0 3 2 3 1\n"
        "0 2 0 3 2 3 1 1\n"
        "0 0 3 2 3 1 1 2\n"
        "0 3 2 3 1 1 2 0\n"
        "0 2 3 1 1 2 0 3\n"
        "0 3 1 1 2 0 3 2\n"
        "0 1 1 2 0 3 2 3\n";
}

const char* h8_rank4_ghm() {
    return
        "GHM 1\n"
        "# repaired: source display row 5, column 4 reads 'a'; the unique value\n"
        "# completing an F_2-closed GH row set is w (code 2).\n"
        "field p=2 e=3 poly=1,1,0\n"
        "order n=8\n"
        "0 0 0 0 0 0 0 0\n"
        "0 4 7 3 1 2 5 6\n"
        "0 3 2 1 5 4 6 7\n"
        "0 1 4 5 6 3 7 2\n"
        "0 7 5 2 4 6 3 1\n"
        "0 5 3 6 7 1 2 4\n"
        "0 2 6 4 3 7 1 5\n"
        "0 6 1 7 2 5 4 3\n";
}

const char* h8_rank4_note() {
    return "row 5, column 4 is transcribed as 'a' in the source display; the unique field "
           "value making the row set F_2-closed and GH is w (code 2)";
}

}  // namespace ghc::fixtures
