#include <doctest.h>

#include <random>

#include "ghc/constructions.hpp"
#include "ghc/matrix.hpp"
#include "oracles.hpp"

using namespace ghc;

namespace {

GHMatrix s4() { return sylvester(make_field(2, 2), 1); }

}  // namespace

TEST_CASE("verify_gh accepts the multiplicative table and the switching fixture") {
    CHECK(verify_gh(s4()).ok);
    const GHMatrix sw1 = from_ghm(fixtures::sw1_16x16_ghm());
    CHECK(verify_gh(sw1).ok);
    CHECK(verify_gh(sw1, VerifyPath::Tables).ok);
    CHECK(oracle::naive_gh(sw1));
}

TEST_CASE("verify_gh rejects a single perturbation with a first violation") {
    GHMatrix m = s4();
    auto a = m.entries();
    a[2 * 4 + 2] = 0;  // was w * w = w^2
    const GHMatrix bad(m.field(), 4, std::move(a));
    const auto rep = verify_gh(bad);
    REQUIRE_FALSE(rep.ok);
    REQUIRE(rep.violation.has_value());
    CHECK_FALSE(oracle::naive_gh(bad));
    // both paths agree on the violating pair
    const auto rep2 = verify_gh(bad, VerifyPath::Tables);
    REQUIRE_FALSE(rep2.ok);
    CHECK(rep.violation->i == rep2.violation->i);
    CHECK(rep.violation->j == rep2.violation->j);
    CHECK(rep.violation->element == rep2.violation->element);
    CHECK(rep.violation->count == rep2.violation->count);
    CHECK(rep.violation->count != bad.lambda());
}

TEST_CASE("kernel and table verification paths agree on random row tweaks") {
    std::mt19937 rng(7);
    GHMatrix base = sylvester(make_field(2, 3), 1);
    for (int trial = 0; trial < 40; ++trial) {
        auto a = base.entries();
        std::uniform_int_distribution<size_t> pos(0, a.size() - 1);
        std::uniform_int_distribution<unsigned> val(0, base.field()->q() - 1);
        if (trial % 3 != 0) a[pos(rng)] = felt_t(val(rng));
        const GHMatrix m(base.field(), base.order(), std::move(a));
        const auto r1 = verify_gh(m, VerifyPath::Kernels);
        const auto r2 = verify_gh(m, VerifyPath::Tables);
        CHECK(r1.ok == r2.ok);
        if (!r1.ok) {
            CHECK(r1.violation->i == r2.violation->i);
            CHECK(r1.violation->j == r2.violation->j);
        }
    }
}

TEST_CASE("duplicate rows are rejected") {
    GHMatrix m = s4();
    auto a = m.entries();
    for (size_t j = 0; j < 4; ++j) a[3 * 4 + j] = m.at(2, j);
    CHECK_FALSE(verify_gh(GHMatrix(m.field(), 4, std::move(a))).ok);
}

TEST_CASE("order must be a multiple of q") {
    auto f4 = make_field(2, 2);
    CHECK_THROWS_AS(GHMatrix(f4, 6, std::vector<felt_t>(36, 0)), Error);
}

TEST_CASE("normalize is idempotent and undoes row constants") {
    const GHMatrix m = s4();
    const GHMatrix n1 = normalize(m);
    CHECK(n1.entries() == m.entries());  // the table form is already normalized

    const GHMatrix shifted = add_const_to_row(m, 3, m.field()->omega());
    CHECK(verify_gh(shifted).ok);
    const GHMatrix back = normalize(shifted);
    CHECK(back.entries() == m.entries());
    CHECK(normalize(back).entries() == back.entries());

    auto junk = GHMatrix(m.field(), 4, std::vector<felt_t>(16, 0));
    CHECK_THROWS_AS((void)normalize(junk), Error);  // all-equal rows are not GH
}

TEST_CASE("equivalence transforms preserve the GH property") {
    const GHMatrix m = s4();
    CHECK(permute_rows(m, {0, 1, 2, 3}).entries() == m.entries());
    CHECK(verify_gh(permute_rows(m, {1, 0, 2, 3})).ok);
    CHECK(verify_gh(add_const_to_col(m, 0, m.field()->omega())).ok);
    CHECK_THROWS_AS((void)permute_rows(m, {0, 1, 2, 9}), Error);
    CHECK_THROWS_AS((void)add_const_to_row(m, 9, 1), Error);

    std::mt19937 rng(42);
    for (GHMatrix base : {s4(), sylvester(make_field(2, 3), 1), from_ghm(fixtures::sw1_16x16_ghm())}) {
        GHMatrix cur = base;
        for (int step = 0; step < 12; ++step) {
            const unsigned n = unsigned(cur.order());
            std::uniform_int_distribution<unsigned> idx(0, n - 1);
            std::uniform_int_distribution<unsigned> val(0, cur.field()->q() - 1);
            switch (step % 4) {
                case 0: {
                    std::vector<size_t> perm(n);
                    for (size_t i = 0; i < n; ++i) perm[i] = i;
                    std::shuffle(perm.begin(), perm.end(), rng);
                    cur = permute_rows(cur, perm);
                    break;
                }
                case 1: {
                    std::vector<size_t> perm(n);
                    for (size_t i = 0; i < n; ++i) perm[i] = i;
                    std::shuffle(perm.begin(), perm.end(), rng);
                    cur = permute_cols(cur, perm);
                    break;
                }
                case 2: cur = add_const_to_row(cur, idx(rng), felt_t(val(rng))); break;
                case 3: cur = add_const_to_col(cur, idx(rng), felt_t(val(rng))); break;
            }
            CHECK(verify_gh(cur).ok);
        }
    }
}

TEST_CASE("transpose preserves the GH property and is an involution") {
    const GHMatrix m = s4();
    CHECK(transpose(m).entries() == m.entries());  // multiplicative table is symmetric
    const GHMatrix sw1 = from_ghm(fixtures::sw1_16x16_ghm());
    const GHMatrix swt = transpose(sw1);
    CHECK(verify_gh(swt).ok);
    CHECK(transpose(swt).entries() == sw1.entries());
}

TEST_CASE("extract_codes sizes and contents") {
    const auto [f_h, c_h] = extract_codes(s4());
    CHECK(f_h.size() == 4);
    CHECK(c_h.size() == 16);
    CHECK(f_h.contains_zero());
    // all constant words lie in C_H
    for (unsigned a = 0; a < 4; ++a) CHECK(c_h.contains(std::vector<felt_t>(4, felt_t(a))));

    const auto pair16 = extract_codes(from_ghm(fixtures::sw1_16x16_ghm()));
    CHECK(pair16.c_h.size() == 64);
    const auto pair8 = extract_codes(from_ghm(fixtures::proj_8x8_ghm()));
    CHECK(pair8.c_h.size() == 32);

    const GHMatrix shifted = add_const_to_col(s4(), 0, 1);
    CHECK_THROWS_AS((void)extract_codes(shifted), Error);  // NotNormalized
}

TEST_CASE("ghm round trip is byte exact and validates input") {
    for (const GHMatrix& m : {s4(), from_ghm(fixtures::sw1_16x16_ghm()), gh_p2_one(3)}) {
        const std::string text = to_ghm(m);
        const GHMatrix back = from_ghm(text);
        CHECK(back.entries() == m.entries());
        CHECK(back.field()->same(*m.field()));
        CHECK(to_ghm(back) == text);
    }
    CHECK_THROWS_AS((void)from_ghm("garbage"), Error);
    CHECK_THROWS_AS((void)from_ghm("GHM 1\nfield p=2 e=2 poly=1,1\norder n=4\n0 0 0\n"), Error);
    CHECK_THROWS_AS((void)from_ghm("GHM 1\nfield p=2 e=2 poly=1,1\norder n=4\n"), Error);
    // comment lines after the magic are ignored
    const GHMatrix h8 = from_ghm(fixtures::h8_rank4_ghm());
    CHECK(h8.order() == 8);
}

TEST_CASE("code flags are computed lazily and correctly") {
    const auto [f_h, c_h] = extract_codes(from_ghm(fixtures::proj_8x8_ghm()));
    CHECK(c_h.is_p_additive());
    CHECK_FALSE(c_h.is_q_linear());
    CHECK(oracle::naive_additive(c_h));
    const auto [sf, sc] = extract_codes(s4());
    CHECK(sc.is_p_additive());
    CHECK(sc.is_q_linear());
}
