#include <doctest.h>

#include <random>
#include <set>

#include "ghc/constructions.hpp"
#include "ghc/invariants.hpp"
#include "oracles.hpp"

using namespace ghc;

namespace {

std::pair<unsigned, unsigned> measured(const GHMatrix& m) {
    const auto rep = invariant_report(m);
    return {rep.c_h.rank_q, rep.c_h.ker_q};
}

}  // namespace

TEST_CASE("sylvester matrices: orders, linearity, invariants") {
    const GHMatrix s1 = sylvester(make_field(2, 2), 1);
    CHECK(s1.order() == 4);
    CHECK(verify_gh(s1).ok);
    CHECK(measured(s1) == std::pair<unsigned, unsigned>{2, 2});  // the unique H(4,1)

    const GHMatrix s2 = sylvester(make_field(2, 2), 2);
    CHECK(s2.order() == 16);
    CHECK(measured(s2) == std::pair<unsigned, unsigned>{3, 3});

    const GHMatrix s3 = sylvester(make_field(3, 1), 2);  // prime field works too
    CHECK(s3.order() == 9);
    CHECK(verify_gh(s3).ok);
    CHECK(oracle::naive_gh(s3));
}

TEST_CASE("kronecker sum reproduces S^2 and composes invariants") {
    const GHMatrix s = sylvester(make_field(2, 2), 1);
    const GHMatrix s2 = sylvester(make_field(2, 2), 2);
    CHECK(kronecker_sum(s, s).entries() == s2.entries());

    const GHMatrix proj = projection_construction(2, 2, 3);
    const GHMatrix k1 = kronecker_sum(s, proj);
    CHECK(verify_gh(k1).ok);
    CHECK(measured(k1) == std::pair<unsigned, unsigned>{5, 2});  // (4,1) + S_q

    const GHMatrix k2 = kronecker_sum(proj, proj);
    CHECK(measured(k2) == std::pair<unsigned, unsigned>{7, 1});  // 4+4-1, 1+1-1

    CHECK_THROWS_AS((void)kronecker_sum(s, sylvester(make_field(3, 2), 1)), Error);
    CHECK_THROWS_AS(
        (void)kronecker_sum(s, std::vector<GHMatrix>{s, s}),  // needs 1 or order-many
        Error);
}

TEST_CASE("switching I reproduces the displayed 16x16 matrix byte for byte") {
    const GHMatrix sw1 = switching_i(2, 2);
    CHECK(to_ghm(sw1) == fixtures::sw1_16x16_ghm());
    CHECK(verify_gh(sw1).ok);
    const auto rep = invariant_report(sw1);
    CHECK(rep.c_h.rank_q == 4);
    CHECK(rep.c_h.ker_q == 2);
    CHECK(rep.p_additive);
    CHECK_FALSE(rep.q_linear);
    CHECK_THROWS_AS((void)switching_i(2, 1), Error);  // DegreeOne
}

TEST_CASE("switching I over GF(9)") {
    const GHMatrix m = switching_i(3, 2);
    CHECK(m.order() == 81);
    CHECK(verify_gh(m).ok);
    CHECK(measured(m) == std::pair<unsigned, unsigned>{4, 2});
}

TEST_CASE("switching I coset algebra: K_beta + K_gamma = K_{beta+gamma}") {
    const GHMatrix m = switching_i(2, 2);
    const Field& f = *m.field();
    const unsigned q = f.q();
    std::mt19937 rng(5);
    std::uniform_int_distribution<unsigned> pick(0, q - 1);
    for (int trial = 0; trial < 32; ++trial) {
        const unsigned bi = pick(rng), gi = pick(rng), ci = pick(rng), cj = pick(rng);
        const felt_t sum_label = f.add(f.idx(bi), f.idx(gi));
        const unsigned si = f.idx_of(sum_label);
        std::vector<felt_t> sum(m.order());
        for (size_t s = 0; s < m.order(); ++s)
            sum[s] = f.add(m.at(bi * q + ci, s), m.at(gi * q + cj, s));
        bool in_coset = false;
        for (unsigned c = 0; c < q && !in_coset; ++c) {
            bool eq = true;
            for (size_t s = 0; s < m.order() && eq; ++s) eq = sum[s] == m.at(si * q + c, s);
            in_coset = eq;
        }
        CHECK(in_coset);
    }
}

TEST_CASE("switching II parameters and invariants") {
    const GHMatrix a = switching_ii(2, 2, 2, 1);
    CHECK(a.order() == 16);
    CHECK(measured(a) == std::pair<unsigned, unsigned>{4, 2});

    const GHMatrix b = switching_ii(2, 3, 2, 2);
    CHECK(b.order() == 64);
    CHECK(measured(b) == std::pair<unsigned, unsigned>{5, 2});

    CHECK_THROWS_AS((void)switching_ii(2, 2, 1, 1), Error);
    CHECK_THROWS_AS((void)switching_ii(2, 2, 2, 2), Error);  // s > e-1
    CHECK_THROWS_AS((void)switching_ii(2, 1, 2, 1), Error);
}

TEST_CASE("switching II big case over GF(9)") {
    const GHMatrix m = switching_ii(3, 2, 3, 1);
    CHECK(m.order() == 729);
    CHECK(verify_gh(m).ok);
    CHECK(measured(m) == std::pair<unsigned, unsigned>{5, 3});
}

TEST_CASE("switching III: degeneration, invariants, support disjointness") {
    CHECK(switching_iii(2, 3, 2, {2}).entries() == switching_ii(2, 3, 2, 2).entries());

    const GHMatrix a = switching_iii(2, 2, 3, {1, 1});
    CHECK(a.order() == 64);
    CHECK(measured(a) == std::pair<unsigned, unsigned>{6, 2});

    const GHMatrix b = switching_iii(2, 3, 2, {2});
    CHECK(measured(b) == std::pair<unsigned, unsigned>{5, 2});

    CHECK_THROWS_AS((void)switching_iii(2, 2, 3, {1, 1, 1}), Error);  // m > h-1
    CHECK_THROWS_AS((void)switching_iii(2, 2, 3, {}), Error);

    // block vector supports are pairwise disjoint across the (z, j) grid
    auto f = make_field(2, 3);  // q = 8, e = 3 gives j in {1, 2}
    const size_t n = 512;
    std::set<size_t> seen;
    for (unsigned z = 1; z <= 2; ++z)
        for (unsigned j = 1; j <= 2; ++j) {
            const auto g = block_vector(*f, n, z, j);
            size_t qz = 1;
            for (unsigned i = 0; i < z; ++i) qz *= f->q();
            size_t support = 0;
            for (size_t s = 0; s < n; ++s) {
                const bool in_block = s >= j * qz && s < (j + 1) * qz;
                if (!in_block) CHECK(g[s] == 0);
                if (in_block) {
                    CHECK(g[s] == f->idx(unsigned((s - j * qz) / (qz / f->q()))));
                    CHECK(seen.insert(s).second);  // never reused across (z, j)
                    ++support;
                }
            }
            CHECK(support == qz);
        }
}

TEST_CASE("projection construction reproduces the displayed 8x8 matrix") {
    const GHMatrix m = projection_construction(2, 2, 3);
    CHECK(to_ghm(m) == fixtures::proj_8x8_ghm());
    CHECK(verify_gh(m).ok);
    CHECK(m.lambda() == 2);
    const auto rep = invariant_report(m);
    CHECK(rep.c_h.rank_q == 4);
    CHECK(rep.c_h.ker_q == 1);
    CHECK(rep.p_additive);
}

TEST_CASE("projection invariants at larger sizes") {
    const GHMatrix a = projection_construction(2, 2, 4);
    CHECK(a.order() == 16);
    CHECK(measured(a) == std::pair<unsigned, unsigned>{5, 1});

    const GHMatrix b = projection_construction(3, 2, 3);
    CHECK(b.order() == 27);
    CHECK(measured(b) == std::pair<unsigned, unsigned>{4, 1});

    CHECK_THROWS_AS((void)projection_construction(2, 3, 3), Error);  // t > e required
    CHECK_THROWS_AS((void)projection_construction(2, 1, 3), Error);
}

TEST_CASE("gh_p2_one: structure and invariants for p = 3 and p = 5") {
    const GHMatrix m3 = gh_p2_one(3);
    CHECK(m3.order() == 9);
    CHECK(verify_gh(m3).ok);
    CHECK(oracle::naive_gh(m3));
    CHECK(measured(m3) == std::pair<unsigned, unsigned>{3, 1});
    {
        const auto rep = invariant_report(m3);
        CHECK(rep.p_additive);
        CHECK_FALSE(rep.q_linear);
    }
    // rows are lambda*v1 + gamma*v2 in (lambda, gamma) lex order: row p is v1,
    // row 1 is v2, and v2 is the entrywise Frobenius image of w * v1
    const Field& f = *m3.field();
    for (size_t pos = 1; pos < 9; ++pos) {
        CHECK(m3.at(3, pos) == f.exp((long long)pos - 1));
        CHECK(m3.at(1, pos) == f.frobenius(f.mul(f.omega(), m3.at(3, pos))));
    }

    const GHMatrix m5 = gh_p2_one(5);
    CHECK(m5.order() == 25);
    CHECK(verify_gh(m5).ok);
    CHECK(measured(m5) == std::pair<unsigned, unsigned>{3, 1});

    CHECK_THROWS_AS((void)gh_p2_one(2), Error);  // EvenPrime
    CHECK_THROWS_AS((void)gh_p2_one(9), Error);  // NonPrime
}

TEST_CASE("fixed examples") {
    const GHMatrix h8 = fixed_example(FixedId::H8_rank4);
    CHECK(h8.order() == 8);
    CHECK(verify_gh(h8).ok);
    const auto rep8 = invariant_report(h8);
    CHECK(rep8.c_h.rank_q == 4);
    CHECK(rep8.c_h.ker_q == 1);
    CHECK(rep8.p_additive);

    const GHMatrix h81 = fixed_example(FixedId::H81_3);
    CHECK(h81.order() == 81);
    CHECK(verify_gh(h81).ok);
    const auto rep81 = invariant_report(h81);
    CHECK(rep81.c_h.rank_q == 3);
    CHECK(rep81.c_h.ker_q == 1);
    CHECK(rep81.p_additive);

    CHECK(fixed_id_from_name("H81_5") == FixedId::H81_5);
    CHECK_THROWS_AS((void)fixed_id_from_name("nope"), Error);
}

TEST_CASE("H81_5: order 625 verification" * doctest::timeout(300)) {
    const GHMatrix m = fixed_example(FixedId::H81_5);
    CHECK(m.order() == 625);
    CHECK(verify_gh(m).ok);
    // F_H is additive by construction; C_H additivity follows since the
    // constant words form an F_p-space. Check F_H directly (C_H would blow the
    // cell budget).
    const Code f_h = Code::from_flat(m.field(), m.order(), m.entries());
    CHECK(f_h.size() == 625);
    CHECK(f_h.is_p_additive());
}

TEST_CASE("every construction output passes verify_gh and is p-additive") {
    const std::vector<GHMatrix> all = {
        sylvester(make_field(2, 2), 2), switching_i(2, 2),       switching_ii(2, 2, 2, 1),
        switching_iii(2, 2, 3, {1, 1}), projection_construction(2, 2, 4),
        gh_p2_one(3),                   fixed_example(FixedId::H8_rank4),
    };
    for (const auto& m : all) {
        CHECK(verify_gh(m).ok);
        CHECK(m.first_row_col_zero());
        const auto codes = extract_codes(m);
        CHECK(codes.c_h.is_p_additive());
    }
}
