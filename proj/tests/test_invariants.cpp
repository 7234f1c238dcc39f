#include <doctest.h>

#include "ghc/constructions.hpp"
#include "ghc/invariants.hpp"
#include "oracles.hpp"

using namespace ghc;

namespace {

std::vector<std::vector<felt_t>> words_of(const Code& c) {
    std::vector<std::vector<felt_t>> out;
    for (size_t i = 0; i < c.size(); ++i) out.emplace_back(c.word(i).begin(), c.word(i).end());
    return out;
}

// A GH matrix whose C_H is not additive: Kronecker sum with mixed B blocks,
// one of them column-permuted.
GHMatrix mixed_kron() {
    const GHMatrix s = sylvester(make_field(2, 2), 1);
    const GHMatrix twisted = permute_cols(s, {0, 1, 3, 2});
    return kronecker_sum(s, std::vector<GHMatrix>{s, twisted, s, s});
}

}  // namespace

TEST_CASE("rank_q on paper examples and the zero code") {
    const GHMatrix s2 = sylvester(make_field(2, 2), 2);
    const auto codes = extract_codes(s2);
    CHECK(rank_q(codes.c_h) == 3);

    const auto sw1 = extract_codes(from_ghm(fixtures::sw1_16x16_ghm()));
    CHECK(rank_q(sw1.c_h) == 4);

    const Code zero = Code::from_words(make_field(2, 2), 4, {{0, 0, 0, 0}});
    CHECK(rank_q(zero) == 0);
    CHECK(rank_p(zero) == Frac::of(0, 2));
}

TEST_CASE("rank_q agrees with the span-closure oracle") {
    for (const GHMatrix& m : {sylvester(make_field(2, 2), 1), from_ghm(fixtures::proj_8x8_ghm()),
                              gh_p2_one(3), mixed_kron()}) {
        const auto codes = extract_codes(m);
        const unsigned r = rank_q(codes.f_h);
        const size_t span = oracle::span_size_q(*m.field(), words_of(codes.f_h));
        size_t expect = 1;
        for (unsigned i = 0; i < r; ++i) expect *= m.field()->q();
        CHECK(span == expect);
    }
}

TEST_CASE("rank_p values in q-units") {
    const auto sw1 = extract_codes(from_ghm(fixtures::sw1_16x16_ghm()));
    CHECK(rank_p(sw1.c_h) == Frac::of(6, 2));  // 1 + t/e = 3
    const auto proj = extract_codes(from_ghm(fixtures::proj_8x8_ghm()));
    CHECK(rank_p(proj.c_h) == Frac::of(5, 2));  // 2.5
    CHECK(rank_p(proj.c_h).str() == "2.5");
}

TEST_CASE("kernels: linear codes, the switching fixture, and gh_p2_one") {
    const auto s2 = extract_codes(sylvester(make_field(2, 2), 2));
    CHECK(kernel_q(s2.c_h) == s2.c_h);  // kernel of a linear code is the code

    const auto sw1 = extract_codes(from_ghm(fixtures::sw1_16x16_ghm()));
    const Code k = kernel_q(sw1.c_h);
    CHECK(dim_q_of_size(*sw1.c_h.field(), k.size()) == 2);

    const auto p9 = extract_codes(gh_p2_one(3));
    CHECK(dim_q_of_size(*p9.c_h.field(), kernel_q(p9.c_h).size()) == 1);
}

TEST_CASE("kernel output is linear and sits inside the containment chain") {
    for (const GHMatrix& m :
         {from_ghm(fixtures::sw1_16x16_ghm()), gh_p2_one(3), mixed_kron()}) {
        const auto codes = extract_codes(m);
        const Code k = kernel_q(codes.c_h);
        const Code kp = kernel_p(codes.c_h);
        const Field& f = *m.field();
        // K(C) closed under addition and scalars
        for (size_t i = 0; i < k.size(); ++i)
            for (size_t j = 0; j < k.size(); ++j) {
                std::vector<felt_t> sum(k.length());
                for (size_t s = 0; s < k.length(); ++s)
                    sum[s] = f.add(k.word(i)[s], k.word(j)[s]);
                CHECK(k.contains(sum));
            }
        for (size_t i = 0; i < k.size(); ++i)
            for (unsigned c = 0; c < f.q(); ++c) {
                std::vector<felt_t> cw(k.length());
                for (size_t s = 0; s < k.length(); ++s) cw[s] = f.mul(felt_t(c), k.word(i)[s]);
                CHECK(k.contains(cw));
            }
        // K(C) subset K_p(C) subset C
        for (size_t i = 0; i < k.size(); ++i) CHECK(kp.contains(k.word(i)));
        for (size_t i = 0; i < kp.size(); ++i) CHECK(codes.c_h.contains(kp.word(i)));
    }
}

TEST_CASE("kernel fast path equals the coset-definition oracle") {
    for (const GHMatrix& m : {sylvester(make_field(2, 2), 2), from_ghm(fixtures::sw1_16x16_ghm()),
                              from_ghm(fixtures::proj_8x8_ghm()), gh_p2_one(3)}) {
        const auto codes = extract_codes(m);
        REQUIRE(codes.c_h.is_p_additive());
        CHECK(kernel_q_via_scalar_closure(codes.c_h) == kernel_q_via_coset_test(codes.c_h));
    }
}

TEST_CASE("p-kernel: additive codes, an F_p-line, and a non-additive code") {
    const auto sw1 = extract_codes(from_ghm(fixtures::sw1_16x16_ghm()));
    CHECK(kernel_p(sw1.c_h) == sw1.c_h);

    auto f9 = make_field(3, 2);
    const Code line = Code::from_words(
        f9, 3, {{0, 0, 0}, {1, 2, 0}, {2, 1, 0}});  // {0, v, 2v}
    CHECK(kernel_p(line) == line);

    const auto mk = extract_codes(mixed_kron());
    CHECK_FALSE(mk.c_h.is_p_additive());
    const Code kp = kernel_p(mk.c_h);
    CHECK(kp.size() < mk.c_h.size());                       // strict subset
    CHECK(kp == kernel_p_via_coset_test(mk.c_h));           // brute-force route
    (void)dim_p_of_size(*mk.c_h.field(), kp.size());        // group of p-power order
}

TEST_CASE("classify flags") {
    const auto s = extract_codes(sylvester(make_field(2, 2), 1));
    const auto cs = classify(s.c_h);
    CHECK(cs.p_additive);
    CHECK(cs.q_linear);

    const auto proj = extract_codes(from_ghm(fixtures::proj_8x8_ghm()));
    const auto cp = classify(proj.c_h);
    CHECK(cp.p_additive);
    CHECK_FALSE(cp.q_linear);
    CHECK(oracle::naive_additive(proj.c_h));

    const auto mk = extract_codes(mixed_kron());
    const auto cm = classify(mk.c_h);
    CHECK_FALSE(cm.p_additive);
    CHECK_FALSE(cm.q_linear);
    CHECK_FALSE(oracle::naive_additive(mk.c_h));
}

TEST_CASE("invariant_report on the reference matrices") {
    const auto r1 = invariant_report(sylvester(make_field(2, 2), 2));
    CHECK(r1.c_h.rank_q == 3);
    CHECK(r1.c_h.ker_q == 3);
    CHECK(r1.q_linear);
    CHECK(r1.c_h.rank_p.num % r1.e == 0);  // F_q-linear span has integral q-dimension

    const auto r2 = invariant_report(from_ghm(fixtures::proj_8x8_ghm()));
    CHECK(r2.c_h.rank_q == 4);
    CHECK(r2.c_h.ker_q == 1);
    CHECK(r2.c_h.rank_p == Frac::of(5, 2));
    CHECK(r2.c_h.ker_p == Frac::of(5, 2));
    CHECK(r2.p_additive);

    const auto r3 = invariant_report(from_ghm(fixtures::h8_rank4_ghm()));
    CHECK(r3.c_h.rank_q == 4);
    CHECK(r3.c_h.ker_q == 1);

    // relations between F_H and C_H come back checked
    CHECK(r2.c_h.rank_q == r2.f_h.rank_q + 1);
    CHECK(r2.c_h.ker_q == r2.f_h.ker_q + 1);
}

TEST_CASE("invariant_report respects the cell budget") {
    CHECK_THROWS_AS((void)invariant_report(sylvester(make_field(2, 2), 2), 100), Error);
}

TEST_CASE("report JSON shape") {
    const auto rep = invariant_report(from_ghm(fixtures::proj_8x8_ghm()));
    const std::string js = rep.to_json_string();
    CHECK(js.find("\"matrix\":{\"p\":2,\"e\":2,\"n\":8,\"lambda\":2}") != std::string::npos);
    CHECK(js.find("\"rank_p\":[5,2]") != std::string::npos);
    CHECK(js.find("\"is_p_additive\":true") != std::string::npos);
}
