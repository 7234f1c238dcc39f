#include "ghc/invariants.hpp"

#include <cstdlib>

#include <json.hpp>

#include "ghc/linalg.hpp"

namespace ghc {

unsigned rank_q(const Code& c) {
    if (c.size() == 0) fail(Errc::ZeroNotInCode, "empty code");
    linalg::FqBasis basis(c.field(), c.length());
    for (size_t i = 0; i < c.size(); ++i) basis.insert(c.word(i));
    return unsigned(basis.dim());
}

Frac rank_p(const Code& c) {
    if (c.size() == 0) fail(Errc::ZeroNotInCode, "empty code");
    linalg::FpBasis basis(c.field(), c.length());
    for (size_t i = 0; i < c.size(); ++i) basis.insert_word(c.word(i));
    return Frac::of((long long)basis.dim(), c.field()->e());
}

std::vector<std::vector<felt_t>> additive_generators(const Code& c) {
    linalg::FpBasis basis(c.field(), c.length());
    for (size_t i = 0; i < c.size(); ++i) basis.insert_word(c.word(i));
    return basis.word_basis();
}

Classification classify(const Code& c) {
    if (!c.contains_zero()) fail(Errc::ZeroNotInCode, "classify requires the zero word");
    return {c.is_p_additive(), c.is_q_linear()};
}

namespace {

void require_zero(const Code& c) {
    if (!c.contains_zero()) fail(Errc::ZeroNotInCode, "kernel requires the zero word in C");
}

std::vector<felt_t> scale_word(const Field& f, std::span<const felt_t> w, felt_t mu) {
    std::vector<felt_t> out(w.size());
    for (size_t i = 0; i < w.size(); ++i) out[i] = f.mul(mu, w[i]);
    return out;
}

}  // namespace

Code kernel_q_via_scalar_closure(const Code& c) {
    require_zero(c);
    if (!c.is_p_additive())
        fail(Errc::NotAdditive, "scalar-closure kernel shortcut needs a p-additive code");
    const Field& f = *c.field();
    std::vector<felt_t> flat;
    for (size_t i = 0; i < c.size(); ++i) {
        const auto w = c.word(i);
        bool in_kernel = true;
        for (unsigned mu = 0; mu < f.q() && in_kernel; ++mu)
            if (!c.contains(scale_word(f, w, felt_t(mu)))) in_kernel = false;
        if (in_kernel) flat.insert(flat.end(), w.begin(), w.end());
    }
    return Code::from_flat(c.field(), c.length(), std::move(flat));
}

Code kernel_q_via_coset_test(const Code& c) {
    require_zero(c);
    const Field& f = *c.field();
    std::vector<felt_t> flat;
    std::vector<felt_t> shifted(c.length());
    for (size_t i = 0; i < c.size(); ++i) {
        const auto x = c.word(i);
        bool in_kernel = true;
        for (unsigned alpha = 0; alpha < f.q() && in_kernel; ++alpha) {
            const auto ax = scale_word(f, x, felt_t(alpha));
            for (size_t wi = 0; wi < c.size(); ++wi) {
                const auto w = c.word(wi);
                for (size_t s = 0; s < c.length(); ++s) shifted[s] = f.add(ax[s], w[s]);
                if (!c.contains(shifted)) {
                    in_kernel = false;
                    break;
                }
            }
        }
        if (in_kernel) flat.insert(flat.end(), x.begin(), x.end());
    }
    return Code::from_flat(c.field(), c.length(), std::move(flat));
}

Code kernel_q(const Code& c) {
    require_zero(c);
    return c.is_p_additive() ? kernel_q_via_scalar_closure(c) : kernel_q_via_coset_test(c);
}

Code kernel_p_via_coset_test(const Code& c) {
    require_zero(c);
    const Field& f = *c.field();
    std::vector<felt_t> flat;
    std::vector<felt_t> shifted(c.length());
    for (size_t i = 0; i < c.size(); ++i) {
        const auto x = c.word(i);
        bool in_kernel = true;
        for (size_t wi = 0; wi < c.size(); ++wi) {
            const auto w = c.word(wi);
            for (size_t s = 0; s < c.length(); ++s) shifted[s] = f.add(x[s], w[s]);
            if (!c.contains(shifted)) {
                in_kernel = false;
                break;
            }
        }
        if (in_kernel) flat.insert(flat.end(), x.begin(), x.end());
    }
    return Code::from_flat(c.field(), c.length(), std::move(flat));
}

Code kernel_p(const Code& c) {
    require_zero(c);
    if (c.is_p_additive()) return c;
    return kernel_p_via_coset_test(c);
}

unsigned dim_q_of_size(const Field& f, size_t size) {
    unsigned k = 0;
    size_t v = 1;
    while (v < size) {
        v *= f.q();
        ++k;
    }
    if (v != size) fail(Errc::VerificationFailed, "set size is not a power of q");
    return k;
}

unsigned dim_p_of_size(const Field& f, size_t size) {
    unsigned k = 0;
    size_t v = 1;
    while (v < size) {
        v *= f.p();
        ++k;
    }
    if (v != size) fail(Errc::VerificationFailed, "set size is not a power of p");
    return k;
}

size_t default_cell_budget() {
    if (const char* env = std::getenv("GHC_MAX_CELLS")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return size_t(v);
    }
    return 100'000'000;
}

namespace {

InvariantReport::Side measure(const Code& code) {
    InvariantReport::Side s;
    s.rank_q = rank_q(code);
    s.rank_p = rank_p(code);
    const Code kq = kernel_q(code);
    const Code kp = kernel_p(code);
    s.ker_q = dim_q_of_size(*code.field(), kq.size());
    s.ker_p = Frac::of(dim_p_of_size(*code.field(), kp.size()), code.field()->e());
    return s;
}

void check(bool cond, const std::string& what) {
    if (!cond) fail(Errc::VerificationFailed, what);
}

}  // namespace

InvariantReport invariant_report(const GHMatrix& m, size_t max_cells) {
    const Field& f = *m.field();
    const size_t n = m.order();
    const size_t cells = size_t(f.q()) * n * n;
    if (cells > max_cells)
        fail(Errc::BudgetExceeded, "|C_H| * n = " + std::to_string(cells) +
                                       " exceeds the cell budget " + std::to_string(max_cells));

    auto [f_h, c_h] = extract_codes(m);

    InvariantReport r;
    r.p = f.p();
    r.e = f.e();
    r.n = n;
    r.lambda = m.lambda();
    r.f_h = measure(f_h);
    r.c_h = measure(c_h);
    const auto cls = classify(c_h);
    r.p_additive = cls.p_additive;
    r.q_linear = cls.q_linear;

    check(r.c_h.rank_q == r.f_h.rank_q + 1, "rank(C_H) = rank(F_H) + 1 failed");
    check(r.c_h.ker_q == r.f_h.ker_q + 1, "ker(C_H) = ker(F_H) + 1 failed");
    check(r.c_h.ker_q >= 1, "ker(C_H) >= 1 failed");
    check((long long)r.c_h.rank_q * f.e() >= r.c_h.rank_p.num,
          "e * rank_q >= rank_p consistency failed");

    if (r.p_additive && f.e() > 1) {
        // length must be p^t with lambda a power of p, and rank_p = ker_p = 1 + t/e
        const unsigned t = dim_p_of_size(f, n);
        check(r.c_h.rank_p == Frac::of(f.e() + t, f.e()), "additive rank_p = 1 + t/e failed");
        check(r.c_h.ker_p == Frac::of(f.e() + t, f.e()), "additive ker_p = 1 + t/e failed");
        const unsigned k = r.c_h.ker_q;
        const unsigned rq = r.c_h.rank_q;
        if (r.q_linear) {
            check(t % f.e() == 0 && k == 1 + t / f.e() && rq == k,
                  "linear case rank = ker = 1 + t/e failed");
        } else {
            check(k <= t / f.e(), "ker(C_H) <= floor(t/e) failed");
            check((f.e() + t - k + f.e() - 2) / (f.e() - 1) <= rq, "rank lower bound failed");
            check(rq <= 1 + t - (f.e() - 1) * (k - 1), "rank upper bound failed");
        }
    }
    return r;
}

std::string InvariantReport::to_json_string() const {
    nlohmann::ordered_json j;
    j["matrix"] = {{"p", p}, {"e", e}, {"n", n}, {"lambda", lambda}};
    auto side = [](const Side& s) {
        return nlohmann::ordered_json{{"rank_q", s.rank_q},
                                      {"ker_q", s.ker_q},
                                      {"rank_p", {s.rank_p.num, s.rank_p.den}},
                                      {"ker_p", {s.ker_p.num, s.ker_p.den}}};
    };
    j["F_H"] = side(f_h);
    j["C_H"] = side(c_h);
    j["is_p_additive"] = p_additive;
    j["is_q_linear"] = q_linear;
    return j.dump();
}

}  // namespace ghc
