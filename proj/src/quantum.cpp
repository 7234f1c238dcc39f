#include "ghc/quantum.hpp"

#include <algorithm>

#include <json.hpp>

namespace ghc {

namespace {

void require_degree_two(const Field& f) {
    if (f.e() != 2) fail(Errc::DegreeNotTwo, "inner products are defined over GF(p^2) only");
}

felt_t beta_scale(const Field& f) {
    if (f.p() == 2) return 1;
    return f.exp((f.p() + 1) / 2);  // beta = w^{(p+1)/2}, satisfies beta^p = -beta
}

}  // namespace

felt_t additive_inner(const Field& f, std::span<const felt_t> v, std::span<const felt_t> w) {
    require_degree_two(f);
    if (v.size() != w.size()) fail(Errc::SizeMismatch, "inner product length mismatch");
    felt_t acc = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        const felt_t wp = f.frobenius(w[i]);
        const felt_t vp = f.frobenius(v[i]);
        acc = f.add(acc, f.sub(f.mul(v[i], wp), f.mul(vp, w[i])));
    }
    acc = f.mul(beta_scale(f), acc);
    if (f.frobenius(acc) != acc)
        fail(Errc::VerificationFailed, "additive inner product left the prime subfield");
    return acc;
}

felt_t hermitian_inner(const Field& f, std::span<const felt_t> v, std::span<const felt_t> w) {
    require_degree_two(f);
    if (v.size() != w.size()) fail(Errc::SizeMismatch, "inner product length mismatch");
    felt_t acc = 0;
    for (size_t i = 0; i < v.size(); ++i) acc = f.add(acc, f.mul(v[i], f.frobenius(w[i])));
    return acc;
}

RowOrthReport row_orthogonality_check(const GHMatrix& m) {
    const Field& f = *m.field();
    require_degree_two(f);
    const size_t n = m.order();
    const felt_t lambda_parity = felt_t(m.lambda() % 2);  // p = 2 case
    auto is_zero_row = [&](size_t i) {
        const auto r = m.row(i);
        return std::all_of(r.begin(), r.end(), [](felt_t x) { return x == 0; });
    };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) {
            const felt_t val = additive_inner(f, m.row(i), m.row(j));
            felt_t expected = 0;
            // The lambda-parity value needs full-weight rows; a zero row (the
            // first row of a normalized matrix) pairs to 0 with everything.
            if (f.p() == 2 && i != j && !is_zero_row(i) && !is_zero_row(j))
                expected = lambda_parity;
            if (val != expected) return {false, i, j, val, expected};
        }
    return {};
}

bool is_self_orthogonal(const Code& c) {
    const Field& f = *c.field();
    require_degree_two(f);
    if (!c.is_p_additive()) fail(Errc::NotAdditive, "self-orthogonality needs a p-additive code");
    const auto gens = additive_generators(c);
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i; j < gens.size(); ++j)
            if (additive_inner(f, gens[i], gens[j]) != 0) return false;
    return true;
}

namespace {

// Inner product of a sparse word (given by support) against a dense one.
felt_t sparse_inner(const Field& f, std::span<const size_t> pos, std::span<const felt_t> val,
                    std::span<const felt_t> w, felt_t beta) {
    felt_t acc = 0;
    for (size_t s = 0; s < pos.size(); ++s) {
        const felt_t v = val[s];
        const felt_t wi = w[pos[s]];
        acc = f.add(acc, f.sub(f.mul(v, f.frobenius(wi)), f.mul(f.frobenius(v), wi)));
    }
    return f.mul(beta, acc);
}

}  // namespace

DualScanResult dual_low_weight_scan(const Code& c, unsigned wmax) {
    const Field& f = *c.field();
    require_degree_two(f);
    if (!c.is_p_additive()) fail(Errc::NotAdditive, "dual scan needs a p-additive code");
    if (wmax > 2) fail(Errc::ParamRange, "only weights up to 2 are scanned");
    const size_t n = c.length();
    const unsigned q = f.q();
    const size_t w1 = n * (q - 1);
    const size_t w2 = wmax >= 2 ? n * (n - 1) / 2 * size_t(q - 1) * (q - 1) : 0;
    if (n > 700 || w1 + w2 > 200'000'000)
        fail(Errc::BudgetExceeded, "dual scan candidate space too large (n = " + std::to_string(n) + ")");

    const auto gens = additive_generators(c);
    const felt_t beta = beta_scale(f);
    DualScanResult out;

    auto consider = [&](std::span<const size_t> pos, std::span<const felt_t> val) {
        ++out.candidates;
        for (const auto& g : gens)
            if (sparse_inner(f, pos, val, g, beta) != 0) return;
        std::vector<felt_t> word(n, 0);
        for (size_t s = 0; s < pos.size(); ++s) word[pos[s]] = val[s];
        if (!c.contains(word)) out.words.push_back(std::move(word));
    };

    for (size_t i = 0; i < n; ++i)
        for (felt_t a = 1; a < q; ++a) {
            const size_t pos[1] = {i};
            const felt_t val[1] = {a};
            consider(pos, val);
        }
    if (wmax >= 2)
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j)
                for (felt_t a = 1; a < q; ++a)
                    for (felt_t b = 1; b < q; ++b) {
                        const size_t pos[2] = {i, j};
                        const felt_t val[2] = {a, b};
                        consider(pos, val);
                    }
    return out;
}

QuantumReport quantum_report(const GHMatrix& m, size_t max_cells) {
    const Field& f = *m.field();
    require_degree_two(f);
    const size_t n = m.order();
    if (f.p() == 2 && m.lambda() % 2 != 0)
        fail(Errc::PreconditionFailed, "p = 2 requires even lambda");

    unsigned t = 0;
    {
        size_t v = 1;
        while (v < n) {
            v *= f.p();
            ++t;
        }
        if (v != n) fail(Errc::PreconditionFailed, "order is not a power of p");
    }

    const size_t cells = size_t(f.q()) * n * n;
    if (cells > max_cells)
        fail(Errc::BudgetExceeded, "|C_H| * n exceeds the cell budget");

    auto [f_h, c_h] = extract_codes(m);
    if (!c_h.is_p_additive()) fail(Errc::PreconditionFailed, "C_H is not p-additive");

    size_t expect = size_t(f.p()) * f.p();  // p^{t+2}
    for (unsigned i = 0; i < t; ++i) expect *= f.p();
    if (c_h.size() != expect)
        fail(Errc::VerificationFailed, "|C_H| != p^{t+2}");

    QuantumReport rep;
    rep.n = n;
    rep.k = Frac::of(2 * (long long)n - (t + 2), 2).reduced();
    rep.q = f.q();
    rep.self_orthogonal = is_self_orthogonal(c_h);
    if (!rep.self_orthogonal)
        fail(Errc::VerificationFailed, "C_H is not self-orthogonal under the additive product");
    rep.generators = additive_generators(c_h);

    bool scanned = false;
    if (n <= 700) {
        const auto scan = dual_low_weight_scan(c_h, 2);
        if (!scan.words.empty())
            fail(Errc::VerificationFailed, "found a weight <= 2 word in C_H-perp \\ C_H");
        scanned = true;
    }
    rep.dual_scan = scanned ? "empty" : "skipped";
    return rep;
}

std::string QuantumReport::params_string() const {
    return "[[" + std::to_string(n) + ", " + k.str() + ", 3]]_" + std::to_string(q);
}

std::string QuantumReport::to_json_string() const {
    nlohmann::ordered_json j;
    const Frac kr = k.reduced();
    j["n"] = n;
    j["k"] = {kr.num, kr.den};
    j["d"] = d;
    j["q"] = q;
    j["self_orthogonal"] = self_orthogonal;
    j["dual_scan"] = dual_scan;
    return j.dump();
}

}  // namespace ghc
