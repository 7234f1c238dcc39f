#include "ghc/search.hpp"

#include <algorithm>
#include <chrono>

#include "ghc/linalg.hpp"

namespace ghc {

namespace {

using Clock = std::chrono::steady_clock;

struct Searcher {
    const Field& f;
    unsigned q, p, e;
    std::optional<unsigned> target_fh_rank;  // rank of F_H = target_rank - 1
    unsigned long long node_limit;
    Clock::time_point deadline;
    const ProgressFn& progress;

    unsigned long long nodes = 0;
    bool budget_hit = false;
    std::vector<std::vector<felt_t>> gens;  // g_1 fixed, then DFS
    std::vector<GHMatrix> found;
    FieldPtr field_ptr;

    Searcher(FieldPtr fp, std::optional<unsigned> target, const SearchBudget& budget,
             const ProgressFn& prog)
        : f(*fp),
          q(fp->q()),
          p(fp->p()),
          e(fp->e()),
          node_limit(budget.node_limit),
          deadline(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                      std::chrono::duration<double>(budget.seconds))),
          progress(prog),
          field_ptr(std::move(fp)) {
        if (target) target_fh_rank = *target - 1;
    }

    bool tick() {
        ++nodes;
        if ((nodes & 0xFFFFF) == 0) {
            if (progress) progress(nodes, found.size());
            if (Clock::now() > deadline) budget_hit = true;
        }
        if (nodes >= node_limit) budget_hit = true;
        return !budget_hit;
    }

    // All F_p-combinations of the current generators (the coset shifts a new
    // generator must respect), zero combination first.
    std::vector<std::vector<felt_t>> combo_bases() const {
        std::vector<std::vector<felt_t>> bases{std::vector<felt_t>(q, 0)};
        for (const auto& g : gens) {
            const size_t sz = bases.size();
            for (unsigned c = 1; c < p; ++c)
                for (size_t i = 0; i < sz; ++i) {
                    std::vector<felt_t> w = bases[i];
                    for (unsigned pos = 0; pos < q; ++pos)
                        w[pos] = f.add(w[pos], f.mul(felt_t(c), g[pos]));
                    bases.push_back(std::move(w));
                }
        }
        return bases;
    }

    // A nonzero word of F_H must be a permutation of F_q with its zero first.
    bool is_perm_word(const std::vector<felt_t>& w) const {
        if (w[0] != 0) return false;
        unsigned seen = 0;
        for (unsigned pos = 1; pos < q; ++pos) {
            if (w[pos] == 0) return false;
            const unsigned bit = 1u << w[pos];
            if (seen & bit) return false;
            seen |= bit;
        }
        return true;
    }

    bool coset_minimal(const std::vector<felt_t>& g,
                       const std::vector<std::vector<felt_t>>& bases) const {
        std::vector<felt_t> w(q);
        for (size_t c = 1; c < bases.size(); ++c) {
            for (unsigned pos = 0; pos < q; ++pos) w[pos] = f.add(g[pos], bases[c][pos]);
            if (std::lexicographical_compare(w.begin(), w.end(), g.begin(), g.end())) return false;
        }
        return true;
    }

    unsigned span_dim_q() const {
        linalg::FqBasis basis(field_ptr, q);
        for (const auto& g : gens) basis.insert(g);
        return unsigned(basis.dim());
    }

    void emit_solution() {
        if (target_fh_rank && span_dim_q() != *target_fh_rank) return;
        std::vector<std::vector<felt_t>> rows = combo_bases();
        std::sort(rows.begin(), rows.end());
        rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
        if (rows.size() != q) return;  // dependent generators cannot happen; guard anyway
        std::vector<felt_t> flat;
        flat.reserve(size_t(q) * q);
        for (const auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
        found.emplace_back(field_ptr, q, std::move(flat));
    }

    void next_generator(unsigned m) {
        if (budget_hit) return;
        if (m > e) {
            emit_solution();
            return;
        }
        const auto bases = combo_bases();
        // When the target F_q-dimension is already reached, remaining
        // generators must come from the current F_q-span.
        if (target_fh_rank) {
            linalg::FqBasis basis(field_ptr, q);
            for (const auto& g : gens) basis.insert(g);
            if (basis.dim() > *target_fh_rank) return;
            if (basis.dim() == *target_fh_rank) {
                enumerate_span_generators(m, basis, bases);
                return;
            }
        }
        std::vector<felt_t> g(q, 0);
        std::vector<unsigned> used(bases.size(), 0);  // value bitmask per combination
        dfs_positions(m, 1, g, used, bases);
    }

    void dfs_positions(unsigned m, unsigned pos, std::vector<felt_t>& g,
                       std::vector<unsigned>& used, const std::vector<std::vector<felt_t>>& bases) {
        if (budget_hit) return;
        if (pos == q) {
            finish_generator(m, g, bases);
            return;
        }
        for (felt_t v = 1; v < q; ++v) {
            if (!tick()) return;
            bool ok = true;
            for (size_t c = 0; c < bases.size(); ++c) {
                const felt_t w = f.add(v, bases[c][pos]);
                if (w == 0 || (used[c] & (1u << w))) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            for (size_t c = 0; c < bases.size(); ++c) used[c] |= 1u << f.add(v, bases[c][pos]);
            g[pos] = v;
            dfs_positions(m, pos + 1, g, used, bases);
            for (size_t c = 0; c < bases.size(); ++c) used[c] &= ~(1u << f.add(v, bases[c][pos]));
            g[pos] = 0;
            if (budget_hit) return;
        }
    }

    void finish_generator(unsigned m, const std::vector<felt_t>& g,
                          const std::vector<std::vector<felt_t>>& bases) {
        if (!coset_minimal(g, bases)) return;
        if (g <= gens.back()) return;
        gens.push_back(g);
        next_generator(m + 1);
        gens.pop_back();
    }

    void enumerate_span_generators(unsigned m, const linalg::FqBasis& basis,
                                   const std::vector<std::vector<felt_t>>& bases) {
        const auto& rows = basis.rows();
        const unsigned d = unsigned(rows.size());
        std::vector<unsigned> coef(d, 0);
        std::vector<felt_t> w(q);
        while (true) {
            if (!tick()) return;
            std::fill(w.begin(), w.end(), 0);
            for (unsigned i = 0; i < d; ++i)
                if (coef[i] != 0)
                    for (unsigned pos = 0; pos < q; ++pos)
                        w[pos] = f.add(w[pos], f.mul(felt_t(coef[i]), rows[i][pos]));
            if (is_perm_word(w) && all_combos_perm(w, bases)) finish_generator(m, w, bases);
            if (budget_hit) return;
            unsigned i = 0;
            while (i < d && ++coef[i] == q) coef[i++] = 0;
            if (i == d) return;
        }
    }

    bool all_combos_perm(const std::vector<felt_t>& g,
                         const std::vector<std::vector<felt_t>>& bases) const {
        std::vector<felt_t> w(q);
        for (size_t c = 1; c < bases.size(); ++c) {
            for (unsigned pos = 0; pos < q; ++pos) w[pos] = f.add(g[pos], bases[c][pos]);
            if (!is_perm_word(w)) return false;
        }
        return true;
    }
};

}  // namespace

SearchResult search_additive_gh(const SearchSpec& spec, const ProgressFn& progress) {
    if (!spec.field) fail(Errc::ParamRange, "search needs a field");
    if (spec.lambda != 1)
        fail(Errc::UnsupportedLambda, "only lambda = 1 searches are supported");
    const unsigned q = spec.field->q();
    if (q > 31) fail(Errc::ParamRange, "search supports q <= 31");
    if (q > 9 && !spec.allow_incomplete)
        fail(Errc::ParamRange,
             "q > 9 exhaustive searches need the explicit incomplete-search flag");
    if (spec.target_rank && (*spec.target_rank < 2 || *spec.target_rank > spec.field->e() + 1))
        fail(Errc::ParamRange, "target rank must lie in 2..e+1");

    Searcher s(spec.field, spec.target_rank, spec.budget, progress);
    // Canonical first generator: the identity arrangement (0, 1, w, ..., w^{q-2}).
    std::vector<felt_t> g1(q);
    for (unsigned pos = 0; pos < q; ++pos) g1[pos] = s.f.idx(pos);
    s.gens.push_back(std::move(g1));
    s.next_generator(2);
    if (progress) progress(s.nodes, s.found.size());

    SearchResult out;
    out.matrices = std::move(s.found);
    out.complete = !s.budget_hit;
    out.nodes = s.nodes;
    return out;
}

}  // namespace ghc
