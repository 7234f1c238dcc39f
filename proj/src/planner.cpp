#include "ghc/planner.hpp"

#include <algorithm>
#include <tuple>

#include "ghc/constructions.hpp"
#include "ghc/invariants.hpp"
#include "ghc/rational.hpp"

namespace ghc {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Impossible: return "impossible";
        case Verdict::Constructible: return "constructible";
        case Verdict::OpenUnknown: return "open";
    }
    return "?";
}

std::vector<unsigned> admissible_kernels(unsigned p, unsigned e, unsigned t) {
    if (!is_prime(p)) fail(Errc::NonPrime, "p must be prime");
    if (e < 2 || t < e) fail(Errc::ParamRange, "admissible kernels need e > 1 and t >= e");
    std::vector<unsigned> ks;
    for (unsigned k = 1; k <= t / e; ++k) ks.push_back(k);
    if (t % e == 0) ks.push_back(1 + t / e);
    return ks;
}

std::pair<unsigned, unsigned> rank_bounds(unsigned e, unsigned t, unsigned k) {
    if (e < 2 || t < e) fail(Errc::ParamRange, "rank bounds need e > 1 and t >= e");
    const bool linear = (t % e == 0) && k == 1 + t / e;
    if (!linear && (k < 1 || k > t / e))
        fail(Errc::InadmissibleKernel, "k = " + std::to_string(k) + " is not admissible");
    if (linear) return {k, k};
    const unsigned lo = (e + t - k + e - 2) / (e - 1);  // ceil((e+t-k)/(e-1))
    const unsigned hi = 1 + t - (e - 1) * (k - 1);
    return {lo, hi};
}

namespace {

bool kernel_admissible(unsigned e, unsigned t, unsigned k) {
    if (k >= 1 && k <= t / e) return true;
    return (t % e == 0) && k == 1 + t / e;
}

// Padding-free recipe helpers -------------------------------------------------

std::vector<unsigned> switching_s_list(unsigned e, unsigned h, unsigned k, unsigned r) {
    // m rounds, sum of s_z = r - h - 1, each in 1..e-1; greedy from the front.
    const unsigned m = h - k + 1;
    unsigned rest = r - h - 1;
    std::vector<unsigned> s(m, 1);
    rest -= m;
    for (unsigned z = 0; z < m && rest > 0; ++z) {
        const unsigned extra = std::min(rest, e - 2);
        s[z] += extra;
        rest -= extra;
    }
    return s;
}

RecipePtr max_rank_recipe(unsigned p, unsigned e, unsigned t, unsigned k) {
    if (k == 1) return Recipe::projection(p, e, t);
    if (t % e == 0) {
        const unsigned h = t / e;
        return Recipe::switch_iii(p, e, h,
                                  std::vector<unsigned>(size_t(h - k + 1), e - 1));
    }
    return Recipe::kron(Recipe::sylvester(p, e, 1), max_rank_recipe(p, e, t - e, k - 1));
}

RecipePtr fixed_chain_recipe(unsigned p, unsigned e, unsigned t, unsigned a) {
    RecipePtr r = Recipe::fixed_example(p == 3 ? FixedId::H81_3 : FixedId::H81_5);
    for (unsigned i = 1; i < a; ++i)
        r = Recipe::kron(Recipe::fixed_example(p == 3 ? FixedId::H81_3 : FixedId::H81_5), r);
    if (t > 4 * a) r = Recipe::kron(r, Recipe::projection(p, e, t - 4 * a));
    return r;
}

}  // namespace

Verdict generic_verdict(unsigned e, unsigned t, unsigned r, unsigned k) {
    if (e < 2 || t < e) fail(Errc::ParamRange, "need e > 1 and t >= e");
    if (!kernel_admissible(e, t, k)) return Verdict::Impossible;
    const auto [lo, hi] = rank_bounds(e, t, k);
    if (r < lo || r > hi) return Verdict::Impossible;
    if ((t % e == 0) && k == 1 + t / e) return Verdict::Constructible;  // Sylvester
    if (t == e) {
        // k = 1 here; only e = 2 has a general minimum-rank construction.
        return e == 2 ? Verdict::Constructible : Verdict::OpenUnknown;
    }
    if (r == hi) return Verdict::Constructible;  // max-rank theorem, any admissible k
    if (k == 1) return Verdict::OpenUnknown;
    const unsigned h = t / e;
    if (t % e == 0) return r >= 2 * h - k + 2 ? Verdict::Constructible : Verdict::OpenUnknown;
    if (k <= h - 1 && r >= 2 * h - k + t + e - h * e) return Verdict::Constructible;
    return Verdict::OpenUnknown;
}

PairStatus pair_status(unsigned p, unsigned e, unsigned t, unsigned r, unsigned k) {
    if (!is_prime(p)) fail(Errc::NonPrime, "p must be prime");
    PairStatus st{p, e, t, k, r, Verdict::OpenUnknown, nullptr, ""};

    if (!kernel_admissible(e, t, k)) {
        st.verdict = Verdict::Impossible;
        st.reason = "kernel dimension outside the admissible set";
        return st;
    }
    const auto [lo, hi] = rank_bounds(e, t, k);
    if (r < lo || r > hi) {
        st.verdict = Verdict::Impossible;
        st.reason = "rank outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
        return st;
    }

    if ((t % e == 0) && k == 1 + t / e) {
        st.verdict = Verdict::Constructible;
        st.recipe = Recipe::sylvester(p, e, t / e);
        return st;
    }

    if (t == e) {  // k = 1, r in [3, 1+e]
        if (e == 2) {
            if (p == 2) {
                st.verdict = Verdict::Impossible;
                st.reason = "only the linear H(4,1) exists over GF(4)";
            } else {
                st.verdict = Verdict::Constructible;
                st.recipe = Recipe::ghp2(p);
            }
            return st;
        }
        if (e == 3 && p == 2 && r == 4) {
            st.verdict = Verdict::Constructible;
            st.recipe = Recipe::fixed_example(FixedId::H8_rank4);
            return st;
        }
        if (e == 3 && p == 2 && r == 3) {
            st.verdict = Verdict::OpenUnknown;
            st.reason = "settled impossible only by the exhaustive rank-3 search";
            return st;
        }
        if (e == 4 && (p == 3 || p == 5) && r == 3) {
            st.verdict = Verdict::Constructible;
            st.recipe = Recipe::fixed_example(p == 3 ? FixedId::H81_3 : FixedId::H81_5);
            return st;
        }
        st.verdict = Verdict::OpenUnknown;
        st.reason = "no known construction at t = e with kernel 1";
        return st;
    }

    if (r == hi) {
        st.verdict = Verdict::Constructible;
        st.recipe = max_rank_recipe(p, e, t, k);
        return st;
    }

    if (k == 1) {
        // Below-maximum rank with trivial kernel: only the q = p^4 fixed-example
        // Kronecker chains are known, giving r = t + 1 - 2a.
        if (e == 4 && (p == 3 || p == 5)) {
            const unsigned deficit = t + 1 - r;
            if (deficit % 2 == 0) {
                const unsigned a = deficit / 2;
                if (a >= 1 && (t == 4 * a || t >= 4 * a + 5)) {
                    st.verdict = Verdict::Constructible;
                    st.recipe = fixed_chain_recipe(p, e, t, a);
                    return st;
                }
            }
        }
        st.verdict = Verdict::OpenUnknown;
        st.reason = "kernel 1 below maximum rank is open";
        return st;
    }

    const unsigned h = t / e;
    if (t % e == 0) {
        if (r >= 2 * h - k + 2) {
            st.verdict = Verdict::Constructible;
            st.recipe = Recipe::switch_iii(p, e, h, switching_s_list(e, h, k, r));
        } else {
            st.reason = "below the switching range";
        }
        return st;
    }
    if (k <= h - 1 && r >= 2 * h - k + t + e - h * e) {
        const unsigned hp = t - h * e;           // t mod e, in 1..e-1
        const unsigned r_d = r - (e + hp);       // rank of the switching factor
        st.verdict = Verdict::Constructible;
        st.recipe = Recipe::kron(Recipe::switch_iii(p, e, h - 1, switching_s_list(e, h - 1, k, r_d)),
                                 Recipe::projection(p, e, e + hp));
        return st;
    }
    st.reason = "below the combined switching/projection range";
    return st;
}

size_t planner_cell_budget() { return default_cell_budget(); }

BuildOutcome plan_and_build(unsigned p, unsigned e, unsigned t, unsigned r, unsigned k,
                            bool verify, size_t max_cells) {
    const PairStatus st = pair_status(p, e, t, r, k);
    if (st.verdict != Verdict::Constructible)
        fail(Errc::NotConstructible, "pair (r=" + std::to_string(r) + ", k=" + std::to_string(k) +
                                         ") at t=" + std::to_string(t) + " is " +
                                         verdict_name(st.verdict) +
                                         (st.reason.empty() ? "" : ": " + st.reason));
    GHMatrix m = st.recipe->build();
    BuildOutcome out{st.recipe, std::move(m), false, ""};
    if (!verify) {
        out.note = "not verified (verification disabled)";
        return out;
    }
    const size_t cells = size_t(out.matrix.field()->q()) * out.matrix.order() * out.matrix.order();
    if (cells > max_cells) {
        out.note = "declared, unverified at this size";
        return out;
    }
    const auto rep = invariant_report(out.matrix, max_cells);
    if (rep.c_h.rank_q != r || rep.c_h.ker_q != k)
        fail(Errc::VerificationFailed,
             "recipe " + st.recipe->str() + " measured (" + std::to_string(rep.c_h.rank_q) + ", " +
                 std::to_string(rep.c_h.ker_q) + "), wanted (" + std::to_string(r) + ", " +
                 std::to_string(k) + ")");
    out.verified = true;
    return out;
}

namespace {

Frac rank_p_value(unsigned e, unsigned t) { return Frac::of((long long)e + t, e); }

std::string table_text(unsigned e, unsigned t_lo, unsigned t_hi) {
    std::string out;
    if (e == 2) {
        out += "t | (rank,ker) pairs | rank_p=ker_p\n";
        for (unsigned t = t_lo; t <= t_hi; ++t) {
            out += std::to_string(t) + " |";
            auto ks = admissible_kernels(2, e, t);
            std::sort(ks.begin(), ks.end());
            for (unsigned k : ks) {
                const auto [lo, hi] = rank_bounds(e, t, k);
                for (unsigned r = hi; r + 1 > lo; --r)
                    out += " (" + std::to_string(r) + "," + std::to_string(k) + ")";
            }
            out += " | " + rank_p_value(e, t).str() + "\n";
        }
        return out;
    }
    out += "t | ker | ranks (* = open) | rank_p=ker_p\n";
    for (unsigned t = t_lo; t <= t_hi; ++t) {
        auto ks = admissible_kernels(2, e, t);
        std::sort(ks.rbegin(), ks.rend());
        for (unsigned k : ks) {
            out += std::to_string(t) + " | " + std::to_string(k) + " | ";
            const auto [lo, hi] = rank_bounds(e, t, k);
            for (unsigned r = lo; r <= hi; ++r) {
                if (r > lo) out += ",";
                if (generic_verdict(e, t, r, k) == Verdict::OpenUnknown) out += "*";
                out += std::to_string(r);
            }
            out += " | " + rank_p_value(e, t).str() + "\n";
        }
    }
    return out;
}

std::string table_csv(unsigned p, unsigned e, unsigned t_lo, unsigned t_hi) {
    std::string out = "p,e,t,k,r,verdict,recipe,rank_p_num,rank_p_den,verified\n";
    for (unsigned t = t_lo; t <= t_hi; ++t) {
        auto ks = admissible_kernels(p, e, t);
        std::sort(ks.rbegin(), ks.rend());
        for (unsigned k : ks) {
            const auto [lo, hi] = rank_bounds(e, t, k);
            for (unsigned r = lo; r <= hi; ++r) {
                const PairStatus st = pair_status(p, e, t, r, k);
                const Frac rp = rank_p_value(e, t);
                out += std::to_string(p) + "," + std::to_string(e) + "," + std::to_string(t) +
                       "," + std::to_string(k) + "," + std::to_string(r) + "," +
                       verdict_name(st.verdict) + "," +
                       (st.recipe ? st.recipe->str() : std::string()) + "," +
                       std::to_string(rp.num) + "," + std::to_string(rp.den) + ",0\n";
            }
        }
    }
    return out;
}

}  // namespace

std::string emit_pair_table(unsigned p, unsigned e, unsigned t_lo, unsigned t_hi, bool csv) {
    if (!is_prime(p)) fail(Errc::NonPrime, "p must be prime");
    if (e < 2 || t_lo < e || t_hi < t_lo || t_hi > 64)
        fail(Errc::ParamRange, "table range must satisfy e <= t_lo <= t_hi");
    return csv ? table_csv(p, e, t_lo, t_hi) : table_text(e, t_lo, t_hi);
}

Seed make_seed(const RecipePtr& recipe, size_t max_cells) {
    GHMatrix m = recipe->build();
    if (!verify_gh(m).ok) fail(Errc::SeedUnverified, "seed matrix fails the GH check");
    InvariantReport rep;
    try {
        rep = invariant_report(m, max_cells);
    } catch (const Error& err) {
        fail(Errc::SeedUnverified, std::string("seed not measurable: ") + err.what());
    }
    if (!rep.p_additive) fail(Errc::SeedUnverified, "seed code is not p-additive");
    if (rep.c_h.ker_q != 1) fail(Errc::SeedUnverified, "seed kernel dimension must be 1");
    const unsigned t = dim_p_of_size(*m.field(), m.order());
    return Seed{recipe, t, rep.c_h.rank_q, rep.c_h.ker_q};
}

std::vector<PairStatus> extend_with_seed(const std::vector<Seed>& seeds, unsigned p, unsigned e,
                                         unsigned t_max) {
    if (!is_prime(p)) fail(Errc::NonPrime, "p must be prime");
    struct Node {
        unsigned t, r;
        RecipePtr recipe;
    };
    std::vector<Node> base;
    for (const auto& s : seeds) {
        if (s.k != 1) fail(Errc::SeedUnverified, "extension seeds must have kernel 1");
        if (s.t <= t_max) base.push_back({s.t, s.r, s.recipe});
    }
    // Kronecker closure at kernel 1 (pairwise sums), then S_q chains on top.
    std::vector<Node> closed = base;
    auto seen = [&closed](unsigned t, unsigned r) {
        return std::any_of(closed.begin(), closed.end(),
                           [&](const Node& n) { return n.t == t && n.r == r; });
    };
    for (size_t i = 0; i < closed.size(); ++i)
        for (size_t j = 0; j <= i; ++j) {
            const unsigned t = closed[i].t + closed[j].t;
            const unsigned r = closed[i].r + closed[j].r - 1;
            if (t <= t_max && !seen(t, r))
                closed.push_back({t, r, Recipe::kron(closed[i].recipe, closed[j].recipe)});
        }

    std::vector<PairStatus> out;
    for (const Node& n : closed) {
        out.push_back({p, e, n.t, 1, n.r, Verdict::Constructible, n.recipe, "seed closure"});
        RecipePtr chain = n.recipe;
        unsigned t = n.t, r = n.r, k = 1;
        while (t + e <= t_max) {
            chain = Recipe::kron(Recipe::sylvester(p, e, 1), chain);
            t += e;
            r += 1;
            k += 1;
            out.push_back({p, e, t, k, r, Verdict::Constructible, chain, "seed chain"});
        }
    }
    std::sort(out.begin(), out.end(), [](const PairStatus& a, const PairStatus& b) {
        return std::tie(a.t, a.k, a.r) < std::tie(b.t, b.k, b.r);
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const PairStatus& a, const PairStatus& b) {
                              return a.t == b.t && a.k == b.k && a.r == b.r;
                          }),
              out.end());
    return out;
}

}  // namespace ghc
