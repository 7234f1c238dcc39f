#include "ghc/cli.hpp"

#include <fstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ghc/constructions.hpp"
#include "ghc/invariants.hpp"
#include "ghc/planner.hpp"
#include "ghc/quantum.hpp"
#include "ghc/search.hpp"

namespace ghc {

namespace {

struct Exit {
    int code;
};

void write_text_file(const std::string& path, const std::string& body) {
    std::ofstream f(path, std::ios::binary);
    if (!f) fail(Errc::Io, "cannot open " + path + " for writing");
    f << body;
    if (!f) fail(Errc::Io, "write failed: " + path);
}

std::pair<unsigned, unsigned> parse_range(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
        const unsigned t = unsigned(std::stoul(s));
        return {t, t};
    }
    return {unsigned(std::stoul(s.substr(0, dots))), unsigned(std::stoul(s.substr(dots + 2)))};
}

std::string invariants_text(const InvariantReport& r) {
    auto side = [](const char* name, const InvariantReport::Side& s) {
        return std::string(name) + ": rank_q=" + std::to_string(s.rank_q) +
               " ker_q=" + std::to_string(s.ker_q) + " rank_p=" + s.rank_p.str() +
               " ker_p=" + s.ker_p.str() + "\n";
    };
    std::string out = "matrix: p=" + std::to_string(r.p) + " e=" + std::to_string(r.e) +
                      " n=" + std::to_string(r.n) + " lambda=" + std::to_string(r.lambda) + "\n";
    out += side("F_H", r.f_h);
    out += side("C_H", r.c_h);
    out += std::string("is_p_additive=") + (r.p_additive ? "true" : "false") +
           " is_q_linear=" + (r.q_linear ? "true" : "false") + "\n";
    return out;
}

GHMatrix build_from_kind(const std::string& kind, unsigned p, unsigned e, unsigned t, unsigned h,
                         const std::vector<unsigned>& s_list, const std::string& fixed_id,
                         const std::string& left, const std::string& right, bool allow_large,
                         RecipePtr* recipe_out) {
    auto need = [&](bool cond, const char* what) {
        if (!cond) fail(Errc::ParamRange, std::string("construct ") + kind + " needs " + what);
    };
    if (kind == "sylvester") {
        need(p && e && h, "--p --e --h");
        *recipe_out = Recipe::sylvester(p, e, h);
    } else if (kind == "switching1") {
        need(p && e, "--p --e");
        *recipe_out = Recipe::switch_i(p, e);
    } else if (kind == "switching2") {
        need(p && e && h && s_list.size() == 1, "--p --e --h --s <one value>");
        *recipe_out = Recipe::switch_ii(p, e, h, s_list[0]);
    } else if (kind == "switching3") {
        need(p && e && h && !s_list.empty(), "--p --e --h --s <list>");
        *recipe_out = Recipe::switch_iii(p, e, h, s_list);
    } else if (kind == "projection") {
        need(p && e && t, "--p --e --t");
        *recipe_out = Recipe::projection(p, e, t);
    } else if (kind == "ghp2") {
        need(p != 0, "--p");
        *recipe_out = Recipe::ghp2(p);
    } else if (kind == "fixed") {
        need(!fixed_id.empty(), "--id");
        *recipe_out = Recipe::fixed_example(fixed_id_from_name(fixed_id));
    } else if (kind == "kron") {
        need(!left.empty() && !right.empty(), "--left --right");
        return kronecker_sum(read_ghm_file(left, allow_large), read_ghm_file(right, allow_large));
    } else {
        fail(Errc::ParamRange, "unknown construction kind: " + kind);
    }
    return (*recipe_out)->build(allow_large);
}

int cmd_fixtures(const std::string& action, const std::string& id, const std::string& out_path,
                 std::ostream& out) {
    const std::vector<std::pair<std::string, const char*>> all = {
        {"SW1_16x16", fixtures::sw1_16x16_ghm()},
        {"PROJ_8x8", fixtures::proj_8x8_ghm()},
        {"H8_rank4", fixtures::h8_rank4_ghm()},
    };
    if (action == "list") {
        for (const auto& [name, _] : all) out << name << "\n";
        return 0;
    }
    if (action == "emit") {
        for (const auto& [name, body] : all)
            if (name == id) {
                if (out_path.empty()) {
                    out << body;
                } else {
                    write_text_file(out_path, body);
                    out << "wrote " << out_path << "\n";
                }
                return 0;
            }
        fail(Errc::UnknownFixture, "unknown fixture id: " + id);
    }
    if (action == "check") {
        bool all_ok = true;
        for (const auto& [name, body] : all) {
            if (!id.empty() && id != name) continue;
            bool ok = false;
            if (name == "SW1_16x16") {
                ok = to_ghm(switching_i(2, 2)) == body;
            } else if (name == "PROJ_8x8") {
                ok = to_ghm(projection_construction(2, 2, 3)) == body;
            } else {
                const GHMatrix m = from_ghm(body);
                const auto rep = invariant_report(m);
                ok = verify_gh(m).ok && rep.c_h.rank_q == 4 && rep.c_h.ker_q == 1 && rep.p_additive;
            }
            out << name << (ok ? ": pass" : ": FAIL") << "\n";
            all_ok = all_ok && ok;
        }
        return all_ok ? 0 : 1;
    }
    fail(Errc::ParamRange, "fixtures action must be list, emit or check");
}

int run_parsed(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"generalised Hadamard codes over GF(p^e): construct, verify, analyze"};
    app.require_subcommand(1);
    // long flags only; --h is a construction parameter, so drop the short help
    app.set_help_flag("--help", "print help");

    // construct
    std::string kind, fixed_id, left, right, out_path, recipe_path;
    unsigned p = 0, e = 0, t = 0, h = 0;
    std::vector<unsigned> s_list;
    bool allow_large = false;
    auto* c_construct = app.add_subcommand("construct", "build a GH matrix");
    c_construct->set_help_flag("--help", "print help");
    c_construct->add_option("--kind", kind)->required();
    c_construct->add_option("--p", p);
    c_construct->add_option("--e", e);
    c_construct->add_option("--t", t);
    c_construct->add_option("--h", h);
    c_construct->add_option("--s", s_list)->delimiter(',');
    c_construct->add_option("--id", fixed_id);
    c_construct->add_option("--left", left);
    c_construct->add_option("--right", right);
    c_construct->add_option("-o,--output", out_path)->required();
    c_construct->add_option("--recipe", recipe_path);
    c_construct->add_flag("--allow-large", allow_large);

    // verify
    std::string in_path;
    bool as_json = false;
    auto* c_verify = app.add_subcommand("verify", "check the GH difference property");
    c_verify->add_option("file", in_path)->required();
    c_verify->add_flag("--json", as_json);
    c_verify->add_flag("--allow-large", allow_large);

    auto* c_inv = app.add_subcommand("invariants", "rank/kernel report");
    c_inv->add_option("file", in_path)->required();
    c_inv->add_flag("--json", as_json);
    c_inv->add_flag("--allow-large", allow_large);

    // plan
    unsigned rank = 0, ker = 0;
    std::string build_path;
    bool no_verify = false;
    auto* c_plan = app.add_subcommand("plan", "feasibility verdict and recipe for (rank, ker)");
    c_plan->add_option("--p", p)->required();
    c_plan->add_option("--e", e)->required();
    c_plan->add_option("--t", t)->required();
    c_plan->add_option("--rank", rank)->required();
    c_plan->add_option("--ker", ker)->required();
    c_plan->add_option("--build", build_path);
    c_plan->add_option("--recipe", recipe_path);
    c_plan->add_flag("--no-verify", no_verify);

    // table
    std::string t_range, format = "text";
    auto* c_table = app.add_subcommand("table", "admissible (rank, ker) table");
    c_table->add_option("--p", p)->required();
    c_table->add_option("--e", e)->required();
    c_table->add_option("--t", t_range)->required();
    c_table->add_option("--format", format)->check(CLI::IsMember({"text", "csv"}));

    // quantum
    std::string gens_path;
    auto* c_quant = app.add_subcommand("quantum", "self-orthogonality and quantum parameters");
    c_quant->add_option("file", in_path)->required();
    c_quant->add_flag("--json", as_json);
    c_quant->add_option("--export-generators", gens_path);

    // search
    unsigned target_rank = 0;
    unsigned long long node_limit = 1'000'000'000;
    double time_limit = 900.0;
    bool allow_incomplete = false;
    unsigned emit_limit = 16;
    std::string out_prefix;
    auto* c_search = app.add_subcommand("search", "exhaustive additive GH search at lambda = 1");
    c_search->add_option("--p", p)->required();
    c_search->add_option("--e", e)->required();
    c_search->add_option("--target-rank", target_rank);
    c_search->add_option("--node-limit", node_limit);
    c_search->add_option("--time-limit", time_limit);
    c_search->add_flag("--allow-incomplete", allow_incomplete);
    c_search->add_option("--emit-limit", emit_limit);
    c_search->add_option("-o,--output-prefix", out_prefix);

    // fixtures
    std::string action, fx_id;
    auto* c_fx = app.add_subcommand("fixtures", "embedded reference matrices");
    c_fx->add_option("action", action)->required()->check(CLI::IsMember({"list", "emit", "check"}));
    c_fx->add_option("id", fx_id);
    c_fx->add_option("-o,--output", out_path);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& pe) {
        const int code = app.exit(pe, out, err);
        return code == 0 ? 0 : 2;
    }

    if (*c_construct) {
        RecipePtr recipe;
        const GHMatrix m =
            build_from_kind(kind, p, e, t, h, s_list, fixed_id, left, right, allow_large, &recipe);
        write_ghm_file(m, out_path);
        if (!recipe_path.empty()) {
            if (!recipe) fail(Errc::ParamRange, "kron from files has no recipe to emit");
            write_text_file(recipe_path, recipe->to_json_string() + "\n");
        }
        out << "wrote " << out_path << " (n=" << m.order() << ", lambda=" << m.lambda() << ")\n";
        return 0;
    }

    if (*c_verify) {
        const GHMatrix m = read_ghm_file(in_path, allow_large);
        const auto rep = verify_gh(m);
        if (rep.ok) {
            if (as_json)
                out << R"({"ok":true,"n":)" << m.order() << R"(,"lambda":)" << m.lambda() << "}\n";
            else
                out << "ok: GH(" << m.field()->q() << "," << m.lambda() << ") of order "
                    << m.order() << "\n";
            return 0;
        }
        const auto& v = *rep.violation;
        if (as_json)
            out << R"({"ok":false,"row_i":)" << v.i << R"(,"row_j":)" << v.j << R"(,"element":)"
                << v.element << R"(,"count":)" << v.count << "}\n";
        else
            out << "violation: rows (" << v.i << ", " << v.j << ") difference contains element "
                << v.element << " " << v.count << " times (lambda = " << m.lambda() << ")\n";
        return 1;
    }

    if (*c_inv) {
        const GHMatrix m = read_ghm_file(in_path, allow_large);
        const auto rep = invariant_report(m);
        out << (as_json ? rep.to_json_string() + "\n" : invariants_text(rep));
        return 0;
    }

    if (*c_plan) {
        const PairStatus st = pair_status(p, e, t, rank, ker);
        out << "pair (r=" << rank << ", k=" << ker << ") at p=" << p << " e=" << e << " t=" << t
            << ": " << verdict_name(st.verdict);
        if (st.recipe) out << " via " << st.recipe->str();
        if (!st.reason.empty()) out << " (" << st.reason << ")";
        out << "\n";
        if (!build_path.empty()) {
            if (st.verdict != Verdict::Constructible)
                fail(Errc::NotConstructible, "cannot build a non-constructible pair");
            const auto built = plan_and_build(p, e, t, rank, ker, !no_verify);
            write_ghm_file(built.matrix, build_path);
            if (!recipe_path.empty())
                write_text_file(recipe_path, built.recipe->to_json_string() + "\n");
            out << "wrote " << build_path
                << (built.verified ? " (verified)" : " (" + built.note + ")") << "\n";
        }
        return 0;
    }

    if (*c_table) {
        const auto [lo, hi] = parse_range(t_range);
        out << emit_pair_table(p, e, lo, hi, format == "csv");
        return 0;
    }

    if (*c_quant) {
        const GHMatrix m = read_ghm_file(in_path);
        const auto rep = quantum_report(m);
        out << (as_json ? rep.to_json_string() + "\n"
                        : rep.params_string() + " self_orthogonal=true dual_scan=" + rep.dual_scan +
                              "\n");
        if (!gens_path.empty()) {
            std::string body = "GHG 1\n";
            body += "field p=" + std::to_string(m.field()->p()) +
                    " e=" + std::to_string(m.field()->e()) + " poly=" + m.field()->poly_string() +
                    "\n";
            body += "rows m=" + std::to_string(rep.generators.size()) +
                    " n=" + std::to_string(m.order()) + "\n";
            for (const auto& g : rep.generators) {
                for (size_t i = 0; i < g.size(); ++i) {
                    if (i) body += ' ';
                    body += std::to_string(g[i]);
                }
                body += '\n';
            }
            write_text_file(gens_path, body);
            out << "wrote " << gens_path << "\n";
        }
        return 0;
    }

    if (*c_search) {
        SearchSpec spec;
        spec.field = make_field(p, e);
        if (target_rank) spec.target_rank = target_rank;
        spec.budget.node_limit = node_limit;
        spec.budget.seconds = time_limit;
        spec.allow_incomplete = allow_incomplete;
        unsigned long long last = 0;
        const auto result = search_additive_gh(spec, [&](unsigned long long nodes, size_t m) {
            if (nodes - last >= (1u << 20) || nodes < last) {
                out << "PROGRESS nodes=" << nodes << " found=" << m << "\n";
                last = nodes;
            }
        });
        out << "SEARCH complete=" << (result.complete ? "true" : "false")
            << " nodes=" << result.nodes << " found=" << result.matrices.size() << "\n";
        if (!out_prefix.empty()) {
            const size_t limit = std::min<size_t>(emit_limit, result.matrices.size());
            for (size_t i = 0; i < limit; ++i) {
                char name[32];
                std::snprintf(name, sizeof name, "_%04zu.ghm", i);
                write_ghm_file(result.matrices[i], out_prefix + name);
            }
            out << "wrote " << limit << " matrices with prefix " << out_prefix << "\n";
        }
        return 0;
    }

    if (*c_fx) return cmd_fixtures(action, fx_id, out_path, out);

    err << "no subcommand selected\n";
    return 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return run_parsed(args, out, err);
    } catch (const Error& de) {
        nlohmann::ordered_json j;
        j["error"] = {{"kind", errc_name(de.code())}, {"message", de.what()}};
        err << j.dump() << "\n";
        return 1;
    } catch (const std::exception& ex) {
        nlohmann::ordered_json j;
        j["error"] = {{"kind", "Internal"}, {"message", ex.what()}};
        err << j.dump() << "\n";
        return 1;
    }
}

}  // namespace ghc
