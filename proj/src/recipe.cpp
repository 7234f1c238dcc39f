#include "ghc/recipe.hpp"

#include <functional>

#include <json.hpp>

#include "ghc/constructions.hpp"

namespace ghc {

const char* fixed_id_name(FixedId id) {
    switch (id) {
        case FixedId::H8_rank4: return "H8_rank4";
        case FixedId::H81_3: return "H81_3";
        case FixedId::H81_5: return "H81_5";
    }
    return "?";
}

FixedId fixed_id_from_name(const std::string& name) {
    if (name == "H8_rank4") return FixedId::H8_rank4;
    if (name == "H81_3") return FixedId::H81_3;
    if (name == "H81_5") return FixedId::H81_5;
    fail(Errc::UnknownId, "unknown fixed example id: " + name);
}

namespace {
RecipePtr make(Recipe r) { return std::make_shared<const Recipe>(std::move(r)); }
}  // namespace

RecipePtr Recipe::sylvester(unsigned p, unsigned e, unsigned h) {
    Recipe r;
    r.kind = Kind::Sylvester;
    r.p = p;
    r.e = e;
    r.h = h;
    return make(std::move(r));
}

RecipePtr Recipe::kron(RecipePtr l, RecipePtr rr) {
    Recipe r;
    r.kind = Kind::Kron;
    r.left = std::move(l);
    r.right = std::move(rr);
    return make(std::move(r));
}

RecipePtr Recipe::switch_i(unsigned p, unsigned e) {
    Recipe r;
    r.kind = Kind::SwitchI;
    r.p = p;
    r.e = e;
    return make(std::move(r));
}

RecipePtr Recipe::switch_ii(unsigned p, unsigned e, unsigned h, unsigned s) {
    Recipe r;
    r.kind = Kind::SwitchII;
    r.p = p;
    r.e = e;
    r.h = h;
    r.s = s;
    return make(std::move(r));
}

RecipePtr Recipe::switch_iii(unsigned p, unsigned e, unsigned h, std::vector<unsigned> s_list) {
    Recipe r;
    r.kind = Kind::SwitchIII;
    r.p = p;
    r.e = e;
    r.h = h;
    r.s_list = std::move(s_list);
    return make(std::move(r));
}

RecipePtr Recipe::projection(unsigned p, unsigned e, unsigned t) {
    Recipe r;
    r.kind = Kind::Projection;
    r.p = p;
    r.e = e;
    r.t = t;
    return make(std::move(r));
}

RecipePtr Recipe::ghp2(unsigned p) {
    Recipe r;
    r.kind = Kind::GHp2;
    r.p = p;
    return make(std::move(r));
}

RecipePtr Recipe::fixed_example(FixedId id) {
    Recipe r;
    r.kind = Kind::Fixed;
    r.fixed = id;
    return make(std::move(r));
}

GHMatrix Recipe::build(bool allow_large) const {
    switch (kind) {
        case Kind::Sylvester: return ghc::sylvester(make_field(p, e), h);
        case Kind::Kron: return kronecker_sum(left->build(allow_large), right->build(allow_large));
        case Kind::SwitchI: return switching_i(p, e);
        case Kind::SwitchII: return switching_ii(p, e, h, s);
        case Kind::SwitchIII: return switching_iii(p, e, h, s_list);
        case Kind::Projection: return projection_construction(p, e, t, allow_large);
        case Kind::GHp2: return gh_p2_one(p);
        case Kind::Fixed: return ghc::fixed_example(fixed);
    }
    fail(Errc::UnknownId, "corrupt recipe node");
}

std::string Recipe::str() const {
    switch (kind) {
        case Kind::Sylvester:
            return "Sylvester(p=" + std::to_string(p) + ",e=" + std::to_string(e) +
                   ",h=" + std::to_string(h) + ")";
        case Kind::Kron: return "Kron(" + left->str() + "," + right->str() + ")";
        case Kind::SwitchI:
            return "SwitchI(p=" + std::to_string(p) + ",e=" + std::to_string(e) + ")";
        case Kind::SwitchII:
            return "SwitchII(p=" + std::to_string(p) + ",e=" + std::to_string(e) +
                   ",h=" + std::to_string(h) + ",s=" + std::to_string(s) + ")";
        case Kind::SwitchIII: {
            std::string ss;
            for (size_t i = 0; i < s_list.size(); ++i) {
                if (i) ss += ' ';
                ss += std::to_string(s_list[i]);
            }
            return "SwitchIII(p=" + std::to_string(p) + ",e=" + std::to_string(e) +
                   ",h=" + std::to_string(h) + ",s=[" + ss + "])";
        }
        case Kind::Projection:
            return "Projection(p=" + std::to_string(p) + ",e=" + std::to_string(e) +
                   ",t=" + std::to_string(t) + ")";
        case Kind::GHp2: return "GHp2(p=" + std::to_string(p) + ")";
        case Kind::Fixed: return std::string("Fixed(") + fixed_id_name(fixed) + ")";
    }
    return "?";
}

std::string Recipe::to_json_string() const {
    using nlohmann::ordered_json;
    std::function<ordered_json(const Recipe&)> conv = [&](const Recipe& r) -> ordered_json {
        switch (r.kind) {
            case Kind::Sylvester:
                return {{"kind", "sylvester"}, {"p", r.p}, {"e", r.e}, {"h", r.h}};
            case Kind::Kron:
                return {{"kind", "kron"}, {"left", conv(*r.left)}, {"right", conv(*r.right)}};
            case Kind::SwitchI: return {{"kind", "switching1"}, {"p", r.p}, {"e", r.e}};
            case Kind::SwitchII:
                return {{"kind", "switching2"}, {"p", r.p}, {"e", r.e}, {"h", r.h}, {"s", r.s}};
            case Kind::SwitchIII:
                return {{"kind", "switching3"},
                        {"p", r.p},
                        {"e", r.e},
                        {"h", r.h},
                        {"s_list", r.s_list}};
            case Kind::Projection:
                return {{"kind", "projection"}, {"p", r.p}, {"e", r.e}, {"t", r.t}};
            case Kind::GHp2: return {{"kind", "ghp2"}, {"p", r.p}};
            case Kind::Fixed: return {{"kind", "fixed"}, {"id", fixed_id_name(r.fixed)}};
        }
        return {};
    };
    return conv(*this).dump();
}

unsigned Recipe::cost_class() const {
    switch (kind) {
        case Kind::Sylvester: return 0;
        case Kind::Projection: return 1;
        case Kind::SwitchI:
        case Kind::SwitchII:
        case Kind::SwitchIII:
        case Kind::GHp2:
        case Kind::Fixed: return 2;
        case Kind::Kron: return 3;
    }
    return 4;
}

}  // namespace ghc
