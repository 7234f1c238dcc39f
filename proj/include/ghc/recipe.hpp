#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ghc/matrix.hpp"

namespace ghc {

enum class FixedId { H8_rank4, H81_3, H81_5 };
const char* fixed_id_name(FixedId id);
FixedId fixed_id_from_name(const std::string& name);

/// Construction AST recording which builder produced a matrix.
struct Recipe;
using RecipePtr = std::shared_ptr<const Recipe>;

struct Recipe {
    enum class Kind { Sylvester, Kron, SwitchI, SwitchII, SwitchIII, Projection, GHp2, Fixed };

    Kind kind{};
    unsigned p = 0, e = 0, t = 0, h = 0, s = 0;
    std::vector<unsigned> s_list;
    FixedId fixed{};
    RecipePtr left, right;  // Kron only

    static RecipePtr sylvester(unsigned p, unsigned e, unsigned h);
    static RecipePtr kron(RecipePtr l, RecipePtr r);
    static RecipePtr switch_i(unsigned p, unsigned e);
    static RecipePtr switch_ii(unsigned p, unsigned e, unsigned h, unsigned s);
    static RecipePtr switch_iii(unsigned p, unsigned e, unsigned h, std::vector<unsigned> s_list);
    static RecipePtr projection(unsigned p, unsigned e, unsigned t);
    static RecipePtr ghp2(unsigned p);
    static RecipePtr fixed_example(FixedId id);

    GHMatrix build(bool allow_large = false) const;
    std::string str() const;
    std::string to_json_string() const;

    // Build-cost class for recipe preference: Sylvester < projection <
    // switching < Kronecker composite.
    unsigned cost_class() const;
};

}  // namespace ghc
