#ifndef DEPTH_GREEN_HPP
#define DEPTH_GREEN_HPP

#include <set>
#include <vector>

#include "depth/chartable.hpp"
#include "depth/depth_matrix.hpp"

namespace depth {

/// Module depth of a character w: least n with the truncated tensor algebras
/// T_n(w) and T_{n+1}(w) sharing irreducible support (depth 0 when w is a
/// multiple of the trivial character).
struct ModuleDepthResult {
    long depth = 0;
    std::vector<std::set<std::size_t>> chain;  // supports of T_1, T_2, ... (one past stabilization)
    long stabilization = 0;                    // least n >= 1 with supp T_n = supp T_{n+1}
};

ModuleDepthResult module_depth(const CharacterTable& table, const ClassFunction& w);

// Character of the quotient module of a group pair: the coset permutation character.
ClassFunction quotient_module_character(const CharacterTable& big, const PermGroup& h);

/// Both routes to the H-depth of a group pair; disagreement is reported, not thrown.
struct HDepthViaQ {
    long via_module_depth = 0;  // 2·d(Q) + 1
    long via_matrix = 0;        // h_depth of the induction matrix
    bool agree = false;
    ModuleDepthResult q_depth;
};

HDepthViaQ h_depth_via_q(const CharacterTable& sub, const CharacterTable& big);

/// Pure-power stabilization versus module depth, for module-coalgebra characters
/// (their tensor-power supports are monotone, so the first repeat is final).
struct ModuleCoalgebraBound {
    long pure_power_stabilization = 0;
    long depth = 0;
    bool bound_holds = false;  // depth <= pure_power_stabilization
};

ModuleCoalgebraBound module_coalgebra_bound_check(const CharacterTable& table, const ClassFunction& w);

}  // namespace depth

#endif
