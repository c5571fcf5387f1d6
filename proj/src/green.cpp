#include "depth/green.hpp"

#include <stdexcept>

namespace depth {

namespace {

std::size_t trivial_index(const CharacterTable& t) {
    for (std::size_t i = 0; i < t.irr_count(); ++i) {
        if (t.irreducibles()[i].degree != 1) continue;
        bool all_one = true;
        for (const auto& v : t.irreducibles()[i].values)
            if (!(t.cyclotomy().as_integer(v).value_or(0) == 1)) {
                all_one = false;
                break;
            }
        if (all_one) return i;
    }
    throw std::logic_error("trivial_index: no trivial character in table");
}

}  // namespace

ModuleDepthResult module_depth(const CharacterTable& table, const ClassFunction& w) {
    std::set<std::size_t> w_supp = table.support(w);  // throws if w is not a character
    if (w_supp.empty()) throw std::invalid_argument("module_depth: zero character");
    ModuleDepthResult res;
    std::size_t triv = trivial_index(table);

    std::size_t bound = table.irr_count() + 1;
    ClassFunction power = w;
    std::set<std::size_t> acc;  // supp T_n as unions of pure-power supports
    std::vector<std::set<std::size_t>> chain;
    for (std::size_t n = 1; n <= bound + 1; ++n) {
        std::set<std::size_t> p_supp = n == 1 ? w_supp : table.support(power);
        acc.insert(p_supp.begin(), p_supp.end());
        chain.push_back(acc);
        if (n >= 2 && chain[n - 1] == chain[n - 2]) {
            res.stabilization = static_cast<long>(n - 1);
            break;
        }
        power = table.product(power, w);
    }
    if (res.stabilization == 0)
        throw std::logic_error("module_depth: no stabilization within |Irr(G)| steps");
    res.chain = std::move(chain);
    res.depth = (w_supp == std::set<std::size_t>{triv}) ? 0 : res.stabilization;
    return res;
}

ClassFunction quotient_module_character(const CharacterTable& big, const PermGroup& h) {
    return perm_character(big, h);
}

HDepthViaQ h_depth_via_q(const CharacterTable& sub, const CharacterTable& big) {
    HDepthViaQ r;
    ClassFunction q = quotient_module_character(big, sub.group());
    r.q_depth = module_depth(big, q);
    r.via_module_depth = 2 * r.q_depth.depth + 1;
    r.via_matrix = h_depth(BratteliPowers(induction_matrix(sub, big).m));
    r.agree = (r.via_module_depth == r.via_matrix);
    return r;
}

ModuleCoalgebraBound module_coalgebra_bound_check(const CharacterTable& table, const ClassFunction& w) {
    ModuleCoalgebraBound out;
    ModuleDepthResult d = module_depth(table, w);
    out.depth = d.depth;
    std::size_t bound = table.irr_count() + 2;
    ClassFunction power = w;
    std::set<std::size_t> prev = table.support(w);
    for (std::size_t n = 1; n <= bound; ++n) {
        power = table.product(power, w);
        std::set<std::size_t> cur = table.support(power);
        if (cur == prev) {
            out.pure_power_stabilization = static_cast<long>(n);
            break;
        }
        prev = std::move(cur);
    }
    if (out.pure_power_stabilization == 0)
        throw std::invalid_argument(
            "module_coalgebra_bound_check: tensor-power supports do not stabilize monotonically "
            "(input is not a module-coalgebra character)");
    out.bound_holds = out.depth <= out.pure_power_stabilization;
    return out;
}

}  // namespace depth
