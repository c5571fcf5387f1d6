#ifndef DEPTH_HOPF_HPP
#define DEPTH_HOPF_HPP

#include <string>
#include <vector>

#include "depth/exact.hpp"
#include "depth/perm.hpp"

namespace depth {

using RatVec = std::vector<BigRat>;

/// Associative unital algebra over ℚ as exact structure constants:
/// e_i · e_j = Σ_k mult[i][j][k] e_k.
struct AlgData {
    std::size_t dim = 0;
    std::vector<BigRat> mult;  // dim³, index (i·dim + j)·dim + k
    RatVec unit;

    const BigRat& m(std::size_t i, std::size_t j, std::size_t k) const {
        return mult[(i * dim + j) * dim + k];
    }
    BigRat& m(std::size_t i, std::size_t j, std::size_t k) { return mult[(i * dim + j) * dim + k]; }

    static AlgData zero(std::size_t dim);
    RatVec basis_mul(std::size_t i, std::size_t j) const;
    RatVec mul_vec(const RatVec& x, const RatVec& y) const;
    RatMatrix left_mult(const RatVec& x) const;   // y ↦ x·y
    RatMatrix right_mult(const RatVec& x) const;  // y ↦ y·x
};

std::size_t center_dimension(const AlgData& a);
RatMatrix center_basis(const AlgData& a);  // rows span the center

/// Hopf algebra data: comult[i][j][k] is the e_j⊗e_k coefficient of Δ(e_i);
/// the antipode acts by its matrix on coordinates, S(x) = antipode · x.
struct HopfData {
    AlgData alg;
    std::vector<BigRat> comult;  // dim³
    RatVec counit;
    RatMatrix antipode;

    std::size_t dim() const { return alg.dim; }
    const BigRat& c(std::size_t i, std::size_t j, std::size_t k) const {
        return comult[(i * alg.dim + j) * alg.dim + k];
    }
    BigRat& c(std::size_t i, std::size_t j, std::size_t k) {
        return comult[(i * alg.dim + j) * alg.dim + k];
    }
    BigRat counit_of(const RatVec& x) const;
};

/// Result of exhaustive basis-tuple axiom checking: ok, or the first failing
/// axiom with its witness tuple.
struct AxiomReport {
    bool ok = true;
    std::string failed_axiom;
    std::vector<std::size_t> witness;
    std::string describe() const;
};

AxiomReport verify_algebra(const AlgData& a);
AxiomReport verify_hopf(const HopfData& h);

/// ψ: B⊗A → A⊗B on basis pairs. Column index = i_b·dim_a + i_a; row index =
/// j_a·dim_b + j_b.
struct FactorizationMap {
    std::size_t dim_a = 0, dim_b = 0;
    RatMatrix matrix;

    RatVec apply(const RatVec& b_vec, const RatVec& a_vec) const;  // ψ(b⊗a), length dim_a·dim_b
};

FactorizationMap flip_map(std::size_t dim_a, std::size_t dim_b);
AxiomReport check_factorization(const AlgData& a, const AlgData& b, const FactorizationMap& psi);

/// Injective unital algebra map, columns = images of the small basis.
struct SubalgebraEmbedding {
    RatMatrix map;  // dim_big × dim_small
    RatVec apply(const RatVec& small_vec) const { return mat_vec(map, small_vec); }
};

AxiomReport check_embedding(const AlgData& sub, const AlgData& big, const SubalgebraEmbedding& e);

/// Algebra on A⊗B with the ψ-twisted product (a⊗b)(c⊗d) = a·ψ(b⊗c)·d.
/// Basis index = i_a·dim_b + i_b.
struct FactorizationAlgebra {
    AlgData algebra;
    SubalgebraEmbedding embed_a;  // a ↦ a⊗1_B
    SubalgebraEmbedding embed_b;  // b ↦ 1_A⊗b
    FactorizationMap psi;
};

FactorizationAlgebra factorization_algebra(const AlgData& a, const AlgData& b,
                                           const FactorizationMap& psi);

HopfData group_algebra(const PermGroup& g);
HopfData dual_hopf(const HopfData& h);
HopfData cop_hopf(const HopfData& h);  // coopposite coproduct, inverted antipode

// embedding of kH into kG for H ≤ G (basis = group elements)
SubalgebraEmbedding group_algebra_embedding(const PermGroup& h, const PermGroup& g);

/// Left module-algebra action of a Hopf algebra on an algebra:
/// act(e_i^H ⊗ e_j^A) = column (i·dim_a + j) of the matrix.
struct ModuleAlgebraAction {
    std::size_t dim_h = 0, dim_a = 0;
    RatMatrix matrix;  // dim_a × (dim_h · dim_a)
    RatVec apply(const RatVec& h_vec, const RatVec& a_vec) const;
};

AxiomReport check_measuring_action(const HopfData& h, const AlgData& a,
                                   const ModuleAlgebraAction& act);

// A#H via ψ(h⊗a) = h₁·a ⊗ h₂; the action must be a measuring module-algebra action.
FactorizationAlgebra smash_product(const AlgData& a, const HopfData& h,
                                   const ModuleAlgebraAction& act);

// Heisenberg double H#H* via the hit action f⇀h = h₁ f(h₂) of H* on H.
FactorizationAlgebra heisenberg_double(const HopfData& h);

/// Quotient module coalgebra Q = H/R⁺H of a Hopf subalgebra pair R ⊆ H, with
/// the right H-action q̄·h and the induced coalgebra structure.
struct QuotientModuleCoalgebra {
    QuotientSpace space;         // projection/section between H and Q coordinates
    std::size_t dim = 0;
    std::size_t dim_h = 0;
    RatMatrix right_action;      // dim × (dim · dim_h); column = i_q·dim_h + i_h
    std::vector<BigRat> comult;  // dim³
    RatVec counit;

    RatVec act_right(const RatVec& q_vec, const RatVec& h_vec) const;
};

QuotientModuleCoalgebra quotient_module_coalgebra(const HopfData& h, const HopfData& r,
                                                  const SubalgebraEmbedding& r_in_h);

// Q^{*op} #_ψ̄ H with ψ̄(h⊗θ) = (h₂⇀θ) ⊗ h₁, (h⇀θ)(q̄) = θ(q̄·h).
FactorizationAlgebra generalized_smash(const QuotientModuleCoalgebra& q, const HopfData& h);

/// Matched-pair actions ◁: H⊗K → H and ▷: H⊗K → K (column = i_h·dim_k + i_k).
struct MatchedPairActions {
    std::size_t dim_h = 0, dim_k = 0;
    RatMatrix right_act;  // ◁, values in H
    RatMatrix left_act;   // ▷, values in K
    RatVec act_l(const RatVec& h_vec, const RatVec& k_vec) const;  // h ▷ k
    RatVec act_r(const RatVec& h_vec, const RatVec& k_vec) const;  // h ◁ k
};

AxiomReport matched_pair_check(const HopfData& h, const HopfData& k, const MatchedPairActions& a);

// K ⋈ H on K⊗H (basis index i_k·dim_h + i_h); verified Hopf algebra.
HopfData double_crossed_product(const HopfData& k, const HopfData& h, const MatchedPairActions& a);

struct DrinfeldDouble {
    HopfData algebra;             // D(H) = H^{*cop} ⋈ H
    HopfData k;                   // H^{*cop}
    MatchedPairActions actions;   // coadjoint actions
    SubalgebraEmbedding embed_h;  // h ↦ 1_K ⋈ h
    SubalgebraEmbedding embed_k;  // f ↦ f ⋈ 1_H
    FactorizationMap psi;         // induced factorization H⊗K → K⊗H
};

DrinfeldDouble drinfeld_double(const HopfData& h);

}  // namespace depth

#endif
