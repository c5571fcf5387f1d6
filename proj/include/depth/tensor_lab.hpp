#ifndef DEPTH_TENSOR_LAB_HPP
#define DEPTH_TENSOR_LAB_HPP

#include <cstddef>

#include "depth/exact.hpp"
#include "depth/hopf.hpp"

namespace depth {

inline constexpr std::size_t kDefaultTensorBudget = 100000;

/// X^{⊗_B n} as an exact quotient of the n-fold tensor power of X by the
/// middle-B relations x·b ⊗ y − x ⊗ b·y.
struct RelTensorSpace {
    std::size_t n = 0;
    std::size_t x_dim = 0;
    std::size_t ambient_dim = 0;  // x_dim^n
    QuotientSpace space;
    std::size_t dim = 0;
};

RelTensorSpace relative_tensor_power(const AlgData& x, const SubalgebraEmbedding& b_in_x,
                                     const AlgData& b, std::size_t n,
                                     std::size_t budget = kDefaultTensorBudget);

// outer actions on the quotient: s·(x₁⊗…⊗xₙ) and (x₁⊗…⊗xₙ)·s
RatMatrix rel_left_action(const AlgData& x, const RelTensorSpace& t, const RatVec& s);
RatMatrix rel_right_action(const AlgData& x, const RelTensorSpace& t, const RatVec& s);

/// θₙ: S_ψ^{⊗_B n} → A^{⊗n}⊗B and its inverse, with every check the theorem
/// asserts: well-definedness, mutual inversion, and S_ψ-bilinearity on all
/// (generator, basis) pairs.
struct ThetaReport {
    std::size_t n = 0;
    std::size_t quotient_dim = 0;
    std::size_t target_dim = 0;  // (dim A)^n · dim B
    bool dims_match = false;
    bool well_defined = false;
    bool mutually_inverse = false;
    bool bilinear = false;
    RatMatrix forward;  // target × quotient
    RatMatrix inverse;  // quotient × target

    bool ok() const { return dims_match && well_defined && mutually_inverse && bilinear; }
};

ThetaReport theta_check(const AlgData& a, const AlgData& b, const FactorizationAlgebra& s,
                        std::size_t n, std::size_t budget = kDefaultTensorBudget);

/// H^{⊗_R(n+1)} ≅ H ⊗ Q^{⊗n} via iterated coproduct pairing; rank-checked.
struct DepthIsoReport {
    std::size_t n = 0;
    std::size_t lhs_dim = 0;  // dim of the relative tensor power
    std::size_t rhs_dim = 0;  // dim H · (dim Q)^n
    bool well_defined = false;
    bool bijective = false;

    bool ok() const { return well_defined && bijective && lhs_dim == rhs_dim; }
};

DepthIsoReport depth_iso_check(const HopfData& h, const HopfData& r, const SubalgebraEmbedding& r_in_h,
                               std::size_t n, std::size_t budget = kDefaultTensorBudget);

}  // namespace depth

#endif
