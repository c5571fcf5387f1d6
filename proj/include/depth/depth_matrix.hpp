#ifndef DEPTH_DEPTH_MATRIX_HPP
#define DEPTH_DEPTH_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "depth/chartable.hpp"
#include "depth/exact.hpp"

namespace depth {

/// Power engine for the zero-pattern depth algorithms on an induction matrix M:
/// S = M·Mᵀ, N = Mᵀ·M, M⁽⁰⁾ = I_r, M⁽²ⁿ⁾ = Sⁿ, M⁽²ⁿ⁺¹⁾ = SⁿM.
/// Support chains are computed on boolean masks (support of a product of
/// nonnegative matrices depends only on the factor supports); exact big-integer
/// powers back the minimum-depth witness q.
class BratteliPowers {
public:
    explicit BratteliPowers(IntMatrix m);  // validates the induction-matrix invariants

    const IntMatrix& m() const { return m_; }
    std::size_t r() const { return m_.rows(); }
    std::size_t s() const { return m_.cols(); }

    IntMatrix bratteli_power(std::size_t n) const;  // exact M⁽ⁿ⁾
    SupportPattern support_of_power(std::size_t n) const;
    SupportPattern s_support(std::size_t n) const;  // supp(Sⁿ), S⁰ = I_r
    SupportPattern n_support(std::size_t n) const;  // supp(Nⁿ), N⁰ = I_s

private:
    IntMatrix m_;
    SupportPattern supp_m_, supp_mt_;
    mutable std::vector<SupportPattern> s_supports_;  // memo: supp(S^n)
    mutable std::vector<SupportPattern> n_supports_;  // memo: supp(N^n)
};

struct DepthQuad {
    long d_odd = 0;
    long d_ev = 0;
    long d_min = 0;
    long d_h = 0;
    long n_odd = 0;  // stabilization indices
    long n_ev = 0;
    long n_h = 0;
    BigInt q;        // minimal witness for M^(d_min+1) <= q · M^(d_min-1)
};

long odd_depth(const BratteliPowers& b);
long even_depth(const BratteliPowers& b);
long h_depth(const BratteliPowers& b);

// least n >= 1 with M^(n+1) <= q M^(n-1); returns (n, minimal q);
// asserted equal to min(odd_depth, even_depth)
std::pair<long, BigInt> min_depth(const BratteliPowers& b);

DepthQuad depth_quad(const IntMatrix& m);

// odd depth 2n+1 from supports of powers of a square multiplicity matrix T with
// positive diagonal (T⁰ = I); used by the bimodule route.
long odd_depth_of_square(const IntMatrix& t);

}  // namespace depth

#endif
