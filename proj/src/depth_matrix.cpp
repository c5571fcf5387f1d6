#include "depth/depth_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace depth {

namespace {

// per-row (col, value) lists; right factors of the power iteration
struct SparseRows {
    std::size_t rows = 0, cols = 0;
    std::vector<std::vector<std::pair<std::size_t, BigInt>>> row;
};

SparseRows sparse_of(const IntMatrix& m, bool transposed) {
    SparseRows s;
    s.rows = transposed ? m.cols() : m.rows();
    s.cols = transposed ? m.rows() : m.cols();
    s.row.resize(s.rows);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m.at(i, j) == 0) continue;
            if (transposed)
                s.row[j].emplace_back(i, m.at(i, j));
            else
                s.row[i].emplace_back(j, m.at(i, j));
        }
    return s;
}

IntMatrix mul_dense_sparse(const IntMatrix& a, const SparseRows& b) {
    if (a.cols() != b.rows) throw std::invalid_argument("mul_dense_sparse: dimension mismatch");
    IntMatrix c(a.rows(), b.cols);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const BigInt& aik = a.at(i, k);
            if (aik == 0) continue;
            for (const auto& [j, v] : b.row[k]) {
                mpz_ptr dst = c.at(i, j).get_mpz_t();
                if (v == 1)
                    mpz_add(dst, dst, aik.get_mpz_t());
                else
                    mpz_addmul(dst, aik.get_mpz_t(), v.get_mpz_t());
            }
        }
    return c;
}

// Fixed-width 192-bit layer for the long nonnegative power iterations. A step
// is taken in this representation only when the exact bit bound
// bits(entries) + bits(values) + log2(#terms) fits; otherwise the caller falls
// back to mpz accumulation. Entry growth per step is slow (a few bits), so the
// symmetric-group battery stays in this layer throughout.
struct FixedMat {
    std::size_t rows = 0, cols = 0;
    std::vector<std::uint64_t> w;  // 3 little-endian limbs per entry
    const std::uint64_t* at(std::size_t i, std::size_t j) const { return &w[3 * (i * cols + j)]; }
    std::uint64_t* at(std::size_t i, std::size_t j) { return &w[3 * (i * cols + j)]; }
};

std::optional<FixedMat> to_fixed(const IntMatrix& m) {
    FixedMat f;
    f.rows = m.rows();
    f.cols = m.cols();
    f.w.assign(3 * f.rows * f.cols, 0);
    for (std::size_t i = 0; i < f.rows; ++i)
        for (std::size_t j = 0; j < f.cols; ++j) {
            const mpz_srcptr x = m.at(i, j).get_mpz_t();
            if (mpz_sgn(x) < 0 || mpz_size(x) > 3) return std::nullopt;
            std::uint64_t* dst = f.at(i, j);
            for (std::size_t t = 0; t < mpz_size(x); ++t)
                dst[t] = mpz_getlimbn(x, static_cast<mp_size_t>(t));
        }
    return f;
}

IntMatrix from_fixed(const FixedMat& f) {
    IntMatrix m(f.rows, f.cols);
    for (std::size_t i = 0; i < f.rows; ++i)
        for (std::size_t j = 0; j < f.cols; ++j)
            mpz_import(m.at(i, j).get_mpz_t(), 3, -1, sizeof(std::uint64_t), 0, 0, f.at(i, j));
    return m;
}

std::size_t fixed_max_bits(const FixedMat& f) {
    std::uint64_t m2 = 0, m1 = 0, m0 = 0;
    for (std::size_t e = 0; e < f.rows * f.cols; ++e) {
        m0 |= f.w[3 * e];
        m1 |= f.w[3 * e + 1];
        m2 |= f.w[3 * e + 2];
    }
    auto bl = [](std::uint64_t x) { return x ? 64 - __builtin_clzll(x) : 0; };
    if (m2) return 128 + bl(m2);
    if (m1) return 64 + bl(m1);
    return bl(m0);
}

struct SparseU {
    std::size_t rows = 0, cols = 0, max_bits = 0;
    std::vector<std::vector<std::pair<std::size_t, std::uint64_t>>> row;
};

std::optional<SparseU> to_sparse_u(const SparseRows& s) {
    SparseU u;
    u.rows = s.rows;
    u.cols = s.cols;
    u.row.resize(s.rows);
    for (std::size_t i = 0; i < s.rows; ++i)
        for (const auto& [j, v] : s.row[i]) {
            if (mpz_sgn(v.get_mpz_t()) < 0 || mpz_fits_ulong_p(v.get_mpz_t()) == 0)
                return std::nullopt;
            std::uint64_t vu = mpz_get_ui(v.get_mpz_t());
            u.max_bits = std::max<std::size_t>(u.max_bits, 64 - __builtin_clzll(vu));
            u.row[i].emplace_back(j, vu);
        }
    return u;
}

FixedMat mul_fixed(const FixedMat& a, const SparseU& b) {
    FixedMat c;
    c.rows = a.rows;
    c.cols = b.cols;
    c.w.assign(3 * c.rows * c.cols, 0);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            const std::uint64_t* al = a.at(i, k);
            if (!(al[0] | al[1] | al[2])) continue;
            for (const auto& [j, v] : b.row[k]) {
                std::uint64_t pl0 = al[0], pl1 = al[1], pl2 = al[2];
                if (v != 1) {
                    unsigned __int128 prod = static_cast<unsigned __int128>(al[0]) * v;
                    pl0 = static_cast<std::uint64_t>(prod);
                    prod = static_cast<unsigned __int128>(al[1]) * v + (prod >> 64);
                    pl1 = static_cast<std::uint64_t>(prod);
                    prod = static_cast<unsigned __int128>(al[2]) * v + (prod >> 64);
                    pl2 = static_cast<std::uint64_t>(prod);
                }
                std::uint64_t* dst = c.at(i, j);
                unsigned __int128 sum = static_cast<unsigned __int128>(dst[0]) + pl0;
                dst[0] = static_cast<std::uint64_t>(sum);
                sum = (sum >> 64) + dst[1] + pl1;
                dst[1] = static_cast<std::uint64_t>(sum);
                sum = (sum >> 64) + dst[2] + pl2;
                dst[2] = static_cast<std::uint64_t>(sum);
            }
        }
    return c;
}

/// Alternating power iteration M, MMᵀ, MMᵀM, ... on the fast layer when the
/// entries fit, transparently degrading to exact mpz matrices.
class PowerIterator {
public:
    explicit PowerIterator(const IntMatrix& m)
        : sm_(sparse_of(m, false)), smt_(sparse_of(m, true)), exact_(m) {
        smu_ = to_sparse_u(sm_);
        smtu_ = to_sparse_u(smt_);
        if (smu_ && smtu_) fixed_ = to_fixed(m);
        std::size_t n = std::max(m.rows(), m.cols());
        log_terms_ = 1;
        while ((std::size_t{1} << log_terms_) < n + 1) ++log_terms_;
    }

    // multiply in factor #step (even steps use Mᵀ)
    void step(std::size_t step_index) {
        bool use_mt = step_index % 2 == 0;
        if (fixed_) {
            const SparseU& u = use_mt ? *smtu_ : *smu_;
            if (fixed_max_bits(*fixed_) + u.max_bits + log_terms_ + 1 < 192) {
                *fixed_ = mul_fixed(*fixed_, u);
                return;
            }
            exact_ = from_fixed(*fixed_);
            fixed_.reset();
        }
        exact_ = mul_dense_sparse(exact_, use_mt ? smt_ : sm_);
    }

    IntMatrix current() const { return fixed_ ? from_fixed(*fixed_) : exact_; }

    void take_snapshot() {
        snap_fixed_.reset();
        snap_exact_.reset();
        if (fixed_)
            snap_fixed_ = *fixed_;
        else
            snap_exact_ = exact_;
    }

    // minimal natural q with current <= q·snapshot entrywise, without
    // materializing mpz matrices on the fixed layer
    std::optional<BigInt> q_against_snapshot() const {
        if (fixed_ && snap_fixed_) {
            const FixedMat& num = *fixed_;
            const FixedMat& den = *snap_fixed_;
            if (num.rows != den.rows || num.cols != den.cols) return std::nullopt;
            BigInt q = 0, u, v, r;
            for (std::size_t e = 0; e < num.rows * num.cols; ++e) {
                const std::uint64_t* nw = &num.w[3 * e];
                const std::uint64_t* dw = &den.w[3 * e];
                if (!(nw[0] | nw[1] | nw[2])) continue;
                if (!(dw[0] | dw[1] | dw[2])) return std::nullopt;  // support violation
                mpz_import(u.get_mpz_t(), 3, -1, sizeof(std::uint64_t), 0, 0, nw);
                mpz_import(v.get_mpz_t(), 3, -1, sizeof(std::uint64_t), 0, 0, dw);
                mpz_cdiv_q(r.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t());
                if (r > q) q = r;
            }
            return q;
        }
        IntMatrix snap = snap_fixed_ ? from_fixed(*snap_fixed_)
                                     : (snap_exact_ ? *snap_exact_ : IntMatrix(1, 1));
        return min_dominating_q(current(), snap);
    }

private:
    SparseRows sm_, smt_;
    std::optional<SparseU> smu_, smtu_;
    std::optional<FixedMat> fixed_;
    IntMatrix exact_;
    std::optional<FixedMat> snap_fixed_;
    std::optional<IntMatrix> snap_exact_;
    std::size_t log_terms_ = 1;
};

}  // namespace

BratteliPowers::BratteliPowers(IntMatrix m)
    : m_(std::move(m)), supp_m_(1, 1), supp_mt_(1, 1) {
    if (!m_.is_nonnegative()) throw std::invalid_argument("BratteliPowers: negative entry");
    if (m_.has_zero_row()) throw std::invalid_argument("BratteliPowers: zero row");
    if (m_.has_zero_column()) throw std::invalid_argument("BratteliPowers: zero column");
    supp_m_ = support(m_);
    supp_mt_ = support(m_.transpose());
    s_supports_.push_back(SupportPattern::identity(r()));
    s_supports_.push_back(support_mul(supp_m_, supp_mt_));
    n_supports_.push_back(SupportPattern::identity(s()));
    n_supports_.push_back(support_mul(supp_mt_, supp_m_));
}

SupportPattern BratteliPowers::s_support(std::size_t n) const {
    while (s_supports_.size() <= n)
        s_supports_.push_back(support_mul(s_supports_.back(), s_supports_[1]));
    return s_supports_[n];
}

SupportPattern BratteliPowers::n_support(std::size_t n) const {
    while (n_supports_.size() <= n)
        n_supports_.push_back(support_mul(n_supports_.back(), n_supports_[1]));
    return n_supports_[n];
}

SupportPattern BratteliPowers::support_of_power(std::size_t n) const {
    if (n % 2 == 0) return s_support(n / 2);
    return support_mul(s_support(n / 2), supp_m_);
}

IntMatrix BratteliPowers::bratteli_power(std::size_t n) const {
    if (n == 0) return IntMatrix::identity(r());
    PowerIterator it(m_);
    for (std::size_t step = 2; step <= n; ++step) it.step(step);
    return it.current();
}

namespace {

long stabilization_index(const BratteliPowers& b, bool h_side) {
    std::size_t bound = (h_side ? b.s() : b.r()) + 1;
    for (std::size_t n = 0; n <= bound; ++n) {
        if ((h_side ? b.n_support(n) : b.s_support(n)) ==
            (h_side ? b.n_support(n + 1) : b.s_support(n + 1)))
            return static_cast<long>(n);
    }
    throw std::logic_error("stabilization did not occur within the dimension bound");
}

}  // namespace

long odd_depth(const BratteliPowers& b) { return 2 * stabilization_index(b, false) + 1; }

long h_depth(const BratteliPowers& b) { return 2 * stabilization_index(b, true) + 1; }

long even_depth(const BratteliPowers& b) {
    for (std::size_t n = 1; n <= b.r() + 2; ++n) {
        if (b.support_of_power(2 * n - 1) == b.support_of_power(2 * n + 1))
            return static_cast<long>(2 * n);
    }
    throw std::logic_error("even depth stabilization did not occur within the dimension bound");
}

std::pair<long, BigInt> min_depth(const BratteliPowers& b) {
    // least n >= 1 with supp(M^(n+1)) ⊆ supp(M^(n-1)): by the domination lemma for
    // nonnegative integer matrices this is the minimum-depth condition
    long n = 0;
    std::size_t bound = 2 * (b.r() + b.s()) + 4;
    for (std::size_t k = 1; k <= bound; ++k) {
        if (b.support_of_power(k + 1).subset_of(b.support_of_power(k - 1))) {
            n = static_cast<long>(k);
            break;
        }
    }
    if (n == 0) throw std::logic_error("min_depth: no stabilization within bound");
    long expect = std::min(odd_depth(b), even_depth(b));
    if (n != expect) throw std::logic_error("min_depth: disagrees with min(odd, even)");

    // exact powers for the witness; keep only M^(n-1) and the running product
    PowerIterator it(b.m());
    if (n <= 2) {
        IntMatrix snapshot = n == 1 ? IntMatrix::identity(b.r()) : b.m();
        for (long step = 2; step <= n + 1; ++step) it.step(static_cast<std::size_t>(step));
        auto q = min_dominating_q(it.current(), snapshot);
        if (!q) throw std::logic_error("min_depth: domination failed on exact powers");
        return {n, *q};
    }
    for (long step = 2; step <= n + 1; ++step) {
        it.step(static_cast<std::size_t>(step));
        if (step == n - 1) it.take_snapshot();
    }
    auto q = it.q_against_snapshot();
    if (!q) throw std::logic_error("min_depth: domination failed on exact powers");
    return {n, *q};
}

DepthQuad depth_quad(const IntMatrix& m) {
    BratteliPowers b(m);
    DepthQuad d;
    d.d_odd = odd_depth(b);
    d.d_ev = even_depth(b);
    d.d_h = h_depth(b);
    auto [dmin, q] = min_depth(b);
    d.d_min = dmin;
    d.q = q;
    d.n_odd = (d.d_odd - 1) / 2;
    d.n_ev = d.d_ev / 2;
    d.n_h = (d.d_h - 1) / 2;
    if (d.d_min != std::min(d.d_odd, d.d_ev)) throw std::logic_error("depth_quad: min mismatch");
    if (!(d.d_h - 2 <= d.d_min && d.d_min <= d.d_h + 1))
        throw std::logic_error("depth_quad: finite-depth chain violated");
    return d;
}

long odd_depth_of_square(const IntMatrix& t) {
    if (t.rows() != t.cols()) throw std::invalid_argument("odd_depth_of_square: not square");
    if (!t.is_nonnegative()) throw std::invalid_argument("odd_depth_of_square: negative entry");
    for (std::size_t i = 0; i < t.rows(); ++i)
        if (t.at(i, i) == 0) throw std::invalid_argument("odd_depth_of_square: zero diagonal entry");
    SupportPattern st = support(t);
    SupportPattern cur = SupportPattern::identity(t.rows());
    for (std::size_t n = 0; n <= t.rows() + 1; ++n) {
        SupportPattern nxt = support_mul(cur, st);
        if (cur == nxt) return static_cast<long>(2 * n + 1);
        cur = std::move(nxt);
    }
    throw std::logic_error("odd_depth_of_square: no stabilization within bound");
}

}  // namespace depth
