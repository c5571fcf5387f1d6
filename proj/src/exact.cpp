#include "depth/exact.hpp"

#include <algorithm>

namespace depth {

BigRat make_rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    BigRat q(num, den);
    q.canonicalize();
    return q;
}

BigRat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return BigRat(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    return make_rat(num, den);
}

std::string rat_to_string(const BigRat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), e_(rows * cols) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("IntMatrix: zero dimension");
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    if (rows.empty() || rows[0].empty()) throw std::invalid_argument("from_rows: empty");
    IntMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) throw std::invalid_argument("from_rows: ragged rows");
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool IntMatrix::operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

bool IntMatrix::is_nonnegative() const {
    return std::all_of(e_.begin(), e_.end(), [](const BigInt& x) { return x >= 0; });
}

bool IntMatrix::has_zero_row() const {
    for (std::size_t i = 0; i < rows_; ++i) {
        bool all_zero = true;
        for (std::size_t j = 0; j < cols_ && all_zero; ++j) all_zero = (at(i, j) == 0);
        if (all_zero) return true;
    }
    return false;
}

bool IntMatrix::has_zero_column() const {
    for (std::size_t j = 0; j < cols_; ++j) {
        bool all_zero = true;
        for (std::size_t i = 0; i < rows_ && all_zero; ++i) all_zero = (at(i, j) == 0);
        if (all_zero) return true;
    }
    return false;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: dimension mismatch");
    IntMatrix c(a.rows(), b.cols());
    // i-k-j order so zero entries of a skip whole rows of b.
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const BigInt& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const BigInt& bkj = b.at(k, j);
                if (bkj == 0) continue;
                mpz_addmul(c.at(i, j).get_mpz_t(), aik.get_mpz_t(), bkj.get_mpz_t());
            }
        }
    return c;
}

SupportPattern::SupportPattern(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("SupportPattern: zero dimension");
}

SupportPattern SupportPattern::identity(std::size_t n) {
    SupportPattern p(n, n);
    for (std::size_t i = 0; i < n; ++i) p.set(i, i);
    return p;
}

SupportPattern SupportPattern::of(const IntMatrix& m) {
    SupportPattern p(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const BigInt& x = m.at(i, j);
            if (x < 0) throw std::invalid_argument("support: negative entry");
            if (x != 0) p.set(i, j);
        }
    return p;
}

bool SupportPattern::operator==(const SupportPattern& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && bits_ == o.bits_;
}

bool SupportPattern::subset_of(const SupportPattern& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("subset_of: shape mismatch");
    for (std::size_t w = 0; w < bits_.size(); ++w)
        if (bits_[w] & ~o.bits_[w]) return false;
    return true;
}

std::size_t SupportPattern::count() const {
    std::size_t n = 0;
    for (auto w : bits_) n += static_cast<std::size_t>(__builtin_popcountll(w));
    return n;
}

SupportPattern support_mul(const SupportPattern& a, const SupportPattern& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("support_mul: dimension mismatch");
    SupportPattern c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        std::uint64_t* crow = &c.bits_[i * c.words_];
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (!a.get(i, k)) continue;
            const std::uint64_t* brow = &b.bits_[k * b.words_];
            for (std::size_t w = 0; w < b.words_; ++w) crow[w] |= brow[w];
        }
    }
    return c;
}

SupportPattern support(const IntMatrix& m) { return SupportPattern::of(m); }

bool dominated_by(const IntMatrix& x, const IntMatrix& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw std::invalid_argument("dominated_by: shape mismatch");
    if (!x.is_nonnegative() || !y.is_nonnegative())
        throw std::invalid_argument("dominated_by: negative entry");
    return support(x).subset_of(support(y));
}

std::optional<BigInt> min_dominating_q(const IntMatrix& x, const IntMatrix& y) {
    if (!dominated_by(x, y)) return std::nullopt;
    BigInt q = 0;
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) {
            const BigInt& num = x.at(i, j);
            const BigInt& den = y.at(i, j);
            if (num == 0) continue;
            BigInt r;
            mpz_cdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            if (r > q) q = r;
        }
    return q;
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), e_(rows * cols) {}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<BigRat>>& rows) {
    if (rows.empty() || rows[0].empty()) throw std::invalid_argument("from_rows: empty");
    RatMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) throw std::invalid_argument("from_rows: ragged rows");
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool RatMatrix::operator==(const RatMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

bool RatMatrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const BigRat& x) { return x == 0; });
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: dimension mismatch");
    RatMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const BigRat& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const BigRat& bkj = b.at(k, j);
                if (bkj == 0) continue;
                c.at(i, j) += aik * bkj;
            }
        }
    return c;
}

std::vector<BigRat> mat_vec(const RatMatrix& a, const std::vector<BigRat>& v) {
    if (a.cols() != v.size()) throw std::invalid_argument("mat_vec: dimension mismatch");
    std::vector<BigRat> r(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k) == 0 || v[k] == 0) continue;
            r[i] += a.at(i, k) * v[k];
        }
    return r;
}

RatMatrix rref(const RatMatrix& m, std::vector<std::size_t>* pivots) {
    RatMatrix a = m;
    std::vector<std::size_t> piv;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t sel = row;
        while (sel < a.rows() && a.at(sel, col) == 0) ++sel;
        if (sel == a.rows()) continue;
        if (sel != row)
            for (std::size_t j = col; j < a.cols(); ++j) std::swap(a.at(row, j), a.at(sel, j));
        BigRat inv = 1 / a.at(row, col);
        for (std::size_t j = col; j < a.cols(); ++j) a.at(row, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a.at(i, col) == 0) continue;
            BigRat f = a.at(i, col);
            for (std::size_t j = col; j < a.cols(); ++j) a.at(i, j) -= f * a.at(row, j);
        }
        piv.push_back(col);
        ++row;
    }
    if (pivots) *pivots = piv;
    return a;
}

std::size_t rank(const RatMatrix& m) {
    std::vector<std::size_t> piv;
    rref(m, &piv);
    return piv.size();
}

RatMatrix kernel_basis(const RatMatrix& m) {
    std::vector<std::size_t> piv;
    RatMatrix r = rref(m, &piv);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : piv) is_pivot[p] = true;
    std::size_t k = m.cols() - piv.size();
    RatMatrix basis(k, m.cols());
    std::size_t out = 0;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        basis.at(out, f) = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) basis.at(out, piv[i]) = -r.at(i, f);
        ++out;
    }
    return basis;
}

std::optional<std::vector<BigRat>> solve(const RatMatrix& m, const std::vector<BigRat>& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: dimension mismatch");
    RatMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    std::vector<std::size_t> piv;
    RatMatrix r = rref(aug, &piv);
    for (auto p : piv)
        if (p == m.cols()) return std::nullopt;  // pivot in the augmented column
    std::vector<BigRat> x(m.cols());
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = r.at(i, m.cols());
    return x;
}

std::vector<BigRat> QuotientSpace::project(const std::vector<BigRat>& v) const {
    return mat_vec(projection, v);
}

std::vector<BigRat> QuotientSpace::lift(const std::vector<BigRat>& v) const {
    return mat_vec(section, v);
}

QuotientSpace quotient_basis(std::size_t ambient_dim,
                             const std::vector<std::vector<BigRat>>& relation_spanning_set) {
    if (ambient_dim == 0) throw std::invalid_argument("quotient_basis: zero ambient");
    QuotientSpace q;
    q.ambient = ambient_dim;
    if (relation_spanning_set.empty()) {
        q.dim = ambient_dim;
        q.projection = RatMatrix::identity(ambient_dim);
        q.section = RatMatrix::identity(ambient_dim);
        return q;
    }
    RatMatrix rel(relation_spanning_set.size(), ambient_dim);
    for (std::size_t i = 0; i < relation_spanning_set.size(); ++i) {
        if (relation_spanning_set[i].size() != ambient_dim)
            throw std::invalid_argument("quotient_basis: relation of wrong length");
        for (std::size_t j = 0; j < ambient_dim; ++j) rel.at(i, j) = relation_spanning_set[i][j];
    }
    std::vector<std::size_t> piv;
    RatMatrix r = rref(rel, &piv);
    std::vector<bool> is_pivot(ambient_dim, false);
    for (auto p : piv) is_pivot[p] = true;
    q.dim = ambient_dim - piv.size();

    // Quotient coordinates are the free (non-pivot) ambient coordinates; each rref
    // row rewrites its pivot coordinate as a combination of free ones.
    RatMatrix proj(q.dim, ambient_dim);
    RatMatrix sect(ambient_dim, q.dim);
    std::size_t out = 0;
    for (std::size_t f = 0; f < ambient_dim; ++f) {
        if (is_pivot[f]) continue;
        proj.at(out, f) = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) proj.at(out, piv[i]) = -r.at(i, f);
        sect.at(f, out) = 1;
        ++out;
    }
    q.projection = std::move(proj);
    q.section = std::move(sect);
    return q;
}

}  // namespace depth
