#ifndef DEPTH_EXACT_HPP
#define DEPTH_EXACT_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace depth {

// Arbitrary-precision signed integer and reduced rational (denominator > 0).
using BigInt = mpz_class;
using BigRat = mpq_class;

BigRat make_rat(const BigInt& num, const BigInt& den);
BigRat parse_rat(const std::string& s);   // "p" or "p/q"
std::string rat_to_string(const BigRat& q);  // canonical: "p" when q integral, else "p/q"

/// Dense row-major matrix of BigInt entries.
class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols);
    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const BigInt& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    BigInt& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

    IntMatrix transpose() const;
    bool operator==(const IntMatrix& o) const;
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    bool is_nonnegative() const;
    bool has_zero_row() const;
    bool has_zero_column() const;

private:
    std::size_t rows_, cols_;
    std::vector<BigInt> e_;
};

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);

/// Boolean mask of the nonzero positions of a matrix, packed 64 per word.
class SupportPattern {
public:
    SupportPattern(std::size_t rows, std::size_t cols);
    static SupportPattern identity(std::size_t n);
    static SupportPattern of(const IntMatrix& m);  // requires entries >= 0

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t i, std::size_t j) const {
        return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u;
    }
    void set(std::size_t i, std::size_t j) { bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64); }

    bool operator==(const SupportPattern& o) const;
    bool operator!=(const SupportPattern& o) const { return !(*this == o); }
    bool subset_of(const SupportPattern& o) const;
    std::size_t count() const;

    friend SupportPattern support_mul(const SupportPattern& a, const SupportPattern& b);

private:
    std::size_t rows_, cols_, words_;
    std::vector<std::uint64_t> bits_;
};

SupportPattern support_mul(const SupportPattern& a, const SupportPattern& b);

// support(m), per the depth algorithms; rejects negative entries.
SupportPattern support(const IntMatrix& m);

// True iff x <= q*y entrywise for some natural q; equivalent to supp(x) ⊆ supp(y)
// for nonnegative integer matrices.
bool dominated_by(const IntMatrix& x, const IntMatrix& y);

// Least natural q with x <= q*y entrywise, if one exists.
std::optional<BigInt> min_dominating_q(const IntMatrix& x, const IntMatrix& y);

/// Dense row-major matrix of exact rationals. Zero row/column counts are allowed
/// (empty kernels, zero-dimensional quotients).
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols);
    static RatMatrix identity(std::size_t n);
    static RatMatrix from_rows(const std::vector<std::vector<BigRat>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const BigRat& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    BigRat& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

    RatMatrix transpose() const;
    bool operator==(const RatMatrix& o) const;
    bool operator!=(const RatMatrix& o) const { return !(*this == o); }
    bool is_zero() const;

private:
    std::size_t rows_, cols_;
    std::vector<BigRat> e_;
};

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);
std::vector<BigRat> mat_vec(const RatMatrix& a, const std::vector<BigRat>& v);

// Reduced row-echelon form; pivots (if non-null) receives the pivot column of each
// nonzero row, in order.
RatMatrix rref(const RatMatrix& m, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const RatMatrix& m);

// Basis of { v : m v = 0 }, one kernel vector per returned row.
RatMatrix kernel_basis(const RatMatrix& m);

// One solution x of m x = b, or nullopt when the system is inconsistent.
std::optional<std::vector<BigRat>> solve(const RatMatrix& m, const std::vector<BigRat>& b);

/// Exact complement of a spanned subspace: projection (dim × ambient) and
/// section (ambient × dim) with projection∘section = identity.
struct QuotientSpace {
    std::size_t ambient = 0;
    std::size_t dim = 0;
    RatMatrix projection;
    RatMatrix section;

    std::vector<BigRat> project(const std::vector<BigRat>& ambient_vec) const;
    std::vector<BigRat> lift(const std::vector<BigRat>& quotient_vec) const;
};

QuotientSpace quotient_basis(std::size_t ambient_dim,
                             const std::vector<std::vector<BigRat>>& relation_spanning_set);

}  // namespace depth

#endif
