#ifndef DEPTH_CHARTABLE_HPP
#define DEPTH_CHARTABLE_HPP

#include <optional>
#include <set>
#include <vector>

#include "depth/exact.hpp"
#include "depth/perm.hpp"

namespace depth {

// Coefficient vector of Σ_j m_j ζ_e^j, length e. Character values use BigInt
// coefficients (eigenvalue multiplicities); derived class functions may need
// rational ones.
using CycVec = std::vector<BigInt>;
using CycRatVec = std::vector<BigRat>;

// Φ_e over ℤ by iterated exact division of x^e − 1; index = power, monic.
std::vector<BigInt> cyclotomic_polynomial(std::size_t e);

/// Arithmetic in ℤ[ζ_e] (and ℚ[ζ_e]) with equality decided modulo Φ_e.
class Cyclotomy {
public:
    explicit Cyclotomy(std::size_t e);

    std::size_t exponent() const { return e_; }
    const std::vector<BigInt>& phi() const { return phi_; }

    CycVec zero() const { return CycVec(e_); }
    CycVec integer(const BigInt& n) const;
    CycVec root_power(std::size_t j) const;  // ζ_e^j

    CycVec add(const CycVec& a, const CycVec& b) const;
    CycVec sub(const CycVec& a, const CycVec& b) const;
    CycVec mul(const CycVec& a, const CycVec& b) const;  // cyclic convolution
    CycVec conj(const CycVec& a) const;                  // ζ^j -> ζ^{-j}
    CycVec reduce(const CycVec& a) const;                // canonical: degree < φ(e), padded to length e
    bool is_zero(const CycVec& a) const;
    bool equal(const CycVec& a, const CycVec& b) const;
    std::optional<BigInt> as_integer(const CycVec& a) const;
    // three-way compare of canonical forms; larger leading coefficients first
    int compare(const CycVec& a, const CycVec& b) const;

    CycRatVec to_rat(const CycVec& a) const;
    CycRatVec rat_add(const CycRatVec& a, const CycRatVec& b) const;
    CycRatVec rat_sub(const CycRatVec& a, const CycRatVec& b) const;
    CycRatVec rat_mul(const CycRatVec& a, const CycRatVec& b) const;
    CycRatVec rat_scale(const CycRatVec& a, const BigRat& s) const;
    CycRatVec rat_conj(const CycRatVec& a) const;
    CycRatVec rat_reduce(const CycRatVec& a) const;
    bool rat_equal(const CycRatVec& a, const CycRatVec& b) const;
    std::optional<BigRat> as_rational(const CycRatVec& a) const;

private:
    std::size_t e_;
    std::vector<BigInt> phi_;
};

// Index rescaling ℤ[ζ_{e_from}] -> ℤ[ζ_{e_to}] for e_from | e_to.
CycVec embed_cyc(const CycVec& v, std::size_t e_from, std::size_t e_to);
CycRatVec embed_cyc_rat(const CycRatVec& v, std::size_t e_from, std::size_t e_to);

/// Irreducible character: degree plus one exact cyclotomic value per class.
struct Character {
    BigInt degree;
    std::vector<CycVec> values;
};

/// Class function with rational cyclotomic values (induced characters live here).
struct ClassFunction {
    std::size_t exponent = 1;
    std::vector<CycRatVec> values;
};

/// Exact complex character table computed by the Burnside–Dixon method.
class CharacterTable {
public:
    static CharacterTable dixon(const PermGroup& g,
                                std::optional<unsigned long> prime_override = std::nullopt);
    // assemble from previously emitted data; re-verifies orthogonality
    CharacterTable(PermGroup g, std::size_t exponent, std::vector<Character> irreducibles);

    const PermGroup& group() const { return group_; }
    const Cyclotomy& cyclotomy() const { return cyc_; }
    std::size_t exponent() const { return cyc_.exponent(); }
    std::size_t class_count() const { return group_.conjugacy_classes().count(); }
    std::size_t irr_count() const { return irreducibles_.size(); }
    const std::vector<Character>& irreducibles() const { return irreducibles_; }

    std::size_t class_of(const Permutation& p) const;
    std::size_t inverse_class(std::size_t c) const { return inverse_class_[c]; }
    std::size_t class_size(std::size_t c) const { return group_.conjugacy_classes().class_sizes[c]; }
    Permutation class_rep(std::size_t c) const {
        return group_.elements()[group_.conjugacy_classes().rep_index[c]];
    }
    std::size_t identity_class() const { return identity_class_; }
    unsigned long dixon_prime() const { return dixon_prime_; }

    ClassFunction to_class_function(std::size_t irr) const;
    ClassFunction class_function_from_integers(const std::vector<BigInt>& per_class) const;
    ClassFunction regular_character() const;
    ClassFunction trivial_character() const;
    ClassFunction product(const ClassFunction& a, const ClassFunction& b) const;  // pointwise

    // ⟨a,b⟩ = |G|^{-1} Σ_c |c| a(c) b(c^{-1}); must reduce to a rational.
    BigRat inner_product_rational(const ClassFunction& a, const ClassFunction& b) const;
    // integer-asserting form used for genuine characters
    BigInt inner_product(const ClassFunction& a, const ClassFunction& b) const;
    BigInt inner_product(std::size_t irr_a, std::size_t irr_b) const;

    // multiplicities ⟨w, χ_i⟩ for every irreducible (asserted integral)
    std::vector<BigInt> decompose(const ClassFunction& w) const;
    std::set<std::size_t> support(const ClassFunction& w) const;  // asserts multiplicities >= 0

    void verify_orthogonality() const;  // throws on any failure

private:
    PermGroup group_;
    Cyclotomy cyc_;
    std::vector<Character> irreducibles_;
    std::vector<std::size_t> inverse_class_;
    std::size_t identity_class_ = 0;
    unsigned long dixon_prime_ = 0;

    void finish_init();  // inverse classes, sorting, orthogonality
};

// H must be a subgroup of G's group at the same degree.
ClassFunction restrict_character(const CharacterTable& big, const CharacterTable& sub,
                                 const ClassFunction& chi);
ClassFunction induce_character(const CharacterTable& sub, const CharacterTable& big,
                               const ClassFunction& chi);

/// Induction/restriction multiplicity matrix M with rows Irr(H), columns Irr(G);
/// both Frobenius routes are computed and must agree.
struct InductionMatrix {
    IntMatrix m;
    InductionMatrix() : m(1, 1) {}
    explicit InductionMatrix(IntMatrix mm);  // validates: nonnegative, no zero row/column
};

InductionMatrix induction_matrix(const CharacterTable& sub, const CharacterTable& big);

// Permutation character of G on the left cosets of H: g -> #fixed cosets.
ClassFunction perm_character(const CharacterTable& big, const PermGroup& h);

// Supports of w, w^{⊗2}, ..., w^{⊗n_max} as sets of irreducible indices.
std::vector<std::set<std::size_t>> tensor_support_sequence(const CharacterTable& table,
                                                           const ClassFunction& w,
                                                           std::size_t n_max);

}  // namespace depth

#endif
