#include "depth/chartable.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace depth {

namespace {

// exact division of a by monic b over ℤ; requires zero remainder
std::vector<BigInt> poly_divide_exact(std::vector<BigInt> a, const std::vector<BigInt>& b) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    if (b.empty() || b.back() != 1) throw std::logic_error("poly_divide_exact: divisor not monic");
    std::size_t db = b.size() - 1;
    if (a.size() < b.size()) throw std::logic_error("poly_divide_exact: deg(a) < deg(b)");
    std::vector<BigInt> q(a.size() - db);
    for (std::size_t i = a.size(); i-- > db;) {
        BigInt c = a[i];
        if (c == 0) continue;
        std::size_t k = i - db;
        q[k] = c;
        for (std::size_t j = 0; j <= db; ++j) a[k + j] -= c * b[j];
    }
    for (const auto& c : a)
        if (c != 0) throw std::logic_error("poly_divide_exact: nonzero remainder");
    return q;
}

}  // namespace

std::vector<BigInt> cyclotomic_polynomial(std::size_t e) {
    if (e == 0) throw std::invalid_argument("cyclotomic_polynomial: e = 0");
    static std::mutex cache_mutex;
    static std::map<std::size_t, std::vector<BigInt>> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(e);
        if (it != cache.end()) return it->second;
    }
    std::vector<BigInt> num(e + 1);
    num[0] = -1;
    num[e] = 1;
    for (std::size_t d = 1; d < e; ++d)
        if (e % d == 0) num = poly_divide_exact(std::move(num), cyclotomic_polynomial(d));
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache[e] = num;
    return num;
}

Cyclotomy::Cyclotomy(std::size_t e) : e_(e), phi_(cyclotomic_polynomial(e)) {}

CycVec Cyclotomy::integer(const BigInt& n) const {
    CycVec v(e_);
    v[0] = n;
    return v;
}

CycVec Cyclotomy::root_power(std::size_t j) const {
    CycVec v(e_);
    v[j % e_] = 1;
    return v;
}

CycVec Cyclotomy::add(const CycVec& a, const CycVec& b) const {
    CycVec c(e_);
    for (std::size_t i = 0; i < e_; ++i) c[i] = a[i] + b[i];
    return c;
}

CycVec Cyclotomy::sub(const CycVec& a, const CycVec& b) const {
    CycVec c(e_);
    for (std::size_t i = 0; i < e_; ++i) c[i] = a[i] - b[i];
    return c;
}

CycVec Cyclotomy::mul(const CycVec& a, const CycVec& b) const {
    CycVec c(e_);
    for (std::size_t i = 0; i < e_; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < e_; ++j) {
            if (b[j] == 0) continue;
            std::size_t k = i + j;
            if (k >= e_) k -= e_;
            c[k] += a[i] * b[j];
        }
    }
    return c;
}

CycVec Cyclotomy::conj(const CycVec& a) const {
    CycVec c(e_);
    for (std::size_t i = 0; i < e_; ++i) c[(e_ - i) % e_] += a[i];
    return c;
}

CycVec Cyclotomy::reduce(const CycVec& a) const {
    CycVec r = a;
    std::size_t dphi = phi_.size() - 1;
    for (std::size_t i = e_; i-- > dphi;) {
        if (r[i] == 0) continue;
        BigInt c = r[i];
        for (std::size_t j = 0; j <= dphi; ++j) r[i - dphi + j] -= c * phi_[j];
    }
    return r;
}

bool Cyclotomy::is_zero(const CycVec& a) const {
    CycVec r = reduce(a);
    return std::all_of(r.begin(), r.end(), [](const BigInt& x) { return x == 0; });
}

bool Cyclotomy::equal(const CycVec& a, const CycVec& b) const { return is_zero(sub(a, b)); }

std::optional<BigInt> Cyclotomy::as_integer(const CycVec& a) const {
    CycVec r = reduce(a);
    for (std::size_t i = 1; i < e_; ++i)
        if (r[i] != 0) return std::nullopt;
    return r[0];
}

int Cyclotomy::compare(const CycVec& a, const CycVec& b) const {
    CycVec ra = reduce(a), rb = reduce(b);
    for (std::size_t i = 0; i < e_; ++i) {
        if (ra[i] != rb[i]) return ra[i] > rb[i] ? -1 : 1;  // larger coefficient sorts first
    }
    return 0;
}

CycRatVec Cyclotomy::to_rat(const CycVec& a) const {
    CycRatVec r(e_);
    for (std::size_t i = 0; i < e_; ++i) r[i] = BigRat(a[i]);
    return r;
}

CycRatVec Cyclotomy::rat_add(const CycRatVec& a, const CycRatVec& b) const {
    CycRatVec c(e_);
    for (std::size_t i = 0; i < e_; ++i) c[i] = a[i] + b[i];
    return c;
}

CycRatVec Cyclotomy::rat_sub(const CycRatVec& a, const CycRatVec& b) const {
    CycRatVec c(e_);
    for (std::size_t i = 0; i < e_; ++i) c[i] = a[i] - b[i];
    return c;
}

CycRatVec Cyclotomy::rat_mul(const CycRatVec& a, const CycRatVec& b) const {
    CycRatVec c(e_);
    for (std::size_t i = 0; i < e_; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < e_; ++j) {
            if (b[j] == 0) continue;
            std::size_t k = i + j;
            if (k >= e_) k -= e_;
            c[k] += a[i] * b[j];
        }
    }
    return c;
}

CycRatVec Cyclotomy::rat_scale(const CycRatVec& a, const BigRat& s) const {
    CycRatVec c(e_);
    for (std::size_t i = 0; i < e_; ++i) c[i] = a[i] * s;
    return c;
}

CycRatVec Cyclotomy::rat_conj(const CycRatVec& a) const {
    CycRatVec c(e_);
    for (std::size_t i = 0; i < e_; ++i) c[(e_ - i) % e_] += a[i];
    return c;
}

CycRatVec Cyclotomy::rat_reduce(const CycRatVec& a) const {
    CycRatVec r = a;
    std::size_t dphi = phi_.size() - 1;
    for (std::size_t i = e_; i-- > dphi;) {
        if (r[i] == 0) continue;
        BigRat c = r[i];
        for (std::size_t j = 0; j <= dphi; ++j) r[i - dphi + j] -= c * BigRat(phi_[j]);
    }
    return r;
}

bool Cyclotomy::rat_equal(const CycRatVec& a, const CycRatVec& b) const {
    CycRatVec r = rat_reduce(rat_sub(a, b));
    return std::all_of(r.begin(), r.end(), [](const BigRat& x) { return x == 0; });
}

std::optional<BigRat> Cyclotomy::as_rational(const CycRatVec& a) const {
    CycRatVec r = rat_reduce(a);
    for (std::size_t i = 1; i < e_; ++i)
        if (r[i] != 0) return std::nullopt;
    return r[0];
}

CycVec embed_cyc(const CycVec& v, std::size_t e_from, std::size_t e_to) {
    if (e_to % e_from != 0) throw std::invalid_argument("embed_cyc: exponents incompatible");
    std::size_t k = e_to / e_from;
    CycVec out(e_to);
    for (std::size_t j = 0; j < e_from; ++j) out[j * k] = v[j];
    return out;
}

CycRatVec embed_cyc_rat(const CycRatVec& v, std::size_t e_from, std::size_t e_to) {
    if (e_to % e_from != 0) throw std::invalid_argument("embed_cyc_rat: exponents incompatible");
    std::size_t k = e_to / e_from;
    CycRatVec out(e_to);
    for (std::size_t j = 0; j < e_from; ++j) out[j * k] = v[j];
    return out;
}

// ---------------------------------------------------------------------------
// mod-p linear algebra for the Dixon step
// ---------------------------------------------------------------------------

namespace {

using u64 = std::uint64_t;

u64 mod_pow(u64 b, u64 e, u64 p) {
    u64 r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

u64 mod_inv(u64 a, u64 p) { return mod_pow(a % p, p - 2, p); }

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

u64 primitive_root(u64 p) {
    u64 phi = p - 1;
    std::vector<u64> prime_factors;
    u64 m = phi;
    for (u64 d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            prime_factors.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) prime_factors.push_back(m);
    for (u64 g = 2; g < p; ++g) {
        bool ok = true;
        for (u64 q : prime_factors)
            if (mod_pow(g, phi / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw std::logic_error("primitive_root: none found");
}

using ModMat = std::vector<std::vector<u64>>;

std::vector<std::size_t> rref_p(ModMat& a, u64 p) {
    std::vector<std::size_t> piv;
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0, row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t sel = row;
        while (sel < rows && a[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(a[sel], a[row]);
        u64 inv = mod_inv(a[row][col], p);
        for (std::size_t j = col; j < cols; ++j) a[row][j] = a[row][j] * inv % p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || a[i][col] == 0) continue;
            u64 f = a[i][col];
            for (std::size_t j = col; j < cols; ++j)
                a[i][j] = (a[i][j] + (p - f) * a[row][j]) % p;
        }
        piv.push_back(col);
        ++row;
    }
    return piv;
}

ModMat kernel_p(ModMat a, u64 p) {
    std::size_t cols = a.empty() ? 0 : a[0].size();
    auto piv = rref_p(a, p);
    std::vector<bool> is_piv(cols, false);
    for (auto c : piv) is_piv[c] = true;
    ModMat basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        std::vector<u64> v(cols, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = (p - a[i][f]) % p;
        basis.push_back(std::move(v));
    }
    return basis;
}

u64 det_p(ModMat a, u64 p) {
    std::size_t n = a.size();
    u64 det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && a[sel][col] == 0) ++sel;
        if (sel == n) return 0;
        if (sel != col) {
            std::swap(a[sel], a[col]);
            det = (p - det) % p;
        }
        det = det * a[col][col] % p;
        u64 inv = mod_inv(a[col][col], p);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a[i][col] == 0) continue;
            u64 f = a[i][col] * inv % p;
            for (std::size_t j = col; j < n; ++j) a[i][j] = (a[i][j] + (p - f) * a[col][j]) % p;
        }
    }
    return det % p;
}

// coefficients of det(λI − a) by interpolation at λ = 0..n
std::vector<u64> charpoly_p(const ModMat& a, u64 p) {
    std::size_t n = a.size();
    std::vector<u64> xs(n + 1), ys(n + 1);
    for (std::size_t t = 0; t <= n; ++t) {
        xs[t] = t % p;
        ModMat m = a;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) m[i][j] = (p - m[i][j]) % p;
            m[i][i] = (m[i][i] + xs[t]) % p;
        }
        ys[t] = det_p(std::move(m), p);
    }
    std::vector<u64> poly(n + 1, 0);
    for (std::size_t t = 0; t <= n; ++t) {
        std::vector<u64> basis{1};
        u64 denom = 1;
        for (std::size_t s = 0; s <= n; ++s) {
            if (s == t) continue;
            std::vector<u64> nb(basis.size() + 1, 0);
            for (std::size_t i = 0; i < basis.size(); ++i) {
                nb[i + 1] = (nb[i + 1] + basis[i]) % p;
                nb[i] = (nb[i] + basis[i] * ((p - xs[s]) % p)) % p;
            }
            basis = std::move(nb);
            denom = denom * ((xs[t] + p - xs[s]) % p) % p;
        }
        u64 f = ys[t] * mod_inv(denom, p) % p;
        for (std::size_t i = 0; i < basis.size(); ++i) poly[i] = (poly[i] + f * basis[i]) % p;
    }
    return poly;
}

std::vector<u64> poly_roots_p(const std::vector<u64>& poly, u64 p) {
    std::vector<u64> roots;
    for (u64 x = 0; x < p; ++x) {
        u64 v = 0;
        for (std::size_t i = poly.size(); i-- > 0;) v = (v * x + poly[i]) % p;
        if (v == 0) roots.push_back(x);
    }
    return roots;
}

}  // namespace

// ---------------------------------------------------------------------------
// CharacterTable
// ---------------------------------------------------------------------------

InductionMatrix::InductionMatrix(IntMatrix mm) : m(std::move(mm)) {
    if (!m.is_nonnegative()) throw std::invalid_argument("InductionMatrix: negative entry");
    if (m.has_zero_row()) throw std::invalid_argument("InductionMatrix: zero row");
    if (m.has_zero_column()) throw std::invalid_argument("InductionMatrix: zero column");
}

CharacterTable::CharacterTable(PermGroup g, std::size_t exponent, std::vector<Character> irrs)
    : group_(std::move(g)), cyc_(exponent), irreducibles_(std::move(irrs)) {
    finish_init();
}

std::size_t CharacterTable::class_of(const Permutation& p) const {
    return group_.conjugacy_classes().class_of_element[group_.index_of(p)];
}

void CharacterTable::finish_init() {
    const auto& cc = group_.conjugacy_classes();
    std::size_t s = cc.count();
    if (irreducibles_.size() != s)
        throw std::invalid_argument("CharacterTable: irreducible count != class count");
    inverse_class_.resize(s);
    for (std::size_t c = 0; c < s; ++c) {
        Permutation rep = group_.elements()[cc.rep_index[c]];
        inverse_class_[c] = cc.class_of_element[group_.index_of(rep.inverse())];
        if (rep.is_identity()) identity_class_ = c;
    }
    std::sort(irreducibles_.begin(), irreducibles_.end(),
              [&](const Character& a, const Character& b) {
                  if (a.degree != b.degree) return a.degree < b.degree;
                  for (std::size_t c = 0; c < a.values.size(); ++c) {
                      int cmp = cyc_.compare(a.values[c], b.values[c]);
                      if (cmp != 0) return cmp < 0;
                  }
                  return false;
              });
    BigInt sum_sq = 0;
    for (const auto& ch : irreducibles_) {
        if (ch.values.size() != s)
            throw std::invalid_argument("CharacterTable: character with wrong class count");
        auto deg = cyc_.as_integer(ch.values[identity_class_]);
        if (!deg || *deg != ch.degree)
            throw std::invalid_argument("CharacterTable: degree does not match identity value");
        sum_sq += ch.degree * ch.degree;
    }
    if (sum_sq != BigInt(static_cast<unsigned long>(group_.order())))
        throw std::invalid_argument("CharacterTable: sum of squared degrees != |G|");
    verify_orthogonality();
}

void CharacterTable::verify_orthogonality() const {
    std::size_t s = class_count();
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) {
            BigInt v = inner_product(i, j);
            if (v != BigInt(i == j ? 1 : 0))
                throw std::runtime_error("CharacterTable: row orthogonality failed");
        }
    for (std::size_t c = 0; c < s; ++c)
        for (std::size_t d = 0; d < s; ++d) {
            CycVec acc = cyc_.zero();
            for (const auto& ch : irreducibles_)
                acc = cyc_.add(acc, cyc_.mul(ch.values[c], ch.values[inverse_class_[d]]));
            BigInt expect = 0;
            if (c == d) expect = BigInt(static_cast<unsigned long>(group_.order() / class_size(c)));
            auto got = cyc_.as_integer(acc);
            if (!got || *got != expect)
                throw std::runtime_error("CharacterTable: column orthogonality failed");
        }
}

ClassFunction CharacterTable::to_class_function(std::size_t irr) const {
    ClassFunction f;
    f.exponent = exponent();
    for (const auto& v : irreducibles_[irr].values) f.values.push_back(cyc_.to_rat(v));
    return f;
}

ClassFunction CharacterTable::class_function_from_integers(const std::vector<BigInt>& per_class) const {
    if (per_class.size() != class_count())
        throw std::invalid_argument("class_function_from_integers: wrong length");
    ClassFunction f;
    f.exponent = exponent();
    for (const auto& n : per_class) f.values.push_back(cyc_.to_rat(cyc_.integer(n)));
    return f;
}

ClassFunction CharacterTable::regular_character() const {
    std::vector<BigInt> v(class_count());
    v[identity_class_] = BigInt(static_cast<unsigned long>(group_.order()));
    return class_function_from_integers(v);
}

ClassFunction CharacterTable::trivial_character() const {
    return class_function_from_integers(std::vector<BigInt>(class_count(), 1));
}

ClassFunction CharacterTable::product(const ClassFunction& a, const ClassFunction& b) const {
    ClassFunction f;
    f.exponent = exponent();
    for (std::size_t c = 0; c < class_count(); ++c)
        f.values.push_back(cyc_.rat_mul(a.values[c], b.values[c]));
    return f;
}

BigRat CharacterTable::inner_product_rational(const ClassFunction& a, const ClassFunction& b) const {
    if (a.values.size() != class_count() || b.values.size() != class_count())
        throw std::invalid_argument("inner_product: class count mismatch");
    CycRatVec acc(exponent());
    for (std::size_t c = 0; c < class_count(); ++c) {
        CycRatVec term = cyc_.rat_mul(a.values[c], b.values[inverse_class_[c]]);
        term = cyc_.rat_scale(term, BigRat(static_cast<unsigned long>(class_size(c))));
        acc = cyc_.rat_add(acc, term);
    }
    auto scalar = cyc_.as_rational(acc);
    if (!scalar) throw std::runtime_error("inner_product: value is not rational (corrupted table?)");
    return *scalar / BigRat(static_cast<unsigned long>(group_.order()));
}

BigInt CharacterTable::inner_product(const ClassFunction& a, const ClassFunction& b) const {
    BigRat r = inner_product_rational(a, b);
    if (r.get_den() != 1) throw std::runtime_error("inner_product: non-integer result");
    return r.get_num();
}

BigInt CharacterTable::inner_product(std::size_t i, std::size_t j) const {
    return inner_product(to_class_function(i), to_class_function(j));
}

std::vector<BigInt> CharacterTable::decompose(const ClassFunction& w) const {
    std::vector<BigInt> mults;
    for (std::size_t i = 0; i < irr_count(); ++i)
        mults.push_back(inner_product(w, to_class_function(i)));
    return mults;
}

std::set<std::size_t> CharacterTable::support(const ClassFunction& w) const {
    std::set<std::size_t> s;
    auto mults = decompose(w);
    for (std::size_t i = 0; i < mults.size(); ++i) {
        if (mults[i] < 0) throw std::runtime_error("support: negative multiplicity (not a character)");
        if (mults[i] > 0) s.insert(i);
    }
    return s;
}

CharacterTable CharacterTable::dixon(const PermGroup& g, std::optional<unsigned long> prime_override) {
    const auto& cc = g.conjugacy_classes();
    std::size_t s = cc.count();
    std::size_t e = g.exponent();
    unsigned long order = g.order();

    // class multiplication coefficients: a[i][j][k] = #{(x,y) ∈ C_i × C_j : xy = rep_k}
    std::vector<std::vector<std::vector<u64>>> a(
        s, std::vector<std::vector<u64>>(s, std::vector<u64>(s, 0)));
    for (std::size_t i = 0; i < s; ++i)
        for (auto xi : cc.class_elements[i]) {
            const Permutation x_inv = g.elements()[xi].inverse();
            for (std::size_t k = 0; k < s; ++k) {
                Permutation y = x_inv.compose(g.elements()[cc.rep_index[k]]);
                a[i][cc.class_of_element[g.index_of(y)]][k]++;
            }
        }

    std::size_t identity_class = 0;
    std::vector<std::size_t> inverse_class(s);
    for (std::size_t c = 0; c < s; ++c) {
        Permutation rep = g.elements()[cc.rep_index[c]];
        inverse_class[c] = cc.class_of_element[g.index_of(rep.inverse())];
        if (rep.is_identity()) identity_class = c;
    }

    auto try_prime = [&](u64 p) -> std::optional<CharacterTable> {
        // class-sum action matrices L_i[k][j] = a[i][j][k]
        std::vector<ModMat> L(s, ModMat(s, std::vector<u64>(s, 0)));
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < s; ++j)
                for (std::size_t k = 0; k < s; ++k) L[i][k][j] = a[i][j][k] % p;

        std::vector<ModMat> blocks;
        {
            ModMat full;
            for (std::size_t j = 0; j < s; ++j) {
                std::vector<u64> v(s, 0);
                v[j] = 1;
                full.push_back(std::move(v));
            }
            blocks.push_back(std::move(full));
        }
        for (std::size_t i = 0; i < s; ++i) {
            std::vector<ModMat> next;
            for (auto& blk : blocks) {
                if (blk.size() <= 1) {
                    next.push_back(std::move(blk));
                    continue;
                }
                std::size_t d = blk.size();
                // restriction R with L_i · B = B · R (columns of B = block vectors)
                ModMat aug(s, std::vector<u64>(2 * d, 0));
                for (std::size_t r = 0; r < s; ++r)
                    for (std::size_t cx = 0; cx < d; ++cx) aug[r][cx] = blk[cx][r];
                for (std::size_t r = 0; r < s; ++r)
                    for (std::size_t cx = 0; cx < d; ++cx) {
                        u64 acc = 0;
                        for (std::size_t t = 0; t < s; ++t)
                            acc = (acc + L[i][r][t] * blk[cx][t]) % p;
                        aug[r][d + cx] = acc;
                    }
                auto piv = rref_p(aug, p);
                if (piv.size() != d || piv.back() != d - 1) return std::nullopt;
                ModMat R(d, std::vector<u64>(d, 0));
                for (std::size_t r = 0; r < d; ++r)
                    for (std::size_t cx = 0; cx < d; ++cx) R[r][cx] = aug[r][d + cx];
                auto roots = poly_roots_p(charpoly_p(R, p), p);
                std::size_t found = 0;
                for (u64 lam : roots) {
                    ModMat shifted = R;
                    for (std::size_t r = 0; r < d; ++r) shifted[r][r] = (shifted[r][r] + p - lam) % p;
                    ModMat ker = kernel_p(std::move(shifted), p);
                    if (ker.empty()) continue;
                    ModMat sub;
                    for (auto& kv : ker) {
                        std::vector<u64> v(s, 0);
                        for (std::size_t cx = 0; cx < d; ++cx) {
                            if (kv[cx] == 0) continue;
                            for (std::size_t r = 0; r < s; ++r)
                                v[r] = (v[r] + kv[cx] * blk[cx][r]) % p;
                        }
                        sub.push_back(std::move(v));
                        ++found;
                    }
                    next.push_back(std::move(sub));
                }
                if (found != d) return std::nullopt;  // not diagonalizable over GF(p)
            }
            blocks = std::move(next);
        }
        for (const auto& blk : blocks)
            if (blk.size() != 1) return std::nullopt;  // separation failure

        u64 w = primitive_root(p);
        u64 z = mod_pow(w, (p - 1) / e, p);  // canonical primitive e-th root of unity

        std::vector<Character> irrs;
        for (const auto& blk : blocks) {
            const std::vector<u64>& v = blk[0];
            std::size_t nz = 0;
            while (v[nz] == 0) ++nz;
            u64 vnz_inv = mod_inv(v[nz], p);
            std::vector<u64> omega(s);
            for (std::size_t i = 0; i < s; ++i) {
                u64 acc = 0;
                for (std::size_t t = 0; t < s; ++t) acc = (acc + L[i][nz][t] * v[t]) % p;
                omega[i] = acc * vnz_inv % p;
                for (std::size_t r = 0; r < s; ++r) {
                    u64 lhs = 0;
                    for (std::size_t t = 0; t < s; ++t) lhs = (lhs + L[i][r][t] * v[t]) % p;
                    if (lhs != omega[i] * v[r] % p) return std::nullopt;
                }
            }
            u64 acc = 0;
            for (std::size_t k = 0; k < s; ++k) {
                u64 term = omega[k] * omega[inverse_class[k]] % p;
                acc = (acc + term * mod_inv(cc.class_sizes[k] % p, p)) % p;
            }
            if (acc == 0) return std::nullopt;
            u64 dsq = order % p * mod_inv(acc, p) % p;
            u64 deg = 0;
            for (u64 d = 1; d * d <= order; ++d)
                if (d * d % p == dsq) {
                    deg = d;
                    break;
                }
            if (deg == 0) return std::nullopt;
            std::vector<u64> chi_p(s);
            for (std::size_t k = 0; k < s; ++k)
                chi_p[k] = omega[k] * deg % p * mod_inv(cc.class_sizes[k] % p, p) % p;

            Character ch;
            ch.degree = BigInt(static_cast<unsigned long>(deg));
            ch.values.assign(s, CycVec(e));
            for (std::size_t k = 0; k < s; ++k) {
                Permutation rep = g.elements()[cc.rep_index[k]];
                std::size_t m = g.element_order(cc.rep_index[k]);
                u64 zm_inv = mod_inv(mod_pow(z, e / m, p), p);
                std::vector<u64> chi_pows(m);
                Permutation pw(g.degree());
                for (std::size_t j = 0; j < m; ++j) {
                    chi_pows[j] = chi_p[cc.class_of_element[g.index_of(pw)]];
                    pw = pw.compose(rep);
                }
                u64 minv = mod_inv(m % p, p);
                BigInt total = 0;
                for (std::size_t t = 0; t < m; ++t) {
                    u64 acc2 = 0, zpow = 1;
                    u64 step = mod_pow(zm_inv, t, p);
                    for (std::size_t j = 0; j < m; ++j) {
                        acc2 = (acc2 + chi_pows[j] * zpow) % p;
                        zpow = zpow * step % p;
                    }
                    u64 mult = acc2 * minv % p;
                    if (mult > deg) return std::nullopt;  // invalid multiplicity: bad prime
                    ch.values[k][t * (e / m)] = BigInt(static_cast<unsigned long>(mult));
                    total += BigInt(static_cast<unsigned long>(mult));
                }
                if (total != ch.degree) return std::nullopt;
            }
            irrs.push_back(std::move(ch));
        }
        try {
            CharacterTable t(g, e, std::move(irrs));
            t.dixon_prime_ = p;
            return t;
        } catch (const std::exception&) {
            return std::nullopt;
        }
    };

    if (prime_override) {
        u64 p = *prime_override;
        if (!is_prime_u64(p) || (p - 1) % e != 0 || p <= 2 * order)
            throw std::invalid_argument("dixon: override prime must be ≡ 1 mod exponent and > 2|G|");
        auto t = try_prime(p);
        if (!t) throw std::runtime_error("dixon: eigenspace separation failed for override prime");
        return *t;
    }

    // smallest p ≡ 1 (mod e) with p > 2|G|; on separation failure take the next one
    u64 p = ((2 * static_cast<u64>(order) + e - 1) / e) * e + 1;
    for (int attempts = 0; attempts < 64; p += e) {
        if (!is_prime_u64(p)) continue;
        ++attempts;
        auto t = try_prime(p);
        if (t) return *t;
    }
    throw std::runtime_error("dixon: no suitable prime produced a table");
}

// ---------------------------------------------------------------------------
// induction / restriction machinery
// ---------------------------------------------------------------------------

ClassFunction restrict_character(const CharacterTable& big, const CharacterTable& sub,
                                 const ClassFunction& chi) {
    if (!is_subgroup(sub.group(), big.group()))
        throw std::invalid_argument("restrict_character: not a subgroup");
    if (chi.exponent != big.exponent())
        throw std::invalid_argument("restrict_character: exponent mismatch");
    ClassFunction f;
    f.exponent = big.exponent();
    for (std::size_t c = 0; c < sub.class_count(); ++c)
        f.values.push_back(chi.values[big.class_of(sub.class_rep(c))]);
    return f;
}

ClassFunction induce_character(const CharacterTable& sub, const CharacterTable& big,
                               const ClassFunction& chi) {
    if (!is_subgroup(sub.group(), big.group()))
        throw std::invalid_argument("induce_character: not a subgroup");
    if (chi.exponent != big.exponent())
        throw std::invalid_argument("induce_character: values must be given in the big exponent");
    const PermGroup& g = big.group();
    const PermGroup& h = sub.group();
    ClassFunction f;
    f.exponent = big.exponent();
    BigRat inv_h(1, static_cast<unsigned long>(h.order()));
    // (χ↑G)(y) = |H|^{-1} Σ_{x ∈ G : x^{-1} y x ∈ H} χ(x^{-1} y x)
    for (std::size_t c = 0; c < big.class_count(); ++c) {
        Permutation rep = big.class_rep(c);
        CycRatVec acc(big.exponent());
        for (const auto& x : g.elements()) {
            Permutation y = x.inverse().compose(rep).compose(x);
            if (!h.contains(y)) continue;
            acc = big.cyclotomy().rat_add(acc, chi.values[sub.class_of(y)]);
        }
        f.values.push_back(big.cyclotomy().rat_scale(acc, inv_h));
    }
    return f;
}

InductionMatrix induction_matrix(const CharacterTable& sub, const CharacterTable& big) {
    if (!is_subgroup(sub.group(), big.group()))
        throw std::invalid_argument("induction_matrix: not a subgroup");
    std::size_t r = sub.irr_count(), s = big.irr_count();
    std::size_t eh = sub.exponent(), eg = big.exponent();
    const Cyclotomy cy(eg);
    IntMatrix m(r, s);
    for (std::size_t i = 0; i < r; ++i) {
        ClassFunction chi_h;
        chi_h.exponent = eg;
        for (const auto& v : sub.irreducibles()[i].values)
            chi_h.values.push_back(embed_cyc_rat(sub.cyclotomy().to_rat(v), eh, eg));
        ClassFunction up = induce_character(sub, big, chi_h);
        for (std::size_t j = 0; j < s; ++j) {
            BigInt via_induction = big.inner_product(up, big.to_class_function(j));
            // Frobenius reciprocity route: ⟨χ_i, ψ_j↓H⟩ over H
            ClassFunction down = restrict_character(big, sub, big.to_class_function(j));
            CycRatVec acc(eg);
            for (std::size_t c = 0; c < sub.class_count(); ++c) {
                CycRatVec term = cy.rat_mul(chi_h.values[c], down.values[sub.inverse_class(c)]);
                acc = cy.rat_add(
                    acc, cy.rat_scale(term, BigRat(static_cast<unsigned long>(sub.class_size(c)))));
            }
            auto scalar = cy.as_rational(acc);
            if (!scalar) throw std::runtime_error("induction_matrix: non-rational inner product");
            BigRat via_restriction = *scalar / BigRat(static_cast<unsigned long>(sub.group().order()));
            if (BigRat(via_induction) != via_restriction)
                throw std::runtime_error("induction_matrix: Frobenius reciprocity routes disagree");
            m.at(i, j) = via_induction;
        }
    }
    return InductionMatrix(std::move(m));
}

ClassFunction perm_character(const CharacterTable& big, const PermGroup& h) {
    CosetDecomposition cosets = left_cosets(h, big.group());
    const PermGroup& g = big.group();
    std::vector<BigInt> vals;
    for (std::size_t c = 0; c < big.class_count(); ++c) {
        Permutation rep = big.class_rep(c);
        long fixed = 0;
        for (std::size_t k = 0; k < cosets.count(); ++k) {
            const Permutation& x = g.elements()[cosets.rep_indices[k]];
            if (cosets.coset_of_element[g.index_of(rep.compose(x))] == k) ++fixed;
        }
        vals.push_back(fixed);
    }
    ClassFunction f = big.class_function_from_integers(vals);
    // equals trivial↑G (asserted)
    CharacterTable sub = CharacterTable::dixon(h);
    ClassFunction triv;
    triv.exponent = big.exponent();
    triv.values.assign(sub.class_count(), CycRatVec(big.exponent()));
    for (auto& v : triv.values) v[0] = 1;
    ClassFunction induced = induce_character(sub, big, triv);
    for (std::size_t c = 0; c < big.class_count(); ++c)
        if (!big.cyclotomy().rat_equal(f.values[c], induced.values[c]))
            throw std::runtime_error("perm_character: disagrees with induced trivial character");
    return f;
}

std::vector<std::set<std::size_t>> tensor_support_sequence(const CharacterTable& table,
                                                           const ClassFunction& w,
                                                           std::size_t n_max) {
    std::vector<std::set<std::size_t>> out;
    ClassFunction power = w;
    for (std::size_t n = 1; n <= n_max; ++n) {
        out.push_back(table.support(power));
        if (n < n_max) power = table.product(power, w);
    }
    return out;
}

}  // namespace depth
