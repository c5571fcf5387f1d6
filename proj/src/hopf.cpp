#include "depth/hopf.hpp"

#include <algorithm>
#include <stdexcept>

namespace depth {

namespace {

RatVec unit_vec(std::size_t dim, std::size_t i) {
    RatVec v(dim);
    v[i] = 1;
    return v;
}

RatVec scaled_add(RatVec acc, const RatVec& v, const BigRat& c) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) acc[i] += c * v[i];
    return acc;
}

bool is_zero_vec(const RatVec& v) {
    return std::all_of(v.begin(), v.end(), [](const BigRat& x) { return x == 0; });
}

RatMatrix invert(const RatMatrix& m, const char* what) {
    if (m.rows() != m.cols()) throw std::invalid_argument(std::string(what) + ": not square");
    std::size_t n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    std::vector<std::size_t> piv;
    RatMatrix r = rref(aug, &piv);
    if (piv.size() != n || piv.back() != n - 1)
        throw std::runtime_error(std::string(what) + ": singular matrix");
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.at(i, n + j);
    return inv;
}

}  // namespace

AlgData AlgData::zero(std::size_t dim) {
    AlgData a;
    a.dim = dim;
    a.mult.assign(dim * dim * dim, BigRat());
    a.unit.assign(dim, BigRat());
    return a;
}

RatVec AlgData::basis_mul(std::size_t i, std::size_t j) const {
    RatVec v(dim);
    for (std::size_t k = 0; k < dim; ++k) v[k] = m(i, j, k);
    return v;
}

RatVec AlgData::mul_vec(const RatVec& x, const RatVec& y) const {
    RatVec v(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (y[j] == 0) continue;
            BigRat c = x[i] * y[j];
            for (std::size_t k = 0; k < dim; ++k) {
                const BigRat& t = m(i, j, k);
                if (t != 0) v[k] += c * t;
            }
        }
    }
    return v;
}

RatMatrix AlgData::left_mult(const RatVec& x) const {
    RatMatrix out(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        RatVec col = mul_vec(x, unit_vec(dim, j));
        for (std::size_t k = 0; k < dim; ++k) out.at(k, j) = col[k];
    }
    return out;
}

RatMatrix AlgData::right_mult(const RatVec& x) const {
    RatMatrix out(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        RatVec col = mul_vec(unit_vec(dim, j), x);
        for (std::size_t k = 0; k < dim; ++k) out.at(k, j) = col[k];
    }
    return out;
}

RatMatrix center_basis(const AlgData& a) {
    // z with z·e_j = e_j·z for all j: kernel of the stacked commutators
    std::size_t d = a.dim;
    RatMatrix sys(d * d, d);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t k = 0; k < d; ++k)
                sys.at(j * d + k, i) = a.m(i, j, k) - a.m(j, i, k);
    }
    return kernel_basis(sys);
}

std::size_t center_dimension(const AlgData& a) { return center_basis(a).rows(); }

BigRat HopfData::counit_of(const RatVec& x) const {
    BigRat acc;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0) acc += x[i] * counit[i];
    return acc;
}

std::string AxiomReport::describe() const {
    if (ok) return "all axioms hold";
    std::string s = failed_axiom + " fails at basis tuple (";
    for (std::size_t i = 0; i < witness.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(witness[i]);
    }
    s += ")";
    return s;
}

AxiomReport verify_algebra(const AlgData& a) {
    AxiomReport rep;
    std::size_t d = a.dim;
    // two-sided unit
    for (std::size_t i = 0; i < d; ++i) {
        RatVec e = unit_vec(d, i);
        if (a.mul_vec(a.unit, e) != e) return {false, "left unit law", {i}};
        if (a.mul_vec(e, a.unit) != e) return {false, "right unit law", {i}};
    }
    // associativity on all basis triples
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            RatVec pij = a.basis_mul(i, j);
            for (std::size_t k = 0; k < d; ++k) {
                RatVec lhs(d), rhs(d);
                for (std::size_t t = 0; t < d; ++t) {
                    if (pij[t] != 0)
                        for (std::size_t l = 0; l < d; ++l) {
                            const BigRat& c = a.m(t, k, l);
                            if (c != 0) lhs[l] += pij[t] * c;
                        }
                    const BigRat& cjk = a.m(j, k, t);
                    if (cjk != 0)
                        for (std::size_t l = 0; l < d; ++l) {
                            const BigRat& c = a.m(i, t, l);
                            if (c != 0) rhs[l] += cjk * c;
                        }
                }
                if (lhs != rhs) return {false, "associativity", {i, j, k}};
            }
        }
    return rep;
}

namespace {

// sparse iteration over Δ(e_i)
template <typename F>
void for_comult(const HopfData& h, std::size_t i, F&& f) {
    for (std::size_t j = 0; j < h.dim(); ++j)
        for (std::size_t k = 0; k < h.dim(); ++k) {
            const BigRat& c = h.c(i, j, k);
            if (c != 0) f(j, k, c);
        }
}

AxiomReport verify_coalgebra(std::size_t d, const std::vector<BigRat>& comult, const RatVec& counit) {
    std::vector<std::vector<std::tuple<std::size_t, std::size_t, BigRat>>> delta(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                const BigRat& c = comult[(i * d + j) * d + k];
                if (c != 0) delta[i].emplace_back(j, k, c);
            }
    // coassociativity: (Δ⊗id)Δ = (id⊗Δ)Δ, checked per basis vector
    std::vector<BigRat> lhs(d * d * d), rhs(d * d * d);
    for (std::size_t i = 0; i < d; ++i) {
        std::fill(lhs.begin(), lhs.end(), BigRat());
        std::fill(rhs.begin(), rhs.end(), BigRat());
        for (const auto& [t, x, cl] : delta[i])
            for (const auto& [j, k, q] : delta[t]) lhs[(j * d + k) * d + x] += cl * q;
        for (const auto& [x, t, cr] : delta[i])
            for (const auto& [k, l, q] : delta[t]) rhs[(x * d + k) * d + l] += cr * q;
        if (lhs != rhs) return {false, "coassociativity", {i}};
        // counit laws
        RatVec left(d), right(d);
        for (const auto& [j, k, q] : delta[i]) {
            left[k] += q * counit[j];
            right[j] += q * counit[k];
        }
        if (left != unit_vec(d, i)) return {false, "left counit law", {i}};
        if (right != unit_vec(d, i)) return {false, "right counit law", {i}};
    }
    return {};
}

}  // namespace

AxiomReport verify_hopf(const HopfData& h) {
    AxiomReport rep = verify_algebra(h.alg);
    if (!rep.ok) return rep;
    rep = verify_coalgebra(h.dim(), h.comult, h.counit);
    if (!rep.ok) return rep;
    std::size_t d = h.dim();

    // sparse views of Δ and of the pairwise products
    std::vector<std::vector<std::tuple<std::size_t, std::size_t, BigRat>>> delta(d);
    for (std::size_t i = 0; i < d; ++i)
        for_comult(h, i, [&](std::size_t j, std::size_t k, const BigRat& c) {
            delta[i].emplace_back(j, k, c);
        });
    std::vector<std::vector<std::pair<std::size_t, BigRat>>> prod(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                const BigRat& c = h.alg.m(i, j, k);
                if (c != 0) prod[i * d + j].emplace_back(k, c);
            }

    // Δ and ε are algebra maps; Δ(1) = 1⊗1, ε(1) = 1
    {
        RatVec delta_unit(d * d);
        for (std::size_t i = 0; i < d; ++i) {
            if (h.alg.unit[i] == 0) continue;
            for (const auto& [j, k, c] : delta[i]) delta_unit[j * d + k] += h.alg.unit[i] * c;
        }
        RatVec expect(d * d);
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) expect[j * d + k] = h.alg.unit[j] * h.alg.unit[k];
        if (delta_unit != expect) return {false, "comultiplicativity of the unit", {}};
        if (h.counit_of(h.alg.unit) != 1) return {false, "counit of the unit", {}};
    }
    RatVec lhs(d * d), rhs(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            std::fill(lhs.begin(), lhs.end(), BigRat());
            std::fill(rhs.begin(), rhs.end(), BigRat());
            // Δ(e_i e_j)
            for (const auto& [t, pc] : prod[i * d + j])
                for (const auto& [a, b, c] : delta[t]) lhs[a * d + b] += pc * c;
            // Δ(e_i)·Δ(e_j) in H⊗H
            for (const auto& [a, b, ci] : delta[i])
                for (const auto& [p, q, cj] : delta[j]) {
                    BigRat c = ci * cj;
                    for (const auto& [x, ma] : prod[a * d + p])
                        for (const auto& [y, mb] : prod[b * d + q]) rhs[x * d + y] += c * ma * mb;
                }
            if (lhs != rhs) return {false, "bialgebra compatibility", {i, j}};
            // ε multiplicative
            BigRat el;
            for (const auto& [t, pc] : prod[i * d + j]) el += pc * h.counit[t];
            if (el != h.counit[i] * h.counit[j]) return {false, "counit multiplicativity", {i, j}};
        }

    // antipode axiom: m(S⊗id)Δ = uε = m(id⊗S)Δ
    for (std::size_t i = 0; i < d; ++i) {
        RatVec left(d), right(d);
        for_comult(h, i, [&](std::size_t j, std::size_t k, const BigRat& c) {
            RatVec sj(d), sk(d);
            for (std::size_t t = 0; t < d; ++t) {
                sj[t] = h.antipode.at(t, j);
                sk[t] = h.antipode.at(t, k);
            }
            left = scaled_add(std::move(left), h.alg.mul_vec(sj, unit_vec(d, k)), c);
            right = scaled_add(std::move(right), h.alg.mul_vec(unit_vec(d, j), sk), c);
        });
        RatVec expect(d);
        for (std::size_t t = 0; t < d; ++t) expect[t] = h.counit[i] * h.alg.unit[t];
        if (left != expect) return {false, "antipode axiom (left)", {i}};
        if (right != expect) return {false, "antipode axiom (right)", {i}};
    }
    return {};
}

RatVec FactorizationMap::apply(const RatVec& b_vec, const RatVec& a_vec) const {
    RatVec out(dim_a * dim_b);
    for (std::size_t ib = 0; ib < dim_b; ++ib) {
        if (b_vec[ib] == 0) continue;
        for (std::size_t ia = 0; ia < dim_a; ++ia) {
            if (a_vec[ia] == 0) continue;
            BigRat c = b_vec[ib] * a_vec[ia];
            std::size_t col = ib * dim_a + ia;
            for (std::size_t r = 0; r < out.size(); ++r) {
                const BigRat& v = matrix.at(r, col);
                if (v != 0) out[r] += c * v;
            }
        }
    }
    return out;
}

FactorizationMap flip_map(std::size_t dim_a, std::size_t dim_b) {
    FactorizationMap f;
    f.dim_a = dim_a;
    f.dim_b = dim_b;
    f.matrix = RatMatrix(dim_a * dim_b, dim_b * dim_a);
    for (std::size_t ib = 0; ib < dim_b; ++ib)
        for (std::size_t ia = 0; ia < dim_a; ++ia) f.matrix.at(ia * dim_b + ib, ib * dim_a + ia) = 1;
    return f;
}

AxiomReport check_factorization(const AlgData& a, const AlgData& b, const FactorizationMap& psi) {
    if (psi.dim_a != a.dim || psi.dim_b != b.dim ||
        psi.matrix.rows() != a.dim * b.dim || psi.matrix.cols() != b.dim * a.dim)
        throw std::invalid_argument("check_factorization: shape mismatch");
    std::size_t da = a.dim, db = b.dim;
    // unit laws
    for (std::size_t ia = 0; ia < da; ++ia) {
        RatVec got = psi.apply(b.unit, unit_vec(da, ia));
        RatVec expect(da * db);
        for (std::size_t jb = 0; jb < db; ++jb) expect[ia * db + jb] = b.unit[jb];
        if (got != expect) return {false, "psi unit law on 1_B⊗a", {ia}};
    }
    for (std::size_t ib = 0; ib < db; ++ib) {
        RatVec got = psi.apply(unit_vec(db, ib), a.unit);
        RatVec expect(da * db);
        for (std::size_t ja = 0; ja < da; ++ja) expect[ja * db + ib] = a.unit[ja];
        if (got != expect) return {false, "psi unit law on b⊗1_A", {ib}};
    }
    // octagon: (a d_α)_β ⊗ b^β c^α = a_β d_α ⊗ (b^β c)^α for basis a,d ∈ A, b,c ∈ B
    for (std::size_t ia = 0; ia < da; ++ia)
        for (std::size_t ib = 0; ib < db; ++ib)
            for (std::size_t ic = 0; ic < db; ++ic)
                for (std::size_t id = 0; id < da; ++id) {
                    RatVec lhs(da * db), rhs(da * db);
                    // lhs: ψ(c⊗d) = d_α ⊗ c^α, then ψ(b ⊗ a·d_α), then multiply c^α on the right in B
                    RatVec psi_cd = psi.apply(unit_vec(db, ic), unit_vec(da, id));
                    for (std::size_t ja = 0; ja < da; ++ja)
                        for (std::size_t jb = 0; jb < db; ++jb) {
                            const BigRat& c1 = psi_cd[ja * db + jb];
                            if (c1 == 0) continue;
                            RatVec ad = a.basis_mul(ia, ja);
                            RatVec inner = psi.apply(unit_vec(db, ib), ad);
                            for (std::size_t ka = 0; ka < da; ++ka)
                                for (std::size_t kb = 0; kb < db; ++kb) {
                                    const BigRat& c2 = inner[ka * db + kb];
                                    if (c2 == 0) continue;
                                    for (std::size_t t = 0; t < db; ++t) {
                                        const BigRat& mb = b.m(kb, jb, t);
                                        if (mb != 0) lhs[ka * db + t] += c1 * c2 * mb;
                                    }
                                }
                        }
                    // rhs: ψ(b⊗a) = a_β⊗b^β, multiply b^β·c in B, ψ of that against d,
                    // then multiply a_β on the left in A
                    RatVec psi_ba = psi.apply(unit_vec(db, ib), unit_vec(da, ia));
                    for (std::size_t pa = 0; pa < da; ++pa)
                        for (std::size_t pb = 0; pb < db; ++pb) {
                            const BigRat& c1 = psi_ba[pa * db + pb];
                            if (c1 == 0) continue;
                            RatVec bc = b.basis_mul(pb, ic);
                            RatVec inner(da * db);
                            for (std::size_t y = 0; y < db; ++y) {
                                if (bc[y] == 0) continue;
                                RatVec part = psi.apply(unit_vec(db, y), unit_vec(da, id));
                                inner = scaled_add(std::move(inner), part, bc[y]);
                            }
                            for (std::size_t ka = 0; ka < da; ++ka)
                                for (std::size_t kb = 0; kb < db; ++kb) {
                                    const BigRat& c2 = inner[ka * db + kb];
                                    if (c2 == 0) continue;
                                    for (std::size_t t = 0; t < da; ++t) {
                                        const BigRat& ma = a.m(pa, ka, t);
                                        if (ma != 0) rhs[t * db + kb] += c1 * c2 * ma;
                                    }
                                }
                        }
                    if (lhs != rhs) return {false, "factorization octagon", {ia, ib, ic, id}};
                }
    return {};
}

AxiomReport check_embedding(const AlgData& sub, const AlgData& big, const SubalgebraEmbedding& e) {
    if (e.map.rows() != big.dim || e.map.cols() != sub.dim)
        throw std::invalid_argument("check_embedding: shape mismatch");
    if (rank(e.map) != sub.dim) return {false, "embedding injectivity", {}};
    if (e.apply(sub.unit) != big.unit) return {false, "embedding unit", {}};
    for (std::size_t i = 0; i < sub.dim; ++i)
        for (std::size_t j = 0; j < sub.dim; ++j) {
            RatVec lhs = big.mul_vec(e.apply(unit_vec(sub.dim, i)), e.apply(unit_vec(sub.dim, j)));
            RatVec rhs = e.apply(sub.basis_mul(i, j));
            if (lhs != rhs) return {false, "embedding multiplicativity", {i, j}};
        }
    return {};
}

FactorizationAlgebra factorization_algebra(const AlgData& a, const AlgData& b,
                                           const FactorizationMap& psi) {
    AxiomReport pre = check_factorization(a, b, psi);
    if (!pre.ok) throw std::runtime_error("factorization_algebra: " + pre.describe());
    std::size_t da = a.dim, db = b.dim, d = da * db;
    FactorizationAlgebra out;
    out.psi = psi;
    out.algebra = AlgData::zero(d);
    for (std::size_t ia = 0; ia < da; ++ia)
        for (std::size_t ib = 0; ib < db; ++ib)
            for (std::size_t ic = 0; ic < da; ++ic)
                for (std::size_t id = 0; id < db; ++id) {
                    // (e_ia⊗e_ib)(e_ic⊗e_id) = e_ia·ψ(e_ib⊗e_ic)·e_id
                    std::size_t row = ia * db + ib, col = ic * db + id;
                    RatVec mid = psi.apply(unit_vec(db, ib), unit_vec(da, ic));
                    for (std::size_t ja = 0; ja < da; ++ja)
                        for (std::size_t jb = 0; jb < db; ++jb) {
                            const BigRat& c = mid[ja * db + jb];
                            if (c == 0) continue;
                            for (std::size_t ka = 0; ka < da; ++ka) {
                                const BigRat& ma = a.m(ia, ja, ka);
                                if (ma == 0) continue;
                                for (std::size_t kb = 0; kb < db; ++kb) {
                                    const BigRat& mb = b.m(jb, id, kb);
                                    if (mb != 0)
                                        out.algebra.m(row, col, ka * db + kb) += c * ma * mb;
                                }
                            }
                        }
                }
    out.algebra.unit.assign(d, BigRat());
    for (std::size_t ia = 0; ia < da; ++ia)
        for (std::size_t ib = 0; ib < db; ++ib) out.algebra.unit[ia * db + ib] = a.unit[ia] * b.unit[ib];

    AxiomReport post = verify_algebra(out.algebra);
    if (!post.ok) throw std::runtime_error("factorization_algebra: " + post.describe());

    out.embed_a.map = RatMatrix(d, da);
    for (std::size_t ia = 0; ia < da; ++ia)
        for (std::size_t ib = 0; ib < db; ++ib) out.embed_a.map.at(ia * db + ib, ia) = b.unit[ib];
    out.embed_b.map = RatMatrix(d, db);
    for (std::size_t ib = 0; ib < db; ++ib)
        for (std::size_t ia = 0; ia < da; ++ia) out.embed_b.map.at(ia * db + ib, ib) = a.unit[ia];
    AxiomReport ea = check_embedding(a, out.algebra, out.embed_a);
    if (!ea.ok) throw std::runtime_error("factorization_algebra: A-embedding: " + ea.describe());
    AxiomReport eb = check_embedding(b, out.algebra, out.embed_b);
    if (!eb.ok) throw std::runtime_error("factorization_algebra: B-embedding: " + eb.describe());
    return out;
}

HopfData group_algebra(const PermGroup& g) {
    std::size_t d = g.order();
    HopfData h;
    h.alg = AlgData::zero(d);
    h.comult.assign(d * d * d, BigRat());
    h.counit.assign(d, BigRat(1));
    h.antipode = RatMatrix(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) h.alg.m(i, j, g.mul(i, j)) = 1;
        h.c(i, i, i) = 1;
        h.antipode.at(g.inv(i), i) = 1;
    }
    h.alg.unit = unit_vec(d, g.identity_index());
    return h;
}

HopfData dual_hopf(const HopfData& h) {
    std::size_t d = h.dim();
    HopfData out;
    out.alg = AlgData::zero(d);
    out.comult.assign(d * d * d, BigRat());
    out.counit = h.alg.unit;
    out.alg.unit = h.counit;
    out.antipode = h.antipode.transpose();
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t c = 0; c < d; ++c) {
                out.alg.m(a, b, c) = h.c(c, a, b);
                out.c(c, a, b) = h.alg.m(a, b, c);
            }
    return out;
}

HopfData cop_hopf(const HopfData& h) {
    HopfData out = h;
    std::size_t d = h.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) out.c(i, j, k) = h.c(i, k, j);
    out.antipode = invert(h.antipode, "cop_hopf antipode");
    return out;
}

SubalgebraEmbedding group_algebra_embedding(const PermGroup& h, const PermGroup& g) {
    if (!is_subgroup(h, g)) throw std::invalid_argument("group_algebra_embedding: not a subgroup");
    SubalgebraEmbedding e;
    e.map = RatMatrix(g.order(), h.order());
    for (std::size_t i = 0; i < h.order(); ++i) e.map.at(g.index_of(h.elements()[i]), i) = 1;
    return e;
}

RatVec ModuleAlgebraAction::apply(const RatVec& h_vec, const RatVec& a_vec) const {
    RatVec out(dim_a);
    for (std::size_t ih = 0; ih < dim_h; ++ih) {
        if (h_vec[ih] == 0) continue;
        for (std::size_t ia = 0; ia < dim_a; ++ia) {
            if (a_vec[ia] == 0) continue;
            BigRat c = h_vec[ih] * a_vec[ia];
            for (std::size_t k = 0; k < dim_a; ++k) {
                const BigRat& v = matrix.at(k, ih * dim_a + ia);
                if (v != 0) out[k] += c * v;
            }
        }
    }
    return out;
}

AxiomReport check_measuring_action(const HopfData& h, const AlgData& a,
                                   const ModuleAlgebraAction& act) {
    std::size_t dh = h.dim(), da = a.dim;
    if (act.dim_h != dh || act.dim_a != da) throw std::invalid_argument("action shape mismatch");
    for (std::size_t ia = 0; ia < da; ++ia) {
        if (act.apply(h.alg.unit, unit_vec(da, ia)) != unit_vec(da, ia))
            return {false, "unit of H acts as identity", {ia}};
    }
    for (std::size_t ih = 0; ih < dh; ++ih) {
        // h·1_A = ε(h) 1_A
        RatVec got = act.apply(unit_vec(dh, ih), a.unit);
        RatVec expect(da);
        for (std::size_t t = 0; t < da; ++t) expect[t] = h.counit[ih] * a.unit[t];
        if (got != expect) return {false, "measuring on the unit", {ih}};
    }
    for (std::size_t ig = 0; ig < dh; ++ig)
        for (std::size_t ih = 0; ih < dh; ++ih)
            for (std::size_t ia = 0; ia < da; ++ia) {
                RatVec lhs = act.apply(unit_vec(dh, ig), act.apply(unit_vec(dh, ih), unit_vec(da, ia)));
                RatVec rhs = act.apply(h.alg.basis_mul(ig, ih), unit_vec(da, ia));
                if (lhs != rhs) return {false, "module law", {ig, ih, ia}};
            }
    for (std::size_t ih = 0; ih < dh; ++ih)
        for (std::size_t ia = 0; ia < da; ++ia)
            for (std::size_t ib = 0; ib < da; ++ib) {
                RatVec lhs = act.apply(unit_vec(dh, ih), a.basis_mul(ia, ib));
                RatVec rhs(da);
                for_comult(h, ih, [&](std::size_t j, std::size_t k, const BigRat& c) {
                    RatVec left = act.apply(unit_vec(dh, j), unit_vec(da, ia));
                    RatVec right = act.apply(unit_vec(dh, k), unit_vec(da, ib));
                    rhs = scaled_add(std::move(rhs), a.mul_vec(left, right), c);
                });
                if (lhs != rhs) return {false, "measuring law", {ih, ia, ib}};
            }
    return {};
}

FactorizationAlgebra smash_product(const AlgData& a, const HopfData& h,
                                   const ModuleAlgebraAction& act) {
    AxiomReport m = check_measuring_action(h, a, act);
    if (!m.ok) throw std::runtime_error("smash_product: " + m.describe());
    std::size_t dh = h.dim(), da = a.dim;
    // ψ(h⊗a) = h₁·a ⊗ h₂
    FactorizationMap psi;
    psi.dim_a = da;
    psi.dim_b = dh;
    psi.matrix = RatMatrix(da * dh, dh * da);
    for (std::size_t ih = 0; ih < dh; ++ih)
        for (std::size_t ia = 0; ia < da; ++ia) {
            std::size_t col = ih * da + ia;
            for_comult(h, ih, [&](std::size_t j, std::size_t k, const BigRat& c) {
                for (std::size_t t = 0; t < da; ++t) {
                    const BigRat& v = act.matrix.at(t, j * da + ia);
                    if (v != 0) psi.matrix.at(t * dh + k, col) += c * v;
                }
            });
        }
    return factorization_algebra(a, h.alg, psi);
}

FactorizationAlgebra heisenberg_double(const HopfData& h) {
    HopfData hd = dual_hopf(h);
    std::size_t d = h.dim();
    // hit action of H* on H: f⇀x = x₁ f(x₂)
    ModuleAlgebraAction act;
    act.dim_h = d;
    act.dim_a = d;
    act.matrix = RatMatrix(d, d * d);
    for (std::size_t ia = 0; ia < d; ++ia)
        for_comult(h, ia, [&](std::size_t j, std::size_t k, const BigRat& c) {
            for (std::size_t f = 0; f < d; ++f)
                if (f == k) act.matrix.at(j, f * d + ia) += c;
        });
    return smash_product(h.alg, hd, act);
}

QuotientModuleCoalgebra quotient_module_coalgebra(const HopfData& h, const HopfData& r,
                                                  const SubalgebraEmbedding& r_in_h) {
    std::size_t dh = h.dim(), dr = r.dim();
    AxiomReport emb = check_embedding(r.alg, h.alg, r_in_h);
    if (!emb.ok) throw std::runtime_error("quotient_module_coalgebra: " + emb.describe());
    // Hopf subalgebra: embedding intertwines Δ, ε and S
    for (std::size_t i = 0; i < dr; ++i) {
        RatVec img = r_in_h.apply(unit_vec(dr, i));
        RatVec lhs(dh * dh);
        for (std::size_t t = 0; t < dh; ++t) {
            if (img[t] == 0) continue;
            for_comult(h, t, [&](std::size_t j, std::size_t k, const BigRat& c) {
                lhs[j * dh + k] += img[t] * c;
            });
        }
        RatVec rhs(dh * dh);
        for_comult(r, i, [&](std::size_t j, std::size_t k, const BigRat& c) {
            RatVec f1 = r_in_h.apply(unit_vec(dr, j));
            RatVec f2 = r_in_h.apply(unit_vec(dr, k));
            for (std::size_t x = 0; x < dh; ++x) {
                if (f1[x] == 0) continue;
                for (std::size_t y = 0; y < dh; ++y)
                    if (f2[y] != 0) rhs[x * dh + y] += c * f1[x] * f2[y];
            }
        });
        if (lhs != rhs)
            throw std::runtime_error("quotient_module_coalgebra: Δ(R) ⊄ R⊗R (not a Hopf subalgebra)");
        if (mat_vec(h.antipode, img) != r_in_h.apply(mat_vec(r.antipode, unit_vec(dr, i))))
            throw std::runtime_error("quotient_module_coalgebra: S(R) ≠ R (not a Hopf subalgebra)");
        if (h.counit_of(img) != r.counit[i])
            throw std::runtime_error("quotient_module_coalgebra: counits disagree on R");
    }

    // relation span {(r − ε(r)1)·h}
    std::vector<std::vector<BigRat>> rels;
    for (std::size_t i = 0; i < dr; ++i) {
        RatVec v = r_in_h.apply(unit_vec(dr, i));
        for (std::size_t t = 0; t < dh; ++t) v[t] -= r.counit[i] * h.alg.unit[t];
        if (is_zero_vec(v)) continue;
        for (std::size_t j = 0; j < dh; ++j) rels.push_back(h.alg.mul_vec(v, unit_vec(dh, j)));
    }
    QuotientModuleCoalgebra q;
    q.space = quotient_basis(dh, rels);
    q.dim = q.space.dim;
    q.dim_h = dh;

    // the relation span must be a coideal: ε(W) = 0 and (P⊗P)Δ(W) = 0
    auto project_tensor_zero = [&](const RatVec& w) {
        RatVec img(q.dim * q.dim);
        for (std::size_t t = 0; t < dh; ++t) {
            if (w[t] == 0) continue;
            for_comult(h, t, [&](std::size_t j, std::size_t k, const BigRat& c) {
                auto pj = q.space.project(unit_vec(dh, j));
                auto pk = q.space.project(unit_vec(dh, k));
                for (std::size_t x = 0; x < q.dim; ++x) {
                    if (pj[x] == 0) continue;
                    for (std::size_t y = 0; y < q.dim; ++y)
                        if (pk[y] != 0) img[x * q.dim + y] += w[t] * c * pj[x] * pk[y];
                }
            });
        }
        return is_zero_vec(img);
    };
    for (const auto& w : rels) {
        BigRat e;
        for (std::size_t t = 0; t < dh; ++t)
            if (w[t] != 0) e += w[t] * h.counit[t];
        if (e != 0)
            throw std::runtime_error("quotient_module_coalgebra: counit does not vanish on R⁺H");
        if (!project_tensor_zero(w))
            throw std::runtime_error(
                "quotient_module_coalgebra: relation span is not coalgebra-compatible");
        // right ideal: W·H ⊆ W
        for (std::size_t j = 0; j < dh; ++j)
            if (!is_zero_vec(q.space.project(h.alg.mul_vec(w, unit_vec(dh, j)))))
                throw std::runtime_error("quotient_module_coalgebra: span is not a right ideal");
    }

    // right action and induced coalgebra
    q.right_action = RatMatrix(q.dim, q.dim * dh);
    for (std::size_t iq = 0; iq < q.dim; ++iq) {
        RatVec lift = q.space.lift(unit_vec(q.dim, iq));
        for (std::size_t ih = 0; ih < dh; ++ih) {
            RatVec res = q.space.project(h.alg.mul_vec(lift, unit_vec(dh, ih)));
            for (std::size_t k = 0; k < q.dim; ++k) q.right_action.at(k, iq * dh + ih) = res[k];
        }
    }
    q.comult.assign(q.dim * q.dim * q.dim, BigRat());
    q.counit.assign(q.dim, BigRat());
    for (std::size_t iq = 0; iq < q.dim; ++iq) {
        RatVec lift = q.space.lift(unit_vec(q.dim, iq));
        for (std::size_t t = 0; t < dh; ++t) {
            if (lift[t] == 0) continue;
            q.counit[iq] += lift[t] * h.counit[t];
            for_comult(h, t, [&](std::size_t j, std::size_t k, const BigRat& c) {
                auto pj = q.space.project(unit_vec(dh, j));
                auto pk = q.space.project(unit_vec(dh, k));
                for (std::size_t x = 0; x < q.dim; ++x) {
                    if (pj[x] == 0) continue;
                    for (std::size_t y = 0; y < q.dim; ++y)
                        if (pk[y] != 0) q.comult[(iq * q.dim + x) * q.dim + y] += lift[t] * c * pj[x] * pk[y];
                }
            });
        }
    }
    AxiomReport coalg = verify_coalgebra(q.dim, q.comult, q.counit);
    if (!coalg.ok) throw std::runtime_error("quotient_module_coalgebra: " + coalg.describe());

    // module law of the right action
    for (std::size_t iq = 0; iq < q.dim; ++iq) {
        if (q.act_right(unit_vec(q.dim, iq), h.alg.unit) != unit_vec(q.dim, iq))
            throw std::runtime_error("quotient_module_coalgebra: unit does not act as identity");
        for (std::size_t ig = 0; ig < dh; ++ig)
            for (std::size_t ih = 0; ih < dh; ++ih) {
                RatVec lhs = q.act_right(q.act_right(unit_vec(q.dim, iq), unit_vec(dh, ig)),
                                         unit_vec(dh, ih));
                RatVec rhs = q.act_right(unit_vec(q.dim, iq), h.alg.basis_mul(ig, ih));
                if (lhs != rhs)
                    throw std::runtime_error("quotient_module_coalgebra: right action law fails");
            }
    }
    return q;
}

RatVec QuotientModuleCoalgebra::act_right(const RatVec& q_vec, const RatVec& h_vec) const {
    RatVec out(dim);
    for (std::size_t iq = 0; iq < dim; ++iq) {
        if (q_vec[iq] == 0) continue;
        for (std::size_t ih = 0; ih < dim_h; ++ih) {
            if (h_vec[ih] == 0) continue;
            BigRat c = q_vec[iq] * h_vec[ih];
            for (std::size_t k = 0; k < dim; ++k) {
                const BigRat& v = right_action.at(k, iq * dim_h + ih);
                if (v != 0) out[k] += c * v;
            }
        }
    }
    return out;
}

FactorizationAlgebra generalized_smash(const QuotientModuleCoalgebra& q, const HopfData& h) {
    if (q.dim_h != h.dim()) throw std::invalid_argument("generalized_smash: dimension mismatch");
    std::size_t dq = q.dim, dh = h.dim();
    // A = Q^{*op}: (θγ)(q̄) = θ(q̄₂)γ(q̄₁)
    AlgData a = AlgData::zero(dq);
    for (std::size_t x = 0; x < dq; ++x)
        for (std::size_t y = 0; y < dq; ++y)
            for (std::size_t c = 0; c < dq; ++c) a.m(x, y, c) = q.comult[(c * dq + y) * dq + x];
    a.unit = q.counit;
    AxiomReport arep = verify_algebra(a);
    if (!arep.ok) throw std::runtime_error("generalized_smash: Q*op " + arep.describe());

    // ψ̄(h⊗θ) = (h₂⇀θ) ⊗ h₁ with (h⇀θ)(q̄) = θ(q̄·h)
    FactorizationMap psi;
    psi.dim_a = dq;
    psi.dim_b = dh;
    psi.matrix = RatMatrix(dq * dh, dh * dq);
    for (std::size_t ih = 0; ih < dh; ++ih)
        for (std::size_t ia = 0; ia < dq; ++ia) {
            std::size_t col = ih * dq + ia;
            for_comult(h, ih, [&](std::size_t j, std::size_t k, const BigRat& c) {
                // (e_k ⇀ f_ia)_x = coefficient of e_ia in e_x·e_k
                for (std::size_t x = 0; x < dq; ++x) {
                    const BigRat& v = q.right_action.at(ia, x * dh + k);
                    if (v != 0) psi.matrix.at(x * dh + j, col) += c * v;
                }
            });
        }
    return factorization_algebra(a, h.alg, psi);
}

RatVec MatchedPairActions::act_l(const RatVec& h_vec, const RatVec& k_vec) const {
    RatVec out(dim_k);
    for (std::size_t ih = 0; ih < dim_h; ++ih) {
        if (h_vec[ih] == 0) continue;
        for (std::size_t ik = 0; ik < dim_k; ++ik) {
            if (k_vec[ik] == 0) continue;
            BigRat c = h_vec[ih] * k_vec[ik];
            for (std::size_t t = 0; t < dim_k; ++t) {
                const BigRat& v = left_act.at(t, ih * dim_k + ik);
                if (v != 0) out[t] += c * v;
            }
        }
    }
    return out;
}

RatVec MatchedPairActions::act_r(const RatVec& h_vec, const RatVec& k_vec) const {
    RatVec out(dim_h);
    for (std::size_t ih = 0; ih < dim_h; ++ih) {
        if (h_vec[ih] == 0) continue;
        for (std::size_t ik = 0; ik < dim_k; ++ik) {
            if (k_vec[ik] == 0) continue;
            BigRat c = h_vec[ih] * k_vec[ik];
            for (std::size_t t = 0; t < dim_h; ++t) {
                const BigRat& v = right_act.at(t, ih * dim_k + ik);
                if (v != 0) out[t] += c * v;
            }
        }
    }
    return out;
}

AxiomReport matched_pair_check(const HopfData& h, const HopfData& k, const MatchedPairActions& a) {
    std::size_t dh = h.dim(), dk = k.dim();
    if (a.dim_h != dh || a.dim_k != dk) throw std::invalid_argument("matched_pair_check: shapes");
    auto eh = [&](std::size_t i) { return unit_vec(dh, i); };
    auto ek = [&](std::size_t i) { return unit_vec(dk, i); };

    // module laws
    for (std::size_t ik = 0; ik < dk; ++ik)
        if (a.act_l(h.alg.unit, ek(ik)) != ek(ik)) return {false, "1_H ▷ k = k", {ik}};
    for (std::size_t ih = 0; ih < dh; ++ih)
        if (a.act_r(eh(ih), k.alg.unit) != eh(ih)) return {false, "h ◁ 1_K = h", {ih}};
    for (std::size_t ig = 0; ig < dh; ++ig)
        for (std::size_t ih = 0; ih < dh; ++ih)
            for (std::size_t ik = 0; ik < dk; ++ik) {
                RatVec lhs = a.act_l(eh(ig), a.act_l(eh(ih), ek(ik)));
                RatVec rhs = a.act_l(h.alg.basis_mul(ig, ih), ek(ik));
                if (lhs != rhs) return {false, "left module law of ▷", {ig, ih, ik}};
            }
    for (std::size_t ih = 0; ih < dh; ++ih)
        for (std::size_t ik = 0; ik < dk; ++ik)
            for (std::size_t il = 0; il < dk; ++il) {
                RatVec lhs = a.act_r(a.act_r(eh(ih), ek(ik)), ek(il));
                RatVec rhs = a.act_r(eh(ih), k.alg.basis_mul(ik, il));
                if (lhs != rhs) return {false, "right module law of ◁", {ih, ik, il}};
            }

    // coalgebra maps
    for (std::size_t ih = 0; ih < dh; ++ih)
        for (std::size_t ik = 0; ik < dk; ++ik) {
            // Δ_K(h▷k) = (h₁▷k₁)⊗(h₂▷k₂)
            RatVec v = a.act_l(eh(ih), ek(ik));
            RatVec lhs(dk * dk);
            for (std::size_t t = 0; t < dk; ++t) {
                if (v[t] == 0) continue;
                for_comult(k, t, [&](std::size_t x, std::size_t y, const BigRat& c) {
                    lhs[x * dk + y] += v[t] * c;
                });
            }
            RatVec rhs(dk * dk);
            for_comult(h, ih, [&](std::size_t h1, std::size_t h2, const BigRat& ch) {
                for_comult(k, ik, [&](std::size_t k1, std::size_t k2, const BigRat& ck) {
                    RatVec l = a.act_l(eh(h1), ek(k1));
                    RatVec r = a.act_l(eh(h2), ek(k2));
                    BigRat c = ch * ck;
                    for (std::size_t x = 0; x < dk; ++x) {
                        if (l[x] == 0) continue;
                        for (std::size_t y = 0; y < dk; ++y)
                            if (r[y] != 0) rhs[x * dk + y] += c * l[x] * r[y];
                    }
                });
            });
            if (lhs != rhs) return {false, "▷ is a coalgebra map (Δ)", {ih, ik}};
            BigRat ce;
            for (std::size_t t = 0; t < dk; ++t)
                if (v[t] != 0) ce += v[t] * k.counit[t];
            if (ce != h.counit[ih] * k.counit[ik]) return {false, "▷ is a coalgebra map (ε)", {ih, ik}};

            RatVec w = a.act_r(eh(ih), ek(ik));
            RatVec lhs2(dh * dh);
            for (std::size_t t = 0; t < dh; ++t) {
                if (w[t] == 0) continue;
                for_comult(h, t, [&](std::size_t x, std::size_t y, const BigRat& c) {
                    lhs2[x * dh + y] += w[t] * c;
                });
            }
            RatVec rhs2(dh * dh);
            for_comult(h, ih, [&](std::size_t h1, std::size_t h2, const BigRat& ch) {
                for_comult(k, ik, [&](std::size_t k1, std::size_t k2, const BigRat& ck) {
                    RatVec l = a.act_r(eh(h1), ek(k1));
                    RatVec r = a.act_r(eh(h2), ek(k2));
                    BigRat c = ch * ck;
                    for (std::size_t x = 0; x < dh; ++x) {
                        if (l[x] == 0) continue;
                        for (std::size_t y = 0; y < dh; ++y)
                            if (r[y] != 0) rhs2[x * dh + y] += c * l[x] * r[y];
                    }
                });
            });
            if (lhs2 != rhs2) return {false, "◁ is a coalgebra map (Δ)", {ih, ik}};
            BigRat ce2;
            for (std::size_t t = 0; t < dh; ++t)
                if (w[t] != 0) ce2 += w[t] * h.counit[t];
            if (ce2 != h.counit[ih] * k.counit[ik]) return {false, "◁ is a coalgebra map (ε)", {ih, ik}};
        }

    // unit compatibilities: 1_H ◁ k = ε_K(k) 1_H and h ▷ 1_K = ε_H(h) 1_K
    for (std::size_t ik = 0; ik < dk; ++ik) {
        RatVec got = a.act_r(h.alg.unit, ek(ik));
        RatVec expect(dh);
        for (std::size_t t = 0; t < dh; ++t) expect[t] = k.counit[ik] * h.alg.unit[t];
        if (got != expect) return {false, "1_H ◁ k = ε(k) 1_H", {ik}};
    }
    for (std::size_t ih = 0; ih < dh; ++ih) {
        RatVec got = a.act_l(eh(ih), k.alg.unit);
        RatVec expect(dk);
        for (std::size_t t = 0; t < dk; ++t) expect[t] = h.counit[ih] * k.alg.unit[t];
        if (got != expect) return {false, "h ▷ 1_K = ε(h) 1_K", {ih}};
    }

    // Takeuchi compatibility conditions
    for (std::size_t ih = 0; ih < dh; ++ih)
        for (std::size_t ig = 0; ig < dh; ++ig)
            for (std::size_t ik = 0; ik < dk; ++ik) {
                // (hg)◁k = (h◁(g₁▷k₁))(g₂◁k₂)
                RatVec lhs = a.act_r(h.alg.basis_mul(ih, ig), ek(ik));
                RatVec rhs(dh);
                for_comult(h, ig, [&](std::size_t g1, std::size_t g2, const BigRat& cg) {
                    for_comult(k, ik, [&](std::size_t k1, std::size_t k2, const BigRat& ck) {
                        RatVec left = a.act_r(eh(ih), a.act_l(eh(g1), ek(k1)));
                        RatVec right = a.act_r(eh(g2), ek(k2));
                        rhs = scaled_add(std::move(rhs), h.alg.mul_vec(left, right), cg * ck);
                    });
                });
                if (lhs != rhs) return {false, "compatibility of ◁ with multiplication", {ih, ig, ik}};
            }
    for (std::size_t ih = 0; ih < dh; ++ih)
        for (std::size_t ik = 0; ik < dk; ++ik)
            for (std::size_t il = 0; il < dk; ++il) {
                // h▷(kl) = (h₁▷k₁)((h₂◁k₂)▷l)
                RatVec lhs = a.act_l(eh(ih), k.alg.basis_mul(ik, il));
                RatVec rhs(dk);
                for_comult(h, ih, [&](std::size_t h1, std::size_t h2, const BigRat& ch) {
                    for_comult(k, ik, [&](std::size_t k1, std::size_t k2, const BigRat& ck) {
                        RatVec left = a.act_l(eh(h1), ek(k1));
                        RatVec right = a.act_l(a.act_r(eh(h2), ek(k2)), ek(il));
                        rhs = scaled_add(std::move(rhs), k.alg.mul_vec(left, right), ch * ck);
                    });
                });
                if (lhs != rhs) return {false, "compatibility of ▷ with multiplication", {ih, ik, il}};
            }
    return {};
}

HopfData double_crossed_product(const HopfData& k, const HopfData& h, const MatchedPairActions& a) {
    AxiomReport mp = matched_pair_check(h, k, a);
    if (!mp.ok) throw std::runtime_error("double_crossed_product: " + mp.describe());
    std::size_t dk = k.dim(), dh = h.dim(), d = dk * dh;
    HopfData out;
    out.alg = AlgData::zero(d);
    out.comult.assign(d * d * d, BigRat());
    out.counit.assign(d, BigRat());
    out.antipode = RatMatrix(d, d);

    // product: (k⋈h)(l⋈g) = k(h₁▷l₁) ⋈ (h₂◁l₂)g
    for (std::size_t ik = 0; ik < dk; ++ik)
        for (std::size_t ih = 0; ih < dh; ++ih)
            for (std::size_t il = 0; il < dk; ++il)
                for (std::size_t ig = 0; ig < dh; ++ig) {
                    std::size_t row = ik * dh + ih, col = il * dh + ig;
                    for_comult(h, ih, [&](std::size_t h1, std::size_t h2, const BigRat& ch) {
                        for_comult(k, il, [&](std::size_t l1, std::size_t l2, const BigRat& cl) {
                            BigRat c = ch * cl;
                            RatVec kpart = k.alg.mul_vec(unit_vec(dk, ik),
                                                         a.act_l(unit_vec(dh, h1), unit_vec(dk, l1)));
                            RatVec hpart = h.alg.mul_vec(a.act_r(unit_vec(dh, h2), unit_vec(dk, l2)),
                                                         unit_vec(dh, ig));
                            for (std::size_t x = 0; x < dk; ++x) {
                                if (kpart[x] == 0) continue;
                                for (std::size_t y = 0; y < dh; ++y)
                                    if (hpart[y] != 0)
                                        out.alg.m(row, col, x * dh + y) += c * kpart[x] * hpart[y];
                            }
                        });
                    });
                }
    out.alg.unit.assign(d, BigRat());
    for (std::size_t x = 0; x < dk; ++x)
        for (std::size_t y = 0; y < dh; ++y) out.alg.unit[x * dh + y] = k.alg.unit[x] * h.alg.unit[y];

    // tensor coalgebra and counit
    for (std::size_t ik = 0; ik < dk; ++ik)
        for (std::size_t ih = 0; ih < dh; ++ih) {
            std::size_t i = ik * dh + ih;
            out.counit[i] = k.counit[ik] * h.counit[ih];
            for_comult(k, ik, [&](std::size_t k1, std::size_t k2, const BigRat& ck) {
                for_comult(h, ih, [&](std::size_t h1, std::size_t h2, const BigRat& ch) {
                    out.c(i, k1 * dh + h1, k2 * dh + h2) += ck * ch;
                });
            });
        }

    // antipode: S(k⋈h) = S_H(h₁)▷S_K(k₁) ⋈ S_H(h₂)◁S_K(k₂)
    for (std::size_t ik = 0; ik < dk; ++ik)
        for (std::size_t ih = 0; ih < dh; ++ih) {
            std::size_t i = ik * dh + ih;
            for_comult(h, ih, [&](std::size_t h1, std::size_t h2, const BigRat& ch) {
                for_comult(k, ik, [&](std::size_t k1, std::size_t k2, const BigRat& ck) {
                    BigRat c = ch * ck;
                    RatVec sh1(dh), sh2(dh), sk1(dk), sk2(dk);
                    for (std::size_t t = 0; t < dh; ++t) {
                        sh1[t] = h.antipode.at(t, h1);
                        sh2[t] = h.antipode.at(t, h2);
                    }
                    for (std::size_t t = 0; t < dk; ++t) {
                        sk1[t] = k.antipode.at(t, k1);
                        sk2[t] = k.antipode.at(t, k2);
                    }
                    RatVec kpart = a.act_l(sh1, sk1);
                    RatVec hpart = a.act_r(sh2, sk2);
                    for (std::size_t x = 0; x < dk; ++x) {
                        if (kpart[x] == 0) continue;
                        for (std::size_t y = 0; y < dh; ++y)
                            if (hpart[y] != 0) out.antipode.at(x * dh + y, i) += c * kpart[x] * hpart[y];
                    }
                });
            });
        }

    AxiomReport rep = verify_hopf(out);
    if (!rep.ok) throw std::runtime_error("double_crossed_product: " + rep.describe());
    return out;
}

DrinfeldDouble drinfeld_double(const HopfData& h) {
    std::size_t d = h.dim();
    HopfData hdual = dual_hopf(h);
    HopfData k = cop_hopf(hdual);  // throws when the antipode is singular
    RatMatrix sbar = invert(h.antipode, "drinfeld_double antipode");

    MatchedPairActions acts;
    acts.dim_h = d;
    acts.dim_k = d;
    acts.left_act = RatMatrix(d, d * d);
    acts.right_act = RatMatrix(d, d * d);

    // h ▷ f = h₁ ⇀ f ↼ S̄(h₂), (h⇀f)(x) = f(xh), (f↼h)(x) = f(hx)
    for (std::size_t ih = 0; ih < d; ++ih)
        for (std::size_t ifa = 0; ifa < d; ++ifa) {
            RatVec out(d);
            for_comult(h, ih, [&](std::size_t p, std::size_t qq, const BigRat& c) {
                // g = f_ifa ↼ S̄(e_qq): g_x = Σ_r sbar(r,qq) m[r][x][ifa]
                RatVec g(d);
                for (std::size_t r = 0; r < d; ++r) {
                    const BigRat& s = sbar.at(r, qq);
                    if (s == 0) continue;
                    for (std::size_t x = 0; x < d; ++x) {
                        const BigRat& mm = h.alg.m(r, x, ifa);
                        if (mm != 0) g[x] += s * mm;
                    }
                }
                // e_p ⇀ g: (e_p ⇀ g)_x = Σ_y m[x][p][y] g_y
                for (std::size_t x = 0; x < d; ++x)
                    for (std::size_t y = 0; y < d; ++y) {
                        const BigRat& mm = h.alg.m(x, p, y);
                        if (mm != 0 && g[y] != 0) out[x] += c * mm * g[y];
                    }
            });
            for (std::size_t x = 0; x < d; ++x) acts.left_act.at(x, ih * d + ifa) = out[x];
        }

    // h ◁ f = S̄*(f₁) ⇀ h ↼ f₂ with Δ_{H*}(f_c): (f₁⊗f₂) = Σ_{a,b} m[a][b][c] f_a⊗f_b,
    // f⇀x = x₁ f(x₂), x↼f = f(x₁) x₂
    for (std::size_t ih = 0; ih < d; ++ih)
        for (std::size_t ifa = 0; ifa < d; ++ifa) {
            RatVec out(d);
            for (std::size_t a = 0; a < d; ++a)
                for (std::size_t b = 0; b < d; ++b) {
                    const BigRat& mab = h.alg.m(a, b, ifa);
                    if (mab == 0) continue;
                    // e_ih ↼ f_b = Σ_t c[ih][b][t] e_t
                    for (std::size_t t = 0; t < d; ++t) {
                        const BigRat& c1 = h.c(ih, b, t);
                        if (c1 == 0) continue;
                        // S̄*(f_a) ⇀ e_t = Σ_x sbar(a,x) Σ_j c[t][j][x] e_j
                        for (std::size_t x = 0; x < d; ++x) {
                            const BigRat& s = sbar.at(a, x);
                            if (s == 0) continue;
                            for (std::size_t j = 0; j < d; ++j) {
                                const BigRat& c2 = h.c(t, j, x);
                                if (c2 != 0) out[j] += mab * c1 * s * c2;
                            }
                        }
                    }
                }
            for (std::size_t x = 0; x < d; ++x) acts.right_act.at(x, ih * d + ifa) = out[x];
        }

    DrinfeldDouble dd;
    dd.k = k;
    dd.actions = acts;
    dd.algebra = double_crossed_product(k, h, acts);  // checks the matched pair + all Hopf axioms

    // induced factorization ψ(h⊗f) = (h₁▷f₁) ⋈ (h₂◁f₂)
    dd.psi.dim_a = d;   // A = K
    dd.psi.dim_b = d;   // B = H
    dd.psi.matrix = RatMatrix(d * d, d * d);
    for (std::size_t ih = 0; ih < d; ++ih)
        for (std::size_t ifa = 0; ifa < d; ++ifa) {
            std::size_t col = ih * d + ifa;
            for_comult(h, ih, [&](std::size_t h1, std::size_t h2, const BigRat& ch) {
                for_comult(k, ifa, [&](std::size_t f1, std::size_t f2, const BigRat& cf) {
                    BigRat c = ch * cf;
                    RatVec kpart = acts.act_l(unit_vec(d, h1), unit_vec(d, f1));
                    RatVec hpart = acts.act_r(unit_vec(d, h2), unit_vec(d, f2));
                    for (std::size_t x = 0; x < d; ++x) {
                        if (kpart[x] == 0) continue;
                        for (std::size_t y = 0; y < d; ++y)
                            if (hpart[y] != 0) dd.psi.matrix.at(x * d + y, col) += c * kpart[x] * hpart[y];
                    }
                });
            });
        }
    FactorizationAlgebra fa = factorization_algebra(k.alg, h.alg, dd.psi);
    if (!(fa.algebra.mult == dd.algebra.alg.mult) || fa.algebra.unit != dd.algebra.alg.unit)
        throw std::runtime_error("drinfeld_double: factorization product disagrees with ⋈ product");

    dd.embed_k.map = RatMatrix(d * d, d);
    for (std::size_t f = 0; f < d; ++f)
        for (std::size_t y = 0; y < d; ++y) dd.embed_k.map.at(f * d + y, f) = h.alg.unit[y];
    dd.embed_h.map = RatMatrix(d * d, d);
    for (std::size_t ih = 0; ih < d; ++ih)
        for (std::size_t x = 0; x < d; ++x) dd.embed_h.map.at(x * d + ih, ih) = k.alg.unit[x];
    AxiomReport ek = check_embedding(k.alg, dd.algebra.alg, dd.embed_k);
    if (!ek.ok) throw std::runtime_error("drinfeld_double: K-embedding: " + ek.describe());
    AxiomReport eh = check_embedding(h.alg, dd.algebra.alg, dd.embed_h);
    if (!eh.ok) throw std::runtime_error("drinfeld_double: H-embedding: " + eh.describe());
    return dd;
}

}  // namespace depth
