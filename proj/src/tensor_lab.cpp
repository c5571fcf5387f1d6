#include "depth/tensor_lab.hpp"

#include <algorithm>
#include <stdexcept>

namespace depth {

namespace {

RatVec unit_vec(std::size_t dim, std::size_t i) {
    RatVec v(dim);
    v[i] = 1;
    return v;
}

bool is_zero_vec(const RatVec& v) {
    return std::all_of(v.begin(), v.end(), [](const BigRat& x) { return x == 0; });
}

std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t budget) {
    std::size_t out = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (out > budget / base)
            throw std::runtime_error("tensor budget exceeded: ambient dimension too large");
        out *= base;
    }
    return out;
}

}  // namespace

RelTensorSpace relative_tensor_power(const AlgData& x, const SubalgebraEmbedding& b_in_x,
                                     const AlgData& b, std::size_t n, std::size_t budget) {
    if (n == 0) throw std::invalid_argument("relative_tensor_power: n must be >= 1");
    std::size_t d = x.dim;
    std::size_t ambient = checked_power(d, n, budget);

    RelTensorSpace t;
    t.n = n;
    t.x_dim = d;
    t.ambient_dim = ambient;

    // relations: slots (i, i+1) carry (a·b)⊗c − a⊗(b·c), all other slots over the basis
    std::vector<std::vector<BigRat>> rels;
    std::size_t rest = n >= 2 ? checked_power(d, n - 2, budget) : 0;
    for (std::size_t slot = 0; n >= 2 && slot + 1 < n; ++slot) {
        for (std::size_t ib = 0; ib < b.dim; ++ib) {
            RatVec img = b_in_x.apply(unit_vec(b.dim, ib));
            for (std::size_t ia = 0; ia < d; ++ia)
                for (std::size_t ic = 0; ic < d; ++ic) {
                    RatVec left = x.mul_vec(unit_vec(d, ia), img);   // a·b
                    RatVec right = x.mul_vec(img, unit_vec(d, ic));  // b·c
                    for (std::size_t other = 0; other < rest; ++other) {
                        // decode the fixed indices of the remaining n-2 slots
                        std::vector<std::size_t> fixed(n, 0);
                        std::size_t rem = other;
                        for (std::size_t s2 = n; s2-- > 0;) {
                            if (s2 == slot || s2 == slot + 1) continue;
                            fixed[s2] = rem % d;
                            rem /= d;
                        }
                        std::vector<BigRat> rel(ambient);
                        auto index_with = [&](std::size_t vi, std::size_t vj) {
                            std::size_t idx = 0;
                            for (std::size_t s2 = 0; s2 < n; ++s2) {
                                std::size_t digit = s2 == slot ? vi : (s2 == slot + 1 ? vj : fixed[s2]);
                                idx = idx * d + digit;
                            }
                            return idx;
                        };
                        bool nonzero = false;
                        for (std::size_t ja = 0; ja < d; ++ja)
                            if (left[ja] != 0) {
                                rel[index_with(ja, ic)] += left[ja];
                                nonzero = true;
                            }
                        for (std::size_t jc = 0; jc < d; ++jc)
                            if (right[jc] != 0) {
                                rel[index_with(ia, jc)] -= right[jc];
                                nonzero = true;
                            }
                        if (nonzero && !is_zero_vec(rel)) rels.push_back(std::move(rel));
                    }
                }
        }
    }
    t.space = quotient_basis(ambient, rels);
    t.dim = t.space.dim;
    return t;
}

namespace {

// matrix of the pure ambient operator acting on one tensor slot
RatMatrix slot_operator(const AlgData& x, const RelTensorSpace& t, const RatVec& s, bool left,
                        std::size_t slot) {
    std::size_t d = t.x_dim, n = t.n;
    std::size_t lower = 1;
    for (std::size_t i = slot + 1; i < n; ++i) lower *= d;
    // action on slot basis: e_j -> s·e_j (left) or e_j·s (right)
    std::vector<RatVec> images(d);
    for (std::size_t j = 0; j < d; ++j)
        images[j] = left ? x.mul_vec(s, unit_vec(d, j)) : x.mul_vec(unit_vec(d, j), s);
    RatMatrix out(t.ambient_dim, t.ambient_dim);
    for (std::size_t idx = 0; idx < t.ambient_dim; ++idx) {
        std::size_t digit = (idx / lower) % d;
        std::size_t base = idx - digit * lower;
        const RatVec& img = images[digit];
        for (std::size_t k = 0; k < d; ++k)
            if (img[k] != 0) out.at(base + k * lower, idx) = img[k];
    }
    return out;
}

RatMatrix conjugate_to_quotient(const RelTensorSpace& t, const RatMatrix& ambient_op) {
    return mat_mul(t.space.projection, mat_mul(ambient_op, t.space.section));
}

}  // namespace

RatMatrix rel_left_action(const AlgData& x, const RelTensorSpace& t, const RatVec& s) {
    return conjugate_to_quotient(t, slot_operator(x, t, s, true, 0));
}

RatMatrix rel_right_action(const AlgData& x, const RelTensorSpace& t, const RatVec& s) {
    return conjugate_to_quotient(t, slot_operator(x, t, s, false, t.n - 1));
}

namespace {

// the ψ-cascade at the heart of θₙ: absorb S-basis factors left to right,
// carrying the accumulated B part across each incoming A part
struct Cascade {
    std::size_t da, db;
    const FactorizationMap* psi;
    const AlgData* b;

    // state: coefficients over (A-prefix image index, B index)
    std::vector<BigRat> absorb(const std::vector<BigRat>& state, std::size_t prefix_dim,
                               std::size_t ia, std::size_t ib) const {
        std::vector<BigRat> next(prefix_dim * da * db);
        for (std::size_t pre = 0; pre < prefix_dim; ++pre)
            for (std::size_t bc = 0; bc < db; ++bc) {
                const BigRat& c = state[pre * db + bc];
                if (c == 0) continue;
                // ψ(e_bc ⊗ e_ia) = Σ (ja, jb), then multiply e_jb · e_ib in B
                for (std::size_t ja = 0; ja < da; ++ja)
                    for (std::size_t jb = 0; jb < db; ++jb) {
                        const BigRat& p = psi->matrix.at(ja * db + jb, bc * da + ia);
                        if (p == 0) continue;
                        for (std::size_t tb = 0; tb < db; ++tb) {
                            const BigRat& mb = b->m(jb, ib, tb);
                            if (mb != 0) next[(pre * da + ja) * db + tb] += c * p * mb;
                        }
                    }
            }
        return next;
    }
};

}  // namespace

ThetaReport theta_check(const AlgData& a, const AlgData& b, const FactorizationAlgebra& s,
                        std::size_t n, std::size_t budget) {
    std::size_t da = a.dim, db = b.dim, ds = da * db;
    if (s.algebra.dim != ds) throw std::invalid_argument("theta_check: dimension mismatch");
    ThetaReport rep;
    rep.n = n;
    RelTensorSpace t = relative_tensor_power(s.algebra, s.embed_b, b, n, budget);
    rep.quotient_dim = t.dim;
    std::size_t target = checked_power(da, n, budget / db) * db;
    rep.target_dim = target;
    rep.dims_match = (t.dim == target);

    // ambient θ̃ by the iterated two-factor move
    RatMatrix theta_amb(target, t.ambient_dim);
    Cascade cas{da, db, &s.psi, &b};
    for (std::size_t idx = 0; idx < t.ambient_dim; ++idx) {
        // decode S-basis tuple, big-endian
        std::vector<std::size_t> tup(n);
        std::size_t rem = idx;
        for (std::size_t i = n; i-- > 0;) {
            tup[i] = rem % ds;
            rem /= ds;
        }
        std::vector<BigRat> state(db);
        state[tup[0] % db] = 1;
        std::size_t prefix = 1;  // A^{⊗1} prefix fixed by tup[0]/db
        for (std::size_t i = 1; i < n; ++i) {
            state = cas.absorb(state, prefix, tup[i] / db, tup[i] % db);
            prefix *= da;
        }
        // scatter into the target column: global A index = (tup[0]/db)·da^{n-1} + local prefix
        std::size_t lead = tup[0] / db;
        for (std::size_t pre = 0; pre < prefix; ++pre)
            for (std::size_t bc = 0; bc < db; ++bc) {
                const BigRat& c = state[pre * db + bc];
                if (c != 0) theta_amb.at((lead * prefix + pre) * db + bc, idx) = c;
            }
    }

    // well-definedness: θ̃ must kill the relation span, i.e. θ̃·(id − σP) = 0 on relations;
    // equivalently θ̃ = θ̃·σ·P on the ambient space
    RatMatrix theta_fwd = mat_mul(theta_amb, t.space.section);
    RatMatrix recomposed = mat_mul(theta_fwd, t.space.projection);
    rep.well_defined = (recomposed == theta_amb);
    rep.forward = theta_fwd;

    // inverse per the displayed formula: a₁⊗1_B ⊗_B … ⊗_B aₙ⊗b
    RatMatrix inv(t.dim, target);
    for (std::size_t col = 0; col < target; ++col) {
        std::size_t bidx = col % db;
        std::size_t rem = col / db;  // A^{⊗n} index, big-endian
        std::vector<std::size_t> atup(n);
        for (std::size_t i = n; i-- > 0;) {
            atup[i] = rem % da;
            rem /= da;
        }
        // ambient vector: ⊗_{i<n-1}(e_{a_i}⊗1_B) ⊗ (e_{a_{n-1}}⊗e_b)
        RatVec amb(t.ambient_dim);
        std::vector<std::pair<std::size_t, BigRat>> partial{{0, BigRat(1)}};
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<std::pair<std::size_t, BigRat>> next;
            for (const auto& [base, c] : partial) {
                if (i + 1 < n) {
                    for (std::size_t jb = 0; jb < db; ++jb) {
                        if (b.unit[jb] == 0) continue;
                        next.emplace_back(base * ds + atup[i] * db + jb, c * b.unit[jb]);
                    }
                } else {
                    next.emplace_back(base * ds + atup[i] * db + bidx, c);
                }
            }
            partial = std::move(next);
        }
        for (const auto& [pos, c] : partial) amb[pos] = c;
        RatVec q = t.space.project(amb);
        for (std::size_t r = 0; r < t.dim; ++r) inv.at(r, col) = q[r];
    }
    rep.inverse = inv;

    rep.mutually_inverse = rep.dims_match && mat_mul(theta_fwd, inv) == RatMatrix::identity(target) &&
                           mat_mul(inv, theta_fwd) == RatMatrix::identity(t.dim);

    // S_ψ-bilinearity on the algebra generators A⊗1 and 1⊗B, both sides.
    // Target-side actions are defined independently:
    //   left a: multiply into the first A slot
    //   right d ∈ B: multiply into the B slot
    //   right c ∈ A: ψ-move the B part across c into the last A slot
    //   left b ∈ B: ψ-cascade across all A slots into the B part
    bool bilinear = true;
    std::size_t an_prefix = target / (da * db);  // da^{n-1}
    auto target_left_a = [&](std::size_t ia) {
        RatMatrix op(target, target);
        for (std::size_t col = 0; col < target; ++col) {
            std::size_t lead = col / (an_prefix * db);
            std::size_t rest = col % (an_prefix * db);
            RatVec prod = a.basis_mul(ia, lead);
            for (std::size_t k = 0; k < da; ++k)
                if (prod[k] != 0) op.at(k * an_prefix * db + rest, col) = prod[k];
        }
        return op;
    };
    auto target_right_b = [&](std::size_t ib) {
        RatMatrix op(target, target);
        for (std::size_t col = 0; col < target; ++col) {
            std::size_t bc = col % db, rest = col - bc;
            RatVec prod = b.basis_mul(bc, ib);
            for (std::size_t k = 0; k < db; ++k)
                if (prod[k] != 0) op.at(rest + k, col) = prod[k];
        }
        return op;
    };
    auto target_right_a = [&](std::size_t ic) {
        RatMatrix op(target, target);
        for (std::size_t col = 0; col < target; ++col) {
            std::size_t bc = col % db;
            std::size_t rest = col / db;
            std::size_t last = rest % da;
            std::size_t head = rest / da;  // fixed leading A part
            for (std::size_t ja = 0; ja < da; ++ja)
                for (std::size_t jb = 0; jb < db; ++jb) {
                    const BigRat& p = s.psi.matrix.at(ja * db + jb, bc * da + ic);
                    if (p == 0) continue;
                    RatVec prod = a.basis_mul(last, ja);
                    for (std::size_t k = 0; k < da; ++k)
                        if (prod[k] != 0) op.at((head * da + k) * db + jb, col) += p * prod[k];
                }
        }
        return op;
    };
    auto target_left_b = [&](std::size_t ib) {
        RatMatrix op(target, target);
        for (std::size_t col = 0; col < target; ++col) {
            std::size_t bc = col % db;
            std::size_t rem = col / db;
            std::vector<std::size_t> atup(n);
            for (std::size_t i = n; i-- > 0;) {
                atup[i] = rem % da;
                rem /= da;
            }
            // carry e_ib across a₁,…,aₙ via ψ, then multiply into the B slot;
            // joint state over (A-prefix, B) pairs
            std::size_t prefix = 1;
            std::vector<BigRat> joint(db);
            joint[ib] = 1;
            for (std::size_t i = 0; i < n; ++i) {
                std::vector<BigRat> next(prefix * da * db);
                for (std::size_t pre = 0; pre < prefix; ++pre)
                    for (std::size_t c2 = 0; c2 < db; ++c2) {
                        const BigRat& c = joint[pre * db + c2];
                        if (c == 0) continue;
                        for (std::size_t ja = 0; ja < da; ++ja)
                            for (std::size_t jb = 0; jb < db; ++jb) {
                                const BigRat& p = s.psi.matrix.at(ja * db + jb, c2 * da + atup[i]);
                                if (p != 0) next[(pre * da + ja) * db + jb] += c * p;
                            }
                    }
                joint = std::move(next);
                prefix *= da;
            }
            for (std::size_t pre = 0; pre < prefix; ++pre)
                for (std::size_t c2 = 0; c2 < db; ++c2) {
                    const BigRat& c = joint[pre * db + c2];
                    if (c == 0) continue;
                    RatVec prod = b.basis_mul(c2, bc);
                    for (std::size_t k = 0; k < db; ++k)
                        if (prod[k] != 0) op.at(pre * db + k, col) += c * prod[k];
                }
        }
        return op;
    };

    for (std::size_t ia = 0; ia < da && bilinear; ++ia) {
        RatVec gen = s.embed_a.apply(unit_vec(da, ia));
        RatMatrix lhs = mat_mul(theta_fwd, rel_left_action(s.algebra, t, gen));
        RatMatrix rhs = mat_mul(target_left_a(ia), theta_fwd);
        if (lhs != rhs) bilinear = false;
        RatMatrix lhs2 = mat_mul(theta_fwd, rel_right_action(s.algebra, t, gen));
        RatMatrix rhs2 = mat_mul(target_right_a(ia), theta_fwd);
        if (lhs2 != rhs2) bilinear = false;
    }
    for (std::size_t ib = 0; ib < db && bilinear; ++ib) {
        RatVec gen = s.embed_b.apply(unit_vec(db, ib));
        RatMatrix lhs = mat_mul(theta_fwd, rel_left_action(s.algebra, t, gen));
        RatMatrix rhs = mat_mul(target_left_b(ib), theta_fwd);
        if (lhs != rhs) bilinear = false;
        RatMatrix lhs2 = mat_mul(theta_fwd, rel_right_action(s.algebra, t, gen));
        RatMatrix rhs2 = mat_mul(target_right_b(ib), theta_fwd);
        if (lhs2 != rhs2) bilinear = false;
    }
    rep.bilinear = bilinear;
    return rep;
}

DepthIsoReport depth_iso_check(const HopfData& h, const HopfData& r,
                               const SubalgebraEmbedding& r_in_h, std::size_t n,
                               std::size_t budget) {
    std::size_t d = h.dim();
    DepthIsoReport rep;
    rep.n = n;
    RelTensorSpace t = relative_tensor_power(h.alg, r_in_h, r.alg, n + 1, budget);
    rep.lhs_dim = t.dim;
    QuotientModuleCoalgebra q = quotient_module_coalgebra(h, r, r_in_h);
    std::size_t target = d;
    for (std::size_t i = 0; i < n; ++i) {
        if (q.dim != 0 && target > budget / std::max<std::size_t>(q.dim, 1))
            throw std::runtime_error("tensor budget exceeded");
        target *= q.dim;
    }
    rep.rhs_dim = target;

    // ambient map by pairing from the right: x ⊗ (state in H⊗Q^{⊗k}) ↦
    // x·h₁ ⊗ \overline{h₂} ⊗ tail
    RatMatrix phi(target, t.ambient_dim);
    std::size_t dq = q.dim;
    for (std::size_t idx = 0; idx < t.ambient_dim; ++idx) {
        std::vector<std::size_t> tup(n + 1);
        std::size_t rem = idx;
        for (std::size_t i = n + 1; i-- > 0;) {
            tup[i] = rem % d;
            rem /= d;
        }
        // state over H ⊗ Q^{⊗k}, k growing from 0
        std::vector<BigRat> state(d);
        state[tup[n]] = 1;
        std::size_t qpart = 1;
        for (std::size_t step = n; step-- > 0;) {
            std::vector<BigRat> next(d * dq * qpart);
            for (std::size_t hidx = 0; hidx < d; ++hidx)
                for (std::size_t tail = 0; tail < qpart; ++tail) {
                    const BigRat& c = state[hidx * qpart + tail];
                    if (c == 0) continue;
                    for (std::size_t h1 = 0; h1 < d; ++h1)
                        for (std::size_t h2 = 0; h2 < d; ++h2) {
                            const BigRat& cc = h.c(hidx, h1, h2);
                            if (cc == 0) continue;
                            RatVec hprod = h.alg.basis_mul(tup[step], h1);
                            RatVec qproj = q.space.project(unit_vec(d, h2));
                            for (std::size_t x = 0; x < d; ++x) {
                                if (hprod[x] == 0) continue;
                                for (std::size_t y = 0; y < dq; ++y)
                                    if (qproj[y] != 0)
                                        next[(x * dq + y) * qpart + tail] += c * cc * hprod[x] * qproj[y];
                            }
                        }
                }
            state = std::move(next);
            qpart *= dq;
        }
        for (std::size_t row = 0; row < target; ++row) phi.at(row, idx) = state[row];
    }

    // well-defined on the quotient and bijective
    RatMatrix composed = mat_mul(mat_mul(phi, t.space.section), t.space.projection);
    rep.well_defined = (composed == phi);
    RatMatrix on_quotient = mat_mul(phi, t.space.section);
    rep.bijective = (rep.lhs_dim == rep.rhs_dim) && (rank(on_quotient) == rep.rhs_dim);
    return rep;
}

}  // namespace depth
