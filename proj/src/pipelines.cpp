#include "depth/pipelines.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace depth {

namespace {

RatVec unit_vec(std::size_t dim, std::size_t i) {
    RatVec v(dim);
    v[i] = 1;
    return v;
}

void partitions_rec(int n, int maxpart, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, maxpart); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(n - p, p, cur, out);
        cur.pop_back();
    }
}

std::string fmt_long(long v) { return std::to_string(v); }

ClaimVerdict make_claim(std::string id, std::string instance, long lhs, long rhs,
                        std::string paper_value, bool pass) {
    return ClaimVerdict{std::move(id), std::move(instance), fmt_long(lhs), fmt_long(rhs),
                        std::move(paper_value), pass};
}

void attach_matrix(DepthReport& rep, const PipelineConfig& cfg, const std::string& name,
                   const IntMatrix& m) {
    if (cfg.include_small_matrices && m.rows() <= 64 && m.cols() <= 64)
        rep.matrices.emplace(name, m);
    rep.info[name + "_shape"] =
        std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void add_chain_claim(DepthReport& rep, const std::string& instance, const DepthQuad& q) {
    bool ok = q.d_h - 2 <= q.d_min && q.d_min <= q.d_h + 1;
    rep.claims.push_back(ClaimVerdict{
        "C4", instance, fmt_long(q.d_min),
        "[" + fmt_long(q.d_h - 2) + "," + fmt_long(q.d_h + 1) + "]",
        "d_h - 2 <= d <= d_h + 1", ok});
}

}  // namespace

bool DepthReport::all_checks_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.pass; });
}

std::vector<std::vector<int>> partitions_of(std::size_t n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    partitions_rec(static_cast<int>(n), static_cast<int>(n), cur, out);
    return out;
}

IntMatrix young_branching_matrix(std::size_t n) {
    if (n == 0) throw std::invalid_argument("young_branching_matrix: n >= 1 required");
    auto pn = partitions_of(n);
    auto pn1 = partitions_of(n + 1);
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t j = 0; j < pn1.size(); ++j) index[pn1[j]] = j;
    IntMatrix m(pn.size(), pn1.size());
    for (std::size_t i = 0; i < pn.size(); ++i) {
        const auto& lam = pn[i];
        for (std::size_t k = 0; k <= lam.size(); ++k) {
            std::vector<int> mu = lam;
            if (k == lam.size()) {
                mu.push_back(1);
            } else {
                if (k > 0 && lam[k] == lam[k - 1]) continue;  // not an addable corner
                mu[k]++;
            }
            m.at(i, index.at(mu)) = 1;
        }
    }
    return m;
}

IntMatrix bimodule_mult_matrix_ops(const CharacterTable& table,
                                   const std::vector<RatMatrix>& left_of_element,
                                   const std::vector<RatMatrix>& right_of_element) {
    const PermGroup& g = table.group();
    std::size_t s = table.irr_count();
    std::size_t order = g.order();
    if (left_of_element.size() != order || right_of_element.size() != order)
        throw std::invalid_argument("bimodule_mult_matrix_ops: need one action matrix per element");
    const Cyclotomy& cy = table.cyclotomy();

    // two-sided trace character on class-pair representatives
    std::size_t nc = table.class_count();
    std::vector<std::vector<BigRat>> theta(nc, std::vector<BigRat>(nc));
    for (std::size_t c = 0; c < nc; ++c) {
        std::size_t gi = g.index_of(table.class_rep(c));
        for (std::size_t cp = 0; cp < nc; ++cp) {
            std::size_t hi = g.index_of(table.class_rep(cp).inverse());
            const RatMatrix& l = left_of_element[gi];
            const RatMatrix& r = right_of_element[hi];
            BigRat tr;
            for (std::size_t i = 0; i < l.rows(); ++i)
                for (std::size_t k = 0; k < l.cols(); ++k)
                    if (l.at(i, k) != 0 && r.at(k, i) != 0) tr += l.at(i, k) * r.at(k, i);
            theta[c][cp] = tr;
        }
    }

    IntMatrix t(s, s);
    BigRat inv_g2(BigInt(1), BigInt(static_cast<unsigned long>(order)) *
                                  BigInt(static_cast<unsigned long>(order)));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) {
            CycRatVec acc(table.exponent());
            for (std::size_t c = 0; c < nc; ++c) {
                const CycVec& chi_i = table.irreducibles()[i].values[table.inverse_class(c)];
                for (std::size_t cp = 0; cp < nc; ++cp) {
                    if (theta[c][cp] == 0) continue;
                    const CycVec& chi_j = table.irreducibles()[j].values[cp];
                    BigRat w = theta[c][cp] *
                               BigRat(BigInt(static_cast<unsigned long>(table.class_size(c))) *
                                      BigInt(static_cast<unsigned long>(table.class_size(cp))));
                    CycRatVec term = cy.rat_mul(cy.to_rat(chi_i), cy.to_rat(chi_j));
                    acc = cy.rat_add(acc, cy.rat_scale(term, w));
                }
            }
            auto val = cy.as_rational(acc);
            if (!val) throw std::runtime_error("bimodule_mult_matrix: non-rational multiplicity");
            BigRat m = *val * inv_g2;
            if (m.get_den() != 1 || m < 0)
                throw std::runtime_error("bimodule_mult_matrix: multiplicity not a nonnegative integer");
            t.at(i, j) = m.get_num();
        }
    return t;
}

IntMatrix bimodule_mult_matrix(const AlgData& x, const CharacterTable& table,
                               const SubalgebraEmbedding& kg_in_x) {
    const PermGroup& g = table.group();
    if (kg_in_x.map.cols() != g.order() || kg_in_x.map.rows() != x.dim)
        throw std::invalid_argument("bimodule_mult_matrix: embedding shape mismatch");
    std::size_t order = g.order();
    std::vector<RatMatrix> left(order), right(order);
    for (std::size_t e = 0; e < order; ++e) {
        RatVec img = kg_in_x.apply(unit_vec(order, e));
        left[e] = x.left_mult(img);
        right[e] = x.right_mult(img);
    }
    return bimodule_mult_matrix_ops(table, left, right);
}

long odd_depth_via_bimodules(const IntMatrix& t) { return odd_depth_of_square(t); }

DrinfeldInductionData drinfeld_induction_matrix(const PermGroup& g,
                                                std::optional<unsigned long> prime_override) {
    CharacterTable tg = CharacterTable::dixon(g, prime_override);
    const auto& cc = g.conjugacy_classes();
    DrinfeldInductionData out;
    std::vector<std::vector<BigInt>> rows;
    BigInt dim_check = 0;
    for (std::size_t c = 0; c < cc.count(); ++c) {
        Permutation rep = g.elements()[cc.rep_index[c]];
        PermGroup cent = centralizer(g, rep);
        CharacterTable tc = CharacterTable::dixon(cent);
        std::size_t eg = tg.exponent(), ec = tc.exponent();
        for (std::size_t i = 0; i < tc.irr_count(); ++i) {
            ClassFunction chi;
            chi.exponent = eg;
            for (const auto& v : tc.irreducibles()[i].values)
                chi.values.push_back(embed_cyc_rat(tc.cyclotomy().to_rat(v), ec, eg));
            ClassFunction up = induce_character(tc, tg, chi);
            std::vector<BigInt> row = tg.decompose(up);
            rows.push_back(row);
            out.row_labels.emplace_back(c, i);
            BigInt block = BigInt(static_cast<unsigned long>(cc.class_sizes[c])) *
                           tc.irreducibles()[i].degree;
            dim_check += block * block;
        }
    }
    BigInt order(static_cast<unsigned long>(g.order()));
    if (dim_check != order * order)
        throw std::runtime_error("drinfeld_induction_matrix: block dimensions do not sum to |G|²");
    IntMatrix m(rows.size(), tg.irr_count());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < tg.irr_count(); ++j) m.at(i, j) = rows[i][j];
    out.m = std::move(m);
    return out;
}

// ---------------------------------------------------------------------------
// exact split-semisimple decomposition
// ---------------------------------------------------------------------------

namespace {

// rational roots of the squarefree minimal polynomial of mult-by-w on span(basis)
std::optional<std::vector<BigRat>> rational_spectrum(const AlgData& x, const RatVec& w,
                                                     const RatMatrix& span_rows) {
    std::size_t dim = span_rows.rows();
    // Krylov: powers of w inside the span, in span coordinates via least squares
    // (the span rows are independent; coordinates solved exactly)
    RatMatrix basis_t = span_rows.transpose();  // x.dim × dim
    auto coords_of = [&](const RatVec& v) -> std::optional<std::vector<BigRat>> {
        return solve(basis_t, v);
    };
    // mult-by-w operator matrix on the span
    RatMatrix op(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        RatVec bj(x.dim);
        for (std::size_t t = 0; t < x.dim; ++t) bj[t] = basis_t.at(t, j);
        auto c = coords_of(x.mul_vec(w, bj));
        if (!c) return std::nullopt;
        for (std::size_t i = 0; i < dim; ++i) op.at(i, j) = (*c)[i];
    }
    // minimal polynomial by Krylov on the full operator: iterate I, op, op², …
    std::vector<RatMatrix> pows{RatMatrix::identity(dim)};
    for (;;) {
        RatMatrix stack(pows.size() + 1, dim * dim);
        RatMatrix next = mat_mul(pows.back(), op);
        for (std::size_t p = 0; p <= pows.size(); ++p) {
            const RatMatrix& mm = p < pows.size() ? pows[p] : next;
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j) stack.at(p, i * dim + j) = mm.at(i, j);
        }
        RatMatrix ker = kernel_basis(stack.transpose());
        if (ker.rows() > 0) {
            // dependency with the highest power having nonzero coefficient gives the min poly
            std::vector<BigRat> poly(pows.size() + 1);
            bool found = false;
            for (std::size_t r = 0; r < ker.rows() && !found; ++r)
                if (ker.at(r, pows.size()) != 0) {
                    for (std::size_t c = 0; c <= pows.size(); ++c) poly[c] = ker.at(r, c);
                    found = true;
                }
            if (!found) return std::nullopt;
            // normalize monic
            BigRat lead = poly.back();
            for (auto& c : poly) c /= lead;
            auto divisors = [](const BigInt& n) -> std::optional<std::vector<long>> {
                if (!n.fits_slong_p()) return std::nullopt;
                long v = std::labs(n.get_si());
                std::vector<long> ds;
                for (long d = 1; d * d <= v; ++d)
                    if (v % d == 0) {
                        ds.push_back(d);
                        ds.push_back(v / d);
                    }
                return ds;
            };
            std::vector<BigRat> roots;
            std::size_t degree = poly.size() - 1;
            // a single zero root is fine; a repeated factor of t means the minimal
            // polynomial is not squarefree, i.e. the input is not semisimple
            std::vector<BigRat> reduced = poly;
            if (reduced.front() == 0) {
                roots.push_back(BigRat(0));
                reduced.erase(reduced.begin());
                if (!reduced.empty() && reduced.front() == 0) return std::nullopt;
            }
            if (reduced.size() > 1) {
                // rational root theorem on the primitive integer form: u/v with
                // u | constant term, v | leading coefficient
                BigInt dl = 1;
                for (const auto& c : reduced) dl = dl / gcd(dl, c.get_den()) * c.get_den();
                std::vector<BigInt> ip;
                for (const auto& c : reduced) ip.push_back(c.get_num() * (dl / c.get_den()));
                auto d0 = divisors(ip.front());
                auto dlead = divisors(ip.back());
                if (!d0 || !dlead) return std::nullopt;
                for (long u : *d0)
                    for (long v : *dlead)
                        for (int sgn = -1; sgn <= 1; sgn += 2) {
                            BigRat cand = make_rat(BigInt(sgn * u), BigInt(v));
                            BigRat val;
                            for (std::size_t c = reduced.size(); c-- > 0;) val = val * cand + reduced[c];
                            if (val == 0 &&
                                std::find(roots.begin(), roots.end(), cand) == roots.end())
                                roots.push_back(cand);
                        }
            }
            if (roots.size() != degree) return std::nullopt;  // not rationally split / not squarefree
            return roots;
        }
        pows.push_back(std::move(next));
        if (pows.size() > dim + 1) return std::nullopt;
    }
}

}  // namespace

std::optional<SplitSemisimpleData> split_semisimple(const AlgData& x) {
    RatMatrix z = center_basis(x);
    std::size_t zdim = z.rows();
    std::vector<RatVec> idems{x.unit};
    for (std::size_t gen = 0; gen < zdim; ++gen) {
        RatVec zg(x.dim);
        for (std::size_t t = 0; t < x.dim; ++t) zg[t] = z.at(gen, t);
        std::vector<RatVec> next;
        for (const RatVec& e : idems) {
            RatVec w = x.mul_vec(e, zg);
            // span of e·Z: rows e·z_i
            std::vector<std::vector<BigRat>> span_rows_v;
            for (std::size_t r = 0; r < zdim; ++r) {
                RatVec zr(x.dim);
                for (std::size_t t = 0; t < x.dim; ++t) zr[t] = z.at(r, t);
                span_rows_v.push_back(x.mul_vec(e, zr));
            }
            RatMatrix span_all(zdim, x.dim);
            for (std::size_t r = 0; r < zdim; ++r)
                for (std::size_t t = 0; t < x.dim; ++t) span_all.at(r, t) = span_rows_v[r][t];
            std::vector<std::size_t> piv;
            RatMatrix reduced = rref(span_all, &piv);
            RatMatrix span(piv.size(), x.dim);
            for (std::size_t r = 0; r < piv.size(); ++r)
                for (std::size_t t = 0; t < x.dim; ++t) span.at(r, t) = reduced.at(r, t);
            if (piv.empty()) continue;
            auto roots = rational_spectrum(x, w, span);
            if (!roots) return std::nullopt;
            if (roots->size() <= 1) {
                next.push_back(e);
                continue;
            }
            // Lagrange projections e_λ = Π_{μ≠λ} (w − μe)/(λ−μ)
            for (const BigRat& lam : *roots) {
                RatVec proj = e;
                for (const BigRat& mu : *roots) {
                    if (mu == lam) continue;
                    RatVec shifted(x.dim);
                    for (std::size_t t = 0; t < x.dim; ++t) shifted[t] = w[t] - mu * e[t];
                    proj = x.mul_vec(proj, shifted);
                    BigRat scale = 1 / (lam - mu);
                    for (auto& c : proj) c *= scale;
                }
                next.push_back(std::move(proj));
            }
        }
        idems = std::move(next);
    }
    if (idems.size() != zdim) return std::nullopt;
    SplitSemisimpleData out;
    for (RatVec& e : idems) {
        // idempotency and block degree
        if (x.mul_vec(e, e) != e) return std::nullopt;
        std::size_t block_dim = rank(x.right_mult(e));
        std::size_t n = 0;
        while (n * n < block_dim) ++n;
        if (n * n != block_dim) return std::nullopt;
        out.degrees.push_back(n);
        out.idempotents.push_back(std::move(e));
    }
    std::size_t total = 0;
    for (std::size_t n : out.degrees) total += n * n;
    if (total != x.dim) return std::nullopt;
    return out;
}

// ---------------------------------------------------------------------------
// scenarios
// ---------------------------------------------------------------------------

DepthReport scenario_matrix(const IntMatrix& m, const PipelineConfig& cfg) {
    DepthReport rep;
    rep.scenario = "matrix";
    attach_matrix(rep, cfg, "M", m);
    rep.quad = depth_quad(m);
    rep.d_odd = rep.quad->d_odd;
    add_chain_claim(rep, "matrix", *rep.quad);
    return rep;
}

DepthReport scenario_sym_pair(std::size_t n, const PipelineConfig& cfg) {
    DepthReport rep;
    rep.scenario = "sym(" + std::to_string(n) + ")";
    IntMatrix m = young_branching_matrix(n);
    attach_matrix(rep, cfg, "M", m);
    rep.quad = depth_quad(m);
    rep.d_odd = rep.quad->d_odd;
    long paper = 2 * static_cast<long>(n) + 1;
    rep.claims.push_back(make_claim("C1", rep.scenario, rep.quad->d_min, paper,
                                    "d(CS_n, CS_{n+1}) = 2n+1", rep.quad->d_min == paper));
    add_chain_claim(rep, rep.scenario, *rep.quad);
    return rep;
}

DepthReport scenario_group_pair(const PermGroup& g, const PermGroup& h, const std::string& label,
                                const PipelineConfig& cfg) {
    DepthReport rep;
    rep.scenario = label;
    CharacterTable tg = CharacterTable::dixon(g, cfg.prime_override);
    CharacterTable th = CharacterTable::dixon(h, cfg.prime_override);
    InductionMatrix m = induction_matrix(th, tg);
    attach_matrix(rep, cfg, "M", m.m);
    rep.quad = depth_quad(m.m);
    rep.d_odd = rep.quad->d_odd;

    bool normal = is_normal(h, g);
    rep.info["is_normal"] = normal ? "true" : "false";
    bool c2 = normal == (rep.quad->d_min <= 2);
    rep.claims.push_back(ClaimVerdict{"C2", label, "normality=" + std::string(normal ? "1" : "0"),
                                      "depth<=2 is " + std::string(rep.quad->d_min <= 2 ? "1" : "0"),
                                      "depth 2 iff normal", c2});

    HDepthViaQ hq = h_depth_via_q(th, tg);
    rep.claims.push_back(make_claim("C3", label, hq.via_module_depth, hq.via_matrix,
                                    "d_h(R,H) = 2d(Q)+1", hq.agree));
    rep.info["module_depth_Q"] = std::to_string(hq.q_depth.depth);

    add_chain_claim(rep, label, *rep.quad);

    // route agreement with the bimodule trace method
    HopfData kg = group_algebra(g);
    IntMatrix t =
        bimodule_mult_matrix(kg.alg, th, group_algebra_embedding(h, g));
    IntMatrix mmt = mat_mul(m.m, m.m.transpose());
    rep.checks.push_back({"bimodule trace matrix equals M·Mᵀ", t == mmt});
    rep.checks.push_back(
        {"odd depth via bimodules equals matrix route", odd_depth_via_bimodules(t) == rep.quad->d_odd});
    attach_matrix(rep, cfg, "T", t);
    return rep;
}

DepthReport scenario_heisenberg(const PermGroup& g, const std::string& label,
                                const PipelineConfig& cfg) {
    DepthReport rep;
    rep.scenario = "heisenberg(" + label + ")";
    HopfData kg = group_algebra(g);
    FactorizationAlgebra heis = heisenberg_double(kg);
    std::size_t n = g.order();
    rep.info["dim"] = std::to_string(heis.algebra.dim);

    std::size_t zdim = center_dimension(heis.algebra);
    rep.checks.push_back({"Heisenberg double has trivial center", zdim == 1});

    // B = H* = k^G: its primitive idempotents are the embedded dual basis vectors
    auto ss = split_semisimple(heis.algebra);
    rep.checks.push_back({"split semisimple with a single block", ss.has_value() && ss->degrees.size() == 1});
    if (!ss) throw std::runtime_error("heisenberg scenario: Wedderburn decomposition failed");
    std::size_t deg = ss->degrees[0];
    rep.checks.push_back({"block degree equals |G|", deg == n});

    // restriction multiplicities of the unique simple to the k^G points
    IntMatrix m(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        RatVec e = heis.embed_b.apply(unit_vec(n, i));
        std::size_t r = rank(heis.algebra.left_mult(e));
        if (r % deg != 0)
            throw std::runtime_error("heisenberg scenario: non-integral restriction multiplicity");
        m.at(i, 0) = BigInt(static_cast<unsigned long>(r / deg));
    }
    attach_matrix(rep, cfg, "M", m);
    rep.quad = depth_quad(m);
    rep.d_odd = rep.quad->d_odd;

    // sandwich dimensions e_i X e_j must reproduce M·Mᵀ
    IntMatrix t(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        RatVec ei = heis.embed_b.apply(unit_vec(n, i));
        for (std::size_t j = 0; j < n; ++j) {
            RatVec ej = heis.embed_b.apply(unit_vec(n, j));
            RatMatrix op = mat_mul(heis.algebra.left_mult(ei), heis.algebra.right_mult(ej));
            t.at(i, j) = BigInt(static_cast<unsigned long>(rank(op)));
        }
    }
    rep.checks.push_back({"sandwich dimensions equal M·Mᵀ", t == mat_mul(m, m.transpose())});

    rep.claims.push_back(make_claim("C5", rep.scenario, rep.quad->d_min, 3, "d(H*, H#H*) = 3",
                                    rep.quad->d_min == 3));
    add_chain_claim(rep, rep.scenario, *rep.quad);
    return rep;
}

DepthReport scenario_drinfeld(const PermGroup& g, const std::string& label,
                              const PipelineConfig& cfg) {
    DepthReport rep;
    rep.scenario = "drinfeld(" + label + ")";
    HopfData kg = group_algebra(g);
    DrinfeldDouble dd = drinfeld_double(kg);  // all Hopf axioms checked in construction
    rep.info["dim"] = std::to_string(dd.algebra.dim());

    DrinfeldInductionData di = drinfeld_induction_matrix(g, cfg.prime_override);
    attach_matrix(rep, cfg, "M_D", di.m);

    // the induction matrix of kG ⊆ D(kG) has rows Irr(kG): transpose the
    // centralizer-pairs matrix
    IntMatrix m = di.m.transpose();
    rep.quad = depth_quad(m);
    rep.d_odd = rep.quad->d_odd;

    CharacterTable tg = CharacterTable::dixon(g, cfg.prime_override);
    IntMatrix t = bimodule_mult_matrix(dd.algebra.alg, tg, dd.embed_h);
    rep.checks.push_back({"trace route matrix equals M_Dᵀ·M_D",
                          t == mat_mul(di.m.transpose(), di.m)});
    rep.checks.push_back(
        {"odd depth via bimodules equals matrix route", odd_depth_via_bimodules(t) == rep.quad->d_odd});
    attach_matrix(rep, cfg, "T", t);

    bool abelian = center_dimension(kg.alg) == g.order();
    if (abelian) {
        rep.checks.push_back({"abelian G: D(kG) commutative",
                              center_dimension(dd.algebra.alg) == dd.algebra.dim()});
        rep.checks.push_back({"abelian G: central subalgebra has depth 1", rep.quad->d_min == 1});
    }
    rep.claims.push_back(make_claim("C7", rep.scenario, 3, rep.quad->d_min, "3 <= d(H, D(H))",
                                    3 <= rep.quad->d_min));
    add_chain_claim(rep, rep.scenario, *rep.quad);
    return rep;
}

DepthReport scenario_gen_smash(const PermGroup& g, const PermGroup& h, const std::string& label,
                               const PipelineConfig& cfg) {
    DepthReport rep;
    rep.scenario = "gensmash(" + label + ")";
    HopfData kg = group_algebra(g);
    HopfData kh = group_algebra(h);
    SubalgebraEmbedding emb = group_algebra_embedding(h, g);
    QuotientModuleCoalgebra q = quotient_module_coalgebra(kg, kh, emb);
    FactorizationAlgebra x = generalized_smash(q, kg);
    rep.info["dim"] = std::to_string(x.algebra.dim);

    CharacterTable tg = CharacterTable::dixon(g, cfg.prime_override);
    CharacterTable th = CharacterTable::dixon(h, cfg.prime_override);

    // odd depth of kG ⊆ Q^{*op}#H by the trace route
    IntMatrix t = bimodule_mult_matrix(x.algebra, tg, x.embed_b);
    attach_matrix(rep, cfg, "T", t);
    long dodd = odd_depth_via_bimodules(t);
    rep.d_odd = dodd;

    long dh_rh = h_depth(BratteliPowers(induction_matrix(th, tg).m));
    rep.claims.push_back(make_claim("C6", rep.scenario, dodd, dh_rh,
                                    "d_odd(H, Q*op # H) = d_h(R,H)", dodd == dh_rh));

    // full quad when the Wedderburn decomposition is rationally available
    auto ss = split_semisimple(x.algebra);
    if (ss) {
        std::size_t blocks = ss->degrees.size();
        IntMatrix m(tg.irr_count(), blocks);
        bool ok = true;
        for (std::size_t b = 0; b < blocks && ok; ++b) {
            RatMatrix re = x.algebra.right_mult(ss->idempotents[b]);
            std::vector<BigInt> values;
            for (std::size_t c = 0; c < tg.class_count(); ++c) {
                RatVec img = x.embed_b.apply(unit_vec(g.order(), g.index_of(tg.class_rep(c))));
                RatMatrix le = x.algebra.left_mult(img);
                BigRat tr;
                for (std::size_t i = 0; i < x.algebra.dim; ++i)
                    for (std::size_t k = 0; k < x.algebra.dim; ++k)
                        if (le.at(i, k) != 0 && re.at(k, i) != 0) tr += le.at(i, k) * re.at(k, i);
                BigRat v = tr / BigRat(static_cast<unsigned long>(ss->degrees[b]));
                if (v.get_den() != 1) {
                    ok = false;
                    break;
                }
                values.push_back(v.get_num());
            }
            if (!ok) break;
            ClassFunction chi = tg.class_function_from_integers(values);
            std::vector<BigInt> mults = tg.decompose(chi);
            for (std::size_t i = 0; i < mults.size(); ++i) {
                if (mults[i] < 0) ok = false;
                m.at(i, b) = mults[i];
            }
        }
        if (ok) {
            attach_matrix(rep, cfg, "M", m);
            rep.quad = depth_quad(m);
            rep.checks.push_back({"trace route matrix equals M·Mᵀ", t == mat_mul(m, m.transpose())});
            rep.checks.push_back({"odd depth agrees between routes", rep.quad->d_odd == dodd});
            add_chain_claim(rep, rep.scenario, *rep.quad);
        } else {
            rep.info["d_ev"] = "not computed";
        }
    } else {
        rep.info["d_ev"] = "not computed";
    }
    return rep;
}

std::vector<GroupPairSpec> default_pair_battery(std::size_t cap) {
    std::vector<GroupPairSpec> out;
    out.push_back({"C2<=S3", named_group("S3", cap),
                   PermGroup(3, {Permutation::from_cycles(3, {{1, 2}})}, cap)});
    out.push_back({"A3<|S3", named_group("S3", cap),
                   PermGroup(3, {Permutation::from_cycles(3, {{1, 2, 3}})}, cap)});
    out.push_back({"S3<=S4", named_group("S4", cap),
                   PermGroup(4, {Permutation::from_cycles(4, {{1, 2}}),
                                 Permutation::from_cycles(4, {{1, 2, 3}})},
                             cap)});
    out.push_back({"C3<=S3", named_group("S3", cap),
                   PermGroup(3, {Permutation::from_cycles(3, {{1, 2, 3}})}, cap)});
    out.push_back({"V4<|A4", named_group("A4", cap),
                   PermGroup(4, {Permutation::from_cycles(4, {{1, 2}, {3, 4}}),
                                 Permutation::from_cycles(4, {{1, 3}, {2, 4}})},
                             cap)});
    out.push_back({"C2<=D4", named_group("D4", cap),
                   PermGroup(4, {Permutation::from_cycles(4, {{1, 3}})}, cap)});
    return out;
}

std::vector<DepthReport> claims_audit_default(const PipelineConfig& cfg) {
    std::vector<DepthReport> out;
    for (std::size_t n = 1; n <= 8; ++n) out.push_back(scenario_sym_pair(n, cfg));
    for (const auto& pair : default_pair_battery(cfg.group_order_cap))
        out.push_back(scenario_group_pair(pair.g, pair.h, pair.label, cfg));
    out.push_back(scenario_heisenberg(named_group("C2", cfg.group_order_cap), "C2", cfg));
    out.push_back(scenario_heisenberg(named_group("S3", cfg.group_order_cap), "S3", cfg));
    out.push_back(
        scenario_gen_smash(named_group("S3", cfg.group_order_cap),
                           PermGroup(3, {Permutation::from_cycles(3, {{1, 2}})}, cfg.group_order_cap),
                           "C2<=S3", cfg));
    out.push_back(scenario_drinfeld(named_group("C2", cfg.group_order_cap), "C2", cfg));
    out.push_back(scenario_drinfeld(named_group("C3", cfg.group_order_cap), "C3", cfg));
    out.push_back(scenario_drinfeld(named_group("S3", cfg.group_order_cap), "S3", cfg));

    // C8: alternating bound for A4 ⊆ A5
    {
        DepthReport rep;
        rep.scenario = "A4<=A5";
        PermGroup a5 = named_group("A5", cfg.group_order_cap);
        PermGroup a4(5, {Permutation::from_cycles(5, {{1, 2, 3}}),
                         Permutation::from_cycles(5, {{2, 3, 4}})},
                     cfg.group_order_cap);
        CharacterTable t5 = CharacterTable::dixon(a5, cfg.prime_override);
        CharacterTable t4 = CharacterTable::dixon(a4, cfg.prime_override);
        InductionMatrix m = induction_matrix(t4, t5);
        attach_matrix(rep, cfg, "M", m.m);
        rep.quad = depth_quad(m.m);
        rep.d_odd = rep.quad->d_odd;
        long bound = 2 * (4 - 2) + 1;  // 2(n − ⌈√n⌉) + 1 at n = 4
        rep.claims.push_back(make_claim("C8", rep.scenario, rep.quad->d_min, bound,
                                        "d(CA_n, CA_{n+1}) <= 2(n-ceil(sqrt(n)))+1",
                                        rep.quad->d_min <= bound));
        add_chain_claim(rep, rep.scenario, *rep.quad);
        out.push_back(rep);
    }
    return out;
}

}  // namespace depth
