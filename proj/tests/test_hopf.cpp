#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "depth/hopf.hpp"

using namespace depth;

namespace {

HopfData kc2() { return group_algebra(named_group("C2")); }
HopfData ks3() { return group_algebra(named_group("S3")); }

RatVec basis_vec(std::size_t d, std::size_t i) {
    RatVec v(d);
    v[i] = 1;
    return v;
}

bool commutative(const AlgData& a) { return center_dimension(a) == a.dim; }

}  // namespace

TEST_CASE("group algebras satisfy all Hopf axioms") {
    CHECK(verify_hopf(kc2()).ok);
    CHECK(verify_hopf(ks3()).ok);
    CHECK(verify_hopf(group_algebra(named_group("C4"))).ok);
}

TEST_CASE("corrupted structure constants fail with a witness") {
    HopfData h = ks3();
    HopfData bad = h;
    bad.alg.m(1, 2, 3) += 1;
    AxiomReport rep = verify_hopf(bad);
    CHECK_FALSE(rep.ok);
    CHECK_FALSE(rep.failed_axiom.empty());
    CHECK_FALSE(rep.witness.empty());

    HopfData bad2 = h;
    bad2.comult[(2 * 6 + 3) * 6 + 3] += 1;
    CHECK_FALSE(verify_hopf(bad2).ok);

    HopfData bad3 = h;
    bad3.antipode.at(0, 1) += 1;
    AxiomReport rep3 = verify_hopf(bad3);
    CHECK_FALSE(rep3.ok);
}

TEST_CASE("dual and coopposite") {
    HopfData d2 = dual_hopf(kc2());
    CHECK(verify_hopf(d2).ok);
    CHECK(d2.dim() == 2);
    // the dual basis consists of orthogonal idempotents
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            RatVec p = d2.alg.mul_vec(basis_vec(2, i), basis_vec(2, j));
            CHECK(p == (i == j ? basis_vec(2, i) : RatVec(2)));
        }
    CHECK(commutative(d2.alg));

    HopfData ds3 = dual_hopf(ks3());
    CHECK(verify_hopf(ds3).ok);
    CHECK(commutative(ds3.alg));  // functions on S3
    CHECK(center_dimension(ks3().alg) == 3);  // class algebra of S3

    // cop is an involution
    HopfData c = cop_hopf(ds3);
    CHECK(verify_hopf(c).ok);
    HopfData cc = cop_hopf(c);
    CHECK(cc.comult == ds3.comult);
    CHECK(cc.antipode == ds3.antipode);
}

TEST_CASE("flip factorization gives the tensor product algebra") {
    AlgData a = kc2().alg;
    AlgData b = group_algebra(named_group("C3")).alg;
    FactorizationAlgebra t = factorization_algebra(a, b, flip_map(a.dim, b.dim));
    CHECK(t.algebra.dim == 6);
    CHECK(verify_algebra(t.algebra).ok);
    // product is componentwise: (e_i⊗e_j)(e_k⊗e_l) = e_i e_k ⊗ e_j e_l
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 3; ++l) {
                    RatVec got = t.algebra.basis_mul(i * 3 + j, k * 3 + l);
                    RatVec ea = a.basis_mul(i, k), eb = b.basis_mul(j, l);
                    RatVec expect(6);
                    for (std::size_t x = 0; x < 2; ++x)
                        for (std::size_t y = 0; y < 3; ++y) expect[x * 3 + y] = ea[x] * eb[y];
                    CHECK(got == expect);
                }

    // corrupted flip: unit law or octagon must reject it
    FactorizationMap badpsi = flip_map(a.dim, b.dim);
    badpsi.matrix.at(0, 5) += 1;
    CHECK_THROWS(factorization_algebra(a, b, badpsi));
}

TEST_CASE("trivial action smash is the tensor product") {
    AlgData a = group_algebra(named_group("C3")).alg;
    HopfData h = kc2();
    ModuleAlgebraAction act;
    act.dim_h = 2;
    act.dim_a = 3;
    act.matrix = RatMatrix(3, 6);
    for (std::size_t ih = 0; ih < 2; ++ih)
        for (std::size_t ia = 0; ia < 3; ++ia)
            for (std::size_t k = 0; k < 3; ++k)
                act.matrix.at(k, ih * 3 + ia) = h.counit[ih] * (k == ia ? 1 : 0);
    FactorizationAlgebra s = smash_product(a, h, act);
    FactorizationAlgebra t = factorization_algebra(a, h.alg, flip_map(3, 2));
    CHECK(s.algebra.mult == t.algebra.mult);
}

TEST_CASE("Heisenberg double of kC2 is a 4-dimensional central-simple algebra") {
    FactorizationAlgebra h = heisenberg_double(kc2());
    CHECK(h.algebra.dim == 4);
    CHECK(verify_algebra(h.algebra).ok);
    CHECK(center_dimension(h.algebra) == 1);
}

TEST_CASE("Heisenberg double of kS3 is 36-dimensional with trivial center") {
    FactorizationAlgebra h = heisenberg_double(ks3());
    CHECK(h.algebra.dim == 36);
    CHECK(center_dimension(h.algebra) == 1);
}

TEST_CASE("quotient module coalgebra dimensions") {
    PermGroup s3 = named_group("S3");
    PermGroup c2(3, {Permutation::from_cycles(3, {{1, 2}})});
    HopfData hs3 = group_algebra(s3);
    HopfData hc2 = group_algebra(c2);

    QuotientModuleCoalgebra q = quotient_module_coalgebra(hs3, hc2, group_algebra_embedding(c2, s3));
    CHECK(q.dim == 3);

    QuotientModuleCoalgebra qfull =
        quotient_module_coalgebra(hs3, hs3, group_algebra_embedding(s3, s3));
    CHECK(qfull.dim == 1);

    // k ⊆ H: Q = H
    PermGroup triv(3, {});
    HopfData hk = group_algebra(triv);
    QuotientModuleCoalgebra qtriv =
        quotient_module_coalgebra(hs3, hk, group_algebra_embedding(triv, s3));
    CHECK(qtriv.dim == 6);
}

TEST_CASE("generalized smash product") {
    PermGroup s3 = named_group("S3");
    PermGroup c2(3, {Permutation::from_cycles(3, {{1, 2}})});
    HopfData hs3 = group_algebra(s3);

    QuotientModuleCoalgebra q =
        quotient_module_coalgebra(hs3, group_algebra(c2), group_algebra_embedding(c2, s3));
    FactorizationAlgebra x = generalized_smash(q, hs3);
    CHECK(x.algebra.dim == 18);
    CHECK(verify_algebra(x.algebra).ok);

    // H ≤ H: Q = k and the product is isomorphic to H itself via the B-embedding
    QuotientModuleCoalgebra qh = quotient_module_coalgebra(hs3, hs3, group_algebra_embedding(s3, s3));
    FactorizationAlgebra xh = generalized_smash(qh, hs3);
    CHECK(xh.algebra.dim == 6);
    CHECK(rank(xh.embed_b.map) == 6);  // bijective embedding: X ≅ H

    // trivial subgroup of C2: dimension 2·2 = 4
    PermGroup c2g = named_group("C2");
    PermGroup triv(2, {});
    HopfData hc2 = group_algebra(c2g);
    QuotientModuleCoalgebra qt =
        quotient_module_coalgebra(hc2, group_algebra(triv), group_algebra_embedding(triv, c2g));
    FactorizationAlgebra xt = generalized_smash(qt, hc2);
    CHECK(xt.algebra.dim == 4);
}

TEST_CASE("matched pair with trivial actions gives the tensor Hopf algebra") {
    HopfData h = kc2();
    HopfData k = group_algebra(named_group("C3"));
    MatchedPairActions acts;
    acts.dim_h = 2;
    acts.dim_k = 3;
    acts.left_act = RatMatrix(3, 6);
    acts.right_act = RatMatrix(2, 6);
    for (std::size_t ih = 0; ih < 2; ++ih)
        for (std::size_t ik = 0; ik < 3; ++ik) {
            for (std::size_t t = 0; t < 3; ++t)
                acts.left_act.at(t, ih * 3 + ik) = h.counit[ih] * (t == ik ? 1 : 0);
            for (std::size_t t = 0; t < 2; ++t)
                acts.right_act.at(t, ih * 3 + ik) = k.counit[ik] * (t == ih ? 1 : 0);
        }
    CHECK(matched_pair_check(h, k, acts).ok);
    HopfData d = double_crossed_product(k, h, acts);
    CHECK(d.dim() == 6);
    CHECK(verify_hopf(d).ok);
    CHECK(commutative(d.alg));  // C3 × C2 group algebra

    // full structure equality with the tensor-product Hopf algebra on K⊗H
    FactorizationAlgebra tensor = factorization_algebra(k.alg, h.alg, flip_map(3, 2));
    CHECK(d.alg.mult == tensor.algebra.mult);
    CHECK(d.alg.unit == tensor.algebra.unit);
    for (std::size_t ik = 0; ik < 3; ++ik)
        for (std::size_t ih = 0; ih < 2; ++ih)
            for (std::size_t jk = 0; jk < 3; ++jk)
                for (std::size_t jh = 0; jh < 2; ++jh)
                    for (std::size_t lk = 0; lk < 3; ++lk)
                        for (std::size_t lh = 0; lh < 2; ++lh)
                            CHECK(d.c(ik * 2 + ih, jk * 2 + jh, lk * 2 + lh) ==
                                  k.c(ik, jk, lk) * h.c(ih, jh, lh));

    // break ▷: no longer a matched pair
    MatchedPairActions bad = acts;
    bad.left_act.at(0, 1 * 3 + 2) += 1;
    CHECK_FALSE(matched_pair_check(h, k, bad).ok);
}

TEST_CASE("Drinfeld double of kC2: 4-dimensional commutative Hopf algebra") {
    DrinfeldDouble d = drinfeld_double(kc2());
    CHECK(d.algebra.dim() == 4);
    CHECK(verify_hopf(d.algebra).ok);
    CHECK(commutative(d.algebra.alg));
}

TEST_CASE("Drinfeld double of abelian kC3 is commutative") {
    DrinfeldDouble d = drinfeld_double(group_algebra(named_group("C3")));
    CHECK(d.algebra.dim() == 9);
    CHECK(commutative(d.algebra.alg));
}

TEST_CASE("Drinfeld double of kS3") {
    DrinfeldDouble d = drinfeld_double(ks3());
    CHECK(d.algebra.dim() == 36);
    CHECK_FALSE(commutative(d.algebra.alg));

    // the two embeddings reproduce kG and (kG)^{*cop} multiplication (checked in
    // construction); their products span all of D(H)
    std::size_t n = 6;
    RatMatrix span(n * n, 36);
    std::size_t row = 0;
    for (std::size_t f = 0; f < n; ++f)
        for (std::size_t e = 0; e < n; ++e) {
            RatVec prod = d.algebra.alg.mul_vec(d.embed_k.apply(basis_vec(6, f)),
                                                d.embed_h.apply(basis_vec(6, e)));
            for (std::size_t t = 0; t < 36; ++t) span.at(row, t) = prod[t];
            ++row;
        }
    CHECK(rank(span) == 36);
}

TEST_CASE("Drinfeld double restricted along the embeddings acts by conjugation") {
    // for kG the double multiplies as (p_x ⋈ a)(p_y ⋈ b) = [x = a y a^{-1}] p_x ⋈ ab
    PermGroup g = named_group("S3");
    HopfData h = group_algebra(g);
    DrinfeldDouble d = drinfeld_double(h);
    std::size_t n = g.order();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t b = 0; b < n; ++b) {
                    RatVec prod = d.algebra.alg.basis_mul(x * n + a, y * n + b);
                    std::size_t conj = g.mul(g.mul(a, y), g.inv(a));
                    RatVec expect(n * n);
                    if (conj == x) expect[x * n + g.mul(a, b)] = 1;
                    CHECK(prod == expect);
                }
}

TEST_CASE("smash product rejects a non-measuring action") {
    HopfData h = kc2();
    AlgData a = group_algebra(named_group("C3")).alg;
    ModuleAlgebraAction act;
    act.dim_h = 2;
    act.dim_a = 3;
    act.matrix = RatMatrix(3, 6);
    for (std::size_t ih = 0; ih < 2; ++ih)
        for (std::size_t ia = 0; ia < 3; ++ia)
            for (std::size_t k = 0; k < 3; ++k)
                act.matrix.at(k, ih * 3 + ia) = h.counit[ih] * (k == ia ? 1 : 0);
    act.matrix.at(0, 1 * 3 + 2) += 1;  // break the measuring law
    CHECK_FALSE(check_measuring_action(h, a, act).ok);
    CHECK_THROWS(smash_product(a, h, act));
}

TEST_CASE("quotient module coalgebra rejects non-Hopf subalgebra data") {
    PermGroup s3 = named_group("S3");
    PermGroup c2(3, {Permutation::from_cycles(3, {{1, 2}})});
    HopfData hs3 = group_algebra(s3);
    HopfData bad_r = group_algebra(c2);
    bad_r.comult[(1 * 2 + 1) * 2 + 1] += 1;  // Δ_R no longer matches Δ_H on the image
    CHECK_THROWS(quotient_module_coalgebra(hs3, bad_r, group_algebra_embedding(c2, s3)));
}
