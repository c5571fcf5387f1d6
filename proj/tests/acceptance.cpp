// Acceptance suite: one pass/fail line per criterion, exact assertions only.
#include <chrono>
#include <iostream>
#include <sstream>
#include <vector>

#include "depth/json_io.hpp"
#include "depth/tensor_lab.hpp"

using namespace depth;

namespace {

int failures = 0;

void report(const std::string& name, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << name;
    if (!detail.empty()) std::cout << " — " << detail;
    std::cout << std::endl;
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string quad_str(const DepthQuad& q) {
    std::ostringstream s;
    s << "(" << q.d_odd << "," << q.d_ev << "," << q.d_min << "," << q.d_h << ")";
    return s.str();
}

const ClaimVerdict* find_claim(const DepthReport& r, const std::string& id) {
    for (const auto& c : r.claims)
        if (c.id == id) return &c;
    return nullptr;
}

}  // namespace

int main() {
    std::cout << "== acceptance criteria ==" << std::endl;

    // 1. matrix-engine battery, < 1 s
    {
        auto t0 = std::chrono::steady_clock::now();
        DepthQuad a = depth_quad(IntMatrix::from_rows({{1, 0, 1}, {0, 1, 1}}));
        bool ok1 = a.d_odd == 3 && a.d_ev == 4 && a.d_min == 3 && a.d_h == 5;
        auto battery = default_pair_battery();
        DepthReport a3 = scenario_group_pair(battery[1].g, battery[1].h, battery[1].label);
        bool ok2 = a3.quad->d_min == 2 && a3.info.at("is_normal") == "true";
        DepthQuad c4 = depth_quad(IntMatrix::from_rows({{1, 0, 1, 0}, {0, 1, 0, 1}}));
        bool ok3 = c4.d_min == 1;
        double dt = seconds_since(t0);
        report("criterion 1: matrix battery (C2<=S3)=(3,4,3,5), A3<|S3 d_min=2+normal, C2<=C4 d_min=1",
               ok1 && ok2 && ok3 && dt < 1.0,
               "got " + quad_str(a) + ", runtime " + std::to_string(dt) + "s");
    }

    // 2. symmetric-group series and the C1 audit; performance at n = 25
    {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        for (std::size_t n = 1; n <= 8 && ok; ++n) {
            DepthReport r = scenario_sym_pair(n);
            if (r.quad->d_min != 2 * static_cast<long>(n) - 1) ok = false;
            const ClaimVerdict* c1 = find_claim(r, "C1");
            if (n >= 2 && (!c1 || c1->pass)) ok = false;  // FAIL must be recorded with both values
            if (c1 && (c1->lhs != std::to_string(2 * n - 1) || c1->rhs != std::to_string(2 * n + 1)))
                ok = false;
        }
        double dt8 = seconds_since(t0);
        report("criterion 2a: depth sym n=1..8 gives d_min=2n-1 and C1 records FAIL (<10s)",
               ok && dt8 < 10.0, "runtime " + std::to_string(dt8) + "s");

        auto t1 = std::chrono::steady_clock::now();
        DepthReport r25 = scenario_sym_pair(25);
        double dt25 = seconds_since(t1);
        report("criterion 2b: depth sym 25 completes with exact big integers (<60s)",
               r25.quad->d_min == 49 && dt25 < 60.0,
               "d_min=" + std::to_string(r25.quad->d_min) + ", q=" + r25.quad->q.get_str() +
                   ", runtime " + std::to_string(dt25) + "s");
    }

    // 3. Prop 2.3 cross-validation battery, exact equality (< 30 s)
    {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        std::string detail;
        for (const auto& pair : default_pair_battery()) {
            CharacterTable tg = CharacterTable::dixon(pair.g);
            CharacterTable th = CharacterTable::dixon(pair.h);
            HDepthViaQ hq = h_depth_via_q(th, tg);
            if (!hq.agree) {
                ok = false;
                detail += pair.label + " mismatch; ";
            }
        }
        double dt = seconds_since(t0);
        report("criterion 3: 2·d(Q)+1 = h_depth(M) on all six battery pairs (<30s)", ok && dt < 30.0,
               detail + "runtime " + std::to_string(dt) + "s");
    }

    // 4. normality ⟺ depth ≤ 2 across the battery
    {
        bool ok = true;
        for (const auto& pair : default_pair_battery()) {
            DepthReport r = scenario_group_pair(pair.g, pair.h, pair.label);
            const ClaimVerdict* c2 = find_claim(r, "C2");
            if (!c2 || !c2->pass) ok = false;
        }
        report("criterion 4: normality ⟺ depth ≤ 2 verdict PASS on every battery instance", ok);
    }

    // 5. finite-depth chain on every scenario the tool runs
    {
        bool ok = true;
        std::string detail;
        auto reports = claims_audit_default();
        for (const auto& r : reports) {
            const ClaimVerdict* c4 = find_claim(r, "C4");
            if (c4 && !c4->pass) {
                ok = false;
                detail += r.scenario + " chain broken; ";
            }
        }
        // the criterion names drinfeld(S3) and gensmash(C2<=S3) explicitly
        bool saw_drinfeld = false, saw_gensmash = false;
        for (const auto& r : reports) {
            if (r.scenario == "drinfeld(S3)" && find_claim(r, "C4")) saw_drinfeld = true;
            if (r.scenario == "gensmash(C2<=S3)" && find_claim(r, "C4")) saw_gensmash = true;
        }
        report("criterion 5: chain d_h-2 <= d_min <= d_h+1 holds on every scenario",
               ok && saw_drinfeld && saw_gensmash, detail);
    }

    // 6. Hopf kernel verification battery (< 60 s)
    {
        auto t0 = std::chrono::steady_clock::now();
        PermGroup s3 = named_group("S3");
        PermGroup c2in3(3, {Permutation::from_cycles(3, {{1, 2}})});
        HopfData ks3 = group_algebra(s3);
        bool ok = verify_hopf(ks3).ok;
        ok = ok && verify_hopf(dual_hopf(ks3)).ok;
        ok = ok && verify_hopf(cop_hopf(dual_hopf(ks3))).ok;
        FactorizationAlgebra heis = heisenberg_double(group_algebra(named_group("C2")));
        ok = ok && verify_algebra(heis.algebra).ok;
        QuotientModuleCoalgebra q =
            quotient_module_coalgebra(ks3, group_algebra(c2in3), group_algebra_embedding(c2in3, s3));
        FactorizationAlgebra gsm = generalized_smash(q, ks3);
        ok = ok && gsm.algebra.dim == 18 && verify_algebra(gsm.algebra).ok;
        DrinfeldDouble dc2 = drinfeld_double(group_algebra(named_group("C2")));
        ok = ok && dc2.algebra.dim() == 4 && verify_hopf(dc2.algebra).ok &&
             center_dimension(dc2.algebra.alg) == 4;
        DrinfeldDouble ds3 = drinfeld_double(ks3);
        ok = ok && ds3.algebra.dim() == 36 && verify_hopf(ds3.algebra).ok;
        // negative controls with witnesses
        HopfData bad = ks3;
        bad.alg.m(2, 3, 1) += 1;
        AxiomReport rb = verify_hopf(bad);
        ok = ok && !rb.ok && !rb.witness.empty();
        HopfData bad2 = ds3.algebra;
        bad2.comult[7] += 1;
        AxiomReport rb2 = verify_hopf(bad2);
        ok = ok && !rb2.ok;
        double dt = seconds_since(t0);
        report("criterion 6: verify() battery incl. D(kS3) plus corrupted-tensor controls (<60s)",
               ok && dt < 60.0, "runtime " + std::to_string(dt) + "s");
    }

    // 7. theta as computation for n ≤ 3
    {
        bool ok = true;
        AlgData a = group_algebra(named_group("C2")).alg;
        AlgData b3 = group_algebra(named_group("C3")).alg;
        FactorizationAlgebra flip = factorization_algebra(a, b3, flip_map(a.dim, b3.dim));
        HopfData hc2 = group_algebra(named_group("C2"));
        HopfData hdual = dual_hopf(hc2);
        FactorizationAlgebra heis = heisenberg_double(hc2);
        // the same smash assembled through the generic measuring-action path
        ModuleAlgebraAction act;
        act.dim_h = 2;
        act.dim_a = 2;
        act.matrix = RatMatrix(2, 4);
        for (std::size_t ia = 0; ia < 2; ++ia)
            for (std::size_t j = 0; j < 2; ++j)
                for (std::size_t k = 0; k < 2; ++k)
                    if (hc2.c(ia, j, k) != 0) act.matrix.at(j, k * 2 + ia) += hc2.c(ia, j, k);
        FactorizationAlgebra smash = smash_product(hc2.alg, hdual, act);
        for (std::size_t n = 1; n <= 3; ++n) {
            ThetaReport r1 = theta_check(a, b3, flip, n);
            ThetaReport r2 = theta_check(hc2.alg, hdual.alg, heis, n);
            ThetaReport r3 = theta_check(hc2.alg, hdual.alg, smash, n);
            ok = ok && r1.ok() && r2.ok() && r3.ok();
            ok = ok && r2.target_dim == (std::size_t{1} << n) * 2;
        }
        report("criterion 7: θ_n and θ_n⁻¹ exact mutual inverses, S_ψ-bilinear, dims (dimA)^n·dimB",
               ok);
    }

    // 8. depth iso bijectivity
    {
        PermGroup s3 = named_group("S3");
        PermGroup c2in3(3, {Permutation::from_cycles(3, {{1, 2}})});
        PermGroup a3in3(3, {Permutation::from_cycles(3, {{1, 2, 3}})});
        HopfData hs3 = group_algebra(s3);
        bool ok = true;
        for (std::size_t n = 1; n <= 2; ++n) {
            DepthIsoReport r1 =
                depth_iso_check(hs3, group_algebra(c2in3), group_algebra_embedding(c2in3, s3), n);
            DepthIsoReport r2 =
                depth_iso_check(hs3, group_algebra(a3in3), group_algebra_embedding(a3in3, s3), n);
            ok = ok && r1.ok() && r2.ok();
            if (n == 2) ok = ok && r1.lhs_dim == 54 && r2.lhs_dim == 24;
        }
        report("criterion 8: depth iso H^{⊗_R(n+1)} ≅ H⊗Q^{⊗n} bijective for both pairs, n ≤ 2", ok);
    }

    // 9. Thm 4.13 audit on C2 <= S3 (< 30 s)
    {
        auto t0 = std::chrono::steady_clock::now();
        PermGroup s3 = named_group("S3");
        PermGroup c2in3(3, {Permutation::from_cycles(3, {{1, 2}})});
        DepthReport r = scenario_gen_smash(s3, c2in3, "C2<=S3");
        const ClaimVerdict* c6 = find_claim(r, "C6");
        double dt = seconds_since(t0);
        bool ok = r.d_odd && *r.d_odd == 5 && c6 && c6->pass && c6->rhs == "5" && dt < 30.0;
        report("criterion 9: d_odd(kS3 ⊆ Q*op#kS3) = 5 = d_h(kC2,kS3), verdict PASS (<30s)", ok,
               "runtime " + std::to_string(dt) + "s");
    }

    // 10. Drinfel'd scenarios
    {
        DepthReport rs3 = scenario_drinfeld(named_group("S3"), "S3");
        bool quad_as_pinned = rs3.quad->d_odd == 5 && rs3.quad->d_ev == 4 && rs3.quad->d_min == 4 &&
                              rs3.quad->d_h == 3;
        report("criterion 10a: drinfeld(S3) outputs (d_odd,d_ev,d_min,d_h) = (5,4,4,3)",
               quad_as_pinned,
               "computed " + quad_str(*rs3.quad) +
                   ", cross-validated against the bimodule trace route. The pinned quadruple is "
                   "what the depth algorithms give on the 8x3 centralizer-pairs matrix directly "
                   "(rows = Irr(D(kG))), but the induction matrix of kG ⊆ D(kG) has rows Irr(kG), "
                   "i.e. the transpose; the same direct-8x3 reading would also force d_min = 2 for "
                   "drinfeld(C2), contradicting criterion 10b's d_min = 1. No orientation satisfies "
                   "both pinned value sets, so this line reports the computed extension depths");

        DepthReport rc2 = scenario_drinfeld(named_group("C2"), "C2");
        DepthReport rc3 = scenario_drinfeld(named_group("C3"), "C3");
        const ClaimVerdict* c7s3 = find_claim(rs3, "C7");
        const ClaimVerdict* c7c2 = find_claim(rc2, "C7");
        const ClaimVerdict* c7c3 = find_claim(rc3, "C7");
        bool ok_b = rc2.quad->d_min == 1 && rc3.quad->d_min == 1 && c7s3 && c7s3->pass && c7c2 &&
                    !c7c2->pass && c7c3 && !c7c3->pass;
        report("criterion 10b: drinfeld(C2), drinfeld(C3) d_min = 1; Prop 6.11 FAIL abelian, PASS S3",
               ok_b);

        bool ok_c = rs3.all_checks_pass() && rc2.all_checks_pass() && rc3.all_checks_pass();
        report("criterion 10c: T = M_Dᵀ·M_D consistency exact for C2, C3, S3", ok_c);
    }

    // 11. Heisenberg audit
    {
        DepthReport rc2 = scenario_heisenberg(named_group("C2"), "C2");
        const ClaimVerdict* c5 = find_claim(rc2, "C5");
        bool ok = rc2.quad->d_min == 2 && rc2.quad->d_h == 1 && c5 && !c5->pass && c5->lhs == "2";
        auto t0 = std::chrono::steady_clock::now();
        DepthReport rs3 = scenario_heisenberg(named_group("S3"), "S3");
        double dt = seconds_since(t0);
        const ClaimVerdict* chain = find_claim(rs3, "C4");
        ok = ok && dt < 10.0 && chain && chain->pass;
        report("criterion 11: heisenberg(C2) d_min=2, d_h=1, C5 records FAIL; heisenberg(S3) <10s",
               ok, "runtime " + std::to_string(dt) + "s");
    }

    // 12. alternating bound audit
    {
        PermGroup a5 = named_group("A5");
        PermGroup a4(5, {Permutation::from_cycles(5, {{1, 2, 3}}), Permutation::from_cycles(5, {{2, 3, 4}})});
        CharacterTable t5 = CharacterTable::dixon(a5);
        CharacterTable t4 = CharacterTable::dixon(a4);
        DepthQuad q = depth_quad(induction_matrix(t4, t5).m);
        report("criterion 12: d(CA4 ⊆ CA5) ≤ 2(4-⌈√4⌉)+1 = 5 from Dixon tables", q.d_min <= 5,
               "computed d_min = " + std::to_string(q.d_min));
    }

    // 13. exact property spot-suite (full property tests live in the unit suites)
    {
        bool ok = true;
        // support monotonicity + dominated_by ⟺ support inclusion on a concrete instance
        BratteliPowers b(IntMatrix::from_rows({{1, 0, 1}, {0, 1, 1}}));
        for (std::size_t n = 0; n < 3; ++n) ok = ok && b.s_support(n).subset_of(b.s_support(n + 1));
        IntMatrix x = IntMatrix::from_rows({{2, 0}, {1, 3}});
        IntMatrix y = IntMatrix::from_rows({{1, 0}, {1, 1}});
        ok = ok && dominated_by(x, y) && support(x).subset_of(support(y));
        // Frobenius reciprocity is asserted inside induction_matrix; exercise it
        CharacterTable ts4 = CharacterTable::dixon(named_group("S4"));
        PermGroup s3in4(4, {Permutation::from_cycles(4, {{1, 2}}), Permutation::from_cycles(4, {{1, 2, 3}})});
        CharacterTable ts3 = CharacterTable::dixon(s3in4);
        InductionMatrix m = induction_matrix(ts3, ts4);
        ok = ok && m.m.rows() == 3 && m.m.cols() == 5;
        // orthogonality of every computed table is verified at construction; build one more
        ok = ok && CharacterTable::dixon(named_group("D5")).irr_count() == 4;
        // composition law on the small instance
        {
            PermGroup c2 = named_group("C2");
            CharacterTable tc2 = CharacterTable::dixon(c2);
            HopfData kc2 = group_algebra(c2);
            FactorizationAlgebra xh = heisenberg_double(kc2);
            IntMatrix t = bimodule_mult_matrix(xh.algebra, tc2, xh.embed_a);
            RelTensorSpace sq = relative_tensor_power(xh.algebra, xh.embed_a, kc2.alg, 2);
            std::vector<RatMatrix> left, right;
            for (std::size_t e = 0; e < 2; ++e) {
                RatVec img = xh.embed_a.apply(RatVec{BigRat(e == 0 ? 1 : 0), BigRat(e == 1 ? 1 : 0)});
                left.push_back(rel_left_action(xh.algebra, sq, img));
                right.push_back(rel_right_action(xh.algebra, sq, img));
            }
            ok = ok && bimodule_mult_matrix_ops(tc2, left, right) == mat_mul(t, t);
        }
        report("criterion 13: exact property suite (no tolerances anywhere)", ok);
    }

    std::cout << "== " << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " criterion line(s) FAILED")
              << " ==" << std::endl;
    return failures == 0 ? 0 : 1;
}
