#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "depth/pipelines.hpp"

using namespace depth;

TEST_CASE("young branching matrices") {
    IntMatrix m1 = young_branching_matrix(1);
    CHECK(m1 == IntMatrix::from_rows({{1, 1}}));

    IntMatrix m2 = young_branching_matrix(2);
    CHECK(m2.rows() == 2);
    CHECK(m2.cols() == 3);
    // every partition of 3 is reached, every partition of 2 has two addable corners
    for (std::size_t i = 0; i < 2; ++i) {
        BigInt row_sum = 0;
        for (std::size_t j = 0; j < 3; ++j) row_sum += m2.at(i, j);
        CHECK(row_sum == 2);
    }
    CHECK(partitions_of(8).size() == 22);
    CHECK(partitions_of(9).size() == 30);
}

TEST_CASE("sym pair scenarios: derived depth values and the C1 audit") {
    DepthReport r2 = scenario_sym_pair(2);
    REQUIRE(r2.quad.has_value());
    CHECK(r2.quad->d_odd == 3);
    CHECK(r2.quad->d_ev == 4);
    CHECK(r2.quad->d_min == 3);
    CHECK(r2.quad->d_h == 5);
    REQUIRE(r2.claims.size() >= 1);
    CHECK(r2.claims[0].id == "C1");
    CHECK_FALSE(r2.claims[0].pass);  // computed 3 vs paper 5

    for (std::size_t n = 1; n <= 6; ++n) {
        DepthReport r = scenario_sym_pair(n);
        CHECK(r.quad->d_min == 2 * static_cast<long>(n) - 1);
        CHECK(r.quad->d_ev == 2 * static_cast<long>(n));
        CHECK(r.quad->d_h == 2 * static_cast<long>(n) + 1);
    }
}

TEST_CASE("group pair scenario: C2 <= S3") {
    auto battery = default_pair_battery();
    DepthReport r = scenario_group_pair(battery[0].g, battery[0].h, battery[0].label);
    REQUIRE(r.quad.has_value());
    CHECK(r.quad->d_odd == 3);
    CHECK(r.quad->d_ev == 4);
    CHECK(r.quad->d_min == 3);
    CHECK(r.quad->d_h == 5);
    CHECK(r.info.at("is_normal") == "false");
    CHECK(r.all_checks_pass());
    for (const auto& c : r.claims) CHECK(c.pass == (c.id != "C1"));  // C2, C3, C4 all pass
}

TEST_CASE("group pair battery: normality audit and Prop 2.3 hold everywhere") {
    for (const auto& pair : default_pair_battery()) {
        DepthReport r = scenario_group_pair(pair.g, pair.h, pair.label);
        CHECK(r.all_checks_pass());
        for (const auto& c : r.claims) {
            INFO(pair.label << " " << c.id);
            CHECK(c.pass);
        }
        bool normal = r.info.at("is_normal") == "true";
        CHECK(normal == (r.quad->d_min <= 2));
    }
}

TEST_CASE("bimodule matrix of kG over itself is the identity") {
    PermGroup s3 = named_group("S3");
    CharacterTable t = CharacterTable::dixon(s3);
    HopfData kg = group_algebra(s3);
    IntMatrix m = bimodule_mult_matrix(kg.alg, t, group_algebra_embedding(s3, s3));
    CHECK(m == IntMatrix::identity(3));
}

TEST_CASE("heisenberg scenarios") {
    DepthReport rc2 = scenario_heisenberg(named_group("C2"), "C2");
    REQUIRE(rc2.quad.has_value());
    CHECK(rc2.quad->d_odd == 3);
    CHECK(rc2.quad->d_ev == 2);
    CHECK(rc2.quad->d_min == 2);
    CHECK(rc2.quad->d_h == 1);
    CHECK(rc2.all_checks_pass());
    for (const auto& c : rc2.claims)
        if (c.id == "C5") CHECK_FALSE(c.pass);  // computed 2 vs paper 3

    DepthReport rs3 = scenario_heisenberg(named_group("S3"), "S3");
    CHECK(rs3.quad->d_min == 2);
    CHECK(rs3.quad->d_h == 1);
    CHECK(rs3.all_checks_pass());
    // chain claim must hold
    for (const auto& c : rs3.claims)
        if (c.id == "C4") CHECK(c.pass);
}

TEST_CASE("drinfeld induction matrices") {
    DrinfeldInductionData dc2 = drinfeld_induction_matrix(named_group("C2"));
    CHECK(dc2.m.rows() == 4);
    CHECK(dc2.m.cols() == 2);
    for (std::size_t j = 0; j < 2; ++j) {
        BigInt col = 0;
        for (std::size_t i = 0; i < 4; ++i) col += dc2.m.at(i, j);
        CHECK(col == 2);  // each column contains two 1s
    }

    DrinfeldInductionData ds3 = drinfeld_induction_matrix(named_group("S3"));
    CHECK(ds3.m.rows() == 8);
    CHECK(ds3.m.cols() == 3);
    // rows as a multiset match the hand-computed centralizer inductions
    std::multiset<std::vector<long>> got, expect{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 1},
                                                 {0, 1, 1}, {1, 1, 0}, {0, 0, 1}, {0, 0, 1}};
    for (std::size_t i = 0; i < 8; ++i)
        got.insert({ds3.m.at(i, 0).get_si(), ds3.m.at(i, 1).get_si(), ds3.m.at(i, 2).get_si()});
    CHECK(got == expect);
    // row count = Σ_c |Irr(C_G(g_c))|
    CHECK(ds3.row_labels.size() == 8);
}

TEST_CASE("drinfeld scenarios") {
    DepthReport rs3 = scenario_drinfeld(named_group("S3"), "S3");
    REQUIRE(rs3.quad.has_value());
    CHECK(rs3.quad->d_odd == 3);
    CHECK(rs3.quad->d_ev == 4);
    CHECK(rs3.quad->d_min == 3);
    CHECK(rs3.quad->d_h == 5);
    CHECK(rs3.all_checks_pass());
    for (const auto& c : rs3.claims)
        if (c.id == "C7") CHECK(c.pass);  // 3 <= 3

    DepthReport rc2 = scenario_drinfeld(named_group("C2"), "C2");
    CHECK(rc2.quad->d_min == 1);
    CHECK(rc2.all_checks_pass());
    for (const auto& c : rc2.claims)
        if (c.id == "C7") CHECK_FALSE(c.pass);  // 3 <= 1 fails

    DepthReport rc3 = scenario_drinfeld(named_group("C3"), "C3");
    CHECK(rc3.quad->d_min == 1);
    CHECK(rc3.all_checks_pass());
}

TEST_CASE("generalized smash scenario: Thm 4.13 audit instance") {
    PermGroup s3 = named_group("S3");
    PermGroup c2(3, {Permutation::from_cycles(3, {{1, 2}})});
    DepthReport r = scenario_gen_smash(s3, c2, "C2<=S3");
    CHECK(r.info.at("dim") == "18");
    REQUIRE(r.d_odd.has_value());
    CHECK(*r.d_odd == 5);
    for (const auto& c : r.claims)
        if (c.id == "C6") CHECK(c.pass);
    // the rational Wedderburn split exists here, so the full quad is available
    REQUIRE(r.quad.has_value());
    CHECK(r.quad->d_odd == 5);
    CHECK(r.quad->d_ev == 4);
    CHECK(r.quad->d_min == 4);
    CHECK(r.quad->d_h == 3);
    CHECK(r.all_checks_pass());
}

TEST_CASE("split semisimple decompositions") {
    // kS3 = Q ⊕ Q ⊕ M2(Q)
    HopfData kg = group_algebra(named_group("S3"));
    auto ss = split_semisimple(kg.alg);
    REQUIRE(ss.has_value());
    std::multiset<std::size_t> degs(ss->degrees.begin(), ss->degrees.end());
    CHECK(degs == std::multiset<std::size_t>{1, 1, 2});

    // kC3 does not split over the rationals (needs cube roots of unity)
    HopfData kc3 = group_algebra(named_group("C3"));
    CHECK_FALSE(split_semisimple(kc3.alg).has_value());

    // the Heisenberg double of kC2 is M2(Q)
    auto hss = split_semisimple(heisenberg_double(group_algebra(named_group("C2"))).algebra);
    REQUIRE(hss.has_value());
    CHECK(hss->degrees == std::vector<std::size_t>{2});
}

TEST_CASE("composition law: T(X ⊗_B X) = T(X)² on the Heisenberg double of kC2") {
    PermGroup c2 = named_group("C2");
    CharacterTable tc2 = CharacterTable::dixon(c2);
    HopfData kc2 = group_algebra(c2);
    FactorizationAlgebra x = heisenberg_double(kc2);

    // kC2 sits inside X as the A factor
    IntMatrix t = bimodule_mult_matrix(x.algebra, tc2, x.embed_a);
    IntMatrix t2 = mat_mul(t, t);

    RelTensorSpace sq = relative_tensor_power(x.algebra, x.embed_a, kc2.alg, 2);
    std::vector<RatMatrix> left, right;
    for (std::size_t e = 0; e < 2; ++e) {
        RatVec img = x.embed_a.apply(RatVec{BigRat(e == 0 ? 1 : 0), BigRat(e == 1 ? 1 : 0)});
        left.push_back(rel_left_action(x.algebra, sq, img));
        right.push_back(rel_right_action(x.algebra, sq, img));
    }
    IntMatrix t_square = bimodule_mult_matrix_ops(tc2, left, right);
    CHECK(t_square == t2);
}

TEST_CASE("default audit battery verdict pattern") {
    auto reports = claims_audit_default();
    std::size_t c1_fail = 0, c3_pass = 0, c7_pass = 0, c7_fail = 0, c8_pass = 0;
    bool c5_all_fail = true, c6_pass = false;
    for (const auto& r : reports) {
        CHECK(r.all_checks_pass());
        for (const auto& c : r.claims) {
            if (c.id == "C1" && !c.pass) ++c1_fail;
            if (c.id == "C2") CHECK(c.pass);
            if (c.id == "C3") {
                CHECK(c.pass);
                ++c3_pass;
            }
            if (c.id == "C4") CHECK(c.pass);
            if (c.id == "C5") c5_all_fail = c5_all_fail && !c.pass;
            if (c.id == "C6" && c.pass) c6_pass = true;
            if (c.id == "C7") (c.pass ? ++c7_pass : ++c7_fail);
            if (c.id == "C8") {
                CHECK(c.pass);
                ++c8_pass;
            }
        }
    }
    CHECK(c1_fail == 8);   // every n = 1..8 disagrees with 2n+1
    CHECK(c3_pass == 6);   // all battery pairs satisfy Prop 2.3
    CHECK(c5_all_fail);    // Heisenberg depth comes out 2, not 3
    CHECK(c6_pass);
    CHECK(c7_pass == 1);   // S3
    CHECK(c7_fail == 2);   // C2, C3
    CHECK(c8_pass == 1);
}

TEST_CASE("generalized smash falls back to d_odd when the center does not split") {
    // Q^{*op} # kS3 for A3 <| S3 is 12-dimensional with center Q × Q(ω): the
    // rational Wedderburn split is unavailable and only the trace route runs
    PermGroup s3 = named_group("S3");
    PermGroup a3(3, {Permutation::from_cycles(3, {{1, 2, 3}})});
    DepthReport r = scenario_gen_smash(s3, a3, "A3<|S3");
    CHECK(r.info.at("dim") == "12");
    CHECK_FALSE(r.quad.has_value());
    CHECK(r.info.at("d_ev") == "not computed");
    REQUIRE(r.d_odd.has_value());
    CHECK(*r.d_odd == 3);  // = d_h(kA3, kS3), the dual-route identity
    for (const auto& c : r.claims)
        if (c.id == "C6") CHECK(c.pass);
}

TEST_CASE("every subgroup class of S4: normality, Prop 2.3, and the chain hold") {
    PermGroup s4 = named_group("S4");
    auto P = [](const std::vector<std::vector<int>>& cycles) {
        return Permutation::from_cycles(4, cycles);
    };
    std::vector<std::pair<std::string, std::vector<Permutation>>> subs{
        {"1", {}},
        {"C2a", {P({{1, 2}})}},
        {"C2b", {P({{1, 2}, {3, 4}})}},
        {"C3", {P({{1, 2, 3}})}},
        {"C4", {P({{1, 2, 3, 4}})}},
        {"C2xC2", {P({{1, 2}}), P({{3, 4}})}},
        {"V4", {P({{1, 2}, {3, 4}}), P({{1, 3}, {2, 4}})}},
        {"S3", {P({{1, 2}}), P({{1, 2, 3}})}},
        {"D4", {P({{1, 2, 3, 4}}), P({{1, 3}})}},
        {"A4", {P({{1, 2, 3}}), P({{1, 2}, {3, 4}})}},
        {"S4", {P({{1, 2}}), P({{1, 2, 3, 4}})}},
    };
    for (const auto& [name, gens] : subs) {
        PermGroup h(4, gens);
        DepthReport r = scenario_group_pair(s4, h, std::string("S4/") + name);
        INFO(name);
        CHECK(r.all_checks_pass());
        for (const auto& c : r.claims) CHECK(c.pass);
        // orders recap: Lagrange via scenario construction
        CHECK(24 % h.order() == 0);
    }
}

TEST_CASE("drinfeld doubles of the order-8 groups: hardening at dimension 64") {
    for (const char* name : {"D4", "Q8"}) {
        DepthReport r = scenario_drinfeld(named_group(name), name);
        INFO(name);
        REQUIRE(r.quad.has_value());
        CHECK(r.quad->d_min == 3);  // Prop 6.11 bound attained
        CHECK(r.quad->d_h == 5);
        CHECK(r.all_checks_pass());
        for (const auto& c : r.claims) CHECK(c.pass);
    }
}
