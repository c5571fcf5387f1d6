#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "depth/perm.hpp"

using namespace depth;

TEST_CASE("enumerate: S3, trivial, C5") {
    PermGroup s3(3, {Permutation::from_cycles(3, {{1, 2}}), Permutation::from_cycles(3, {{1, 2, 3}})});
    CHECK(s3.order() == 6);

    PermGroup triv(1, {});
    CHECK(triv.order() == 1);

    PermGroup c5(5, {Permutation::from_cycles(5, {{1, 2, 3, 4, 5}})});
    CHECK(c5.order() == 5);

    CHECK_THROWS(PermGroup(5, {Permutation::from_cycles(5, {{1, 2, 3, 4, 5}})}, 3));
}

TEST_CASE("cycle parsing round trip") {
    Permutation p = Permutation::from_cycles(5, {{1, 2}, {3, 4, 5}});
    CHECK(cycle_string(p) == "(1 2)(3 4 5)");
    CHECK(p.order() == 6);
    CHECK(p.compose(p.inverse()).is_identity());
    CHECK_THROWS(Permutation::from_cycles(3, {{1, 2}, {2, 3}}));
    CHECK_THROWS(Permutation::from_cycles(2, {{1, 5}}));
}

TEST_CASE("conjugacy classes of S3, trivial group, C4") {
    PermGroup s3 = named_group("S3");
    const auto& cc = s3.conjugacy_classes();
    REQUIRE(cc.count() == 3);
    // sorted by size then representative: {e}, {3-cycles}, {transpositions}
    CHECK(cc.class_sizes == std::vector<std::size_t>{1, 2, 3});
    CHECK(s3.elements()[cc.rep_index[0]].is_identity());

    PermGroup triv(1, {});
    CHECK(triv.conjugacy_classes().count() == 1);

    PermGroup c4 = named_group("C4");
    CHECK(c4.conjugacy_classes().count() == 4);
    for (auto s : c4.conjugacy_classes().class_sizes) CHECK(s == 1);
}

TEST_CASE("class equation and orbit-stabilizer on several groups") {
    for (const char* name : {"S3", "S4", "A4", "D4", "Q8", "C6"}) {
        PermGroup g = named_group(name);
        const auto& cc = g.conjugacy_classes();
        std::size_t total = 0;
        for (std::size_t c = 0; c < cc.count(); ++c) {
            total += cc.class_sizes[c];
            // |class| * |centralizer| = |G|
            CHECK(cc.class_sizes[c] * cc.centralizer_elements[c].size() == g.order());
        }
        CHECK(total == g.order());
    }
}

TEST_CASE("is_normal") {
    PermGroup s3 = named_group("S3");
    PermGroup a3(3, {Permutation::from_cycles(3, {{1, 2, 3}})});
    CHECK(is_normal(a3, s3));

    PermGroup c2(3, {Permutation::from_cycles(3, {{1, 2}})});
    CHECK_FALSE(is_normal(c2, s3));

    CHECK(is_normal(s3, s3));

    PermGroup c4 = named_group("C4");
    CHECK_THROWS(is_normal(c4, s3));

    // cross-check: H normal iff H is a union of G-conjugacy classes
    for (auto h : {&a3, &c2}) {
        const auto& cc = s3.conjugacy_classes();
        bool union_of_classes = true;
        for (std::size_t c = 0; c < cc.count(); ++c) {
            bool any = false, all = true;
            for (auto ei : cc.class_elements[c]) {
                bool in = h->contains(s3.elements()[ei]);
                any = any || in;
                all = all && in;
            }
            if (any && !all) union_of_classes = false;
        }
        CHECK(union_of_classes == is_normal(*h, s3));
    }
}

TEST_CASE("left cosets") {
    PermGroup s3 = named_group("S3");
    PermGroup c2(3, {Permutation::from_cycles(3, {{1, 2}})});
    auto d = left_cosets(c2, s3);
    CHECK(d.count() == 3);

    CHECK(left_cosets(s3, s3).count() == 1);

    PermGroup c4 = named_group("C4");
    PermGroup triv4(4, {});
    CHECK(left_cosets(triv4, c4).count() == 4);

    // cosets partition G
    std::vector<std::size_t> sizes(d.count(), 0);
    for (auto c : d.coset_of_element) sizes[c]++;
    for (auto s : sizes) CHECK(s == c2.order());
}

TEST_CASE("centralizer") {
    PermGroup s3 = named_group("S3");
    PermGroup z1 = centralizer(s3, Permutation::from_cycles(3, {{1, 2}}));
    CHECK(z1.order() == 2);
    PermGroup z2 = centralizer(s3, Permutation(3));
    CHECK(z2.order() == 6);
    PermGroup z3 = centralizer(s3, Permutation::from_cycles(3, {{1, 2, 3}}));
    CHECK(z3.order() == 3);
    CHECK_THROWS(centralizer(s3, Permutation::from_cycles(4, {{1, 2}})));
}

TEST_CASE("named groups have the expected orders") {
    CHECK(named_group("S4").order() == 24);
    CHECK(named_group("S5").order() == 120);
    CHECK(named_group("S6").order() == 720);
    CHECK(named_group("A4").order() == 12);
    CHECK(named_group("A5").order() == 60);
    CHECK(named_group("C12").order() == 12);
    CHECK(named_group("D4").order() == 8);
    CHECK(named_group("D8").order() == 16);
    CHECK(named_group("Q8").order() == 8);
    CHECK(named_group("sym(2)").order() == 2);
    CHECK(named_group("alt(3)").order() == 3);
    CHECK(named_group("alt(6)").order() == 360);
    CHECK_THROWS(named_group("E8"));
}

TEST_CASE("Q8 has the quaternion class structure") {
    PermGroup q8 = named_group("Q8");
    const auto& cc = q8.conjugacy_classes();
    REQUIRE(cc.count() == 5);
    CHECK(cc.class_sizes == std::vector<std::size_t>{1, 1, 2, 2, 2});
    CHECK(q8.exponent() == 4);
}

TEST_CASE("lagrange divisibility on subgroup battery") {
    PermGroup s4 = named_group("S4");
    PermGroup s3in4(4, {Permutation::from_cycles(4, {{1, 2}}), Permutation::from_cycles(4, {{1, 2, 3}})});
    CHECK(is_subgroup(s3in4, s4));
    CHECK(s4.order() % s3in4.order() == 0);
    CHECK_FALSE(is_normal(s3in4, s4));

    PermGroup a4 = named_group("A4");
    PermGroup v4(4, {Permutation::from_cycles(4, {{1, 2}, {3, 4}}), Permutation::from_cycles(4, {{1, 3}, {2, 4}})});
    CHECK(v4.order() == 4);
    CHECK(is_normal(v4, a4));
}
