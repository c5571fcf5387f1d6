#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "depth/green.hpp"

using namespace depth;

namespace {

PermGroup c2_in_s3() { return PermGroup(3, {Permutation::from_cycles(3, {{1, 2}})}); }
PermGroup a3_in_s3() { return PermGroup(3, {Permutation::from_cycles(3, {{1, 2, 3}})}); }

}  // namespace

TEST_CASE("module depth: trivial, Q of C2<=S3, regular") {
    CharacterTable s3 = CharacterTable::dixon(named_group("S3"));

    ModuleDepthResult triv = module_depth(s3, s3.trivial_character());
    CHECK(triv.depth == 0);
    CHECK(triv.stabilization == 1);

    ClassFunction q = quotient_module_character(s3, c2_in_s3());
    ModuleDepthResult mq = module_depth(s3, q);
    CHECK(mq.depth == 2);
    REQUIRE(mq.chain.size() >= 2);
    CHECK(mq.chain[0] == std::set<std::size_t>{0, 2});
    CHECK(mq.chain[1] == std::set<std::size_t>{0, 1, 2});

    ModuleDepthResult mr = module_depth(s3, s3.regular_character());
    CHECK(mr.depth == 1);
}

TEST_CASE("module depth rejects non-characters and zero") {
    CharacterTable s3 = CharacterTable::dixon(named_group("S3"));
    // -1 times the trivial character is not a character
    ClassFunction bad = s3.class_function_from_integers({BigInt(-1), BigInt(-1), BigInt(-1)});
    CHECK_THROWS(module_depth(s3, bad));
    ClassFunction zero = s3.class_function_from_integers({BigInt(0), BigInt(0), BigInt(0)});
    CHECK_THROWS(module_depth(s3, zero));
}

TEST_CASE("module depth is a character-level invariant") {
    CharacterTable s3 = CharacterTable::dixon(named_group("S3"));
    // trivial + standard assembled by hand equals the Q-character of C2<=S3
    ClassFunction sum;
    sum.exponent = s3.exponent();
    const Cyclotomy& cy = s3.cyclotomy();
    sum.values.resize(3);
    for (std::size_t c = 0; c < 3; ++c)
        sum.values[c] = cy.rat_add(s3.to_class_function(0).values[c], s3.to_class_function(2).values[c]);
    ModuleDepthResult a = module_depth(s3, sum);
    ModuleDepthResult b = module_depth(s3, quotient_module_character(s3, c2_in_s3()));
    CHECK(a.depth == b.depth);
    CHECK(a.chain == b.chain);
}

TEST_CASE("quotient module characters") {
    CharacterTable s3 = CharacterTable::dixon(named_group("S3"));
    auto val = [&](const ClassFunction& f, const Permutation& p) {
        return *s3.cyclotomy().as_rational(f.values[s3.class_of(p)]);
    };

    ClassFunction q1 = quotient_module_character(s3, c2_in_s3());
    CHECK(val(q1, Permutation(3)) == BigRat(3));
    CHECK(val(q1, Permutation::from_cycles(3, {{1, 2}})) == BigRat(1));
    CHECK(val(q1, Permutation::from_cycles(3, {{1, 2, 3}})) == BigRat(0));

    ClassFunction q2 = quotient_module_character(s3, named_group("S3"));
    CHECK(val(q2, Permutation(3)) == BigRat(1));

    ClassFunction q3 = quotient_module_character(s3, a3_in_s3());
    CHECK(val(q3, Permutation(3)) == BigRat(2));
    CHECK(val(q3, Permutation::from_cycles(3, {{1, 2}})) == BigRat(0));
    CHECK(val(q3, Permutation::from_cycles(3, {{1, 2, 3}})) == BigRat(2));
}

TEST_CASE("h-depth via Q agrees with the matrix route") {
    CharacterTable s3 = CharacterTable::dixon(named_group("S3"));

    HDepthViaQ a = h_depth_via_q(CharacterTable::dixon(c2_in_s3()), s3);
    CHECK(a.via_module_depth == 5);
    CHECK(a.via_matrix == 5);
    CHECK(a.agree);

    HDepthViaQ b = h_depth_via_q(CharacterTable::dixon(a3_in_s3()), s3);
    CHECK(b.via_module_depth == 3);
    CHECK(b.via_matrix == 3);
    CHECK(b.agree);

    HDepthViaQ c = h_depth_via_q(s3, s3);
    CHECK(c.via_module_depth == 1);
    CHECK(c.via_matrix == 1);
    CHECK(c.agree);
}

TEST_CASE("module coalgebra bound check") {
    CharacterTable s3 = CharacterTable::dixon(named_group("S3"));

    ModuleCoalgebraBound b1 = module_coalgebra_bound_check(s3, quotient_module_character(s3, c2_in_s3()));
    CHECK(b1.pure_power_stabilization == 2);
    CHECK(b1.depth == 2);
    CHECK(b1.bound_holds);

    ModuleCoalgebraBound b2 = module_coalgebra_bound_check(s3, s3.trivial_character());
    CHECK(b2.pure_power_stabilization == 1);
    CHECK(b2.depth == 0);
    CHECK(b2.bound_holds);

    ModuleCoalgebraBound b3 = module_coalgebra_bound_check(s3, quotient_module_character(s3, a3_in_s3()));
    CHECK(b3.pure_power_stabilization == 1);
    CHECK(b3.depth == 1);
    CHECK(b3.bound_holds);

    // the sign character's power supports oscillate: rejected as non-module-coalgebra input
    CHECK_THROWS(module_coalgebra_bound_check(s3, s3.to_class_function(1)));
}

TEST_CASE("faithful characters reach full support (Burnside-Brauer)") {
    CharacterTable s3 = CharacterTable::dixon(named_group("S3"));
    ModuleDepthResult m = module_depth(s3, quotient_module_character(s3, c2_in_s3()));
    std::set<std::size_t> full;
    for (std::size_t i = 0; i < s3.irr_count(); ++i) full.insert(i);
    CHECK(m.chain.back() == full);

    CharacterTable s4 = CharacterTable::dixon(named_group("S4"));
    PermGroup s3in4(4, {Permutation::from_cycles(4, {{1, 2}}), Permutation::from_cycles(4, {{1, 2, 3}})});
    ModuleDepthResult m4 = module_depth(s4, quotient_module_character(s4, s3in4));
    std::set<std::size_t> full4;
    for (std::size_t i = 0; i < s4.irr_count(); ++i) full4.insert(i);
    CHECK(m4.chain.back() == full4);
    CHECK(m4.depth == 3);  // hand value: supports grow {triv,std} -> +{(22),std'} -> all
}

TEST_CASE("stabilization never exceeds the irreducible count") {
    for (const char* name : {"S3", "S4", "A4", "D4", "Q8"}) {
        CharacterTable t = CharacterTable::dixon(named_group(name));
        ModuleDepthResult m = module_depth(t, t.regular_character());
        CHECK(m.depth == 1);
        ModuleDepthResult w = module_depth(t, t.trivial_character());
        CHECK(w.stabilization <= static_cast<long>(t.irr_count()));
    }
}
