#include <catch2/catch_amalgamated.hpp>

#include "rootgeo/landmarks.hpp"

#include <random>

using namespace rootgeo;

static RecurrenceSpec eg_ii() { return RecurrenceSpec{rat(1), rat(1), rat(-1, 2)}; }
static RecurrenceSpec eg_iii() { return RecurrenceSpec{rat(1), rat(1), rat(1)}; }

TEST_CASE("case classification") {
    CHECK(classify_case(eg_ii()) == CaseTag::II);
    CHECK(classify_case(eg_iii()) == CaseTag::III);
    CHECK(classify_case(RecurrenceSpec{rat(1), rat(1), rat(-3, 4)}) == CaseTag::I);
    CHECK(classify_case(RecurrenceSpec{rat(1), rat(1), rat(-1)}) == CaseTag::I);
    CHECK_THROWS_AS(classify_case(RecurrenceSpec{rat(1), rat(1), rat(0)}), c_is_zero);
}

TEST_CASE("reference landmarks, case II example") {
    Landmarks lm = compute_landmarks(eg_ii());
    CHECK(lm.case_tag == CaseTag::II);
    CHECK(lm.x_Delta == rat(1, 4));
    CHECK(lm.x_B == rat(1, 2));
    REQUIRE(lm.n0.has_value());
    CHECK(*lm.n0 == rat(2));
    REQUIRE(lm.x_g.has_value());
    // x_g = 1 - sqrt(2)/2, and 0 < x_g < x_B
    QuadraticSurd expect = QuadraticSurd(rat(1)) - QuadraticSurd::sqrt_of(rat(1, 2));
    CHECK(lm.x_g->compare(expect) == 0);
    CHECK(lm.x_g->sign() > 0);
    CHECK(lm.x_g->compare(lm.x_B) < 0);
    CHECK(cmp(lm.x_Delta, lm.x_B) < 0);
    CHECK(lm.x_g->compare(lm.x_Delta) > 0);
}

TEST_CASE("reference landmarks, case III example") {
    Landmarks lm = compute_landmarks(eg_iii());
    CHECK(lm.case_tag == CaseTag::III);
    CHECK(lm.x_Delta == rat(-5, 4));
    CHECK(lm.x_B == rat(-1));
    REQUIRE(lm.n0.has_value());
    CHECK(*lm.n0 == rat(2, 7));
    REQUIRE(lm.x_g.has_value());
    QuadraticSurd expect = QuadraticSurd(rat(1)) - QuadraticSurd::sqrt_of(rat(2));
    CHECK(lm.x_g->compare(expect) == 0);
    // x_B < x_g < 0 and x_Delta < x_g
    CHECK(lm.x_g->sign() < 0);
    CHECK(lm.x_g->compare(lm.x_B) > 0);
    CHECK(lm.x_g->compare(lm.x_Delta) > 0);
}

TEST_CASE("x_Delta can be zero and n0 can be absent") {
    Landmarks lm = compute_landmarks(RecurrenceSpec{rat(2), rat(1), rat(-1)});
    CHECK(lm.x_Delta == rat(0));
    // denominator a^2+2ab+4c = 4+4-4 = 4 > 0 here, so n0 exists
    CHECK(lm.n0.has_value());
    // a=1, b=1, c=-3/4: denominator = 1+2-3 = 0 -> threshold at infinity
    Landmarks lb = compute_landmarks(RecurrenceSpec{rat(1), rat(1), rat(-3, 4)});
    CHECK_FALSE(lb.n0.has_value());
    // deep case I: (a+b)^2+4c < 0 leaves x_g absent
    Landmarks lc = compute_landmarks(RecurrenceSpec{rat(1), rat(1), rat(-2)});
    CHECK_FALSE(lc.x_g.has_value());
}

TEST_CASE("general form starred landmarks") {
    // a=b=1, c=2, t=1, r=-1: x* = -9/4, y* = -sqrt(2)
    Landmarks lm = compute_landmarks(RecurrenceSpec{rat(1), rat(1), rat(2), rat(1), rat(-1)});
    CHECK(lm.x_star == rat(-9, 4));
    CHECK(lm.r_star == rat(-9, 4) - rat(1, 2));
    CHECK(lm.y_star->compare(-QuadraticSurd::sqrt_of(rat(2))) == 0);
    // Fibonacci-like spec: x* = -1/4, r* = -3/4
    Landmarks lf = compute_landmarks(RecurrenceSpec{rat(1), rat(1), rat(0), rat(1), rat(-1)});
    CHECK(lf.x_star == rat(-1, 4));
    CHECK(lf.r_star == rat(-3, 4));
    // a=1, b=2/5, c=0, r=-1: x* = -5/8, y* = -3/5
    Landmarks lg = compute_landmarks(RecurrenceSpec{rat(1), rat(2, 5), rat(0), rat(1), rat(-1)});
    CHECK(lg.x_star == rat(-5, 8));
    CHECK(lg.y_star->compare(QuadraticSurd(rat(-3, 5))) == 0);
    // x* equals x_Delta mapped through the normalization for c != 0 specs
    RecurrenceSpec g{rat(3, 2), rat(5), rat(-1), rat(3), rat(1, 2)};
    Landmarks lh = compute_landmarks(g);
    auto [ng, mg] = normalize(g);
    CHECK(lh.x_star == mg.apply(lh.x_Delta));
}

TEST_CASE("closed-form values at the landmarks match the recurrence") {
    for (const RecurrenceSpec& s : {eg_ii(), eg_iii(), RecurrenceSpec{rat(1), rat(1), rat(-1)}}) {
        Landmarks lm = compute_landmarks(s);
        std::vector<Rational> atB = eval_sequence_at(s, lm.x_B, 100);
        std::vector<Rational> atD = eval_sequence_at(s, lm.x_Delta, 100);
        for (int n = 1; n <= 100; ++n) {
            CHECK(W_at_xB(s, n) == atB[static_cast<size_t>(n)]);
            CHECK(W_at_xDelta(s, n) == atD[static_cast<size_t>(n)]);
        }
        if (lm.x_g.has_value()) {
            std::vector<QuadraticSurd> atG = eval_sequence_at_surd(s, *lm.x_g, 30);
            for (int n = 1; n <= 30; ++n)
                CHECK(atG[static_cast<size_t>(n)].compare(W_at_xg(s, n)) == 0);
        }
    }
}

TEST_CASE("sign of W_n at x_Delta follows the n0 threshold") {
    // c=-1/2: n0 = 2; signs +, 0, then negative
    RecurrenceSpec s = eg_ii();
    CHECK(sign_at_xDelta(s, 1) == 1);
    CHECK(sign_at_xDelta(s, 2) == 0);
    CHECK(sign_at_xDelta(s, 3) == -1);
    // c=1: n0 = 2/7 < 1, all negative
    for (int n = 1; n <= 20; ++n) CHECK(sign_at_xDelta(eg_iii(), n) == -1);
    // case I: positive throughout
    RecurrenceSpec ci{rat(1), rat(1), rat(-1)};
    for (int n = 1; n <= 100; ++n) CHECK(sign_at_xDelta(ci, n) == 1);
    // random specs: sign(W_n(x_Delta)) == sign(n0 - n)
    std::mt19937 rng(3);
    std::uniform_int_distribution<long> d(1, 9), dc(-9, 9);
    int tested = 0;
    while (tested < 40) {
        Rational c = rat(dc(rng), d(rng));
        if (sgn(c) == 0) continue;
        RecurrenceSpec t{rat(d(rng), d(rng)), rat(d(rng), d(rng)), c};
        Landmarks lm = compute_landmarks(t);
        ++tested;
        std::vector<Rational> atD = eval_sequence_at(t, lm.x_Delta, 60);
        for (int n = 1; n <= 60; ++n) {
            int expect = lm.n0.has_value() ? cmp(*lm.n0, Rational(n)) : 1;
            CHECK(sgn(atD[static_cast<size_t>(n)]) == expect);
        }
    }
}

TEST_CASE("signs at x_B and x_g") {
    for (int n = 1; n <= 50; ++n) {
        CHECK(sign_at_xB(eg_ii(), n) == 1);   // x_B > 0 when c < 0
        CHECK(sign_at_xB(eg_iii(), n) == -1); // x_B < 0 when c > 0
        CHECK(sign_at_xg(eg_ii(), n) == 1);
        CHECK(sign_at_xg(eg_iii(), n) == (n % 2 == 0 ? 1 : -1));
    }
    CHECK_THROWS_AS(W_at_xg(RecurrenceSpec{rat(1), rat(1), rat(-2)}, 3), xg_not_real);
}

TEST_CASE("case ordering holds on random specs") {
    std::mt19937 rng(8);
    std::uniform_int_distribution<long> d(1, 20), dc(1, 20);
    int seen_ii = 0, seen_iii = 0;
    while (seen_ii < 200 || seen_iii < 200) {
        Rational a = rat(d(rng), d(rng)), b = rat(d(rng), d(rng));
        bool pos = rng() % 2 == 0;
        Rational c = pos ? rat(dc(rng), d(rng)) : -rat(dc(rng), d(rng));
        RecurrenceSpec s{a, b, c};
        CaseTag tag;
        try {
            tag = classify_case(s);
        } catch (const c_is_zero&) {
            continue;
        }
        if (tag == CaseTag::I) continue;
        Landmarks lm = compute_landmarks(s);
        REQUIRE(lm.x_g.has_value());
        if (tag == CaseTag::II && seen_ii < 200) {
            ++seen_ii;
            CHECK(lm.x_g->compare(lm.x_Delta) > 0);
            CHECK(lm.x_g->compare(lm.x_B) < 0);
            CHECK(lm.x_g->sign() > 0);
        } else if (tag == CaseTag::III && seen_iii < 200) {
            ++seen_iii;
            CHECK(lm.x_g->compare(lm.x_Delta) > 0);
            CHECK(lm.x_g->compare(lm.x_B) > 0);
            CHECK(lm.x_g->sign() < 0);
        }
    }
}
