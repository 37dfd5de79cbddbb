#include <catch2/catch_amalgamated.hpp>

#include "rootgeo/rational.hpp"
#include "rootgeo/surd.hpp"

#include <random>

using namespace rootgeo;

TEST_CASE("rational parsing accepts p and p/q only") {
    CHECK(parse_rational("3") == rat(3));
    CHECK(parse_rational("-3") == rat(-3));
    CHECK(parse_rational("6/4") == rat(3, 2));
    CHECK(parse_rational("-1/2") == rat(-1, 2));
    CHECK_THROWS_AS(parse_rational("0.5"), parse_error);
    CHECK_THROWS_AS(parse_rational("1e3"), parse_error);
    CHECK_THROWS_AS(parse_rational(""), parse_error);
    CHECK_THROWS_AS(parse_rational("1/0"), parse_error);
}

TEST_CASE("fixed truncation display") {
    CHECK(format_fixed_trunc(rat(0), 4) == "0");
    CHECK(format_fixed_trunc(rat(1, 4), 4) == "0.2500");
    CHECK(format_fixed_trunc(rat(-178077, 100000), 4) == "-1.7807");
    CHECK(format_fixed_trunc(rat(28077, 100000), 4) == "0.2807");
    CHECK(format_fixed_trunc(rat(-1, 2), 4) == "-0.5000");
    CHECK(format_fixed_trunc(rat(29999, 10000), 4) == "2.9999");
}

TEST_CASE("round half even") {
    CHECK(round_half_even(rat(25, 1000), 2) == rat(2, 100));
    CHECK(round_half_even(rat(35, 1000), 2) == rat(4, 100));
    CHECK(round_half_even(rat(-25, 1000), 2) == rat(-2, 100));
    CHECK(round_half_even(rat(1, 3), 4) == rat(3333, 10000));
}

TEST_CASE("surd canonical form") {
    QuadraticSurd s = QuadraticSurd::make(rat(0), rat(1), 8);
    CHECK(s.radicand() == 2);
    CHECK(s.radical_coeff() == rat(2));
    QuadraticSurd sq9 = QuadraticSurd::make(rat(1), rat(1), 9);
    CHECK(sq9.is_rational());
    CHECK(sq9.as_rational() == rat(4));
    QuadraticSurd z = QuadraticSurd::make(rat(5), rat(0), 7);
    CHECK(z.is_rational());
}

TEST_CASE("surd sign is exact") {
    // 1 - (1/2) sqrt(2) > 0
    QuadraticSurd a = QuadraticSurd(rat(1)) - QuadraticSurd::sqrt_of(rat(1, 2));
    CHECK(a.sign() == 1);
    // 1 - sqrt(2) < 0
    QuadraticSurd b = QuadraticSurd(rat(1)) - QuadraticSurd::sqrt_of(rat(2));
    CHECK(b.sign() == -1);
    CHECK(QuadraticSurd().sign() == 0);
    // sqrt(2) - 577/408 is slightly negative (continued-fraction convergent)
    QuadraticSurd c = QuadraticSurd::sqrt_of(rat(2)) - rat(577, 408);
    CHECK(c.sign() == -1);
    QuadraticSurd d = QuadraticSurd::sqrt_of(rat(2)) - rat(239, 169);
    CHECK(d.sign() == 1);
}

TEST_CASE("surd sign agrees with high precision floats on random surds") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long> coef(-50, 50), radd(0, 60);
    for (int i = 0; i < 1000; ++i) {
        long p = coef(rng), pq = coef(rng) == 0 ? 1 : coef(rng), q = coef(rng), d = radd(rng);
        if (pq == 0) pq = 3;
        QuadraticSurd s = QuadraticSurd::make(rat(p, std::abs(pq)), rat(q), d);
        mpf_class f = s.approx(512);
        int fs = sgn(f) > 0 ? 1 : (sgn(f) < 0 ? -1 : 0);
        // the float is exact enough at 512 bits unless the value is exactly 0
        if (s.sign() == 0) {
            CHECK(abs(f) < mpf_class(1e-30));
        } else {
            CHECK(s.sign() == fs);
        }
    }
}

TEST_CASE("surd comparisons across radicands") {
    QuadraticSurd r2 = QuadraticSurd::sqrt_of(rat(2));
    QuadraticSurd r3 = QuadraticSurd::sqrt_of(rat(3));
    CHECK(r2.compare(r3) < 0);
    CHECK(r3.compare(r2) > 0);
    // 1 + sqrt(2) vs sqrt(3): 2.414... > 1.732...
    CHECK((QuadraticSurd(rat(1)) + r2).compare(r3) > 0);
    // sqrt(8) == 2 sqrt(2)
    CHECK(QuadraticSurd::sqrt_of(rat(8)).compare(r2 * rat(2)) == 0);
}

TEST_CASE("surd arithmetic stays in one extension") {
    QuadraticSurd r2 = QuadraticSurd::sqrt_of(rat(2));
    QuadraticSurd v = (r2 + rat(1)) * (r2 - rat(1)); // = 1
    CHECK(v.is_rational());
    CHECK(v.as_rational() == rat(1));
    CHECK_THROWS_AS(r2 + QuadraticSurd::sqrt_of(rat(3)), error);
}
