#include <catch2/catch_amalgamated.hpp>

#include "rootgeo/poly.hpp"
#include "rootgeo/sturm.hpp"

#include <random>

using namespace rootgeo;

static DensePoly P(std::initializer_list<long> cs) {
    std::vector<Rational> v;
    for (long c : cs) v.push_back(rat(c));
    return DensePoly(std::move(v));
}

TEST_CASE("basic arithmetic") {
    CHECK(P({1, 1}) + P({3, 2}) == P({4, 3}));
    DensePoly p = P({5, 2, 7});
    CHECK(p + DensePoly() == p);
    CHECK((P({0, 1}) + (-P({0, 1}))).is_zero());
    CHECK(P({1, 1}) * P({-1, 1}) == P({-1, 0, 1}));
    CHECK(p * DensePoly::constant(rat(1)) == p);
    CHECK(p.degree() == 2);
    CHECK(DensePoly().degree() == -1);
}

TEST_CASE("evaluation") {
    CHECK(P({1, 3, 1}).eval(rat(-1)) == rat(-1));
    CHECK(P({7, 3, 9}).eval(rat(0)) == rat(7));
    CHECK(P({3, 2}).eval(rat(-3, 2)) == rat(0));
}

TEST_CASE("eval respects ring structure") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> d(-9, 9);
    for (int it = 0; it < 200; ++it) {
        std::vector<Rational> ca, cb;
        for (int i = 0; i < 5; ++i) {
            ca.push_back(rat(d(rng), 1 + std::abs(d(rng))));
            cb.push_back(rat(d(rng), 1 + std::abs(d(rng))));
        }
        DensePoly a{std::vector<Rational>(ca)}, b{std::vector<Rational>(cb)};
        Rational x = rat(d(rng), 1 + std::abs(d(rng)));
        CHECK((a + b).eval(x) == a.eval(x) + b.eval(x));
        CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
    }
}

TEST_CASE("division and gcd") {
    auto [q, r] = divmod(P({-1, 0, 1}), P({-1, 1}));
    CHECK(q == P({1, 1}));
    CHECK(r.is_zero());
    CHECK_THROWS_AS(exact_div(P({1, 0, 1}), P({-1, 1})), error);
    CHECK(poly_gcd(P({-1, 0, 1}), P({-1, 1})) == P({-1, 1}));
    CHECK(poly_gcd(P({0, 0, 1}), P({0, 1})) == P({0, 1}));
    // gcd of coprime polynomials is a constant
    CHECK(poly_gcd(P({1, 1}), P({2, 1})).degree() == 0);
}

TEST_CASE("content and primitive part") {
    DensePoly p({rat(2, 3), rat(4, 3), rat(2)});
    Rational c = p.content();
    CHECK(c == rat(2, 3));
    DensePoly pp = p.primitive_part();
    CHECK(pp == P({1, 2, 3}));
}

TEST_CASE("sturm chain of a classic quadratic") {
    SturmChain ch(P({-1, 0, 1}));
    REQUIRE(ch.polys().size() == 3);
    CHECK(ch.polys()[0] == P({-1, 0, 1}));
    CHECK(ch.polys()[1] == P({0, 2}));
    CHECK(ch.polys()[2].degree() == 0);
    CHECK(sgn(ch.polys()[2][0]) > 0);
    CHECK(ch.squarefree());
    CHECK(count_real_roots(ch) == 2);
}

TEST_CASE("sturm chain terminates on linear input and detects repeated roots") {
    SturmChain lin(P({3, 2}));
    CHECK(lin.polys().size() == 2);
    CHECK(count_real_roots(lin) == 1);
    SturmChain sq(P({0, 0, 1}));
    CHECK_FALSE(sq.squarefree());
    CHECK_THROWS_AS(count_real_roots(sq), non_squarefree);
}

TEST_CASE("root counts on reference polynomials") {
    CHECK(count_real_roots(SturmChain(P({1, 3, 1}))) == 2);
    CHECK(count_real_roots(SturmChain(P({1, 1, 1}))) == 0);
    CHECK(count_real_roots(SturmChain(P({0, 1})), Interval(rat(-1), rat(1))) == 1);
}

TEST_CASE("bisection isolation matches sturm counts and shows sign changes") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> d(-9, 9);
    int tested = 0;
    while (tested < 60) {
        std::vector<Rational> cs;
        int deg = 1 + static_cast<int>(rng() % 8);
        for (int i = 0; i <= deg; ++i) cs.push_back(rat(d(rng)));
        DensePoly p{std::vector<Rational>(cs)};
        if (p.degree() < 1) continue;
        SturmChain ch(p);
        if (!ch.squarefree()) continue;
        ++tested;
        RootSet rs = isolate_roots_bisection(p, rat(1, 100000));
        CHECK(static_cast<int>(rs.size()) == count_real_roots(ch));
        for (const auto& r : rs.roots) {
            if (r.is_exact()) {
                CHECK(p.eval(r.value()) == 0);
            } else {
                CHECK(rs.sign(r.lower()) * rs.sign(r.upper()) == -1);
            }
        }
        // ordered strictly
        for (size_t i = 1; i < rs.size(); ++i)
            CHECK(rs.roots[i - 1].upper() <= rs.roots[i].lower());
    }
}

TEST_CASE("bisection isolation reference values") {
    RootSet rs = isolate_roots_bisection(P({1, 3, 1}), rat(1, 100000));
    REQUIRE(rs.size() == 2);
    // roots -2.61803..., -0.38196...
    CHECK(rs.roots[0].lower() < rat(-26180, 10000));
    CHECK(rs.roots[0].upper() > rat(-26181, 10000));
    CHECK(rs.roots[1].lower() < rat(-3819, 10000));
    CHECK(rs.roots[1].upper() > rat(-3820, 10000));
    RootSet lin = isolate_roots_bisection(P({1, 2}), rat(1));
    REQUIRE(lin.size() == 1);
    CHECK(lin.roots[0].value() == rat(-1, 2));
    RootSet x = isolate_roots_bisection(P({0, 1}), rat(1));
    CHECK(x.roots[0].value() == rat(0));
}

TEST_CASE("content normalization does not change root counts") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<long> d(-9, 9);
    int tested = 0;
    while (tested < 40) {
        std::vector<Rational> cs;
        int deg = 2 + static_cast<int>(rng() % 5);
        for (int i = 0; i <= deg; ++i) cs.push_back(rat(d(rng), 1 + std::abs(d(rng))));
        DensePoly p{std::vector<Rational>(cs)};
        if (p.degree() < 2) continue;
        SturmChain ch(p);
        if (!ch.squarefree()) continue;
        ++tested;
        // unnormalized chain: plain signed euclidean remainders
        std::vector<DensePoly> raw{p, p.derivative()};
        while (true) {
            auto [q2, r2] = divmod(raw[raw.size() - 2], raw.back());
            (void)q2;
            if (r2.is_zero()) break;
            raw.push_back(-r2);
        }
        auto vars = [&](int at_inf) {
            int v = 0, prev = 0;
            for (const auto& f : raw) {
                int s = at_inf < 0 ? f.sign_at_neg_inf() : f.sign_at_pos_inf();
                if (prev != 0 && s != prev) ++v;
                if (s != 0) prev = s;
            }
            return v;
        };
        CHECK(vars(-1) - vars(+1) == count_real_roots(ch));
    }
}
