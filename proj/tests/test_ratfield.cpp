#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "jack/ratfunc.hpp"

using namespace jack;

namespace {

RatFunc a() { return RatFunc::alpha(); }

Poly random_poly(std::mt19937& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg), coeff(-4, 4);
    std::vector<Rat> c(deg(rng) + 1);
    for (auto& x : c) x = coeff(rng);
    return Poly(std::move(c));
}

RatFunc random_ratfunc(std::mt19937& rng, int max_deg) {
    Poly n = random_poly(rng, max_deg), d;
    do {
        d = random_poly(rng, max_deg);
    } while (d.is_zero());
    return RatFunc(n, d);
}

}  // namespace

TEST_CASE("construction normalizes to canonical form") {
    // (a^2 - 1) / (a - 1) reduces to a + 1
    RatFunc f(Poly(std::vector<Rat>{-1, 0, 1}), Poly(std::vector<Rat>{-1, 1}));
    CHECK(f == a() + RatFunc(1));
    CHECK(f.is_polynomial());

    // denominator made monic, gcd cancelled
    RatFunc g(Poly(std::vector<Rat>{0, 2}), Poly(std::vector<Rat>{2, 2}));
    CHECK(g.den().leading() == 1);
    CHECK(g == a() / (a() + RatFunc(1)));
}

TEST_CASE("arithmetic") {
    RatFunc two_a_over = (RatFunc(2) * a()) / (a() + RatFunc(1));
    CHECK(two_a_over + two_a_over == (RatFunc(4) * a()) / (a() + RatFunc(1)));
    CHECK((a() + RatFunc(1)) * (RatFunc(2) * a() * a() / (a() + RatFunc(1))) ==
          RatFunc(2) * a() * a());
    CHECK_THROWS_AS(two_a_over / RatFunc(), std::domain_error);
}

TEST_CASE("evaluation") {
    RatFunc f = RatFunc(2) * a() / (a() + RatFunc(1));
    CHECK(f.eval(1) == 1);
    CHECK((a() + RatFunc(1)).eval(Rat(1, 2)) == Rat(3, 2));
    RatFunc pole = RatFunc(1) / (a() - RatFunc(1));
    CHECK_THROWS_AS(pole.eval(1), std::domain_error);
}

TEST_CASE("as_poly and nonnegative integer test") {
    RatFunc f = RatFunc(2) * a() * a();
    CHECK(f.as_poly() == Poly(std::vector<Rat>{0, 0, 2}));
    CHECK_THROWS_AS((RatFunc(2) * a() / (a() + RatFunc(1))).as_poly(), std::domain_error);

    // 8 a^4 (a+1) (a+2), expanded by plain polynomial multiplication
    Poly p = Poly(std::vector<Rat>{0, 0, 0, 0, 8}) * Poly(std::vector<Rat>{1, 1}) *
             Poly(std::vector<Rat>{2, 1});
    CHECK(p == Poly(std::vector<Rat>{0, 0, 0, 0, 16, 24, 8}));
    CHECK(poly_is_nonneg_int(p));
    CHECK_FALSE(poly_is_nonneg_int(Poly(std::vector<Rat>{-4})));
    CHECK_FALSE(poly_is_nonneg_int(Poly(Rat(1, 2))));
    CHECK(poly_is_nonneg_int(Poly()));
}

TEST_CASE("field laws on random elements") {
    std::mt19937 rng(20240817);
    for (int iter = 0; iter < 60; ++iter) {
        RatFunc x = random_ratfunc(rng, 3), y = random_ratfunc(rng, 3), z = random_ratfunc(rng, 3);
        CHECK((x + y) + z == x + (y + z));
        CHECK(x * (y + z) == x * y + x * z);
        if (!y.is_zero()) CHECK((x / y) * y == x);
    }
}

TEST_CASE("canonicity: equal elements share a representation") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 40; ++iter) {
        RatFunc x = random_ratfunc(rng, 3);
        Poly c = random_poly(rng, 2);
        if (c.is_zero()) continue;
        RatFunc y(x.num() * c, x.den() * c);
        CHECK(x.num() == y.num());
        CHECK(x.den() == y.den());
    }
}

TEST_CASE("evaluation is a ring homomorphism away from poles") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> pt(-3, 3);
    for (int iter = 0; iter < 40; ++iter) {
        RatFunc x = random_ratfunc(rng, 3), y = random_ratfunc(rng, 3);
        Rat at(pt(rng));
        if (x.den().eval(at) == 0 || y.den().eval(at) == 0 ||
            (x * y).den().eval(at) == 0 || (x + y).den().eval(at) == 0)
            continue;
        CHECK((x * y).eval(at) == x.eval(at) * y.eval(at));
        CHECK((x + y).eval(at) == x.eval(at) + y.eval(at));
    }
}
