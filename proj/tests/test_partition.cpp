#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "jack/partition.hpp"

using namespace jack;

TEST_CASE("construction and parsing") {
    CHECK(Partition({3, 1, 1}).weight() == 5);
    CHECK(Partition(std::vector<int>{2, 0, 0}) == Partition({2}));
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
    CHECK(parse_partition("6,3,3,2,1") == Partition({6, 3, 3, 2, 1}));
    CHECK(parse_partition("") == Partition());
    CHECK(Partition({6, 3, 3, 2, 1}).str() == "6,3,3,2,1");
}

TEST_CASE("conjugate") {
    CHECK(conjugate(Partition({5, 3, 3, 1})) == Partition({4, 3, 3, 1, 1}));
    CHECK(conjugate(Partition()) == Partition());
    CHECK(conjugate(Partition({3})) == Partition({1, 1, 1}));
    for (int n = 0; n <= 12; ++n)
        for (const auto& la : partitions_of(n)) CHECK(conjugate(conjugate(la)) == la);
}

TEST_CASE("dominance order") {
    CHECK(dominance_compare(Partition({1, 1}), Partition({2})) == Dominance::less);
    CHECK(dominance_compare(Partition({3, 3}), Partition({4, 1, 1})) == Dominance::incomparable);
    CHECK(dominance_compare(Partition({2, 1}), Partition({2, 1})) == Dominance::equal);
    CHECK_THROWS_AS(dominance_compare(Partition({2}), Partition({2, 1})), std::invalid_argument);

    // conjugation reverses dominance
    for (const auto& la : partitions_of(6))
        for (const auto& mu : partitions_of(6)) {
            auto d = dominance_compare(mu, la);
            auto dc = dominance_compare(conjugate(la), conjugate(mu));
            CHECK(d == dc);
        }
}

TEST_CASE("hooks") {
    Partition la({5, 3, 3, 1});
    CHECK(hook(la, {1, 1}, HookKind::lower) ==
          RatFunc(Poly(std::vector<Rat>{4, 4})));  // 4a + 4
    CHECK(hook(la, {2, 2}, HookKind::upper) ==
          RatFunc(Poly(std::vector<Rat>{1, 2})));  // 2a + 1
    CHECK(hook(Partition({1}), {1, 1}, HookKind::lower) == RatFunc(1));
    CHECK_THROWS_AS(hook(la, {1, 6}, HookKind::lower), std::invalid_argument);
    CHECK_THROWS_AS(hook(la, {5, 1}, HookKind::upper), std::invalid_argument);

    // upper - lower = a - 1 on every box
    for (const auto& mu : partitions_of(7))
        for (const auto& b : boxes(mu))
            CHECK(hook(mu, b, HookKind::upper) - hook(mu, b, HookKind::lower) ==
                  RatFunc::alpha() - RatFunc(1));
}

TEST_CASE("hook products") {
    Partition two({2});
    CHECK(hook_product_all(two, HookKind::lower) == RatFunc::alpha() + RatFunc(1));
    CHECK(hook_product_all(two, HookKind::upper) == RatFunc(2) * RatFunc::alpha().pow(2));
    CHECK(hook_product(two, {}, HookKind::lower) == RatFunc(1));
}

TEST_CASE("based split") {
    auto s1 = based_split(Partition({1, 1}), Partition({1}));
    CHECK(s1.lambda_based == std::vector<Box>{{1, 1}, {2, 1}});
    CHECK(s1.lambda_unbased.empty());
    CHECK(s1.mu_based == std::vector<Box>{{1, 1}});
    CHECK(s1.mu_unbased.empty());

    auto s2 = based_split(Partition({2, 1}), Partition({1, 1}));
    CHECK(s2.lambda_based == std::vector<Box>{{1, 2}});
    CHECK(s2.lambda_unbased == std::vector<Box>{{1, 1}, {2, 1}});
    CHECK(s2.mu_based.empty());
    CHECK(s2.mu_unbased == std::vector<Box>{{1, 1}, {2, 1}});

    auto s3 = based_split(Partition({2, 2}), Partition({2, 2}));
    CHECK(s3.lambda_based.empty());
    CHECK(s3.mu_unbased.size() == 4);
}

TEST_CASE("corners") {
    Partition lc({4, 3, 3, 1, 1});  // conjugate of (5,3,3,1)
    auto cs = corners(lc);
    REQUIRE(cs.size() == 3);
    CHECK(cs[1].boxes == std::vector<Box>{{2, 2}, {2, 3}, {3, 2}, {3, 3}});
    CHECK(cs[1].rect == Partition({2, 2}));

    CHECK(corner_count(Partition({6, 3, 3, 2, 1})) == 4);
    auto rect = corners(Partition({4, 4}));
    REQUIRE(rect.size() == 1);
    CHECK(rect[0].rect == Partition({4, 4}));
    CHECK_THROWS_AS(corners(Partition()), std::invalid_argument);
}

TEST_CASE("complement in a rectangle") {
    Partition r65(std::vector<int>(5, 6));
    CHECK(complement(r65, Partition({6, 5, 3, 3})) == Partition({6, 3, 3, 1}));
    CHECK(complement(Partition({2, 2}), Partition()) == Partition({2, 2}));
    CHECK_THROWS_AS(complement(Partition({2, 2}), Partition({3})), std::invalid_argument);

    for (int w = 10; w <= 12; ++w)
        for (const auto& la : partitions_of(w)) {
            if (!is_rectangle(la)) continue;
            for (int n = 0; n <= w; ++n)
                for (const auto& nu : partitions_of(n)) {
                    if (!contains(la, nu)) continue;
                    CHECK(complement(la, complement(la, nu)) == nu);
                }
        }
}

TEST_CASE("complement respects dominance and containment") {
    for (int r = 1; r <= 4; ++r)
        for (int s = 1; s <= 3 && r * s <= 9; ++s) {
            Partition rect(std::vector<int>(s, r));
            for (int n = 0; n <= r * s; ++n)
                for (const auto& nu : partitions_of(n)) {
                    if (!contains(rect, nu)) continue;
                    for (const auto& om : partitions_of(n)) {
                        if (!contains(rect, om)) continue;
                        auto d = dominance_compare(om, nu);
                        if (d == Dominance::greater || d == Dominance::equal)
                            CHECK(dominance_compare(complement(rect, om), complement(rect, nu)) !=
                                  Dominance::less);
                    }
                    for (int m = 0; m <= n; ++m)
                        for (const auto& om : partitions_of(m))
                            if (contains(rect, om) && contains(nu, om))
                                CHECK(contains(complement(rect, om), complement(rect, nu)));
                }
        }
}

TEST_CASE("horizontal strips") {
    CHECK(is_horizontal_strip(Partition({2, 2}), Partition({2}), 2));
    CHECK_FALSE(is_horizontal_strip(Partition({2, 2}), Partition({1, 1}), 2));
    CHECK(is_horizontal_strip(Partition({2, 1}), Partition({2, 1}), 0));
}

TEST_CASE("exponential containment") {
    Partition la({2, 2, 1}), mu({2});
    CHECK(exp_contains(la, mu));
    CHECK(exp_diff(la, mu) == Partition({2, 1}));
    CHECK(exp_binomial(la, mu) == 2);
    CHECK_FALSE(exp_contains(Partition({2, 1}), Partition({1, 1})));
    CHECK_THROWS_AS(exp_diff(Partition({2, 1}), Partition({1, 1})), std::invalid_argument);
    CHECK(exp_contains(la, Partition()));
    CHECK(exp_diff(la, Partition()) == la);
    CHECK(exp_binomial(la, Partition()) == 1);
}

TEST_CASE("rectangular filtration") {
    auto f = rect_filtration(Partition({6, 3, 3, 2, 1}));
    REQUIRE(f.size() == 4);
    CHECK(f[0] == Partition(std::vector<int>(5, 6)));
    CHECK(f[1] == Partition(std::vector<int>(4, 5)));
    CHECK(f[2] == Partition({2, 2, 2}));
    CHECK(f[3] == Partition({1}));

    CHECK(rect_filtration(Partition({4, 4})) == std::vector<Partition>{Partition({4, 4})});
    CHECK(rect_filtration(Partition({2, 1})) ==
          std::vector<Partition>{Partition({2, 2}), Partition({1})});
    CHECK_THROWS_AS(rect_filtration(Partition()), std::invalid_argument);
}

TEST_CASE("filtration closed form agrees with the iteration") {
    CHECK(filtration_closed_form(Partition({6, 3, 3, 2, 1})) ==
          rect_filtration(Partition({6, 3, 3, 2, 1})));
    CHECK(filtration_closed_form(Partition({2, 1})) == rect_filtration(Partition({2, 1})));
    for (int n = 1; n <= 14; ++n)
        for (const auto& la : partitions_of(n))
            CHECK(filtration_closed_form(la) == rect_filtration(la));
}

TEST_CASE("enclosing rectangle is minimal and drops one corner") {
    for (int n = 1; n <= 10; ++n)
        for (const auto& la : partitions_of(n)) {
            Partition r = enclosing_rectangle(la);
            CHECK(contains(r, la));
            // any rectangle containing la contains r
            CHECK(r.part(1) == la.part(1));
            CHECK(r.length() == la.length());
            Partition c = rectangle_complement(la);
            if (!c.empty()) CHECK(corner_count(c) == corner_count(la) - 1);
            else CHECK(corner_count(la) == 1);

            // dropping the first rectangle yields the filtration of the complement
            auto f = rect_filtration(la);
            if (f.size() >= 2) {
                auto g = rect_filtration(c);
                CHECK(std::vector<Partition>(f.begin() + 1, f.end()) == g);
            }
        }
}

TEST_CASE("corner removal shapes") {
    // removing the rightmost box of the last row of a block
    Partition la({3, 3, 2});
    auto w = corner_removal_shape(la, Partition({3, 2, 2}));
    REQUIRE(w.has_value());
    CHECK(*w == Partition({1}));

    auto w2 = corner_removal_shape(la, Partition({2, 2, 2}));
    REQUIRE(w2.has_value());  // two rightmost boxes of rows 1-2 removed, bottom-heavier
    CHECK(*w2 == Partition({1, 1}));

    // removal split across two corners is not of this shape
    CHECK_FALSE(corner_removal_shape(Partition({3, 1}), Partition({2})).has_value());
    CHECK_FALSE(corner_removal_shape(Partition({3, 3, 1}), Partition({3, 2})).has_value());
}

TEST_CASE("z_lambda") {
    CHECK(z_lambda(Partition()) == 1);
    CHECK(z_lambda(Partition({2})) == 2);
    CHECK(z_lambda(Partition({2, 1})) == 2);
    CHECK(z_lambda(Partition({1, 1})) == 2);
    CHECK(z_lambda(Partition({1, 1, 1})) == 6);
    CHECK(z_lambda(Partition({3, 2, 2, 1})) == 3 * 2 * 2 * 2 * 1);
}
