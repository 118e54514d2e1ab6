#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "gsync/bounds.hpp"

using namespace gsync;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("two-hop correct probability") {
    CHECK(two_hop_correct_prob(0.0, 2) == 1.0);
    CHECK(two_hop_correct_prob(0.0, 7) == 1.0);
    CHECK_THAT(two_hop_correct_prob(0.3, 2), WithinAbs(0.58, 1e-15));
    CHECK_THAT(two_hop_correct_prob(0.1, 2), WithinAbs(0.82, 1e-15));
    CHECK_THAT(two_hop_correct_prob(0.9, 2), WithinAbs(0.82, 1e-15));
    CHECK_THAT(two_hop_correct_prob(0.3, 3), WithinAbs(0.535, 1e-15));

    // at the critical point the correct reading is no better than chance
    for (std::uint32_t order : {2u, 3u, 4u, 5u, 6u})
        CHECK_THAT(two_hop_correct_prob(critical_flip_prob(order), order),
                   WithinAbs(1.0 / order, 1e-12));

    CHECK_THROWS_AS(two_hop_correct_prob(-0.1, 2), std::domain_error);
    CHECK_THROWS_AS(two_hop_correct_prob(1.1, 2), std::domain_error);
    CHECK_THROWS_AS(two_hop_correct_prob(0.3, 1), std::domain_error);
}

TEST_CASE("two-hop wrong probability and normalization") {
    CHECK(two_hop_wrong_prob(0.0, 2) == 0.0);
    CHECK_THAT(two_hop_wrong_prob(0.3, 2), WithinAbs(0.42, 1e-15));
    CHECK_THAT(two_hop_wrong_prob(0.45, 6), WithinAbs(0.1314, 1e-15));

    for (std::uint32_t order : {2u, 3u, 4u, 5u, 6u})
        CHECK_THAT(two_hop_wrong_prob(critical_flip_prob(order), order),
                   WithinAbs(1.0 / order, 1e-12));

    for (std::uint32_t order : {2u, 3u, 4u, 5u, 6u}) {
        for (int i = 0; i <= 100; ++i) {
            const double p = i / 100.0;
            const TwoHopDistribution d = two_hop_distribution(p, order);
            CHECK_THAT(d.p_correct + (order - 1) * d.p_each_wrong, WithinAbs(1.0, 1e-12));
            CHECK(d.p_correct >= 0.0);
            CHECK(d.p_correct <= 1.0);
            CHECK(d.p_each_wrong >= 0.0);
            CHECK(d.p_each_wrong <= 1.0);
        }
    }
}

TEST_CASE("critical flip probability and extremality") {
    CHECK(critical_flip_prob(2) == 0.5);
    CHECK(critical_flip_prob(4) == 0.75);

    // f decreases below p_c and increases above; h does the opposite
    for (std::uint32_t order : {2u, 3u, 6u}) {
        const double pc = critical_flip_prob(order);
        for (int i = 0; i < 200; ++i) {
            const double a = i / 200.0;
            const double b = (i + 1) / 200.0;
            if (b <= pc)
                CHECK(two_hop_correct_prob(b, order) < two_hop_correct_prob(a, order));
            if (a >= pc)
                CHECK(two_hop_correct_prob(b, order) > two_hop_correct_prob(a, order));
        }
        // away from p_c, f stays above chance and h below
        for (double delta : {0.05, 0.2}) {
            for (int i = 0; i <= 100; ++i) {
                const double p = i / 100.0;
                if (std::abs(p - pc) <= delta) continue;
                CHECK(two_hop_correct_prob(p, order) > 1.0 / order);
                CHECK(two_hop_wrong_prob(p, order) < 1.0 / order);
            }
        }
    }
}

TEST_CASE("recovery failure bound") {
    CHECK_THAT(recovery_failure_bound(100, 0.1, 2), WithinRel(7.607311788394886e-05, 1e-12));

    // p = 0 pins the margins at 1 - 1/order
    const double direct = 2.0 * 10 * 9 * 2 * std::exp(-2.0 * 0.25 * 8);
    CHECK_THAT(recovery_failure_bound(10, 0.0, 2), WithinRel(direct, 1e-12));

    // decreasing in n once the exponential takes over
    for (std::uint32_t n = 10; n < 200; ++n)
        CHECK(recovery_failure_bound(n + 1, 0.1, 2) < recovery_failure_bound(n, 0.1, 2));

    CHECK_THROWS_AS(recovery_failure_bound(2, 0.1, 2), std::domain_error);
    CHECK_THROWS_AS(recovery_failure_bound(100, 0.5, 2), std::domain_error); // p = p_c
    CHECK_THROWS_AS(recovery_failure_bound(100, 0.1, 1), std::domain_error);
    CHECK_THROWS_AS(recovery_failure_bound(100, -0.2, 2), std::domain_error);
}

TEST_CASE("decay quantity") {
    CHECK_THAT(decay_quantity(0.4, 10, 1, 1), WithinRel(0.0060466176, 1e-12));

    // the proof's majorization: (1-x)^a <= exp(-a x)
    for (double p : {0.05, 0.2, 0.4}) {
        for (double a : {1.0, 7.0, 300.0}) {
            for (double d : {1.0, 2.0, 5.0}) {
                for (double K : {0.8, 1.0, 4.0}) {
                    const double q = decay_quantity(p, a, d, K);
                    CHECK(q <= std::exp(-a * std::pow(p / K, d)) + 1e-15);
                    CHECK(q >= 0.0);
                    CHECK(q <= 1.0);
                }
            }
        }
    }

    // p_m = m^(-1/(2d)) with a_m = m decays toward zero as m grows
    const double d = 2.0;
    const double q3 = decay_quantity(std::pow(1e3, -1.0 / (2 * d)), 1e3, d, 1.0);
    const double q6 = decay_quantity(std::pow(1e6, -1.0 / (2 * d)), 1e6, d, 1.0);
    CHECK(q6 < q3);
    CHECK(q6 < 1e-100);

    CHECK_THROWS_AS(decay_quantity(0.5, 10, 1, 1), std::domain_error);
    CHECK_THROWS_AS(decay_quantity(0.0, 10, 1, 1), std::domain_error);
    CHECK_THROWS_AS(decay_quantity(0.4, 10, 1, 0.5), std::domain_error);
    CHECK_THROWS_AS(decay_quantity(0.4, 0, 1, 1), std::domain_error);
    CHECK_THROWS_AS(decay_quantity(0.4, 10, 0, 1), std::domain_error);
}

TEST_CASE("offset existence lower bound") {
    CHECK_THAT(offset_exists_lower_bound(0.3, 4, 2, 800), WithinRel(0.998506132051632, 1e-12));
    CHECK_THAT(offset_exists_lower_bound(0.3, 1, 2, 1), WithinAbs(0.3, 1e-15));

    // monotone in set size and in p
    double prev = 0.0;
    for (std::uint64_t size : {1ull, 5ull, 50ull, 500ull}) {
        const double b = offset_exists_lower_bound(0.2, 4, 2, size);
        CHECK(b > prev);
        prev = b;
    }
    prev = 0.0;
    for (double p : {0.05, 0.15, 0.25, 0.35, 0.45}) {
        const double b = offset_exists_lower_bound(p, 4, 2, 100);
        CHECK(b > prev);
        prev = b;
    }

    CHECK_THROWS_AS(offset_exists_lower_bound(0.5, 4, 2, 800), std::domain_error);
    CHECK_THROWS_AS(offset_exists_lower_bound(0.0, 4, 2, 800), std::domain_error);
    CHECK_THROWS_AS(offset_exists_lower_bound(0.3, 0, 2, 800), std::domain_error);
    CHECK_THROWS_AS(offset_exists_lower_bound(0.3, 4, 1, 800), std::domain_error);
    CHECK_THROWS_AS(offset_exists_lower_bound(0.3, 4, 2, 0), std::domain_error);
}
