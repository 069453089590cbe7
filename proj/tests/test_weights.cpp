#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "fracsub/weights.hpp"
#include "support/oracles.hpp"

using namespace fracsub;

TEST_CASE("integer order collapses the binomial series")
{
    const std::vector<double> w = gl_weights(1.0, 3);
    CHECK(w == std::vector<double>{1.0, -1.0, 0.0, 0.0});
}

TEST_CASE("half order weights are exact dyadic rationals")
{
    const std::vector<double> w = gl_weights(0.5, 2);
    CHECK(w[0] == 1.0);
    CHECK(w[1] == -0.5);
    CHECK(w[2] == -0.125);
    CHECK(gl_weights(0.25, 1) == std::vector<double>{1.0, -0.25});
}

TEST_CASE("order outside the admissible interval is rejected")
{
    CHECK_THROWS_AS(gl_weights(0.0, 4), std::invalid_argument);
    CHECK_THROWS_AS(gl_weights(-0.3, 4), std::invalid_argument);
    CHECK_THROWS_AS(gl_weights(1.5, 4), std::invalid_argument);
    CHECK_THROWS_AS(shifted_weights(1.0, 4), std::invalid_argument);
    CHECK_THROWS_AS(shifted_weights(0.0, 4), std::invalid_argument);
}

TEST_CASE("shifted weights at order one half")
{
    const std::vector<double> g = shifted_weights(0.5, 2);
    CHECK(g[0] == 0.75);
    CHECK(g[1] == -0.125);
    CHECK(g[2] == -0.21875);
}

TEST_CASE("weights agree with exact rational evaluation up to l = 64")
{
    const long nums[] = {1, 1, 3, 9};
    const long dens[] = {4, 2, 4, 10};
    for (int c = 0; c < 4; ++c) {
        const double order = static_cast<double>(nums[c]) / static_cast<double>(dens[c]);
        const WeightTable t = WeightTable::build(order, 64);
        const auto rw = oracles::rational_gl_weights(nums[c], dens[c], 64);
        const auto rg = oracles::rational_shifted_weights(nums[c], dens[c], 64);
        for (std::size_t l = 0; l <= 64; ++l) {
            CHECK(t.raw[l] == doctest::Approx(static_cast<double>(rw[l])).epsilon(1e-14));
            CHECK(t.shifted[l] ==
                  doctest::Approx(static_cast<double>(rg[l])).epsilon(1e-14));
        }
    }
}

TEST_CASE("closed-form ratio between shifted and raw weights")
{
    // with gamma = 1 - order:  g[l] = (2l - (2-gamma)^2) / (2(l + gamma - 2)) * w[l]
    for (double order : {0.1, 0.35, 0.5, 0.65, 0.9}) {
        const double gamma = 1.0 - order;
        const WeightTable t = WeightTable::build(order, 50);
        for (std::size_t l = 0; l <= 50; ++l) {
            const double ll = static_cast<double>(l);
            const double factor =
                (2.0 * ll - (2.0 - gamma) * (2.0 - gamma)) / (2.0 * (ll + gamma - 2.0));
            CHECK(t.shifted[l] == doctest::Approx(factor * t.raw[l]).epsilon(1e-13));
        }
    }
}

TEST_CASE("first two shifted weights match the closed forms")
{
    for (double order : {0.05, 0.3, 0.5, 0.7, 0.95}) {
        const double gamma = 1.0 - order;  // table built for differentiation order 1-gamma
        const std::vector<double> g = shifted_weights(order, 1);
        CHECK(g[0] == doctest::Approx((2.0 - gamma) / 2.0).epsilon(1e-15));
        CHECK(g[1] ==
              doctest::Approx((-gamma * gamma + 4.0 * gamma - 2.0) / 2.0).epsilon(1e-13));
        CHECK(g[0] + g[1] == doctest::Approx(gamma * (3.0 - gamma) / 2.0).epsilon(1e-13));
        CHECK(g[0] + g[1] > 0.0);
    }
}

TEST_CASE("sign pattern and partial-sum laws over the order sweep")
{
    const std::size_t n = 2000;
    for (int c = 1; c <= 19; ++c) {
        const double order = 0.05 * c;
        const WeightTable t = WeightTable::build(order, n);

        for (std::size_t l = 1; l <= n; ++l) REQUIRE(t.raw[l] < 0.0);
        for (std::size_t l = 2; l <= n; ++l) REQUIRE(t.shifted[l] < 0.0);

        double sw = 0.0, sg = 0.0, prev_sg = 0.0;
        for (std::size_t l = 0; l <= n; ++l) {
            sw += t.raw[l];
            sg += t.shifted[l];
            REQUIRE(sw > 0.0);
            REQUIRE(sg > 0.0);
            if (l >= 1) {
                REQUIRE(-(sw - 1.0) < 1.0);          // -sum_{1..k} raw < 1
                REQUIRE(-(sg - t.shifted[0]) < t.shifted[0]);
                if (l >= 2) REQUIRE(sg <= prev_sg);  // monotone decay from l = 1 on
            }
            prev_sg = sg;
        }
    }
}

TEST_CASE("partial sums follow the exact closed form and vanish asymptotically")
{
    // sum_{l=0..n} raw[l] = Gamma(n+1-order) / (Gamma(1-order) * Gamma(n+1))
    const std::size_t n = 10000;
    for (double order : {0.05, 0.25, 0.5, 0.75, 0.95}) {
        const WeightTable t = WeightTable::build(order, n);
        double sw = 0.0, sg = 0.0;
        for (std::size_t l = 0; l <= n; ++l) {
            sw += t.raw[l];
            sg += t.shifted[l];
        }
        const auto closed = [&](std::size_t m) {
            return std::exp(std::lgamma(static_cast<double>(m) + 1.0 - order) -
                            std::lgamma(1.0 - order) -
                            std::lgamma(static_cast<double>(m) + 1.0));
        };
        CHECK(sw == doctest::Approx(closed(n)).epsilon(1e-9));
        CHECK(sg == doctest::Approx(0.5 * (1.0 + order) * closed(n) +
                                    0.5 * (1.0 - order) * closed(n - 1))
                        .epsilon(1e-9));
        // an absolute 1e-2 vanishing bound holds for order >= 0.45 at this
        // length; the tail sum scales like n^-order / Gamma(1-order)
        if (order >= 0.45) {
            CHECK(std::fabs(sw) < 1e-2);
            CHECK(sg > 0.0);
            CHECK(sg < 1e-2);
        }
    }
}

TEST_CASE("combined weights")
{
    SUBCASE("degenerates to a scaled one-term form when the exponents agree")
    {
        const CombinedWeights c = combined_weights(0.3, 0.3, 1.0, 1.0, 0.1, 0.05, 16);
        const std::vector<double> g = shifted_weights(0.7, 16);
        for (std::size_t l = 0; l <= 16; ++l)
            CHECK(c.values[l] ==
                  doctest::Approx((c.mu_alpha + c.mu_beta) * g[l]).epsilon(1e-15));
    }

    SUBCASE("rejects non-positive scale parameters")
    {
        CHECK_THROWS_AS(combined_weights(0.3, 0.3, 1.0, 0.0, 0.1, 0.05, 4),
                        std::invalid_argument);
        CHECK_THROWS_AS(combined_weights(0.3, 0.3, 1.0, 1.0, 0.0, 0.05, 4),
                        std::invalid_argument);
        CHECK_THROWS_AS(combined_weights(0.3, 0.3, 1.0, 1.0, 0.1, -0.05, 4),
                        std::invalid_argument);
    }

    SUBCASE("scale factors are the stated powers")
    {
        const CombinedWeights c = combined_weights(0.25, 0.15, 1.0, 1.0, 0.25, 1e-3, 4);
        CHECK(c.mu_alpha == doctest::Approx(std::pow(0.25, 0.25) * 1e6).epsilon(1e-13));
        CHECK(c.mu_beta == doctest::Approx(std::pow(0.25, 0.15) * 1e6).epsilon(1e-13));
        CHECK(c.mu_alpha > 0.0);
        CHECK(c.mu_beta > 0.0);
    }

    SUBCASE("values are the stated linear combination")
    {
        const CombinedWeights c = combined_weights(0.4, 0.2, 2.0, 0.5, 0.125, 0.1, 12);
        const std::vector<double> ga = shifted_weights(0.6, 12);
        const std::vector<double> gb = shifted_weights(0.8, 12);
        for (std::size_t l = 0; l <= 12; ++l)
            CHECK(c.values[l] ==
                  doctest::Approx(c.mu_alpha * ga[l] + c.mu_beta * gb[l]).epsilon(1e-15));
    }
}
