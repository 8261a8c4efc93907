#include <cmath>
#include <numbers>

#include <doctest.h>

#include "rvnorm/errors.hpp"
#include "rvnorm/scalar_math.hpp"

using namespace rvnorm;

namespace {

double rel_err(double got, double want) {
    return std::abs(got - want) / std::abs(want);
}

// independent quadrature oracle: composite Simpson on [0, 2pi] at high
// resolution, for checking the trapezoid self-test where no closed form is
// available
double cos_power_integral_simpson(double d, int panels) {
    const double h = 2.0 * std::numbers::pi / panels;
    auto f = [d](double t) { return std::pow(std::abs(std::cos(t)), d); };
    double acc = f(0.0) + f(2.0 * std::numbers::pi);
    for (int i = 1; i < panels; ++i) acc += (i % 2 ? 4.0 : 2.0) * f(i * h);
    return acc * h / 3.0;
}

} // namespace

TEST_CASE("gamma: fixed values") {
    CHECK(rel_err(gamma_fn(1.0), 1.0) < 1e-14);
    CHECK(rel_err(gamma_fn(5.0), 24.0) < 1e-13);
    // (3/2)(1/2)sqrt(pi)
    CHECK(rel_err(gamma_fn(2.5), 1.3293403881791370) < 1e-13);
    CHECK(rel_err(gamma_fn(0.5), std::sqrt(std::numbers::pi)) < 1e-13);
}

TEST_CASE("gamma: matches the library oracle to 1e-12 on (0, 60]") {
    for (int i = 1; i <= 6000; ++i) {
        const double x = i * 0.01;
        CHECK(rel_err(gamma_fn(x), std::tgamma(x)) < 1e-12);
    }
}

TEST_CASE("gamma: functional equation") {
    for (double x : {0.5, 1.3, 7.9, 23.4}) {
        CHECK(rel_err(gamma_fn(x + 1.0), x * gamma_fn(x)) < 1e-12);
    }
}

TEST_CASE("gamma: rejects nonpositive arguments") {
    CHECK_THROWS_AS(gamma_fn(0.0), DomainError);
    CHECK_THROWS_AS(gamma_fn(-3.2), DomainError);
}

TEST_CASE("central binomial: fixed values") {
    CHECK(rel_err(central_binomial(2.0), 2.0) < 1e-13);
    CHECK(rel_err(central_binomial(4.0), 6.0) < 1e-13);
    CHECK(rel_err(central_binomial(1.0), 4.0 / std::numbers::pi) < 1e-13);
    CHECK_THROWS_AS(central_binomial(0.9), DomainError);
}

TEST_CASE("central binomial: the two closed forms agree on [1, 30]") {
    for (int i = 0; i <= 580; ++i) {
        const double d = 1.0 + i * 0.05;
        CHECK(rel_err(central_binomial(d), central_binomial_dup(d)) < 1e-12);
    }
}

TEST_CASE("cos power mean: normalization identity at 4096 nodes") {
    CHECK(std::abs(cos_power_mean(1.0, 4096) - 1.0) < 1e-6);
    for (double d : {1.5, 2.0, 3.0, 4.7, 10.0}) {
        CHECK(std::abs(cos_power_mean(d, 4096) - 1.0) < 1e-8);
    }
}

TEST_CASE("cos power mean: d = 2 is exact for the trapezoid") {
    CHECK(std::abs(cos_power_mean(2.0, 1024) - 1.0) < 1e-10);
}

TEST_CASE("cos power mean: kinked d = 1 integrand converges at O(h^2)") {
    // |cos t| has derivative jumps at pi/2 and 3pi/2; the 1024-node error sits
    // near 3.1e-6 and each node doubling divides it by ~4
    const double e1 = std::abs(cos_power_mean(1.0, 1024) - 1.0);
    const double e2 = std::abs(cos_power_mean(1.0, 4096) - 1.0);
    CHECK(e1 < 5e-6);
    CHECK(e2 < 1e-6);
    CHECK(e1 / e2 > 8.0);
}

TEST_CASE("cos power mean: matches a high-resolution quadrature oracle") {
    const double d = 4.7;
    const double oracle = cos_power_integral_simpson(d, 1 << 20);
    const double normalized =
        std::pow(2.0, d) * oracle /
        (2.0 * std::numbers::pi * central_binomial(d));
    CHECK(std::abs(normalized - 1.0) < 1e-9);
    CHECK(std::abs(cos_power_mean(d, 4096) - normalized) < 1e-8);
}

TEST_CASE("cos power mean: domain") {
    CHECK_THROWS_AS(cos_power_mean(0.5, 1024), DomainError);
    CHECK_THROWS_AS(cos_power_mean(2.0, 4), DomainError);
}
