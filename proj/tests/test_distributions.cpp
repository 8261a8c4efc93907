#include <cmath>
#include <numbers>

#include <doctest.h>

#include "rvnorm/distributions.hpp"
#include "rvnorm/errors.hpp"

using namespace rvnorm;

namespace {

double ecf(const std::vector<double>& xs, double t) {
    double acc = 0.0;
    for (double x : xs) acc += std::cos(t * x);
    return acc / static_cast<double>(xs.size());
}

} // namespace

TEST_CASE("grammar: parse and round-trip") {
    CHECK(DistributionSpec::parse("normal:0,1").to_string() == "normal:0,1");
    CHECK(DistributionSpec::parse("uniform:-1,1").to_string() == "uniform:-1,1");
    CHECK(DistributionSpec::parse("rademacher").family() == Family::rademacher);
    CHECK(DistributionSpec::parse("exponential:2").mean() ==
          doctest::Approx(0.5));
    const DistributionSpec st = DistributionSpec::parse("stable:1.5");
    CHECK(st.p1() == 1.5);
    CHECK(st.p2() == doctest::Approx(gamma_alpha(1.5)).epsilon(1e-15));

    CHECK_THROWS_AS(DistributionSpec::parse("cauchy:1"), ParseError);
    CHECK_THROWS_AS(DistributionSpec::parse("normal:1"), ParseError);
    CHECK_THROWS_AS(DistributionSpec::parse("normal:a,b"), ParseError);
    CHECK_THROWS_AS(DistributionSpec::parse("normal:0,0"), DomainError);
    CHECK_THROWS_AS(DistributionSpec::parse("uniform:1,1"), DomainError);
    CHECK_THROWS_AS(DistributionSpec::parse("stable:2.5"), DomainError);
    CHECK_THROWS_AS(DistributionSpec::parse("stable:1.001"), DomainError);
}

TEST_CASE("sampling: rademacher support and determinism") {
    const DistributionSpec spec = DistributionSpec::rademacher();
    RngStream r1(9), r2(9);
    const std::vector<double> a = sample(spec, r1, 10);
    const std::vector<double> b = sample(spec, r2, 10);
    CHECK(a == b);
    for (double v : a) CHECK((v == 1.0 || v == -1.0));
}

TEST_CASE("sampling: normal CLT-scale sanity") {
    const DistributionSpec spec = DistributionSpec::normal(0.0, 1.0);
    RngStream rng(11);
    const std::vector<double> xs = sample(spec, rng, 1000000);
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(xs.size());
    CHECK(std::abs(mean) < 4e-3);
}

TEST_CASE("sampling: stable characteristic function") {
    const DistributionSpec spec = DistributionSpec::stable_symmetric(1.5, 1.0);
    RngStream rng(13);
    const std::vector<double> xs = sample(spec, rng, 1000000);
    CHECK(std::abs(ecf(xs, 1.0) - std::exp(-1.0)) < 0.01);
}

TEST_CASE("sampling: stable scale equivariance is exact") {
    const double alpha = 1.4;
    const double g = 0.7;
    const double c = 4.0;  // power of two keeps the products bit-exact
    RngStream r1(17), r2(17);
    const std::vector<double> base =
        sample(DistributionSpec::stable_symmetric(alpha, g), r1, 1000);
    const std::vector<double> scaled =
        sample(DistributionSpec::stable_symmetric(alpha, c * g), r2, 1000);
    for (std::size_t i = 0; i < base.size(); ++i) {
        CHECK(scaled[i] == c * base[i]);
    }
}

TEST_CASE("sampling: stable sum law through the characteristic function") {
    const double alpha = 1.5;
    const double g1 = 1.0, g2 = 0.6;
    RngStream r1(19, 1), r2(19, 2);
    const std::vector<double> x1 =
        sample(DistributionSpec::stable_symmetric(alpha, g1), r1, 1000000);
    const std::vector<double> x2 =
        sample(DistributionSpec::stable_symmetric(alpha, g2), r2, 1000000);
    std::vector<double> sum(x1.size());
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = x1[i] + x2[i];
    const double g = std::pow(std::pow(g1, alpha) + std::pow(g2, alpha),
                              1.0 / alpha);
    for (double t : {0.5, 1.0, 2.0}) {
        CHECK(std::abs(ecf(sum, t) - std::exp(-std::pow(g * t, alpha))) < 0.02);
    }
}

TEST_CASE("moments: analytic values") {
    RngStream rng(1);
    const DistributionSpec n01 = DistributionSpec::normal(0.0, 1.0);
    CHECK(moments(n01, 2.0, 0, rng).standardized.value() ==
          doctest::Approx(1.0).epsilon(1e-13));
    CHECK(moments(n01, 4.0, 0, rng).standardized.value() ==
          doctest::Approx(3.0).epsilon(1e-13));
    CHECK(moments(DistributionSpec::rademacher(), 3.0, 0, rng)
              .standardized.value() == 1.0);
    // uniform: 3^{d/2}/(d+1)
    CHECK(moments(DistributionSpec::uniform(0.0, 1.0), 3.0, 0, rng)
              .standardized.value() ==
          doctest::Approx(std::pow(3.0, 1.5) / 4.0).epsilon(1e-13));
}

TEST_CASE("moments: standardized = absolute/sigma^d and Lyapunov floor") {
    RngStream rng(2);
    for (const DistributionSpec& spec :
         {DistributionSpec::normal(2.0, 0.5),
          DistributionSpec::uniform(-3.0, 1.0), DistributionSpec::rademacher()}) {
        for (double d : {2.0, 2.5, 3.0, 4.0, 6.0}) {
            const MomentReport r = moments(spec, d, 0, rng);
            CHECK(r.standardized.value() ==
                  doctest::Approx(r.abs_central_moment /
                                  std::pow(r.stddev.value(), d))
                      .epsilon(1e-12));
            CHECK(r.standardized.value() >= 1.0 - 1e-12);
        }
    }
}

TEST_CASE("moments: Lyapunov chain for the normal family") {
    RngStream rng(3);
    const DistributionSpec n01 = DistributionSpec::normal(0.0, 1.0);
    double prev = 0.0;
    for (double d = 1.0; d <= 6.0; d += 0.5) {
        const double md = moments(n01, d, 0, rng).abs_central_moment;
        const double root = std::pow(md, 1.0 / d);
        CHECK(root >= prev - 1e-12);
        prev = root;
    }
}

TEST_CASE("moments: exponential goes through Monte Carlo with stderr") {
    RngStream rng(5);
    const DistributionSpec ex = DistributionSpec::exponential(2.0);
    const MomentReport r = moments(ex, 2.0, 200000, rng);
    CHECK(r.method == MomentReport::Method::monte_carlo);
    CHECK(r.mc_stderr > 0.0);
    // mu_2 is the variance = 1/rate^2
    CHECK(std::abs(r.abs_central_moment - 0.25) < 4.0 * r.mc_stderr);
    CHECK(r.standardized.value() ==
          doctest::Approx(r.abs_central_moment / 0.25).epsilon(1e-12));
}

TEST_CASE("moments: stable analytic route and nonexistence") {
    RngStream rng(7);
    const DistributionSpec st = DistributionSpec::stable_symmetric(1.5, 1.0);
    CHECK_THROWS_AS(moments(st, 1.5, 0, rng), DomainError);
    CHECK_THROWS_AS(moments(st, 2.0, 0, rng), DomainError);
    const MomentReport r = moments(st, 1.0, 0, rng);
    CHECK(!r.stddev.has_value());
    CHECK(!r.standardized.has_value());
    // (2/pi) Gamma(1/3), cross-checked against the sampler
    CHECK(r.abs_central_moment == doctest::Approx(1.705465240152388).epsilon(1e-12));
    RngStream srng(23);
    const std::vector<double> xs = sample(st, srng, 1000000);
    double mean = 0.0;
    for (double x : xs) mean += std::abs(x);
    mean /= static_cast<double>(xs.size());
    CHECK(std::abs(mean - r.abs_central_moment) / r.abs_central_moment < 0.03);
}

TEST_CASE("gamma_alpha: fixed and limiting values") {
    CHECK(gamma_alpha(1.5) == doctest::Approx(1.4931286956295808).epsilon(1e-12));
    CHECK(gamma_alpha(2.0 - 1e-9) ==
          doctest::Approx(4.0 / std::sqrt(std::numbers::pi)).epsilon(1e-6));
    CHECK(gamma_alpha(1.001) < 0.005);  // pole of Gamma at 0 forces the limit
    CHECK_THROWS_AS(gamma_alpha(1.0), DomainError);
    CHECK_THROWS_AS(gamma_alpha(2.0), DomainError);
}

TEST_CASE("sample: rejects bad counts") {
    RngStream rng(1);
    CHECK_THROWS_AS(sample(DistributionSpec::rademacher(), rng, 0), DomainError);
}
