#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rvnorm/rng.hpp"

namespace rvnorm {

enum class Family { normal, uniform, rademacher, exponential, stable_symmetric };

/// A parametrized scalar distribution: the law of the iid entries X_i.
/// Validated nondegenerate at construction. The stable family is restricted
/// to alpha in [1.01, 1.99] so the Chambers-Mallows-Stuck sampler stays clear
/// of the removable singularity at alpha = 1.
class DistributionSpec {
public:
    static DistributionSpec normal(double mu, double sigma);
    static DistributionSpec uniform(double a, double b);
    static DistributionSpec rademacher();
    static DistributionSpec exponential(double rate);
    static DistributionSpec stable_symmetric(double alpha, double scale);

    /// Grammar: "normal:MU,SIGMA", "uniform:A,B", "rademacher",
    /// "exponential:RATE", "stable:ALPHA[,SCALE]". When SCALE is omitted the
    /// stable family defaults to the canonical scale gamma_alpha(ALPHA).
    static DistributionSpec parse(const std::string& text);
    std::string to_string() const;

    Family family() const { return family_; }
    double p1() const { return p1_; }  // mu | a | rate | alpha
    double p2() const { return p2_; }  // sigma | b | scale

    /// True when E|X|^d is finite (stable: d < alpha, everything else: always).
    bool has_moment(double d) const;
    bool has_finite_variance() const;
    /// Raises DomainError naming the violated condition when has_moment(d)
    /// fails.
    void require_moment(double d) const;

    double mean() const;    // defined for every family (stable is symmetric)
    double stddev() const;  // DomainError for the stable family

private:
    DistributionSpec(Family f, double p1, double p2) : family_(f), p1_(p1), p2_(p2) {}
    Family family_;
    double p1_ = 0.0;
    double p2_ = 0.0;
};

/// Absolute central moment report: mu_d = E|X - mu|^d and its standardized
/// version mu_d / sigma^d. The standardized fields are absent for the stable
/// family (infinite variance).
struct MomentReport {
    enum class Method { analytic, monte_carlo };
    double mean = 0.0;
    std::optional<double> stddev;
    double abs_central_moment = 0.0;
    std::optional<double> standardized;
    Method method = Method::analytic;
    std::int64_t mc_samples = 0;
    double mc_stderr = 0.0;
};

/// Fills `out` with iid draws. Deterministic for a fixed (spec, stream).
void fill_sample(const DistributionSpec& spec, RngStream& rng,
                 std::span<double> out);

std::vector<double> sample(const DistributionSpec& spec, RngStream& rng,
                           std::int64_t count);

/// Moment report for E|X - mu|^d. Closed forms for normal, rademacher,
/// uniform and (via the characteristic-function route) the stable family;
/// Monte Carlo with reported standard error otherwise. `rng` is consumed
/// only on the Monte Carlo path.
MomentReport moments(const DistributionSpec& spec, double d,
                     std::int64_t mc_budget, RngStream& rng);

/// Canonical stable scale gamma_alpha = 4 / Gamma((alpha-1)/alpha),
/// alpha in (1, 2).
double gamma_alpha(double alpha);

/// Analytic E|X|^p for X ~ S(alpha, scale), valid for 0 < p < alpha.
double stable_abs_moment(double alpha, double scale, double p);

} // namespace rvnorm
