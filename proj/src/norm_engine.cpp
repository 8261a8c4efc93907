#include "rvnorm/norm_engine.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "rvnorm/errors.hpp"
#include "rvnorm/parallel.hpp"
#include "rvnorm/scalar_math.hpp"

namespace rvnorm {

namespace {

void validate(const NormParams& p) {
    if (!(p.d >= 1.0)) {
        throw DomainError("norm: requires d >= 1, got " + std::to_string(p.d));
    }
    if (p.mc_samples < 1) throw DomainError("norm: mc_samples must be >= 1");
    if (p.quad_nodes < 8 || p.quad_nodes % 2 != 0) {
        throw DomainError("norm: quad_nodes must be even and >= 8");
    }
}

// |y|^d with cheap paths for the d values the engine meets constantly
double abs_pow(double y, double d) {
    const double a = std::abs(y);
    if (d == 2.0) return a * a;
    if (d == 1.0) return a;
    return std::pow(a, d);
}

// (mean / Gamma(d+1))^{1/d} with the delta-method standard error
NormEstimate root_of_power_mean(double mean, double stderr_mean, double d,
                                const NormParams& p) {
    NormEstimate e;
    e.params = p;
    e.method = NormMethod::monte_carlo;
    const double power = mean / gamma_fn(d + 1.0);
    if (power <= 0.0) {
        e.value = 0.0;
        e.stderr_value = 0.0;
        return e;
    }
    e.value = std::pow(power, 1.0 / d);
    e.stderr_value = stderr_mean / gamma_fn(d + 1.0) * e.value / (d * power);
    return e;
}

} // namespace

NormParams NormParams::defaults_for(double d, std::uint64_t seed) {
    NormParams p;
    p.d = d;
    p.seed = seed;
    p.quad_nodes = d < 2.0 ? 128 : 64;
    return p;
}

MomentEstimate inner_abs_moment(const Spectrum& lambda,
                                const DistributionSpec& spec, double d,
                                std::int64_t count, RngStream stream) {
    spec.require_moment(d);
    const std::size_t n = lambda.values.size();
    std::vector<double> x(n);
    double acc = 0.0;
    double acc2 = 0.0;
    for (std::int64_t s = 0; s < count; ++s) {
        fill_sample(spec, stream, x);
        double dot = 0.0;
        for (std::size_t i = 0; i < n; ++i) dot += lambda.values[i] * x[i];
        const double v = abs_pow(dot, d);
        acc += v;
        acc2 += v * v;
    }
    const double m = acc / static_cast<double>(count);
    const double var =
        std::max(0.0, acc2 / static_cast<double>(count) - m * m);
    return {m, std::sqrt(var / static_cast<double>(count))};
}

NormEstimate hermitian_norm(const HermitianMatrix& a,
                            const DistributionSpec& spec, const NormParams& p) {
    validate(p);
    spec.require_moment(p.d);
    const Spectrum lambda = eigenvalues(a);
    const MomentEstimate m =
        inner_abs_moment(lambda, spec, p.d, p.mc_samples,
                         RngStream(p.seed, stream_id::kHermitianNorm));
    return root_of_power_mean(m.mean, m.stderr_mean, p.d, p);
}

NormEstimate full_norm(const ComplexMatrix& z, const DistributionSpec& spec,
                       const NormParams& p) {
    validate(p);
    spec.require_moment(p.d);
    const int nodes = p.quad_nodes;
    std::vector<MomentEstimate> per_node(static_cast<std::size_t>(nodes));
    parallel_for(nodes, [&](int j) {
        const double t = std::numbers::pi * j / nodes;
        const HermitianMatrix h = rotate(z, t);
        const Spectrum lambda = eigenvalues(h);
        per_node[static_cast<std::size_t>(j)] = inner_abs_moment(
            lambda, spec, p.d, p.mc_samples,
            RngStream(p.seed, stream_id::kQuadNodeBase + static_cast<std::uint64_t>(j)));
    });
    // periodic trapezoid over [0, pi) doubled to [0, 2pi]: equal weights,
    // so the integral average is just the node average
    double mean = 0.0;
    double var = 0.0;
    for (const MomentEstimate& m : per_node) {
        mean += m.mean;
        var += m.stderr_mean * m.stderr_mean;
    }
    mean /= nodes;
    var /= static_cast<double>(nodes) * nodes;

    NormEstimate e;
    e.params = p;
    e.method = NormMethod::monte_carlo;
    const double power = mean / (central_binomial(p.d) * gamma_fn(p.d + 1.0));
    if (power <= 0.0) {
        e.value = 0.0;
        e.stderr_value = 0.0;
        return e;
    }
    e.value = std::pow(power, 1.0 / p.d);
    const double stderr_power =
        std::sqrt(var) / (central_binomial(p.d) * gamma_fn(p.d + 1.0));
    e.stderr_value = stderr_power * e.value / (p.d * power);
    return e;
}

NormEstimate full_norm_closed_d2(const ComplexMatrix& z,
                                 const DistributionSpec& spec) {
    if (!spec.has_finite_variance()) {
        throw DomainError(
            "closed d=2 form needs a finite second moment; the stable family "
            "has none");
    }
    const double sigma = spec.stddev();
    const double mu = spec.mean();
    const double f = frobenius_norm(z);
    const double tr = std::abs(trace(z));
    NormEstimate e;
    e.params.d = 2.0;
    e.params.mc_samples = 0;
    e.method = NormMethod::closed_form_d2;
    e.value = std::sqrt(0.5 * sigma * sigma * f * f + 0.5 * mu * mu * tr * tr);
    e.stderr_value = 0.0;
    return e;
}

NormEstimate stable_norm_d1(const HermitianMatrix& a, double alpha) {
    if (!(alpha > 1.0 && alpha < 2.0)) {
        throw DomainError("stable_norm_d1: alpha must lie in (1, 2)");
    }
    NormEstimate e;
    e.params.d = 1.0;
    e.params.mc_samples = 0;
    e.method = NormMethod::closed_form_stable_d1;
    e.value = 8.0 / std::numbers::pi * schatten_norm(a, alpha);
    e.stderr_value = 0.0;
    return e;
}

} // namespace rvnorm
