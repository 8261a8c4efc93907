#include "rvnorm/bounds.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <vector>

#include "rvnorm/errors.hpp"
#include "rvnorm/parallel.hpp"
#include "rvnorm/scalar_math.hpp"

namespace rvnorm {

namespace {

constexpr double kClosedFormTol = 1e-10;

std::string fmt(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void finish(BoundCertificate& c) {
    bool ok = true;
    if (c.lower) {
        c.slack_lower = c.measured - *c.lower;
        ok = ok && (*c.lower <= c.measured + c.tolerance);
    }
    if (c.upper) {
        c.slack_upper = *c.upper - c.measured;
        ok = ok && (c.measured <= *c.upper + c.tolerance);
    }
    c.pass = ok;
}

std::string ctx(const std::map<std::string, std::string>& m,
                const std::string& key) {
    const auto it = m.find(key);
    return it == m.end() ? std::string() : it->second;
}

// gamma((d+1)/2)^2, the recurring factor in every comparison constant
double gamma_half_sq(double d) {
    const double g = gamma_fn((d + 1.0) / 2.0);
    return g * g;
}

// Prop 4.2 lower coefficient on the d-th power scale
double lower_power_coefficient(double d, double epsilon, double b2e,
                               double mu2e) {
    return std::pow(2.0, -d / 2.0 - 1.0) * std::numbers::pi /
           (std::pow(std::pow(2.0, 1.0 + epsilon) * b2e * mu2e,
                     (2.0 - d) / epsilon) *
            gamma_half_sq(d));
}

} // namespace

MZConstants mz_constants(double d) {
    if (!(d >= 2.0)) {
        throw DomainError("mz_constants: stated for d >= 2, got " + fmt(d));
    }
    return {std::pow(2.0, -d),
            std::pow(8.0, d / 2.0) * gamma_fn((d + 1.0) / 2.0) /
                std::sqrt(std::numbers::pi)};
}

std::string BoundCertificate::csv_header() {
    return "name,d,n,spec,seed,lower,measured,upper,pass";
}

std::string BoundCertificate::csv_row() const {
    std::string row = name;
    row += ',' + ctx(context, "d");
    row += ',' + ctx(context, "n");
    row += ',' + ctx(context, "spec");
    row += ',' + ctx(context, "seed");
    row += ',' + (lower ? fmt(*lower) : std::string());
    row += ',' + fmt(measured);
    row += ',' + (upper ? fmt(*upper) : std::string());
    row += ',';
    row += pass ? "1" : "0";
    return row;
}

BoundCertificate check_frobenius_sandwich(const HermitianMatrix& a,
                                          const DistributionSpec& spec,
                                          double d, const NormParams& p) {
    if (spec.mean() != 0.0) {
        throw DomainError("frobenius sandwich requires E[X] = 0");
    }
    const MZConstants mz = mz_constants(d);
    const double f = frobenius_norm(a);
    const double fd = std::pow(f, d);
    const double sigma = spec.stddev();

    RngStream moment_rng(p.seed, 0x4d5a0001ull);
    const MomentReport mom = moments(spec, d, p.mc_samples, moment_rng);

    const Spectrum lambda = eigenvalues(a);
    const MomentEstimate measured =
        inner_abs_moment(lambda, spec, d, p.mc_samples,
                         RngStream(p.seed, 0x4d5a0000ull));

    BoundCertificate c;
    c.name = "mz_frobenius_sandwich";
    c.lower = mz.a_d * std::pow(sigma, d) * fd;
    c.upper = mz.b_d * mom.abs_central_moment * fd;
    c.measured = measured.mean;
    double combined = measured.stderr_mean;
    if (mom.method == MomentReport::Method::monte_carlo) {
        combined += mz.b_d * mom.mc_stderr * fd;
    }
    c.tolerance = 3.0 * combined;
    c.context = {{"d", fmt(d)},
                 {"n", fmt(a.dim())},
                 {"spec", spec.to_string()},
                 {"seed", fmt(static_cast<double>(p.seed))},
                 {"stderr", fmt(measured.stderr_mean)}};
    finish(c);
    return c;
}

double d2_comparison_coefficient(double d) {
    if (!(d >= 1.0)) throw DomainError("d2_comparison_coefficient: d >= 1");
    return std::pow(
        std::numbers::pi / (std::pow(2.0, d) * gamma_half_sq(d)), 1.0 / d);
}

BoundCertificate check_d2_comparison(const ComplexMatrix& z,
                                     const DistributionSpec& spec, double d,
                                     const NormParams& p) {
    if (!spec.has_finite_variance()) {
        throw DomainError("d<->2 comparison needs a finite second moment");
    }
    spec.require_moment(d);
    const double coeff = d2_comparison_coefficient(d);
    const double ref = coeff * full_norm_closed_d2(z, spec).value;

    BoundCertificate c;
    c.name = "d2_comparison";
    c.context = {{"d", fmt(d)},
                 {"n", fmt(z.dim())},
                 {"spec", spec.to_string()},
                 {"seed", fmt(static_cast<double>(p.seed))},
                 {"coefficient", fmt(coeff)}};
    if (d == 2.0) {
        c.measured = full_norm_closed_d2(z, spec).value;
        c.lower = ref;
        c.upper = ref;
        c.tolerance = kClosedFormTol * (1.0 + std::abs(c.measured));
        finish(c);
        return c;
    }
    const NormEstimate est = full_norm(z, spec, p);
    c.measured = est.value;
    c.tolerance = 3.0 * est.stderr_value;
    c.context["stderr"] = fmt(est.stderr_value);
    if (d > 2.0) {
        c.lower = ref;
    } else {
        c.upper = ref;
    }
    finish(c);
    return c;
}

BoundCertificate check_upper_d_ge2(const ComplexMatrix& z,
                                   const DistributionSpec& spec, double d,
                                   const NormParams& p) {
    if (!(d >= 2.0)) throw DomainError("upper comparison is stated for d >= 2");
    const MZConstants mz = mz_constants(d);
    RngStream moment_rng(p.seed, 0x4d5a0002ull);
    const MomentReport mom = moments(spec, d, p.mc_samples, moment_rng);
    if (!mom.standardized) {
        throw DomainError("upper comparison needs the standardized moment");
    }
    const double norm2 = full_norm_closed_d2(z, spec).value;
    const double coeff =
        std::sqrt(2.0) * std::pow(std::numbers::pi * mz.b_d * *mom.standardized /
                                      (2.0 * gamma_half_sq(d)),
                                  1.0 / d);

    BoundCertificate c;
    c.name = "upper_d_ge2";
    c.upper = coeff * norm2;
    c.context = {{"d", fmt(d)},
                 {"n", fmt(z.dim())},
                 {"spec", spec.to_string()},
                 {"seed", fmt(static_cast<double>(p.seed))}};
    if (d == 2.0) {
        c.measured = norm2;
        c.tolerance = kClosedFormTol * (1.0 + std::abs(c.measured));
    } else {
        const NormEstimate est = full_norm(z, spec, p);
        c.measured = est.value;
        double combined = est.stderr_value;
        if (mom.method == MomentReport::Method::monte_carlo &&
            *mom.standardized > 0.0) {
            // push the moment's stderr through the (1/d)-power of the bound
            const double rel = mom.mc_stderr / mom.abs_central_moment;
            combined += *c.upper * rel / d;
        }
        c.tolerance = 3.0 * combined;
        c.context["stderr"] = fmt(est.stderr_value);
    }
    finish(c);
    return c;
}

BoundCertificate check_lower_d_le2(const ComplexMatrix& z,
                                   const DistributionSpec& spec, double d,
                                   double epsilon, const NormParams& p) {
    if (!(d >= 1.0 && d <= 2.0)) {
        throw DomainError("lower comparison is stated for 1 <= d <= 2");
    }
    if (!(epsilon > 0.0)) throw DomainError("epsilon must be positive");
    spec.require_moment(2.0 + epsilon);
    const MZConstants mz = mz_constants(2.0 + epsilon);
    RngStream moment_rng(p.seed, 0x4d5a0003ull);
    const MomentReport mom = moments(spec, 2.0 + epsilon, p.mc_samples, moment_rng);
    if (!mom.standardized) {
        throw DomainError("lower comparison needs the standardized moment");
    }
    const double coeff =
        lower_power_coefficient(d, epsilon, mz.b_d, *mom.standardized);
    const double norm2 = full_norm_closed_d2(z, spec).value;

    BoundCertificate c;
    c.name = "lower_d_le2";
    c.lower = coeff * std::pow(norm2, d);
    c.context = {{"d", fmt(d)},
                 {"n", fmt(z.dim())},
                 {"spec", spec.to_string()},
                 {"seed", fmt(static_cast<double>(p.seed))},
                 {"epsilon", fmt(epsilon)},
                 {"coefficient", fmt(coeff)}};
    if (d == 2.0) {
        c.measured = std::pow(norm2, d);
        c.tolerance = kClosedFormTol * (1.0 + std::abs(c.measured));
    } else {
        const NormEstimate est = full_norm(z, spec, p);
        c.measured = std::pow(est.value, d);
        // inverse of the delta step: stderr on the power scale
        double combined =
            est.stderr_value * d * std::pow(est.value, d - 1.0);
        if (mom.method == MomentReport::Method::monte_carlo &&
            *mom.standardized > 0.0) {
            const double rel = mom.mc_stderr / mom.abs_central_moment;
            combined += *c.lower * rel * (2.0 - d) / epsilon;
        }
        c.tolerance = 3.0 * combined;
        c.context["stderr"] = fmt(est.stderr_value);
    }
    finish(c);
    return c;
}

double gamma_d2(const DistributionSpec& spec) {
    const double sigma = spec.stddev();
    const double mu = spec.mean();
    if (!(sigma > 0.0)) throw DomainError("gamma_d2: degenerate distribution");
    return std::sqrt(2.0 * sigma * sigma + 2.0 * mu * mu) / (sigma * sigma);
}

double gamma_d(const DistributionSpec& spec, double d, double epsilon) {
    if (!(d >= 1.0)) throw DomainError("gamma_d: requires d >= 1");
    if (d >= 2.0) {
        const MZConstants mz = mz_constants(d);
        RngStream rng(0, 0x4d5a0004ull);
        const MomentReport mom = moments(spec, d, 200000, rng);
        if (!mom.standardized) {
            throw DomainError("gamma_d needs the standardized moment");
        }
        return 2.0 * std::sqrt(2.0) / std::numbers::pi *
               std::pow(2.0 * std::numbers::pi * mz.b_d * *mom.standardized *
                            gamma_half_sq(d),
                        1.0 / d);
    }
    if (!(epsilon > 0.0)) {
        throw DomainError("gamma_d: the 1 <= d < 2 branch needs epsilon > 0");
    }
    spec.require_moment(2.0 + epsilon);
    const MZConstants mz = mz_constants(2.0 + epsilon);
    RngStream rng(0, 0x4d5a0005ull);
    const MomentReport mom = moments(spec, 2.0 + epsilon, 200000, rng);
    if (!mom.standardized) {
        throw DomainError("gamma_d needs the standardized moment");
    }
    const double c_m = std::pow(
        lower_power_coefficient(d, epsilon, mz.b_d, *mom.standardized), 1.0 / d);
    const double c_big = std::sqrt(std::numbers::pi / 2.0) *
                         std::pow(2.0 * gamma_half_sq(d), -1.0 / d);
    return c_big / (c_m * c_m);
}

bool submult_criterion_d2(const DistributionSpec& spec) {
    const double sigma2 = spec.stddev() * spec.stddev();
    const double mu = spec.mean();
    return sigma2 >= 1.0 + std::sqrt(1.0 + 2.0 * mu * mu);
}

SharpnessRatio sharpness_ratio(const DistributionSpec& spec, int n) {
    if (n < 2) throw DomainError("sharpness_ratio: requires n >= 2");
    const double g = gamma_d2(spec);
    const ComplexMatrix a = ones_minus_identity(n).matrix();
    // A_n^2 = (n-2) A_n + (n-1) I, assembled symbolically
    ComplexMatrix a2(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a2.at(i, j) = (i == j) ? Complex{static_cast<double>(n - 1), 0.0}
                                   : Complex{static_cast<double>(n - 2), 0.0};

    const double na = g * full_norm_closed_d2(a, spec).value;
    const double na2 = g * full_norm_closed_d2(a2, spec).value;

    const double sigma2 = spec.stddev() * spec.stddev();
    const double mu = spec.mean();
    const double frac = sigma2 / (sigma2 + mu * mu);
    const double analytic = std::sqrt(
        1.0 - frac * (2.0 * n - 3.0) / (static_cast<double>(n) * (n - 1.0)));
    return {na2 / (na * na), analytic};
}

namespace {

double norm_value(const ComplexMatrix& z, const DistributionSpec& spec,
                  double d, const NormParams& p) {
    if (d == 2.0) return full_norm_closed_d2(z, spec).value;
    NormParams q = p;
    q.d = d;
    return full_norm(z, spec, q).value;
}

ComplexMatrix scaled(const ComplexMatrix& z, double s) {
    return Complex{s, 0.0} * z;
}

} // namespace

double estimate_c(const DistributionSpec& spec, double d, int n,
                  const NormParams& p, const SearchParams& search) {
    if (n < 1) throw DomainError("estimate_c: requires n >= 1");
    if (search.restarts < 1 || search.iters < 0) {
        throw DomainError("estimate_c: bad search parameters");
    }
    spec.require_moment(d);

    NormParams eval = p;
    eval.d = d;
    eval.seed = p.seed + 1;  // fresh substreams for the final re-measurement

    std::vector<double> per_restart(static_cast<std::size_t>(search.restarts));
    parallel_for(search.restarts, [&](int r) {
        RngStream rng(p.seed, 0x53454100ull + static_cast<std::uint64_t>(r));
        ComplexMatrix a(n), b(n);
        if (r == 0 && n >= 2) {
            // deterministic witness: the J_n - I_n pair from the sharpness
            // remark, which approaches the optimal ratio as n grows
            a = ones_minus_identity(n).matrix();
            b = a;
        } else {
            a = random_complex(n, rng);
            b = random_complex(n, rng);
        }
        a = scaled(a, 1.0 / norm_value(a, spec, d, p));
        b = scaled(b, 1.0 / norm_value(b, spec, d, p));
        double best = norm_value(matmul(a, b), spec, d, p);
        double step = search.step;
        for (int it = 0; it < search.iters; ++it) {
            ComplexMatrix ga = random_complex(n, rng);
            ComplexMatrix gb = random_complex(n, rng);
            ComplexMatrix a2 = a + scaled(ga, step);
            ComplexMatrix b2 = b + scaled(gb, step);
            a2 = scaled(a2, 1.0 / norm_value(a2, spec, d, p));
            b2 = scaled(b2, 1.0 / norm_value(b2, spec, d, p));
            const double val = norm_value(matmul(a2, b2), spec, d, p);
            if (val > best) {
                best = val;
                a = a2;
                b = b2;
            } else {
                step *= 0.9;
            }
        }
        // report the held-out measurement of the best pair, not the
        // noise-selected maximum
        per_restart[static_cast<std::size_t>(r)] =
            norm_value(matmul(a, b), spec, d, eval);
    });
    double out = 0.0;
    for (double v : per_restart) out = std::max(out, v);
    return out;
}

} // namespace rvnorm
