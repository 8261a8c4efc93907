#include "rvnorm/distributions.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

#include "rvnorm/errors.hpp"
#include "rvnorm/scalar_math.hpp"

namespace rvnorm {

namespace {

constexpr double kStableAlphaMin = 1.01;
constexpr double kStableAlphaMax = 1.99;

std::string fmt(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_number(const std::string& s) {
    double v = 0.0;
    const char* begin = s.data();
    const char* end = s.data() + s.size();
    const auto res = std::from_chars(begin, end, v);
    if (res.ec != std::errc{} || res.ptr != end) {
        throw ParseError("distribution grammar: bad number '" + s + "'");
    }
    return v;
}

// One draw from S(alpha, 1), Chambers-Mallows-Stuck specialised to beta = 0.
double standard_stable(double alpha, RngStream& rng) {
    const double v = std::numbers::pi * (rng.uniform() - 0.5);
    const double w = -std::log(rng.uniform());
    return std::sin(alpha * v) / std::pow(std::cos(v), 1.0 / alpha) *
           std::pow(std::cos((1.0 - alpha) * v) / w, (1.0 - alpha) / alpha);
}

} // namespace

DistributionSpec DistributionSpec::normal(double mu, double sigma) {
    if (!(sigma > 0.0)) {
        throw DomainError("normal requires sigma > 0, got " + fmt(sigma));
    }
    return {Family::normal, mu, sigma};
}

DistributionSpec DistributionSpec::uniform(double a, double b) {
    if (!(a < b)) {
        throw DomainError("uniform requires a < b");
    }
    return {Family::uniform, a, b};
}

DistributionSpec DistributionSpec::rademacher() {
    return {Family::rademacher, 0.0, 0.0};
}

DistributionSpec DistributionSpec::exponential(double rate) {
    if (!(rate > 0.0)) {
        throw DomainError("exponential requires rate > 0, got " + fmt(rate));
    }
    return {Family::exponential, rate, 0.0};
}

DistributionSpec DistributionSpec::stable_symmetric(double alpha, double scale) {
    if (!(alpha >= kStableAlphaMin && alpha <= kStableAlphaMax)) {
        throw DomainError("stable requires alpha in [1.01, 1.99], got " +
                          fmt(alpha));
    }
    if (!(scale > 0.0)) {
        throw DomainError("stable requires scale > 0, got " + fmt(scale));
    }
    return {Family::stable_symmetric, alpha, scale};
}

DistributionSpec DistributionSpec::parse(const std::string& text) {
    const auto colon = text.find(':');
    const std::string name = text.substr(0, colon);
    std::vector<std::string> params;
    if (colon != std::string::npos) {
        std::string rest = text.substr(colon + 1);
        std::size_t pos = 0;
        while (true) {
            const auto comma = rest.find(',', pos);
            params.push_back(rest.substr(pos, comma - pos));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    auto want = [&](std::size_t k) {
        if (params.size() != k) {
            throw ParseError("distribution grammar: '" + name + "' takes " +
                             std::to_string(k) + " parameter(s)");
        }
    };
    if (name == "normal") {
        want(2);
        return normal(parse_number(params[0]), parse_number(params[1]));
    }
    if (name == "uniform") {
        want(2);
        return uniform(parse_number(params[0]), parse_number(params[1]));
    }
    if (name == "rademacher") {
        want(0);
        return rademacher();
    }
    if (name == "exponential") {
        want(1);
        return exponential(parse_number(params[0]));
    }
    if (name == "stable") {
        if (params.size() == 1) {
            const double alpha = parse_number(params[0]);
            if (!(alpha > 1.0 && alpha < 2.0)) {
                throw DomainError("stable requires alpha in (1, 2), got " +
                                  fmt(alpha));
            }
            return stable_symmetric(alpha, gamma_alpha(alpha));
        }
        if (params.size() == 2) {
            return stable_symmetric(parse_number(params[0]),
                                    parse_number(params[1]));
        }
        throw ParseError("distribution grammar: 'stable' takes 1 or 2 parameters");
    }
    throw ParseError("distribution grammar: unknown family '" + name + "'");
}

std::string DistributionSpec::to_string() const {
    switch (family_) {
        case Family::normal: return "normal:" + fmt(p1_) + "," + fmt(p2_);
        case Family::uniform: return "uniform:" + fmt(p1_) + "," + fmt(p2_);
        case Family::rademacher: return "rademacher";
        case Family::exponential: return "exponential:" + fmt(p1_);
        case Family::stable_symmetric:
            return "stable:" + fmt(p1_) + "," + fmt(p2_);
    }
    return "?";
}

bool DistributionSpec::has_moment(double d) const {
    if (family_ == Family::stable_symmetric) return d < p1_;
    return true;
}

bool DistributionSpec::has_finite_variance() const {
    return family_ != Family::stable_symmetric;
}

void DistributionSpec::require_moment(double d) const {
    if (!has_moment(d)) {
        throw DomainError("stable requires d < alpha: E|X|^d is infinite for d=" +
                          fmt(d) + ", alpha=" + fmt(p1_));
    }
}

double DistributionSpec::mean() const {
    switch (family_) {
        case Family::normal: return p1_;
        case Family::uniform: return 0.5 * (p1_ + p2_);
        case Family::rademacher: return 0.0;
        case Family::exponential: return 1.0 / p1_;
        case Family::stable_symmetric: return 0.0;
    }
    return 0.0;
}

double DistributionSpec::stddev() const {
    switch (family_) {
        case Family::normal: return p2_;
        case Family::uniform: return (p2_ - p1_) / std::sqrt(12.0);
        case Family::rademacher: return 1.0;
        case Family::exponential: return 1.0 / p1_;
        case Family::stable_symmetric:
            throw DomainError("stable has infinite variance");
    }
    return 0.0;
}

void fill_sample(const DistributionSpec& spec, RngStream& rng,
                 std::span<double> out) {
    const std::size_t n = out.size();
    switch (spec.family()) {
        case Family::normal: {
            const double mu = spec.p1();
            const double sigma = spec.p2();
            std::size_t i = 0;
            for (; i + 1 < n; i += 2) {
                double z0, z1;
                rng.normal_pair(z0, z1);
                out[i] = mu + sigma * z0;
                out[i + 1] = mu + sigma * z1;
            }
            if (i < n) out[i] = mu + sigma * rng.normal();
            return;
        }
        case Family::uniform: {
            for (std::size_t i = 0; i < n; ++i)
                out[i] = rng.uniform(spec.p1(), spec.p2());
            return;
        }
        case Family::rademacher: {
            for (std::size_t i = 0; i < n; ++i) out[i] = rng.rademacher();
            return;
        }
        case Family::exponential: {
            for (std::size_t i = 0; i < n; ++i)
                out[i] = rng.exponential(spec.p1());
            return;
        }
        case Family::stable_symmetric: {
            const double alpha = spec.p1();
            const double scale = spec.p2();
            for (std::size_t i = 0; i < n; ++i)
                out[i] = scale * standard_stable(alpha, rng);
            return;
        }
    }
}

std::vector<double> sample(const DistributionSpec& spec, RngStream& rng,
                           std::int64_t count) {
    if (count < 1) throw DomainError("sample: count must be >= 1");
    std::vector<double> out(static_cast<std::size_t>(count));
    fill_sample(spec, rng, out);
    return out;
}

MomentReport moments(const DistributionSpec& spec, double d,
                     std::int64_t mc_budget, RngStream& rng) {
    if (!(d >= 1.0)) throw DomainError("moments: requires d >= 1");
    spec.require_moment(d);

    MomentReport r;
    r.mean = spec.mean();
    switch (spec.family()) {
        case Family::normal: {
            r.stddev = spec.stddev();
            r.standardized = std::pow(2.0, d / 2.0) * gamma_fn((d + 1.0) / 2.0) /
                             std::sqrt(std::numbers::pi);
            r.abs_central_moment = *r.standardized * std::pow(*r.stddev, d);
            return r;
        }
        case Family::rademacher: {
            r.stddev = 1.0;
            r.abs_central_moment = 1.0;
            r.standardized = 1.0;
            return r;
        }
        case Family::uniform: {
            r.stddev = spec.stddev();
            r.standardized = std::pow(3.0, d / 2.0) / (d + 1.0);
            r.abs_central_moment = *r.standardized * std::pow(*r.stddev, d);
            return r;
        }
        case Family::stable_symmetric: {
            // mean 0 by symmetry; variance infinite, so no standardized form
            r.abs_central_moment = stable_abs_moment(spec.p1(), spec.p2(), d);
            return r;
        }
        case Family::exponential: {
            r.stddev = spec.stddev();
            if (mc_budget < 2) {
                throw DomainError("moments: Monte Carlo route needs mc_budget >= 2");
            }
            r.method = MomentReport::Method::monte_carlo;
            r.mc_samples = mc_budget;
            const double mu = r.mean;
            double acc = 0.0, acc2 = 0.0;
            std::vector<double> block(4096);
            std::int64_t left = mc_budget;
            while (left > 0) {
                const std::size_t take = static_cast<std::size_t>(
                    std::min<std::int64_t>(left, static_cast<std::int64_t>(block.size())));
                fill_sample(spec, rng, std::span<double>(block.data(), take));
                for (std::size_t i = 0; i < take; ++i) {
                    const double v = std::pow(std::abs(block[i] - mu), d);
                    acc += v;
                    acc2 += v * v;
                }
                left -= static_cast<std::int64_t>(take);
            }
            const double n = static_cast<double>(mc_budget);
            const double mean = acc / n;
            const double var = std::max(0.0, acc2 / n - mean * mean);
            r.abs_central_moment = mean;
            r.mc_stderr = std::sqrt(var / n);
            r.standardized = mean / std::pow(*r.stddev, d);
            return r;
        }
    }
    throw DomainError("moments: unreachable family");
}

double gamma_alpha(double alpha) {
    if (!(alpha > 1.0 && alpha < 2.0)) {
        throw DomainError("gamma_alpha: alpha must lie in (1, 2)");
    }
    return 4.0 / gamma_fn((alpha - 1.0) / alpha);
}

double stable_abs_moment(double alpha, double scale, double p) {
    if (!(p > 0.0 && p < alpha)) {
        throw DomainError("stable_abs_moment: needs 0 < p < alpha");
    }
    // E|X|^p for the symmetric alpha-stable law with cf exp(-|scale x|^alpha)
    return std::pow(scale, p) * std::pow(2.0, p) * gamma_fn((p + 1.0) / 2.0) *
           gamma_fn(1.0 - p / alpha) /
           (gamma_fn(1.0 - p / 2.0) * std::sqrt(std::numbers::pi));
}

} // namespace rvnorm
