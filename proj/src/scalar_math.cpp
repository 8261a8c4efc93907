#include "rvnorm/scalar_math.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "rvnorm/errors.hpp"

namespace rvnorm {

namespace {

constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

double lanczos(double x) {
    // valid for x >= 0.5; g = 7
    x -= 1.0;
    double acc = kLanczos[0];
    for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (x + i);
    const double t = x + 7.5;
    return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, x + 0.5) *
           std::exp(-t) * acc;
}

} // namespace

double gamma_fn(double x) {
    if (!(x > 0.0)) {
        throw DomainError("gamma_fn: argument must be positive, got " +
                          std::to_string(x));
    }
    if (x < 0.5) return lanczos(x + 1.0) / x;
    return lanczos(x);
}

double central_binomial(double d) {
    if (!(d >= 1.0)) {
        throw DomainError("central_binomial: requires d >= 1, got " +
                          std::to_string(d));
    }
    const double half = gamma_fn(d / 2.0 + 1.0);
    return gamma_fn(d + 1.0) / (half * half);
}

double central_binomial_dup(double d) {
    if (!(d >= 1.0)) {
        throw DomainError("central_binomial_dup: requires d >= 1, got " +
                          std::to_string(d));
    }
    return std::pow(2.0, d) * gamma_fn((d + 1.0) / 2.0) /
           (std::sqrt(std::numbers::pi) * gamma_fn(d / 2.0 + 1.0));
}

double cos_power_mean(double d, int nodes) {
    if (!(d >= 1.0)) {
        throw DomainError("cos_power_mean: requires d >= 1, got " +
                          std::to_string(d));
    }
    if (nodes < 8) {
        throw DomainError("cos_power_mean: requires nodes >= 8, got " +
                          std::to_string(nodes));
    }
    const double h = 2.0 * std::numbers::pi / nodes;
    double sum = 0.0;
    for (int j = 0; j < nodes; ++j) {
        sum += std::pow(std::abs(std::cos(j * h)), d);
    }
    const double integral = h * sum;
    return std::pow(2.0, d) * integral /
           (2.0 * std::numbers::pi * central_binomial(d));
}

} // namespace rvnorm
