#pragma once

#include <cstdint>

#include "rvnorm/distributions.hpp"
#include "rvnorm/matrix.hpp"

namespace rvnorm {

/// Parameters for the Monte Carlo norm estimators. `quad_nodes` counts the
/// uniform trapezoid nodes on [0, pi) used by the complexified norm (the
/// integrand is pi-periodic); each node consumes `mc_samples` draws from its
/// own (seed, node) substream.
struct NormParams {
    double d = 2.0;
    std::int64_t mc_samples = 200000;
    int quad_nodes = 64;
    std::uint64_t seed = 0;

    /// Engine defaults: 2e5 samples per node, 64 nodes, doubled to 128 for
    /// d < 2 where the t-integrand loses smoothness.
    static NormParams defaults_for(double d, std::uint64_t seed);
};

enum class NormMethod { monte_carlo, closed_form_d2, closed_form_stable_d1 };

struct NormEstimate {
    double value = 0.0;
    double stderr_value = 0.0;  // propagated MC standard error; 0 for closed forms
    NormParams params;
    NormMethod method = NormMethod::monte_carlo;
};

/// Mean and standard error of a Monte Carlo average.
struct MomentEstimate {
    double mean = 0.0;
    double stderr_mean = 0.0;
};

/// MC estimate of E|<X, lambda>|^d on the given spectrum: `count` iid vectors
/// X with entries from `spec`, drawn from `stream`.
MomentEstimate inner_abs_moment(const Spectrum& lambda,
                                const DistributionSpec& spec, double d,
                                std::int64_t count, RngStream stream);

/// ||A||_{X,d} = (E|<X, lambda(A)>|^d / Gamma(d+1))^{1/d} by Monte Carlo,
/// with the standard error pushed through the d-th root by the delta method.
NormEstimate hermitian_norm(const HermitianMatrix& a,
                            const DistributionSpec& spec, const NormParams& p);

/// The complexified norm on all of M_n: the d-th powers of the Hermitian norm
/// of e^{it}Z + e^{-it}Z* averaged over t by the periodic trapezoid rule and
/// normalized by the central binomial coefficient. Node estimates use
/// independent substreams so quadrature and MC errors compose additively.
NormEstimate full_norm(const ComplexMatrix& z, const DistributionSpec& spec,
                       const NormParams& p);

/// Exact d = 2 evaluation: |||Z|||^2 = sigma^2 ||Z||_F^2 / 2
///                                   + mu^2 |tr Z|^2 / 2.
/// Rejects the stable family (no second moment).
NormEstimate full_norm_closed_d2(const ComplexMatrix& z,
                                 const DistributionSpec& spec);

/// Closed form for d = 1 with X ~ S(alpha, gamma_alpha):
/// ||A||_{X,1} = (8/pi) ||A||_{S_alpha}.
NormEstimate stable_norm_d1(const HermitianMatrix& a, double alpha);

namespace stream_id {
// Substream tags; node j of the quadrature uses kQuadNodeBase + j.
inline constexpr std::uint64_t kHermitianNorm = 0x10000000ull;
inline constexpr std::uint64_t kQuadNodeBase = 0x20000000ull;
} // namespace stream_id

} // namespace rvnorm
