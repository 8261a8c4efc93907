#pragma once

#include <map>
#include <optional>
#include <string>

#include "rvnorm/distributions.hpp"
#include "rvnorm/matrix.hpp"
#include "rvnorm/norm_engine.hpp"

namespace rvnorm {

/// Marcinkiewicz-Zygmund constants for d >= 2:
///   A_d = 2^{-d},  B_d = 8^{d/2} Gamma((d+1)/2) / sqrt(pi).
struct MZConstants {
    double a_d;
    double b_d;
};

MZConstants mz_constants(double d);

/// One numerically certified inequality instance. `pass` allows a tolerance
/// of 3x the combined standard error when Monte Carlo enters the comparison
/// and 1e-10 * (1 + |measured|) for purely closed-form comparisons.
struct BoundCertificate {
    std::string name;
    std::optional<double> lower;
    double measured = 0.0;
    std::optional<double> upper;
    double slack_lower = 0.0;  // measured - lower (when lower present)
    double slack_upper = 0.0;  // upper - measured (when upper present)
    double tolerance = 0.0;
    bool pass = false;
    std::map<std::string, std::string> context;

    static std::string csv_header();
    std::string csv_row() const;  // name,d,n,spec,seed,lower,measured,upper,pass
};

/// E|<X, lambda>|^d sandwiched by the MZ constants and the Frobenius norm for
/// mean-zero entries:
///   A_d E[|X|^2]^{d/2} ||A||_F^d <= E|<X,lambda>|^d <= B_d E[|X|^d] ||A||_F^d.
BoundCertificate check_frobenius_sandwich(const HermitianMatrix& a,
                                          const DistributionSpec& spec,
                                          double d, const NormParams& p);

/// Comparison coefficient between |||.|||_d and |||.|||_2:
///   kappa(d) = (pi / (2^d Gamma((d+1)/2)^2))^{1/d},  kappa(2) = 1.
double d2_comparison_coefficient(double d);

/// kappa(d) |||Z|||_2 <= |||Z|||_d for d >= 2, reversed for 1 <= d <= 2,
/// equality at d = 2.
BoundCertificate check_d2_comparison(const ComplexMatrix& z,
                                     const DistributionSpec& spec, double d,
                                     const NormParams& p);

/// |||Z|||_d <= sqrt(2) (pi B_d mu~_d / (2 Gamma((d+1)/2)^2))^{1/d} |||Z|||_2
/// for d >= 2.
BoundCertificate check_upper_d_ge2(const ComplexMatrix& z,
                                   const DistributionSpec& spec, double d,
                                   const NormParams& p);

/// On the d-th power scale, for 1 <= d <= 2 and entries with a finite
/// (2+eps)-moment:
///   2^{-d/2-1} pi / ((2^{1+eps} B_{2+eps} mu~_{2+eps})^{(2-d)/eps}
///      Gamma((d+1)/2)^2) |||Z|||_2^d <= |||Z|||_d^d.
BoundCertificate check_lower_d_le2(const ComplexMatrix& z,
                                   const DistributionSpec& spec, double d,
                                   double epsilon, const NormParams& p);

/// gamma = sqrt(2 sigma^2 + 2 mu^2) / sigma^2; gamma |||.|||_2 is
/// submultiplicative for every n.
double gamma_d2(const DistributionSpec& spec);

/// Scalar making gamma_d |||.|||_d submultiplicative. d >= 2 branch:
///   gamma_d = (2 sqrt(2)/pi)(2 pi B_d mu~_d Gamma((d+1)/2)^2)^{1/d};
/// 1 <= d < 2 branch: C_M / C_m^2 with the coefficients comparing
/// |||.|||_d against |||.|||_2 (epsilon enters through B_{2+eps}, mu~_{2+eps}).
double gamma_d(const DistributionSpec& spec, double d, double epsilon);

/// |||.|||_2 is submultiplicative for every n iff
/// sigma^2 >= 1 + sqrt(1 + 2 mu^2).
bool submult_criterion_d2(const DistributionSpec& spec);

/// gamma |||A_n^2||| / (gamma |||A_n|||)^2 for A_n = J_n - I_n, both from the
/// closed d = 2 form (A_n^2 built symbolically as (n-2)A_n + (n-1)I), plus
/// the analytic radical it must match:
///   sqrt(1 - sigma^2/(sigma^2+mu^2) * (2n-3)/(n(n-1))).
struct SharpnessRatio {
    double computed;
    double analytic;
};
SharpnessRatio sharpness_ratio(const DistributionSpec& spec, int n);

struct SearchParams {
    int restarts = 8;
    int iters = 60;
    double step = 0.5;
};

/// Lower-bound estimate of c(N) = max{ |||AB||| : |||A||| = |||B||| = 1 } for
/// N = |||.|||_{X,d}: random restarts plus the J_n - I_n witness pair,
/// hill-climbing by entrywise Gaussian perturbation with a decaying step.
/// The best pair is re-measured on a fresh substream before reporting, so
/// Monte Carlo selection noise does not inflate the estimate. Deterministic
/// for a fixed p.seed.
double estimate_c(const DistributionSpec& spec, double d, int n,
                  const NormParams& p, const SearchParams& search);

} // namespace rvnorm
