#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "rvnorm/bounds.hpp"
#include "rvnorm/distributions.hpp"
#include "rvnorm/errors.hpp"
#include "rvnorm/matrix.hpp"
#include "rvnorm/matrix_io.hpp"
#include "rvnorm/norm_engine.hpp"
#include "rvnorm/scalar_math.hpp"

namespace rvnorm::cli {

namespace {

std::string fmt(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string fmt(std::int64_t v) { return std::to_string(v); }

NormParams norm_params(const RunConfig& cfg, double d) {
    NormParams p = NormParams::defaults_for(d, cfg.seed);
    p.mc_samples = cfg.mc_samples;
    if (cfg.quad_nodes > 0) p.quad_nodes = cfg.quad_nodes;
    return p;
}

std::string config_header(const RunConfig& cfg) {
    std::ostringstream h;
    h << "# rvnorm command=" << cfg.command << " spec=" << cfg.spec
      << " d=" << fmt(cfg.d) << " n=" << cfg.n << " seed=" << cfg.seed
      << " mc_samples=" << cfg.mc_samples << " quad_nodes=" << cfg.quad_nodes
      << " epsilon=" << fmt(cfg.epsilon) << " in=" << cfg.input_path << "\n";
    return h.str();
}

bool is_hermitian(const ComplexMatrix& z) {
    for (int i = 0; i < z.dim(); ++i)
        for (int j = i; j < z.dim(); ++j)
            if (std::abs(z.at(i, j) - std::conj(z.at(j, i))) > 1e-12)
                return false;
    return true;
}

const char* method_name(NormMethod m) {
    switch (m) {
        case NormMethod::monte_carlo: return "monte_carlo";
        case NormMethod::closed_form_d2: return "closed_form_d2";
        case NormMethod::closed_form_stable_d1: return "closed_form_stable_d1";
    }
    return "?";
}

std::string cmd_norm(const RunConfig& cfg) {
    const DistributionSpec spec = DistributionSpec::parse(cfg.spec);
    const ComplexMatrix z = load_matrix(cfg.input_path);
    spec.require_moment(cfg.d);
    const NormParams p = norm_params(cfg, cfg.d);

    NormEstimate est;
    if (spec.family() == Family::stable_symmetric && cfg.d == 1.0 &&
        is_hermitian(z) &&
        std::abs(spec.p2() - gamma_alpha(spec.p1())) <=
            1e-12 * gamma_alpha(spec.p1())) {
        est = stable_norm_d1(HermitianMatrix(z), spec.p1());
    } else if (spec.family() != Family::stable_symmetric && cfg.d == 2.0) {
        est = full_norm_closed_d2(z, spec);
    } else {
        est = full_norm(z, spec, p);
    }

    std::ostringstream out;
    out << config_header(cfg);
    out << "value,stderr,method,d,spec,seed,mc_samples,quad_nodes\n";
    out << fmt(est.value) << ',' << fmt(est.stderr_value) << ','
        << method_name(est.method) << ',' << fmt(cfg.d) << ',' << cfg.spec
        << ',' << cfg.seed << ',' << p.mc_samples << ',' << p.quad_nodes
        << "\n";
    return out.str();
}

std::string cmd_bounds(const RunConfig& cfg) {
    const DistributionSpec spec = DistributionSpec::parse(cfg.spec);
    std::ostringstream out;
    out << config_header(cfg);
    out << BoundCertificate::csv_header() << "\n";
    int passed = 0;
    int total = 0;
    for (int k = 0; k < cfg.seeds; ++k) {
        const std::uint64_t s = cfg.seed + static_cast<std::uint64_t>(k);
        NormParams p = norm_params(cfg, cfg.d);
        p.seed = s;
        RngStream matgen(s, 0x6d617472ull);
        std::vector<BoundCertificate> certs;
        if (cfg.d >= 2.0 && spec.mean() == 0.0) {
            certs.push_back(check_frobenius_sandwich(
                random_hermitian(cfg.n, matgen), spec, cfg.d, p));
        }
        const ComplexMatrix z = random_complex(cfg.n, matgen);
        certs.push_back(check_d2_comparison(z, spec, cfg.d, p));
        if (cfg.d >= 2.0) {
            certs.push_back(check_upper_d_ge2(z, spec, cfg.d, p));
        }
        if (cfg.d <= 2.0) {
            certs.push_back(check_lower_d_le2(z, spec, cfg.d, cfg.epsilon, p));
        }
        for (const BoundCertificate& c : certs) {
            out << c.csv_row() << "\n";
            ++total;
            if (c.pass) ++passed;
        }
    }
    out << "# pass_rate " << passed << "/" << total << "\n";
    return out.str();
}

std::string cmd_submult(const RunConfig& cfg) {
    const DistributionSpec spec = DistributionSpec::parse(cfg.spec);
    const double gamma = cfg.d == 2.0 ? gamma_d2(spec)
                                      : gamma_d(spec, cfg.d, cfg.epsilon);
    NormParams p = norm_params(cfg, cfg.d);
    if (cfg.d != 2.0) {
        // search budget: the objective is evaluated thousands of times
        p.mc_samples = std::min<std::int64_t>(p.mc_samples, 4000);
        p.quad_nodes = 16;
    }
    SearchParams search{cfg.restarts, cfg.iters, cfg.step};
    const double c_est = estimate_c(spec, cfg.d, cfg.n, p, search);

    std::ostringstream out;
    out << config_header(cfg);
    out << "d,n,gamma,c_estimate,margin,criterion_d2\n";
    out << fmt(cfg.d) << ',' << cfg.n << ',' << fmt(gamma) << ','
        << fmt(c_est) << ',' << fmt(gamma - c_est) << ',';
    if (cfg.d == 2.0) {
        out << (submult_criterion_d2(spec) ? "true" : "false");
    }
    out << "\n";
    return out.str();
}

std::string cmd_ratio(const RunConfig& cfg) {
    const DistributionSpec spec = DistributionSpec::parse(cfg.spec);
    if (cfg.nmin < 2 || cfg.nmax < cfg.nmin) {
        throw DomainError("ratio: need 2 <= nmin <= nmax");
    }
    std::ostringstream out;
    out << config_header(cfg);
    out << "n,computed,analytic,abs_diff\n";
    for (int n = cfg.nmin; n <= cfg.nmax; ++n) {
        const SharpnessRatio r = sharpness_ratio(spec, n);
        out << n << ',' << fmt(r.computed) << ',' << fmt(r.analytic) << ','
            << fmt(std::abs(r.computed - r.analytic)) << "\n";
    }
    return out.str();
}

std::string cmd_stable(const RunConfig& cfg) {
    if (!(cfg.alpha >= 1.01 && cfg.alpha <= 1.99)) {
        throw DomainError("stable: alpha must lie in [1.01, 1.99]");
    }
    const ComplexMatrix z = load_matrix(cfg.input_path);
    const HermitianMatrix a(z);
    const DistributionSpec spec =
        DistributionSpec::stable_symmetric(cfg.alpha, gamma_alpha(cfg.alpha));

    const double closed = stable_norm_d1(a, cfg.alpha).value;
    const MomentEstimate mc =
        inner_abs_moment(eigenvalues(a), spec, 1.0, cfg.mc_samples,
                         RngStream(cfg.seed, 0x53544142ull));
    const double rel_gap =
        closed > 0.0 ? std::abs(mc.mean - closed) / closed : 0.0;

    NormParams p = norm_params(cfg, 1.0);
    const double schatten = schatten_norm(a.matrix(), cfg.alpha);
    const double full = full_norm(a.matrix(), spec, p).value;
    const bool sandwich_pass = 2.0 * schatten <= full * 1.05 &&
                               full <= 4.0 * schatten * 1.05;

    std::ostringstream out;
    out << config_header(cfg);
    out << "alpha,closed_form,mc_estimate,rel_gap,schatten,sandwich_lower,"
           "full_norm_mc,sandwich_upper,sandwich_pass\n";
    out << fmt(cfg.alpha) << ',' << fmt(closed) << ',' << fmt(mc.mean) << ','
        << fmt(rel_gap) << ',' << fmt(schatten) << ',' << fmt(2.0 * schatten)
        << ',' << fmt(full) << ',' << fmt(4.0 * schatten) << ','
        << (sandwich_pass ? "1" : "0") << "\n";
    return out.str();
}

void add_common(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--spec", cfg.spec, "distribution, e.g. normal:0,1");
    sub->add_option("--d", cfg.d, "norm parameter d >= 1");
    sub->add_option("--n", cfg.n, "matrix dimension");
    sub->add_option("--seed", cfg.seed, "base seed");
    sub->add_option("--mc-samples", cfg.mc_samples, "MC samples per node");
    sub->add_option("--quad-nodes", cfg.quad_nodes,
                    "quadrature nodes (0 = default for d)");
    sub->add_option("--epsilon", cfg.epsilon, "epsilon for the d < 2 bounds");
    sub->add_option("--out", cfg.output_path, "also write the report here");
    sub->set_config("--config");
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"random-vector matrix norms"};
    app.require_subcommand(1);

    CLI::App* norm = app.add_subcommand("norm", "compute |||Z|||_{X,d}");
    add_common(norm, cfg);
    norm->add_option("--in", cfg.input_path, "matrix JSON file")->required();

    CLI::App* bounds =
        app.add_subcommand("bounds", "certificate batch over seeds");
    add_common(bounds, cfg);
    bounds->add_option("--seeds", cfg.seeds, "number of seeded cases");

    CLI::App* submult =
        app.add_subcommand("submult", "submultiplicativity scalars");
    add_common(submult, cfg);
    submult->add_option("--restarts", cfg.restarts, "search restarts");
    submult->add_option("--iters", cfg.iters, "search iterations");
    submult->add_option("--step", cfg.step, "initial search step");

    CLI::App* ratio = app.add_subcommand("ratio", "sharpness ratio sweep");
    add_common(ratio, cfg);
    ratio->add_option("--nmin", cfg.nmin, "smallest n");
    ratio->add_option("--nmax", cfg.nmax, "largest n");

    CLI::App* stable = app.add_subcommand("stable", "alpha-stable experiment");
    add_common(stable, cfg);
    stable->add_option("--alpha", cfg.alpha, "stability parameter");
    stable->add_option("--in", cfg.input_path, "Hermitian matrix JSON file")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    }

    try {
        std::string report;
        if (norm->parsed()) {
            cfg.command = "norm";
            report = cmd_norm(cfg);
        } else if (bounds->parsed()) {
            cfg.command = "bounds";
            report = cmd_bounds(cfg);
        } else if (submult->parsed()) {
            cfg.command = "submult";
            report = cmd_submult(cfg);
        } else if (ratio->parsed()) {
            cfg.command = "ratio";
            report = cmd_ratio(cfg);
        } else {
            cfg.command = "stable";
            report = cmd_stable(cfg);
        }
        out << report;
        if (!cfg.output_path.empty()) {
            std::ofstream f(cfg.output_path, std::ios::binary);
            if (!f) throw ParseError("cannot open output file: " + cfg.output_path);
            f << report;
        }
        return 0;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const NumericalError& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 4;
    }
}

} // namespace rvnorm::cli
