#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace rvnorm::cli {

/// Flat run configuration shared by every subcommand; flags win over values
/// read from --config.
struct RunConfig {
    std::string command;
    std::string spec = "normal:0,1";
    double d = 2.0;
    int n = 4;
    std::uint64_t seed = 1;
    std::int64_t mc_samples = 200000;
    int quad_nodes = 0;  // 0 = defaults_for(d)
    double epsilon = 1.0;
    double alpha = 1.5;
    int seeds = 100;
    int nmin = 2;
    int nmax = 64;
    int restarts = 8;
    int iters = 60;
    double step = 0.5;
    std::string input_path;
    std::string output_path;
};

/// Runs the CLI. Exit codes: 0 success, 2 I/O or parse error,
/// 3 precondition/domain violation, 4 internal numerical failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace rvnorm::cli
