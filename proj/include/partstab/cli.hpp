#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace partstab {

/// Exit statuses of run().
enum ExitCode : int {
    exit_ok = 0,
    exit_violation = 1,  // a certified identity failed
    exit_invalid = 2,    // bad spec or arguments
    exit_hypothesis = 3, // theorem hypotheses fail; report is empirical only
    exit_mismatch = 4,   // two independent computations disagree
};

struct RunConfig {
    std::string command; // expand, verify, limit, table, fast-tail, bench
    std::optional<std::string> preset;
    std::optional<std::string> spec_path;
    std::optional<long> m;
    std::optional<long> i;
    std::optional<long> b;
    long order = 20;
    std::optional<std::string> output;
    std::string format = "json";
    int verbosity = 0;

    std::string theorem; // verify
    bool check = false;  // expand: compare against enumeration
    long kmax = 20;      // limit
    std::string family = "subsums";
    long n = 0;     // fast-tail, bench
    long ell = 0;   // fast-tail, bench
    long check_n = 2000; // bench: largest n expanded in full
};

/// Runs one command; the artifact goes to config.output or out, diagnostics to err.
int run(const RunConfig &config, std::ostream &out, std::ostream &err);

/// Parses a command line into a RunConfig and runs it.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace partstab
