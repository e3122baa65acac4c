#ifndef FROBKIT_RUNNER_HPP
#define FROBKIT_RUNNER_HPP

#include "frobkit/report.hpp"

namespace frobkit {

inline constexpr std::uint64_t kDefaultSeed = 20240611;
inline constexpr int kDefaultTrials = 20;
/// Random pairs per trial in the Frobenius identity checks (200 by default).
inline constexpr int kPairsPerTrial = 10;

/// Bad input: unreadable file, schema violation, unknown preset or suite.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct JobSpec {
    std::string input;   // path, "-" for stdin; empty when a preset is used
    std::string preset;  // name[:param...]
    std::optional<FieldSpec> field;
    std::vector<std::string> suites;
    std::uint64_t seed = kDefaultSeed;
    int trials = kDefaultTrials;
    std::string lambda;  // named form overriding the document's
};

const std::vector<std::string>& all_suites();

/// Runs the requested suites (all of them when empty).
Report run(const JobSpec& job);

/// Structural invariants only, no checks.
Report analyze(const JobSpec& job);

}  // namespace frobkit

#endif  // FROBKIT_RUNNER_HPP
