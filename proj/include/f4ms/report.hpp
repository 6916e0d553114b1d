#ifndef F4MS_REPORT_HPP
#define F4MS_REPORT_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace f4ms {

class Rng;

// One named property check; returns a counterexample description on failure.
struct NamedCheck {
    std::string name;
    int trials_scale = 1; // multiplier on the suite-wide trial count
    std::function<std::optional<std::string>(Rng&)> run;
};

struct Failure {
    std::string check;
    std::uint64_t trial;
    std::string counterexample;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::uint64_t passes = 0;
    std::vector<Failure> failures;
    double wall_ms = 0;

    bool ok() const { return failures.empty(); }
};

// Runs every check `trials` times (scaled per check). Trial seeds derive
// from (suite seed, check name, trial index), so a sharded run samples the
// identical stream; failures are reported in deterministic trial order.
SuiteReport run_checks(const std::string& suite_name, const std::vector<NamedCheck>& checks,
                       std::uint64_t trials, std::uint64_t master_seed, int jobs = 1);

} // namespace f4ms

#endif
