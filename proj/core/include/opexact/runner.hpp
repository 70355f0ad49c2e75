#ifndef OPEXACT_RUNNER_HPP
#define OPEXACT_RUNNER_HPP

#include <vector>

#include "opexact/rational.hpp"
#include "opexact/report.hpp"

namespace opexact {

struct SuiteConfig {
    std::vector<std::string> suites;  // empty = all
    std::vector<Rational> alphas;
    std::vector<Rational> betas;
    std::vector<long> big_ns;
    long nmax = 10;
    long nmax_direct = 6;
    unsigned long seed = 0;
    int jobs = 1;
    std::string format = "text";

    static SuiteConfig defaults();
    static const std::vector<std::string>& known_suites();
    void validate() const;  // throws std::invalid_argument on bad fields
};

struct RunOutcome {
    std::vector<IdentityReport> reports;
    long passed = 0;
    long failed = 0;
    long skipped = 0;
    int exit_code = 0;
};

RunOutcome run_suites(const SuiteConfig& config);

}  // namespace opexact

#endif
