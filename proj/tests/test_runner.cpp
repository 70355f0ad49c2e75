#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "opexact/runner.hpp"

using namespace opexact;

namespace {

SuiteConfig small_config() {
    SuiteConfig cfg = SuiteConfig::defaults();
    cfg.suites = {"hyp", "properties"};
    cfg.alphas = {Rational(0), Rational(1, 2)};
    cfg.betas = {Rational(0)};
    cfg.big_ns = {4};
    cfg.nmax = 4;
    cfg.nmax_direct = 3;
    return cfg;
}

std::vector<std::string> ids_and_values(const RunOutcome& out) {
    std::vector<std::string> v;
    for (const auto& r : out.reports) {
        std::string s = r.identity_id + "|" + r.lhs + "|" + r.rhs + "|" + to_cstr(r.status);
        for (const auto& [k, val] : r.params) s += "|" + k + "=" + val;
        v.push_back(s);
    }
    return v;
}

}  // namespace

TEST_CASE("config validation") {
    SuiteConfig cfg = SuiteConfig::defaults();
    CHECK_NOTHROW(cfg.validate());

    cfg.suites = {"nosuch"};
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);

    cfg = SuiteConfig::defaults();
    cfg.nmax = -1;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);

    cfg = SuiteConfig::defaults();
    cfg.jobs = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);

    cfg = SuiteConfig::defaults();
    cfg.format = "xml";
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);

    cfg = SuiteConfig::defaults();
    cfg.big_ns = {2};
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("small run passes and reports are sorted") {
    RunOutcome out = run_suites(small_config());
    CHECK(out.failed == 0);
    CHECK(out.passed > 0);
    CHECK(out.exit_code == 0);
    CHECK(out.passed + out.failed + out.skipped == static_cast<long>(out.reports.size()));
    auto keys = ids_and_values(out);
    for (size_t i = 1; i < keys.size(); ++i) CHECK(keys[i - 1] <= keys[i]);
}

TEST_CASE("same seed gives identical reports") {
    SuiteConfig cfg = small_config();
    cfg.seed = 12345;
    auto a = ids_and_values(run_suites(cfg));
    auto b = ids_and_values(run_suites(cfg));
    CHECK(a == b);
}

TEST_CASE("parallel equals serial") {
    SuiteConfig cfg = small_config();
    cfg.seed = 7;
    auto serial = ids_and_values(run_suites(cfg));
    cfg.jobs = 4;
    auto parallel = ids_and_values(run_suites(cfg));
    CHECK(serial == parallel);
}

TEST_CASE("every known suite produces reports") {
    for (const std::string& s : SuiteConfig::known_suites()) {
        if (s == "limits") continue;  // slow floating-point sweep, covered elsewhere
        SuiteConfig cfg = small_config();
        cfg.suites = {s};
        RunOutcome out = run_suites(cfg);
        CHECK(!out.reports.empty());
    }
}
