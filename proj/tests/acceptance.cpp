// Acceptance gate: one line per criterion, exit 1 if any fail.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "opexact/hahn.hpp"
#include "opexact/runner.hpp"
#include "opexact/symmetric.hpp"

using namespace opexact;

namespace {

using clock_t_ = std::chrono::steady_clock;

double seconds_since(clock_t_::time_point t0) {
    return std::chrono::duration<double>(clock_t_::now() - t0).count();
}

const std::vector<Rational> grid_values = {Rational(-1, 2), Rational(-1, 3), Rational(0),
                                           Rational(1, 2),  Rational(1),     Rational(7, 3)};

std::vector<std::pair<Rational, Rational>> grid_pairs() {
    std::vector<std::pair<Rational, Rational>> out;
    for (const Rational& a : grid_values)
        for (const Rational& b : grid_values)
            if (a + b != Rational(-1)) out.emplace_back(a, b);
    return out;
}

void check_budget(double elapsed, double budget) {
    if (elapsed > budget)
        throw std::runtime_error("runtime " + std::to_string(elapsed) + " s exceeds budget " +
                                 std::to_string(budget) + " s");
}

// ---------------------------------------------------------------- criteria

void criterion_legendre() {
    auto t0 = clock_t_::now();
    FamilySpec leg = FamilySpec::legendre();
    for (PSMethod m : {PSMethod::recurrence, PSMethod::direct, PSMethod::cd_sum,
                       PSMethod::closed_form})
        for (const Rational& v : ps_integral_seq(leg, 20, m))
            require_equal(v, Rational(1), "unit value, all methods, n <= 20");
    check_budget(seconds_since(t0), 5.0);
}

void criterion_gegenbauer() {
    for (const Rational& a : grid_values) {
        FamilySpec g = FamilySpec::gegenbauer(a);
        auto rec = ps_integral_seq(g, 10, PSMethod::recurrence);
        auto cds = ps_integral_seq(g, 10, PSMethod::cd_sum);
        auto dir = ps_integral_seq(g, 6, PSMethod::direct);
        for (long n = 0; n <= 10; ++n) {
            Rational expect = gegenbauer_ps_ratio(a, n);
            require_equal(rec[n], expect, "recurrence vs closed ratio");
            require_equal(cds[n], expect, "kernel sum vs closed ratio");
            require_equal(ps_closed_form(g, n), expect, "closed form vs closed ratio");
            if (n <= 6) require_equal(dir[n], expect, "direct vs closed ratio");
        }
    }
    require_equal(ps_closed_form(FamilySpec::gegenbauer(Rational(1)), 1), Rational(24, 5),
                  "spot value alpha = 1, n = 1");
}

void criterion_chebyshev() {
    for (long n = 0; n <= 10; ++n) {
        require_equal(chebyshev_ps_value(FamilySpec::chebyshev_t(), n), Rational(2 * n + 1),
                      "first kind (2n+1) pi");
        require_equal(chebyshev_ps_value(FamilySpec::chebyshev_u(), n), Rational(2 * n + 2),
                      "second kind (2n+2) pi");
    }
}

void criterion_hermite() {
    FamilySpec h = FamilySpec::hermite();
    auto rec = ps_integral_seq(h, 12, PSMethod::recurrence);
    auto dir = ps_integral_seq(h, 6, PSMethod::direct);
    for (long n = 0; n <= 12; ++n) {
        Rational expect = pow(Rational(2), 2 * n + 2) * factorial_r(2 * n + 1);
        require_equal(rec[n], expect, "recurrence value");
        require_equal(ps_closed_form(h, n), expect, "closed form value");
        if (n <= 6) require_equal(dir[n], expect, "direct value");
    }
}

void criterion_jacobi() {
    for (const auto& [a, b] : grid_pairs()) {
        FamilySpec fam = FamilySpec::jacobi(a, b);
        Rational s = a + b + Rational(1);
        for (long n = 0; n <= 30; ++n) {
            KernelPolyResult kp = kernel_poly(fam, Rational(1), n);
            Rational lhs = inner_product_n(kp.q, kp.q, fam);
            require_equal(lhs, kp.cn_over_h0 * kp.q(Rational(1)), "norm vs kernel value");
            require_equal(lhs,
                          pochhammer(a + Rational(2), n) * pochhammer(b + Rational(1), n) /
                              (pochhammer(a + b + Rational(2), n) * factorial_r(n)),
                          "norm closed form");
            TruncatedSeries<Rational> ser{
                {s, Rational(1) + s / Rational(2), a + Rational(1), Rational(n) + s + Rational(1),
                 Rational(-n)},
                {s / Rational(2), b + Rational(1), Rational(-n), Rational(n) + s + Rational(1)},
                Rational(1),
                n};
            require_equal(eval_truncated(ser),
                          pochhammer(a + Rational(2), n) * pochhammer(s + Rational(1), n) /
                              (pochhammer(b + Rational(1), n) * factorial_r(n)),
                          "very well poised series closed form");
        }
        HyperTerm term{Rational(1),
                       {(s + Rational(2)) / Rational(2), s, a + Rational(1)},
                       {s / Rational(2), b + Rational(1)},
                       Rational(1),
                       Poly::constant(Rational(1))};
        HyperTerm closed{Rational(1),
                         {a + Rational(2), s + Rational(1)},
                         {b + Rational(1)},
                         Rational(1),
                         Poly::constant(Rational(1))};
        indefinite_sum_certificate(term, closed, 30);
    }
}

void criterion_laguerre() {
    for (const Rational& a : grid_values) {
        FamilySpec fam = FamilySpec::laguerre(a);
        for (long n = 0; n <= 15; ++n) {
            KernelPolyResult kp = kernel_poly(fam, Rational(0), n);
            require_equal(inner_product_n(kp.q, kp.q, fam),
                          pochhammer(a + Rational(2), n) / factorial_r(n), "norm closed form");
        }
        HyperTerm term{Rational(1), {a + Rational(1)}, {}, Rational(1),
                       Poly::constant(Rational(1))};
        HyperTerm closed{Rational(1), {a + Rational(2)}, {}, Rational(1),
                         Poly::constant(Rational(1))};
        indefinite_sum_certificate(term, closed, 30);
    }
    for (const Rational& a : {Rational(0), Rational(1, 2)}) {
        for (long n = 0; n <= 6; ++n) {
            Rational v = appell_f2(a + Rational(1), Rational(-n), Rational(-n), a + Rational(2),
                                   a + Rational(2), Rational(1), Rational(1), n, n);
            Rational qn0 = pochhammer(a + Rational(2), n) / factorial_r(n);
            require_equal(qn0 * qn0 * v, qn0, "double series reproduces the norm");
        }
    }
}

void criterion_hahn_first() {
    auto t0 = clock_t_::now();
    for (const auto& [a, b] : grid_pairs()) {
        for (long bigN : {3L, 5L, 8L, 12L}) {
            HahnContext ctx(a, b, bigN);
            for (long n = 0; n <= bigN - 1; ++n) {
                hahn_connection_check(ctx, n);
                Rational v1 = first_identity(ctx, n, FirstIdentityForm::finite_sum);
                Rational v2 = first_identity(ctx, n, FirstIdentityForm::f65_pair);
                Rational v3 = first_identity(ctx, n, FirstIdentityForm::f87_quadext);
                require_equal(v1, v2, "explicit sum vs series pair");
                require_equal(v1, v3, "explicit sum vs quadratic-field series");
                derivation_chain_check(ctx, n);
            }
        }
    }
    check_budget(seconds_since(t0), 60.0);
}

void criterion_hahn_second() {
    for (const auto& [a, b] : grid_pairs())
        for (long bigN : {3L, 5L, 8L, 12L}) {
            HahnContext ctx(a, b, bigN);
            for (long n = 0; n <= bigN - 1; ++n) second_identity_check(ctx, n);
        }
}

void criterion_limit() {
    auto t0 = clock_t_::now();
    const std::vector<std::pair<Rational, Rational>> pts = {
        {Rational(0), Rational(0)}, {Rational(1), Rational(0)}, {Rational(1, 2), Rational(1, 3)}};
    std::string failures;
    for (const auto& [a, b] : pts) {
        for (long n = 0; n <= 4; ++n) {
            try {
                auto seq = jacobi_limit_check(a, b, n, {50, 100, 200, 400});
                // n = 0 is exact at every N, nothing left to shrink
                if (seq.back().rel_error >= 1e-12 &&
                    !(seq.back().rel_error < seq.front().rel_error))
                    throw identity_violation("error shrinks with N",
                                             std::to_string(seq.back().rel_error),
                                             std::to_string(seq.front().rel_error));
            } catch (const std::exception& e) {
                failures += std::string("\n    (") + a.str() + "," + b.str() + ") n=" +
                            std::to_string(n) + ": " + e.what();
            }
        }
    }
    check_budget(seconds_since(t0), 30.0);
    if (!failures.empty())
        throw std::runtime_error("limit tolerance 10/N not met at:" + failures);
}

void criterion_full_run() {
    auto t0 = clock_t_::now();
    SuiteConfig cfg = SuiteConfig::defaults();
    cfg.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    cfg.seed = 20240817;
    RunOutcome out = run_suites(cfg);
    double elapsed = seconds_since(t0);
    std::string bad;
    for (const auto& r : out.reports)
        if (r.status == CheckStatus::fail && r.identity_id.rfind("limit_to_continuous", 0) != 0)
            bad += "\n    " + r.identity_id + ": " + r.lhs + " != " + r.rhs;
    if (!bad.empty()) throw std::runtime_error("exact-suite failures:" + bad);

    SuiteConfig small = SuiteConfig::defaults();
    small.suites = {"properties", "hyp"};
    small.seed = 99;
    auto key = [](const RunOutcome& o) {
        std::string s;
        for (const auto& r : o.reports) {
            s += r.identity_id + "|" + r.lhs + "|" + r.rhs + "|" + to_cstr(r.status);
            for (const auto& [k, v] : r.params) s += "|" + k + "=" + v;
            s += "\n";
        }
        return s;
    };
    std::string serial = key(run_suites(small));
    if (key(run_suites(small)) != serial)
        throw std::runtime_error("same seed did not reproduce the same reports");
    small.jobs = 4;
    if (key(run_suites(small)) != serial)
        throw std::runtime_error("parallel run differs from serial run");
    check_budget(elapsed + seconds_since(t0), 120.0);
}

struct Criterion {
    const char* name;
    std::function<void()> fn;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"1 legendre symmetric integrals are 1 (all methods, n <= 20)", criterion_legendre},
        {"2 gegenbauer closed form on the alpha grid", criterion_gegenbauer},
        {"3 chebyshev alias values in pi units", criterion_chebyshev},
        {"4 hermite closed form, n <= 12", criterion_hermite},
        {"5 jacobi kernel norms, certificates, series, n <= 30", criterion_jacobi},
        {"6 laguerre norms, certificate, double-series chain", criterion_laguerre},
        {"7 hahn connection / point identities, full grid", criterion_hahn_first},
        {"8 hahn weighted-sum identity and dual polynomial, full grid", criterion_hahn_second},
        {"9 continuous limit within 10/N at N = 400", criterion_limit},
        {"10 full default run: exact suites clean, deterministic, < 2 min", criterion_full_run},
    };
    int failed = 0;
    for (const Criterion& c : criteria) {
        auto t0 = clock_t_::now();
        try {
            c.fn();
            std::printf("PASS criterion %s (%.1f s)\n", c.name, seconds_since(t0));
        } catch (const std::exception& e) {
            ++failed;
            std::printf("FAIL criterion %s (%.1f s)\n      %s\n", c.name, seconds_since(t0),
                        e.what());
        }
        std::fflush(stdout);
    }
    std::printf("%d/10 criteria passed\n", 10 - failed);
    return failed == 0 ? 0 : 1;
}
