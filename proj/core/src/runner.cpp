#include "opexact/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <random>
#include <stdexcept>
#include <thread>

#include "opexact/hahn.hpp"
#include "opexact/hyp.hpp"
#include "opexact/kernel.hpp"
#include "opexact/symmetric.hpp"

namespace opexact {

namespace {

using ParamMap = std::map<std::string, std::string>;

struct CheckOutcome {
    std::string lhs, rhs;
    CheckStatus status = CheckStatus::pass;
};

struct Task {
    std::string id;
    ParamMap params;
    std::function<CheckOutcome(std::mt19937_64&)> fn;
};

CheckOutcome value_outcome(const Rational& v) {
    std::string s = v.str();
    return CheckOutcome{s, s, CheckStatus::pass};
}

CheckOutcome checked_outcome(const std::string& what) {
    return CheckOutcome{what, what, CheckStatus::pass};
}

uint64_t task_seed(unsigned long base, const Task& t) {
    std::hash<std::string> h;
    uint64_t v = base * 0x9e3779b97f4a7c15ull + h(t.id);
    for (const auto& [k, val] : t.params) v = v * 0x100000001b3ull + h(k) + h(val) * 31;
    return v;
}

Rational rand_rational(std::mt19937_64& rng, long lo = -20, long hi = 20, long den_max = 12) {
    std::uniform_int_distribution<long> num(lo, hi);
    std::uniform_int_distribution<long> den(1, den_max);
    return Rational(num(rng), den(rng));
}

// ---------------------------------------------------------------- grid helpers

std::vector<std::pair<Rational, Rational>> grid_pairs(const SuiteConfig& cfg) {
    std::vector<std::pair<Rational, Rational>> out;
    for (const Rational& a : cfg.alphas)
        for (const Rational& b : cfg.betas)
            if (a + b != Rational(-1)) out.emplace_back(a, b);
    return out;
}

std::vector<FamilySpec> even_families(const SuiteConfig& cfg) {
    std::vector<FamilySpec> fams = {FamilySpec::legendre(), FamilySpec::chebyshev_t(),
                                    FamilySpec::chebyshev_u(), FamilySpec::hermite()};
    for (const Rational& a : cfg.alphas) fams.push_back(FamilySpec::gegenbauer(a));
    return fams;
}

std::vector<FamilySpec> continuous_families(const SuiteConfig& cfg) {
    std::vector<FamilySpec> fams = even_families(cfg);
    for (const auto& [a, b] : grid_pairs(cfg))
        if (a != b) fams.push_back(FamilySpec::jacobi(a, b));
    for (const Rational& a : cfg.alphas) fams.push_back(FamilySpec::laguerre(a));
    return fams;
}

ParamMap family_params(const FamilySpec& f) { return {{"family", f.label()}}; }

long family_cap(const FamilySpec& f, long want) {
    long cap = f.max_degree();
    return cap < 0 ? want : std::min(want, cap);
}

// ------------------------------------------------------------------ core suite

CheckOutcome check_orthogonality(const FamilySpec& fam, long nmax) {
    long m = family_cap(fam, nmax);
    std::vector<Poly> ps = generate_ops(fam, m);
    for (long i = 0; i <= m; ++i) {
        for (long j = 0; j <= i; ++j) {
            Rational ip = inner_product_n(ps[static_cast<size_t>(i)], ps[static_cast<size_t>(j)], fam);
            Rational want = i == j ? fam.norm_ratio(i) : Rational(0);
            require_equal(ip, want, "orthogonality (" + std::to_string(i) + "," + std::to_string(j) + ")");
            if (fam.is_hahn()) {
                Rational ipb = inner_product_basis(ps[static_cast<size_t>(i)],
                                                   ps[static_cast<size_t>(j)], fam);
                require_equal(ipb, ip, "basis path vs direct sum");
            }
        }
    }
    return checked_outcome("orthogonal up to degree " + std::to_string(m));
}

CheckOutcome check_special_values(const FamilySpec& fam, long nmax) {
    long m = family_cap(fam, nmax);
    std::vector<Poly> ps = generate_ops(fam, m);
    for (long n = 0; n <= m; ++n) {
        const Poly& p = ps[static_cast<size_t>(n)];
        require_equal(p.leading(), fam.leading_coeff(n), "leading coefficient");
        if (fam.is_jacobi_like())
            require_equal(p(Rational(1)), fam.value_at_one(n), "value at 1");
        if (fam.kind() == FamilyKind::laguerre)
            require_equal(p(Rational(0)), fam.value_at_one(n), "value at 0");
        if (fam.is_hahn()) {
            require_equal(p(Rational(fam.big_n())), fam.value_at_big_n(n), "value at N");
            require_equal(p(Rational(fam.big_n() - 1)), fam.value_at_big_n_minus_1(n),
                          "value at N-1");
        }
        if (fam.is_even() && n % 2 == 0)
            require_equal(p(Rational(0)), fam.even_value_at_zero(n / 2), "value at 0");
        if (fam.is_even() && n % 2 == 1)
            require_equal(p.derivative()(Rational(0)), fam.odd_deriv_at_zero((n - 1) / 2),
                          "derivative at 0");
    }
    return checked_outcome("closed-form values up to degree " + std::to_string(m));
}

CheckOutcome check_even_recurrence(const FamilySpec& fam, long nmax) {
    for (long n = 1; 2 * n <= family_cap(fam, 2 * nmax); ++n) {
        require_equal(fam.recur_coeffs(2 * n - 1).b, Rational(0), "B vanishes for even measures");
        require_equal(fam.recur_coeffs(2 * n - 1).c,
                      -fam.even_value_at_zero(n) / fam.even_value_at_zero(n - 1),
                      "odd-index C from the values at 0");
    }
    return checked_outcome("even-measure recurrence identities");
}

CheckOutcome check_kernel_forms(const FamilySpec& fam, long nmax) {
    long m = family_cap(fam, nmax) - 1;
    Rational x(1, 3), y(-2, 5), z(2, 7);
    for (long n = 0; n <= m; ++n) {
        Rational sum = cd_kernel(fam, n, x, y, KernelForm::sum);
        require_equal(sum, cd_kernel(fam, n, x, y, KernelForm::quotient), "sum vs quotient form");
        require_equal(cd_kernel(fam, n, z, z, KernelForm::sum), cd_confluent(fam, n, z),
                      "confluent form");
        if (fam.is_even() && n % 2 == 1) {
            long h = (n - 1) / 2;
            Rational closed = fam.leading_coeff(2 * h) /
                              (fam.leading_coeff(2 * h + 1) * fam.norm_ratio(2 * h)) *
                              fam.odd_deriv_at_zero(h) * fam.even_value_at_zero(h);
            require_equal(cd_confluent(fam, n - 1, Rational(0)), closed,
                          "confluent form at 0, closed form");
        }
        if (fam.is_hahn()) {
            for (long xv = 1; xv <= fam.big_n(); ++xv)
                require_equal(cd_discrete(fam, n, Rational(xv)),
                              cd_kernel(fam, n, Rational(xv), Rational(xv - 1), KernelForm::sum),
                              "difference form vs direct sum");
        }
    }
    return checked_outcome("kernel forms agree up to order " + std::to_string(m));
}

CheckOutcome check_kernel_poly(const FamilySpec& fam, long nmax) {
    Rational x0;
    if (fam.is_jacobi_like())
        x0 = Rational(1);
    else if (fam.kind() == FamilyKind::laguerre)
        x0 = Rational(0);
    else
        x0 = Rational(fam.big_n());
    long m = family_cap(fam, nmax);
    if (fam.is_hahn()) m = std::min(m, fam.big_n() - 1);
    for (long n = 0; n <= m; ++n) {
        KernelPolyResult kp = kernel_poly(fam, x0, n);
        require_equal(inner_product_n(kp.q, kp.q, fam), kp.cn_over_h0 * kp.q(x0),
                      "kernel polynomial norm");
        Rational s(0);
        std::vector<Poly> ps = generate_ops(fam, n);
        for (long k = 0; k <= n; ++k) {
            Rational pk = ps[static_cast<size_t>(k)](x0);
            s += pk * pk / fam.norm_ratio(k);
        }
        require_equal(kp.cn_over_h0 * s, kp.q(x0), "kernel sum at the base point");
    }
    return checked_outcome("kernel polynomial identities up to degree " + std::to_string(m));
}

CheckOutcome check_quadratic_transform(const Rational& alpha, long nmax) {
    FamilySpec geg = FamilySpec::gegenbauer(alpha);
    FamilySpec half = FamilySpec::jacobi(Rational(-1, 2), alpha);
    std::vector<Poly> ps = generate_ops(geg, 2 * nmax + 1);
    Poly map({Rational(1), Rational(0), Rational(-2)});  // 1 - 2x^2
    for (long n = 0; n <= nmax; ++n) {
        Poly lhs = deflate_at_zero(ps[static_cast<size_t>(2 * n + 1)]);
        Poly qn = kernel_poly(half, Rational(1), n).q.compose(map);
        Rational c = lhs.leading() / qn.leading();
        require_equal(lhs, c * qn, "odd polynomial over x vs mapped kernel polynomial");
    }
    return checked_outcome("quadratic transformation up to n = " + std::to_string(nmax));
}

// ------------------------------------------------------------- symmetric suite

CheckOutcome check_ps_methods(const FamilySpec& fam, long nmax, long nmax_direct) {
    std::vector<Rational> rec = ps_integral_seq(fam, nmax, PSMethod::recurrence);
    std::vector<Rational> cds = ps_integral_seq(fam, nmax, PSMethod::cd_sum);
    std::vector<Rational> dir = ps_integral_seq(fam, std::min(nmax, nmax_direct), PSMethod::direct);
    for (long n = 0; n <= nmax; ++n) {
        require_equal(cds[static_cast<size_t>(n)], rec[static_cast<size_t>(n)],
                      "kernel-sum method vs recurrence");
        require_equal(ps_closed_form(fam, n), rec[static_cast<size_t>(n)],
                      "closed form vs recurrence");
        if (n < static_cast<long>(dir.size()))
            require_equal(dir[static_cast<size_t>(n)], rec[static_cast<size_t>(n)],
                          "direct integration vs recurrence");
    }
    return value_outcome(rec.back());
}

CheckOutcome check_ps_closed_value(const FamilySpec& fam, long nmax) {
    switch (fam.kind()) {
        case FamilyKind::legendre:
            for (long n = 0; n <= 20; ++n)
                require_equal(ps_closed_form(fam, n), Rational(1), "constant value 1");
            return checked_outcome("value 1 for n <= 20");
        case FamilyKind::hermite:
            for (long n = 0; n <= 12; ++n)
                require_equal(ps_closed_form(fam, n),
                              pow(Rational(2), 2 * n + 2) * factorial_r(2 * n + 1),
                              "2^(2n+2) (2n+1)!");
            return checked_outcome("hermite closed form for n <= 12");
        case FamilyKind::chebyshev_t:
            for (long n = 0; n <= nmax; ++n)
                require_equal(chebyshev_ps_value(fam, n), Rational(2 * n + 1), "(2n+1) pi");
            return checked_outcome("first-kind values (2n+1) pi");
        case FamilyKind::chebyshev_u:
            for (long n = 0; n <= nmax; ++n)
                require_equal(chebyshev_ps_value(fam, n), Rational(2 * n + 2), "(2n+2) pi");
            return checked_outcome("second-kind values (2n+2) pi");
        default:
            for (long n = 0; n <= nmax; ++n)
                require_equal(ps_closed_form(fam, n), gegenbauer_ps_ratio(fam.alpha(), n),
                              "pochhammer ratio closed form");
            return checked_outcome("gegenbauer closed form for n <= " + std::to_string(nmax));
    }
}

CheckOutcome check_ps_recurrence_equiv(const FamilySpec& fam, long nmax) {
    for (long n = 1; n <= nmax; ++n) {
        Rational a2n = fam.recur_coeffs(2 * n).a;
        Rational c2n = fam.recur_coeffs(2 * n).c;
        Rational alt = fam.leading_coeff(2 * n - 2) * fam.leading_coeff(2 * n + 1) *
                       fam.norm_ratio(2 * n) * fam.even_value_at_zero(n - 1) /
                       (fam.leading_coeff(2 * n - 1) * fam.leading_coeff(2 * n) *
                        fam.norm_ratio(2 * n - 2) * fam.even_value_at_zero(n));
        require_equal(alt * alt, c2n * c2n, "alternative recurrence coefficient");
        require_equal(fam.leading_coeff(2 * n + 1) * fam.leading_coeff(2 * n + 1) /
                          (fam.leading_coeff(2 * n) * fam.leading_coeff(2 * n)) *
                          fam.norm_ratio(2 * n),
                      a2n * a2n * fam.norm_ratio(2 * n), "inhomogeneous term");
    }
    return checked_outcome("recurrence forms agree for n <= " + std::to_string(nmax));
}

CheckOutcome check_ps_projection(const FamilySpec& fam, std::mt19937_64& rng) {
    for (long n = 0; n <= 3; ++n) {
        std::vector<Rational> c;
        for (long i = 0; i <= 2 * n + 1; ++i) c.push_back(rand_rational(rng));
        Poly p(std::move(c));
        ps_projection_check(fam, n, p);
        ps_cd_proportionality(fam, n);
    }
    return checked_outcome("projection and kernel proportionality, n <= 3");
}

// ---------------------------------------------------------- jacobi suite

Rational jacobi_summand(const Rational& a, const Rational& b, long k) {
    Rational s = a + b + Rational(1);
    return pochhammer((s + Rational(2)) / Rational(2), k) * pochhammer(s, k) *
           pochhammer(a + Rational(1), k) /
           (pochhammer(s / Rational(2), k) * pochhammer(b + Rational(1), k) * factorial_r(k));
}

Rational jacobi_sum_closed(const Rational& a, const Rational& b, long n) {
    return pochhammer(a + Rational(2), n) * pochhammer(a + b + Rational(2), n) /
           (pochhammer(b + Rational(1), n) * factorial_r(n));
}

CheckOutcome check_jacobi_kernel_integral(const Rational& a, const Rational& b, long nmax) {
    FamilySpec fam = FamilySpec::jacobi(a, b);
    for (long n = 0; n <= nmax; ++n) {
        KernelPolyResult kp = kernel_poly(fam, Rational(1), n);
        Rational lhs = inner_product_n(kp.q, kp.q, fam);
        Rational closed = pochhammer(a + Rational(2), n) * pochhammer(b + Rational(1), n) /
                          (pochhammer(a + b + Rational(2), n) * factorial_r(n));
        require_equal(lhs, kp.cn_over_h0 * kp.q(Rational(1)), "norm vs kernel value");
        require_equal(lhs, closed, "norm closed form");
    }
    return checked_outcome("shifted-family norms up to n = " + std::to_string(nmax));
}

CheckOutcome check_jacobi_certificate(const Rational& a, const Rational& b, long nmax) {
    Rational s = a + b + Rational(1);
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
    indefinite_sum_certificate(term, closed, nmax);
    return checked_outcome("indefinite sum certified to n = " + std::to_string(nmax));
}

CheckOutcome check_jacobi_well_poised(const Rational& a, const Rational& b, long nmax) {
    Rational s = a + b + Rational(1);
    for (long n = 0; n <= nmax; ++n) {
        TruncatedSeries<Rational> ser{
            {s, Rational(1) + s / Rational(2), a + Rational(1), Rational(n) + s + Rational(1),
             Rational(-n)},
            {s / Rational(2), b + Rational(1), Rational(-n), Rational(n) + s + Rational(1)},
            Rational(1),
            n};
        Rational v = eval_truncated(ser);
        Rational plain(0);
        for (long k = 0; k <= n; ++k) plain += jacobi_summand(a, b, k);
        require_equal(v, plain, "series vs plain sum");
        require_equal(v, jacobi_sum_closed(a, b, n), "series closed form");
    }
    return checked_outcome("well poised series checked to n = " + std::to_string(nmax));
}

// ---------------------------------------------------------- laguerre suite

CheckOutcome check_laguerre_kernel_integral(const Rational& a, long nmax) {
    FamilySpec fam = FamilySpec::laguerre(a);
    for (long n = 0; n <= nmax; ++n) {
        KernelPolyResult kp = kernel_poly(fam, Rational(0), n);
        require_equal(kp.cn_over_h0, Rational(1), "unit kernel constant");
        require_equal(inner_product_n(kp.q, kp.q, fam),
                      pochhammer(a + Rational(2), n) / factorial_r(n), "norm closed form");
    }
    return checked_outcome("shifted-family norms up to n = " + std::to_string(nmax));
}

CheckOutcome check_laguerre_certificate(const Rational& a, long nmax) {
    HyperTerm term{Rational(1), {a + Rational(1)}, {}, Rational(1), Poly::constant(Rational(1))};
    HyperTerm closed{Rational(1), {a + Rational(2)}, {}, Rational(1), Poly::constant(Rational(1))};
    indefinite_sum_certificate(term, closed, nmax);
    return checked_outcome("indefinite sum certified to n = " + std::to_string(nmax));
}

CheckOutcome check_laguerre_appell(const Rational& a, long nmax) {
    for (long n = 0; n <= nmax; ++n) {
        Rational v = appell_f2(a + Rational(1), Rational(-n), Rational(-n), a + Rational(2),
                               a + Rational(2), Rational(1), Rational(1), n, n);
        Rational mid(0);
        for (long m = 0; m <= n; ++m) {
            Rational inner = chu_vandermonde(n, a + Rational(m + 1), a + Rational(2));
            mid += pochhammer(a + Rational(1), m) * pochhammer(Rational(-n), m) /
                   (factorial_r(m) * pochhammer(a + Rational(2), m)) * inner;
        }
        require_equal(v, mid, "double sum vs nested closed inner sum");
        Rational qn0 = pochhammer(a + Rational(2), n) / factorial_r(n);
        require_equal(qn0 * qn0 * v, qn0, "product form reproduces the norm");
    }
    return checked_outcome("double-series chain checked to n = " + std::to_string(nmax));
}

// ------------------------------------------------------------------ hahn suite

CheckOutcome check_hahn_point(const Rational& a, const Rational& b, long bigN,
                              const std::string& which) {
    HahnContext ctx(a, b, bigN);
    for (long n = 0; n <= bigN - 1; ++n) {
        if (which == "connection") {
            hahn_connection_check(ctx, n);
        } else if (which == "first") {
            Rational v1 = first_identity(ctx, n, FirstIdentityForm::finite_sum);
            Rational v2 = first_identity(ctx, n, FirstIdentityForm::f65_pair);
            Rational v3 = first_identity(ctx, n, FirstIdentityForm::f87_quadext);
            require_equal(v1, v2, "explicit sum vs series pair");
            require_equal(v1, v3, "explicit sum vs single series");
        } else if (which == "chain") {
            derivation_chain_check(ctx, n);
        } else {
            second_identity_check(ctx, n);
        }
    }
    return checked_outcome("all n in 0.." + std::to_string(bigN - 1));
}

// ------------------------------------------------------------------- hyp suite

CheckOutcome check_chu_random(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> nd(0, 12);
    long done = 0;
    while (done < 500) {
        long n = nd(rng);
        Rational b = rand_rational(rng);
        Rational c = rand_rational(rng);
        bool bad = false;
        for (long j = 0; j < n; ++j)
            if ((c + Rational(j)).is_zero()) bad = true;
        if (bad) continue;
        chu_vandermonde(n, b, c);
        ++done;
    }
    return checked_outcome("500 random instances");
}

CheckOutcome check_saalschutz_random(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> nd(0, 12);
    long done = 0;
    while (done < 500) {
        long n = nd(rng);
        Rational a = rand_rational(rng);
        Rational b = rand_rational(rng);
        Rational c = rand_rational(rng);
        Rational e = Rational(1) + a + b - c - Rational(n);
        bool bad = false;
        for (long j = 0; j < n; ++j)
            if ((c + Rational(j)).is_zero() || (e + Rational(j)).is_zero() ||
                (c - a - b + Rational(j)).is_zero())
                bad = true;
        if (bad) continue;
        pfaff_saalschutz(a, b, c, n);
        ++done;
    }
    return checked_outcome("500 random instances");
}

CheckOutcome check_contiguous_random(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> nd(1, 8);
    std::uniform_int_distribution<int> rd(2, 4), zd(0, 3);
    const Rational zs[4] = {Rational(1), Rational(-1), Rational(1, 2), Rational(-2, 3)};
    long done = 0;
    while (done < 120) {
        long n = nd(rng);
        int r = rd(rng);
        std::vector<Rational> a, bparams;
        a.push_back(Rational(-n));
        for (int i = 1; i < r; ++i) a.push_back(rand_rational(rng));
        int s = r - 1;
        bool bad = false;
        for (int i = 0; i < s; ++i) {
            Rational bi = rand_rational(rng);
            for (long j = 0; j <= n + 1; ++j)
                if ((bi + Rational(j)).is_zero()) bad = true;
            if (bi.is_zero()) bad = true;
            bparams.push_back(bi);
        }
        if (bad || a.back() == Rational(1)) continue;
        contiguous_check(a, bparams, zs[zd(rng)], n + 1);
        ++done;
    }
    return checked_outcome("120 random terminating instances");
}

CheckOutcome check_cancelled_pairs(const SuiteConfig& cfg) {
    for (const auto& [a, b] : grid_pairs(cfg)) {
        for (long n = 0; n <= 8; ++n) {
            Rational s = a + b + Rational(1);
            TruncatedSeries<Rational> ser{
                {s, Rational(1) + s / Rational(2), a + Rational(1), Rational(n) + s + Rational(1),
                 Rational(-n)},
                {s / Rational(2), b + Rational(1), Rational(-n), Rational(n) + s + Rational(1)},
                Rational(1),
                n};
            Rational plain(0);
            for (long k = 0; k <= n; ++k) plain += jacobi_summand(a, b, k);
            require_equal(eval_truncated(ser), plain, "full arrays vs plain sum");
        }
    }
    return checked_outcome("cancellation convention sound on the grid");
}

// ---------------------------------------------------------------- limits suite

CheckOutcome check_limit(const Rational& a, const Rational& b, long n) {
    std::vector<LimitPoint> pts = jacobi_limit_check(a, b, n, {50, 100, 200, 400});
    // n = 0 is exact at every N; only demand decrease when there is error left
    if (pts.back().rel_error >= 1e-12 && !(pts.back().rel_error < pts.front().rel_error))
        throw identity_violation("error shrinks from N=50 to N=400",
                                 std::to_string(pts.back().rel_error),
                                 "< " + std::to_string(pts.front().rel_error));
    return CheckOutcome{std::to_string(pts.back().rel_error), "<= " + std::to_string(10.0 / 400),
                        CheckStatus::pass};
}

CheckOutcome check_series_coherence(const Rational& a, const Rational& b, long n) {
    HahnContext ctx(a, b, 10000);
    Rational s = a + b + Rational(1);
    Rational pref = pochhammer(Rational(10000) + s + Rational(1), n) /
                    pochhammer(s + Rational(1), n) * factorial_r(n) /
                    pochhammer(Rational(1 - 10000), n);
    Rational lhs46 = first_identity(ctx, n, FirstIdentityForm::f65_pair) / pref;
    Rational target = jacobi_sum_closed(b, a, n);  // roles interchanged in the limit
    Rational rel = ((lhs46 - target) / target).abs();
    if (rel > Rational(1, 100))
        throw identity_violation("large-N coherence within 1/100", rel.str(), "<= 1/100");
    return CheckOutcome{lhs46.str(), "~ " + target.str(), CheckStatus::pass};
}

// ------------------------------------------------------------- property suite

CheckOutcome check_field_axioms_rational(std::mt19937_64& rng) {
    for (int i = 0; i < 1000; ++i) {
        Rational x = rand_rational(rng), y = rand_rational(rng), z = rand_rational(rng);
        require_equal((x * y) * z, x * (y * z), "associativity");
        require_equal(x * (y + z), x * y + x * z, "distributivity");
        if (!x.is_zero()) require_equal(x / x, Rational(1), "inverse");
    }
    return checked_outcome("1000 random triples");
}

CheckOutcome check_field_axioms_quadext(std::mt19937_64& rng) {
    const Rational d(2);
    auto rand_q = [&] { return QuadExt(rand_rational(rng), rand_rational(rng), d); };
    for (int i = 0; i < 1000; ++i) {
        QuadExt x = rand_q(), y = rand_q(), z = rand_q();
        if ((x * y) * z != x * (y * z)) throw identity_violation("associativity", (x * y * z).str(), "");
        if (x * (y + z) != x * y + x * z) throw identity_violation("distributivity", x.str(), "");
        if (!x.is_zero() && x * x.inverse() != QuadExt(1))
            throw identity_violation("inverse", (x * x.inverse()).str(), "1");
        if (x.norm() != (x * x.conjugate()).as_rational())
            throw identity_violation("norm", x.norm().str(), (x * x.conjugate()).str());
    }
    return checked_outcome("1000 random triples over sqrt(2)");
}

CheckOutcome check_pochhammer_split(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> kd(0, 20);
    for (int i = 0; i < 200; ++i) {
        Rational a = rand_rational(rng);
        long m = kd(rng), n = kd(rng);
        require_equal(pochhammer(a, m + n), pochhammer(a, m) * pochhammer(a + Rational(m), n),
                      "index additivity");
    }
    return checked_outcome("200 random splits");
}

CheckOutcome check_basis_roundtrip(const FamilySpec& fam, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> dd(0, 12);
    for (int i = 0; i < 200; ++i) {
        long deg = dd(rng);
        std::vector<Rational> c;
        for (long j = 0; j <= deg; ++j) c.push_back(rand_rational(rng));
        Poly p(std::move(c));
        require_equal(basis_recombine(basis_expand(p, fam), fam), p, "round trip");
        if (!p.is_zero()) {
            Poly xq = Poly::x() * p;
            require_equal(deflate_at_zero(xq), p, "deflation inverts multiplication by x");
        }
    }
    return checked_outcome("200 random polynomials");
}

CheckOutcome check_reproducing_random(const FamilySpec& fam, std::mt19937_64& rng, long rounds) {
    std::uniform_int_distribution<long> nd(0, family_cap(fam, 6));
    for (long i = 0; i < rounds; ++i) {
        long n = nd(rng);
        Rational y = rand_rational(rng, -3, 3, 5);
        std::vector<Rational> c;
        for (long j = 0; j <= n; ++j) c.push_back(rand_rational(rng));
        Poly p(std::move(c));
        require_equal(reproduce(fam, n, p, y), p(y), "reproducing property");
        Rational x = rand_rational(rng, -3, 3, 5);
        if (x != y) {
            require_equal(cd_kernel(fam, n, x, y, KernelForm::sum),
                          cd_kernel(fam, n, x, y, KernelForm::quotient), "kernel forms");
            cross_kernel_check(fam, n, x, y);
        }
    }
    return checked_outcome(std::to_string(rounds) + " random instances");
}

CheckOutcome check_kernel_poly_pairing_random(const FamilySpec& fam, std::mt19937_64& rng,
                                              long rounds) {
    Rational x0 = fam.is_hahn() ? Rational(fam.big_n())
                                : (fam.kind() == FamilyKind::laguerre ? Rational(0) : Rational(1));
    long cap = fam.is_hahn() ? fam.big_n() - 1 : 6;
    std::uniform_int_distribution<long> nd(0, cap);
    for (long i = 0; i < rounds; ++i) {
        long n = nd(rng);
        KernelPolyResult kp = kernel_poly(fam, x0, n);
        std::vector<Rational> c;
        for (long j = 0; j <= n; ++j) c.push_back(rand_rational(rng));
        Poly p(std::move(c));
        require_equal(inner_product_n(kp.q, p, fam), kp.cn_over_h0 * p(x0),
                      "kernel polynomial pairing");
    }
    return checked_outcome(std::to_string(rounds) + " random instances");
}

// ------------------------------------------------------------- task assembly

void add_core_tasks(std::vector<Task>& tasks, const SuiteConfig& cfg) {
    std::vector<FamilySpec> fams = continuous_families(cfg);
    for (const auto& [a, b] : grid_pairs(cfg))
        for (long bigN : cfg.big_ns) fams.push_back(FamilySpec::hahn(a, b, bigN));
    for (const FamilySpec& fam : fams) {
        long cap = std::min(cfg.nmax, 8L);
        tasks.push_back({"core_orthogonality", family_params(fam),
                         [fam, cap](std::mt19937_64&) { return check_orthogonality(fam, cap); }});
        tasks.push_back({"core_closed_values", family_params(fam),
                         [fam, cap](std::mt19937_64&) { return check_special_values(fam, cap); }});
        tasks.push_back({"core_kernel_forms", family_params(fam), [fam](std::mt19937_64&) {
                             return check_kernel_forms(fam, 6);
                         }});
        if (fam.is_even())
            tasks.push_back({"core_even_recurrence", family_params(fam),
                             [fam, cap](std::mt19937_64&) { return check_even_recurrence(fam, cap); }});
        if (fam.kind() == FamilyKind::jacobi || fam.kind() == FamilyKind::legendre ||
            fam.kind() == FamilyKind::laguerre || fam.is_hahn())
            tasks.push_back({"core_kernel_poly", family_params(fam), [fam, cap](std::mt19937_64&) {
                                 return check_kernel_poly(fam, cap);
                             }});
    }
    for (const Rational& a : cfg.alphas)
        tasks.push_back({"core_quadratic_transform", {{"alpha", a.str()}},
                         [a](std::mt19937_64&) { return check_quadratic_transform(a, 5); }});
}

void add_symmetric_tasks(std::vector<Task>& tasks, const SuiteConfig& cfg) {
    for (const FamilySpec& fam : even_families(cfg)) {
        tasks.push_back({"symmetric_methods", family_params(fam),
                         [fam, &cfg](std::mt19937_64&) {
                             return check_ps_methods(fam, cfg.nmax, cfg.nmax_direct);
                         }});
        tasks.push_back({"symmetric_closed_value", family_params(fam),
                         [fam, &cfg](std::mt19937_64&) {
                             return check_ps_closed_value(fam, cfg.nmax);
                         }});
        tasks.push_back({"symmetric_recurrence_equiv", family_params(fam),
                         [fam, &cfg](std::mt19937_64&) {
                             return check_ps_recurrence_equiv(fam, cfg.nmax);
                         }});
        tasks.push_back({"symmetric_projection", family_params(fam),
                         [fam](std::mt19937_64& rng) { return check_ps_projection(fam, rng); }});
    }
}

void add_jacobi_tasks(std::vector<Task>& tasks, const SuiteConfig& cfg) {
    for (const auto& [a, b] : grid_pairs(cfg)) {
        ParamMap pm{{"alpha", a.str()}, {"beta", b.str()}};
        Rational aa = a, bb = b;
        tasks.push_back({"jacobi_kernel_integral", pm, [aa, bb, &cfg](std::mt19937_64&) {
                             return check_jacobi_kernel_integral(aa, bb, cfg.nmax);
                         }});
        tasks.push_back({"jacobi_sum_certificate", pm, [aa, bb](std::mt19937_64&) {
                             return check_jacobi_certificate(aa, bb, 30);
                         }});
        tasks.push_back({"jacobi_well_poised", pm, [aa, bb](std::mt19937_64&) {
                             return check_jacobi_well_poised(aa, bb, 12);
                         }});
    }
}

void add_laguerre_tasks(std::vector<Task>& tasks, const SuiteConfig& cfg) {
    for (const Rational& a : cfg.alphas) {
        ParamMap pm{{"alpha", a.str()}};
        tasks.push_back({"laguerre_kernel_integral", pm, [a, &cfg](std::mt19937_64&) {
                             return check_laguerre_kernel_integral(a, cfg.nmax);
                         }});
        tasks.push_back({"laguerre_sum_certificate", pm, [a](std::mt19937_64&) {
                             return check_laguerre_certificate(a, 30);
                         }});
        tasks.push_back({"laguerre_appell_chain", pm, [a](std::mt19937_64&) {
                             return check_laguerre_appell(a, 6);
                         }});
    }
}

void add_hahn_tasks(std::vector<Task>& tasks, const SuiteConfig& cfg) {
    for (const auto& [a, b] : grid_pairs(cfg)) {
        for (long bigN : cfg.big_ns) {
            ParamMap pm{{"alpha", a.str()}, {"beta", b.str()}, {"N", std::to_string(bigN)}};
            Rational aa = a, bb = b;
            for (const char* which : {"connection", "first", "chain", "second"}) {
                std::string w = which;
                tasks.push_back({std::string("hahn_") + which, pm,
                                 [aa, bb, bigN, w](std::mt19937_64&) {
                                     return check_hahn_point(aa, bb, bigN, w);
                                 }});
            }
        }
    }
}

void add_hyp_tasks(std::vector<Task>& tasks, const SuiteConfig& cfg) {
    tasks.push_back({"hyp_chu_vandermonde", {}, [](std::mt19937_64& rng) {
                         return check_chu_random(rng);
                     }});
    tasks.push_back({"hyp_saalschutz", {}, [](std::mt19937_64& rng) {
                         return check_saalschutz_random(rng);
                     }});
    tasks.push_back({"hyp_contiguous", {}, [](std::mt19937_64& rng) {
                         return check_contiguous_random(rng);
                     }});
    tasks.push_back({"hyp_cancelled_pairs", {}, [&cfg](std::mt19937_64&) {
                         return check_cancelled_pairs(cfg);
                     }});
}

void add_limits_tasks(std::vector<Task>& tasks, const SuiteConfig&) {
    const std::vector<std::pair<Rational, Rational>> pts = {
        {Rational(0), Rational(0)}, {Rational(1), Rational(0)}, {Rational(1, 2), Rational(1, 3)}};
    for (const auto& [a, b] : pts) {
        for (long n = 0; n <= 4; ++n) {
            ParamMap pm{{"alpha", a.str()}, {"beta", b.str()}, {"n", std::to_string(n)}};
            Rational aa = a, bb = b;
            tasks.push_back({"limit_to_continuous", pm, [aa, bb, n](std::mt19937_64&) {
                                 return check_limit(aa, bb, n);
                             }});
            tasks.push_back({"limit_series_coherence", pm, [aa, bb, n](std::mt19937_64&) {
                                 return check_series_coherence(aa, bb, n);
                             }});
        }
    }
}

void add_property_tasks(std::vector<Task>& tasks, const SuiteConfig& cfg) {
    tasks.push_back({"prop_field_axioms_rational", {}, [](std::mt19937_64& rng) {
                         return check_field_axioms_rational(rng);
                     }});
    tasks.push_back({"prop_field_axioms_quadext", {}, [](std::mt19937_64& rng) {
                         return check_field_axioms_quadext(rng);
                     }});
    tasks.push_back({"prop_pochhammer_split", {}, [](std::mt19937_64& rng) {
                         return check_pochhammer_split(rng);
                     }});
    std::vector<FamilySpec> fams = {FamilySpec::legendre(), FamilySpec::hermite(),
                                    FamilySpec::jacobi(Rational(1, 2), Rational(-1, 3)),
                                    FamilySpec::laguerre(Rational(1, 2)),
                                    FamilySpec::hahn(Rational(0), Rational(1, 2), 12)};
    for (const FamilySpec& fam : fams) {
        tasks.push_back({"prop_basis_roundtrip", family_params(fam), [fam](std::mt19937_64& rng) {
                             return check_basis_roundtrip(fam, rng);
                         }});
        tasks.push_back({"prop_reproducing", family_params(fam), [fam](std::mt19937_64& rng) {
                             return check_reproducing_random(fam, rng, 25);
                         }});
        if (fam.kind() != FamilyKind::hermite && fam.kind() != FamilyKind::legendre)
            tasks.push_back({"prop_kernel_pairing", family_params(fam),
                             [fam](std::mt19937_64& rng) {
                                 return check_kernel_poly_pairing_random(fam, rng, 25);
                             }});
    }
}

}  // namespace

SuiteConfig SuiteConfig::defaults() {
    SuiteConfig cfg;
    cfg.suites = known_suites();
    for (const char* s : {"-1/2", "-1/3", "0", "1/2", "1", "7/3"}) {
        cfg.alphas.push_back(Rational::from_string(s));
        cfg.betas.push_back(Rational::from_string(s));
    }
    cfg.big_ns = {3, 5, 8, 12};
    return cfg;
}

const std::vector<std::string>& SuiteConfig::known_suites() {
    static const std::vector<std::string> all = {"core",  "symmetric", "jacobi", "laguerre",
                                                 "hahn",  "hyp",       "limits", "properties"};
    return all;
}

void SuiteConfig::validate() const {
    const auto& known = known_suites();
    for (const std::string& s : suites)
        if (std::find(known.begin(), known.end(), s) == known.end())
            throw std::invalid_argument("unknown suite '" + s + "'");
    if (alphas.empty() || betas.empty() || big_ns.empty())
        throw std::invalid_argument("empty parameter grid");
    if (nmax < 0) throw std::invalid_argument("nmax must be nonnegative");
    if (jobs < 1) throw std::invalid_argument("jobs must be positive");
    if (format != "text" && format != "json")
        throw std::invalid_argument("format must be text or json");
    for (const Rational& a : alphas)
        if (a <= Rational(-1)) throw std::invalid_argument("alpha must exceed -1");
    for (const Rational& b : betas)
        if (b <= Rational(-1)) throw std::invalid_argument("beta must exceed -1");
    for (long n : big_ns)
        if (n < 3) throw std::invalid_argument("N must be at least 3");
}

RunOutcome run_suites(const SuiteConfig& config) {
    config.validate();
    std::vector<std::string> suites =
        config.suites.empty() ? SuiteConfig::known_suites() : config.suites;

    std::vector<Task> tasks;
    for (const std::string& s : suites) {
        if (s == "core") add_core_tasks(tasks, config);
        else if (s == "symmetric") add_symmetric_tasks(tasks, config);
        else if (s == "jacobi") add_jacobi_tasks(tasks, config);
        else if (s == "laguerre") add_laguerre_tasks(tasks, config);
        else if (s == "hahn") add_hahn_tasks(tasks, config);
        else if (s == "hyp") add_hyp_tasks(tasks, config);
        else if (s == "limits") add_limits_tasks(tasks, config);
        else if (s == "properties") add_property_tasks(tasks, config);
    }

    std::vector<IdentityReport> reports(tasks.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            const Task& t = tasks[i];
            IdentityReport& rep = reports[i];
            rep.identity_id = t.id;
            rep.params = t.params;
            std::mt19937_64 rng(task_seed(config.seed, t));
            auto t0 = std::chrono::steady_clock::now();
            try {
                CheckOutcome out = t.fn(rng);
                rep.lhs = out.lhs;
                rep.rhs = out.rhs;
                rep.status = out.status;
            } catch (const identity_violation& e) {
                rep.lhs = e.lhs();
                rep.rhs = e.rhs();
                rep.status = CheckStatus::fail;
            } catch (const std::exception& e) {
                rep.lhs = std::string("error: ") + e.what();
                rep.rhs = "";
                rep.status = CheckStatus::fail;
            }
            auto t1 = std::chrono::steady_clock::now();
            rep.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        }
    };
    int jobs = std::max(1, config.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::stable_sort(reports.begin(), reports.end(),
                     [](const IdentityReport& x, const IdentityReport& y) {
                         if (x.identity_id != y.identity_id) return x.identity_id < y.identity_id;
                         return x.params < y.params;
                     });

    RunOutcome out;
    out.reports = std::move(reports);
    for (const IdentityReport& r : out.reports) {
        if (r.status == CheckStatus::pass) ++out.passed;
        else if (r.status == CheckStatus::fail) ++out.failed;
        else ++out.skipped;
    }
    out.exit_code = out.failed > 0 ? 1 : 0;
    return out;
}

}  // namespace opexact
