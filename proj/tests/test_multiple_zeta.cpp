#include "doctest.h"
#include "gen.hpp"

#include "multizeta/multiple_zeta.hpp"

#include <cmath>
#include <numbers>

using namespace multizeta;
using doctest::Approx;

TEST_CASE("eval_profile: examples")
{
    const double pi4 = std::pow(std::numbers::pi, 4);
    const auto p = eval_profile(2.0, 2);
    CHECK(p[0].value == 1.0);
    CHECK(p[2].value == Approx(pi4 / 120).epsilon(1e-14));
    CHECK(eval_profile(0.0, 2)[2].value == Approx(0.375).epsilon(1e-14));
    CHECK(std::fabs(multiple_zeta(0.6268175, 2).value) < 1e-5);
    CHECK(p.r_max == 2);
    CHECK(p.argument == 2.0);
}

TEST_CASE("eval_profile: complex arguments against mpmath")
{
    const struct {
        complex s;
        int r;
        complex v;
    } table[] = {
        {{0.3, 2.0}, 3, {0.15213872230527301835, 0.1481142527613110478}},
        {{-1.5, 0.5}, 4, {0.00089946797638544340574, 0.0081248064471309484816}},
        {{2.0, 1.0}, 5, {0.00061247272905335845088, -0.00023981542740528480803}},
    };
    for (const auto& row : table) {
        CAPTURE(row.s);
        const auto v = multiple_zeta(row.s, row.r);
        CHECK(std::abs(v.value - row.v) <= 1e-11 * std::abs(row.v));
    }
    CHECK_THROWS_AS((void)eval_profile(complex(0.3, 12.6), 4), DomainError);
    CHECK_NOTHROW((void)eval_profile(complex(0.3, 12.4), 4));
}

TEST_CASE("eval_profile: real reference values")
{
    // mpmath, 30 digits
    CHECK(multiple_zeta(-1.3, 4).value == Approx(0.00091414595938664778253).epsilon(1e-11));
    CHECK(multiple_zeta(0.9, 7).value == Approx(-622.66712737195063078).epsilon(1e-11));
    CHECK(multiple_zeta(-17.5, 10).value == Approx(-7.4526910304300895731e+176).epsilon(1e-9));
}

TEST_CASE("eval_profile: every level satisfies the recursion")
{
    gen::Source g(0x5eed'0101);
    for (int i = 0; i < 50; ++i) {
        const int r_max = g.integer(1, 10);
        const double s = g.off_poles(-10.0, 5.0, r_max, 1e-3);
        const auto p = eval_profile(s, r_max);
        for (int r = 1; r <= r_max; ++r) {
            double acc = 0.0, err = 0.0;
            for (int j = 1; j <= r; ++j) {
                const auto z = riemann_zeta(j * s);
                const double term = p[r - j].value * z.value;
                acc += (j % 2 ? term : -term);
                err += std::fabs(term) * 4e-16 + p[r - j].abs_err_est * std::fabs(z.value);
            }
            CAPTURE(s);
            CAPTURE(r);
            CHECK(std::fabs(r * p[r].value - acc) <= err + r * p[r].abs_err_est);
        }
    }
}

TEST_CASE("eval_profile: recursion agrees with the closed forms for r = 2, 3, 4")
{
    gen::Source g(0x5eed'0102);
    for (int i = 0; i < 500; ++i) {
        const int r = g.integer(2, 4);
        const double s = g.off_poles(-10.0, 5.0, r, 1e-3);
        const auto a = multiple_zeta(s, r);
        const auto b = explicit_smallr(s, r);
        CAPTURE(s);
        CAPTURE(r);
        // Relative where the value is not itself lost in cancellation; near a zero of zeta_r
        // the bound falls back to the propagated absolute estimates.
        CHECK(std::fabs(a.value - b.value) <=
              1e-9 * std::max(std::fabs(a.value), std::fabs(b.value)) + 4.0 * (a.abs_err_est + b.abs_err_est));
    }
}

TEST_CASE("explicit_smallr: examples and domain")
{
    CHECK(explicit_smallr(2.0, 2).value == Approx(std::pow(std::numbers::pi, 4) / 120).epsilon(1e-14));
    CHECK(explicit_smallr(-1.0, 3).value == Approx(139.0 / 51840).epsilon(1e-12));
    CHECK(explicit_smallr(0.0, 4).value == Approx(35.0 / 128).epsilon(1e-13));
    CHECK_THROWS_AS((void)explicit_smallr(2.0, 5), DomainError);
    CHECK_THROWS_AS((void)explicit_smallr(1.0 / 3, 3), PoleError);
}

TEST_CASE("eval_exact: examples")
{
    CHECK(eval_exact(1, 2)[2] == Rational(1, 288));
    CHECK(eval_exact(1, 3)[3] == Rational(139, 51840));
    CHECK(eval_exact(2, 5)[5].is_zero());
    CHECK(eval_exact(0, 4)[4] == Rational(35, 128));
    CHECK(eval_exact(1, 1)[1] == Rational(-1, 12));
    CHECK(eval_exact(3, 0)[0] == Rational(1));
    CHECK_THROWS_AS((void)eval_exact(500, 5), ResourceError);
    CHECK_THROWS_AS((void)eval_exact(-1, 2), DomainError);
}

TEST_CASE("eval_exact: zeta_r(0) = (-1)^r binom(2r, r) / 4^r")
{
    const auto p = eval_exact(0, 30);
    for (int r = 0; r <= 30; ++r) {
        mpz_class four_r;
        mpz_ui_pow_ui(four_r.get_mpz_t(), 4, static_cast<unsigned long>(r));
        const Rational want = Rational(mpz_class(binomial(2 * r, r)), four_r) * Rational(r % 2 ? -1 : 1);
        CAPTURE(r);
        CHECK(p[r] == want);
    }
}

TEST_CASE("eval_exact: every entry satisfies the recursion exactly")
{
    for (int n : {0, 1, 2, 5, 9}) {
        const auto p = eval_exact(n, 12);
        for (int r = 1; r <= 12; ++r) {
            Rational acc;
            for (int j = 1; j <= r; ++j) {
                const Rational term = p[r - j] * zeta_neg_int_exact(j * n);
                acc += (j % 2 ? term : -term);
            }
            CAPTURE(n);
            CAPTURE(r);
            CHECK(acc == Rational(r) * p[r]);
        }
    }
}

TEST_CASE("trivial zeros: zeta_r(-2n) = 0 exactly")
{
    for (int n = 1; n <= 4; ++n)
        for (int r = 1; r <= 10; ++r) CHECK(eval_exact(2 * n, r)[r].is_zero());
}

TEST_CASE("exact and float paths agree at s = 0, -1, -3, -5, -7")
{
    for (int n : {0, 1, 3, 5, 7}) {
        const auto exact = eval_exact(n, 10);
        const auto fl = eval_profile(static_cast<double>(-n), 10);
        for (int r = 1; r <= 10; ++r) {
            const Rational& q = exact[r];
            const double v = fl[r].value;
            CAPTURE(n);
            CAPTURE(r);
            CAPTURE(v);
            if (std::fabs(v) > 1e15) {
                CHECK(v * q.sign() > 0);
                CHECK(std::fabs(std::log(std::fabs(v)) - q.log_abs()) <= 1e-9);
            } else {
                CHECK(std::fabs(v - q.to_double()) <= 1e-9 * std::fabs(q.to_double()));
            }
        }
    }
}

TEST_CASE("series oracle: examples")
{
    CHECK(eval_series_oracle(2.0, {1'000'000, 1}) == Approx(1.6449330668).epsilon(1e-10));
    CHECK(eval_series_oracle(5.0, {3, 3}) == Approx(std::pow(6.0, -5)).epsilon(1e-15));
    CHECK(eval_series_oracle(3.0, {2, 3}) == 0.0);
    // truncation gap at M = 2000 is zeta(3) * sum_{m > 2000} m^-3, about zeta(3) / (2 * 2000^2)
    const double gap = multiple_zeta(3.0, 2).value - eval_series_oracle(3.0, {2000, 2});
    CHECK(gap > 0);
    CHECK(gap == Approx(riemann_zeta(3.0).value / (2.0 * 2000.5 * 2000.5)).epsilon(1e-3));
    CHECK_THROWS_AS((void)eval_series_oracle(1.0, {100, 2}), DomainError);
}

TEST_CASE("series oracle: converges monotonically inside the tail bound")
{
    for (double s : {1.5, 2.0, 3.0, 5.0}) {
        for (int r = 1; r <= 6; ++r) {
            const double exact = multiple_zeta(s, r).value;
            // The float recursion itself cancels for tiny zeta_r(s); skip the gap-shrinks part
            // once the truncation gap falls under its error estimate.
            const double floor_err = 4.0 * multiple_zeta(s, r).abs_err_est;
            double prev_gap = INFINITY;
            long m = 250;
            for (; m <= 4000; m *= 2) {
                const double v = eval_series_oracle(s, {m, r});
                const double gap = exact - v;
                CAPTURE(s);
                CAPTURE(r);
                CAPTURE(m);
                CHECK(v <= exact + floor_err);
                if (gap > floor_err) CHECK(gap < prev_gap);
                prev_gap = gap;
            }
            // Tail bound: tuples with largest index > M contribute at most
            // zeta_{r-1}(s) * sum_{m > M} m^{-s} <= zeta_{r-1}(s) (M+1)^{-s} (1 + (M+1)/(s-1)).
            const double m1 = 4001.0;
            const double lower = r == 1 ? 1.0 : multiple_zeta(s, r - 1).value;
            const double bound = lower * std::pow(m1, -s) * (1.0 + m1 / (s - 1.0));
            CHECK(prev_gap <= bound + floor_err);
        }
    }
}

TEST_CASE("sign on the initial interval [0, 1/r)")
{
    CHECK(sign_on_initial_interval(0.1, 3) == -1);
    CHECK(sign_on_initial_interval(0.0, 8) == 1);
    CHECK(sign_on_initial_interval(0.0, 1) == -1);
    CHECK_THROWS_AS((void)sign_on_initial_interval(0.25, 4), DomainError);
    CHECK_THROWS_AS((void)sign_on_initial_interval(-0.01, 4), DomainError);

    for (int r = 1; r <= 12; ++r) {
        const double hi = 1.0 / r - 1e-6;
        for (int i = 0; i < 50; ++i) {
            const double s = hi * i / 49.0;
            const double v = multiple_zeta(s, r).value;
            CAPTURE(r);
            CAPTURE(s);
            CHECK((v > 0 ? 1 : -1) == sign_on_initial_interval(s, r));
        }
    }
}

TEST_CASE("eval_profile: domain errors")
{
    CHECK_THROWS_AS((void)eval_profile(0.5, 3), PoleError);
    try {
        (void)eval_profile(1.0 / 3 + 1e-12, 4);
        FAIL("expected a pole error");
    } catch (const PoleError& e) {
        CHECK(e.k() == 3);
    }
    CHECK_NOTHROW((void)eval_profile(1.0 / 3 + 1e-6, 4));
    CHECK_THROWS_AS((void)eval_profile(-60.5, 2), DomainError);
    CHECK_THROWS_AS((void)eval_profile(2.0, -1), DomainError);
    CHECK(eval_profile(0.2, 0)[0].value == 1.0);
}
