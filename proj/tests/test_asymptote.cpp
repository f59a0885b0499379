#include "doctest.h"

#include "multizeta/asymptote.hpp"
#include "multizeta/multiple_zeta.hpp"

#include <cmath>

using namespace multizeta;
using doctest::Approx;

namespace {

int sign_law(int r, int k) { return (r + r / k) % 2 == 0 ? 1 : -1; }

double factorial(int n) { return std::tgamma(n + 1.0); }

}  // namespace

TEST_CASE("coefficient_closed_form: examples")
{
    CHECK(coefficient_closed_form(3, 3) == Approx(1.0 / 3).epsilon(1e-15));
    CHECK(coefficient_closed_form(4, 2) == Approx(1.0 / 8).epsilon(1e-15));
    CHECK(coefficient_closed_form(1, 1) == 1.0);
    CHECK(coefficient_closed_form(5, 1) == Approx(1.0 / 120).epsilon(1e-15));
    // r = 3, k = 2: q = 1, l = 1, so C = (-1)^1 / 2 * zeta(1/2).
    CHECK(coefficient_closed_form(3, 2) == Approx(1.4603545088095868 / 2).epsilon(1e-13));
    CHECK_THROWS_AS((void)coefficient_closed_form(3, 4), DomainError);
    CHECK_THROWS_AS((void)coefficient_closed_form(3, 0), DomainError);
}

TEST_CASE("coefficient_recursive: examples")
{
    CHECK(coefficient_recursive(2, 2) == Approx(-0.5).epsilon(1e-15));
    CHECK(coefficient_recursive(3, 2) == Approx(0.7301772544047934).epsilon(1e-12));
    CHECK(coefficient_recursive(4, 1) == Approx(1.0 / 24).epsilon(1e-15));
    CHECK_THROWS_AS((void)coefficient_recursive(2, 3), DomainError);
}

TEST_CASE("coefficients: the two paths agree and obey the sign law")
{
    for (int r = 1; r <= 10; ++r) {
        for (int k = 1; k <= r; ++k) {
            const double a = coefficient_closed_form(r, k);
            const double b = coefficient_recursive(r, k);
            CAPTURE(r);
            CAPTURE(k);
            CHECK(std::fabs(a - b) <= 1e-10 * std::max(1.0, std::fabs(a)));
        }
    }
    for (int r = 1; r <= 12; ++r)
        for (int k = 1; k <= r; ++k) CHECK((coefficient_closed_form(r, k) > 0 ? 1 : -1) == sign_law(r, k));
}

TEST_CASE("coefficients: C_r(1) = 1/r! and the k-periodicity ratio")
{
    for (int r = 1; r <= 12; ++r) CHECK(coefficient_recursive(r, 1) == Approx(1.0 / factorial(r)).epsilon(1e-13));
    for (int k = 2; k <= 5; ++k) {
        for (int q = 1; k * (q + 1) <= 12; ++q) {
            const double ratio = coefficient_closed_form(k * (q + 1), k) / coefficient_closed_form(k * q, k);
            CAPTURE(k);
            CAPTURE(q);
            CHECK(ratio == Approx((k % 2 ? 1.0 : -1.0) / (k * (q + 1))).epsilon(1e-13));
        }
    }
}

TEST_CASE("pole_table: orders and locations")
{
    const auto t4 = pole_table(4);
    REQUIRE(t4.size() == 4);
    CHECK(t4[1].k == 2);
    CHECK(t4[1].order == 2);
    CHECK(t4[1].location() == Rational(1, 2));
    const auto t6 = pole_table(6);
    CHECK(t6[1].order == 3);
    CHECK(t6[2].order == 2);
    CHECK(pole_table(5)[3].order == 1);
    for (int r = 1; r <= 12; ++r)
        for (const auto& p : pole_table(r)) {
            CHECK(p.order == r / p.k);
            CHECK(p.order >= 1);
        }
}

TEST_CASE("near_pole_model: examples and window")
{
    CHECK(near_pole_model(2, 1, 1.0 + 1e-3) == Approx(5e5).epsilon(1e-12));  // (1/2) (s - 1)^-2
    CHECK(near_pole_model(4, 2, 0.5 - 1e-4) > 0);
    CHECK(near_pole_model(4, 2, 0.5 + 1e-4) > 0);
    CHECK(near_pole_model(5, 2, 0.5 - 1e-4) < 0);
    CHECK(near_pole_model(5, 2, 0.5 + 1e-4) < 0);
    CHECK_THROWS_AS((void)near_pole_model(4, 2, 0.5), DomainError);
    CHECK_THROWS_AS((void)near_pole_model(4, 2, 0.56), DomainError);
    CHECK_THROWS_AS((void)near_pole_model(4, 5, 0.2 + 1e-4), DomainError);
}

TEST_CASE("near-pole ratio tends to 1 on both sides")
{
    const double dists[] = {1e-2, 1e-3, 1e-4};
    for (int r = 1; r <= 8; ++r) {
        for (int k = 1; k <= r; ++k) {
            for (int side : {-1, 1}) {
                double dev[3];
                for (int i = 0; i < 3; ++i) {
                    const double s = 1.0 / k + side * dists[i];
                    dev[i] = std::fabs(multiple_zeta(s, r).value / near_pole_model(r, k, s) - 1.0);
                }
                CAPTURE(r);
                CAPTURE(k);
                CAPTURE(side);
                CHECK(dev[2] <= 0.1);
                CHECK(dev[1] < dev[0]);
                CHECK(dev[2] < dev[1]);
            }
        }
    }
}

TEST_CASE("growth_prediction: model selection and signs")
{
    CHECK(growth_prediction(3, LargeS{10.0}).model == GrowthModel::LargeSFactorial);
    CHECK(growth_prediction(3, LargeS{10.0}).predicted_log_abs == Approx(-10 * std::log(6.0)).epsilon(1e-14));
    CHECK(growth_prediction(1, NegOdd{11}).model == GrowthModel::NegOddROdd);
    CHECK(growth_prediction(1, NegOdd{11}).predicted_sign == 1);
    CHECK(growth_prediction(2, NegOdd{11}).model == GrowthModel::NegOddR2);
    CHECK(growth_prediction(4, NegOdd{11}).model == GrowthModel::NegOddREven);
    CHECK(growth_prediction(4, NegOdd{11}).predicted_sign == -1);
    CHECK(to_string(GrowthModel::NegOddR2) == "NEG_ODD_R2");
    CHECK_THROWS_AS((void)growth_prediction(3, NegOdd{4}), DomainError);
    CHECK_THROWS_AS((void)growth_prediction(3, LargeS{1.0}), DomainError);

    // zeta(-11) = 691/32760 > 0
    CHECK(eval_exact(11, 1)[1].sign() == growth_prediction(1, NegOdd{11}).predicted_sign);
}

TEST_CASE("growth_prediction: r = 2 identity is exact")
{
    for (int k = 1; k <= 41; k += 2) {
        const auto p = eval_exact(k, 2);
        CHECK((p[2] - Rational(1, 2) * p[1] * p[1]).is_zero());
        CHECK(growth_prediction(2, NegOdd{k}).predicted_log_abs == Approx(p[2].log_abs()).epsilon(1e-13));
    }
}

TEST_CASE("growth_prediction: relative gaps shrink as k grows")
{
    for (int r : {1, 3, 5, 4, 6}) {
        double prev = INFINITY;
        for (int k : {21, 41, 61}) {
            const Rational exact = eval_exact(k, r)[r];
            const auto pred = growth_prediction(r, NegOdd{k});
            const double gap = std::fabs(exact.log_abs() - pred.stirling_log_abs) / std::fabs(pred.stirling_log_abs);
            CAPTURE(r);
            CAPTURE(k);
            CHECK(exact.sign() == pred.predicted_sign);
            CHECK(gap < prev);
            CHECK(std::fabs(exact.log_abs() - pred.predicted_log_abs) <= 1e-12 * std::fabs(pred.predicted_log_abs));
            prev = gap;
        }
    }
}

TEST_CASE("upper_bound_large_s: examples and dominance")
{
    CHECK(upper_bound_large_s(1, 2.0) == Approx(2.0).epsilon(1e-15));
    CHECK(upper_bound_large_s(2, 3.0) == Approx(0.3125).epsilon(1e-14));
    CHECK_THROWS_AS((void)upper_bound_large_s(2, 1.0), DomainError);
    // bound * (r!)^s -> 1
    double prev = INFINITY;
    for (double s : {10.0, 20.0, 40.0, 80.0}) {
        const double scaled = upper_bound_large_s(3, s) * std::pow(6.0, s);
        CHECK(scaled < prev);
        prev = scaled;
    }
    // at s = 80 the (k-1)/k powers are below 1e-14; only the 1 + r/(s-1) factor is left
    CHECK(prev == Approx(1.0 + 3.0 / 79.0).epsilon(1e-12));

    for (int r = 1; r <= 6; ++r) {
        for (double s : {1.5, 2.0, 4.0, 10.0, 20.0, 40.0}) {
            // Positive series; the float recursion cancels once zeta_r(s) << 1.
            const double v = eval_series_oracle(s, {20000, r});
            CAPTURE(r);
            CAPTURE(s);
            CHECK(v <= upper_bound_large_s(r, s));
            CHECK(v >= std::exp(-s * std::lgamma(r + 1.0)) * (1 - 1e-12));
        }
    }
}

TEST_CASE("large s: zeta_r(s) (r!)^s -> 1 and the successive ratio -> 1/r!")
{
    for (int r = 1; r <= 6; ++r) {
        double prev = INFINITY;
        for (double s : {10.0, 20.0, 40.0}) {
            const double scaled = std::exp(std::log(eval_series_oracle(s, {400, r})) + s * std::lgamma(r + 1.0));
            CAPTURE(r);
            CAPTURE(s);
            CHECK(scaled >= 1.0);
            CHECK(scaled < prev);
            prev = scaled;
        }
        CHECK(prev <= 1.01);
        const double ratio = eval_series_oracle(41.0, {400, r}) / eval_series_oracle(40.0, {400, r});
        CHECK(ratio == Approx(1.0 / std::tgamma(r + 1.0)).epsilon(0.02));
    }
}

TEST_CASE("fixed s: zeta_r(s) decreases to 0 in r")
{
    for (double s : {1.5, 2.0}) {
        double prev = INFINITY;
        for (int r = 2; r <= 12; ++r) {
            const double v = eval_series_oracle(s, {5000, r});
            CAPTURE(s);
            CAPTURE(r);
            CHECK(v < prev);
            prev = v;
        }
        CHECK(prev < 1e-6);
    }
}
