#include "multizeta/asymptote.hpp"

#include "multizeta/multiple_zeta.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>

namespace multizeta {

namespace {

void check_rk(int r, int k, const char* who)
{
    if (r < 1 || k < 1 || k > r)
        throw DomainError(std::string(who) + ": need 1 <= k <= r");
}

double parity_sign(long exponent) { return exponent % 2 == 0 ? 1.0 : -1.0; }

double zeta_real(double s, const ZetaParams& params) { return riemann_zeta(s, params).value; }

// 1 / (k^q q!)
double inverse_power_factorial(int k, int q)
{
    double out = 1.0;
    for (int i = 1; i <= q; ++i) out /= static_cast<double>(k) * i;
    return out;
}

}  // namespace

double coefficient_closed_form(int r, int k, const ZetaParams& params)
{
    check_rk(r, k, "coefficient_closed_form");
    if (k == 1) return inverse_power_factorial(1, r);
    if (k == r) return parity_sign(r - 1) / r;

    const int q = r / k;
    const int l = r % k;
    const double factor = parity_sign(static_cast<long>(k - 1) * q) * inverse_power_factorial(k, q);
    if (l == 0) return factor;
    return factor * multiple_zeta(1.0 / k, l, params).value;
}

double coefficient_recursive(int r, int k, const ZetaParams& params)
{
    check_rk(r, k, "coefficient_recursive");
    // memo[m] = C_m(k) for k <= m <= r
    std::vector<std::optional<double>> memo(static_cast<std::size_t>(r) + 1);
    auto solve = [&](auto&& self, int m) -> double {
        auto& slot = memo[static_cast<std::size_t>(m)];
        if (slot) return *slot;
        double value = 0.0;
        if (m == k) {
            value = parity_sign(m - 1) / m;
        } else {
            const int top = m / k;
            double acc = 0.0;
            for (int j = 1; j <= m - k; ++j) {
                if (j == k || (m - j) / k != top) continue;
                acc += parity_sign(j - 1) * zeta_real(static_cast<double>(j) / k, params) * self(self, m - j);
            }
            const double d = (2 * k <= m) ? self(self, m - k)
                                          : multiple_zeta(1.0 / k, m - k, params).value;
            acc += parity_sign(k - 1) * d;
            value = acc / m;
        }
        slot = value;
        return value;
    };
    return solve(solve, r);
}

std::vector<PoleSpec> pole_table(int r, const ZetaParams& params)
{
    if (r < 1) throw DomainError("pole_table: r must be >= 1");
    std::vector<PoleSpec> out;
    out.reserve(static_cast<std::size_t>(r));
    for (int k = 1; k <= r; ++k) {
        PoleSpec spec{r, k, r / k, coefficient_closed_form(r, k, params)};
        const double expected = parity_sign(r + r / k);
        if (!(spec.coefficient * expected > 0.0))
            throw std::logic_error("pole_table: sign law violated at r=" + std::to_string(r) +
                                   ", k=" + std::to_string(k));
        out.push_back(spec);
    }
    return out;
}

double near_pole_model(int r, int k, double s, const ZetaParams& params)
{
    check_rk(r, k, "near_pole_model");
    const double gap = std::fabs(s - 1.0 / k);
    if (!(gap > 0.0 && gap <= 0.1 / k))
        throw DomainError("near_pole_model: s must satisfy 0 < |s - 1/k| <= 0.1/k");
    return coefficient_closed_form(r, k, params) * std::pow(k * s - 1.0, -(r / k));
}

std::string to_string(GrowthModel model)
{
    switch (model) {
    case GrowthModel::LargeSFactorial: return "LARGE_S_FACTORIAL";
    case GrowthModel::NegOddROdd: return "NEG_ODD_R_ODD";
    case GrowthModel::NegOddR2: return "NEG_ODD_R2";
    case GrowthModel::NegOddREven: return "NEG_ODD_R_EVEN";
    }
    return "UNKNOWN";
}

namespace {

// log |zeta(-n)| from the exact Bernoulli value.
double log_abs_zeta_neg(int n) { return zeta_neg_int_exact(n).log_abs(); }

// log of 2 k^{1/2} / sqrt(2 pi) * (k / (2 pi e))^k, the Stirling form of |zeta(-k)|.
double log_k_over_2pie(double k) { return std::log(k / (2.0 * std::numbers::pi * std::numbers::e)); }

}  // namespace

GrowthPrediction growth_prediction(int r, GrowthRegime regime)
{
    if (r < 1) throw DomainError("growth_prediction: r must be >= 1");
    GrowthPrediction out;
    out.r = r;

    if (const auto* large = std::get_if<LargeS>(&regime)) {
        if (!(large->s > 1.0)) throw DomainError("growth_prediction: large_s needs s > 1");
        out.model = GrowthModel::LargeSFactorial;
        out.predicted_log_abs = -large->s * std::lgamma(r + 1.0);
        out.stirling_log_abs = out.predicted_log_abs;
        out.predicted_sign = 1;
        return out;
    }

    const int k = std::get<NegOdd>(regime).k;
    if (k < 1 || k % 2 == 0) throw DomainError("growth_prediction: neg_odd needs odd k >= 1");
    if (static_cast<long>(r) * k + 1 > kBernoulliHardCap)
        throw ResourceError("growth_prediction: r * k exceeds the Bernoulli cap");
    const double kk = k;
    const double log_pi = std::log(std::numbers::pi);

    if (r % 2 == 1) {
        out.model = GrowthModel::NegOddROdd;
        out.predicted_log_abs = log_abs_zeta_neg(r * k) - std::log(r);
        out.stirling_log_abs = std::log(2.0) + 0.5 * std::log(kk) - 0.5 * std::log(2.0 * std::numbers::pi) +
                               (r * kk - 0.5) * std::log(static_cast<double>(r)) + r * kk * log_k_over_2pie(kk);
        out.predicted_sign = ((static_cast<long>(r) * k + 1) / 2) % 2 == 0 ? 1 : -1;
    } else if (r == 2) {
        out.model = GrowthModel::NegOddR2;
        const Rational z = zeta_neg_int_exact(k);
        out.predicted_log_abs = (z * z / Rational(2)).log_abs();
        out.stirling_log_abs = std::log(kk) - log_pi + 2.0 * kk * log_k_over_2pie(kk);
        out.predicted_sign = 1;
    } else {
        out.model = GrowthModel::NegOddREven;
        out.predicted_log_abs = log_abs_zeta_neg(k) + log_abs_zeta_neg((r - 1) * k) - std::log(r - 1.0);
        out.stirling_log_abs = std::log(2.0 * kk) - log_pi + ((r - 1) * kk - 0.5) * std::log(r - 1.0) +
                               r * kk * log_k_over_2pie(kk);
        out.predicted_sign = ((r / 2) - 1) % 2 == 0 ? 1 : -1;
    }
    return out;
}

double upper_bound_large_s(int r, double s)
{
    if (r < 1) throw DomainError("upper_bound_large_s: r must be >= 1");
    if (!(s > 1.0)) throw DomainError("upper_bound_large_s: s must be > 1");
    double log_bound = -s * std::lgamma(r + 1.0);
    for (int k = 2; k <= r; ++k)
        log_bound += std::log1p(std::pow((k - 1.0) / k, s) * (1.0 + k / (s - 1.0)));
    log_bound += std::log1p(r / (s - 1.0));
    return std::exp(log_bound);
}

}  // namespace multizeta
