#pragma once

// zeta_r(s) = sum_{m_1 < ... < m_r} (m_1 ... m_r)^{-s}, evaluated through
//   r zeta_r(s) = sum_{j=1}^r (-1)^{j-1} zeta_{r-j}(s) zeta(js),  zeta_0 = 1.

#include "multizeta/special.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace multizeta {

/// zeta_0(s), ..., zeta_{r_max}(s) at one argument; values[0] is exactly 1.
template <Scalar T>
struct MultiZetaProfile {
    T argument{};
    int r_max = 0;
    std::vector<EvalResult<T>> values;

    const EvalResult<T>& operator[](int r) const { return values.at(static_cast<std::size_t>(r)); }
};

/// zeta_0(-n), ..., zeta_{r_max}(-n) as exact rationals.
struct ExactProfile {
    int n = 0;
    int r_max = 0;
    std::vector<Rational> values;

    const Rational& operator[](int r) const { return values.at(static_cast<std::size_t>(r)); }
};

/// Finite symmetric sum over indices 1 <= m_1 < ... < m_r <= cutoff.
struct SeriesTruncation {
    long cutoff = 1000;
    int r = 1;
};

/// Most negative real part accepted by the floating path.
inline constexpr double kFloatPathMinRe = -60.0;

namespace detail {

template <Scalar T>
void check_profile_domain(const T& s, int r_max, const ZetaParams& params)
{
    if (r_max < 0) throw DomainError("eval_profile: r_max must be >= 0");
    if (real_part(s) < kFloatPathMinRe)
        throw DomainError("eval_profile: Re s < -60 is outside the floating path; use eval_exact");
    if (r_max > 0 && std::fabs(imag_part(s)) > 50.0 / r_max)
        throw DomainError("eval_profile: |Im s| exceeds 50/r_max");
    for (int k = 1; k <= r_max; ++k) {
        const T gap = s - 1.0 / k;
        if (gap == T(0.0) || std::abs(gap) < params.pole_radius)
            throw PoleError(k, "eval_profile: s is at the pole 1/" + std::to_string(k));
    }
}

}  // namespace detail

/// Bottom-up recursion for every order up to r_max. Error estimates are
/// propagated to first order through the recursion.
template <Scalar T>
MultiZetaProfile<T> eval_profile(const T& s, int r_max, const ZetaParams& params = {})
{
    constexpr double eps = std::numeric_limits<double>::epsilon();
    detail::check_profile_domain(s, r_max, params);

    std::vector<EvalResult<T>> zeta(static_cast<std::size_t>(r_max) + 1);
    for (int j = 1; j <= r_max; ++j) zeta[static_cast<std::size_t>(j)] = riemann_zeta(T(j * 1.0) * s, params);

    MultiZetaProfile<T> out;
    out.argument = s;
    out.r_max = r_max;
    out.values.resize(static_cast<std::size_t>(r_max) + 1);
    out.values[0].value = T(1.0);
    for (int r = 1; r <= r_max; ++r) {
        T acc(0.0);
        double err = 0.0;
        double magnitude = 0.0;
        for (int j = 1; j <= r; ++j) {
            const auto& lower = out.values[static_cast<std::size_t>(r - j)];
            const auto& z = zeta[static_cast<std::size_t>(j)];
            const T term = lower.value * z.value;
            acc += (j % 2 == 1) ? term : -term;
            magnitude += std::abs(term);
            err += std::abs(lower.value) * z.abs_err_est + std::abs(z.value) * lower.abs_err_est;
        }
        auto& slot = out.values[static_cast<std::size_t>(r)];
        slot.value = acc / static_cast<double>(r);
        slot.abs_err_est = (err + 2.0 * r * eps * magnitude) / r;
        slot.near_pole = false;
        slot.degraded = slot.abs_err_est > 1e-12 * std::max(1.0, std::abs(slot.value));
    }
    return out;
}

/// zeta_r(s) alone.
template <Scalar T>
EvalResult<T> multiple_zeta(const T& s, int r, const ZetaParams& params = {})
{
    return eval_profile(s, r, params)[r];
}

/// zeta_j(-n) for j <= r_max, exactly. Throws ResourceError when n * r_max
/// needs Bernoulli numbers beyond the cap.
ExactProfile eval_exact(int n, int r_max);

/// N_r(s) over indices <= cutoff by the triangular recurrence
/// e_j(m) = e_j(m-1) + e_{j-1}(m-1) m^-s. Requires s > 1.
double eval_series_oracle(double s, SeriesTruncation trunc);

/// Closed forms in Riemann zeta values for r = 2, 3, 4 (cross-check path).
template <Scalar T>
EvalResult<T> explicit_smallr(const T& s, int r, const ZetaParams& params = {})
{
    if (r < 2 || r > 4) throw DomainError("explicit_smallr: r must be 2, 3 or 4");
    detail::check_profile_domain(s, r, params);
    const T z1 = riemann_zeta(s, params).value;
    const T z2 = riemann_zeta(2.0 * s, params).value;
    EvalResult<T> out;
    double scale = 0.0;
    if (r == 2) {
        out.value = (z1 * z1 - z2) / 2.0;
        scale = (std::norm(z1) + std::abs(z2)) / 2.0;
    } else {
        const T z3 = riemann_zeta(3.0 * s, params).value;
        if (r == 3) {
            out.value = (z1 * z1 * z1 - 3.0 * z1 * z2 + 2.0 * z3) / 6.0;
            scale = (std::pow(std::abs(z1), 3) + 3.0 * std::abs(z1 * z2) + 2.0 * std::abs(z3)) / 6.0;
        } else {
            const T z4 = riemann_zeta(4.0 * s, params).value;
            out.value = (z1 * z1 * z1 * z1 - 6.0 * z1 * z1 * z2 + 3.0 * z2 * z2 + 8.0 * z1 * z3 -
                         6.0 * z4) /
                        24.0;
            scale = (std::pow(std::abs(z1), 4) + 6.0 * std::norm(z1) * std::abs(z2) +
                     3.0 * std::norm(z2) + 8.0 * std::abs(z1 * z3) + 6.0 * std::abs(z4)) /
                    24.0;
        }
    }
    out.abs_err_est = 1e-14 * scale;
    out.degraded = out.abs_err_est > 1e-12 * std::max(1.0, std::abs(out.value));
    return out;
}

/// Predicted sign (-1)^r of zeta_r on [0, 1/r). Throws DomainError outside.
int sign_on_initial_interval(double s, int r);

}  // namespace multizeta
