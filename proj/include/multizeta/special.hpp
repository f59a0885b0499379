#pragma once

// Scalar special functions: Bernoulli numbers, Gamma, Riemann zeta.
//
// Floating routines are templated on the scalar type and instantiate for
// `double` and `std::complex<double>`.

#include "multizeta/errors.hpp"
#include "multizeta/rational.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>
#include <type_traits>

namespace multizeta {

using complex = std::complex<double>;

template <class T>
inline constexpr bool is_complex_v = false;
template <class T>
inline constexpr bool is_complex_v<std::complex<T>> = true;

template <class T>
concept Scalar = std::is_same_v<T, double> || std::is_same_v<T, complex>;

inline double real_part(double x) { return x; }
inline double real_part(const complex& z) { return z.real(); }
inline double imag_part(double) { return 0.0; }
inline double imag_part(const complex& z) { return z.imag(); }

/// Tuning of the Riemann zeta evaluator.
struct ZetaParams {
    int em_cutoff = 30;              ///< Euler–Maclaurin summation cutoff N (>= 10)
    int em_terms = 12;               ///< number of B_{2k} correction terms K (<= 30)
    double reflect_threshold = 0.5;  ///< below this real part the functional equation is used
    double pole_radius = 1e-9;       ///< pole-exclusion radius around every 1/k

    /// Throws DomainError when a field leaves its documented range.
    void validate() const;

    /// Defaults overridden by MULTIZETA_EM_CUTOFF / MULTIZETA_EM_TERMS.
    /// Non-integer or out-of-range values throw DomainError.
    static ZetaParams from_env();
};

/// A floating value with an error estimate. `abs_err_est` is an estimate,
/// not a rigorous bound.
template <class T>
struct EvalResult {
    T value{};
    double abs_err_est = 0.0;
    bool near_pole = false;  ///< argument inside the pole-exclusion radius
    bool degraded = false;   ///< error estimate exceeds the 1e-12 relative target
};

template <class T>
struct GammaResult {
    T value{};
    bool overflow = false;  ///< value replaced by a signed infinity
};

// ---------------------------------------------------------------------------
// Exact values

inline constexpr int kBernoulliHardCap = 2000;

/// B_n with the B_1 = -1/2 convention. Thread-safe; the shared table only grows.
/// Throws ResourceError for n > kBernoulliHardCap.
Rational bernoulli(int n);

/// Largest index currently held by the Bernoulli table.
int bernoulli_cached_max();

/// zeta(-n) exactly: -1/2 for n = 0, otherwise -B_{n+1}/(n+1).
Rational zeta_neg_int_exact(int n);

/// B_{2k}/(2k)! as doubles for k = 0..31 (index 0 unused).
const std::array<double, 32>& euler_maclaurin_coefficients();

// ---------------------------------------------------------------------------
// Trigonometric helpers with exact argument reduction

inline double sin_pi(double x)
{
    if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
    if (x == std::floor(x)) return 0.0;
    double r = std::fmod(x, 2.0);  // exact, in (-2, 2)
    if (r > 1.0)
        r -= 2.0;
    else if (r < -1.0)
        r += 2.0;
    if (r > 0.5)
        r = 1.0 - r;
    else if (r < -0.5)
        r = -1.0 - r;
    return std::sin(std::numbers::pi * r);
}

inline double cos_pi(double x)
{
    if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
    double r = std::fmod(std::fabs(x), 2.0);
    if (r > 1.0) r = 2.0 - r;  // r in [0, 1]
    if (r == 0.5) return 0.0;
    return std::sin(std::numbers::pi * (0.5 - r));
}

inline complex sin_pi(const complex& z)
{
    const double y = std::numbers::pi * z.imag();
    return {sin_pi(z.real()) * std::cosh(y), cos_pi(z.real()) * std::sinh(y)};
}

// ---------------------------------------------------------------------------
// Gamma

namespace detail {

// Lanczos-type series (g = 671/128, 14 terms), valid for Re x > 0.
template <Scalar T>
T log_gamma_right(const T& x)
{
    static constexpr std::array<double, 14> cof = {
        57.1562356658629235,     -59.5979603554754912,     14.1360979747417471,
        -0.491913816097620199,   .339946499848118887e-4,   .465236289270485756e-4,
        -.983744753048795646e-4, .158088703224912494e-3,   -.210264441724104883e-3,
        .217439618115212643e-3,  -.164318106536763890e-3,  .844182239838527433e-4,
        -.261908384015814087e-4, .368991826595316234e-5};
    T y = x;
    T tmp = x + 5.24218750000000000;
    tmp = (x + 0.5) * std::log(tmp) - tmp;
    T ser = T(0.999999999999997092);
    for (double c : cof) {
        y += 1.0;
        ser += c / y;
    }
    return tmp + std::log(2.5066282746310005 * ser / x);
}

inline bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }
inline bool is_nonpositive_integer(const complex& z)
{
    return z.imag() == 0.0 && is_nonpositive_integer(z.real());
}

inline constexpr double kLogDoubleMax = 709.782712893384;

}  // namespace detail

/// log Gamma(s). For real s this is log|Gamma(s)|; for complex s the real part
/// is log|Gamma(s)| and the imaginary part is an argument of Gamma(s) (not
/// necessarily the principal branch left of Re s = 1/2).
/// Throws PoleError at nonpositive integers.
template <Scalar T>
T log_gamma(const T& s)
{
    if (detail::is_nonpositive_integer(s))
        throw PoleError(0, "gamma: pole at nonpositive integer");
    if (real_part(s) >= 0.5) return detail::log_gamma_right(s);
    const T one_minus = T(1.0) - s;
    if constexpr (is_complex_v<T>) {
        return std::log(std::numbers::pi) - std::log(sin_pi(s)) - detail::log_gamma_right(one_minus);
    } else {
        return std::log(std::numbers::pi) - std::log(std::fabs(sin_pi(s))) -
               detail::log_gamma_right(one_minus);
    }
}

/// Gamma(s). Results beyond double range come back as a signed infinity with
/// `overflow` set; use log_gamma there.
template <Scalar T>
GammaResult<T> gamma(const T& s)
{
    const T lg = log_gamma(s);
    GammaResult<T> out;
    if constexpr (is_complex_v<T>) {
        if (lg.real() > detail::kLogDoubleMax) {
            out.overflow = true;
            out.value = complex(std::numeric_limits<double>::infinity(), 0.0);
        } else {
            out.value = std::exp(lg);
        }
    } else {
        const double sign = (s > 0.0 || sin_pi(s) > 0.0) ? 1.0 : -1.0;
        if (lg > detail::kLogDoubleMax) {
            out.overflow = true;
            out.value = sign * std::numeric_limits<double>::infinity();
        } else {
            out.value = sign * std::exp(lg);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Riemann zeta

namespace detail {

inline int em_cutoff_for(double imag, const ZetaParams& params)
{
    const int strip = static_cast<int>(std::ceil(10.0 + 1.3 * std::fabs(imag)));
    return std::max(strip, params.em_cutoff);
}

// n^-s; the real overload goes through pow for a correctly rounded base case.
inline double inverse_power(double n, double s) { return std::pow(n, -s); }
inline complex inverse_power(double n, const complex& s) { return std::exp(-s * std::log(n)); }

// Euler–Maclaurin: sum_{n<N} n^-s + N^{1-s}/(s-1) + N^-s/2
//   + sum_{k=1}^K B_{2k}/(2k)! (s)_{2k-1} N^{-s-2k+1}
template <Scalar T>
EvalResult<T> zeta_euler_maclaurin(const T& s, const ZetaParams& params)
{
    constexpr double eps = std::numeric_limits<double>::epsilon();
    const int cutoff = em_cutoff_for(imag_part(s), params);
    const int terms = params.em_terms;
    const auto& coef = euler_maclaurin_coefficients();

    T sum(0.0);
    double magnitude = 0.0;
    for (int n = cutoff - 1; n >= 1; --n) {  // small terms first
        const T term = inverse_power(static_cast<double>(n), s);
        sum += term;
        magnitude += std::abs(term);
    }
    const double big_n = static_cast<double>(cutoff);
    const T n_pow = inverse_power(big_n, s);  // N^-s
    const T head = n_pow * big_n / (s - 1.0);
    sum += head + 0.5 * n_pow;
    magnitude += std::abs(head) + 0.5 * std::abs(n_pow);

    T rising = s * n_pow / big_n;  // (s)_1 N^{-s-1}
    for (int k = 1; k <= terms; ++k) {
        const T term = coef[static_cast<std::size_t>(k)] * rising;
        sum += term;
        magnitude += std::abs(term);
        rising *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k) / (big_n * big_n);
    }
    const double truncation = std::abs(coef[static_cast<std::size_t>(terms) + 1] * rising);

    EvalResult<T> out;
    out.value = sum;
    out.abs_err_est = truncation + 4.0 * eps * magnitude;
    return out;
}

}  // namespace detail

/// Riemann zeta(s) for real or complex s with |Im s| <= 50.
///
/// Direct Euler–Maclaurin for Re s >= reflect_threshold, otherwise
/// zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s) evaluated in log
/// space. Throws PoleError exactly at s = 1; inside the pole radius the value
/// is still returned with `near_pole` set.
template <Scalar T>
EvalResult<T> riemann_zeta(const T& s, const ZetaParams& params = {})
{
    constexpr double eps = std::numeric_limits<double>::epsilon();
    if (std::fabs(imag_part(s)) > 50.0) throw DomainError("riemann_zeta: |Im s| > 50");
    if (s == T(1.0)) throw PoleError(1, "riemann_zeta: pole at s = 1");

    const bool near_pole = std::abs(s - 1.0) < params.pole_radius;
    EvalResult<T> out;
    // Near s = 0 the mirror point sits on the pole at 1 (0 * inf); direct EM is accurate there.
    if (real_part(s) >= params.reflect_threshold || std::abs(s) < 0.25) {
        out = detail::zeta_euler_maclaurin(s, params);
    } else {
        const T mirror = T(1.0) - s;
        const auto inner = detail::zeta_euler_maclaurin(mirror, params);
        const T log_factor = s * std::numbers::ln2 + (s - 1.0) * std::log(std::numbers::pi) +
                             log_gamma(mirror);
        const T sine = sin_pi(s * 0.5);
        const T scale = std::exp(log_factor) * inner.value;
        out.value = scale * sine;
        const double rel = (inner.value == T(0.0) ? 0.0 : inner.abs_err_est / std::abs(inner.value)) +
                           eps * (std::abs(log_factor) + 10.0);
        // s/2 is exact and sin_pi reduces exactly, so the sine carries relative error only.
        out.abs_err_est = std::abs(out.value) * rel;
    }
    out.near_pole = near_pole;
    out.degraded = near_pole || out.abs_err_est > 1e-12 * std::max(1.0, std::abs(out.value));
    return out;
}

}  // namespace multizeta
