#pragma once

// Pole structure and growth models of zeta_r.
//
// zeta_r has poles at s = 1/k (1 <= k <= r) of order floor(r/k) with
// zeta_r(s) ~ C_r(k) (ks - 1)^{-floor(r/k)}.

#include "multizeta/special.hpp"

#include <string>
#include <variant>
#include <vector>

namespace multizeta {

struct PoleSpec {
    int r = 1;
    int k = 1;
    int order = 1;             ///< floor(r/k)
    double coefficient = 0.0;  ///< C_r(k)

    Rational location() const { return Rational(1, k); }
};

/// C_r(k) by the closed forms: 1/r! (k = 1), (-1)^{r-1}/r (k = r), and for
/// r = qk + l, (-1)^{(k-1)q}/(k^q q!) times zeta_l(1/k) when l >= 1.
double coefficient_closed_form(int r, int k, const ZetaParams& params = {});

/// C_r(k) by the recursion over lower orders used to establish the pole
/// structure. Independent of coefficient_closed_form.
double coefficient_recursive(int r, int k, const ZetaParams& params = {});

/// One PoleSpec per k = 1..r. Throws std::logic_error if a coefficient
/// violates sign(C_r(k)) = (-1)^{r + floor(r/k)}.
std::vector<PoleSpec> pole_table(int r, const ZetaParams& params = {});

/// C_r(k) (ks - 1)^{-floor(r/k)} for 0 < |s - 1/k| <= 0.1/k.
double near_pole_model(int r, int k, double s, const ZetaParams& params = {});

enum class GrowthModel { LargeSFactorial, NegOddROdd, NegOddR2, NegOddREven };

std::string to_string(GrowthModel model);

struct LargeS {
    double s;
};
struct NegOdd {
    int k;
};
using GrowthRegime = std::variant<LargeS, NegOdd>;

struct GrowthPrediction {
    GrowthModel model = GrowthModel::LargeSFactorial;
    int r = 1;
    double predicted_log_abs = 0.0;  ///< log of the leading term, from exact values where available
    double stirling_log_abs = 0.0;   ///< the same leading term through Stirling's formula
    int predicted_sign = 1;
};

/// Leading behaviour of zeta_r as s -> +inf or at s = -k, k odd -> inf.
GrowthPrediction growth_prediction(int r, GrowthRegime regime);

/// Explicit product bound zeta_r(s) <= (r!)^{-s} prod_{k=2}^r (1 + ((k-1)/k)^s (1 + k/(s-1))) (1 + r/(s-1)).
double upper_bound_large_s(int r, double s);

}  // namespace multizeta
