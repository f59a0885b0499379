#pragma once

// Real zeros of zeta_r: inter-asymptotic zeros (IAZ) between consecutive poles
// 1/k and 1/(k-1), inter-trivial zeros (ITZ) between consecutive trivial zeros
// -2n and -2(n-1), and the trivial zeros themselves.

#include "multizeta/special.hpp"

#include <map>
#include <string>
#include <vector>

namespace multizeta {

enum class ZeroKind { IAZ, ITZ, Trivial };

std::string to_string(ZeroKind kind);

struct ZeroRecord {
    int r = 0;
    ZeroKind kind = ZeroKind::IAZ;
    double lo = 0.0;  ///< sampled bracket, opposite signs at the ends
    double hi = 0.0;
    double location = 0.0;
    double residual = 0.0;       ///< |zeta_r(location)|
    double bracket_width = 0.0;  ///< width after bisection
};

struct ConjectureReport {
    int r = 0;
    std::map<int, int> iaz_counts;    ///< k -> zeros found in (1/k, 1/(k-1))
    std::map<int, int> iaz_expected;  ///< k -> floor(r/k)
    std::map<int, int> itz_counts;    ///< n -> zeros found in (-2n, -2(n-1))
    int expected_itz = 0;             ///< r - 1
    bool all_match = true;
};

struct ZeroCensus {
    std::vector<ZeroRecord> zeros;
    ConjectureReport report;
};

inline constexpr int kDefaultZeroGrid = 512;

/// Sign-change scan of zeta_r on [lo, hi] with grid + 1 base samples (four
/// times denser in the outer 10% at each end), each bracket bisected down to
/// floating resolution. Zeros of even multiplicity are not seen.
///
/// Throws PoleError when some 1/k, k <= r, lies in [lo, hi], and
/// ConvergenceError when a refined residual exceeds 1e-9 times the larger
/// bracket-end magnitude.
std::vector<ZeroRecord> find_zeros_in_interval(int r, double lo, double hi, int grid = kDefaultZeroGrid,
                                               const ZetaParams& params = {});

/// IAZs on (1/k + 1e-4/k, 1/(k-1) - 1e-4/k) for k = r..2; 2 <= r <= 12.
ZeroCensus enumerate_iaz(int r, const ZetaParams& params = {}, int grid = kDefaultZeroGrid);

/// ITZs on (-2n + 1e-4, -2(n-1) - 1e-4) for n = 1..n_max plus the trivial
/// zeros -2n; 2 <= r <= 12 and 2 n_max <= 60.
ZeroCensus enumerate_itz(int r, int n_max, const ZetaParams& params = {}, int grid = kDefaultZeroGrid);

struct IazCount {
    long sum = 0;           ///< sum_{k=2}^r floor(r/k)
    long divisor_sum = 0;   ///< sum_{l<=r} d(l) - r
    double asymptotic = 0;  ///< r log r - 2(1 - gamma) r
};

/// d(1..n) by a divisor sieve (index 0 unused).
std::vector<int> divisor_counts(int n);

IazCount iaz_count_formula(int r);

/// iaz_count_formula for every r in [2, r_max] with a single sieve; index r.
std::vector<IazCount> iaz_count_table(int r_max);

enum class ExtremumKind { Min, Max };

std::string to_string(ExtremumKind kind);

struct Extremum {
    double location = 0.0;
    double value = 0.0;
    ExtremumKind kind = ExtremumKind::Min;
};

/// Interior extrema of zeta_r on the pole-free open interval (lo, hi): sign
/// changes of a central-difference derivative, then golden-section search.
std::vector<Extremum> extremum_scan(int r, double lo, double hi, const ZetaParams& params = {},
                                    int grid = 2048);

}  // namespace multizeta
