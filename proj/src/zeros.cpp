#include "multizeta/zeros.hpp"

#include "multizeta/multiple_zeta.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace multizeta {

std::string to_string(ZeroKind kind)
{
    switch (kind) {
    case ZeroKind::IAZ: return "IAZ";
    case ZeroKind::ITZ: return "ITZ";
    case ZeroKind::Trivial: return "TRIVIAL";
    }
    return "UNKNOWN";
}

std::string to_string(ExtremumKind kind) { return kind == ExtremumKind::Min ? "min" : "max"; }

namespace {

constexpr double kEulerGamma = 0.5772156649015329;

void check_no_pole(int r, double lo, double hi, bool closed)
{
    for (int k = 1; k <= r; ++k) {
        const double pole = 1.0 / k;
        const bool inside = closed ? (pole >= lo && pole <= hi) : (pole > lo && pole < hi);
        if (inside) throw PoleError(k, "interval contains the pole 1/" + std::to_string(k));
    }
}

int sign_of(double x) { return (x > 0.0) - (x < 0.0); }

std::vector<double> sample_points(double lo, double hi, int grid)
{
    const double step = (hi - lo) / grid;
    const double edge = 0.1 * (hi - lo);
    std::vector<double> xs;
    xs.reserve(static_cast<std::size_t>(grid) * 2);
    for (int i = 0; i <= grid; ++i) xs.push_back(i == grid ? hi : lo + i * step);
    const double fine = step / 4.0;
    for (double x = lo + fine; x < lo + edge; x += fine) xs.push_back(x);
    for (double x = hi - fine; x > hi - edge; x -= fine) xs.push_back(x);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

}  // namespace

std::vector<ZeroRecord> find_zeros_in_interval(int r, double lo, double hi, int grid, const ZetaParams& params)
{
    if (r < 1) throw DomainError("find_zeros_in_interval: r must be >= 1");
    if (!(lo < hi)) throw DomainError("find_zeros_in_interval: need lo < hi");
    if (grid < 16) throw DomainError("find_zeros_in_interval: grid must be >= 16");
    check_no_pole(r, lo, hi, true);

    auto f = [&](double x) { return multiple_zeta(x, r, params).value; };
    const auto xs = sample_points(lo, hi, grid);
    std::vector<double> fs(xs.size());
    std::transform(xs.begin(), xs.end(), fs.begin(), f);

    std::vector<ZeroRecord> out;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        const int sa = sign_of(fs[i]);
        const int sb = sign_of(fs[i + 1]);
        if (sa == 0 && i > 0 && i + 1 < xs.size()) {
            // sample landed on a zero
            out.push_back({r, xs[i] > 0 ? ZeroKind::IAZ : ZeroKind::ITZ, xs[i - 1], xs[i + 1], xs[i], 0.0, 0.0});
            continue;
        }
        if (sa * sb >= 0) continue;

        double a = xs[i], b = xs[i + 1], fa = fs[i];
        double best = 0.5 * (a + b);
        for (int step = 0; step < 200; ++step) {
            const double m = a + 0.5 * (b - a);
            if (!(m > a && m < b)) break;
            const double fm = f(m);
            best = m;
            if (fm == 0.0) {
                a = b = m;
                break;
            }
            if (sign_of(fm) == sign_of(fa)) {
                a = m;
                fa = fm;
            } else {
                b = m;
            }
        }
        if (b > a) best = std::clamp(0.5 * (a + b), a, b);
        const double residual = std::fabs(f(best));
        const double scale = std::max(std::fabs(fs[i]), std::fabs(fs[i + 1]));
        if (residual > 1e-9 * scale)
            throw ConvergenceError("find_zeros_in_interval: residual " + std::to_string(residual) +
                                   " above target near s = " + std::to_string(best));
        out.push_back({r, best > 0 ? ZeroKind::IAZ : ZeroKind::ITZ, xs[i], xs[i + 1], best, residual, b - a});
    }
    std::sort(out.begin(), out.end(),
              [](const ZeroRecord& x, const ZeroRecord& y) { return x.location < y.location; });
    return out;
}

ZeroCensus enumerate_iaz(int r, const ZetaParams& params, int grid)
{
    if (r < 2 || r > 12) throw DomainError("enumerate_iaz: r must be in [2, 12]");
    ZeroCensus census;
    census.report.r = r;
    for (int k = r; k >= 2; --k) {
        const double margin = 1e-4 / k;
        auto zeros = find_zeros_in_interval(r, 1.0 / k + margin, 1.0 / (k - 1) - margin, grid, params);
        census.report.iaz_counts[k] = static_cast<int>(zeros.size());
        census.report.iaz_expected[k] = r / k;
        if (static_cast<int>(zeros.size()) != r / k) census.report.all_match = false;
        census.zeros.insert(census.zeros.end(), zeros.begin(), zeros.end());
    }
    return census;
}

ZeroCensus enumerate_itz(int r, int n_max, const ZetaParams& params, int grid)
{
    if (r < 2 || r > 12) throw DomainError("enumerate_itz: r must be in [2, 12]");
    if (n_max < 1 || 2 * n_max > 60) throw DomainError("enumerate_itz: need 1 <= n_max and 2 n_max <= 60");
    constexpr double margin = 1e-4;
    ZeroCensus census;
    census.report.r = r;
    census.report.expected_itz = r - 1;
    for (int n = 1; n <= n_max; ++n) {
        auto zeros = find_zeros_in_interval(r, -2.0 * n + margin, -2.0 * (n - 1) - margin, grid, params);
        census.report.itz_counts[n] = static_cast<int>(zeros.size());
        if (static_cast<int>(zeros.size()) != r - 1) census.report.all_match = false;
        census.zeros.insert(census.zeros.end(), zeros.begin(), zeros.end());

        const Rational exact = eval_exact(2 * n, r)[r];
        if (!exact.is_zero()) throw std::logic_error("enumerate_itz: trivial zero is not zero");
        const double at = -2.0 * n;
        census.zeros.push_back({r, ZeroKind::Trivial, at, at, at, 0.0, 0.0});
    }
    std::sort(census.zeros.begin(), census.zeros.end(),
              [](const ZeroRecord& x, const ZeroRecord& y) { return x.location < y.location; });
    return census;
}

std::vector<int> divisor_counts(int n)
{
    std::vector<int> d(static_cast<std::size_t>(std::max(n, 0)) + 1, 0);
    for (int k = 1; k <= n; ++k)
        for (int m = k; m <= n; m += k) ++d[static_cast<std::size_t>(m)];
    return d;
}

std::vector<IazCount> iaz_count_table(int r_max)
{
    if (r_max < 2) throw DomainError("iaz_count_table: r_max must be >= 2");
    const auto d = divisor_counts(r_max);
    std::vector<IazCount> out(static_cast<std::size_t>(r_max) + 1);
    long running = d[1];
    for (int r = 2; r <= r_max; ++r) {
        running += d[static_cast<std::size_t>(r)];
        IazCount& c = out[static_cast<std::size_t>(r)];
        for (int k = 2; k <= r; ++k) c.sum += r / k;
        c.divisor_sum = running - r;
        c.asymptotic = r * std::log(static_cast<double>(r)) - 2.0 * (1.0 - kEulerGamma) * r;
    }
    return out;
}

IazCount iaz_count_formula(int r)
{
    if (r < 2) throw DomainError("iaz_count_formula: r must be >= 2");
    const auto d = divisor_counts(r);
    IazCount c;
    for (int k = 2; k <= r; ++k) c.sum += r / k;
    for (int l = 1; l <= r; ++l) c.divisor_sum += d[static_cast<std::size_t>(l)];
    c.divisor_sum -= r;
    c.asymptotic = r * std::log(static_cast<double>(r)) - 2.0 * (1.0 - kEulerGamma) * r;
    return c;
}

std::vector<Extremum> extremum_scan(int r, double lo, double hi, const ZetaParams& params, int grid)
{
    if (r < 1) throw DomainError("extremum_scan: r must be >= 1");
    if (!(lo < hi)) throw DomainError("extremum_scan: need lo < hi");
    if (grid < 16) throw DomainError("extremum_scan: grid must be >= 16");
    check_no_pole(r, lo, hi, false);

    constexpr double h = 1e-6;
    auto f = [&](double x) { return multiple_zeta(x, r, params).value; };
    auto slope = [&](double x) { return (f(x + h) - f(x - h)) / (2.0 * h); };

    const double step = (hi - lo) / grid;
    std::vector<double> xs, ds;
    for (int i = 1; i < grid; ++i) {
        const double x = lo + i * step;
        xs.push_back(x);
        ds.push_back(slope(x));
    }

    std::vector<Extremum> out;
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        if (sign_of(ds[i]) * sign_of(ds[i + 1]) >= 0) continue;
        const ExtremumKind kind = ds[i] < 0.0 ? ExtremumKind::Min : ExtremumKind::Max;
        const double orient = kind == ExtremumKind::Min ? 1.0 : -1.0;
        auto g = [&](double x) { return orient * f(x); };

        double a = xs[i], b = xs[i + 1];
        double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
        double gc = g(c), gd = g(d);
        while (b - a > 1e-9) {
            if (gc < gd) {
                b = d;
                d = c;
                gd = gc;
                c = b - inv_phi * (b - a);
                gc = g(c);
            } else {
                a = c;
                c = d;
                gc = gd;
                d = a + inv_phi * (b - a);
                gd = g(d);
            }
        }
        const double at = 0.5 * (a + b);
        out.push_back({at, f(at), kind});
    }
    return out;
}

}  // namespace multizeta
