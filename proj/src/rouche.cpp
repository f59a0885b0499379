#include "multizeta/rouche.hpp"

#include "multizeta/multiple_zeta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace multizeta {

Rectangle::Rectangle(int a, int b, int k, double epsilon) : a_(a), b_(b), k_(k), epsilon_(epsilon)
{
    if (a < 1 || b < 1) throw DomainError("rectangle: a and b must be positive");
    if (k < 0) throw DomainError("rectangle: k must be >= 0");
    if (!(epsilon >= 0.0 && epsilon <= 1.0 / (2.0 * (a + b))))
        throw DomainError("rectangle: epsilon must lie in [0, 1/(2(a+b))]");
    if (k > 0 && epsilon != 0.0) throw DomainError("rectangle: epsilon is only used for k = 0");
}

double Rectangle::re_min() const { return -2.0 - (2.0 * k_ + 1.0) / (a_ + b_); }

double Rectangle::re_max() const
{
    if (k_ == 0) return -2.0 - epsilon_;
    return -2.0 - (2.0 * k_ - 1.0) / (a_ + b_);
}

const InequalityMargin& BoundaryCheckReport::margin(const std::string& name) const
{
    for (const auto& m : margins)
        if (m.name == name) return m;
    throw DomainError("boundary report has no inequality named '" + name + "'");
}

std::vector<complex> sample_boundary(const Rectangle& rect, int per_side)
{
    if (per_side < 8) throw DomainError("sample_boundary: per_side must be >= 8");
    const complex corners[4] = {{rect.re_min(), rect.im_min()},
                                {rect.re_max(), rect.im_min()},
                                {rect.re_max(), rect.im_max()},
                                {rect.re_min(), rect.im_max()}};
    std::vector<complex> out;
    out.reserve(4 * static_cast<std::size_t>(per_side));
    for (int side = 0; side < 4; ++side) {
        const complex from = corners[side];
        const complex to = corners[(side + 1) % 4];
        for (int i = 0; i < per_side; ++i) out.push_back(from + (to - from) * (static_cast<double>(i) / per_side));
    }
    return out;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct MarginTracker {
    InequalityMargin margin;

    explicit MarginTracker(std::string name) { margin.name = std::move(name), margin.min_margin = kInf; }

    void add(double lhs, double rhs, complex at)
    {
        const double m = lhs - rhs;
        if (m < margin.min_margin || std::isnan(m)) {
            margin.min_margin = std::isnan(m) ? -kInf : m;
            margin.worst_point = at;
        }
    }
};

BoundaryCheckReport finish(const Rectangle& rect, int samples, std::vector<MarginTracker> trackers)
{
    BoundaryCheckReport report{rect, samples, {}, true, {}, 0};
    double worst = kInf;
    for (auto& t : trackers) {
        if (!(t.margin.min_margin > 0.0)) report.all_pass = false;
        if (t.margin.min_margin < worst) {
            worst = t.margin.min_margin;
            report.worst_point = t.margin.worst_point;
        }
        report.margins.push_back(std::move(t.margin));
    }
    return report;
}

// |sin(pi n s / 2)|
double abs_sin_half(int n, complex s) { return std::abs(sin_pi(s * (0.5 * n))); }

// |Gamma(x)| for x in the right half plane, with a log-space fallback
double log_abs_gamma(complex x) { return log_gamma(x).real(); }

}  // namespace

BoundaryCheckReport check_lemma1(const Rectangle& rect, int per_side)
{
    const int a = rect.a(), b = rect.b();
    const auto points = sample_boundary(rect, per_side);
    MarginTracker tracker("lemma1");
    const double rhs = 2.0 / (a + b);
    for (const complex& s : points) {
        const double den = abs_sin_half(a, s) * abs_sin_half(b, s);
        const double lhs = den == 0.0 ? kInf : abs_sin_half(a + b, s) / den;
        tracker.add(lhs, rhs, s);
    }
    return finish(rect, static_cast<int>(points.size()), {tracker});
}

BoundaryCheckReport check_lemma2(const Rectangle& rect, int per_side, const ZetaParams& params)
{
    const int a = rect.a(), b = rect.b(), n = a + b;
    const auto points = sample_boundary(rect, per_side);
    MarginTracker tracker("lemma2");
    const double rhs = n * n / (2.0 * std::numbers::pi);
    int fallbacks = 0;
    for (const complex& s : points) {
        const complex x_ab = 1.0 - static_cast<double>(n) * s;
        const complex x_a = 1.0 - static_cast<double>(a) * s;
        const complex x_b = 1.0 - static_cast<double>(b) * s;
        double gamma_ratio = 0.0;
        const auto g_ab = gamma(x_ab), g_a = gamma(x_a), g_b = gamma(x_b);
        if (!g_ab.overflow && !g_a.overflow && !g_b.overflow) {
            gamma_ratio = std::abs(g_ab.value) / (std::abs(g_a.value) * std::abs(g_b.value));
        } else {
            ++fallbacks;
            gamma_ratio = std::exp(log_abs_gamma(x_ab) - log_abs_gamma(x_a) - log_abs_gamma(x_b));
        }
        const double zeta_ratio = std::abs(riemann_zeta(x_ab, params).value) /
                                  (std::abs(riemann_zeta(x_a, params).value) *
                                   std::abs(riemann_zeta(x_b, params).value));
        tracker.add(gamma_ratio * zeta_ratio, rhs, s);
    }
    auto report = finish(rect, static_cast<int>(points.size()), {tracker});
    report.overflow_fallbacks = fallbacks;
    return report;
}

BoundaryCheckReport check_lemma3_and_rouche(int r, int k, int per_side, const ZetaParams& params)
{
    if (r < 2 || r > 6) throw DomainError("check_lemma3_and_rouche: r must be in [2, 6]");
    if (k < 0 || k > 10) throw DomainError("check_lemma3_and_rouche: k must be in [0, 10]");
    const Rectangle rect(r - 1, 1, k, k == 0 ? kRectangleEpsilon : 0.0);
    auto points = sample_boundary(rect, per_side);

    std::vector<MarginTracker> trackers;
    for (int j = 1; j < r; ++j) trackers.emplace_back("lemma3_j" + std::to_string(j));
    trackers.emplace_back("proposition");
    trackers.emplace_back("rouche");

    for (std::size_t i = 0; i < points.size(); ++i) {
        complex s = points[i];
        auto zeta_rs = riemann_zeta(static_cast<double>(r) * s, params).value;
        if (std::abs(zeta_rs) < 1e-9) {
            // zeta(rs) has no zeros on the boundary; step off a near miss
            const complex next = points[(i + 1) % points.size()];
            s += 0.5 * (next - s);
            zeta_rs = riemann_zeta(static_cast<double>(r) * s, params).value;
        }
        const auto profile = eval_profile(s, r, params);
        std::vector<complex> zeta_js(static_cast<std::size_t>(r) + 1);
        for (int j = 1; j <= r; ++j) zeta_js[static_cast<std::size_t>(j)] = riemann_zeta(static_cast<double>(j) * s, params).value;

        const double top = std::abs(zeta_rs);
        for (int j = 1; j < r; ++j) {
            const double den = std::abs(zeta_js[static_cast<std::size_t>(r - j)]) * std::abs(zeta_js[static_cast<std::size_t>(j)]);
            trackers[static_cast<std::size_t>(j - 1)].add(den == 0.0 ? kInf : top / den, r, s);
        }
        trackers[static_cast<std::size_t>(r - 1)].add(top, std::abs(profile[r].value), s);

        complex partial(0.0);
        for (int j = 1; j < r; ++j) {
            const complex term = profile[r - j].value * zeta_js[static_cast<std::size_t>(j)];
            partial += (j % 2 == 1) ? term : -term;
        }
        trackers[static_cast<std::size_t>(r)].add(top, std::abs(partial), s);
    }
    return finish(rect, static_cast<int>(points.size()), std::move(trackers));
}

}  // namespace multizeta
