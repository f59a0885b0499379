#pragma once

// Boundary-sampling harness for the inequalities behind the count of
// inter-trivial zeros: on the boundary of each rectangle R_k(a+b) around
// s = -2 - 2k/(a+b), zeta_r(s) is dominated by zeta(rs), so both have the
// same number of zeros inside.
//
// Sampling cannot prove an inequality; the reports expose the worst margin so
// regressions show up.

#include "multizeta/special.hpp"

#include <string>
#include <vector>

namespace multizeta {

class Rectangle {
public:
    /// R_k(a+b); for k = 0 the right edge is pulled in to -2 - epsilon.
    /// Throws DomainError unless a, b >= 1, k >= 0, 0 <= epsilon <= 1/(2(a+b))
    /// and epsilon == 0 for k > 0.
    Rectangle(int a, int b, int k, double epsilon = 0.0);

    int a() const { return a_; }
    int b() const { return b_; }
    int k() const { return k_; }
    double epsilon() const { return epsilon_; }

    double re_min() const;
    double re_max() const;
    double im_min() const { return -1.0 / (a_ + b_); }
    double im_max() const { return 1.0 / (a_ + b_); }

private:
    int a_, b_, k_;
    double epsilon_;
};

/// Default epsilon for R_0.
inline constexpr double kRectangleEpsilon = 1e-3;

struct InequalityMargin {
    std::string name;
    double min_margin = 0.0;  ///< min over samples of lhs - rhs
    complex worst_point{};
};

struct BoundaryCheckReport {
    Rectangle rectangle{1, 1, 1};
    int samples = 0;
    std::vector<InequalityMargin> margins;
    bool all_pass = false;
    complex worst_point{};
    int overflow_fallbacks = 0;  ///< Gamma ratios evaluated in log space

    const InequalityMargin& margin(const std::string& name) const;
};

/// per_side points on each side (start corner included, end corner not),
/// counter-clockwise from the lower-left corner: 4 * per_side points.
std::vector<complex> sample_boundary(const Rectangle& rect, int per_side);

/// |sin(pi(a+b)s/2) / (sin(pi a s/2) sin(pi b s/2))| > 2/(a+b).
/// A vanishing denominator counts as +infinity.
BoundaryCheckReport check_lemma1(const Rectangle& rect, int per_side);

/// |Gamma(1-(a+b)s) / (Gamma(1-as) Gamma(1-bs))| |zeta(1-(a+b)s) / (zeta(1-as) zeta(1-bs))| > (a+b)^2 / (2 pi).
BoundaryCheckReport check_lemma2(const Rectangle& rect, int per_side, const ZetaParams& params = {});

/// On the boundary of R_k(r): |zeta(rs) / (zeta((r-j)s) zeta(js))| > r for
/// 0 < j < r ("lemma3_j<j>"), |zeta_r(s)| < |zeta(rs)| ("proposition") and
/// |sum_{j=1}^{r-1} (-1)^{j-1} zeta_{r-j}(s) zeta(js)| < |zeta(rs)| ("rouche").
BoundaryCheckReport check_lemma3_and_rouche(int r, int k, int per_side, const ZetaParams& params = {});

}  // namespace multizeta
