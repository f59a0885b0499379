#include "multizeta/multiple_zeta.hpp"

#include <vector>

namespace multizeta {

ExactProfile eval_exact(int n, int r_max)
{
    if (n < 0) throw DomainError("eval_exact: n must be >= 0");
    if (r_max < 0) throw DomainError("eval_exact: r_max must be >= 0");
    if (static_cast<long>(n) * r_max + 1 > kBernoulliHardCap)
        throw ResourceError("eval_exact: n * r_max exceeds the Bernoulli cap");

    std::vector<Rational> zeta(static_cast<std::size_t>(r_max) + 1);
    for (int j = 1; j <= r_max; ++j) zeta[static_cast<std::size_t>(j)] = zeta_neg_int_exact(j * n);

    ExactProfile out;
    out.n = n;
    out.r_max = r_max;
    out.values.resize(static_cast<std::size_t>(r_max) + 1);
    out.values[0] = Rational(1);
    for (int r = 1; r <= r_max; ++r) {
        Rational acc;
        for (int j = 1; j <= r; ++j) {
            const auto& z = zeta[static_cast<std::size_t>(j)];
            if (z.is_zero()) continue;
            const Rational term = out.values[static_cast<std::size_t>(r - j)] * z;
            if (j % 2 == 1)
                acc += term;
            else
                acc -= term;
        }
        out.values[static_cast<std::size_t>(r)] = acc / Rational(r);
    }
    return out;
}

double eval_series_oracle(double s, SeriesTruncation trunc)
{
    if (!(s > 1.0)) throw DomainError("eval_series_oracle: s must be > 1");
    if (trunc.r < 1) throw DomainError("eval_series_oracle: r must be >= 1");
    if (trunc.cutoff < trunc.r) return 0.0;

    const auto r = static_cast<std::size_t>(trunc.r);
    // Compensated accumulation: each e_j collects up to `cutoff` small increments.
    std::vector<double> e(r + 1, 0.0), carry(r + 1, 0.0);
    e[0] = 1.0;
    for (long m = 1; m <= trunc.cutoff; ++m) {
        const double x = std::pow(static_cast<double>(m), -s);
        const std::size_t top = std::min<std::size_t>(r, static_cast<std::size_t>(m));
        for (std::size_t j = top; j >= 1; --j) {
            const double inc = (e[j - 1] - carry[j - 1]) * x - carry[j];
            const double sum = e[j] + inc;
            carry[j] = (sum - e[j]) - inc;
            e[j] = sum;
        }
    }
    return e[r] - carry[r];
}

int sign_on_initial_interval(double s, int r)
{
    if (r < 1) throw DomainError("sign_on_initial_interval: r must be >= 1");
    if (!(s >= 0.0 && s < 1.0 / r))
        throw DomainError("sign_on_initial_interval: s must lie in [0, 1/r)");
    return r % 2 == 0 ? 1 : -1;
}

}  // namespace multizeta
