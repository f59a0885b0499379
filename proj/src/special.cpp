#include "multizeta/special.hpp"

#include <charconv>
#include <cstdlib>
#include <mutex>
#include <shared_mutex>
#include <string_view>
#include <vector>

namespace multizeta {

void ZetaParams::validate() const
{
    if (em_cutoff < 10) throw DomainError("zeta params: em_cutoff must be >= 10");
    if (em_terms < 1 || em_terms > 30) throw DomainError("zeta params: em_terms must be in [1, 30]");
    if (!(reflect_threshold >= 0.0 && reflect_threshold <= 1.0))
        throw DomainError("zeta params: reflect_threshold must be in [0, 1]");
    if (!(pole_radius >= 0.0)) throw DomainError("zeta params: pole_radius must be >= 0");
}

namespace {

int env_int(const char* name, int fallback)
{
    const char* raw = std::getenv(name);
    if (raw == nullptr) return fallback;
    const std::string_view text(raw);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
        throw DomainError(std::string(name) + " is not an integer: '" + std::string(text) + "'");
    return value;
}

// B_0..B_max. Even indices come from tangent numbers (Brent–Harvey):
// B_{2k} = (-1)^{k-1} 2k T_k / (2^{2k} (2^{2k} - 1)).
class BernoulliCache {
public:
    Rational get(int n)
    {
        if (n < 0) throw DomainError("bernoulli: negative index");
        if (n > kBernoulliHardCap)
            throw ResourceError("bernoulli: index " + std::to_string(n) + " exceeds cap " +
                                std::to_string(kBernoulliHardCap));
        {
            std::shared_lock lock(mutex_);
            if (n < static_cast<int>(table_.size())) return table_[static_cast<std::size_t>(n)];
        }
        std::unique_lock lock(mutex_);
        if (n >= static_cast<int>(table_.size()))
            grow(std::min(kBernoulliHardCap, std::max(n, 2 * static_cast<int>(table_.size()))));
        return table_[static_cast<std::size_t>(n)];
    }

    int max_index()
    {
        std::shared_lock lock(mutex_);
        return static_cast<int>(table_.size()) - 1;
    }

private:
    void grow(int max_index)
    {
        const int half = max_index / 2;
        std::vector<mpz_class> tangent(static_cast<std::size_t>(half) + 1);
        if (half >= 1) tangent[1] = 1;
        for (int k = 2; k <= half; ++k) tangent[k] = (k - 1) * tangent[k - 1];
        for (int k = 2; k <= half; ++k)
            for (int j = k; j <= half; ++j)
                tangent[j] = (j - k) * tangent[j - 1] + (j - k + 2) * tangent[j];

        std::vector<Rational> table(static_cast<std::size_t>(max_index) + 1);
        table[0] = Rational(1);
        if (max_index >= 1) table[1] = Rational(-1, 2);
        for (int k = 1; k <= half; ++k) {
            mpz_class pow4;
            mpz_ui_pow_ui(pow4.get_mpz_t(), 4, static_cast<unsigned long>(k));
            mpz_class num = 2 * k * tangent[k];
            if (k % 2 == 0) num = -num;
            table[static_cast<std::size_t>(2 * k)] = Rational(num, pow4 * (pow4 - 1));
        }
        table_ = std::move(table);
    }

    std::shared_mutex mutex_;
    std::vector<Rational> table_;
};

BernoulliCache& cache()
{
    static BernoulliCache instance;
    return instance;
}

}  // namespace

ZetaParams ZetaParams::from_env()
{
    ZetaParams params;
    params.em_cutoff = env_int("MULTIZETA_EM_CUTOFF", params.em_cutoff);
    params.em_terms = env_int("MULTIZETA_EM_TERMS", params.em_terms);
    params.validate();
    return params;
}

Rational bernoulli(int n) { return cache().get(n); }

int bernoulli_cached_max() { return cache().max_index(); }

Rational zeta_neg_int_exact(int n)
{
    if (n < 0) throw DomainError("zeta_neg_int_exact: negative n");
    if (n == 0) return Rational(-1, 2);
    return -bernoulli(n + 1) / Rational(n + 1);
}

const std::array<double, 32>& euler_maclaurin_coefficients()
{
    static const std::array<double, 32> table = [] {
        std::array<double, 32> out{};
        mpz_class factorial = 1;
        for (int k = 1; k <= 31; ++k) {
            factorial *= (2 * k - 1) * (2 * k);
            out[static_cast<std::size_t>(k)] = (bernoulli(2 * k) / Rational(factorial, 1)).to_double();
        }
        return out;
    }();
    return table;
}

}  // namespace multizeta
