#include "multizeta/rational.hpp"

#include "multizeta/errors.hpp"

#include <cmath>
#include <ostream>

namespace multizeta {

Rational::Rational(const mpz_class& num, const mpz_class& den)
{
    if (den == 0) throw DomainError("rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero()) throw DomainError("rational: division by zero");
    q_ /= o.q_;
    return *this;
}

double Rational::to_double() const
{
    // mpq_get_d truncates; good to within one ulp, which is all callers need.
    // Magnitudes past double range go through log_abs instead.
    const double direct = q_.get_d();
    if (std::isfinite(direct) && (direct != 0.0 || is_zero())) return direct;
    const double mag = std::exp(log_abs());
    return sign() < 0 ? -mag : mag;
}

namespace {

double log_abs_integer(const mpz_class& z)
{
    long exponent = 0;
    const double mantissa = mpz_get_d_2exp(&exponent, z.get_mpz_t());
    return std::log(std::fabs(mantissa)) + static_cast<double>(exponent) * std::log(2.0);
}

}  // namespace

double Rational::log_abs() const
{
    if (is_zero()) throw DomainError("rational: log of zero");
    return log_abs_integer(q_.get_num()) - log_abs_integer(q_.get_den());
}

std::string Rational::str() const
{
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::decimal(int places, Rounding mode, bool plus_sign) const
{
    if (places < 0) throw DomainError("rational: negative decimal places");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));

    mpz_class num = abs(q_.get_num()) * scale;
    const mpz_class& den = q_.get_den();
    mpz_class quot, rem;
    mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if ((mode == Rounding::HalfUp && 2 * rem >= den) || (mode == Rounding::HalfDown && 2 * rem > den)) ++quot;

    std::string digits = quot.get_str();
    if (static_cast<int>(digits.size()) <= places)
        digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    std::string out = digits.substr(0, digits.size() - static_cast<std::size_t>(places));
    if (places > 0) out += "." + digits.substr(digits.size() - static_cast<std::size_t>(places));

    if (sign() < 0 && quot != 0)
        out.insert(0, "-");
    else if (sign() > 0 && plus_sign)
        out.insert(0, "+");
    return out;
}

std::string Rational::decimal_rounded(int places, bool plus_sign) const
{
    return decimal(places, Rounding::HalfUp, plus_sign);
}

std::string Rational::decimal_truncated(int places, bool plus_sign) const
{
    return decimal(places, Rounding::Truncate, plus_sign);
}

std::string Rational::decimal_half_down(int places, bool plus_sign) const
{
    return decimal(places, Rounding::HalfDown, plus_sign);
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

mpz_class binomial(unsigned long n, unsigned long k)
{
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

}  // namespace multizeta
