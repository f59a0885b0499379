#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace multizeta {

/// Exact reduced fraction with arbitrary-precision numerator and denominator.
///
/// The denominator is always positive and gcd(|num|, den) = 1; zero is 0/1.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long value) : q_(value) {}  // NOLINT: implicit by design of integer literals
    Rational(const mpz_class& num, const mpz_class& den);
    Rational(long num, long den);
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }

    double to_double() const;

    /// Natural log of |value|, accurate for magnitudes far beyond double range.
    /// Throws DomainError for zero.
    double log_abs() const;

    /// "p/q" with q >= 1 always printed.
    std::string str() const;

    /// Fixed-point decimal with `places` digits after the point, rounded
    /// half away from zero. A leading '+' is added for positive values when
    /// `plus_sign` is set.
    std::string decimal_rounded(int places, bool plus_sign = false) const;

    /// Same, truncated toward zero.
    std::string decimal_truncated(int places, bool plus_sign = false) const;

    /// Same, rounded to nearest with exact halves going toward zero.
    std::string decimal_half_down(int places, bool plus_sign = false) const;

    const mpq_class& raw() const { return q_; }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    enum class Rounding { Truncate, HalfUp, HalfDown };
    std::string decimal(int places, Rounding mode, bool plus_sign) const;

    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

/// Binomial coefficient as an exact integer.
mpz_class binomial(unsigned long n, unsigned long k);

}  // namespace multizeta
