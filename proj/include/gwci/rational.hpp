#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gwci {

// Arbitrary-precision rational, always in lowest terms with a positive
// denominator. Thin value wrapper over GMP's mpq_class.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value); // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);

    // Accepts "p", "-p" or "p/q".
    static Rational parse(std::string_view text);

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const;
    int sign() const { return sgn(value_); }

    std::string numerator() const;
    std::string denominator() const;

    // "p/q", or "p" when q == 1.
    std::string to_string() const;

    Rational operator-() const;
    Rational &operator+=(const Rational &other);
    Rational &operator-=(const Rational &other);
    Rational &operator*=(const Rational &other);
    Rational &operator/=(const Rational &other);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

    friend bool operator==(const Rational &a, const Rational &b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        return cmp(a.value_, b.value_) <=> 0;
    }

    Rational inverse() const;

    const mpq_class &raw() const { return value_; }

private:
    explicit Rational(mpq_class value);

    mpq_class value_{0};
};

std::ostream &operator<<(std::ostream &os, const Rational &r);

Rational factorial(int k);
Rational pow(const Rational &base, int exponent);

} // namespace gwci
