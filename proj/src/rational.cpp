#include <gwci/rational.hpp>

#include <ostream>
#include <stdexcept>

namespace gwci {

Rational::Rational(std::int64_t value)
{
    // mpq_class has no int64 constructor on all platforms; go through a string.
    value_ = mpq_class(std::to_string(value), 10);
}

Rational::Rational(std::int64_t num, std::int64_t den)
{
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    value_ = mpq_class(mpz_class(std::to_string(num), 10), mpz_class(std::to_string(den), 10));
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value))
{
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    std::string s(text);
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(mpq_class(mpz_class(s, 10)));
        }
        mpz_class num(s.substr(0, slash), 10);
        mpz_class den(s.substr(slash + 1), 10);
        if (den == 0) {
            throw std::domain_error("rational with zero denominator: " + s);
        }
        return Rational(mpq_class(num, den));
    } catch (const std::invalid_argument &) {
        throw std::invalid_argument("not a rational literal: '" + s + "'");
    }
}

bool Rational::is_integer() const
{
    return value_.get_den() == 1;
}

std::string Rational::numerator() const
{
    return value_.get_num().get_str();
}

std::string Rational::denominator() const
{
    return value_.get_den().get_str();
}

std::string Rational::to_string() const
{
    return value_.get_str();
}

Rational Rational::operator-() const
{
    return Rational(mpq_class(-value_));
}

Rational &Rational::operator+=(const Rational &other)
{
    value_ += other.value_;
    return *this;
}

Rational &Rational::operator-=(const Rational &other)
{
    value_ -= other.value_;
    return *this;
}

Rational &Rational::operator*=(const Rational &other)
{
    value_ *= other.value_;
    return *this;
}

Rational &Rational::operator/=(const Rational &other)
{
    if (other.is_zero()) {
        throw std::domain_error("division by zero rational");
    }
    value_ /= other.value_;
    return *this;
}

Rational Rational::inverse() const
{
    return Rational(1) / *this;
}

std::ostream &operator<<(std::ostream &os, const Rational &r)
{
    return os << r.to_string();
}

Rational factorial(int k)
{
    Rational result(1);
    for (int i = 2; i <= k; ++i) {
        result *= Rational(i);
    }
    return result;
}

Rational pow(const Rational &base, int exponent)
{
    if (exponent < 0) {
        return pow(base.inverse(), -exponent);
    }
    Rational result(1);
    for (int i = 0; i < exponent; ++i) {
        result *= base;
    }
    return result;
}

} // namespace gwci
