#pragma once

#include <optional>
#include <vector>

#include <gwci/laurent.hpp>

namespace gwci {

// Power series in q with LaurentPoly coefficients, exact modulo q^{D+1}.
class QSeries {
public:
    QSeries(RingSpec::Ptr spec, int truncation);

    static QSeries from_coefficients(RingSpec::Ptr spec, int truncation, std::vector<LaurentPoly> coeffs);
    static QSeries constant(const LaurentPoly &c, int truncation);
    // c * q^k
    static QSeries monomial(const LaurentPoly &c, int k, int truncation);

    const RingSpec &spec() const { return *spec_; }
    const RingSpec::Ptr &spec_ptr() const { return spec_; }
    int truncation() const { return truncation_; }

    const LaurentPoly &operator[](int d) const { return coeffs_.at(d); }
    void set(int d, LaurentPoly value);
    bool is_zero() const;

    QSeries operator-() const;
    QSeries &operator+=(const QSeries &o);
    QSeries &operator-=(const QSeries &o);
    QSeries &operator*=(const QSeries &o);
    QSeries &operator*=(const Rational &c);
    QSeries &operator*=(const LaurentPoly &c);

    friend QSeries operator+(QSeries a, const QSeries &b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries &b) { return a -= b; }
    friend QSeries operator*(const QSeries &a, const QSeries &b);
    friend QSeries operator*(QSeries a, const Rational &c) { return a *= c; }
    friend QSeries operator*(QSeries a, const LaurentPoly &c) { return a *= c; }

    friend bool operator==(const QSeries &a, const QSeries &b);

private:
    void check_compatible(const QSeries &o) const;

    RingSpec::Ptr spec_;
    int truncation_;
    std::vector<LaurentPoly> coeffs_;
};

// exp(f) by its finite Taylor sum; f must have zero constant term.
QSeries series_exp(const QSeries &f);
// log(F) for F with constant term exactly 1.
QSeries series_log(const QSeries &F);
// P(q * exp(f(q))); f must have zero constant term.
QSeries series_substitute(const QSeries &P, const QSeries &f);

// Smallest q-degree where the two series differ.
std::optional<int> first_difference(const QSeries &a, const QSeries &b);

} // namespace gwci
