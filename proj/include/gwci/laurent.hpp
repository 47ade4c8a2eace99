#pragma once

#include <map>

#include <gwci/ring.hpp>

namespace gwci {

// Finite Laurent polynomial in the equivariant parameter t with CohClass
// coefficients. The coefficient of t^{-2-a} carries the psi^a insertion of a
// one-point correlator.
class LaurentPoly {
public:
    explicit LaurentPoly(RingSpec::Ptr spec);
    LaurentPoly(const CohClass &constant); // NOLINT(google-explicit-constructor)

    static LaurentPoly monomial(const CohClass &c, int t_exp);
    static LaurentPoly t_power(RingSpec::Ptr spec, int t_exp, const Rational &c = Rational(1));
    // h_coeff * h + t_coeff * t
    static LaurentPoly linear(RingSpec::Ptr spec, const Rational &h_coeff, const Rational &t_coeff);

    const RingSpec &spec() const { return *spec_; }
    const RingSpec::Ptr &spec_ptr() const { return spec_; }
    const std::map<int, CohClass> &terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    CohClass coefficient(int t_exp) const;
    // Both require a nonzero polynomial.
    int max_t_exp() const;
    int min_t_exp() const;

    // Multiply by t^k.
    LaurentPoly shifted(int k) const;
    LaurentPoly pow(int exponent) const;
    // Keeps only the terms with lo <= exponent <= hi.
    LaurentPoly restricted(int lo, int hi) const;

    // Homogeneous of total degree `degree` with deg t = 1: the coefficient of
    // t^j is homogeneous of degree degree - j.
    bool is_homogeneous(int degree) const;

    LaurentPoly operator-() const;
    LaurentPoly &operator+=(const LaurentPoly &o);
    LaurentPoly &operator-=(const LaurentPoly &o);
    LaurentPoly &operator*=(const LaurentPoly &o);
    LaurentPoly &operator*=(const Rational &c);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b);
    friend LaurentPoly operator*(LaurentPoly a, const Rational &c) { return a *= c; }
    friend LaurentPoly operator*(const Rational &c, LaurentPoly a) { return a *= c; }

    friend bool operator==(const LaurentPoly &a, const LaurentPoly &b);

private:
    void add_term(int t_exp, const CohClass &c);

    RingSpec::Ptr spec_;
    std::map<int, CohClass> terms_;
};

// Inverse of a unit: exactly one t-exponent may carry a coefficient with a
// nonzero scalar part, and every other coefficient must be nilpotent. The
// inverse is then a finite geometric series. Throws not_invertible otherwise.
LaurentPoly invert_unit(const LaurentPoly &p);

} // namespace gwci
