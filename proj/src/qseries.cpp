#include <gwci/qseries.hpp>

#include <stdexcept>

#include <gwci/errors.hpp>

namespace gwci {

QSeries::QSeries(RingSpec::Ptr spec, int truncation) : spec_(std::move(spec)), truncation_(truncation)
{
    if (truncation_ < 0) {
        throw std::invalid_argument("series truncation must be non-negative");
    }
    coeffs_.assign(static_cast<std::size_t>(truncation_) + 1, LaurentPoly(spec_));
}

QSeries QSeries::from_coefficients(RingSpec::Ptr spec, int truncation, std::vector<LaurentPoly> coeffs)
{
    QSeries r(std::move(spec), truncation);
    for (int d = 0; d < static_cast<int>(coeffs.size()) && d <= truncation; ++d) {
        r.set(d, std::move(coeffs[d]));
    }
    return r;
}

QSeries QSeries::constant(const LaurentPoly &c, int truncation)
{
    return monomial(c, 0, truncation);
}

QSeries QSeries::monomial(const LaurentPoly &c, int k, int truncation)
{
    QSeries r(c.spec_ptr(), truncation);
    if (k >= 0 && k <= truncation) {
        r.set(k, c);
    }
    return r;
}

void QSeries::set(int d, LaurentPoly value)
{
    if (!same_ring(spec_, value.spec_ptr())) {
        throw spec_mismatch("series coefficient belongs to a different ring");
    }
    coeffs_.at(d) = std::move(value);
}

bool QSeries::is_zero() const
{
    for (const auto &c : coeffs_) {
        if (!c.is_zero()) {
            return false;
        }
    }
    return true;
}

void QSeries::check_compatible(const QSeries &o) const
{
    if (!same_ring(spec_, o.spec_)) {
        throw spec_mismatch("series operands belong to different rings");
    }
    if (truncation_ != o.truncation_) {
        throw std::invalid_argument("series operands have different truncation orders");
    }
}

QSeries QSeries::operator-() const
{
    QSeries r(*this);
    r *= Rational(-1);
    return r;
}

QSeries &QSeries::operator+=(const QSeries &o)
{
    check_compatible(o);
    for (int d = 0; d <= truncation_; ++d) {
        coeffs_[d] += o.coeffs_[d];
    }
    return *this;
}

QSeries &QSeries::operator-=(const QSeries &o)
{
    check_compatible(o);
    for (int d = 0; d <= truncation_; ++d) {
        coeffs_[d] -= o.coeffs_[d];
    }
    return *this;
}

QSeries operator*(const QSeries &a, const QSeries &b)
{
    a.check_compatible(b);
    QSeries r(a.spec_, a.truncation_);
    for (int i = 0; i <= a.truncation_; ++i) {
        if (a.coeffs_[i].is_zero()) {
            continue;
        }
        for (int j = 0; i + j <= a.truncation_; ++j) {
            if (!b.coeffs_[j].is_zero()) {
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
    }
    return r;
}

QSeries &QSeries::operator*=(const QSeries &o)
{
    *this = *this * o;
    return *this;
}

QSeries &QSeries::operator*=(const Rational &c)
{
    for (auto &x : coeffs_) {
        x *= c;
    }
    return *this;
}

QSeries &QSeries::operator*=(const LaurentPoly &c)
{
    for (auto &x : coeffs_) {
        x *= c;
    }
    return *this;
}

bool operator==(const QSeries &a, const QSeries &b)
{
    return same_ring(a.spec_, b.spec_) && a.truncation_ == b.truncation_ && a.coeffs_ == b.coeffs_;
}

QSeries series_exp(const QSeries &f)
{
    if (!f[0].is_zero()) {
        throw math_domain_error("series_exp needs a series with zero constant term");
    }
    const int D = f.truncation();
    QSeries sum = QSeries::constant(LaurentPoly(CohClass::one(f.spec_ptr())), D);
    QSeries power = sum;
    // f^k starts at q^k, so k <= D terms suffice.
    for (int k = 1; k <= D; ++k) {
        power = power * f;
        power *= Rational(1, k);
        if (power.is_zero()) {
            break;
        }
        sum += power;
    }
    return sum;
}

QSeries series_log(const QSeries &F)
{
    const LaurentPoly one(CohClass::one(F.spec_ptr()));
    if (!(F[0] == one)) {
        throw math_domain_error("series_log needs a series with constant term 1");
    }
    const int D = F.truncation();
    QSeries u = F;
    u.set(0, LaurentPoly(F.spec_ptr()));
    QSeries sum(F.spec_ptr(), D);
    QSeries power = QSeries::constant(one, D);
    for (int k = 1; k <= D; ++k) {
        power = power * u;
        if (power.is_zero()) {
            break;
        }
        sum += power * Rational(k % 2 == 1 ? 1 : -1, k);
    }
    return sum;
}

QSeries series_substitute(const QSeries &P, const QSeries &f)
{
    if (!same_ring(P.spec_ptr(), f.spec_ptr()) || P.truncation() != f.truncation()) {
        throw spec_mismatch("series_substitute operands are incompatible");
    }
    if (!f[0].is_zero()) {
        throw math_domain_error("series_substitute needs f with zero constant term");
    }
    const int D = P.truncation();
    const QSeries e = series_exp(f);
    QSeries result(P.spec_ptr(), D);
    // P_d q^d e^{d f}
    QSeries qe_power = QSeries::constant(LaurentPoly(CohClass::one(P.spec_ptr())), D);
    const QSeries qe = QSeries::monomial(LaurentPoly(CohClass::one(P.spec_ptr())), 1, D) * e;
    for (int d = 0; d <= D; ++d) {
        if (!P[d].is_zero()) {
            result += qe_power * P[d];
        }
        qe_power = qe_power * qe;
    }
    return result;
}

std::optional<int> first_difference(const QSeries &a, const QSeries &b)
{
    const int D = std::min(a.truncation(), b.truncation());
    for (int d = 0; d <= D; ++d) {
        if (!(a[d] == b[d])) {
            return d;
        }
    }
    return std::nullopt;
}

} // namespace gwci
