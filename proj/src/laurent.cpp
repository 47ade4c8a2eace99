#include <gwci/laurent.hpp>

#include <stdexcept>

#include <gwci/errors.hpp>

namespace gwci {

LaurentPoly::LaurentPoly(RingSpec::Ptr spec) : spec_(std::move(spec))
{
    if (!spec_) {
        throw std::invalid_argument("LaurentPoly needs a ring spec");
    }
}

LaurentPoly::LaurentPoly(const CohClass &constant) : LaurentPoly(constant.spec_ptr())
{
    add_term(0, constant);
}

LaurentPoly LaurentPoly::monomial(const CohClass &c, int t_exp)
{
    LaurentPoly r(c.spec_ptr());
    r.add_term(t_exp, c);
    return r;
}

LaurentPoly LaurentPoly::t_power(RingSpec::Ptr spec, int t_exp, const Rational &c)
{
    return monomial(CohClass::scalar(std::move(spec), c), t_exp);
}

LaurentPoly LaurentPoly::linear(RingSpec::Ptr spec, const Rational &h_coeff, const Rational &t_coeff)
{
    LaurentPoly r(spec);
    r.add_term(0, CohClass::h_power(spec, 1, h_coeff));
    r.add_term(1, CohClass::scalar(spec, t_coeff));
    return r;
}

void LaurentPoly::add_term(int t_exp, const CohClass &c)
{
    if (!same_ring(spec_, c.spec_ptr())) {
        throw spec_mismatch("Laurent coefficient belongs to a different ring");
    }
    if (c.is_zero()) {
        return;
    }
    auto it = terms_.find(t_exp);
    if (it == terms_.end()) {
        terms_.emplace(t_exp, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) {
        terms_.erase(it);
    }
}

CohClass LaurentPoly::coefficient(int t_exp) const
{
    auto it = terms_.find(t_exp);
    return it == terms_.end() ? CohClass(spec_) : it->second;
}

int LaurentPoly::max_t_exp() const
{
    if (terms_.empty()) {
        throw std::logic_error("zero Laurent polynomial has no top exponent");
    }
    return terms_.rbegin()->first;
}

int LaurentPoly::min_t_exp() const
{
    if (terms_.empty()) {
        throw std::logic_error("zero Laurent polynomial has no bottom exponent");
    }
    return terms_.begin()->first;
}

LaurentPoly LaurentPoly::shifted(int k) const
{
    LaurentPoly r(spec_);
    for (const auto &[e, c] : terms_) {
        r.terms_.emplace(e + k, c);
    }
    return r;
}

LaurentPoly LaurentPoly::pow(int exponent) const
{
    if (exponent < 0) {
        return invert_unit(*this).pow(-exponent);
    }
    LaurentPoly result(CohClass::one(spec_));
    LaurentPoly base = *this;
    while (exponent > 0) {
        if (exponent & 1) {
            result *= base;
        }
        exponent >>= 1;
        if (exponent > 0) {
            base *= base;
        }
    }
    return result;
}

LaurentPoly LaurentPoly::restricted(int lo, int hi) const
{
    LaurentPoly r(spec_);
    for (auto it = terms_.lower_bound(lo); it != terms_.end() && it->first <= hi; ++it) {
        r.terms_.emplace(it->first, it->second);
    }
    return r;
}

bool LaurentPoly::is_homogeneous(int degree) const
{
    for (const auto &[e, c] : terms_) {
        if (!c.is_homogeneous(degree - e)) {
            return false;
        }
    }
    return true;
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r(*this);
    r *= Rational(-1);
    return r;
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &o)
{
    if (!same_ring(spec_, o.spec_)) {
        throw spec_mismatch("Laurent operands belong to different rings");
    }
    for (const auto &[e, c] : o.terms_) {
        add_term(e, c);
    }
    return *this;
}

LaurentPoly &LaurentPoly::operator-=(const LaurentPoly &o)
{
    return *this += -o;
}

LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b)
{
    if (!same_ring(a.spec_, b.spec_)) {
        throw spec_mismatch("Laurent operands belong to different rings");
    }
    LaurentPoly r(a.spec_);
    for (const auto &[ea, ca] : a.terms_) {
        for (const auto &[eb, cb] : b.terms_) {
            r.add_term(ea + eb, ca * cb);
        }
    }
    return r;
}

LaurentPoly &LaurentPoly::operator*=(const LaurentPoly &o)
{
    *this = *this * o;
    return *this;
}

LaurentPoly &LaurentPoly::operator*=(const Rational &c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto &[_, v] : terms_) {
        v *= c;
    }
    return *this;
}

bool operator==(const LaurentPoly &a, const LaurentPoly &b)
{
    return same_ring(a.spec_, b.spec_) && a.terms_ == b.terms_;
}

LaurentPoly invert_unit(const LaurentPoly &p)
{
    const auto &spec = p.spec_ptr();
    int lead = 0;
    Rational lead_scalar;
    bool found = false;
    for (const auto &[e, c] : p.terms()) {
        const Rational s = c.scalar_part();
        if (s.is_zero()) {
            continue;
        }
        if (found) {
            throw not_invertible("Laurent polynomial has more than one invertible t-term");
        }
        found = true;
        lead = e;
        lead_scalar = s;
    }
    if (!found) {
        throw not_invertible("Laurent polynomial has no invertible leading coefficient");
    }

    // p = s t^N (1 + x) with x nilpotent.
    const LaurentPoly lead_inverse = LaurentPoly::t_power(spec, -lead, lead_scalar.inverse());
    const LaurentPoly x = p * lead_inverse - LaurentPoly(CohClass::one(spec));

    // Every factor of x raises the cohomological degree by at least one, and no
    // nonzero class has degree above n + base_cutoff.
    const int max_steps = spec->fiber_dim() + spec->base_cutoff() + 1;
    LaurentPoly sum(CohClass::one(spec));
    LaurentPoly term(CohClass::one(spec));
    for (int k = 1; k <= max_steps; ++k) {
        term = term * (-x);
        if (term.is_zero()) {
            break;
        }
        sum += term;
    }
    if (!term.is_zero()) {
        throw consistency_error("geometric series for a Laurent unit did not terminate");
    }
    return sum * lead_inverse;
}

} // namespace gwci
