#include <gwci/ring.hpp>

#include <stdexcept>

#include <gwci/errors.hpp>

namespace gwci {

namespace {

void require_same(const RingSpec::Ptr &a, const RingSpec::Ptr &b)
{
    if (!same_ring(a, b)) {
        throw spec_mismatch("operands belong to different coefficient rings");
    }
}

BaseMonomial add_monomials(const BaseMonomial &a, const BaseMonomial &b)
{
    BaseMonomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] + b[i];
    }
    return r;
}

} // namespace

RingSpec::Ptr RingSpec::absolute(int n)
{
    if (n < 0) {
        throw std::invalid_argument("fiber dimension must be non-negative");
    }
    auto spec = std::shared_ptr<RingSpec>(new RingSpec());
    spec->n_ = n;
    return spec;
}

RingSpec::Ptr RingSpec::relative(int n, std::vector<BaseGenerator> generators, int base_cutoff,
                                 std::vector<BasePoly> relation)
{
    if (n < 0 || base_cutoff < 0) {
        throw std::invalid_argument("fiber dimension and base cutoff must be non-negative");
    }
    for (const auto &g : generators) {
        if (g.degree < 1) {
            throw std::invalid_argument("base generator '" + g.name + "' must have degree >= 1");
        }
    }
    if (!relation.empty() && relation.size() != static_cast<std::size_t>(n) + 1) {
        throw std::invalid_argument("projective-bundle relation needs exactly n+1 coefficients");
    }
    auto spec = std::shared_ptr<RingSpec>(new RingSpec());
    spec->n_ = n;
    spec->relative_ = true;
    spec->generators_ = std::move(generators);
    spec->base_cutoff_ = base_cutoff;
    for (auto &c : relation) {
        for (const auto &[m, _] : c) {
            if (m.size() != spec->generators_.size() || spec->weighted_degree(m) > base_cutoff) {
                throw std::invalid_argument("relation coefficient outside the base ring");
            }
        }
    }
    bool all_zero = true;
    for (const auto &c : relation) {
        all_zero = all_zero && c.empty();
    }
    if (!all_zero) {
        spec->relation_ = std::move(relation);
    }
    return spec;
}

int RingSpec::weighted_degree(const BaseMonomial &m) const
{
    int d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        d += m[i] * generators_[i].degree;
    }
    return d;
}

BasePoly RingSpec::mul(const BasePoly &a, const BasePoly &b) const
{
    BasePoly out;
    for (const auto &[ma, ca] : a) {
        const int da = weighted_degree(ma);
        for (const auto &[mb, cb] : b) {
            if (da + weighted_degree(mb) > base_cutoff_) {
                continue;
            }
            accumulate(out, add_monomials(ma, mb), ca * cb);
        }
    }
    return out;
}

bool same_ring(const RingSpec::Ptr &a, const RingSpec::Ptr &b)
{
    return a == b || (a && b && *a == *b);
}

void accumulate(BasePoly &p, const BaseMonomial &m, const Rational &c)
{
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = p.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            p.erase(it);
        }
    }
}

void accumulate(BasePoly &p, const BasePoly &q, const Rational &scale)
{
    for (const auto &[m, c] : q) {
        accumulate(p, m, c * scale);
    }
}

// ---------------------------------------------------------------- BaseClass

BaseClass::BaseClass(RingSpec::Ptr spec) : spec_(std::move(spec)) {}

BaseClass::BaseClass(RingSpec::Ptr spec, BasePoly terms) : spec_(std::move(spec))
{
    for (auto &[m, c] : terms) {
        if (m.size() != spec_->generators().size()) {
            throw std::invalid_argument("base monomial has the wrong number of generators");
        }
        if (spec_->weighted_degree(m) <= spec_->base_cutoff()) {
            accumulate(terms_, m, c);
        }
    }
}

BaseClass BaseClass::constant(RingSpec::Ptr spec, const Rational &c)
{
    BasePoly p;
    accumulate(p, spec->unit_monomial(), c);
    return BaseClass(std::move(spec), std::move(p));
}

BaseClass BaseClass::generator(RingSpec::Ptr spec, int index)
{
    const auto count = static_cast<int>(spec->generators().size());
    if (index < 1 || index > count) {
        throw std::out_of_range("no base generator with index " + std::to_string(index));
    }
    BaseMonomial m = spec->unit_monomial();
    m[index - 1] = 1;
    return BaseClass(std::move(spec), BasePoly{{m, Rational(1)}});
}

Rational BaseClass::constant_term() const
{
    return coefficient(spec_->unit_monomial());
}

Rational BaseClass::coefficient(const BaseMonomial &m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool BaseClass::is_homogeneous(int degree) const
{
    for (const auto &[m, _] : terms_) {
        if (spec_->weighted_degree(m) != degree) {
            return false;
        }
    }
    return true;
}

BaseClass BaseClass::operator-() const
{
    BaseClass r(*this);
    r *= Rational(-1);
    return r;
}

BaseClass &BaseClass::operator+=(const BaseClass &o)
{
    require_same(spec_, o.spec_);
    accumulate(terms_, o.terms_);
    return *this;
}

BaseClass &BaseClass::operator-=(const BaseClass &o)
{
    require_same(spec_, o.spec_);
    accumulate(terms_, o.terms_, Rational(-1));
    return *this;
}

BaseClass &BaseClass::operator*=(const BaseClass &o)
{
    require_same(spec_, o.spec_);
    terms_ = spec_->mul(terms_, o.terms_);
    return *this;
}

BaseClass &BaseClass::operator*=(const Rational &c)
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

bool operator==(const BaseClass &a, const BaseClass &b)
{
    return same_ring(a.spec_, b.spec_) && a.terms_ == b.terms_;
}

// ----------------------------------------------------------------- CohClass

CohClass::CohClass(RingSpec::Ptr spec) : spec_(std::move(spec))
{
    if (!spec_) {
        throw std::invalid_argument("CohClass needs a ring spec");
    }
    coeffs_.resize(static_cast<std::size_t>(spec_->fiber_dim()) + 1);
}

// Reduces an arbitrarily long h-coefficient vector modulo the ring relation.
CohClass::CohClass(RingSpec::Ptr spec, std::vector<BasePoly> wide) : CohClass(std::move(spec))
{
    const int n = spec_->fiber_dim();
    const auto &relation = spec_->relation();
    for (int k = static_cast<int>(wide.size()) - 1; k > n; --k) {
        if (wide[k].empty() || relation.empty()) {
            continue;
        }
        // h^k = -(c_1 h^{k-1} + ... + c_{n+1} h^{k-n-1})
        for (int j = 1; j <= n + 1; ++j) {
            const auto &c = relation[j - 1];
            if (c.empty()) {
                continue;
            }
            accumulate(wide[k - j], spec_->mul(c, wide[k]), Rational(-1));
        }
    }
    for (int k = 0; k <= n && k < static_cast<int>(wide.size()); ++k) {
        coeffs_[k] = std::move(wide[k]);
    }
}

CohClass CohClass::scalar(RingSpec::Ptr spec, const Rational &c)
{
    CohClass r(std::move(spec));
    accumulate(r.coeffs_[0], r.spec_->unit_monomial(), c);
    return r;
}

CohClass CohClass::h_power(RingSpec::Ptr spec, int k, const Rational &c)
{
    if (k < 0) {
        throw std::invalid_argument("negative power of h");
    }
    std::vector<BasePoly> wide(static_cast<std::size_t>(k) + 1);
    accumulate(wide[k], spec->unit_monomial(), c);
    return CohClass(std::move(spec), std::move(wide));
}

CohClass CohClass::from_base(const BaseClass &b)
{
    CohClass r(b.spec_ptr());
    r.coeffs_[0] = b.terms();
    return r;
}

bool CohClass::is_zero() const
{
    for (const auto &p : coeffs_) {
        if (!p.empty()) {
            return false;
        }
    }
    return true;
}

Rational CohClass::scalar_part() const
{
    return coefficient(0, spec_->unit_monomial());
}

BaseClass CohClass::coefficient(int h_exp) const
{
    if (h_exp < 0 || h_exp > spec_->fiber_dim()) {
        return BaseClass(spec_);
    }
    return BaseClass(spec_, coeffs_[h_exp]);
}

Rational CohClass::coefficient(int h_exp, const BaseMonomial &m) const
{
    if (h_exp < 0 || h_exp > spec_->fiber_dim()) {
        return Rational(0);
    }
    auto it = coeffs_[h_exp].find(m);
    return it == coeffs_[h_exp].end() ? Rational(0) : it->second;
}

BaseClass CohClass::integrate() const
{
    return coefficient(spec_->fiber_dim());
}

Rational CohClass::integrate_scalar() const
{
    if (spec_->is_relative()) {
        throw std::logic_error("scalar integral requested in a relative ring; use integrate()");
    }
    return coefficient(spec_->fiber_dim(), spec_->unit_monomial());
}

bool CohClass::is_homogeneous(int degree) const
{
    for (int k = 0; k < static_cast<int>(coeffs_.size()); ++k) {
        for (const auto &[m, _] : coeffs_[k]) {
            if (k + spec_->weighted_degree(m) != degree) {
                return false;
            }
        }
    }
    return true;
}

CohClass CohClass::operator-() const
{
    CohClass r(*this);
    r *= Rational(-1);
    return r;
}

CohClass &CohClass::operator+=(const CohClass &o)
{
    require_same(spec_, o.spec_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        accumulate(coeffs_[k], o.coeffs_[k]);
    }
    return *this;
}

CohClass &CohClass::operator-=(const CohClass &o)
{
    require_same(spec_, o.spec_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        accumulate(coeffs_[k], o.coeffs_[k], Rational(-1));
    }
    return *this;
}

CohClass operator*(const CohClass &a, const CohClass &b)
{
    require_same(a.spec_, b.spec_);
    const auto &spec = *a.spec_;
    const int n = spec.fiber_dim();
    const bool reduce = !spec.relation().empty();
    std::vector<BasePoly> wide(static_cast<std::size_t>(reduce ? 2 * n + 1 : n + 1));
    for (int i = 0; i <= n; ++i) {
        if (a.coeffs_[i].empty()) {
            continue;
        }
        for (int j = 0; j <= n; ++j) {
            if (b.coeffs_[j].empty() || (!reduce && i + j > n)) {
                continue;
            }
            accumulate(wide[i + j], spec.mul(a.coeffs_[i], b.coeffs_[j]));
        }
    }
    return CohClass(a.spec_, std::move(wide));
}

CohClass &CohClass::operator*=(const CohClass &o)
{
    *this = *this * o;
    return *this;
}

CohClass &CohClass::operator*=(const Rational &c)
{
    for (auto &p : coeffs_) {
        if (c.is_zero()) {
            p.clear();
            continue;
        }
        for (auto &[_, v] : p) {
            v *= c;
        }
    }
    return *this;
}

bool operator==(const CohClass &a, const CohClass &b)
{
    return same_ring(a.spec_, b.spec_) && a.coeffs_ == b.coeffs_;
}

Rational rational_ratio(const CohClass &x, const CohClass &y)
{
    if (y.is_zero()) {
        throw math_domain_error("ratio against the zero class is undefined");
    }
    const auto &ys = y.by_h_power();
    for (int k = 0; k < static_cast<int>(ys.size()); ++k) {
        if (ys[k].empty()) {
            continue;
        }
        const auto &[m, c] = *ys[k].begin();
        Rational ratio = x.coefficient(k, m) / c;
        if (!(y * ratio == x)) {
            throw consistency_error("class is not a rational multiple of the reference class");
        }
        return ratio;
    }
    throw math_domain_error("ratio against the zero class is undefined");
}

} // namespace gwci
