#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include <gwci/rational.hpp>

namespace gwci {

struct BaseGenerator {
    std::string name;
    int degree = 1;

    friend bool operator==(const BaseGenerator &, const BaseGenerator &) = default;
};

// Exponent vector over the base generators; empty in absolute mode.
using BaseMonomial = std::vector<int>;

// Sparse polynomial in the base generators. Never stores zero coefficients.
using BasePoly = std::map<BaseMonomial, Rational>;

// Describes the coefficient ring of a CohClass:
//
//   absolute:  Q[h] / (h^{n+1})
//   relative:  B[h] / (h^{n+1} + c_1 h^n + ... + c_{n+1}),
//              B = Q[s_1, s_2, ...] / (weighted degree > base_cutoff)
//
// The relation coefficients c_j live in B. An empty relation means
// h^{n+1} = 0, which is also what a relative ring over a trivial bundle uses.
class RingSpec {
public:
    using Ptr = std::shared_ptr<const RingSpec>;

    static Ptr absolute(int n);
    static Ptr relative(int n, std::vector<BaseGenerator> generators, int base_cutoff,
                        std::vector<BasePoly> relation = {});

    int fiber_dim() const { return n_; }
    bool is_relative() const { return relative_; }
    const std::vector<BaseGenerator> &generators() const { return generators_; }
    int base_cutoff() const { return base_cutoff_; }

    // relation()[j - 1] is c_j for j = 1..n+1, or empty.
    const std::vector<BasePoly> &relation() const { return relation_; }

    int weighted_degree(const BaseMonomial &m) const;
    BaseMonomial unit_monomial() const { return BaseMonomial(generators_.size(), 0); }

    // Product in B, dropping monomials above the cutoff.
    BasePoly mul(const BasePoly &a, const BasePoly &b) const;

    friend bool operator==(const RingSpec &, const RingSpec &) = default;

private:
    RingSpec() = default;

    int n_ = 0;
    bool relative_ = false;
    std::vector<BaseGenerator> generators_;
    int base_cutoff_ = 0;
    std::vector<BasePoly> relation_;
};

bool same_ring(const RingSpec::Ptr &a, const RingSpec::Ptr &b);

// Adds c * m into p, erasing the entry if it cancels.
void accumulate(BasePoly &p, const BaseMonomial &m, const Rational &c);
void accumulate(BasePoly &p, const BasePoly &q, const Rational &scale = Rational(1));

// Element of the base ring B (or Q in absolute mode).
class BaseClass {
public:
    explicit BaseClass(RingSpec::Ptr spec);
    BaseClass(RingSpec::Ptr spec, BasePoly terms);

    static BaseClass constant(RingSpec::Ptr spec, const Rational &c);
    // Generator by 1-based index, so generator(spec, 2) is s_2 for the usual naming.
    static BaseClass generator(RingSpec::Ptr spec, int index);

    const RingSpec &spec() const { return *spec_; }
    const RingSpec::Ptr &spec_ptr() const { return spec_; }
    const BasePoly &terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    Rational constant_term() const;
    Rational coefficient(const BaseMonomial &m) const;
    bool is_homogeneous(int degree) const;

    BaseClass operator-() const;
    BaseClass &operator+=(const BaseClass &o);
    BaseClass &operator-=(const BaseClass &o);
    BaseClass &operator*=(const BaseClass &o);
    BaseClass &operator*=(const Rational &c);

    friend BaseClass operator+(BaseClass a, const BaseClass &b) { return a += b; }
    friend BaseClass operator-(BaseClass a, const BaseClass &b) { return a -= b; }
    friend BaseClass operator*(BaseClass a, const BaseClass &b) { return a *= b; }
    friend BaseClass operator*(BaseClass a, const Rational &c) { return a *= c; }
    friend BaseClass operator*(const Rational &c, BaseClass a) { return a *= c; }

    friend bool operator==(const BaseClass &a, const BaseClass &b);

private:
    RingSpec::Ptr spec_;
    BasePoly terms_;
};

// Element of the truncated ring described by a RingSpec; always reduced so
// that only h^0..h^n are stored.
class CohClass {
public:
    explicit CohClass(RingSpec::Ptr spec);

    static CohClass zero(RingSpec::Ptr spec) { return CohClass(std::move(spec)); }
    static CohClass scalar(RingSpec::Ptr spec, const Rational &c);
    static CohClass one(RingSpec::Ptr spec) { return scalar(std::move(spec), Rational(1)); }
    // h^k for any k >= 0, reduced through the ring relation.
    static CohClass h_power(RingSpec::Ptr spec, int k, const Rational &c = Rational(1));
    static CohClass hyperplane(RingSpec::Ptr spec) { return h_power(std::move(spec), 1); }
    static CohClass from_base(const BaseClass &b);

    const RingSpec &spec() const { return *spec_; }
    const RingSpec::Ptr &spec_ptr() const { return spec_; }

    bool is_zero() const;
    // Coefficient of h^0 times the unit base monomial.
    Rational scalar_part() const;
    // Base class multiplying h^k, 0 <= k <= n.
    BaseClass coefficient(int h_exp) const;
    Rational coefficient(int h_exp, const BaseMonomial &m) const;
    const std::vector<BasePoly> &by_h_power() const { return coeffs_; }

    // Fiber integral: the base class multiplying h^n.
    BaseClass integrate() const;
    // Absolute-mode integral over P^n.
    Rational integrate_scalar() const;

    // Grading with deg h = 1 and deg s_i = degree of the generator. Zero is
    // homogeneous of every degree.
    bool is_homogeneous(int degree) const;

    CohClass operator-() const;
    CohClass &operator+=(const CohClass &o);
    CohClass &operator-=(const CohClass &o);
    CohClass &operator*=(const CohClass &o);
    CohClass &operator*=(const Rational &c);

    friend CohClass operator+(CohClass a, const CohClass &b) { return a += b; }
    friend CohClass operator-(CohClass a, const CohClass &b) { return a -= b; }
    friend CohClass operator*(const CohClass &a, const CohClass &b);
    friend CohClass operator*(CohClass a, const Rational &c) { return a *= c; }
    friend CohClass operator*(const Rational &c, CohClass a) { return a *= c; }

    friend bool operator==(const CohClass &a, const CohClass &b);

private:
    CohClass(RingSpec::Ptr spec, std::vector<BasePoly> wide);

    RingSpec::Ptr spec_;
    std::vector<BasePoly> coeffs_;
};

// If x == c * y for a rational c, returns c. Throws consistency_error when x is
// not a rational multiple of y, and math_domain_error when y is zero.
Rational rational_ratio(const CohClass &x, const CohClass &y);

} // namespace gwci
