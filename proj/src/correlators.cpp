#include <gwci/correlators.hpp>

#include <numeric>
#include <stdexcept>

#include <gwci/errors.hpp>

namespace gwci {

std::string to_string(Classification c)
{
    switch (c) {
    case Classification::fano_index_ge2:
        return "fano index >= 2";
    case Classification::fano_index_one:
        return "fano index 1";
    case Classification::calabi_yau:
        return "calabi-yau";
    case Classification::general_type:
        return "general type";
    }
    return "unknown";
}

std::string classification_rule(Classification c)
{
    switch (c) {
    case Classification::fano_index_ge2:
        return "l_1+...+l_m < n";
    case Classification::fano_index_one:
        return "l_1+...+l_m = n";
    case Classification::calabi_yau:
        return "l_1+...+l_m = n+1";
    case Classification::general_type:
        return "l_1+...+l_m > n+1";
    }
    return "";
}

int CIModel::degree_sum() const
{
    return std::accumulate(degrees.begin(), degrees.end(), 0);
}

Rational CIModel::degree_product() const
{
    Rational p(1);
    for (int l : degrees) {
        p *= Rational(l);
    }
    return p;
}

Rational CIModel::factorial_product() const
{
    Rational p(1);
    for (int l : degrees) {
        p *= factorial(l);
    }
    return p;
}

CohClass CIModel::fundamental_class() const
{
    return CohClass::h_power(ring(), m(), degree_product());
}

CIModel classify(int n, std::vector<int> degrees)
{
    if (n < 1) {
        throw std::invalid_argument("ambient dimension n must be >= 1");
    }
    for (int l : degrees) {
        if (l < 1) {
            throw std::invalid_argument("hypersurface degrees must be >= 1");
        }
    }
    CIModel model{n, std::move(degrees), Classification::fano_index_ge2};
    const int s = model.degree_sum();
    if (s < n) {
        model.classification = Classification::fano_index_ge2;
    } else if (s == n) {
        model.classification = Classification::fano_index_one;
    } else if (s == n + 1) {
        model.classification = Classification::calabi_yau;
    } else {
        model.classification = Classification::general_type;
    }
    return model;
}

void require_classification(const CIModel &model, Classification expected)
{
    if (model.classification == expected) {
        return;
    }
    throw classification_error(to_string(model.classification) + ": " +
                               classification_rule(model.classification) + " (operation needs " +
                               to_string(expected) + ": " + classification_rule(expected) + ")");
}

LaurentPoly hypergeometric_numerator(const RingSpec::Ptr &spec, const std::vector<int> &degrees, int d)
{
    if (d < 0) {
        throw std::invalid_argument("curve degree must be non-negative");
    }
    LaurentPoly num(CohClass::one(spec));
    for (int l : degrees) {
        for (int k = 0; k <= d * l; ++k) {
            num *= LaurentPoly::linear(spec, Rational(l), Rational(k));
        }
    }
    return num;
}

namespace {

// prod_{k=1}^d (h + k t)^{n+1}
LaurentPoly euler_denominator(const RingSpec::Ptr &spec, int d)
{
    const int n = spec->fiber_dim();
    LaurentPoly den(CohClass::one(spec));
    for (int k = 1; k <= d; ++k) {
        den *= LaurentPoly::linear(spec, Rational(1), Rational(k)).pow(n + 1);
    }
    return den;
}

} // namespace

LaurentPoly phi(const CIModel &model, int d)
{
    const auto spec = model.ring();
    const LaurentPoly num = hypergeometric_numerator(spec, model.degrees, d);
    if (d == 0) {
        return num;
    }
    return num * invert_unit(euler_denominator(spec, d));
}

LaurentPoly pn_one_point(int n, int d)
{
    if (d < 0) {
        throw std::invalid_argument("curve degree must be non-negative");
    }
    const auto spec = RingSpec::absolute(n);
    return invert_unit(euler_denominator(spec, d));
}

LaurentPoly fano_ge2_correlator(const CIModel &model, int d)
{
    require_classification(model, Classification::fano_index_ge2);
    return phi(model, d);
}

LaurentPoly fano_index1_correlator(const CIModel &model, int d)
{
    require_classification(model, Classification::fano_index_one);
    if (d < 0) {
        throw std::invalid_argument("curve degree must be non-negative");
    }
    const Rational c = -model.factorial_product();
    LaurentPoly sum(model.ring());
    Rational coeff(1); // c^r / r!
    for (int r = 0; r <= d; ++r) {
        if (r > 0) {
            coeff *= c / Rational(r);
        }
        sum += phi(model, d - r).shifted(-r) * coeff;
    }
    return sum;
}

Rational one_point_invariant(const LaurentPoly &correlator, int a, int b)
{
    if (a < 0 || b < 0) {
        throw std::invalid_argument("psi and hyperplane exponents must be non-negative");
    }
    const auto &spec = correlator.spec_ptr();
    const CohClass c = correlator.coefficient(-2 - a);
    if (c.is_zero()) {
        return Rational(0);
    }
    return (CohClass::h_power(spec, b) * c).integrate_scalar();
}

} // namespace gwci
