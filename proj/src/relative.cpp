#include <gwci/relative.hpp>

#include <algorithm>
#include <stdexcept>

#include <gwci/correlators.hpp>
#include <gwci/errors.hpp>

namespace gwci {

namespace {

std::vector<BaseGenerator> segre_generators(int cutoff)
{
    std::vector<BaseGenerator> gens;
    for (int i = 1; i <= cutoff; ++i) {
        gens.push_back({"s" + std::to_string(i), i});
    }
    return gens;
}

BaseClass rehome(const RingSpec::Ptr &spec, const BaseClass &b)
{
    return BaseClass(spec, b.terms());
}

void require_linear_cy(const RelativeModel &model)
{
    if (!model.is_linear_cy()) {
        throw math_domain_error("linear relative calabi-yau needs n+1 sections of O(1)");
    }
    if (model.base_cutoff() < 2) {
        throw math_domain_error("linear relative calabi-yau needs base cutoff >= 2 (s_1^2, s_2)");
    }
}

} // namespace

RelativeModel::RelativeModel(int n, int base_cutoff, std::vector<int> degrees, BundleKind kind)
    : n_(n), base_cutoff_(base_cutoff), degrees_(std::move(degrees)), kind_(kind)
{
    if (n < 1) {
        throw std::invalid_argument("fiber dimension n must be >= 1");
    }
    if (base_cutoff < 0) {
        throw std::invalid_argument("base cutoff must be non-negative");
    }
    for (int l : degrees_) {
        if (l < 1) {
            throw std::invalid_argument("hypersurface degrees must be >= 1");
        }
    }

    // V has rank n+1, so c_j = 0 for j > n+1 and only s_1..s_{n+1} are free;
    // higher Segre classes follow from c(V) s(V) = 1.
    const int free_count = std::min(base_cutoff, n + 1);
    const auto gens = segre_generators(free_count);
    const auto base = RingSpec::relative(n, gens, base_cutoff);

    std::vector<BaseClass> s{BaseClass::constant(base, Rational(1))};
    std::vector<BaseClass> c{BaseClass::constant(base, Rational(1))};
    for (int k = 1; k <= base_cutoff; ++k) {
        if (k <= free_count) {
            s.push_back(kind == BundleKind::formal ? BaseClass::generator(base, k) : BaseClass(base));
            BaseClass ck(base);
            for (int i = 1; i <= k; ++i) {
                ck -= s[i] * c[k - i];
            }
            c.push_back(ck);
        } else {
            BaseClass sk(base);
            for (int j = 1; j <= n + 1; ++j) {
                sk -= c[j] * s[k - j];
            }
            s.push_back(sk);
            c.push_back(BaseClass(base));
        }
    }

    std::vector<BasePoly> relation;
    for (int j = 1; j <= n + 1; ++j) {
        relation.push_back(j <= base_cutoff ? c[j].terms() : BasePoly{});
    }
    ring_ = RingSpec::relative(n, gens, base_cutoff, std::move(relation));
    for (const auto &x : s) {
        segre_.push_back(rehome(ring_, x));
    }
    for (const auto &x : c) {
        chern_.push_back(rehome(ring_, x));
    }
}

BaseClass RelativeModel::segre(int i) const
{
    if (i < 0 || i > base_cutoff_) {
        return BaseClass(ring_);
    }
    return segre_[i];
}

BaseClass RelativeModel::chern(int j) const
{
    if (j < 0 || j > base_cutoff_) {
        return BaseClass(ring_);
    }
    return chern_[j];
}

bool RelativeModel::is_linear_cy() const
{
    return m() == n_ + 1 && std::all_of(degrees_.begin(), degrees_.end(), [](int l) { return l == 1; });
}

LaurentPoly relative_euler(const RelativeModel &model, int d)
{
    if (d < 0) {
        throw std::invalid_argument("curve degree must be non-negative");
    }
    const auto &spec = model.ring();
    const int n = model.n();
    LaurentPoly product(CohClass::one(spec));
    for (int k = 1; k <= d; ++k) {
        // prod_j (x + alpha_j) = sum_j c_j x^{n+1-j} with x = h + k t
        const LaurentPoly x = LaurentPoly::linear(spec, Rational(1), Rational(k));
        LaurentPoly factor(spec);
        LaurentPoly x_power(CohClass::one(spec));
        for (int j = n + 1; j >= 0; --j) {
            const BaseClass cj = model.chern(j);
            if (!cj.is_zero()) {
                factor += x_power * LaurentPoly(CohClass::from_base(cj));
            }
            x_power *= x;
        }
        product *= factor;
    }
    return product;
}

LaurentPoly relative_phi(const RelativeModel &model, int d)
{
    const LaurentPoly num = hypergeometric_numerator(model.ring(), model.degrees(), d);
    if (d == 0) {
        return num;
    }
    return num * invert_unit(relative_euler(model, d));
}

SchubertInput SchubertInput::one()
{
    return SchubertInput{{{{0, 0}, Rational(1)}}};
}

SchubertInput SchubertInput::product_power(int k)
{
    if (k < 0) {
        throw std::invalid_argument("negative power in Schubert input");
    }
    return SchubertInput{{{{k, k}, Rational(1)}}};
}

bool SchubertInput::is_symmetric() const
{
    for (const auto &[ij, c] : terms) {
        if (c.is_zero()) {
            continue;
        }
        auto it = terms.find({ij.second, ij.first});
        if (it == terms.end() || !(it->second == c)) {
            return false;
        }
    }
    return true;
}

LaurentPoly relative_schubert_leading(const RelativeModel &model, const SchubertInput &sigma)
{
    if (!sigma.is_symmetric()) {
        throw std::invalid_argument("Schubert input must be symmetric in q_1, q_2");
    }
    const auto &spec = model.ring();
    const LaurentPoly h = LaurentPoly(CohClass::hyperplane(spec));
    const LaurentPoly h_plus_t = LaurentPoly::linear(spec, Rational(1), Rational(1));
    LaurentPoly value(spec);
    for (const auto &[ij, c] : sigma.terms) {
        if (ij.first < 0 || ij.second < 0) {
            throw std::invalid_argument("Schubert input has a negative exponent");
        }
        value += h.pow(ij.first) * h_plus_t.pow(ij.second) * c;
    }
    return value * invert_unit(relative_euler(model, 1));
}

BaseClass porteous_lines(const RelativeModel &model)
{
    const int m = model.m();
    if (!std::all_of(model.degrees().begin(), model.degrees().end(), [](int l) { return l == 1; })) {
        throw math_domain_error("porteous_lines needs linear sections (all l_i = 1)");
    }
    if (m > model.n() + 1) {
        throw math_domain_error("porteous_lines needs m <= n+1 sections");
    }
    const auto &spec = model.ring();
    const LaurentPoly main = relative_schubert_leading(model, SchubertInput::product_power(m));
    return (CohClass::hyperplane(spec) * main.coefficient(-2)).integrate();
}

BaseClass porteous_formula(const RelativeModel &model)
{
    const int k = model.m() - model.n();
    return model.segre(k + 1) * model.segre(k + 1) - model.segre(k) * model.segre(k + 2);
}

namespace {

// sum_e q^e lambda_e(t) / t
QSeries lambda_exponent(const RingSpec::Ptr &spec, const std::vector<RelativeLambda> &lambdas, int D)
{
    QSeries x(spec, D);
    for (int e = 1; e <= D && e <= static_cast<int>(lambdas.size()); ++e) {
        const auto &l = lambdas[e - 1];
        x.set(e, LaurentPoly(CohClass::scalar(spec, l.t_coefficient)) +
                     LaurentPoly::monomial(CohClass::from_base(l.constant), -1));
    }
    return x;
}

QSeries phi_series(const RelativeModel &model, int D)
{
    QSeries Phi(model.ring(), D);
    for (int d = 0; d <= D; ++d) {
        Phi.set(d, relative_phi(model, d));
    }
    return Phi;
}

RelativeLambda closed_form_lambda(const RelativeModel &model, int e)
{
    const Rational c(-1, e);
    return RelativeLambda{c, model.segre(1) * c};
}

} // namespace

std::vector<RelativeLambda> derive_linear_cy_lambdas(const RelativeModel &model, int max_degree)
{
    require_linear_cy(model);
    const auto &spec = model.ring();
    const QSeries Phi = phi_series(model, max_degree);
    const CohClass phi0 = Phi[0].coefficient(0);
    const CohClass s1_phi0 = CohClass::from_base(model.segre(1)) * phi0;

    std::vector<RelativeLambda> lambdas;
    for (int e = 1; e <= max_degree; ++e) {
        // Only phi_0 lambda_e / t carries lambda_e at q^e.
        const QSeries partial = Phi * series_exp(lambda_exponent(spec, lambdas, max_degree));
        const LaurentPoly &coeff = partial[e];
        if (!coeff.is_zero() && coeff.max_t_exp() > 0) {
            throw consistency_error("linear relative generating function has positive t-powers");
        }
        const Rational a = -rational_ratio(coeff.coefficient(0), phi0);
        const Rational beta = -rational_ratio(coeff.coefficient(-1), s1_phi0);
        lambdas.push_back(RelativeLambda{a, model.segre(1) * beta});
    }
    return lambdas;
}

RelativeLambda linear_cy_lambda(const RelativeModel &model, int e)
{
    require_linear_cy(model);
    if (e < 1) {
        throw std::invalid_argument("lambda_e is defined for e >= 1");
    }
    const RelativeLambda closed = closed_form_lambda(model, e);
    const auto derived = derive_linear_cy_lambdas(model, e);
    if (!(derived.back() == closed)) {
        throw consistency_error("lambda_" + std::to_string(e) + " disagrees with coefficient matching");
    }
    return closed;
}

QSeries linear_cy_generating_function(const RelativeModel &model, int D)
{
    require_linear_cy(model);
    std::vector<RelativeLambda> lambdas;
    for (int e = 1; e <= D; ++e) {
        lambdas.push_back(closed_form_lambda(model, e));
    }
    return phi_series(model, D) * series_exp(lambda_exponent(model.ring(), lambdas, D));
}

CohClass linear_cy_pushforward(const RelativeModel &model, int d, int D)
{
    if (d < 1 || D < d) {
        throw std::invalid_argument("linear_cy_pushforward needs 1 <= d <= D");
    }
    return linear_cy_generating_function(model, D)[d].coefficient(-2);
}

CohClass linear_cy_expected(const RelativeModel &model, int d)
{
    const auto &spec = model.ring();
    const CohClass h = CohClass::hyperplane(spec);
    const CohClass bracket = CohClass::from_base(model.segre(2)) - CohClass::from_base(model.segre(1)) * h;
    return CohClass::h_power(spec, model.n() + 1) * bracket * Rational(1, d * d);
}

} // namespace gwci
