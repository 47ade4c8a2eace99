#include <gwci/calabi_yau.hpp>

#include <cstdint>
#include <stdexcept>

#include <gwci/errors.hpp>

namespace gwci {

namespace {

void require_recursion_shape(const CIModel &model)
{
    require_classification(model, Classification::calabi_yau);
    if (model.m() > model.n - 1) {
        // h^{m+1} = 0 leaves alpha_d undetermined.
        throw math_domain_error("calabi-yau recursion needs m <= n-1 hypersurfaces");
    }
}

// partial is the degree-d comb sum without the simple comb. Since
// phi_0 lambda_d / t = prod l (alpha h^{m+1} t^{-1} + beta h^m), alpha and beta
// are the ratios that cancel its t^{-1} and t^0 coefficients.
LambdaForm cancel_errors(const CIModel &model, const LaurentPoly &partial, int d)
{
    if (!partial.is_zero() && partial.max_t_exp() > 0) {
        throw consistency_error("comb sum has t-powers above t^0");
    }
    const auto spec = model.ring();
    const CohClass s_class = model.fundamental_class();
    const LambdaForm lambda{-rational_ratio(partial.coefficient(-1), s_class * CohClass::hyperplane(spec)),
                            -rational_ratio(partial.coefficient(0), s_class)};
    if (!(read_off_lambda(model, -partial.restricted(-1, 0)) == lambda)) {
        throw consistency_error("lambda_" + std::to_string(d) + " disagrees with its integral read-off");
    }
    return lambda;
}

} // namespace

std::vector<Comb> enumerate_combs(int d)
{
    if (d < 1 || d > 30) {
        throw std::invalid_argument("comb degree must be in 1..30");
    }
    std::vector<Comb> combs;
    combs.reserve(std::size_t{1} << d);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
        Comb c;
        for (int i = 0; i < d; ++i) {
            if (mask & (std::uint64_t{1} << i)) {
                c.endpoints.push_back(i);
            }
        }
        c.endpoints.push_back(d);
        combs.push_back(std::move(c));
    }
    return combs;
}

LaurentPoly LambdaForm::evaluate(const RingSpec::Ptr &spec, int shift) const
{
    return LaurentPoly::linear(spec, alpha, alpha * Rational(shift) + beta);
}

std::string to_string(const LambdaForm &l)
{
    auto term = [](const Rational &c, const char *symbol) {
        const Rational mag = c.sign() < 0 ? -c : c;
        std::string body = mag == Rational(1) ? std::string(symbol)
                           : mag.is_integer() ? mag.to_string() + "*" + symbol
                                              : "(" + mag.to_string() + ")*" + symbol;
        return std::make_pair(c.sign() < 0, body);
    };
    std::string out;
    for (const auto &[c, symbol] : {std::make_pair(l.alpha, "h"), std::make_pair(l.beta, "t")}) {
        if (c.is_zero()) {
            continue;
        }
        const auto [negative, body] = term(c, symbol);
        if (out.empty()) {
            out = negative ? "-" + body : body;
        } else {
            out += negative ? " - " + body : " + " + body;
        }
    }
    return out.empty() ? "0" : out;
}

LaurentPoly cy_term(const LaurentPoly &phi_base, const Comb &comb, const LambdaTable &lambdas)
{
    const auto &spec = phi_base.spec_ptr();
    LaurentPoly term = phi_base;
    const int r = comb.teeth();
    for (int i = 1; i <= r; ++i) {
        auto it = lambdas.find(comb.gap(i));
        if (it == lambdas.end()) {
            throw std::invalid_argument("missing lambda_" + std::to_string(comb.gap(i)));
        }
        term *= it->second.evaluate(spec, comb.endpoints[i - 1]);
    }
    return term.shifted(-r) * factorial(r).inverse();
}

LaurentPoly cy_term(const CIModel &model, const Comb &comb, const LambdaTable &lambdas)
{
    return cy_term(phi(model, comb.base_degree()), comb, lambdas);
}

LambdaForm read_off_lambda(const CIModel &model, const LaurentPoly &simple_term)
{
    const auto spec = model.ring();
    const int k = model.n - model.m();
    const Rational norm = model.degree_product().inverse();
    const Rational alpha = (CohClass::h_power(spec, k - 1) * simple_term.coefficient(-1)).integrate_scalar();
    const Rational beta = (CohClass::h_power(spec, k) * simple_term.coefficient(0)).integrate_scalar();
    return LambdaForm{alpha * norm, beta * norm};
}

CalabiYauSolver::CalabiYauSolver(CIModel model) : model_(std::move(model))
{
    require_recursion_shape(model_);
    correlators_.push_back(LaurentPoly(model_.fundamental_class()));
}

const LaurentPoly &CalabiYauSolver::phi(int d)
{
    if (d < 0) {
        throw std::invalid_argument("curve degree must be non-negative");
    }
    while (static_cast<int>(phis_.size()) <= d) {
        phis_.push_back(gwci::phi(model_, static_cast<int>(phis_.size())));
    }
    return phis_[d];
}

void CalabiYauSolver::solve_through(int d)
{
    while (static_cast<int>(correlators_.size()) <= d) {
        solve_next();
    }
}

const LambdaForm &CalabiYauSolver::lambda(int d)
{
    if (d < 1) {
        throw std::invalid_argument("lambda_d is defined for d >= 1");
    }
    solve_through(d);
    return lambdas_.at(d);
}

const LaurentPoly &CalabiYauSolver::correlator(int d)
{
    if (d < 0) {
        throw std::invalid_argument("curve degree must be non-negative");
    }
    solve_through(d);
    return correlators_[d];
}

void CalabiYauSolver::solve_next()
{
    const int d = static_cast<int>(correlators_.size());
    const auto spec = model_.ring();

    LaurentPoly partial(spec);
    Comb simple;
    for (const Comb &comb : enumerate_combs(d)) {
        if (comb.is_simple()) {
            simple = comb;
            continue;
        }
        partial += cy_term(phi(comb.base_degree()), comb, lambdas_);
    }

    const LambdaForm lambda = cancel_errors(model_, partial, d);
    lambdas_.emplace(d, lambda);

    LaurentPoly total = partial + cy_term(phi(0), simple, lambdas_);
    if (!total.is_zero() && total.max_t_exp() >= -1) {
        throw consistency_error("degree " + std::to_string(d) + " correlator kept t^{-1} or t^0 terms");
    }
    correlators_.push_back(std::move(total));
}

LambdaForm solve_lambda(const CIModel &model, int d, const LambdaTable &lambdas)
{
    require_recursion_shape(model);
    if (d < 1) {
        throw std::invalid_argument("lambda_d is defined for d >= 1");
    }
    LaurentPoly partial(model.ring());
    for (const Comb &comb : enumerate_combs(d)) {
        if (!comb.is_simple()) {
            partial += cy_term(model, comb, lambdas);
        }
    }
    return cancel_errors(model, partial, d);
}

LaurentPoly cy_correlator(const CIModel &model, int d)
{
    CalabiYauSolver solver(model);
    return solver.correlator(d);
}

std::map<int, Rational> aspinwall_morrison(const std::map<int, Rational> &n_over_d)
{
    std::map<int, Rational> N;
    for (const auto &[d, value] : n_over_d) {
        if (d < 1) {
            throw std::invalid_argument("degrees must be >= 1");
        }
        Rational rest = value;
        for (int e = 1; e < d; ++e) {
            if (d % e != 0) {
                continue;
            }
            auto it = N.find(e);
            if (it == N.end()) {
                throw std::invalid_argument("missing value for divisor " + std::to_string(e) + " of " +
                                            std::to_string(d));
            }
            rest -= it->second * pow(Rational(e, d), 3);
        }
        N.emplace(d, rest);
    }
    return N;
}

ThreefoldReport threefold_report(const CIModel &model, int max_degree)
{
    require_classification(model, Classification::calabi_yau);
    if (model.n - model.m() != 3) {
        throw math_domain_error("threefold report needs n - m = 3");
    }
    CalabiYauSolver solver(model);
    ThreefoldReport report{model, {}};
    std::map<int, Rational> n_over_d;
    for (int d = 1; d <= max_degree; ++d) {
        const LaurentPoly &corr = solver.correlator(d);
        DegreeReport row;
        row.d = d;
        row.n_d = one_point_invariant(corr, 0, 1);
        row.m_d = one_point_invariant(corr, 1, 0);
        row.lambda = solver.lambda(d);
        n_over_d.emplace(d, row.n_d / Rational(d));
        report.degrees.push_back(row);
    }
    const auto N = aspinwall_morrison(n_over_d);
    for (auto &row : report.degrees) {
        row.N_d = N.at(row.d);
    }
    return report;
}

ThreefoldReport quintic_report(int max_degree)
{
    return threefold_report(classify(4, {5}), max_degree);
}

} // namespace gwci
