#include <gwci/mirror_map.hpp>

#include <algorithm>
#include <cstdint>

#include <gwci/errors.hpp>

namespace gwci {

RingSpec::Ptr scalar_ring()
{
    static const RingSpec::Ptr ring = RingSpec::absolute(0);
    return ring;
}

QSeries scalar_series(const std::map<int, Rational> &coeffs, int D)
{
    const auto ring = scalar_ring();
    QSeries s(ring, D);
    for (const auto &[d, c] : coeffs) {
        if (d >= 0 && d <= D) {
            s.set(d, LaurentPoly(CohClass::scalar(ring, c)));
        }
    }
    return s;
}

Rational scalar_coefficient(const QSeries &s, int d)
{
    return s[d].coefficient(0).scalar_part();
}

QSeries comb_generating_function(const std::map<int, Rational> &x, const std::map<int, Rational> &y, int D)
{
    if (D > 24) {
        throw std::invalid_argument("comb_generating_function enumerates 2^(D-1) chains; D <= 24");
    }
    std::map<int, Rational> F{{0, Rational(1)}};
    for (int d = 1; d <= D; ++d) {
        Rational sum(0);
        // bit i of mask (0-based) selects i+1 in {1..d-1} as an interior endpoint
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << (d - 1)); ++mask) {
            std::vector<int> chain{0};
            for (int i = 1; i < d; ++i) {
                if (mask & (std::uint32_t{1} << (i - 1))) {
                    chain.push_back(i);
                }
            }
            chain.push_back(d);
            Rational term(1);
            const int r = static_cast<int>(chain.size()) - 1;
            for (int i = 1; i <= r; ++i) {
                const int gap = chain[i] - chain[i - 1];
                term *= y.at(gap) + x.at(gap) * Rational(chain[i - 1]);
            }
            sum += term / factorial(r);
        }
        F.emplace(d, sum);
    }
    return scalar_series(F, D);
}

QSeries MirrorData::f(const RingSpec::Ptr &spec, int D) const
{
    QSeries s(spec, D);
    for (const auto &[e, v] : a) {
        if (e >= 1 && e <= D) {
            s.set(e, LaurentPoly(CohClass::scalar(spec, v)));
        }
    }
    return s;
}

QSeries MirrorData::g(const RingSpec::Ptr &spec, int D) const
{
    QSeries s(spec, D);
    for (const auto &[e, v] : b) {
        if (e >= 1 && e <= D) {
            s.set(e, LaurentPoly(CohClass::scalar(spec, v)));
        }
    }
    return s;
}

MirrorData mirror_coefficients(const LambdaTable &lambdas, int D)
{
    std::map<int, Rational> x;
    std::map<int, MirrorPair> y;
    for (int e = 1; e <= D; ++e) {
        auto it = lambdas.find(e);
        if (it == lambdas.end()) {
            throw std::invalid_argument("mirror_coefficients: missing lambda_" + std::to_string(e));
        }
        x.emplace(e, it->second.alpha);
        y.emplace(e, MirrorPair{it->second.alpha, it->second.beta});
    }
    MirrorData data;
    for (const auto &[e, pair] : corollary_transform(x, y, D)) {
        data.a.emplace(e, pair.slope);
        data.b.emplace(e, pair.offset);
    }
    return data;
}

LaurentPoly mirror_comb_sum(const std::vector<LaurentPoly> &phis, const MirrorData &data, int d)
{
    if (d < 0 || d >= static_cast<int>(phis.size())) {
        throw std::invalid_argument("mirror_comb_sum: phi_d not supplied");
    }
    const auto &spec = phis.front().spec_ptr();
    if (d == 0) {
        return phis[0];
    }
    LaurentPoly sum(spec);
    for (const Comb &comb : enumerate_combs(d)) {
        const int d1 = comb.base_degree();
        LaurentPoly term = phis[d1];
        const int r = comb.teeth();
        for (int i = 1; i <= r; ++i) {
            const int gap = comb.gap(i);
            const Rational &a = data.a.at(gap);
            const Rational &b = data.b.at(gap);
            // a (d_1 + h/t) + b
            LaurentPoly factor = LaurentPoly::monomial(CohClass::h_power(spec, 1, a), -1) +
                                 LaurentPoly(CohClass::scalar(spec, a * Rational(d1) + b));
            term *= factor;
        }
        sum += term * factorial(r).inverse();
    }
    return sum;
}

MirrorReport verify_mirror_identity(const CIModel &model, int D)
{
    require_classification(model, Classification::calabi_yau);
    if (D < 0) {
        throw std::invalid_argument("truncation order must be non-negative");
    }
    CalabiYauSolver solver(model);
    const auto spec = model.ring();

    std::vector<LaurentPoly> phis;
    QSeries sigma(spec, D);
    QSeries Phi(spec, D);
    for (int d = 0; d <= D; ++d) {
        phis.push_back(solver.phi(d));
        Phi.set(d, phis.back());
        sigma.set(d, solver.correlator(d));
    }

    MirrorReport report{false, std::nullopt, false, false, MirrorData{}, sigma, QSeries(spec, D)};
    // lambda_D is never used by Sigma up to q^D, but a_D, b_D are reported.
    if (D >= 1) {
        solver.lambda(D);
        report.data = mirror_coefficients(solver.lambdas(), D);
    }

    const QSeries f = report.data.f(spec, D);
    const QSeries g = report.data.g(spec, D);
    const LaurentPoly h_over_t = LaurentPoly::monomial(CohClass::hyperplane(spec), -1);
    report.rhs = series_exp(f * h_over_t + g) * series_substitute(Phi, f);

    const auto series_failure = first_difference(sigma, report.rhs);
    report.series_identity = !series_failure.has_value();

    std::optional<int> comb_failure;
    for (int d = 0; d <= D; ++d) {
        if (!(mirror_comb_sum(phis, report.data, d) == sigma[d])) {
            comb_failure = d;
            break;
        }
    }
    report.comb_identity = !comb_failure.has_value();

    report.holds = report.series_identity && report.comb_identity;
    if (series_failure || comb_failure) {
        report.first_failing_degree = std::min(series_failure.value_or(D + 1), comb_failure.value_or(D + 1));
    }
    return report;
}

} // namespace gwci
