#include <gwci/serialize.hpp>

#include <stdexcept>

namespace gwci {

json rational_to_json(const Rational &r)
{
    return r.to_string();
}

Rational rational_from_json(const json &j)
{
    if (!j.is_string()) {
        throw std::invalid_argument("rational must be serialized as a string");
    }
    return Rational::parse(j.get<std::string>());
}

namespace {

json monomial_to_json(const RingSpec &spec, const BaseMonomial &m)
{
    json out = json::object();
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] != 0) {
            out[spec.generators()[i].name] = m[i];
        }
    }
    return out;
}

BaseMonomial monomial_from_json(const json &j, const RingSpec &spec)
{
    BaseMonomial m = spec.unit_monomial();
    for (const auto &[name, e] : j.items()) {
        bool found = false;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (spec.generators()[i].name == name) {
                m[i] = e.get<int>();
                found = true;
            }
        }
        if (!found) {
            throw std::invalid_argument("unknown base generator '" + name + "'");
        }
    }
    return m;
}

} // namespace

json base_to_json(const BaseClass &b)
{
    json out = json::array();
    for (const auto &[m, c] : b.terms()) {
        out.push_back({{"base", monomial_to_json(b.spec(), m)}, {"c", rational_to_json(c)}});
    }
    return out;
}

BaseClass base_from_json(const json &j, const RingSpec::Ptr &spec)
{
    BasePoly p;
    for (const auto &term : j) {
        accumulate(p, monomial_from_json(term.at("base"), *spec), rational_from_json(term.at("c")));
    }
    return BaseClass(spec, p);
}

json laurent_to_json(const LaurentPoly &p)
{
    json out = json::array();
    const auto &spec = p.spec();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto &[e, c] = *it;
        json entry{{"t", e}};
        if (!spec.is_relative()) {
            json h = json::array();
            for (int k = 0; k <= spec.fiber_dim(); ++k) {
                h.push_back(rational_to_json(c.coefficient(k, spec.unit_monomial())));
            }
            entry["h"] = h;
        } else {
            json terms = json::array();
            const auto &by_h = c.by_h_power();
            for (int k = 0; k < static_cast<int>(by_h.size()); ++k) {
                for (const auto &[m, coeff] : by_h[k]) {
                    terms.push_back({{"h", k}, {"base", monomial_to_json(spec, m)}, {"c", rational_to_json(coeff)}});
                }
            }
            entry["terms"] = terms;
        }
        out.push_back(entry);
    }
    return out;
}

LaurentPoly laurent_from_json(const json &j, const RingSpec::Ptr &spec)
{
    LaurentPoly p(spec);
    for (const auto &entry : j) {
        const int e = entry.at("t").get<int>();
        CohClass c(spec);
        if (entry.contains("h")) {
            const auto &h = entry.at("h");
            if (static_cast<int>(h.size()) != spec->fiber_dim() + 1) {
                throw std::invalid_argument("h-coefficient list has the wrong length");
            }
            for (int k = 0; k <= spec->fiber_dim(); ++k) {
                c += CohClass::h_power(spec, k, rational_from_json(h[k]));
            }
        } else {
            for (const auto &term : entry.at("terms")) {
                const int k = term.at("h").get<int>();
                BasePoly b;
                accumulate(b, monomial_from_json(term.at("base"), *spec), rational_from_json(term.at("c")));
                c += CohClass::h_power(spec, k) * CohClass::from_base(BaseClass(spec, b));
            }
        }
        p += LaurentPoly::monomial(c, e);
    }
    return p;
}

json model_to_json(const CIModel &model)
{
    return {{"n", model.n}, {"degrees", model.degrees}, {"classification", to_string(model.classification)}};
}

json lambda_to_json(const LambdaForm &l)
{
    return {{"alpha", rational_to_json(l.alpha)}, {"beta", rational_to_json(l.beta)}};
}

LambdaForm lambda_from_json(const json &j)
{
    return LambdaForm{rational_from_json(j.at("alpha")), rational_from_json(j.at("beta"))};
}

json report_to_json(const ThreefoldReport &report)
{
    json rows = json::array();
    for (const auto &row : report.degrees) {
        rows.push_back({{"d", row.d},
                        {"n_d", rational_to_json(row.n_d)},
                        {"m_d", rational_to_json(row.m_d)},
                        {"N_d", rational_to_json(row.N_d)},
                        {"lambda", lambda_to_json(row.lambda)}});
    }
    return {{"model", model_to_json(report.model)}, {"degrees", rows}};
}

json mirror_to_json(const CIModel &model, const MirrorReport &report, int D)
{
    json coeffs = json::array();
    for (const auto &[e, a] : report.data.a) {
        coeffs.push_back({{"e", e}, {"a", rational_to_json(a)}, {"b", rational_to_json(report.data.b.at(e))}});
    }
    json out{{"model", model_to_json(model)},
             {"max_degree", D},
             {"coefficients", coeffs},
             {"holds", report.holds},
             {"series_identity", report.series_identity},
             {"comb_identity", report.comb_identity}};
    out["first_failing_degree"] = report.first_failing_degree ? json(*report.first_failing_degree) : json(nullptr);
    return out;
}

} // namespace gwci
