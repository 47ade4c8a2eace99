#include <gwci/format.hpp>

#include <ostream>
#include <vector>

namespace gwci {

namespace {

std::string monomial_text(const RingSpec &spec, const BaseMonomial &m, int h_exp)
{
    std::string out;
    auto factor = [&out](const std::string &name, int e) {
        if (e == 0) {
            return;
        }
        if (!out.empty()) {
            out += '*';
        }
        out += name;
        if (e != 1) {
            out += '^' + std::to_string(e);
        }
    };
    for (std::size_t i = 0; i < m.size(); ++i) {
        factor(spec.generators()[i].name, m[i]);
    }
    factor("h", h_exp);
    return out;
}

std::string term_text(const Rational &c, const std::string &mono)
{
    if (mono.empty()) {
        return c.to_string();
    }
    if (c == Rational(1)) {
        return mono;
    }
    if (c == Rational(-1)) {
        return "-" + mono;
    }
    return c.to_string() + "*" + mono;
}

std::string join_terms(const std::vector<std::string> &terms)
{
    if (terms.empty()) {
        return "0";
    }
    std::string out = terms.front();
    for (std::size_t i = 1; i < terms.size(); ++i) {
        if (terms[i].front() == '-') {
            out += " - " + terms[i].substr(1);
        } else {
            out += " + " + terms[i];
        }
    }
    return out;
}

std::vector<std::string> class_terms(const CohClass &c)
{
    std::vector<std::string> terms;
    const auto &by_h = c.by_h_power();
    for (int k = 0; k < static_cast<int>(by_h.size()); ++k) {
        for (const auto &[m, coeff] : by_h[k]) {
            terms.push_back(term_text(coeff, monomial_text(c.spec(), m, k)));
        }
    }
    return terms;
}

std::string t_text(int e)
{
    if (e == 1) {
        return "t";
    }
    return "t^" + std::to_string(e);
}

} // namespace

std::string to_string(const BaseClass &b)
{
    std::vector<std::string> terms;
    for (const auto &[m, c] : b.terms()) {
        terms.push_back(term_text(c, monomial_text(b.spec(), m, 0)));
    }
    return join_terms(terms);
}

std::string to_string(const CohClass &c)
{
    return join_terms(class_terms(c));
}

std::string to_string(const LaurentPoly &p)
{
    std::vector<std::string> terms;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto &[e, c] = *it;
        auto parts = class_terms(c);
        if (e == 0) {
            terms.insert(terms.end(), parts.begin(), parts.end());
            continue;
        }
        if (parts.size() == 1) {
            const std::string &s = parts.front();
            if (s == "1") {
                terms.push_back(t_text(e));
            } else if (s == "-1") {
                terms.push_back("-" + t_text(e));
            } else {
                terms.push_back(s + "*" + t_text(e));
            }
        } else {
            terms.push_back("(" + join_terms(parts) + ")*" + t_text(e));
        }
    }
    return join_terms(terms);
}

std::string to_string(const QSeries &s)
{
    std::vector<std::string> terms;
    for (int d = 0; d <= s.truncation(); ++d) {
        if (s[d].is_zero()) {
            continue;
        }
        const std::string body = "(" + to_string(s[d]) + ")";
        terms.push_back(d == 0 ? body : body + "*q^" + std::to_string(d));
    }
    return join_terms(terms) + " + O(q^" + std::to_string(s.truncation() + 1) + ")";
}

std::ostream &operator<<(std::ostream &os, const BaseClass &b)
{
    return os << to_string(b);
}

std::ostream &operator<<(std::ostream &os, const CohClass &c)
{
    return os << to_string(c);
}

std::ostream &operator<<(std::ostream &os, const LaurentPoly &p)
{
    return os << to_string(p);
}

std::ostream &operator<<(std::ostream &os, const QSeries &s)
{
    return os << to_string(s);
}

} // namespace gwci
