#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gwci/calabi_yau.hpp>
#include <gwci/qseries.hpp>

namespace gwci {

// Element slope * (d + h/t) + offset of the formal module Q(d + h/t) + Q.
struct MirrorPair {
    Rational slope;
    Rational offset;

    friend MirrorPair operator+(const MirrorPair &a, const MirrorPair &b)
    {
        return {a.slope + b.slope, a.offset + b.offset};
    }
    friend MirrorPair operator*(const MirrorPair &a, const Rational &c) { return {a.slope * c, a.offset * c}; }
    friend bool operator==(const MirrorPair &, const MirrorPair &) = default;
};

// y'_d = sum_{0 < d_1 < ... < d_r = d} y_{d_1} prod_{i=2}^r (x_{d_i - d_{i-1}} d_{i-1}) / r!
// for d = 1..D. Y only needs Y + Y and Y * Rational. Computed by a dynamic
// program over the chain length; comb_generating_function is the brute-force
// counterpart.
template <typename Y>
std::map<int, Y> corollary_transform(const std::map<int, Rational> &x, const std::map<int, Y> &y, int D)
{
    auto x_at = [&x](int k) -> const Rational & {
        auto it = x.find(k);
        if (it == x.end()) {
            throw std::invalid_argument("corollary_transform: missing x_" + std::to_string(k));
        }
        return it->second;
    };
    auto y_at = [&y](int k) -> const Y & {
        auto it = y.find(k);
        if (it == y.end()) {
            throw std::invalid_argument("corollary_transform: missing y_" + std::to_string(k));
        }
        return it->second;
    };

    // chains[k] = sum over chains of the current length ending at k, without 1/r!
    std::vector<std::optional<Y>> chains(static_cast<std::size_t>(D) + 1);
    std::vector<std::optional<Y>> total(static_cast<std::size_t>(D) + 1);
    for (int k = 1; k <= D; ++k) {
        chains[k] = y_at(k);
        total[k] = y_at(k);
    }
    Rational inv_factorial(1);
    for (int r = 2; r <= D; ++r) {
        inv_factorial /= Rational(r);
        std::vector<std::optional<Y>> next(chains.size());
        bool any = false;
        for (int k = r; k <= D; ++k) {
            for (int j = r - 1; j < k; ++j) {
                if (!chains[j]) {
                    continue;
                }
                Y contribution = *chains[j] * (x_at(k - j) * Rational(j));
                next[k] = next[k] ? *next[k] + contribution : contribution;
                any = true;
            }
        }
        if (!any) {
            break;
        }
        for (int k = r; k <= D; ++k) {
            if (next[k]) {
                *total[k] = *total[k] + *next[k] * inv_factorial;
            }
        }
        chains = std::move(next);
    }

    std::map<int, Y> out;
    for (int k = 1; k <= D; ++k) {
        out.emplace(k, *total[k]);
    }
    return out;
}

// Ring Q, realised as the absolute ring with n = 0.
RingSpec::Ptr scalar_ring();
// sum_d c_d q^d over scalar_ring(); missing degrees are zero.
QSeries scalar_series(const std::map<int, Rational> &coeffs, int D);
Rational scalar_coefficient(const QSeries &s, int d);

// F(q) = sum_d sum_{0 < d_1 < ... < d_r = d} prod_i (y_{d_i - d_{i-1}} + x_{d_i - d_{i-1}} d_{i-1}) / r! q^d
// with d_0 = 0, by direct enumeration of all chains.
QSeries comb_generating_function(const std::map<int, Rational> &x, const std::map<int, Rational> &y, int D);

// f(q) = sum a_e q^e and g(q) = sum b_e q^e
struct MirrorData {
    std::map<int, Rational> a;
    std::map<int, Rational> b;

    QSeries f(const RingSpec::Ptr &spec, int D) const;
    QSeries g(const RingSpec::Ptr &spec, int D) const;
};

MirrorData mirror_coefficients(const LambdaTable &lambdas, int D);

// sum over combs of phi_{d_1} prod_i (a_{Delta_i}(d_1 + h/t) + b_{Delta_i}) / r!
LaurentPoly mirror_comb_sum(const std::vector<LaurentPoly> &phis, const MirrorData &data, int d);

struct MirrorReport {
    bool holds = false;
    std::optional<int> first_failing_degree;
    bool series_identity = false; // Sigma == exp((h/t) f + g) Phi(q e^f)
    bool comb_identity = false;   // per-degree comb form with (a, b)
    MirrorData data;
    QSeries sigma;
    QSeries rhs;
};

MirrorReport verify_mirror_identity(const CIModel &model, int D);

} // namespace gwci
