#pragma once

#include <map>
#include <utility>
#include <vector>

#include <gwci/qseries.hpp>

namespace gwci {

enum class BundleKind {
    formal,  // s_1, s_2, ... are free generators of the base ring
    trivial, // all positive-degree Segre classes vanish
};

// Projective bundle P(V) -> X with rank V = n + 1, and a complete
// intersection of type (l_1..l_m) in it. The base ring is generated by the
// Segre classes s_1..s_k of V, k = min(base_cutoff, n+1), with deg s_i = i,
// and truncated above base_cutoff, which stands in for dim X. Higher Segre
// classes are polynomials in these since c_j(V) = 0 for j > n+1. Chern roots
// are never materialised: c(V) = 1 / s(V) and h obeys sum_j c_j h^{n+1-j} = 0.
class RelativeModel {
public:
    RelativeModel(int n, int base_cutoff, std::vector<int> degrees, BundleKind kind = BundleKind::formal);

    int n() const { return n_; }
    int base_cutoff() const { return base_cutoff_; }
    const std::vector<int> &degrees() const { return degrees_; }
    int m() const { return static_cast<int>(degrees_.size()); }
    BundleKind kind() const { return kind_; }
    const RingSpec::Ptr &ring() const { return ring_; }

    // s_i(V); s_0 = 1 and s_i = 0 for i < 0 or i > base_cutoff.
    BaseClass segre(int i) const;
    // c_j(V), same conventions.
    BaseClass chern(int j) const;

    // m = n + 1 sections of O(1).
    bool is_linear_cy() const;

private:
    int n_;
    int base_cutoff_;
    std::vector<int> degrees_;
    BundleKind kind_;
    RingSpec::Ptr ring_;
    std::vector<BaseClass> segre_; // index 0..base_cutoff
    std::vector<BaseClass> chern_;
};

// prod_{k=1}^d prod_{j=1}^{n+1} (h + alpha_j + k t), expanded through the
// Chern classes of V.
LaurentPoly relative_euler(const RelativeModel &model, int d);

// The complete-intersection numerator over relative_euler.
LaurentPoly relative_phi(const RelativeModel &model, int d);

// Symmetric polynomial sigma(q_1, q_2) = sum c_{ij} q_1^i q_2^j.
struct SchubertInput {
    std::map<std::pair<int, int>, Rational> terms;

    static SchubertInput one();
    // (q_1 q_2)^k
    static SchubertInput product_power(int k);

    bool is_symmetric() const;
};

// Main term sigma(h, h+t) / prod_j (h + alpha_j + t). Coefficients at t^{-1}
// and below are not certified, since the boundary correction lands there.
LaurentPoly relative_schubert_leading(const RelativeModel &model, const SchubertInput &sigma);

// Pushes h times the t^{-2} coefficient of the main term for (q_1 q_2)^m down
// to the base. Needs all l_i = 1 and 0 <= m <= n+1.
BaseClass porteous_lines(const RelativeModel &model);
// s_{m-n+1}^2 - s_{m-n} s_{m-n+2}, evaluated directly in the Segre classes.
BaseClass porteous_formula(const RelativeModel &model);

// lambda_e(t) = t_coefficient * t + constant, constant a degree-one base class.
struct RelativeLambda {
    Rational t_coefficient;
    BaseClass constant;

    friend bool operator==(const RelativeLambda &, const RelativeLambda &) = default;
};

// Solves lambda_1..lambda_E of a linear relative Calabi-Yau by making the t^0
// and t^{-1} coefficients of (sum q^d phi_d) exp(sum q^e lambda_e / t) vanish.
std::vector<RelativeLambda> derive_linear_cy_lambdas(const RelativeModel &model, int max_degree);

// -(1/e)(t + s_1), checked against derive_linear_cy_lambdas.
RelativeLambda linear_cy_lambda(const RelativeModel &model, int e);

// (sum_d q^d phi_d) exp(sum_e q^e lambda_e(t) / t) with the closed-form lambdas.
QSeries linear_cy_generating_function(const RelativeModel &model, int D);

// The t^{-2} coefficient of the q^d term of the generating function.
CohClass linear_cy_pushforward(const RelativeModel &model, int d, int D);
// (1/d^2) h^{n+1} (s_2 - s_1 h)
CohClass linear_cy_expected(const RelativeModel &model, int d);

} // namespace gwci
