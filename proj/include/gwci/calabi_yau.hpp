#pragma once

#include <map>
#include <string>
#include <vector>

#include <gwci/correlators.hpp>

namespace gwci {

// Comb type 0 <= d_1 < d_2 < ... < d_{r+1} = d: a parametrized component of
// degree d_1 with r teeth of degrees Delta_i = d_{i+1} - d_i attached.
struct Comb {
    std::vector<int> endpoints;

    int degree() const { return endpoints.back(); }
    int teeth() const { return static_cast<int>(endpoints.size()) - 1; }
    int base_degree() const { return endpoints.front(); }
    // Delta_i for 1 <= i <= teeth()
    int gap(int i) const { return endpoints[i] - endpoints[i - 1]; }
    // The comb {0 < d}, whose term is phi_0 lambda_d / t.
    bool is_simple() const { return endpoints.size() == 2 && endpoints.front() == 0; }

    friend bool operator==(const Comb &, const Comb &) = default;
};

// All 2^d combs of degree d. Comb number k chooses the endpoints {i : bit i of
// k set} from {0, ..., d-1}, so d = 2 gives (2), (0,2), (1,2), (0,1,2).
std::vector<Comb> enumerate_combs(int d);

// lambda(h, t) = alpha h + beta t
struct LambdaForm {
    Rational alpha;
    Rational beta;

    // alpha (h + shift t) + beta t
    LaurentPoly evaluate(const RingSpec::Ptr &spec, int shift = 0) const;

    friend bool operator==(const LambdaForm &, const LambdaForm &) = default;
};

// "-770*h - 120*t"; fractional coefficients are parenthesised.
std::string to_string(const LambdaForm &l);

using LambdaTable = std::map<int, LambdaForm>;

// phi_{d_1} prod_{i=1}^r lambda_{Delta_i}(h + d_i t, t) / (r! t^r), given phi_{d_1}.
LaurentPoly cy_term(const LaurentPoly &phi_base, const Comb &comb, const LambdaTable &lambdas);
LaurentPoly cy_term(const CIModel &model, const Comb &comb, const LambdaTable &lambdas);

// Independent read-off of (alpha_d, beta_d) from the simple-comb term
// phi_0 lambda_d / t by integrating against h^{n-m-1} and h^{n-m}.
LambdaForm read_off_lambda(const CIModel &model, const LaurentPoly &simple_term);

// Degree-by-degree solver for the Calabi-Yau comb formula. Each lambda_d is
// fixed by requiring the t^{-1} and t^0 coefficients of the degree-d comb sum
// to vanish; the result is cross-checked against read_off_lambda.
class CalabiYauSolver {
public:
    explicit CalabiYauSolver(CIModel model);

    const CIModel &model() const { return model_; }
    const LaurentPoly &phi(int d);
    const LambdaForm &lambda(int d);
    const LaurentPoly &correlator(int d);
    const LambdaTable &lambdas() const { return lambdas_; }

    void solve_through(int d);

private:
    void solve_next();

    CIModel model_;
    std::vector<LaurentPoly> phis_;
    LambdaTable lambdas_;
    std::vector<LaurentPoly> correlators_; // index d, starting at [S]
};

// Solve for lambda_d given lambda_1..lambda_{d-1}.
LambdaForm solve_lambda(const CIModel &model, int d, const LambdaTable &lambdas);
LaurentPoly cy_correlator(const CIModel &model, int d);

struct DegreeReport {
    int d = 0;
    Rational n_d;       // coefficient of h^{m+2} t^{-2}, paired with h
    Rational m_d;       // coefficient of h^{m+3} t^{-3}
    Rational N_d;       // after multiple-cover correction
    LambdaForm lambda;
};

struct ThreefoldReport {
    CIModel model;
    std::vector<DegreeReport> degrees;
};

// Calabi-Yau threefolds (n - m = 3) only.
ThreefoldReport threefold_report(const CIModel &model, int max_degree);
ThreefoldReport quintic_report(int max_degree);

// Solves n_d/d = sum_{e|d} N_e / (d/e)^3 for N_d, given n_d/d for every d.
std::map<int, Rational> aspinwall_morrison(const std::map<int, Rational> &n_over_d);

} // namespace gwci
