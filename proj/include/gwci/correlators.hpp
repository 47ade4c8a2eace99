#pragma once

#include <string>
#include <vector>

#include <gwci/laurent.hpp>

namespace gwci {

enum class Classification {
    fano_index_ge2, // sum l_i <  n
    fano_index_one, // sum l_i == n
    calabi_yau,     // sum l_i == n + 1
    general_type,   // sum l_i >  n + 1
};

std::string to_string(Classification c);
// The inequality that defines the class, e.g. "l_1+...+l_m > n+1".
std::string classification_rule(Classification c);

// Complete intersection of type (l_1, ..., l_m) in P^n. An empty degree list
// is projective space itself.
struct CIModel {
    int n = 0;
    std::vector<int> degrees;
    Classification classification = Classification::fano_index_ge2;

    int m() const { return static_cast<int>(degrees.size()); }
    int degree_sum() const;
    // prod l_i
    Rational degree_product() const;
    // prod l_i!
    Rational factorial_product() const;
    RingSpec::Ptr ring() const { return RingSpec::absolute(n); }
    // [S] = prod l_i h^m
    CohClass fundamental_class() const;
};

CIModel classify(int n, std::vector<int> degrees);

// prod_i prod_{k=0}^{d l_i} (l_i h + k t), over any ring with a hyperplane class.
LaurentPoly hypergeometric_numerator(const RingSpec::Ptr &spec, const std::vector<int> &degrees, int d);

// phi_d = prod_i prod_{k=0}^{d l_i}(l_i h + k t) / prod_{k=1}^d (h + k t)^{n+1}
LaurentPoly phi(const CIModel &model, int d);

// 1 / prod_{k=1}^d (h + k t)^{n+1}
LaurentPoly pn_one_point(int n, int d);

LaurentPoly fano_ge2_correlator(const CIModel &model, int d);
// sum_{r=0}^d (-prod l_i!)^r phi_{d-r} / (r! t^r)
LaurentPoly fano_index1_correlator(const CIModel &model, int d);

// Integral of psi^a e^*(h^b) [S]_d: the integral of h^b times the t^{-2-a}
// coefficient. Absolute rings only.
Rational one_point_invariant(const LaurentPoly &correlator, int a, int b);

// Throws classification_error naming the rule the model violates.
void require_classification(const CIModel &model, Classification expected);

} // namespace gwci
