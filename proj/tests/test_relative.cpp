#include <doctest.h>

#include <gwci/correlators.hpp>
#include <gwci/errors.hpp>
#include <gwci/format.hpp>
#include <gwci/relative.hpp>

using namespace gwci;

namespace {

// Compares a relative polynomial whose coefficients are pure h-polynomials
// with an absolute one.
bool same_scalars(const LaurentPoly &rel, const LaurentPoly &abs)
{
    const auto &rspec = rel.spec();
    for (int e = std::min(rel.min_t_exp(), abs.min_t_exp()); e <= std::max(rel.max_t_exp(), abs.max_t_exp()); ++e) {
        const CohClass rc = rel.coefficient(e);
        const CohClass ac = abs.coefficient(e);
        for (int k = 0; k <= rspec.fiber_dim(); ++k) {
            if (!(rc.coefficient(k) == BaseClass::constant(rel.spec_ptr(), ac.coefficient(k, {})))) {
                return false;
            }
        }
    }
    return true;
}

// (h+t)^{-(n+1)} sum_i s_i (h+t)^{-i}
LaurentPoly segre_expansion(const RelativeModel &model, int shift_power)
{
    const auto &spec = model.ring();
    const LaurentPoly inv = invert_unit(LaurentPoly::linear(spec, Rational(1), Rational(1)));
    LaurentPoly sum(spec);
    for (int i = 0; i <= model.base_cutoff(); ++i) {
        sum += inv.pow(i) * LaurentPoly(CohClass::from_base(model.segre(i)));
    }
    return inv.pow(-shift_power) * sum;
}

} // namespace

TEST_SUITE("relative")
{
    TEST_CASE("trivial bundle euler class")
    {
        const RelativeModel model(2, 3, {}, BundleKind::trivial);
        const auto &spec = model.ring();
        for (int d = 0; d <= 3; ++d) {
            LaurentPoly want(CohClass::one(spec));
            for (int k = 1; k <= d; ++k) {
                want *= LaurentPoly::linear(spec, Rational(1), Rational(k)).pow(3);
            }
            CHECK(relative_euler(model, d) == want);
        }
        CHECK_THROWS_AS(relative_euler(model, -1), std::invalid_argument);
    }

    TEST_CASE("degree-one euler inverse is a segre expansion")
    {
        for (int n : {1, 2, 3}) {
            const RelativeModel model(n, 4, {});
            CHECK(invert_unit(relative_euler(model, 1)) == segre_expansion(model, -(n + 1)));
        }
    }

    TEST_CASE("relative phi over the trivial bundle is the absolute phi")
    {
        for (const auto &[n, degrees] : std::vector<std::pair<int, std::vector<int>>>{{3, {1}}, {4, {5}}, {3, {2}}}) {
            const RelativeModel model(n, 2, degrees, BundleKind::trivial);
            for (int d = 0; d <= 2; ++d) {
                CHECK(same_scalars(relative_phi(model, d), phi(classify(n, degrees), d)));
            }
        }
    }

    TEST_CASE("schubert leading term")
    {
        const RelativeModel model(2, 4, {1, 1, 1});
        CHECK(relative_schubert_leading(model, SchubertInput::one()) == invert_unit(relative_euler(model, 1)));
        const auto &spec = model.ring();
        const LaurentPoly h3 = LaurentPoly(CohClass::h_power(spec, 3));
        CHECK(relative_schubert_leading(model, SchubertInput::product_power(3)) == h3 * segre_expansion(model, 0));

        const RelativeModel flat(3, 2, {}, BundleKind::trivial);
        CHECK(same_scalars(relative_schubert_leading(flat, SchubertInput::one()), pn_one_point(3, 1)));

        SchubertInput lopsided{{{{1, 0}, Rational(1)}}};
        CHECK(!lopsided.is_symmetric());
        CHECK_THROWS_AS(relative_schubert_leading(model, lopsided), std::invalid_argument);
        SchubertInput sym{{{{1, 0}, Rational(2)}, {{0, 1}, Rational(2)}}};
        CHECK(sym.is_symmetric());
    }

    TEST_CASE("porteous formula")
    {
        {
            const RelativeModel model(2, 6, {1, 1, 1});
            const BaseClass s1 = model.segre(1), s2 = model.segre(2), s3 = model.segre(3);
            CHECK(porteous_lines(model) == s2 * s2 - s1 * s3);
        }
        {
            // m = n - 1
            const RelativeModel model(3, 4, {1, 1});
            CHECK(porteous_lines(model) == BaseClass::constant(model.ring(), Rational(1)));
        }
        for (const auto &[n, m] : std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {3, 3}, {3, 4}, {4, 5}, {2, 1}}) {
            const RelativeModel model(n, 6, std::vector<int>(m, 1));
            CHECK(porteous_lines(model) == porteous_formula(model));
            const RelativeModel trivial(n, 6, std::vector<int>(m, 1), BundleKind::trivial);
            if (m > n - 1) {
                CHECK(porteous_lines(trivial).is_zero());
            }
        }
        CHECK(to_string(porteous_lines(RelativeModel(3, 4, {1, 1, 1}))) == "-s2 + s1^2");
    }

    TEST_CASE("porteous preconditions")
    {
        CHECK_THROWS_AS(porteous_lines(RelativeModel(2, 4, {1, 2})), math_domain_error);
        CHECK_THROWS_AS(porteous_lines(RelativeModel(2, 6, {1, 1, 1, 1})), math_domain_error);
        CHECK_THROWS_AS(RelativeModel(0, 2, {}), std::invalid_argument);
        CHECK_THROWS_AS(RelativeModel(2, -1, {}), std::invalid_argument);
        CHECK_THROWS_AS(RelativeModel(2, 2, {0}), std::invalid_argument);
    }

    TEST_CASE("linear relative calabi-yau lambdas")
    {
        const RelativeModel model(2, 3, {1, 1, 1});
        CHECK(model.is_linear_cy());
        const RelativeLambda l1 = linear_cy_lambda(model, 1);
        CHECK(l1.t_coefficient == Rational(-1));
        CHECK(l1.constant == -model.segre(1));
        const RelativeLambda l3 = linear_cy_lambda(model, 3);
        CHECK(l3.t_coefficient == Rational(-1, 3));
        CHECK(l3.constant == model.segre(1) * Rational(-1, 3));

        const auto derived = derive_linear_cy_lambdas(model, 5);
        for (int e = 1; e <= 5; ++e) {
            CHECK(derived[e - 1] == RelativeLambda{Rational(-1, e), model.segre(1) * Rational(-1, e)});
        }
    }

    TEST_CASE("linear relative calabi-yau pushforwards")
    {
        for (int n : {1, 2, 3}) {
            const RelativeModel model(n, 5, std::vector<int>(n + 1, 1));
            const QSeries G = linear_cy_generating_function(model, 5);
            for (int d = 1; d <= 5; ++d) {
                CHECK(G[d].coefficient(0).is_zero());
                CHECK(G[d].coefficient(-1).is_zero());
            }
            const auto &spec = model.ring();
            const CohClass bracket = CohClass::from_base(model.segre(2)) -
                                     CohClass::from_base(model.segre(1)) * CohClass::hyperplane(spec);
            CHECK(linear_cy_pushforward(model, 1, 4) == CohClass::h_power(spec, n + 1) * bracket);
            CHECK(linear_cy_pushforward(model, 3, 4) == CohClass::h_power(spec, n + 1) * bracket * Rational(1, 9));
            for (int d = 1; d <= 4; ++d) {
                CHECK(!linear_cy_expected(model, d).is_zero());
                CHECK(linear_cy_pushforward(model, d, 4) == linear_cy_expected(model, d));
            }
        }
    }

    TEST_CASE("closed-form class needs base degree 4")
    {
        // h^{n+1}(s_2 - s_1 h) pushes forward to s_1 s_2 - s_1 s_2 = 0
        const RelativeModel low(2, 3, {1, 1, 1});
        CHECK(linear_cy_expected(low, 1).is_zero());
        const RelativeModel high(2, 4, {1, 1, 1});
        CHECK(linear_cy_expected(high, 1).integrate().is_zero());
        CHECK(!linear_cy_expected(high, 1).is_zero());
    }

    TEST_CASE("linear relative calabi-yau preconditions")
    {
        CHECK_THROWS_AS(linear_cy_lambda(RelativeModel(2, 3, {1, 1}), 1), math_domain_error);
        CHECK_THROWS_AS(linear_cy_lambda(RelativeModel(2, 1, {1, 1, 1}), 1), math_domain_error);
        CHECK_THROWS_AS(linear_cy_lambda(RelativeModel(2, 3, {1, 1, 1}), 0), std::invalid_argument);
        CHECK_THROWS_AS(linear_cy_pushforward(RelativeModel(2, 3, {1, 1, 1}), 3, 2), std::invalid_argument);
    }
}
