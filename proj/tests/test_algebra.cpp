#include <doctest.h>

#include <gwci/errors.hpp>
#include <gwci/format.hpp>
#include <gwci/qseries.hpp>
#include <gwci/relative.hpp>
#include <gwci/serialize.hpp>
#include <gwci/testing/random_values.hpp>

using namespace gwci;

namespace {

Rational R(const char *s)
{
    return Rational::parse(s);
}

LaurentPoly H(const RingSpec::Ptr &spec, int k, int t_exp, const Rational &c = Rational(1))
{
    return LaurentPoly::monomial(CohClass::h_power(spec, k, c), t_exp);
}

QSeries scalar_q(const RingSpec::Ptr &spec, std::vector<Rational> coeffs, int D)
{
    QSeries s(spec, D);
    for (int d = 0; d < static_cast<int>(coeffs.size()) && d <= D; ++d) {
        s.set(d, LaurentPoly(CohClass::scalar(spec, coeffs[d])));
    }
    return s;
}

RingSpec::Ptr relative_test_ring()
{
    return RelativeModel(3, 3, {1}).ring();
}

} // namespace

TEST_SUITE("algebra")
{
    TEST_CASE("rationals are kept in lowest terms")
    {
        CHECK(Rational(6, 4).to_string() == "3/2");
        CHECK(Rational(3, -6).to_string() == "-1/2");
        CHECK(Rational(0, 5).to_string() == "0");
        CHECK(Rational(0, -5).denominator() == "1");
        CHECK(R("-10/4") == Rational(-5, 2));
        CHECK(R("7").is_integer());
        CHECK(R("15517926796875/16").numerator() == "15517926796875");
        CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
        CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
        CHECK(Rational(-2, 3).inverse() == Rational(-3, 2));
        CHECK(Rational(1, 3) < Rational(1, 2));
        CHECK(factorial(5) == Rational(120));
        CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
        CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
    }

    TEST_CASE("rationals beyond 64 bits stay exact")
    {
        Rational big = factorial(30);
        CHECK(big.to_string() == "265252859812191058636308480000000");
        CHECK((big / factorial(28)) == Rational(870));
    }

    TEST_CASE("rational errors")
    {
        CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
        CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
        CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
        CHECK_THROWS_AS(R("1/0"), std::domain_error);
        CHECK_THROWS_AS(R("abc"), std::invalid_argument);
        CHECK_THROWS_AS(R("1.5"), std::invalid_argument);
        CHECK_THROWS_AS(R(""), std::invalid_argument);
    }

    TEST_CASE("h^n times h truncates to zero")
    {
        for (int n = 0; n <= 6; ++n) {
            const auto spec = RingSpec::absolute(n);
            CHECK((CohClass::h_power(spec, n) * CohClass::hyperplane(spec)).is_zero());
            CHECK(CohClass::h_power(spec, n + 3).is_zero());
        }
    }

    TEST_CASE("one is the multiplicative identity")
    {
        testing::RandomValues rng(1);
        for (const auto &spec : {RingSpec::absolute(4), relative_test_ring()}) {
            for (int i = 0; i < 20; ++i) {
                const CohClass c = rng.coh_class(spec);
                CHECK(CohClass::one(spec) * c == c);
            }
        }
    }

    TEST_CASE("(1+h) times the truncated geometric series is 1")
    {
        const auto spec = RingSpec::absolute(4);
        const CohClass h = CohClass::hyperplane(spec);
        CohClass geometric = CohClass::zero(spec);
        for (int k = 0; k <= 4; ++k) {
            geometric += CohClass::h_power(spec, k, k % 2 == 0 ? Rational(1) : Rational(-1));
        }
        CHECK((CohClass::one(spec) + h) * geometric == CohClass::one(spec));
    }

    TEST_CASE("integration extracts the top h coefficient")
    {
        const auto spec = RingSpec::absolute(4);
        CHECK(CohClass::h_power(spec, 4).integrate_scalar() == Rational(1));
        CHECK(CohClass::h_power(spec, 3).integrate_scalar() == Rational(0));
        const CohClass c = CohClass::h_power(spec, 4, Rational(2875)) + CohClass::h_power(spec, 3, Rational(7));
        CHECK(c.integrate_scalar() == Rational(2875));
    }

    TEST_CASE("relative integration returns a base class")
    {
        const RelativeModel model(2, 3, {});
        const auto &spec = model.ring();
        // h^3 = -(c_1 h^2 + c_2 h + c_3) with c_1 = -s1
        const CohClass h3 = CohClass::h_power(spec, 3);
        CHECK(h3.integrate() == -model.chern(1));
        CHECK(CohClass::h_power(spec, 2).integrate() == BaseClass::constant(spec, Rational(1)));
        CHECK_THROWS_AS(h3.integrate_scalar(), std::logic_error);
    }

    TEST_CASE("relative h powers satisfy the bundle relation")
    {
        const RelativeModel model(2, 4, {});
        const auto &spec = model.ring();
        // sum_j c_j h^{n+1-j} = 0, and pushing h^{n+k} forward gives s_k
        CohClass rel = CohClass::zero(spec);
        for (int j = 0; j <= 3; ++j) {
            rel += CohClass::h_power(spec, 3 - j) * CohClass::from_base(model.chern(j));
        }
        CHECK(rel.is_zero());
        for (int k = 0; k <= 4; ++k) {
            CHECK(CohClass::h_power(spec, 2 + k).integrate() == model.segre(k));
        }
    }

    TEST_CASE("base ring truncates above the cutoff")
    {
        const RelativeModel model(1, 2, {});
        const BaseClass s1 = model.segre(1);
        CHECK(!(s1 * s1).is_zero());
        CHECK((s1 * s1 * s1).is_zero());
        CHECK((s1 * model.segre(2)).is_zero());
        CHECK(model.segre(3).is_zero());
    }

    TEST_CASE("chern and segre classes are inverse")
    {
        const RelativeModel model(3, 5, {});
        for (int k = 1; k <= 5; ++k) {
            BaseClass sum(model.ring());
            for (int i = 0; i <= k; ++i) {
                sum += model.chern(i) * model.segre(k - i);
            }
            CHECK(sum.is_zero());
        }
        CHECK(model.chern(2) == model.segre(1) * model.segre(1) - model.segre(2));
    }

    TEST_CASE("mixing rings throws")
    {
        const auto a = RingSpec::absolute(2);
        const auto b = RingSpec::absolute(3);
        CHECK_THROWS_AS(CohClass::one(a) + CohClass::one(b), spec_mismatch);
        CHECK_THROWS_AS(CohClass::one(a) * CohClass::one(b), spec_mismatch);
        CHECK_THROWS_AS(LaurentPoly(CohClass::one(a)) * LaurentPoly(CohClass::one(b)), spec_mismatch);
        CHECK_THROWS_AS(QSeries(a, 2) + QSeries(a, 3), std::invalid_argument);
        // structurally equal specs are interchangeable
        CHECK(CohClass::one(RingSpec::absolute(2)) + CohClass::one(a) == CohClass::scalar(a, Rational(2)));
    }

    TEST_CASE("invert t")
    {
        const auto spec = RingSpec::absolute(3);
        CHECK(invert_unit(LaurentPoly::t_power(spec, 1)) == LaurentPoly::t_power(spec, -1));
        CHECK(invert_unit(LaurentPoly::t_power(spec, -2, Rational(3))) == LaurentPoly::t_power(spec, 2, Rational(1, 3)));
    }

    TEST_CASE("invert h+t is a finite geometric series")
    {
        const auto spec = RingSpec::absolute(3);
        const LaurentPoly inv = invert_unit(LaurentPoly::linear(spec, Rational(1), Rational(1)));
        const LaurentPoly want = H(spec, 0, -1) - H(spec, 1, -2) + H(spec, 2, -3) - H(spec, 3, -4);
        CHECK(inv == want);
        CHECK(to_string(inv) == "t^-1 - h*t^-2 + h^2*t^-3 - h^3*t^-4");
    }

    TEST_CASE("invert h+2t with n=1")
    {
        const auto spec = RingSpec::absolute(1);
        const LaurentPoly inv = invert_unit(LaurentPoly::linear(spec, Rational(1), Rational(2)));
        CHECK(inv == H(spec, 0, -1, Rational(1, 2)) - H(spec, 1, -2, Rational(1, 4)));
    }

    TEST_CASE("inverse of (h+kt)^(n+1) matches the binomial series")
    {
        // (h + k t)^{-(n+1)} = sum_j (-1)^j C(n+j, j) h^j k^{-(n+1)-j} t^{-(n+1)-j}
        for (int n = 1; n <= 5; ++n) {
            const auto spec = RingSpec::absolute(n);
            for (int k = 1; k <= 3; ++k) {
                LaurentPoly want(spec);
                for (int j = 0; j <= n; ++j) {
                    const Rational binom = factorial(n + j) / (factorial(n) * factorial(j));
                    const Rational c = binom * pow(Rational(k), -(n + 1) - j) * (j % 2 == 0 ? Rational(1) : Rational(-1));
                    want += H(spec, j, -(n + 1) - j, c);
                }
                CHECK(invert_unit(LaurentPoly::linear(spec, Rational(1), Rational(k)).pow(n + 1)) == want);
                CHECK(LaurentPoly::linear(spec, Rational(1), Rational(k)).pow(-(n + 1)) == want);
            }
        }
    }

    TEST_CASE("non-units are rejected")
    {
        const auto spec = RingSpec::absolute(3);
        CHECK_THROWS_AS(invert_unit(LaurentPoly(spec)), not_invertible);
        CHECK_THROWS_AS(invert_unit(LaurentPoly(CohClass::hyperplane(spec))), not_invertible);
        // two t-exponents with invertible scalar parts
        CHECK_THROWS_AS(invert_unit(LaurentPoly::t_power(spec, 1) + LaurentPoly::t_power(spec, 0)), not_invertible);
    }

    TEST_CASE("randomized ring axioms")
    {
        testing::RandomValues rng(11);
        for (const auto &spec : {RingSpec::absolute(3), relative_test_ring()}) {
            for (int i = 0; i < 50; ++i) {
                const CohClass a = rng.coh_class(spec), b = rng.coh_class(spec), c = rng.coh_class(spec);
                CHECK(a * b == b * a);
                CHECK((a * b) * c == a * (b * c));
                CHECK(a * (b + c) == a * b + a * c);
                CHECK((a + b) - b == a);
                const LaurentPoly p = rng.laurent(spec), q = rng.laurent(spec), r = rng.laurent(spec);
                CHECK(p * q == q * p);
                CHECK((p * q) * r == p * (q * r));
                CHECK(p * (q + r) == p * q + p * r);
                CHECK((p - p).is_zero());
            }
        }
    }

    TEST_CASE("randomized inversion")
    {
        testing::RandomValues rng(12);
        for (const auto &spec : {RingSpec::absolute(4), relative_test_ring()}) {
            for (int i = 0; i < 50; ++i) {
                const LaurentPoly u = rng.laurent_unit(spec);
                const LaurentPoly v = invert_unit(u);
                CHECK(u * v == LaurentPoly(CohClass::one(spec)));
                CHECK(invert_unit(v) == u);
            }
        }
    }

    TEST_CASE("laurent helpers")
    {
        const auto spec = RingSpec::absolute(2);
        const LaurentPoly p = H(spec, 1, 2) + H(spec, 0, -1, Rational(3));
        CHECK(p.max_t_exp() == 2);
        CHECK(p.min_t_exp() == -1);
        CHECK(p.shifted(-2).max_t_exp() == 0);
        CHECK(p.restricted(0, 5) == H(spec, 1, 2));
        CHECK(p.coefficient(7).is_zero());
        CHECK(p.is_homogeneous(3) == false);
        CHECK((H(spec, 1, 2) + H(spec, 2, 1)).is_homogeneous(3));
        CHECK(LaurentPoly(spec).is_homogeneous(17));
        CHECK_THROWS_AS(LaurentPoly(spec).max_t_exp(), std::logic_error);
        CHECK(to_string(LaurentPoly(spec)) == "0");
        CHECK(to_string(LaurentPoly::linear(spec, Rational(2), Rational(-1))) == "-t + 2*h");
    }

    TEST_CASE("exp of zero and of q")
    {
        const auto spec = RingSpec::absolute(0);
        CHECK(series_exp(QSeries(spec, 4)) == scalar_q(spec, {Rational(1)}, 4));
        const QSeries q = scalar_q(spec, {Rational(0), Rational(1)}, 2);
        CHECK(series_exp(q) == scalar_q(spec, {Rational(1), Rational(1), Rational(1, 2)}, 2));
    }

    TEST_CASE("exp(log(1-q)) = 1-q")
    {
        const auto spec = RingSpec::absolute(0);
        const QSeries one_minus_q = scalar_q(spec, {Rational(1), Rational(-1)}, 5);
        const QSeries log = series_log(one_minus_q);
        // log(1-q) = -sum q^k / k
        for (int k = 1; k <= 5; ++k) {
            CHECK(log[k] == LaurentPoly(CohClass::scalar(spec, Rational(-1, k))));
        }
        CHECK(series_exp(log) == one_minus_q);
    }

    TEST_CASE("exp and log preconditions")
    {
        const auto spec = RingSpec::absolute(0);
        CHECK_THROWS_AS(series_exp(scalar_q(spec, {Rational(1)}, 3)), math_domain_error);
        CHECK_THROWS_AS(series_log(scalar_q(spec, {Rational(2)}, 3)), math_domain_error);
        CHECK_THROWS_AS(series_substitute(scalar_q(spec, {Rational(1)}, 3), scalar_q(spec, {Rational(1)}, 3)),
                        math_domain_error);
        CHECK_THROWS_AS(QSeries(spec, -1), std::invalid_argument);
    }

    TEST_CASE("substitution examples")
    {
        const auto spec = RingSpec::absolute(0);
        testing::RandomValues rng(3);
        const QSeries P = rng.series(spec, 4, false);
        CHECK(series_substitute(P, QSeries(spec, 4)) == P);
        const QSeries f = rng.series(spec, 4, true);
        CHECK(series_substitute(scalar_q(spec, {Rational(1)}, 4), f) == scalar_q(spec, {Rational(1)}, 4));

        // P = q, f = a q gives q + a q^2 + a^2/2 q^3
        const Rational a(-5, 3);
        const QSeries got = series_substitute(scalar_q(spec, {Rational(0), Rational(1)}, 3),
                                              scalar_q(spec, {Rational(0), a}, 3));
        CHECK(got == scalar_q(spec, {Rational(0), Rational(1), a, a * a / Rational(2)}, 3));
    }

    TEST_CASE("randomized exp and substitution properties")
    {
        testing::RandomValues rng(13);
        for (const auto &spec : {RingSpec::absolute(2), relative_test_ring()}) {
            for (int i = 0; i < 25; ++i) {
                const QSeries f = rng.series(spec, 4, true), g = rng.series(spec, 4, true);
                const QSeries P = rng.series(spec, 4, false), Q = rng.series(spec, 4, false);
                CHECK(series_exp(f + g) == series_exp(f) * series_exp(g));
                CHECK(series_log(series_exp(f)) == f);
                CHECK(series_substitute(P * Q, f) == series_substitute(P, f) * series_substitute(Q, f));
                CHECK(series_substitute(series_substitute(P, f), QSeries(spec, 4)) == series_substitute(P, f));
            }
        }
    }

    TEST_CASE("first difference of series")
    {
        const auto spec = RingSpec::absolute(0);
        const QSeries a = scalar_q(spec, {Rational(1), Rational(2), Rational(3)}, 2);
        const QSeries b = scalar_q(spec, {Rational(1), Rational(2), Rational(4)}, 2);
        CHECK(first_difference(a, a) == std::nullopt);
        CHECK(first_difference(a, b) == 2);
    }

    TEST_CASE("laurent json round trip")
    {
        testing::RandomValues rng(21);
        for (const auto &spec : {RingSpec::absolute(3), relative_test_ring()}) {
            for (int i = 0; i < 30; ++i) {
                const LaurentPoly p = rng.laurent(spec);
                const json j = laurent_to_json(p);
                CHECK(laurent_from_json(json::parse(j.dump()), spec) == p);
            }
        }
    }

    TEST_CASE("absolute laurent json layout")
    {
        const auto spec = RingSpec::absolute(2);
        const LaurentPoly p = H(spec, 1, -2, Rational(1, 2)) + H(spec, 0, 1, Rational(3));
        const json j = laurent_to_json(p);
        REQUIRE(j.size() == 2);
        CHECK(j[0]["t"] == 1);
        CHECK(j[1]["t"] == -2);
        CHECK(j[1]["h"] == json::array({"0", "1/2", "0"}));
        CHECK(rational_from_json(json("-7/3")) == Rational(-7, 3));
        CHECK_THROWS_AS(rational_from_json(json(1.5)), std::invalid_argument);
    }
}
