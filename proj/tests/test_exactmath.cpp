#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ytw/errors.hpp"
#include "ytw/exact.hpp"
#include "ytw/mpoly.hpp"
#include "ytw/poly.hpp"

using namespace ytw;

namespace {

const std::vector<std::string> kXZ{"x", "z"};

MultivariatePolynomial mono(const std::vector<std::string>& vars, std::vector<int> e,
                            Rational c) {
    MultivariatePolynomial p(vars);
    p.add_term(e, c);
    return p;
}

MultivariatePolynomial random_mpoly(std::mt19937& gen, const std::vector<std::string>& vars) {
    std::uniform_int_distribution<int> deg(0, 3), coeff(-5, 5);
    MultivariatePolynomial p(vars);
    for (int t = 0; t < 4; ++t) {
        std::vector<int> e(vars.size());
        for (auto& x : e) x = deg(gen);
        p.add_term(e, Rational(coeff(gen)));
    }
    return p;
}

} // namespace

TEST_CASE("rational string roundtrip") {
    CHECK(to_fraction_string(Rational(3, 6)) == "1/2");
    CHECK(to_fraction_string(Rational(-4, 2)) == "-2");
    CHECK(parse_fraction("22/7") == Rational(22, 7));
    CHECK(parse_fraction("-9") == Rational(-9));
    CHECK_THROWS_AS(parse_fraction("a/b"), usage_error);
    CHECK_THROWS_AS(parse_fraction(""), usage_error);
}

TEST_CASE("difference of squares") {
    auto x = MultivariatePolynomial::variable(kXZ, "x");
    auto z = MultivariatePolynomial::variable(kXZ, "z");
    auto prod = (x + z) * (x - z);
    CHECK(prod == x * x - z * z);
}

TEST_CASE("multiplication by zero annihilates") {
    std::mt19937 gen(7);
    auto p = random_mpoly(gen, kXZ);
    auto zero = MultivariatePolynomial(kXZ);
    CHECK((p * zero).is_zero());
    CHECK((p * Rational(0)).is_zero());
}

TEST_CASE("mismatched variable sets are rejected") {
    auto a = MultivariatePolynomial::variable(kXZ, "x");
    auto b = MultivariatePolynomial::variable({"x", "y"}, "x");
    CHECK_THROWS_AS(a + b, usage_error);
    CHECK_THROWS_AS(a * b, usage_error);
}

TEST_CASE("integrate_layer on monomials and constants") {
    // int_0^z x dx = z^2/2
    auto x = MultivariatePolynomial::variable(kXZ, "x");
    auto r = integrate_layer(x, "x", BoundRef::zero(), BoundRef::var("z"));
    CHECK(r == mono(kXZ, {0, 2}, Rational(1, 2)));

    // int_y^w 1 dv = w - y
    std::vector<std::string> vw{"v", "w", "y"};
    auto one = MultivariatePolynomial::constant(vw, Rational(1));
    auto s = integrate_layer(one, "v", BoundRef::var("y"), BoundRef::var("w"));
    CHECK(s == MultivariatePolynomial::variable(vw, "w") -
                   MultivariatePolynomial::variable(vw, "y"));
}

TEST_CASE("bound referencing the integration variable is rejected") {
    auto x = MultivariatePolynomial::variable(kXZ, "x");
    CHECK_THROWS_AS(integrate_layer(x, "x", BoundRef::zero(), BoundRef::var("x")), usage_error);
}

TEST_CASE("six-layer nested chain reproduces the first block count") {
    // Integrating the full block with input density 1, then z over [0,1],
    // times 7!, counts the 7-cell polyomino fillings: 12.
    std::vector<std::string> vars{"x", "y", "r", "s", "w", "v", "z"};
    auto e = MultivariatePolynomial::constant(vars, Rational(1));
    e = integrate_layer(e, "v", BoundRef::var("y"), BoundRef::var("w"));
    e = integrate_layer(e, "w", BoundRef::var("z"), BoundRef::one());
    e = integrate_layer(e, "s", BoundRef::var("r"), BoundRef::var("z"));
    e = integrate_layer(e, "r", BoundRef::zero(), BoundRef::var("y"));
    e = integrate_layer(e, "y", BoundRef::var("x"), BoundRef::var("z"));
    e = integrate_layer(e, "x", BoundRef::zero(), BoundRef::var("z"));
    Polynomial p1 = e.to_univariate("z");
    Rational total = p1.definite_unit_integral() * Rational(Integer(5040));
    CHECK(total == Rational(12));
    // p_1(0) = 0: the outermost integral has lower bound 0.
    CHECK(p1.evaluate(Rational(0)) == Rational(0));
}

TEST_CASE("integration linearity on random polynomials") {
    std::mt19937 gen(42);
    std::vector<std::string> vars{"x", "y", "z"};
    for (int trial = 0; trial < 25; ++trial) {
        auto a = random_mpoly(gen, vars);
        auto b = random_mpoly(gen, vars);
        auto lhs = integrate_layer(a + b, "y", BoundRef::var("x"), BoundRef::var("z"));
        auto rhs = integrate_layer(a, "y", BoundRef::var("x"), BoundRef::var("z")) +
                   integrate_layer(b, "y", BoundRef::var("x"), BoundRef::var("z"));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("Fubini on boxes: integration order does not matter") {
    std::mt19937 gen(4242);
    std::vector<std::string> vars{"x", "y"};
    for (int trial = 0; trial < 25; ++trial) {
        auto p = random_mpoly(gen, vars);
        auto xy = integrate_layer(integrate_layer(p, "x", BoundRef::zero(), BoundRef::one()),
                                  "y", BoundRef::zero(), BoundRef::one());
        auto yx = integrate_layer(integrate_layer(p, "y", BoundRef::zero(), BoundRef::one()),
                                  "x", BoundRef::zero(), BoundRef::one());
        CHECK(xy == yx);
    }
}

TEST_CASE("definite unit integral") {
    CHECK(Polynomial::constant(Rational(1)).definite_unit_integral() == Rational(1));
    CHECK(Polynomial::monomial(Rational(1), 2).definite_unit_integral() == Rational(1, 3));
}

TEST_CASE("polynomial evaluation") {
    auto z = Polynomial::monomial(Rational(1), 1);
    CHECK(z.evaluate(Rational(1, 2)) == Rational(1, 2));
    auto q = z * z - z; // z^2 - z
    CHECK(q.evaluate(Rational(1)) == Rational(0));
    CHECK(q.evaluate(0.5) == doctest::Approx(-0.25));
}

TEST_CASE("canonical form has no trailing zeros") {
    auto z = Polynomial::monomial(Rational(1), 3);
    auto diff = z - z;
    CHECK(diff.is_zero());
    CHECK(diff.degree() == -1);
    auto p = Polynomial::monomial(Rational(1), 2) + Polynomial::constant(Rational(1));
    CHECK((p - Polynomial::monomial(Rational(1), 2)).degree() == 0);
}

TEST_CASE("coefficient serialization roundtrip") {
    auto p = Polynomial::monomial(Rational(3, 7), 4) + Polynomial::monomial(Rational(-2), 1);
    auto back = Polynomial::deserialize_coeffs(p.serialize_coeffs());
    CHECK(back == p);
}
