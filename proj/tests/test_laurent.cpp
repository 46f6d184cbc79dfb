#include "qplab/laurent.hpp"

#include <doctest.h>

#include <random>

using namespace qplab;

namespace {

LaurentPoly qpow(int e) { return LaurentPoly::var(Var::q, e); }

LaurentPoly random_poly(std::mt19937_64& rng, int max_terms, int max_deg, int num_vars) {
    LaurentPoly p;
    const int terms = 1 + static_cast<int>(rng() % max_terms);
    for (int t = 0; t < terms; ++t) {
        ExpVec e{};
        for (int v = 0; v < num_vars; ++v)
            e[v] = static_cast<int>(rng() % (2 * max_deg + 1)) - max_deg;
        p.add_term(e, static_cast<int>(rng() % 19) - 9);
    }
    return p;
}

} // namespace

TEST_CASE("monomial basics") {
    const Monomial m = Monomial::var(Var::q, 3) * Monomial::var(Var::t, -1);
    CHECK(m.exp(Var::q) == 3);
    CHECK(m.exp(Var::t) == -1);
    CHECK(m.pow(2).exp(Var::q) == 6);
    CHECK(m.pow(-1).exp(Var::q) == -3);
    CHECK((-m).coeff == BigInt(-1));
    CHECK_THROWS_AS(Monomial::constant(2).pow(-1), Error);
}

TEST_CASE("basic ring arithmetic") {
    const LaurentPoly one = LaurentPoly::one();
    CHECK((one + qpow(1)) * (one - qpow(1)) == one - qpow(2));
    // Laurent closure: (1+qt)(1+q/t) = 1 + qt + q t^-1 + q^2
    const LaurentPoly qt = LaurentPoly(Monomial::var(Var::q) * Monomial::var(Var::t));
    const LaurentPoly q_over_t = LaurentPoly(Monomial::var(Var::q) * Monomial::var(Var::t, -1));
    CHECK((one + qt) * (one + q_over_t) == one + qt + q_over_t + qpow(2));
}

TEST_CASE("ring laws on random polynomials") {
    std::mt19937_64 rng(42);
    for (int round = 0; round < 100; ++round) {
        const LaurentPoly a = random_poly(rng, 6, 6, 4);
        const LaurentPoly b = random_poly(rng, 6, 6, 4);
        const LaurentPoly c = random_poly(rng, 6, 6, 4);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == LaurentPoly::zero());
    }
}

TEST_CASE("substitution") {
    // a -> qt, b -> q/t, c -> qz, d -> q/z on 1+a+ab+abc
    const LaurentPoly psi2 = LaurentPoly::parse("1 + a + a*b + a*b*c");
    const SubstMap sub{
        {Var::a, Monomial::var(Var::q) * Monomial::var(Var::t)},
        {Var::b, Monomial::var(Var::q) * Monomial::var(Var::t, -1)},
        {Var::c, Monomial::var(Var::q) * Monomial::var(Var::z)},
        {Var::d, Monomial::var(Var::q) * Monomial::var(Var::z, -1)},
    };
    CHECK(psi2.substitute(sub) == LaurentPoly::parse("1 + q*t + q^2 + q^3*z"));
}

TEST_CASE("coefficient extraction") {
    const LaurentPoly p = LaurentPoly::parse("1 + q*t + 2*q^2 + q^3*t^-1");
    CHECK(p.coeff_of(Var::t, 0) == LaurentPoly::parse("1 + 2*q^2"));
    CHECK(p.coeff_of(Var::t, 1) == qpow(1));
    CHECK(p.coeff_of(Var::t, -1) == qpow(3));
    CHECK(p.coeff_of(Var::t, 5).is_zero());
}

TEST_CASE("canonical text form") {
    CHECK(LaurentPoly::zero().to_string() == "0");
    CHECK(LaurentPoly(-3).to_string() == "-3");
    const LaurentPoly p = LaurentPoly::parse("1+q*t+2*q^2+q^3*t^-1");
    CHECK(p.to_string() == "1 + q*t + 2*q^2 + q^3*t^-1");
    CHECK(LaurentPoly::parse(p.to_string()) == p);
    CHECK((LaurentPoly::one() - qpow(2)).to_string() == "1 - q^2");
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(LaurentPoly::parse(""), Error);
    CHECK_THROWS_AS(LaurentPoly::parse("q +"), Error);
    CHECK_THROWS_AS(LaurentPoly::parse("2*"), Error);
    CHECK_THROWS_AS(LaurentPoly::parse("w^2"), Error);
    CHECK_THROWS_AS(LaurentPoly::parse("q^"), Error);
}

TEST_CASE("round trip on random polynomials") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 200; ++round) {
        const LaurentPoly p = random_poly(rng, 8, 5, 9);
        CHECK(LaurentPoly::parse(p.to_string()) == p);
    }
}

TEST_CASE("first difference is the grlex-least differing monomial") {
    const LaurentPoly a = LaurentPoly::parse("1 + q + q^3");
    const LaurentPoly b = LaurentPoly::parse("1 + q + 2*q^3 + q^4");
    const auto d = LaurentPoly::first_difference(a, b);
    REQUIRE(d.has_value());
    CHECK(monomial_key_to_string(*d) == "q^3");
    CHECK(!LaurentPoly::first_difference(a, a).has_value());
}
