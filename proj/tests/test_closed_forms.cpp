#include "qplab/closed_forms.hpp"

#include "qplab/enumerate.hpp"

#include <doctest.h>

using namespace qplab;
namespace cf = qplab::closed_forms;

namespace {

const Monomial kQ = Monomial::var(Var::q);
const Monomial kQ2 = Monomial::var(Var::q, 2);

PartitionConstraints distinct_up_to(int bound) {
    PartitionConstraints c;
    c.distinct = true;
    c.max_part = bound;
    return c;
}

LaurentPoly distinct_gf(int bound, int i, int j) {
    PartitionConstraints c = distinct_up_to(bound);
    c.filter(StatKey::OddIndexedOdd, i).filter(StatKey::EvenIndexedOdd, j);
    return gf_enumerated(c, WeightKind::Norm);
}

} // namespace

TEST_CASE("bounded distinct-part closed forms") {
    CHECK(cf::p_distinct_closed(2, 0, 0) == LaurentPoly::parse("1 + q^2"));
    CHECK(cf::p_distinct_closed(3, 1, 0) == LaurentPoly::parse("q + q^3 + q^5"));
    CHECK(cf::p_distinct_closed(2, 0, 1) == LaurentPoly::parse("q^3"));
    CHECK(cf::p_distinct_closed(2, 3, 0).is_zero());
    for (int bound = 0; bound <= 8; ++bound)
        for (int i = 0; i <= 3; ++i)
            for (int j = 0; j <= 3; ++j)
                CHECK(cf::p_distinct_closed(bound, i, j) == distinct_gf(bound, i, j));
}

TEST_CASE("largest-part recurrence") {
    for (int bound = 1; bound <= 9; ++bound)
        for (int i = 0; i <= 3; ++i)
            for (int j = 0; j <= 3; ++j) {
                const int nu = bound % 2;
                LaurentPoly rhs = cf::p_distinct_closed(bound - 1, i, j);
                if (i >= nu)
                    rhs += LaurentPoly(Monomial::var(Var::q, bound)) *
                           cf::p_distinct_closed(bound - 1, j, i - nu);
                CHECK(cf::p_distinct_closed(bound, i, j) == rhs);
            }
}

TEST_CASE("unbounded distinct-part series") {
    CHECK(cf::p_distinct_limit(1, 1, 14).body().coeff(Monomial::var(Var::q, 14).exps) ==
          BigInt(10));
    CHECK(cf::p_distinct_limit(0, 0, 8).body() ==
          LaurentPoly::parse("1 + q^2 + q^4 + 2*q^6 + 2*q^8"));
    // oracle: enumeration with the same filters
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 2; ++j) {
            PartitionConstraints c;
            c.distinct = true;
            c.filter(StatKey::OddIndexedOdd, i).filter(StatKey::EvenIndexedOdd, j);
            CHECK(cf::p_distinct_limit(i, j, 16) ==
                  gf_enumerated(c, WeightKind::Norm, Grading::norm(16)));
        }
}

TEST_CASE("fixed count of parts in one mod-4 class") {
    CHECK(cf::gf_1or3_mod4(1, 1, 9).body() == LaurentPoly::parse("q + q^5 + q^9"));
    CHECK(cf::gf_1or3_mod4(2, 0, 10).body() == LaurentPoly::parse("q^10"));
}

TEST_CASE("BG-rank closed forms") {
    CHECK(cf::bg_distinct(2, 0) == LaurentPoly::parse("1 + q^2"));
    CHECK(cf::bg_distinct(2, 1) == LaurentPoly::parse("q"));
    CHECK(cf::bg_unrestricted(1, 0, 6).body() == LaurentPoly::parse("1 + q^2 + q^4 + q^6"));
    for (int bound = 0; bound <= 6; ++bound)
        for (int k = -3; k <= 4; ++k) {
            PartitionConstraints c = distinct_up_to(bound);
            c.filter(StatKey::BgRank, k);
            CHECK(cf::bg_distinct(bound, k) == gf_enumerated(c, WeightKind::Norm));
        }
}

TEST_CASE("BG-rank sums") {
    for (int bound = 0; bound <= 10; ++bound) {
        const auto [N, nu] = cf::split_bound(bound);
        LaurentPoly sum;
        for (int k = -N; k <= N + nu; ++k)
            sum += cf::bg_distinct(bound, k);
        CHECK(sum == pochhammer(-kQ, kQ, bound));
    }
    const Grading g = Grading::norm(20);
    for (int bound = 0; bound <= 8; ++bound) {
        const auto [N, nu] = cf::split_bound(bound);
        TruncatedSeries sum(LaurentPoly::zero(), g);
        for (int k = -N; k <= N + nu; ++k)
            sum += cf::bg_unrestricted(bound, k, 20);
        CHECK(sum == pochhammer_inv(kQ, kQ, bound, g));
    }
}

TEST_CASE("single-fold form of the t,z double sum") {
    CHECK(cf::double_to_single(1) == LaurentPoly::parse("1 + q*t"));
    CHECK(cf::double_to_single(2) == LaurentPoly::parse("1 + q*t + q^2 + q^3*z"));
    const SubstMap t1z1{{Var::t, Monomial::constant(1)}, {Var::z, Monomial::constant(1)}};
    CHECK(cf::double_to_single(4).substitute(t1z1) == pochhammer(-kQ, kQ, 4));
    for (int bound = 0; bound <= 7; ++bound)
        CHECK(cf::double_to_single(bound) ==
              gf_enumerated(distinct_up_to(bound), WeightKind::OddTZ));
}

TEST_CASE("single-fold form specializes the bounded Psi") {
    const SubstMap sub{
        {Var::a, Monomial::var(Var::q) * Monomial::var(Var::t)},
        {Var::b, Monomial::var(Var::q) * Monomial::var(Var::t, -1)},
        {Var::c, Monomial::var(Var::q) * Monomial::var(Var::z)},
        {Var::d, Monomial::var(Var::q) * Monomial::var(Var::z, -1)},
    };
    for (int bound = 0; bound <= 7; ++bound)
        CHECK(cf::psi_bounded(bound).substitute(sub) == cf::double_to_single(bound));
}

TEST_CASE("q-binomial summation with free parity") {
    for (int N = 0; N <= 5; ++N)
        for (int nu = 0; nu <= 1; ++nu)
            for (int i = 0; i <= 3; ++i)
                for (int j = 0; j <= 3; ++j)
                    CHECK(cf::new52_lhs(N, nu, i, j) == cf::new52_rhs(N, nu, i, j));
}

TEST_CASE("bounded little Goellnitz summations") {
    for (int N = 0; N <= 5; ++N)
        for (int nu = 0; nu <= 1; ++nu)
            for (int line = 1; line <= 2; ++line) {
                PartitionConstraints c = distinct_up_to(2 * N + nu);
                c.filter(line == 1 ? StatKey::OddIndexedOdd : StatKey::EvenIndexedOdd, 0);
                const LaurentPoly oracle = gf_enumerated(c, WeightKind::Norm);
                CHECK(cf::cor43_lhs(N, nu, line) == oracle);
                CHECK(cf::cor43_rhs(N, nu, line) == oracle);
            }
    // the first equation's right side carries no parity dependence
    for (int N = 0; N <= 5; ++N) {
        CHECK(cf::cor43_lhs(N, 0, 1) == cf::cor43_lhs(N, 1, 1));
        CHECK(cf::cor43_rhs(N, 0, 1) == cf::cor43_rhs(N, 1, 1));
    }
}

TEST_CASE("connecting sum identity") {
    CHECK(cf::connect_side(1, true) == LaurentPoly::parse("1 + q^2 + q^3"));
    for (int N = 0; N <= 6; ++N)
        CHECK(cf::connect_side(N, true) == cf::connect_side(N, false));
}

TEST_CASE("binomial transform with free y and z") {
    CHECK(cf::cigler_side(1, true) == LaurentPoly::parse("1 + z - y*z"));
    CHECK(cf::cigler_side(1, false) == LaurentPoly::parse("1 - y*z + z"));
    for (int N = 0; N <= 6; ++N)
        CHECK(cf::cigler_side(N, true) == cf::cigler_side(N, false));
}

TEST_CASE("bounded Boulet generating functions") {
    CHECK(cf::psi_bounded(2) == LaurentPoly::parse("1 + a + a*b + a*b*c"));
    CHECK(cf::psi_finite_boulet(2) == LaurentPoly::parse("1 + a + a*b + a*b*c"));
    for (int bound = 0; bound <= 6; ++bound) {
        const LaurentPoly oracle = gf_enumerated(distinct_up_to(bound), WeightKind::Boulet);
        CHECK(cf::psi_bounded(bound) == oracle);
        CHECK(cf::psi_finite_boulet(bound) == oracle);
    }
    const SubstMap all_q{{Var::a, kQ}, {Var::b, kQ}, {Var::c, kQ}, {Var::d, kQ}};
    for (int bound = 0; bound <= 8; ++bound)
        CHECK(cf::psi_bounded(bound).substitute(all_q) == pochhammer(-kQ, kQ, bound));
}

TEST_CASE("bounded Phi forms against enumeration") {
    const int cutoff = 12;
    const Grading g = Grading::norm(cutoff);
    for (int bound = 0; bound <= 5; ++bound) {
        PartitionConstraints c;
        c.max_part = bound;
        const TruncatedSeries oracle = gf_enumerated(c, WeightKind::Boulet, g);
        CHECK(cf::phi_bounded(bound, cutoff) == oracle);
        CHECK(cf::phi_finite_boulet(bound, cutoff) == oracle);
    }
}

TEST_CASE("unbounded Boulet products") {
    const int cutoff = 10;
    const Grading g = Grading::norm(cutoff);
    PartitionConstraints dist, all;
    dist.distinct = true;
    CHECK(cf::psi_limit(cutoff) == gf_enumerated(dist, WeightKind::Boulet, g));
    CHECK(cf::phi_limit(cutoff) == gf_enumerated(all, WeightKind::Boulet, g));
    // all-variables-q specialization gives the plain partition series
    const SubstMap all_q{{Var::a, kQ}, {Var::b, kQ}, {Var::c, kQ}, {Var::d, kQ}};
    CHECK(cf::phi_limit(6).substitute(all_q).body() ==
          LaurentPoly::parse("1 + q + 2*q^2 + 3*q^3 + 5*q^4 + 7*q^5 + 11*q^6"));
}

TEST_CASE("Phi from Psi by the even-multiplicity factor") {
    const int cutoff = 14;
    const Grading g = Grading::norm(cutoff);
    const Monomial bigQ = Monomial::var(Var::a) * Monomial::var(Var::b) * Monomial::var(Var::c) *
                          Monomial::var(Var::d);
    const Monomial ac = Monomial::var(Var::a) * Monomial::var(Var::c);
    for (int bound = 0; bound <= 5; ++bound) {
        const auto [N, nu] = cf::split_bound(bound);
        TruncatedSeries rhs(cf::psi_bounded(bound), g);
        rhs *= pochhammer_inv(ac, bigQ, N + nu, g);
        rhs *= pochhammer_inv(bigQ, bigQ, N, g);
        CHECK(cf::phi_bounded(bound, cutoff) == rhs);
    }
    TruncatedSeries rhs = cf::psi_limit(cutoff);
    rhs *= pochhammer_inv(ac, bigQ, std::nullopt, g);
    rhs *= pochhammer_inv(bigQ, bigQ, std::nullopt, g);
    CHECK(cf::phi_limit(cutoff) == rhs);
}

TEST_CASE("x-series over all bounds") {
    for (int nu = 0; nu <= 1; ++nu) {
        const TruncatedSeries sum = cf::psi_x_sum(nu, 3, 10);
        const TruncatedSeries prod = cf::psi_x_product(nu, 3, 10);
        CHECK(sum == prod);
        CHECK(sum.coeff_of(Var::x, 0).body() ==
              (nu == 0 ? LaurentPoly::one() : LaurentPoly::parse("1 + a")));
    }
    // x^1 coefficient matches its defining term
    const Grading g0 = Grading::norm(8);
    const Monomial bigQ = Monomial::var(Var::a) * Monomial::var(Var::b) * Monomial::var(Var::c) *
                          Monomial::var(Var::d);
    TruncatedSeries expect(cf::psi_bounded(2), g0);
    expect *= pochhammer_inv(bigQ, bigQ, 1, g0);
    CHECK(cf::psi_x_sum(0, 4, 8).coeff_of(Var::x, 1).body() == expect.body());
}

TEST_CASE("Rogers-Szego specializations") {
    const Monomial zq = Monomial::var(Var::z) * kQ;
    CHECK(cf::hermite_sum_rhs(1) == LaurentPoly::parse("1 + q*z"));
    const SubstMap z1{{Var::z, Monomial::constant(1)}};
    CHECK(cf::hermite_sum_rhs(2).substitute(z1) == LaurentPoly::parse("1 + q + q^2 + q^3"));
    CHECK(rogers_szego(2, zq, kQ2) == LaurentPoly::parse("1 + q*z + q^3*z + q^2*z^2"));
    for (int bound = 0; bound <= 9; ++bound) {
        CHECK(cf::hermite_sum_rhs(bound) == rogers_szego(bound, zq, kQ2));
        CHECK(cf::rs_to_psi_rhs(bound) == rogers_szego(bound, zq, kQ2));
        // oracle: distinct partitions weighted by alternating sum
        CHECK(cf::rs_to_psi_rhs(bound) ==
              gf_enumerated(distinct_up_to(bound), WeightKind::AltZ));
    }
}

TEST_CASE("distinct-part product specialization of Psi") {
    // Psi at (aq, q/a, aq, q/a) counts odd parts in the a-exponent
    const SubstMap sub{
        {Var::a, Monomial::var(Var::a) * kQ},
        {Var::b, kQ * Monomial::var(Var::a, -1)},
        {Var::c, Monomial::var(Var::a) * kQ},
        {Var::d, kQ * Monomial::var(Var::a, -1)},
    };
    const Monomial aq = Monomial::var(Var::a) * kQ;
    for (int bound = 0; bound <= 8; ++bound) {
        const auto [N, nu] = cf::split_bound(bound);
        CHECK(cf::psi_bounded(bound).substitute(sub) ==
              pochhammer(-aq, kQ2, N + nu) * pochhammer(-kQ2, kQ2, N));
    }
}

TEST_CASE("doubly bounded Boulet forms") {
    CHECK(cf::phi_double_bounded(2, 2) ==
          LaurentPoly::parse("1 + a + a*b + a*c + a*b*c + a*b*c*d"));
    for (int bound = 0; bound <= 4; ++bound)
        for (int parts = 0; parts <= 4; parts += 2) {
            PartitionConstraints c;
            c.max_part = bound;
            c.max_parts = parts;
            CHECK(cf::phi_double_bounded(bound, parts) == gf_enumerated(c, WeightKind::Boulet));
        }
    CHECK_THROWS_AS(cf::phi_double_bounded(2, 3), Error);
}

TEST_CASE("Yee form agrees and rejects the missing parity pair") {
    for (int bound = 0; bound <= 4; ++bound)
        for (int parts = 0; parts <= 4; ++parts) {
            if (bound % 2 == 1 && parts % 2 == 0) {
                CHECK_THROWS_AS(cf::phi_double_bounded_yee(bound, parts), Error);
                continue;
            }
            PartitionConstraints c;
            c.max_part = bound;
            c.max_parts = parts;
            CHECK(cf::phi_double_bounded_yee(bound, parts) ==
                  gf_enumerated(c, WeightKind::Boulet));
        }
}

TEST_CASE("odd parts bound from the even ones") {
    CHECK(cf::rest_of_phi(1, 1) == LaurentPoly::parse("1 + a"));
    for (int bound = 0; bound <= 4; ++bound)
        for (int parts = 1; parts <= 5; parts += 2) {
            PartitionConstraints c;
            c.max_part = bound;
            c.max_parts = parts;
            CHECK(cf::rest_of_phi(bound, parts) == gf_enumerated(c, WeightKind::Boulet));
        }
    CHECK_THROWS_AS(cf::rest_of_phi(2, 2), Error);
}

TEST_CASE("q-binomial specialization of the doubly bounded form") {
    const SubstMap all_q{{Var::a, kQ}, {Var::b, kQ}, {Var::c, kQ}, {Var::d, kQ}};
    for (int N = 0; N <= 5; ++N)
        for (int M = 0; M <= 2; ++M)
            CHECK(cf::phi_double_bounded(N, 2 * M).substitute(all_q) ==
                  gaussian_binomial(N + 2 * M, 2 * M, kQ));
}

TEST_CASE("coefficient slices of the specialized forms") {
    // z^k slice of H_N(zq,q^2) is q^k [N;k]_{q^2}
    const Monomial zq = Monomial::var(Var::z) * kQ;
    for (int N = 0; N <= 8; ++N)
        for (int k = 0; k <= N; ++k)
            CHECK(rogers_szego(N, zq, kQ2).coeff_of(Var::z, k) ==
                  LaurentPoly(Monomial::var(Var::q, k)) * gaussian_binomial(N, k, kQ2));
    // t^0 slice of the doubly bounded BG-rank form at bounds (2,2)
    CHECK(cf::outlook_bg(2, 2).coeff_of(Var::t, 0) == LaurentPoly::parse("1 + 2*q^2 + q^4"));
}

TEST_CASE("doubly bounded BG-rank and alternating-sum forms") {
    CHECK(cf::outlook_bg(2, 2) == LaurentPoly::parse("1 + q*t + 2*q^2 + q^3*t^-1 + q^4"));
    CHECK(cf::outlook_alt(1, 2) == LaurentPoly::parse("1 + z*q + q^2"));
    for (int bound = 0; bound <= 5; ++bound)
        for (int parts = 0; parts <= 5; ++parts) {
            PartitionConstraints c;
            c.max_part = bound;
            c.max_parts = parts;
            CHECK(cf::outlook_bg(bound, parts) == gf_enumerated(c, WeightKind::BgT));
            if (parts >= 1)
                CHECK(cf::outlook_alt(bound, parts) == gf_enumerated(c, WeightKind::AltZ));
        }
}

TEST_CASE("refined distinct-part closed forms") {
    CHECK(cf::refined_distinct(7, 0, 1, 2) ==
          LaurentPoly::parse("q^9 + q^11 + q^13 + q^15"));
    CHECK(cf::refined_distinct(7, 1, 0, 1) ==
          LaurentPoly::parse("q^5 + q^7 + 2*q^9 + q^11 + q^13"));
    CHECK(cf::refined_distinct(6, 2, 0, 1) ==
          LaurentPoly::parse("q^6 + q^8 + q^10 + q^12"));
    CHECK_THROWS_AS(cf::refined_distinct(5, 1, 1, 0), Error);
    for (int bound = 0; bound <= 7; ++bound)
        for (int m = 0; m <= 2; ++m)
            for (int v = 0; v <= 2; ++v) {
                PartitionConstraints c0 = distinct_up_to(bound);
                c0.filter(StatKey::OddIndexedOdd, 0)
                    .filter(StatKey::EvenIndexedOdd, v)
                    .filter(StatKey::EvenParts, m);
                CHECK(cf::refined_distinct(bound, 0, v, m) ==
                      gf_enumerated(c0, WeightKind::Norm));
                PartitionConstraints c1 = distinct_up_to(bound);
                c1.filter(StatKey::OddIndexedOdd, v)
                    .filter(StatKey::EvenIndexedOdd, 0)
                    .filter(StatKey::EvenParts, m);
                CHECK(cf::refined_distinct(bound, v, 0, m) ==
                      gf_enumerated(c1, WeightKind::Norm));
            }
}

TEST_CASE("mod-8 product identities") {
    for (int line = 1; line <= 2; ++line)
        CHECK(cf::sills_product_lhs(line, 30) == cf::little_gollnitz_product(line, 30));
}

TEST_CASE("q-binomial summation anchors the bounded closed forms") {
    // base-squared version of the summation, times the standard q-power,
    // reproduces the enumeration-backed bounded generating function
    const SubstMap q_to_q2{{Var::q, kQ2}};
    for (int N = 0; N <= 4; ++N)
        for (int nu = 0; nu <= 1; ++nu)
            for (int i = 0; i <= 3; ++i)
                for (int j = 0; j <= 3; ++j) {
                    const LaurentPoly lhs =
                        LaurentPoly(Monomial::var(Var::q, 2 * i * i - i + 2 * j * j + j)) *
                        cf::new52_lhs(N, nu, i, j).substitute(q_to_q2);
                    CHECK(lhs == cf::p_distinct_closed(2 * N + nu, i, j));
                }
}

TEST_CASE("the binomial transform specializes to the connecting sums") {
    // y -> -q, z -> q^2, base -> q^4 sends both sides onto the two
    // enumeration-backed single-fold sums
    const SubstMap sub{
        {Var::y, -kQ},
        {Var::z, kQ2},
        {Var::q, Monomial::var(Var::q, 4)},
    };
    for (int N = 0; N <= 6; ++N) {
        CHECK(cf::cigler_side(N, true).substitute(sub) == cf::connect_side(N, true));
        CHECK(cf::cigler_side(N, false).substitute(sub) == cf::connect_side(N, false));
    }
}

TEST_CASE("hypergeometric forms of the bounded Psi at rational points") {
    // the 2phi1 form behind the series transformation
    for (int N = 0; N <= 3; ++N)
        for (int nu = 0; nu <= 1; ++nu)
            for (int pt = 0; pt < 3; ++pt) {
                const Rational a(2 + pt, 3), b(3, 7), c(5, 4 + pt), d(7, 9);
                const Rational Q = a * b * c * d;
                const Rational lhs = eval_rational(
                    cf::psi_bounded(2 * N + nu),
                    {{Var::a, a}, {Var::b, b}, {Var::c, c}, {Var::d, d}});
                const Rational Qnu = nu ? Q : Rational(1);
                Rational rhs = rat_pow(a * b, N) * pochhammer_rational(-c, Q, N) *
                               (Rational(1) + (nu ? a : Rational(0)));
                rhs *= phi_terminating({rat_pow(Q, -N), -a * Qnu}, {-rat_pow(Q, 1 - N) / c}, Q,
                                       -d);
                CHECK(lhs == rhs);
            }
    // the terminating 2phi1 evaluation, anchored through the distinct-part
    // product specialization
    for (int N = 0; N <= 4; ++N)
        for (int nu = 0; nu <= 1; ++nu) {
            if (N - 1 + nu < 0)
                continue;
            const Rational a(3, 2), q(2, 5);
            const Rational q4 = rat_pow(q, 4);
            const Rational lhs = eval_rational(
                cf::psi_bounded(2 * N + nu),
                {{Var::a, a * q}, {Var::b, q / a}, {Var::c, a * q}, {Var::d, q / a}});
            const int d0 = nu == 0 ? 1 : 0;
            Rational rhs = pochhammer_rational(-a * q, q4, N + nu);
            rhs *= phi_terminating({rat_pow(q, -4 * N), -a * q},
                                   {-rat_pow(q, -4 * (N - d0)) / (a * q)}, q4,
                                   -rat_pow(q, 1 + 4 * d0) / a);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("test mutation hook corrupts and restores") {
    const LaurentPoly clean = cf::p_distinct_closed(3, 1, 0);
    cf::set_test_mutation(true);
    const LaurentPoly dirty = cf::p_distinct_closed(3, 1, 0);
    cf::set_test_mutation(false);
    CHECK(clean != dirty);
    CHECK(cf::p_distinct_closed(3, 1, 0) == clean);
}
