#include "qplab/enumerate.hpp"

#include <doctest.h>

#include <vector>

using namespace qplab;

namespace {

// Euler's pentagonal-number recurrence, the independent counting oracle.
std::vector<long> partition_numbers(int up_to) {
    std::vector<long> p(up_to + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= up_to; ++n) {
        long s = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            const int g2 = k * (3 * k + 1) / 2;
            if (g1 > n && g2 > n)
                break;
            const int sign = k % 2 == 1 ? 1 : -1;
            if (g1 <= n)
                s += sign * p[n - g1];
            if (g2 <= n)
                s += sign * p[n - g2];
        }
        p[n] = s;
    }
    return p;
}

} // namespace

TEST_CASE("enumeration counts match the pentagonal recurrence") {
    const auto p = partition_numbers(20);
    long cumulative = 0;
    for (int n = 0; n <= 20; ++n) {
        PartitionConstraints c;
        c.fixed_norm = n;
        CHECK(count_partitions(c) == static_cast<std::uint64_t>(p[n]));
        cumulative += p[n];
        PartitionConstraints up;
        up.max_norm = n;
        CHECK(count_partitions(up) == static_cast<std::uint64_t>(cumulative));
    }
}

TEST_CASE("decreasing lexicographic order") {
    PartitionConstraints c;
    c.fixed_norm = 5;
    const auto all = enumerate_all(c);
    REQUIRE(all.size() == 7);
    CHECK(all.front() == Partition({5}));
    CHECK(all.back() == Partition({1, 1, 1, 1, 1}));
    for (std::size_t k = 1; k < all.size(); ++k)
        CHECK(all[k] < all[k - 1]); // strictly decreasing lex
    // mixed norms under max_norm, same order requirement
    PartitionConstraints up;
    up.max_norm = 3;
    const auto mixed = enumerate_all(up);
    for (std::size_t k = 1; k < mixed.size(); ++k)
        CHECK(mixed[k] < mixed[k - 1]);
    CHECK(mixed.back() == Partition());
}

TEST_CASE("spec'd filtered counts") {
    PartitionConstraints t2;
    t2.distinct = true;
    t2.fixed_norm = 14;
    t2.filter(StatKey::OddIndexedOdd, 1).filter(StatKey::EvenIndexedOdd, 1);
    CHECK(count_partitions(t2) == 10);

    PartitionConstraints t2r;
    t2r.distinct = true;
    t2r.fixed_norm = 14;
    t2r.filter(StatKey::C1Mod4, 1).filter(StatKey::C3Mod4, 1);
    CHECK(count_partitions(t2r) == 10);

    PartitionConstraints b3;
    b3.max_part = 3;
    b3.fixed_norm = 10;
    b3.filter(StatKey::AltSum, 2);
    CHECK(count_partitions(b3) == 9);

    PartitionConstraints a53;
    a53.max_part = 5;
    a53.max_parts = 3;
    a53.fixed_norm = 10;
    a53.filter(StatKey::OddParts, 2);
    CHECK(count_partitions(a53) == 4);
}

TEST_CASE("infinite universes are rejected") {
    PartitionConstraints c;
    c.max_part = 3;
    CHECK(!c.finite_universe());
    CHECK_THROWS_AS(count_partitions(c), Error);
    c.distinct = true;
    CHECK(c.finite_universe()); // at most 3 parts possible
    PartitionConstraints unbounded;
    unbounded.max_parts = 2;
    CHECK_THROWS_AS(enumerate_all(unbounded), Error);
}

TEST_CASE("gollnitz gap constraint") {
    PartitionConstraints c;
    c.gollnitz_gap = true;
    c.fixed_norm = 7;
    const auto all = enumerate_all(c);
    // (7) and (5,2): no 1s, gaps >= 2, (5,3) and (4,3) excluded
    REQUIRE(all.size() == 2);
    CHECK(all[0] == Partition({7}));
    CHECK(all[1] == Partition({5, 2}));
}

TEST_CASE("filters are applied after generation") {
    // same set whether or not the structural bound makes pruning trivial
    PartitionConstraints a;
    a.fixed_norm = 9;
    a.filter(StatKey::BgRank, -1);
    PartitionConstraints b = a;
    b.max_part = 9;
    CHECK(enumerate_all(a) == enumerate_all(b));
}

TEST_CASE("weighted generating functions") {
    PartitionConstraints c;
    c.distinct = true;
    c.max_part = 2;
    CHECK(gf_enumerated(c, WeightKind::OddTZ) == LaurentPoly::parse("1 + q*t + q^2 + q^3*z"));

    PartitionConstraints one;
    one.distinct = true;
    one.max_part = 1;
    CHECK(gf_enumerated(one, WeightKind::Boulet) == LaurentPoly::parse("1 + a"));

    // boulet weight at (zq,zq,q/z,q/z) over the 1x2 box
    PartitionConstraints box;
    box.max_part = 1;
    box.max_parts = 2;
    const SubstMap sub{
        {Var::a, Monomial::var(Var::z) * Monomial::var(Var::q)},
        {Var::b, Monomial::var(Var::z) * Monomial::var(Var::q)},
        {Var::c, Monomial::var(Var::q) * Monomial::var(Var::z, -1)},
        {Var::d, Monomial::var(Var::q) * Monomial::var(Var::z, -1)},
    };
    CHECK(gf_enumerated(box, WeightKind::Boulet, sub) == LaurentPoly::parse("1 + z*q + q^2"));
}

TEST_CASE("boulet weight at a=b=c=d=q is the norm weight") {
    PartitionConstraints c;
    c.max_norm = 25;
    const SubstMap all_q{{Var::a, Monomial::var(Var::q)},
                         {Var::b, Monomial::var(Var::q)},
                         {Var::c, Monomial::var(Var::q)},
                         {Var::d, Monomial::var(Var::q)}};
    enumerate(c, [&](const Partition& p) {
        const Monomial w = weight_of(stats(p), WeightKind::Boulet);
        CHECK(LaurentPoly(w).substitute(all_q) == LaurentPoly::var(Var::q, p.norm()));
    });
}

TEST_CASE("statistic identities hold for every partition up to norm 25") {
    PartitionConstraints c;
    c.max_norm = 25;
    enumerate(c, [&](const Partition& p) {
        const PartitionStats s = stats(p);
        CHECK(s.bg_rank == s.odd_indexed_odd - s.even_indexed_odd);
        CHECK(s.bg_rank == s.r0 - s.r1);
        CHECK(s.boulet.a + s.boulet.b + s.boulet.c + s.boulet.d == s.norm);
        CHECK(s.alt_sum >= 0);
        CHECK((s.alt_sum - s.norm) % 2 == 0);
        // conjugation dualities
        const Partition conj = p.conjugate();
        CHECK(conj.conjugate() == p);
        CHECK(stats(conj).bg_rank == s.bg_rank);
        CHECK(stats(conj).alt_sum == s.odd_parts());
    });
}

TEST_CASE("truncated gf over an infinite universe") {
    PartitionConstraints c; // all partitions
    const Grading g = Grading::norm(6);
    CHECK(gf_enumerated(c, WeightKind::Norm, g).body() ==
          LaurentPoly::parse("1 + q + 2*q^2 + 3*q^3 + 5*q^4 + 7*q^5 + 11*q^6"));
}
