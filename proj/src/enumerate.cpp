#include "qplab/enumerate.hpp"

namespace qplab {

std::optional<StatKey> stat_key_from_name(std::string_view name) {
    if (name == "norm")
        return StatKey::Norm;
    if (name == "parts")
        return StatKey::NumParts;
    if (name == "i")
        return StatKey::OddIndexedOdd;
    if (name == "j")
        return StatKey::EvenIndexedOdd;
    if (name == "m")
        return StatKey::EvenParts;
    if (name == "bg")
        return StatKey::BgRank;
    if (name == "alt")
        return StatKey::AltSum;
    if (name == "c1mod4")
        return StatKey::C1Mod4;
    if (name == "c3mod4")
        return StatKey::C3Mod4;
    if (name == "r0")
        return StatKey::R0;
    if (name == "r1")
        return StatKey::R1;
    if (name == "odd")
        return StatKey::OddParts;
    if (name == "na")
        return StatKey::BouletA;
    if (name == "nb")
        return StatKey::BouletB;
    if (name == "nc")
        return StatKey::BouletC;
    if (name == "nd")
        return StatKey::BouletD;
    return std::nullopt;
}

int stat_value(const PartitionStats& s, StatKey key) {
    switch (key) {
    case StatKey::Norm:
        return s.norm;
    case StatKey::NumParts:
        return s.num_parts;
    case StatKey::OddIndexedOdd:
        return s.odd_indexed_odd;
    case StatKey::EvenIndexedOdd:
        return s.even_indexed_odd;
    case StatKey::EvenParts:
        return s.even_parts;
    case StatKey::BgRank:
        return s.bg_rank;
    case StatKey::AltSum:
        return s.alt_sum;
    case StatKey::C1Mod4:
        return s.c1mod4;
    case StatKey::C3Mod4:
        return s.c3mod4;
    case StatKey::R0:
        return s.r0;
    case StatKey::R1:
        return s.r1;
    case StatKey::OddParts:
        return s.odd_parts();
    case StatKey::BouletA:
        return s.boulet.a;
    case StatKey::BouletB:
        return s.boulet.b;
    case StatKey::BouletC:
        return s.boulet.c;
    case StatKey::BouletD:
        return s.boulet.d;
    }
    throw Error("stat_value: unknown key");
}

bool PartitionConstraints::finite_universe() const {
    if (fixed_norm || max_norm)
        return true;
    if (!max_part)
        return false;
    // distinct or gap-restricted parts under a part bound cap the length too
    return max_parts || distinct || gollnitz_gap;
}

namespace {

struct Enumerator {
    const PartitionConstraints& c;
    const std::function<void(const Partition&)>& yield;
    std::vector<int> prefix;
    int prefix_norm = 0;

    bool filters_pass(const Partition& p) const {
        if (c.stat_filters.empty())
            return true;
        const PartitionStats s = stats(p);
        for (const auto& [key, value] : c.stat_filters)
            if (stat_value(s, key) != value)
                return false;
        return true;
    }

    void emit_if_valid() {
        if (c.fixed_norm && prefix_norm != *c.fixed_norm)
            return;
        const Partition p = Partition::unchecked(prefix);
        if (filters_pass(p))
            yield(p);
    }

    // Largest value allowed for the next part given the structural rules.
    int next_part_cap() const {
        int cap = c.max_part.value_or(INT32_MAX);
        if (!prefix.empty()) {
            int prev = prefix.back();
            if (c.gollnitz_gap)
                cap = std::min(cap, prev - 2);
            else if (c.distinct)
                cap = std::min(cap, prev - 1);
            else
                cap = std::min(cap, prev);
        }
        if (c.fixed_norm)
            cap = std::min(cap, *c.fixed_norm - prefix_norm);
        if (c.max_norm)
            cap = std::min(cap, *c.max_norm - prefix_norm);
        return cap;
    }

    bool pair_allowed(int prev, int next) const {
        if (!c.gollnitz_gap)
            return true;
        // gap >= 2 is already in the cap; exclude consecutive odd parts
        return !(prev % 2 == 1 && next % 2 == 1 && prev - next == 2);
    }

    // Children first (larger next parts give lexicographically larger
    // sequences), then the prefix itself: decreasing lex overall.
    void recurse() {
        if (!c.max_parts || static_cast<int>(prefix.size()) < *c.max_parts) {
            const int lo = c.gollnitz_gap ? 2 : 1;
            for (int p = next_part_cap(); p >= lo; --p) {
                if (!prefix.empty() && !pair_allowed(prefix.back(), p))
                    continue;
                prefix.push_back(p);
                prefix_norm += p;
                recurse();
                prefix_norm -= p;
                prefix.pop_back();
            }
        }
        emit_if_valid();
    }
};

} // namespace

void enumerate(const PartitionConstraints& c, const std::function<void(const Partition&)>& yield) {
    if (!c.finite_universe())
        throw Error("enumerate: constraints describe an infinite universe");
    Enumerator e{c, yield, {}, 0};
    e.recurse();
}

std::vector<Partition> enumerate_all(const PartitionConstraints& c) {
    std::vector<Partition> out;
    enumerate(c, [&out](const Partition& p) { out.push_back(p); });
    return out;
}

std::uint64_t count_partitions(const PartitionConstraints& c) {
    std::uint64_t n = 0;
    enumerate(c, [&n](const Partition&) { ++n; });
    return n;
}

Monomial weight_of(const PartitionStats& s, WeightKind kind) {
    switch (kind) {
    case WeightKind::Norm:
        return Monomial::var(Var::q, s.norm);
    case WeightKind::OddTZ:
        return Monomial::var(Var::q, s.norm) * Monomial::var(Var::t, s.odd_indexed_odd) *
               Monomial::var(Var::z, s.even_indexed_odd);
    case WeightKind::BgT:
        return Monomial::var(Var::q, s.norm) * Monomial::var(Var::t, s.bg_rank);
    case WeightKind::AltZ:
        return Monomial::var(Var::q, s.norm) * Monomial::var(Var::z, s.alt_sum);
    case WeightKind::Boulet:
        return Monomial::var(Var::a, s.boulet.a) * Monomial::var(Var::b, s.boulet.b) *
               Monomial::var(Var::c, s.boulet.c) * Monomial::var(Var::d, s.boulet.d);
    }
    throw Error("weight_of: unknown kind");
}

LaurentPoly gf_enumerated(const PartitionConstraints& c, WeightKind kind, const SubstMap& subst) {
    if (!c.finite_universe())
        throw Error("gf_enumerated: infinite universe requires a cutoff");
    LaurentPoly sum;
    enumerate(c, [&](const Partition& p) {
        Monomial w = weight_of(stats(p), kind);
        if (!subst.empty())
            w = LaurentPoly(w).substitute(subst).leading_term();
        sum.add_term(w.exps, w.coeff);
    });
    return sum;
}

TruncatedSeries gf_enumerated(const PartitionConstraints& c, WeightKind kind, const Grading& g,
                              const SubstMap& subst) {
    PartitionConstraints cc = c;
    cc.max_norm = cc.max_norm ? std::min(*cc.max_norm, g.cutoff) : g.cutoff;
    return TruncatedSeries(gf_enumerated(cc, kind, subst), g);
}

} // namespace qplab
