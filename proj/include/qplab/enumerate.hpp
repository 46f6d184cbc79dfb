#ifndef QPLAB_ENUMERATE_HPP
#define QPLAB_ENUMERATE_HPP

#include "qplab/partition.hpp"
#include "qplab/series.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace qplab {

// Exact-value filters on partition statistics.
enum class StatKey {
    Norm,
    NumParts,
    OddIndexedOdd,  // i
    EvenIndexedOdd, // j
    EvenParts,      // m
    BgRank,
    AltSum,
    C1Mod4,
    C3Mod4,
    R0,
    R1,
    OddParts, // i + j
    BouletA,
    BouletB,
    BouletC,
    BouletD,
};

std::optional<StatKey> stat_key_from_name(std::string_view name);
int stat_value(const PartitionStats& s, StatKey key);

// Declarative description of an enumeration universe. The universe is finite
// iff fixed_norm or max_norm is set, or max_part is set together with a bound
// on the length (max_parts, or implicitly distinct / gollnitz_gap).
struct PartitionConstraints {
    std::optional<int> max_part;
    std::optional<int> max_parts;
    std::optional<int> fixed_norm;
    std::optional<int> max_norm;
    bool distinct = false;
    // Parts > 1, adjacent gaps >= 2, and no two parts that are consecutive
    // odd numbers (odd pair at distance exactly 2).
    bool gollnitz_gap = false;
    std::vector<std::pair<StatKey, int>> stat_filters;

    bool finite_universe() const;

    PartitionConstraints& filter(StatKey k, int v) {
        stat_filters.emplace_back(k, v);
        return *this;
    }
};

// Yields every partition satisfying the constraints exactly once, in
// decreasing lexicographic order of the part sequences. Structural bounds
// prune the search; stat filters are applied to complete partitions only.
// Throws Error if the universe is infinite.
void enumerate(const PartitionConstraints& c, const std::function<void(const Partition&)>& yield);

std::vector<Partition> enumerate_all(const PartitionConstraints& c);
std::uint64_t count_partitions(const PartitionConstraints& c);

// Weight attached to each partition when summing a generating function:
//   Norm    q^|pi|
//   OddTZ   q^|pi| t^i z^j
//   BgT     q^|pi| t^BG
//   AltZ    q^|pi| z^gamma
//   Boulet  a^#a b^#b c^#c d^#d
enum class WeightKind { Norm, OddTZ, BgT, AltZ, Boulet };

Monomial weight_of(const PartitionStats& s, WeightKind kind);

// Exact weighted sum over a finite universe. The optional substitution is
// applied to each partition's weight monomial (e.g. Boulet at a->q*t).
LaurentPoly gf_enumerated(const PartitionConstraints& c, WeightKind kind,
                          const SubstMap& subst = {});

// Truncated weighted sum: restricts the universe to norm <= g.cutoff, so it
// also works for graded-infinite universes.
TruncatedSeries gf_enumerated(const PartitionConstraints& c, WeightKind kind, const Grading& g,
                              const SubstMap& subst = {});

} // namespace qplab

#endif
