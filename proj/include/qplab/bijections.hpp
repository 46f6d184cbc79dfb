#ifndef QPLAB_BIJECTIONS_HPP
#define QPLAB_BIJECTIONS_HPP

#include "qplab/partition.hpp"

namespace qplab {
namespace bijections {

enum class ExtractionKind {
    RowPairs,       // rho: pairs of equal parts
    OddColumnPairs, // rho*: pairs of equal odd-height columns
};

// Image of rho or rho*: the reduced core plus the extracted pairs, with
// norm(input) = norm(reduced) + norm(extracted).
struct BijectionImage {
    Partition reduced;
    Partition extracted;
    ExtractionKind kind = ExtractionKind::RowPairs;
};

// Removes pairs of equal parts until all parts are distinct. The extracted
// parts keep even multiplicities; BG-rank is preserved by construction.
BijectionImage rho(const Partition& p);

// Removes pairs of equal odd-height columns until every odd column height
// occurs at most once. The extracted partition is the one whose columns are
// the removed columns; the reduced partition satisfies the difference
// condition lambda_{2i-1} - lambda_{2i} <= 1.
BijectionImage rho_star(const Partition& p);

// Reassembles the original partition. Throws Error when the image violates
// its kind's invariants.
Partition invert(const BijectionImage& img);

bool valid_image(const BijectionImage& img);

} // namespace bijections
} // namespace qplab

#endif
