#include "qplab/bijections.hpp"

#include <algorithm>
#include <map>

namespace qplab {
namespace bijections {

namespace {

// value -> multiplicity, descending by value
std::map<int, int, std::greater<int>> multiplicities(const Partition& p) {
    std::map<int, int, std::greater<int>> m;
    for (int v : p.parts())
        ++m[v];
    return m;
}

Partition from_multiplicities(const std::map<int, int, std::greater<int>>& m) {
    std::vector<int> parts;
    for (const auto& [v, mult] : m)
        parts.insert(parts.end(), mult, v);
    return Partition::unchecked(std::move(parts));
}

} // namespace

BijectionImage rho(const Partition& p) {
    std::map<int, int, std::greater<int>> reduced, extracted;
    for (const auto& [v, mult] : multiplicities(p)) {
        if (mult % 2 == 1)
            reduced[v] = 1;
        if (mult / 2 > 0)
            extracted[v] = 2 * (mult / 2);
    }
    return BijectionImage{from_multiplicities(reduced), from_multiplicities(extracted),
                          ExtractionKind::RowPairs};
}

BijectionImage rho_star(const Partition& p) {
    // Work on column heights, i.e. the parts of the conjugate.
    std::map<int, int, std::greater<int>> reduced, extracted;
    for (const auto& [h, mult] : multiplicities(p.conjugate())) {
        if (h % 2 == 0) {
            reduced[h] = mult;
            continue;
        }
        if (mult % 2 == 1)
            reduced[h] = 1;
        if (mult / 2 > 0)
            extracted[h] = 2 * (mult / 2);
    }
    return BijectionImage{from_multiplicities(reduced).conjugate(),
                          from_multiplicities(extracted).conjugate(),
                          ExtractionKind::OddColumnPairs};
}

bool valid_image(const BijectionImage& img) {
    if (img.kind == ExtractionKind::RowPairs) {
        const auto& parts = img.reduced.parts();
        for (std::size_t k = 1; k < parts.size(); ++k)
            if (parts[k - 1] == parts[k])
                return false;
        for (const auto& [v, mult] : multiplicities(img.extracted)) {
            (void)v;
            if (mult % 2 != 0)
                return false;
        }
        return true;
    }
    // rho*: extracted columns all of odd height, each height an even number
    // of times; reduced in the difference-conditioned class.
    for (const auto& [h, mult] : multiplicities(img.extracted.conjugate()))
        if (h % 2 == 0 || mult % 2 != 0)
            return false;
    const auto& parts = img.reduced.parts();
    for (std::size_t k = 0; k + 1 < parts.size(); k += 2)
        if (parts[k] - parts[k + 1] > 1)
            return false;
    return true;
}

Partition invert(const BijectionImage& img) {
    if (!valid_image(img))
        throw Error("invert: image violates bijection invariants");
    if (img.kind == ExtractionKind::RowPairs) {
        std::vector<int> parts = img.reduced.parts();
        const auto& extra = img.extracted.parts();
        parts.insert(parts.end(), extra.begin(), extra.end());
        std::sort(parts.begin(), parts.end(), std::greater<int>());
        return Partition::unchecked(std::move(parts));
    }
    // Column re-insertion: merge the two column multisets, transpose back.
    std::vector<int> cols = img.reduced.conjugate().parts();
    const auto extra = img.extracted.conjugate().parts();
    cols.insert(cols.end(), extra.begin(), extra.end());
    std::sort(cols.begin(), cols.end(), std::greater<int>());
    return Partition::unchecked(std::move(cols)).conjugate();
}

} // namespace bijections
} // namespace qplab
