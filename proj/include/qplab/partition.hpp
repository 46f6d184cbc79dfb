#ifndef QPLAB_PARTITION_HPP
#define QPLAB_PARTITION_HPP

#include "qplab/bigint.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qplab {

// Weakly decreasing sequence of positive integers. The empty partition is the
// unique partition of 0; no trailing zeros are ever stored.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition unchecked(std::vector<int> parts) {
        Partition p;
        p.parts_ = std::move(parts);
        return p;
    }

    // Strict text form "(7,5,2)"; the empty partition is "()".
    static std::optional<Partition> parse(std::string_view text);
    std::string to_string() const;

    const std::vector<int>& parts() const { return parts_; }
    int num_parts() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int norm() const;
    int part(int idx) const { return parts_[idx]; } // 0-based

    Partition conjugate() const;

    friend bool operator==(const Partition& l, const Partition& r) { return l.parts_ == r.parts_; }
    friend bool operator<(const Partition& l, const Partition& r) { return l.parts_ < r.parts_; }

private:
    std::vector<int> parts_;
};

struct BouletExponents {
    int a = 0, b = 0, c = 0, d = 0;
    friend bool operator==(const BouletExponents&, const BouletExponents&) = default;
};

// Every statistic of a partition used anywhere in the library.
//   odd_indexed_odd  (i)  odd values among parts in positions 1,3,5,...
//   even_indexed_odd (j)  odd values among parts in positions 2,4,6,...
//   bg_rank               i - j, equivalently r0 - r1
//   alt_sum               lambda1 - lambda2 + lambda3 - ...
//   r0, r1                counts of 0s and 1s in the 2-residue diagram
//   boulet                exponents of the four-variable decorated diagram
struct PartitionStats {
    int norm = 0;
    int num_parts = 0;
    int odd_indexed_odd = 0;
    int even_indexed_odd = 0;
    int even_parts = 0;
    int bg_rank = 0;
    int alt_sum = 0;
    int c1mod4 = 0;
    int c3mod4 = 0;
    int r0 = 0;
    int r1 = 0;
    BouletExponents boulet;

    int odd_parts() const { return odd_indexed_odd + even_indexed_odd; }
};

PartitionStats stats(const Partition& p);

} // namespace qplab

#endif
