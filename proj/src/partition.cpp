#include "qplab/partition.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace qplab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] < 1)
            throw Error("Partition: parts must be positive");
        if (k > 0 && parts_[k - 1] < parts_[k])
            throw Error("Partition: parts must be weakly decreasing");
    }
}

std::optional<Partition> Partition::parse(std::string_view text) {
    if (text.size() < 2 || text.front() != '(' || text.back() != ')')
        return std::nullopt;
    std::string_view body = text.substr(1, text.size() - 2);
    std::vector<int> parts;
    if (!body.empty()) {
        std::size_t pos = 0;
        while (pos < body.size()) {
            std::size_t start = pos;
            while (pos < body.size() && std::isdigit(static_cast<unsigned char>(body[pos])))
                ++pos;
            if (pos == start)
                return std::nullopt;
            long v = std::stol(std::string(body.substr(start, pos - start)));
            if (v < 1 || v > 1000000000)
                return std::nullopt;
            parts.push_back(static_cast<int>(v));
            if (pos < body.size()) {
                if (body[pos] != ',')
                    return std::nullopt;
                ++pos;
                if (pos == body.size())
                    return std::nullopt; // trailing comma
            }
        }
    }
    for (std::size_t k = 1; k < parts.size(); ++k)
        if (parts[k - 1] < parts[k])
            return std::nullopt;
    return Partition::unchecked(std::move(parts));
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (k)
            os << ',';
        os << parts_[k];
    }
    os << ')';
    return os.str();
}

int Partition::norm() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
    std::vector<int> out;
    if (parts_.empty())
        return Partition();
    out.reserve(parts_[0]);
    for (int col = 1; col <= parts_[0]; ++col) {
        int h = 0;
        for (int p : parts_) {
            if (p < col)
                break;
            ++h;
        }
        out.push_back(h);
    }
    return Partition::unchecked(std::move(out));
}

PartitionStats stats(const Partition& p) {
    PartitionStats s;
    s.num_parts = p.num_parts();
    int sign = 1;
    for (int k = 0; k < p.num_parts(); ++k) {
        const int len = p.part(k);
        const bool odd_row = k % 2 == 0; // 1-based row index odd
        const int ceil_half = (len + 1) / 2;
        const int floor_half = len / 2;

        s.norm += len;
        s.alt_sum += sign * len;
        sign = -sign;
        if (len % 2 == 1) {
            if (odd_row)
                ++s.odd_indexed_odd;
            else
                ++s.even_indexed_odd;
        } else {
            ++s.even_parts;
        }
        if (len % 4 == 1)
            ++s.c1mod4;
        if (len % 4 == 3)
            ++s.c3mod4;

        // 2-residue diagram: odd rows start with 0, even rows with 1. The
        // Boulet decoration follows the same split: odd rows a,b,a,b,...
        // and even rows c,d,c,d,...
        if (odd_row) {
            s.r0 += ceil_half;
            s.r1 += floor_half;
            s.boulet.a += ceil_half;
            s.boulet.b += floor_half;
        } else {
            s.r1 += ceil_half;
            s.r0 += floor_half;
            s.boulet.c += ceil_half;
            s.boulet.d += floor_half;
        }
    }
    s.bg_rank = s.odd_indexed_odd - s.even_indexed_odd;
    return s;
}

} // namespace qplab
