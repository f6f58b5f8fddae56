#ifndef SPST_PARTITION_HPP
#define SPST_PARTITION_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spst {

/// An integer partition: a weakly decreasing sequence of positive parts.
/// The empty sequence is the unique partition of 0. Values are immutable
/// after construction and safe to share across threads.
class Partition {
public:
    Partition() = default;

    // Throws std::invalid_argument unless parts are weakly decreasing and
    // positive.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const { return size_; }

    // part(i) is zero beyond the last row, so interlacing conditions can be
    // written without explicit padding.
    int part(int i) const {
        return (i >= 0 && i < length()) ? parts_[static_cast<std::size_t>(i)] : 0;
    }

    bool operator==(const Partition& other) const { return parts_ == other.parts_; }
    bool operator!=(const Partition& other) const { return parts_ != other.parts_; }

    // Text form used by the CLI and JSON: "[4,2,1]", empty prints "[]".
    std::string to_string() const;
    static std::optional<Partition> parse(std::string_view text);

private:
    std::vector<int> parts_;
    int size_ = 0;
};

Partition transpose(const Partition& p);

// contains(outer, inner): inner_i <= outer_i for every row.
bool contains(const Partition& outer, const Partition& inner);

// outer/inner has at most one cell per column, i.e. the parts interlace:
// outer_1 >= inner_1 >= outer_2 >= inner_2 >= ...
// Non-containment returns false.
bool is_horizontal_strip(const Partition& outer, const Partition& inner);

// outer/inner has at most one cell per row.
bool is_vertical_strip(const Partition& outer, const Partition& inner);

// nu^(t) = (t - |nu|, nu_1, ..., nu_r). Throws PadTooSmallError when
// t < nu_1 + |nu|; t exactly equal is allowed (the first two parts tie).
Partition pad(const Partition& nu, int t);

// All partitions of n in reverse-lexicographic order: (n) first, (1^n) last.
std::vector<Partition> partitions_of(int n);

// Partitions of 0, 1, ..., cap concatenated, each block in reverse-lex order.
// This graded order is the canonical enumeration everywhere (tables, JSON).
std::vector<Partition> partitions_up_to(int cap);

// Sorted merge of the two part multisets (indexes products of power sums).
Partition concat(const Partition& a, const Partition& b);

// Every part multiplied by factor >= 1 (plethysm by a power sum).
Partition stretch(const Partition& p, int factor);

// Canonical total order: grade by size, then reverse-lexicographic within a
// grade (so (4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1)).
bool canon_less(const Partition& a, const Partition& b);

struct PartitionCanonLess {
    bool operator()(const Partition& a, const Partition& b) const { return canon_less(a, b); }
};

struct PartitionPairCanonLess {
    bool operator()(const std::pair<Partition, Partition>& a,
                    const std::pair<Partition, Partition>& b) const {
        if (a.first != b.first) return canon_less(a.first, b.first);
        return canon_less(a.second, b.second);
    }
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const {
        std::size_t h = 1469598103934665603ull;
        for (int part : p.parts()) {
            h ^= static_cast<std::size_t>(part);
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace spst

#endif
