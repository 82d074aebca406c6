#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "ucert/arith.hpp"

namespace ucert {

/// Integer partition stored densely as a weakly decreasing list of positive parts.
///
/// Comparison follows the canonical total order used everywhere in the
/// project: sizes ascending, and within a fixed size, lexicographically
/// decreasing. So partitions_of(4) comes out as (4),(3,1),(2,2),(2,1,1),(1^4)
/// and a std::map keyed by Partition iterates in that order.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return size_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    /// i-th part (0-based); zero past the end.
    int operator[](std::size_t i) const noexcept {
        return i < parts_.size() ? parts_[i] : 0;
    }

    /// m_k for k = 1..largest part; index 0 unused.
    std::vector<int> multiplicities() const;

    bool operator==(const Partition& o) const noexcept { return parts_ == o.parts_; }
    std::strong_ordering operator<=>(const Partition& o) const noexcept;

    std::string str() const;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept;
};

/// Triple (mu1, mu2, mu3) of partitions of a common size.
struct PartitionTriple {
    PartitionTriple() = default;
    PartitionTriple(Partition a, Partition b, Partition c);

    const Partition& operator[](int i) const { return mu[i]; }
    int size() const noexcept { return mu[0].size(); }

    bool operator==(const PartitionTriple&) const = default;
    /// Lexicographic on the three coordinates in the canonical partition order.
    std::strong_ordering operator<=>(const PartitionTriple& o) const noexcept;

    std::string str() const;

    Partition mu[3];
};

std::vector<Partition> partitions_of(int n);

/// Number of partitions of n.
std::int64_t partition_count(int n);

Partition conjugate(const Partition& lambda);

/// true iff lambda is dominated by mu (lambda ⊴ mu). Throws on size mismatch.
bool dominates(const Partition& lambda, const Partition& mu);

/// Centralizer order z_lambda = prod k^{m_k} m_k!.
Integer z_order(const Partition& lambda);

/// Class size n!/z_lambda.
Integer class_size(const Partition& lambda);

/// (d, d-1, ..., 1)
Partition staircase(int d);

/// Dominance-maximal partition of n with first part at most ceil(n/2).
Partition mu_max(int n);

/// (1^n)
Partition column(int n);

/// Exponent form, "5,2^2,1^3"; parse_partition reads it back.
std::string compact_str(const Partition& lambda);

/// Parse "5,4,1", "2^3,1^2", or "()" / "" for the empty partition.
Partition parse_partition(std::string_view text);

/// Parse "a / b / c" (three partitions separated by '/').
PartitionTriple parse_triple(std::string_view text);

}  // namespace ucert
