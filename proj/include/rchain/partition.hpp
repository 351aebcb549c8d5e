#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rchain/checked.hpp"

namespace rchain {

/// An integer partition.
///
/// Stored as (value, multiplicity) blocks with strictly decreasing values and
/// positive multiplicities. The weakly decreasing parts list is materialized
/// on demand by parts(). Values are immutable after construction.
class Partition {
public:
    struct Block {
        int value;
        int multiplicity;
        friend bool operator==(const Block&, const Block&) = default;
        friend auto operator<=>(const Block&, const Block&) = default;
    };

    Partition() = default;

    /// Parts must be positive and weakly decreasing; throws ContractError otherwise.
    static Partition from_parts(std::span<const int> parts);
    static Partition from_parts(std::initializer_list<int> parts)
    {
        return from_parts(std::span<const int>(parts.begin(), parts.size()));
    }
    /// Accepts positive parts in any order.
    static Partition from_unsorted(std::vector<int> parts);
    /// Blocks must have strictly decreasing values and positive multiplicities.
    static Partition from_blocks(std::vector<Block> blocks);

    const std::vector<Block>& blocks() const noexcept { return blocks_; }
    std::vector<int> parts() const;

    bool empty() const noexcept { return blocks_.empty(); }
    /// Sum of the parts.
    Integer weight() const noexcept { return weight_; }
    /// Number of parts, #(lambda).
    int num_parts() const noexcept { return num_parts_; }
    /// Largest part; 0 for the empty partition.
    int largest_part() const noexcept { return blocks_.empty() ? 0 : blocks_.front().value; }
    /// Smallest part; none for the empty partition.
    std::optional<int> smallest_part() const noexcept
    {
        if (blocks_.empty())
            return std::nullopt;
        return blocks_.back().value;
    }
    int multiplicity(int value) const noexcept;
    bool contains(int value) const noexcept { return multiplicity(value) > 0; }

    /// i-th largest part, 1-based.
    int part(int index) const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.blocks_ == b.blocks_; }
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b)
    {
        return a.blocks_ <=> b.blocks_;
    }

private:
    explicit Partition(std::vector<Block> blocks);

    std::vector<Block> blocks_;
    Integer weight_ = 0;
    int num_parts_ = 0;
};

/// Chain classes: ZERO(r) is "all successive gaps <= r and smallest part <= r",
/// PLUS(r) is its complement. The empty partition lies in ZERO(r).
struct PartitionClass {
    enum class Kind { zero, plus };
    Kind kind;
    int r;

    static PartitionClass zero(int r) { return {Kind::zero, r}; }
    static PartitionClass plus(int r) { return {Kind::plus, r}; }
    friend bool operator==(const PartitionClass&, const PartitionClass&) = default;
};

// Structural operators.

Partition conjugate(const Partition& lambda);
/// Multiset union of parts.
Partition concat(const Partition& alpha, const Partition& mu);
/// (lambda_1, ..., lambda_{i-1}); requires 1 <= i <= #(lambda)+1.
Partition cut_up(const Partition& lambda, int i);
/// (lambda_i, ..., lambda_last); requires 1 <= i <= #(lambda)+1.
Partition cut_down(const Partition& lambda, int i);

// Excludant statistics and weights.

/// Smallest k >= 1 such that none of k, k+1, ..., k+r-1 is a part.
int mex_r(const Partition& lambda, int r);
/// Largest k with r <= k < largest part such that k, k-1, ..., k-r+1 are all
/// missing from lambda; 0 when there is no such k.
int maex_r(const Partition& lambda, int r);
bool in_p_zero(const Partition& lambda, int r);
bool in_class(const Partition& lambda, PartitionClass cls);
/// 0 on P_r^0, r-1 on P_r^+.
int omega_r(const Partition& lambda, int r);
/// 1 on P_r^0, r on P_r^+.
int cap_omega_r(const Partition& lambda, int r);
/// Number of parts strictly greater than mex_r(lambda, r).
int g_stat(const Partition& lambda, int r);

// Multiplicity statistics; all return 0 when nothing qualifies.

int largest_r_repeating(const Partition& lambda, int r);
int smallest_r_repeating(const Partition& lambda, int r);
int count_multiples(const Partition& lambda, int r);
int mult_of_largest_multiple(const Partition& lambda, int r);
/// Number of parts strictly greater than value.
int count_parts_above(const Partition& lambda, int value);
/// No part divisible by r.
bool is_r_regular(const Partition& lambda, int r);
/// Every multiplicity below r.
bool is_r_strict(const Partition& lambda, int r);

// Enumeration.

using PartitionFilter = std::function<bool(const Partition&)>;

/// Calls visit on every partition of n in decreasing lexicographic order,
/// starting at (n) and ending at (1^n). n = 0 yields the empty partition once.
void for_each_partition(int n, const std::function<void(const Partition&)>& visit);
/// Collects the partitions of n accepted by filter (all of them when filter is empty).
std::vector<Partition> enumerate(int n, const PartitionFilter& filter = {});

namespace filters {
PartitionFilter r_regular(int r);
PartitionFilter r_strict(int r);
PartitionFilter in_class(PartitionClass cls);
/// Accepts lambda when stat(lambda) == j.
PartitionFilter stat_equals(std::function<int(const Partition&)> stat, int j);
} // namespace filters

// Canonical text form: "[7,4,4,1]", "[]".

std::string to_string(const Partition& lambda);

/// Parses the canonical text form. Whitespace around tokens is ignored.
/// Unless sort is set, parts must already be weakly decreasing.
/// Throws ContractError on malformed input.
Partition parse_partition(std::string_view text, bool sort = false);

} // namespace rchain
