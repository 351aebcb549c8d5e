#include "rchain/partition.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace rchain {

Partition::Partition(std::vector<Block> blocks) : blocks_(std::move(blocks))
{
    for (const auto& b : blocks_) {
        weight_ = checked_add(weight_, checked_mul(b.value, b.multiplicity));
        num_parts_ += b.multiplicity;
    }
}

Partition Partition::from_parts(std::span<const int> parts)
{
    std::vector<Block> blocks;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const int p = parts[i];
        if (p < 1)
            throw ContractError("partition parts must be positive, got " + std::to_string(p));
        if (i > 0 && p > parts[i - 1])
            throw ContractError("partition parts must be weakly decreasing: " + std::to_string(parts[i - 1]) +
                                " is followed by " + std::to_string(p));
        if (!blocks.empty() && blocks.back().value == p)
            ++blocks.back().multiplicity;
        else
            blocks.push_back({p, 1});
    }
    return Partition(std::move(blocks));
}

Partition Partition::from_unsorted(std::vector<int> parts)
{
    std::ranges::sort(parts, std::greater<>{});
    return from_parts(parts);
}

Partition Partition::from_blocks(std::vector<Block> blocks)
{
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (blocks[i].value < 1 || blocks[i].multiplicity < 1)
            throw ContractError("partition blocks need positive value and multiplicity");
        if (i > 0 && blocks[i].value >= blocks[i - 1].value)
            throw ContractError("partition block values must be strictly decreasing");
    }
    return Partition(std::move(blocks));
}

std::vector<int> Partition::parts() const
{
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(num_parts_));
    for (const auto& b : blocks_)
        out.insert(out.end(), static_cast<std::size_t>(b.multiplicity), b.value);
    return out;
}

int Partition::multiplicity(int value) const noexcept
{
    // blocks are sorted by decreasing value
    auto it = std::ranges::lower_bound(blocks_, value, std::greater<>{}, &Block::value);
    return (it != blocks_.end() && it->value == value) ? it->multiplicity : 0;
}

int Partition::part(int index) const
{
    if (index < 1 || index > num_parts_)
        throw ContractError("part index " + std::to_string(index) + " out of range 1.." +
                            std::to_string(num_parts_));
    for (const auto& b : blocks_) {
        if (index <= b.multiplicity)
            return b.value;
        index -= b.multiplicity;
    }
    return 0; // unreachable
}

Partition conjugate(const Partition& lambda)
{
    // Walking the blocks from the smallest value up: the column heights of
    // lambda change exactly at each block value.
    std::vector<Partition::Block> out;
    const auto& blocks = lambda.blocks();
    int height = lambda.num_parts();
    int prev = 0;
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
        // columns prev+1 .. it->value all have the current height
        out.push_back({height, it->value - prev});
        height -= it->multiplicity;
        prev = it->value;
    }
    return Partition::from_blocks(std::move(out));
}

Partition concat(const Partition& alpha, const Partition& mu)
{
    std::vector<Partition::Block> out;
    const auto& a = alpha.blocks();
    const auto& b = mu.blocks();
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].value > b[j].value))
            out.push_back(a[i++]);
        else if (i == a.size() || b[j].value > a[i].value)
            out.push_back(b[j++]);
        else {
            out.push_back({a[i].value, a[i].multiplicity + b[j].multiplicity});
            ++i;
            ++j;
        }
    }
    return Partition::from_blocks(std::move(out));
}

namespace {

void check_cut_index(const Partition& lambda, int i)
{
    if (i < 1 || i > lambda.num_parts() + 1)
        throw ContractError("cut index " + std::to_string(i) + " out of range 1.." +
                            std::to_string(lambda.num_parts() + 1));
}

// Splits the blocks so the first `count` parts go to `upper`.
std::pair<Partition, Partition> split_after(const Partition& lambda, int count)
{
    std::vector<Partition::Block> upper, lower;
    for (const auto& b : lambda.blocks()) {
        const int take = std::clamp(count, 0, b.multiplicity);
        if (take > 0)
            upper.push_back({b.value, take});
        if (b.multiplicity - take > 0)
            lower.push_back({b.value, b.multiplicity - take});
        count -= take;
    }
    return {Partition::from_blocks(std::move(upper)), Partition::from_blocks(std::move(lower))};
}

} // namespace

Partition cut_up(const Partition& lambda, int i)
{
    check_cut_index(lambda, i);
    return split_after(lambda, i - 1).first;
}

Partition cut_down(const Partition& lambda, int i)
{
    check_cut_index(lambda, i);
    return split_after(lambda, i - 1).second;
}

int mex_r(const Partition& lambda, int r)
{
    require_positive_r(r, "mex_r");
    // Parts in increasing order; a window [k, k+r-1] is blocked by the first part inside it.
    int k = 1;
    const auto& blocks = lambda.blocks();
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
        if (it->value < k)
            continue;
        if (it->value > k + r - 1)
            break;
        k = it->value + 1;
    }
    return k;
}

int maex_r(const Partition& lambda, int r)
{
    require_positive_r(r, "maex_r");
    // Scan k downward from largest-1; the chain k-r+1..k must consist of positive integers.
    const auto& blocks = lambda.blocks();
    for (std::size_t idx = 0; idx < blocks.size(); ++idx) {
        const int upper = blocks[idx].value;
        const int lower = idx + 1 < blocks.size() ? blocks[idx + 1].value : 0;
        // values strictly between lower and upper are missing
        const int k = upper - 1;
        if (k - r + 1 > lower && k >= r)
            return k;
    }
    return 0;
}

bool in_p_zero(const Partition& lambda, int r)
{
    require_positive_r(r, "in_p_zero");
    const auto& blocks = lambda.blocks();
    if (blocks.empty())
        return true;
    if (blocks.back().value > r)
        return false;
    for (std::size_t i = 0; i + 1 < blocks.size(); ++i)
        if (blocks[i].value - blocks[i + 1].value > r)
            return false;
    return true;
}

bool in_class(const Partition& lambda, PartitionClass cls)
{
    const bool zero = in_p_zero(lambda, cls.r);
    return cls.kind == PartitionClass::Kind::zero ? zero : !zero;
}

int omega_r(const Partition& lambda, int r) { return in_p_zero(lambda, r) ? 0 : r - 1; }

int cap_omega_r(const Partition& lambda, int r) { return in_p_zero(lambda, r) ? 1 : r; }

int count_parts_above(const Partition& lambda, int value)
{
    int count = 0;
    for (const auto& b : lambda.blocks()) {
        if (b.value <= value)
            break;
        count += b.multiplicity;
    }
    return count;
}

int g_stat(const Partition& lambda, int r) { return count_parts_above(lambda, mex_r(lambda, r)); }

int largest_r_repeating(const Partition& lambda, int r)
{
    require_positive_r(r, "largest_r_repeating");
    for (const auto& b : lambda.blocks())
        if (b.multiplicity >= r)
            return b.value;
    return 0;
}

int smallest_r_repeating(const Partition& lambda, int r)
{
    require_positive_r(r, "smallest_r_repeating");
    const auto& blocks = lambda.blocks();
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it)
        if (it->multiplicity >= r)
            return it->value;
    return 0;
}

int count_multiples(const Partition& lambda, int r)
{
    require_positive_r(r, "count_multiples");
    int count = 0;
    for (const auto& b : lambda.blocks())
        if (b.value % r == 0)
            count += b.multiplicity;
    return count;
}

int mult_of_largest_multiple(const Partition& lambda, int r)
{
    require_positive_r(r, "mult_of_largest_multiple");
    for (const auto& b : lambda.blocks())
        if (b.value % r == 0)
            return b.multiplicity;
    return 0;
}

bool is_r_regular(const Partition& lambda, int r)
{
    require_positive_r(r, "is_r_regular");
    return std::ranges::none_of(lambda.blocks(), [r](const auto& b) { return b.value % r == 0; });
}

bool is_r_strict(const Partition& lambda, int r)
{
    require_positive_r(r, "is_r_strict");
    return std::ranges::all_of(lambda.blocks(), [r](const auto& b) { return b.multiplicity < r; });
}

namespace {

void visit_partitions(int remaining, int max_part, std::vector<int>& current,
                      const std::function<void(const Partition&)>& visit)
{
    if (remaining == 0) {
        visit(Partition::from_parts(current));
        return;
    }
    for (int first = std::min(remaining, max_part); first >= 1; --first) {
        current.push_back(first);
        visit_partitions(remaining - first, first, current, visit);
        current.pop_back();
    }
}

} // namespace

void for_each_partition(int n, const std::function<void(const Partition&)>& visit)
{
    if (n < 0)
        throw ContractError("cannot enumerate partitions of a negative integer");
    std::vector<int> current;
    current.reserve(static_cast<std::size_t>(n));
    visit_partitions(n, n, current, visit);
}

std::vector<Partition> enumerate(int n, const PartitionFilter& filter)
{
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) {
        if (!filter || filter(p))
            out.push_back(p);
    });
    return out;
}

namespace filters {

PartitionFilter r_regular(int r)
{
    require_positive_r(r, "filters::r_regular");
    return [r](const Partition& p) { return is_r_regular(p, r); };
}

PartitionFilter r_strict(int r)
{
    require_positive_r(r, "filters::r_strict");
    return [r](const Partition& p) { return is_r_strict(p, r); };
}

PartitionFilter in_class(PartitionClass cls)
{
    require_positive_r(cls.r, "filters::in_class");
    return [cls](const Partition& p) { return rchain::in_class(p, cls); };
}

PartitionFilter stat_equals(std::function<int(const Partition&)> stat, int j)
{
    return [stat = std::move(stat), j](const Partition& p) { return stat(p) == j; };
}

} // namespace filters

std::string to_string(const Partition& lambda)
{
    std::string out = "[";
    bool first = true;
    for (const auto& b : lambda.blocks()) {
        for (int m = 0; m < b.multiplicity; ++m) {
            if (!first)
                out += ',';
            out += std::to_string(b.value);
            first = false;
        }
    }
    out += ']';
    return out;
}

namespace {

std::string_view trim(std::string_view s)
{
    const auto ws = " \t\r\n";
    const auto begin = s.find_first_not_of(ws);
    if (begin == std::string_view::npos)
        return {};
    const auto end = s.find_last_not_of(ws);
    return s.substr(begin, end - begin + 1);
}

} // namespace

Partition parse_partition(std::string_view text, bool sort)
{
    const std::string_view body = trim(text);
    if (body.size() < 2 || body.front() != '[' || body.back() != ']')
        throw ContractError("malformed partition literal '" + std::string(text) + "': expected [a,b,...]");
    const std::string_view inner = trim(body.substr(1, body.size() - 2));
    std::vector<int> parts;
    if (!inner.empty()) {
        std::size_t pos = 0;
        while (true) {
            const auto comma = inner.find(',', pos);
            const auto token = trim(inner.substr(pos, comma == std::string_view::npos ? inner.npos : comma - pos));
            int value = 0;
            const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
                throw ContractError("malformed partition literal '" + std::string(text) + "': bad part '" +
                                    std::string(token) + "'");
            if (value < 1)
                throw ContractError("malformed partition literal '" + std::string(text) +
                                    "': parts must be positive");
            parts.push_back(value);
            if (comma == std::string_view::npos)
                break;
            pos = comma + 1;
        }
    }
    if (sort)
        return Partition::from_unsorted(std::move(parts));
    return Partition::from_parts(parts);
}

} // namespace rchain
