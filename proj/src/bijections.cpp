#include "rchain/bijections.hpp"

#include <map>
#include <stdexcept>

namespace rchain {

const Partition& PartitionPair::beta_partition() const
{
    static const Partition empty;
    if (const auto* p = std::get_if<Partition>(&beta))
        return *p;
    return empty;
}

Integer PartitionPair::weight() const { return checked_add(alpha.weight(), beta_partition().weight()); }

namespace {

void require_r_at_least_two(int r, const char* where)
{
    if (r < 2)
        throw ContractError(std::string(where) + ": r must be >= 2, got " + std::to_string(r));
}

using Multiplicities = std::map<int, int>;

Multiplicities to_map(const Partition& p)
{
    Multiplicities m;
    for (const auto& b : p.blocks())
        m[b.value] = b.multiplicity;
    return m;
}

Partition from_map(const Multiplicities& m)
{
    std::vector<Partition::Block> blocks;
    for (auto it = m.rbegin(); it != m.rend(); ++it)
        if (it->second > 0)
            blocks.push_back({it->first, it->second});
    return Partition::from_blocks(std::move(blocks));
}

Partition with_copies(const Partition& p, int value, int delta)
{
    auto m = to_map(p);
    m[value] += delta;
    if (m[value] < 0)
        throw std::logic_error("removing more copies of " + std::to_string(value) + " than present");
    return from_map(m);
}

int count_parts_at_least(const Partition& p, int value)
{
    int count = 0;
    for (const auto& b : p.blocks())
        if (b.value >= value)
            count += b.multiplicity;
    return count;
}

int count_parts_at_most(const Partition& p, int value)
{
    int count = 0;
    for (const auto& b : p.blocks())
        if (b.value <= value)
            count += b.multiplicity;
    return count;
}

// pi = pi_o * pi_r with pi_r holding exactly the parts divisible by r.
std::pair<Partition, Partition> split_multiples(const Partition& pi, int r)
{
    std::vector<Partition::Block> other, multiples;
    for (const auto& b : pi.blocks())
        (b.value % r == 0 ? multiples : other).push_back(b);
    return {Partition::from_blocks(std::move(other)), Partition::from_blocks(std::move(multiples))};
}

// Division-algorithm split of every multiplicity f = r*q + s: returns
// (parts with multiplicity s, parts with multiplicity r*q).
std::pair<Partition, Partition> split_multiplicities(const Partition& nu, int r)
{
    std::vector<Partition::Block> remainder, bulk;
    for (const auto& b : nu.blocks()) {
        if (b.multiplicity % r > 0)
            remainder.push_back({b.value, b.multiplicity % r});
        if (b.multiplicity / r > 0)
            bulk.push_back({b.value, r * (b.multiplicity / r)});
    }
    return {Partition::from_blocks(std::move(remainder)), Partition::from_blocks(std::move(bulk))};
}

Partition merge_from_multiples(const Partition& pi, int r)
{
    const auto [other, multiples] = split_multiples(pi, r);
    return concat(glaisher_f(other, r), conjugate(multiples));
}

Partition split_to_multiples(const Partition& nu, int r)
{
    const auto [remainder, bulk] = split_multiplicities(nu, r);
    return concat(glaisher_f_inv(remainder, r), conjugate(bulk));
}

} // namespace

Partition glaisher_f(const Partition& pi, int r)
{
    require_r_at_least_two(r, "glaisher_f");
    for (const auto& b : pi.blocks())
        if (b.value % r == 0)
            throw ContractError("glaisher_f: input is not " + std::to_string(r) + "-regular (part " +
                                std::to_string(b.value) + " is divisible by " + std::to_string(r) + ")");
    auto m = to_map(pi);
    // Ascending order: merged parts land on larger keys that are visited later.
    for (auto it = m.begin(); it != m.end(); ++it) {
        if (it->second < r)
            continue;
        const int merged = static_cast<int>(checked_mul(it->first, r));
        m[merged] += it->second / r;
        it->second %= r;
    }
    return from_map(m);
}

Partition glaisher_f_inv(const Partition& pi, int r)
{
    require_r_at_least_two(r, "glaisher_f_inv");
    for (const auto& b : pi.blocks())
        if (b.multiplicity >= r)
            throw ContractError("glaisher_f_inv: input is not " + std::to_string(r) + "-strict (part " +
                                std::to_string(b.value) + " has multiplicity " + std::to_string(b.multiplicity) +
                                ")");
    auto m = to_map(pi);
    // Descending order: split parts land on smaller keys that are visited later.
    for (auto it = m.rbegin(); it != m.rend(); ++it) {
        if (it->first % r != 0 || it->second == 0)
            continue;
        m[it->first / r] += static_cast<int>(checked_mul(it->second, r));
        it->second = 0;
    }
    return from_map(m);
}

Partition phi_r(const Partition& pi, int r)
{
    require_r_at_least_two(r, "phi_r");
    return merge_from_multiples(pi, r);
}

Partition psi_r(const Partition& nu, int r)
{
    require_r_at_least_two(r, "psi_r");
    return split_to_multiples(nu, r);
}

// The H->S map uses the same construction as phi_r. Its inverse keeps
// r*floor(f/r) copies of the values >= j in the bulk piece; values below the
// smallest r-repeating part have multiplicity < r, so this is the same split
// psi_r performs.

Partition cap_phi_r(const Partition& pi, int r)
{
    require_r_at_least_two(r, "cap_phi_r");
    if (count_multiples(pi, r) == 0)
        throw ContractError("cap_phi_r: " + to_string(pi) + " has no part divisible by " + std::to_string(r));
    return merge_from_multiples(pi, r);
}

Partition cap_psi_r(const Partition& nu, int r)
{
    require_r_at_least_two(r, "cap_psi_r");
    if (smallest_r_repeating(nu, r) == 0)
        throw ContractError("cap_psi_r: " + to_string(nu) + " has no " + std::to_string(r) + "-repeating part");
    return split_to_multiples(nu, r);
}

namespace {

PartitionPair move_residues(const Partition& alpha, const Partition& beta, int r, bool keep_largest,
                            std::vector<PartMove>* moves)
{
    require_positive_r(r, keep_largest ? "psi_pair" : "phi_pair");
    const auto& blocks = beta.blocks();
    std::vector<Partition::Block> kept, moved;
    for (std::size_t idx = 0; idx < blocks.size(); ++idx) {
        const auto& b = blocks[idx];
        const bool anchor = keep_largest ? idx == 0 : idx + 1 == blocks.size();
        const int h = anchor ? 0 : b.multiplicity % (r + 1);
        if (h > 0) {
            moved.push_back({b.value, h});
            if (moves)
                moves->push_back({b.value, h});
        }
        if (b.multiplicity - h > 0)
            kept.push_back({b.value, b.multiplicity - h});
    }
    return {concat(alpha, Partition::from_blocks(std::move(moved))), Partition::from_blocks(std::move(kept))};
}

} // namespace

PartitionPair psi_pair(const Partition& alpha, const Partition& beta, int r, std::vector<PartMove>* moves)
{
    return move_residues(alpha, beta, r, true, moves);
}

PartitionPair phi_pair(const Partition& alpha, const Partition& beta, int r, std::vector<PartMove>* moves)
{
    return move_residues(alpha, beta, r, false, moves);
}

bool in_gamma_codomain(const PartitionPair& pair, int r)
{
    require_positive_r(r, "in_gamma_codomain");
    if (pair.colored() || !is_r_strict(pair.alpha, r + 1))
        return false;
    const auto& blocks = pair.beta_partition().blocks();
    for (std::size_t idx = 0; idx < blocks.size(); ++idx) {
        const bool divisible = blocks[idx].multiplicity % (r + 1) == 0;
        if (idx == 0 ? divisible : !divisible)
            return false;
    }
    return true;
}

bool in_gamma_star_codomain(const PartitionPair& pair, int r)
{
    require_positive_r(r, "in_gamma_star_codomain");
    if (const auto* c = std::get_if<ColoredEmpty>(&pair.beta))
        return c->color >= 1 && c->color <= r && is_r_strict(pair.alpha, r + 1);
    return !pair.beta_partition().empty() && in_gamma_codomain(pair, r);
}

bool in_mex_sum_codomain(const PartitionPair& pair, int r)
{
    require_positive_r(r, "in_mex_sum_codomain");
    if (!is_r_strict(pair.alpha, r + 1))
        return false;
    if (const auto* c = std::get_if<ColoredEmpty>(&pair.beta))
        return c->color >= 1 && c->color <= r;
    const auto& beta = pair.beta_partition();
    if (beta.empty())
        return false;
    const int residue = beta.largest_part() % (r + 1);
    if (residue == 0)
        return false;
    for (const auto& b : beta.blocks())
        if (b.value % (r + 1) != residue)
            return false;
    return true;
}

bool in_delta_codomain(const PartitionPair& pair, int r)
{
    require_positive_r(r, "in_delta_codomain");
    if (pair.colored() || !is_r_strict(pair.alpha, r + 1))
        return false;
    const auto& blocks = pair.beta_partition().blocks();
    for (std::size_t idx = 0; idx + 1 < blocks.size(); ++idx)
        if (blocks[idx].multiplicity % (r + 1) != 0)
            return false;
    return true;
}

int gamma_index_bound(const Partition& lambda, int r) { return mex_r(lambda, r) + omega_r(lambda, r); }

int gamma_star_index_bound(const Partition& lambda, int r) { return mex_r(lambda, r) + r - 1; }

int delta_index_bound(const Partition& lambda, int r)
{
    return lambda.largest_part() - maex_r(lambda, r) + cap_omega_r(lambda, r);
}

std::string to_string(MapCase c)
{
    switch (c) {
    case MapCase::gamma_zero:
        return "zero-class";
    case MapCase::gamma_plus_low:
        return "plus-class-below-mex";
    case MapCase::gamma_plus_keep:
        return "plus-class-keep";
    case MapCase::gamma_plus_shift:
        return "plus-class-shift";
    case MapCase::gamma_star_color:
        return "colored-empty";
    case MapCase::delta:
        return "delta";
    }
    return "unknown";
}

namespace {

void check_index(const char* map, int i, int bound, const Partition& lambda)
{
    if (i < 1 || i > bound)
        throw ContractError(std::string(map) + ": index " + std::to_string(i) + " outside 1.." +
                            std::to_string(bound) + " for " + to_string(lambda));
}

} // namespace

MapTrace trace_gamma(const Partition& lambda, int i, int r)
{
    require_positive_r(r, "gamma");
    check_index("gamma", i, gamma_index_bound(lambda, r), lambda);

    MapTrace t;
    t.map = "gamma";
    t.input = {lambda, i};
    t.r = r;
    t.conjugate = conjugate(lambda);
    t.cut_index = i;
    t.output = psi_pair(cut_up(t.conjugate, i), cut_down(t.conjugate, i), r, &t.moves);

    const int mex = mex_r(lambda, r);
    if (in_p_zero(lambda, r)) {
        t.which = MapCase::gamma_zero;
        return t;
    }
    if (i <= mex - 1) {
        t.which = MapCase::gamma_plus_low;
        return t;
    }
    // lambda in P_r^+ always has a part above mex + r - 1.
    const int g = g_stat(lambda, r);
    if (g == 0)
        throw std::logic_error("gamma: G(lambda) = 0 for " + to_string(lambda) + " in P_r^+");
    const int k = t.conjugate.multiplicity(g);
    const int offset = i - mex;
    if ((k - offset) % (r + 1) != 0) {
        t.which = MapCase::gamma_plus_keep;
        return t;
    }
    t.which = MapCase::gamma_plus_shift;
    t.shifted_copies = r - offset;
    t.output = PartitionPair(with_copies(t.output.alpha, g, t.shifted_copies),
                             with_copies(t.output.beta_partition(), g, -t.shifted_copies));
    return t;
}

PartitionPair gamma(const Partition& lambda, int i, int r) { return trace_gamma(lambda, i, r).output; }

IndexedPartition gamma_inv(const PartitionPair& pair, int r)
{
    if (!in_gamma_codomain(pair, r))
        throw ContractError("gamma_inv: pair is outside the codomain for r = " + std::to_string(r));
    const Partition merged = concat(pair.alpha, pair.beta_partition());
    Partition lambda = conjugate(merged);
    const int mex = mex_r(lambda, r);
    // Outside the shifting case, alpha holds exactly i-1 parts >= largest(beta).
    // The shifting case leaves mex-1+r such parts, which no other case can.
    const int i0 = 1 + count_parts_at_least(pair.alpha, pair.beta_partition().largest_part());
    int i = i0;
    if (!in_p_zero(lambda, r) && i0 == mex + r) {
        const int k = merged.multiplicity(g_stat(lambda, r));
        i = mex + k % (r + 1);
    }
    return {std::move(lambda), i};
}

MapTrace trace_gamma_star(const Partition& lambda, int i, int r)
{
    require_positive_r(r, "gamma_star");
    check_index("gamma_star", i, gamma_star_index_bound(lambda, r), lambda);
    const int mex = mex_r(lambda, r);
    if (in_p_zero(lambda, r) && i >= mex) {
        MapTrace t;
        t.map = "gamma_star";
        t.input = {lambda, i};
        t.r = r;
        t.which = MapCase::gamma_star_color;
        t.conjugate = conjugate(lambda);
        t.output = PartitionPair(t.conjugate, ColoredEmpty{i - mex + 1});
        return t;
    }
    MapTrace t = trace_gamma(lambda, i, r);
    t.map = "gamma_star";
    return t;
}

PartitionPair gamma_star(const Partition& lambda, int i, int r) { return trace_gamma_star(lambda, i, r).output; }

IndexedPartition gamma_star_inv(const PartitionPair& pair, int r)
{
    if (!in_gamma_star_codomain(pair, r))
        throw ContractError("gamma_star_inv: pair is outside the codomain for r = " + std::to_string(r));
    if (const auto* c = std::get_if<ColoredEmpty>(&pair.beta)) {
        Partition lambda = conjugate(pair.alpha);
        const int i = mex_r(lambda, r) + c->color - 1;
        return {std::move(lambda), i};
    }
    return gamma_inv(pair, r);
}

PartitionPair to_mex_sum_orientation(const PartitionPair& pair)
{
    if (pair.colored())
        return pair;
    return PartitionPair(pair.alpha, conjugate(pair.beta_partition()));
}

MapTrace trace_delta(const Partition& lambda, int i, int r)
{
    require_positive_r(r, "delta");
    check_index("delta", i, delta_index_bound(lambda, r), lambda);
    MapTrace t;
    t.map = "delta";
    t.input = {lambda, i};
    t.r = r;
    t.which = MapCase::delta;
    t.conjugate = conjugate(lambda);
    t.cut_index = lambda.largest_part() + 2 - i;
    t.output = phi_pair(cut_down(t.conjugate, t.cut_index), cut_up(t.conjugate, t.cut_index), r, &t.moves);
    return t;
}

PartitionPair delta(const Partition& lambda, int i, int r) { return trace_delta(lambda, i, r).output; }

IndexedPartition delta_inv(const PartitionPair& pair, int r)
{
    if (!in_delta_codomain(pair, r))
        throw ContractError("delta_inv: pair is outside the codomain for r = " + std::to_string(r));
    Partition lambda = conjugate(concat(pair.alpha, pair.beta_partition()));
    const auto smallest = pair.beta_partition().smallest_part();
    const int below = smallest ? count_parts_at_most(pair.alpha, *smallest) : pair.alpha.num_parts();
    return {std::move(lambda), 1 + below};
}

} // namespace rchain
