#pragma once

#include <string>
#include <variant>
#include <vector>

#include "rchain/partition.hpp"

namespace rchain {

/// The empty partition carrying one of r colors (1..r).
struct ColoredEmpty {
    int color;
    friend bool operator==(const ColoredEmpty&, const ColoredEmpty&) = default;
    friend auto operator<=>(const ColoredEmpty&, const ColoredEmpty&) = default;
};

/// Second component of a pair: a partition (possibly the plain empty one) or a
/// colored empty partition.
using BetaSide = std::variant<Partition, ColoredEmpty>;

struct PartitionPair {
    Partition alpha;
    BetaSide beta;

    PartitionPair() = default;
    PartitionPair(Partition a, Partition b) : alpha(std::move(a)), beta(std::move(b)) {}
    PartitionPair(Partition a, ColoredEmpty c) : alpha(std::move(a)), beta(c) {}

    bool colored() const noexcept { return std::holds_alternative<ColoredEmpty>(beta); }
    /// The beta partition; a colored empty beta reads as the empty partition.
    const Partition& beta_partition() const;
    Integer weight() const;

    friend bool operator==(const PartitionPair&, const PartitionPair&) = default;
    friend auto operator<=>(const PartitionPair& a, const PartitionPair& b)
    {
        if (auto c = a.alpha <=> b.alpha; c != 0)
            return c;
        return a.beta <=> b.beta;
    }
};

struct IndexedPartition {
    Partition lambda;
    int index;
    friend bool operator==(const IndexedPartition&, const IndexedPartition&) = default;
};

// Glaisher's map between r-regular and r-strict partitions.

/// Merges r equal parts into one part r times as large until every
/// multiplicity is below r. Requires an r-regular input.
Partition glaisher_f(const Partition& pi, int r);
/// Splits every multiple of r into r equal parts until no part is divisible
/// by r. Requires an r-strict input.
Partition glaisher_f_inv(const Partition& pi, int r);

// Partitions with j multiples of r  <->  partitions whose largest r-repeating part is j.

Partition phi_r(const Partition& pi, int r);
Partition psi_r(const Partition& nu, int r);

// Largest multiple of r occurring j times  <->  smallest r-repeating part is j.

Partition cap_phi_r(const Partition& pi, int r);
Partition cap_psi_r(const Partition& nu, int r);

// Pair operators. Both keep one extreme value of beta intact and move, for
// every other value t of beta, (multiplicity of t mod r+1) copies of t into alpha.

/// A single move: `copies` copies of `value` transferred from beta to alpha.
struct PartMove {
    int value;
    int copies;
    friend bool operator==(const PartMove&, const PartMove&) = default;
};

/// Keeps every copy of the largest part of beta.
PartitionPair psi_pair(const Partition& alpha, const Partition& beta, int r,
                       std::vector<PartMove>* moves = nullptr);
/// Keeps every copy of the smallest part of beta.
PartitionPair phi_pair(const Partition& alpha, const Partition& beta, int r,
                       std::vector<PartMove>* moves = nullptr);

// Codomain checkers, written without reference to the maps.

/// alpha is (r+1)-strict; for nonempty beta the largest part's multiplicity is
/// not divisible by r+1 and every other multiplicity is. Colored beta is rejected.
bool in_gamma_codomain(const PartitionPair& pair, int r);
/// Either a gamma codomain pair with nonempty beta, or (alpha (r+1)-strict,
/// colored empty with color in 1..r).
bool in_gamma_star_codomain(const PartitionPair& pair, int r);
/// Codomain of the recast sum-of-mex identity: alpha (r+1)-strict; beta is a
/// colored empty (1..r) or a nonempty partition whose parts all share one
/// nonzero residue mod r+1.
bool in_mex_sum_codomain(const PartitionPair& pair, int r);
/// alpha is (r+1)-strict; every part of beta above its smallest part has
/// multiplicity divisible by r+1.
bool in_delta_codomain(const PartitionPair& pair, int r);

// Domain bounds for the indexed maps.

/// mex_r + omega_r.
int gamma_index_bound(const Partition& lambda, int r);
/// mex_r + r - 1.
int gamma_star_index_bound(const Partition& lambda, int r);
/// largest part - maex_r + Omega_r.
int delta_index_bound(const Partition& lambda, int r);

/// How an indexed map handled its input.
enum class MapCase {
    gamma_zero,        // lambda in P_r^0, i <= mex
    gamma_plus_low,    // lambda in P_r^+, i <= mex - 1
    gamma_plus_keep,   // lambda in P_r^+, mex <= i, largest beta multiplicity already nonzero mod r+1
    gamma_plus_shift,  // lambda in P_r^+, mex <= i, extra copies of G(lambda) moved to alpha
    gamma_star_color,  // lambda in P_r^0, i >= mex: colored empty beta
    delta,
};

std::string to_string(MapCase c);

/// Intermediate data of one evaluation of gamma, gamma_star or delta.
struct MapTrace {
    std::string map;
    IndexedPartition input;
    int r = 1;
    MapCase which = MapCase::gamma_zero;
    Partition conjugate;
    int cut_index = 0;
    /// Moves made by the pair operator.
    std::vector<PartMove> moves;
    /// Extra copies of G(lambda) moved in the shifting case; 0 otherwise.
    int shifted_copies = 0;
    PartitionPair output;
};

MapTrace trace_gamma(const Partition& lambda, int i, int r);
MapTrace trace_gamma_star(const Partition& lambda, int i, int r);
MapTrace trace_delta(const Partition& lambda, int i, int r);

/// Requires 1 <= i <= gamma_index_bound(lambda, r).
PartitionPair gamma(const Partition& lambda, int i, int r);
/// Requires in_gamma_codomain(pair, r).
IndexedPartition gamma_inv(const PartitionPair& pair, int r);

/// Requires 1 <= i <= gamma_star_index_bound(lambda, r). Beta is emitted in
/// the same orientation as gamma; see to_mex_sum_orientation.
PartitionPair gamma_star(const Partition& lambda, int i, int r);
/// Requires in_gamma_star_codomain(pair, r).
IndexedPartition gamma_star_inv(const PartitionPair& pair, int r);
/// Conjugates a nonempty beta, mapping the gamma_star codomain onto the
/// in_mex_sum_codomain set. Colored empties pass through unchanged.
PartitionPair to_mex_sum_orientation(const PartitionPair& pair);

/// Requires 1 <= i <= delta_index_bound(lambda, r).
PartitionPair delta(const Partition& lambda, int i, int r);
/// Requires in_delta_codomain(pair, r).
IndexedPartition delta_inv(const PartitionPair& pair, int r);

} // namespace rchain
