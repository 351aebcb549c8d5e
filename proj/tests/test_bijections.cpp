#include <gtest/gtest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "rchain/bijections.hpp"

using namespace rchain;

namespace {

Partition P(std::initializer_list<int> parts) { return Partition::from_parts(parts); }
Partition P(const oracle::Parts& parts) { return Partition::from_parts(parts); }

// Merge r equal parts until no value repeats r times (vector version).
oracle::Parts merge_oracle(oracle::Parts parts, int r)
{
    std::map<int, int, std::greater<>> mult;
    for (int v : parts)
        ++mult[v];
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& [v, m] : mult)
            if (m >= r) {
                m -= r;
                ++mult[v * r];
                changed = true;
                break;
            }
    }
    oracle::Parts out;
    for (const auto& [v, m] : mult)
        out.insert(out.end(), static_cast<std::size_t>(m), v);
    return out;
}

// Move (multiplicity mod r+1) copies of every beta value except `kept`.
std::pair<oracle::Parts, oracle::Parts> pair_move_oracle(oracle::Parts alpha, const oracle::Parts& beta, int r,
                                                         int kept)
{
    std::map<int, int> mult;
    for (int v : beta)
        ++mult[v];
    oracle::Parts rest;
    for (const auto& [v, m] : mult) {
        const int moved = v == kept ? 0 : m % (r + 1);
        alpha.insert(alpha.end(), static_cast<std::size_t>(moved), v);
        rest.insert(rest.end(), static_cast<std::size_t>(m - moved), v);
    }
    std::sort(alpha.rbegin(), alpha.rend());
    std::sort(rest.rbegin(), rest.rend());
    return {alpha, rest};
}

bool strict_below(const Partition& p, int bound)
{
    for (const auto& b : p.blocks())
        if (b.multiplicity >= bound)
            return false;
    return true;
}

} // namespace

TEST(Glaisher, WorkedExample)
{
    EXPECT_EQ(glaisher_f(P({7, 1, 1, 1, 1}), 3), P({7, 3, 1}));
    EXPECT_EQ(glaisher_f_inv(P({7, 3, 1}), 3), P({7, 1, 1, 1, 1}));
    EXPECT_EQ(glaisher_f(Partition{}, 3), Partition{});
}

TEST(Glaisher, Contracts)
{
    EXPECT_THROW(glaisher_f(P({6, 1}), 3), ContractError);
    EXPECT_THROW(glaisher_f_inv(P({1, 1, 1}), 3), ContractError);
    EXPECT_THROW(glaisher_f(P({1}), 1), ContractError);
}

TEST(Glaisher, MatchesMergeOracle)
{
    for (int r = 2; r <= 4; ++r)
        for (int n = 0; n <= 18; ++n)
            for (const auto& parts : oracle::partitions(n)) {
                const Partition p = P(parts);
                if (!is_r_regular(p, r))
                    continue;
                const Partition image = glaisher_f(p, r);
                EXPECT_EQ(image.parts(), merge_oracle(parts, r));
                EXPECT_TRUE(is_r_strict(image, r));
                EXPECT_EQ(glaisher_f_inv(image, r), p);
            }
}

TEST(Phi, WorkedExampleTrace)
{
    const Partition pi = P({9, 7, 6, 6, 6, 1, 1, 1, 1});
    const Partition nu = P({7, 4, 4, 4, 4, 4, 4, 3, 1, 1, 1, 1});
    EXPECT_EQ(count_multiples(pi, 3), 4);
    EXPECT_EQ(phi_r(pi, 3), nu);
    EXPECT_EQ(largest_r_repeating(nu, 3), 4);
    EXPECT_EQ(psi_r(nu, 3), pi);
    EXPECT_EQ(phi_r(Partition{}, 3), Partition{});
}

TEST(Phi, RoundTripAndStatisticTransfer)
{
    for (int r = 2; r <= 4; ++r)
        for (int n = 0; n <= 16; ++n)
            for (const auto& parts : oracle::partitions(n)) {
                const Partition p = P(parts);
                const Partition image = phi_r(p, r);
                EXPECT_EQ(image.weight(), n);
                EXPECT_EQ(oracle::largest_repeating(image.parts(), r), oracle::multiples(parts, r));
                EXPECT_EQ(psi_r(image, r), p);
                EXPECT_EQ(phi_r(psi_r(p, r), r), p);
            }
}

TEST(CapPhi, Examples)
{
    EXPECT_EQ(cap_phi_r(P({6, 1}), 3), P({1, 1, 1, 1, 1, 1, 1}));
    EXPECT_EQ(smallest_r_repeating(P({1, 1, 1, 1, 1, 1, 1}), 3), 1);
    EXPECT_THROW(cap_phi_r(P({5, 1}), 3), ContractError);
    EXPECT_THROW(cap_psi_r(P({5, 1}), 3), ContractError);

    // The five partitions of 7 whose largest multiple of 3 occurs once map onto
    // the five whose smallest 3-repeating part is 1.
    std::set<Partition> images;
    for (const auto& p : enumerate(7))
        if (mult_of_largest_multiple(p, 3) == 1)
            images.insert(cap_phi_r(p, 3));
    const std::set<Partition> expected{P({4, 1, 1, 1}), P({3, 1, 1, 1, 1}), P({2, 2, 1, 1, 1}),
                                       P({2, 1, 1, 1, 1, 1}), P({1, 1, 1, 1, 1, 1, 1})};
    EXPECT_EQ(images, expected);
}

TEST(CapPhi, RoundTripAndStatisticTransfer)
{
    for (int r = 2; r <= 4; ++r)
        for (int n = 1; n <= 16; ++n)
            for (const auto& parts : oracle::partitions(n)) {
                const Partition p = P(parts);
                const int j = oracle::largest_multiple_count(parts, r);
                if (j > 0) {
                    const Partition image = cap_phi_r(p, r);
                    EXPECT_EQ(oracle::smallest_repeating(image.parts(), r), j);
                    EXPECT_EQ(cap_psi_r(image, r), p);
                }
                if (oracle::smallest_repeating(parts, r) > 0)
                    EXPECT_EQ(cap_phi_r(cap_psi_r(p, r), r), p);
            }
}

TEST(PairOperators, Examples)
{
    EXPECT_EQ(psi_pair(Partition{}, Partition{}, 2), PartitionPair(Partition{}, Partition{}));
    EXPECT_EQ(phi_pair(Partition{}, Partition{}, 2), PartitionPair(Partition{}, Partition{}));
    std::vector<PartMove> moves;
    EXPECT_EQ(psi_pair(Partition{}, P({3, 3, 3, 2, 2, 1}), 1, &moves), PartitionPair(P({1}), P({3, 3, 3, 2, 2})));
    EXPECT_EQ(moves, (std::vector<PartMove>{{1, 1}}));
    EXPECT_EQ(phi_pair(Partition{}, P({3, 3, 2, 1}), 1), PartitionPair(P({2}), P({3, 3, 1})));
}

// Both operators against a direct re-implementation, plus the structural
// guarantees used by the indexed maps, on every cut of every partition.
TEST(PairOperators, MatchOracleAndKeepStructure)
{
    for (int r = 1; r <= 3; ++r)
        for (int n = 0; n <= 14; ++n)
            for (const auto& parts : oracle::partitions(n)) {
                const Partition lambda = P(parts);
                for (int i = 1; i <= lambda.num_parts() + 1; ++i) {
                    const Partition alpha = cut_up(lambda, i), beta = cut_down(lambda, i);
                    const auto psi = psi_pair(alpha, beta, r);
                    const auto phi = phi_pair(alpha, beta, r);
                    const auto psi_expect = pair_move_oracle(alpha.parts(), beta.parts(), r, beta.largest_part());
                    const int smallest = beta.empty() ? 0 : *beta.smallest_part();
                    const auto phi_expect = pair_move_oracle(alpha.parts(), beta.parts(), r, smallest);
                    EXPECT_EQ(psi.alpha.parts(), psi_expect.first);
                    EXPECT_EQ(psi.beta_partition().parts(), psi_expect.second);
                    EXPECT_EQ(phi.alpha.parts(), phi_expect.first);
                    EXPECT_EQ(phi.beta_partition().parts(), phi_expect.second);

                    if (strict_below(alpha, r + 1))
                        EXPECT_TRUE(strict_below(psi.alpha, r + 1));
                    const auto& pb = psi.beta_partition().blocks();
                    for (std::size_t k = 1; k < pb.size(); ++k)
                        EXPECT_EQ(pb[k].multiplicity % (r + 1), 0);
                    const auto& fb = phi.beta_partition().blocks();
                    for (std::size_t k = 0; k + 1 < fb.size(); ++k)
                        EXPECT_EQ(fb[k].multiplicity % (r + 1), 0);
                }
            }
}

TEST(Gamma, TrivialCases)
{
    EXPECT_EQ(gamma(Partition{}, 1, 2), PartitionPair(Partition{}, Partition{}));
    EXPECT_EQ(gamma_inv(PartitionPair(Partition{}, Partition{}), 2), (IndexedPartition{Partition{}, 1}));
    EXPECT_THROW(gamma(Partition{}, 2, 1), ContractError);
    EXPECT_THROW(gamma(P({3, 1}), 0, 1), ContractError);
    EXPECT_THROW(gamma_inv(PartitionPair(P({1, 1}), Partition{}), 1), ContractError);
    EXPECT_THROW(gamma_inv(PartitionPair(Partition{}, ColoredEmpty{1}), 1), ContractError);
}

TEST(Gamma, DomainSizeMatchesCodomainAtFour)
{
    // r = 1, n = 4: sum of mex (omega_1 is 0) against pairs (alpha distinct,
    // beta with odd top multiplicity and even others), both counted directly.
    int domain = 0;
    for (const auto& parts : oracle::partitions(4))
        domain += oracle::mex(parts, 1);
    int codomain = 0;
    for (int a = 0; a <= 4; ++a)
        for (const auto& alpha : oracle::partitions(a))
            for (const auto& beta : oracle::partitions(4 - a)) {
                const PartitionPair pair(P(alpha), P(beta));
                if (in_gamma_codomain(pair, 1))
                    ++codomain;
            }
    EXPECT_EQ(domain, codomain);
    int images = 0;
    for (const auto& p : enumerate(4))
        images += gamma_index_bound(p, 1);
    EXPECT_EQ(images, domain);
}

TEST(Gamma, TraceOfExample)
{
    const MapTrace t = trace_gamma(P({5, 3, 1}), 2, 2);
    EXPECT_EQ(t.conjugate, P({3, 2, 2, 1, 1}));
    EXPECT_EQ(t.cut_index, 2);
    EXPECT_EQ(t.output, gamma(P({5, 3, 1}), 2, 2));
    EXPECT_TRUE(in_gamma_codomain(t.output, 2));
}

// Exhaustive bijectivity checks sit in the verification tests; here a
// spread of inputs exercises every case label of the indexed maps.
TEST(IndexedMaps, EveryCaseOccurs)
{
    std::set<MapCase> seen;
    for (int r = 1; r <= 3; ++r)
        for (int n = 0; n <= 10; ++n)
            for (const auto& lambda : enumerate(n)) {
                for (int i = 1; i <= gamma_index_bound(lambda, r); ++i) {
                    const MapTrace t = trace_gamma(lambda, i, r);
                    seen.insert(t.which);
                    EXPECT_EQ(gamma_inv(t.output, r), (IndexedPartition{lambda, i}));
                }
                for (int i = 1; i <= gamma_star_index_bound(lambda, r); ++i) {
                    const MapTrace t = trace_gamma_star(lambda, i, r);
                    seen.insert(t.which);
                    EXPECT_TRUE(in_gamma_star_codomain(t.output, r));
                    EXPECT_TRUE(in_mex_sum_codomain(to_mex_sum_orientation(t.output), r));
                    EXPECT_EQ(gamma_star_inv(t.output, r), (IndexedPartition{lambda, i}));
                }
                for (int i = 1; i <= delta_index_bound(lambda, r); ++i) {
                    const MapTrace t = trace_delta(lambda, i, r);
                    seen.insert(t.which);
                    EXPECT_TRUE(in_delta_codomain(t.output, r));
                    EXPECT_EQ(delta_inv(t.output, r), (IndexedPartition{lambda, i}));
                }
            }
    for (MapCase c : {MapCase::gamma_zero, MapCase::gamma_plus_low, MapCase::gamma_plus_keep,
                      MapCase::gamma_plus_shift, MapCase::gamma_star_color, MapCase::delta})
        EXPECT_TRUE(seen.count(c)) << to_string(c);
}

TEST(GammaStar, EmptyInputGivesColors)
{
    for (int r = 1; r <= 4; ++r) {
        EXPECT_EQ(gamma_star_index_bound(Partition{}, r), r);
        for (int i = 1; i <= r; ++i) {
            EXPECT_EQ(gamma_star(Partition{}, i, r), PartitionPair(Partition{}, ColoredEmpty{i}));
            EXPECT_EQ(gamma_star_inv(PartitionPair(Partition{}, ColoredEmpty{i}), r),
                      (IndexedPartition{Partition{}, i}));
        }
    }
    EXPECT_THROW(gamma_star_inv(PartitionPair(Partition{}, ColoredEmpty{3}), 2), ContractError);
}

TEST(Delta, TrivialCases)
{
    EXPECT_EQ(delta_index_bound(Partition{}, 2), 1);
    EXPECT_EQ(delta(Partition{}, 1, 2), PartitionPair(Partition{}, Partition{}));
    EXPECT_EQ(delta_inv(PartitionPair(Partition{}, Partition{}), 2), (IndexedPartition{Partition{}, 1}));
    EXPECT_THROW(delta(P({2}), 4, 1), ContractError);
}

TEST(Codomains, CheckersAgainstDefinitions)
{
    EXPECT_TRUE(in_gamma_codomain(PartitionPair(P({3, 1}), P({2, 1, 1})), 1));
    EXPECT_FALSE(in_gamma_codomain(PartitionPair(P({3, 1}), P({2, 2, 1})), 1));
    EXPECT_FALSE(in_gamma_codomain(PartitionPair(P({1, 1}), Partition{}), 1));
    EXPECT_TRUE(in_delta_codomain(PartitionPair(Partition{}, P({2, 2, 1})), 1));
    EXPECT_FALSE(in_delta_codomain(PartitionPair(Partition{}, P({2, 1, 1})), 1));
    EXPECT_TRUE(in_mex_sum_codomain(PartitionPair(Partition{}, P({4, 1})), 2));
    EXPECT_FALSE(in_mex_sum_codomain(PartitionPair(Partition{}, P({3})), 2));
    EXPECT_FALSE(in_mex_sum_codomain(PartitionPair(Partition{}, P({4, 2})), 2));
    EXPECT_TRUE(in_gamma_star_codomain(PartitionPair(P({2}), ColoredEmpty{2}), 2));
    EXPECT_FALSE(in_gamma_star_codomain(PartitionPair(P({2}), Partition{}), 2));
}
