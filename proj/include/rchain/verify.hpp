#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rchain/checked.hpp"

namespace rchain {

/// Statistics summed over all partitions of n by sigma_stat.
enum class Stat {
    mex_r,                    // mex_r
    mex_r_plus_omega,         // mex_r + omega_r
    mex_r_plus_rm1,           // mex_r + r - 1
    ell_minus_maex_plus_omega, // largest - maex_r + Omega_r
    sigma_L,                  // largest part
    sigma_maex,               // maex_1, the classical maximal excludant
    ell_minus_maex,           // largest - maex_1
    maex_minus_omega,         // maex_r - Omega_r
};

/// Exact sum of the statistic over every partition of n.
/// Uses only partition-core primitives.
Integer sigma_stat(int n, int r, Stat stat);

/// Partition families counted by count_family, for a given r and j.
enum class Family {
    E,          // exactly j parts divisible by r
    L,          // largest r-repeating part is j (0: none)
    H,          // largest multiple of r occurs exactly j times
    S,          // smallest r-repeating part is j
    mex_above,  // j parts greater than the (r-1)-chain mex
    maex_above, // in P_{r-1}^+ with j parts greater than the (r-1)-chain maex
};

std::string to_string(Family f);

/// Number of partitions of n in the family. Requires r >= 2 and j >= 0
/// (j >= 1 for H, S and maex_above).
Integer count_family(int n, int r, int j, Family family);

/// One comparison at a single n.
struct VerificationRecord {
    int r = 0;
    std::optional<int> j;
    int n = 0;
    Integer lhs = 0;
    Integer rhs = 0;
    /// Further named values: extra counts that must equal lhs, or, for
    /// bijection certificates, failure counters that must be zero.
    std::vector<std::pair<std::string, Integer>> aux;
    /// Free-form qualifier, e.g. the specialization a row belongs to.
    std::string tag;
    bool match = false;
};

struct VerificationReport {
    std::string check;
    std::string lhs_label;
    std::string rhs_label;
    std::vector<int> r_values;
    std::vector<int> j_values;
    int n_min = 0;
    int n_max = 0;
    std::vector<VerificationRecord> records;
    double wall_time_ms = 0.0;

    bool passed() const;
    std::size_t mismatches() const;
};

/// Identity checks, each with a canonical name and one alias.
enum class Check {
    sigma_mex,              // sum of mex vs (-q;q)_inf^2
    multiples_repeating,    // three-way count: E, L, mex_above
    mex_sum_shifted,        // sum (mex_r + r - 1) vs product form
    mex_sum_omega,          // sum (mex_r + omega_r) vs bracket form
    sigma_maex,             // sum (largest - maex) vs classical maex series
    multiple_run_repeating, // three-way count H, S, maex_above vs j-parts series
    maex_sum,               // sum (largest - maex_r + Omega_r) vs sum and product forms
    q_binomial,             // q-binomial theorem specializations
    maex_bivariate,         // bivariate maex series vs |P_r^+(m, n)|
    maex_chain_endpoints,   // sigma_L - sum(maex_r - Omega_r) vs maex_sum series
};

/// Bijection certificates.
enum class MapId { glaisher, phi, cap_phi, gamma, gamma_star, delta };

std::string to_string(Check c);
std::string to_string(MapId m);
/// Accepts the canonical name or an alias; empty on unknown names.
std::optional<Check> parse_check(std::string_view name);
std::optional<MapId> parse_map(std::string_view name);

struct CheckParams {
    std::vector<int> r_values;
    std::vector<int> j_values;
    int n_max = 0;
    /// Series order where a check compares series against series.
    int order = 60;
};

/// Default parameters for a check (the ranges its identity is verified over).
CheckParams default_params(Check c);
CheckParams default_params(MapId m);

VerificationReport check_theorem(Check c, const CheckParams& params);

/// For every input of weight <= n_max: the forward image passes the
/// codomain checker, inverse(forward(x)) == x, forward(inverse(y)) == y on
/// an independently enumerated codomain, and domain and codomain sizes agree.
/// Records one row per (r, n) with lhs = domain size, rhs = codomain size and
/// failure counters in aux.
VerificationReport certify_bijection(MapId m, const std::vector<int>& r_values, int n_max);

} // namespace rchain
