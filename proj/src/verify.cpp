#include "rchain/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <map>
#include <set>
#include <stdexcept>

#include "rchain/bijections.hpp"
#include "rchain/partition.hpp"
#include "rchain/qseries.hpp"

namespace rchain {

namespace {

Integer stat_value(const Partition& p, int r, Stat stat)
{
    switch (stat) {
    case Stat::mex_r:
        return mex_r(p, r);
    case Stat::mex_r_plus_omega:
        return mex_r(p, r) + omega_r(p, r);
    case Stat::mex_r_plus_rm1:
        return mex_r(p, r) + r - 1;
    case Stat::ell_minus_maex_plus_omega:
        return p.largest_part() - maex_r(p, r) + cap_omega_r(p, r);
    case Stat::sigma_L:
        return p.largest_part();
    case Stat::sigma_maex:
        return maex_r(p, 1);
    case Stat::ell_minus_maex:
        return p.largest_part() - maex_r(p, 1);
    case Stat::maex_minus_omega:
        return maex_r(p, r) - cap_omega_r(p, r);
    }
    throw std::logic_error("unknown statistic");
}

bool in_family(const Partition& p, int r, int j, Family family)
{
    switch (family) {
    case Family::E:
        return count_multiples(p, r) == j;
    case Family::L:
        return largest_r_repeating(p, r) == j;
    case Family::H:
        return mult_of_largest_multiple(p, r) == j;
    case Family::S:
        return smallest_r_repeating(p, r) == j;
    case Family::mex_above:
        return count_parts_above(p, mex_r(p, r - 1)) == j;
    case Family::maex_above: {
        const int maex = maex_r(p, r - 1);
        return maex > 0 && count_parts_above(p, maex) == j;
    }
    }
    throw std::logic_error("unknown family");
}

std::vector<int> range(int lo, int hi)
{
    std::vector<int> out;
    for (int v = lo; v <= hi; ++v)
        out.push_back(v);
    return out;
}

class Stopwatch {
public:
    double elapsed_ms() const
    {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

} // namespace

Integer sigma_stat(int n, int r, Stat stat)
{
    require_positive_r(r, "sigma_stat");
    Integer total = 0;
    for_each_partition(n, [&](const Partition& p) { total = checked_add(total, stat_value(p, r, stat)); });
    return total;
}

std::string to_string(Family f)
{
    switch (f) {
    case Family::E:
        return "E";
    case Family::L:
        return "L";
    case Family::H:
        return "H";
    case Family::S:
        return "S";
    case Family::mex_above:
        return "mex_above";
    case Family::maex_above:
        return "maex_above";
    }
    return "unknown";
}

Integer count_family(int n, int r, int j, Family family)
{
    if (r < 2)
        throw ContractError("count_family needs r >= 2, got " + std::to_string(r));
    const bool positive_j = family == Family::H || family == Family::S || family == Family::maex_above;
    if (j < (positive_j ? 1 : 0))
        throw ContractError("count_family(" + to_string(family) + ") needs j >= " + (positive_j ? "1" : "0"));
    Integer count = 0;
    for_each_partition(n, [&](const Partition& p) {
        if (in_family(p, r, j, family))
            ++count;
    });
    return count;
}

bool VerificationReport::passed() const { return mismatches() == 0; }

std::size_t VerificationReport::mismatches() const
{
    return static_cast<std::size_t>(std::ranges::count_if(records, [](const auto& rec) { return !rec.match; }));
}

namespace {

struct CheckName {
    Check check;
    const char* name;
    const char* alias;
};

constexpr std::array check_names{
    CheckName{Check::sigma_mex, "sigma-mex", "thm-1.4"},
    CheckName{Check::multiples_repeating, "multiples-repeating", "thm-1.5"},
    CheckName{Check::mex_sum_shifted, "mex-sum-shifted", "thm-1.6"},
    CheckName{Check::mex_sum_omega, "mex-sum-omega", "thm-1.7"},
    CheckName{Check::sigma_maex, "sigma-maex", "thm-1.8"},
    CheckName{Check::multiple_run_repeating, "multiple-run-repeating", "thm-1.10"},
    CheckName{Check::maex_sum, "maex-sum", "thm-1.11"},
    CheckName{Check::q_binomial, "q-binomial", "q-binomial-theorem"},
    CheckName{Check::maex_bivariate, "maex-bivariate", "przq"},
    CheckName{Check::maex_chain_endpoints, "maex-endpoints", "maex-chain-endpoints"},
};

struct MapName {
    MapId map;
    const char* name;
};

constexpr std::array map_names{
    MapName{MapId::glaisher, "glaisher"}, MapName{MapId::phi, "phi"},
    MapName{MapId::cap_phi, "cap-phi"},   MapName{MapId::gamma, "gamma"},
    MapName{MapId::gamma_star, "gamma-star"}, MapName{MapId::delta, "delta"},
};

} // namespace

std::string to_string(Check c)
{
    for (const auto& entry : check_names)
        if (entry.check == c)
            return entry.name;
    return "unknown";
}

std::string to_string(MapId m)
{
    for (const auto& entry : map_names)
        if (entry.map == m)
            return entry.name;
    return "unknown";
}

std::optional<Check> parse_check(std::string_view name)
{
    for (const auto& entry : check_names)
        if (name == entry.name || name == entry.alias)
            return entry.check;
    return std::nullopt;
}

std::optional<MapId> parse_map(std::string_view name)
{
    for (const auto& entry : map_names)
        if (name == entry.name)
            return entry.map;
    return std::nullopt;
}

CheckParams default_params(Check c)
{
    switch (c) {
    case Check::sigma_mex:
        return {{1}, {}, 40, 60};
    case Check::multiples_repeating:
        return {range(2, 5), range(0, 5), 25, 60};
    case Check::mex_sum_shifted:
    case Check::mex_sum_omega:
    case Check::maex_sum:
    case Check::maex_chain_endpoints:
        return {range(1, 6), {}, 30, 60};
    case Check::sigma_maex:
        return {{1}, {}, 30, 60};
    case Check::multiple_run_repeating:
        return {range(2, 5), range(1, 5), 25, 60};
    case Check::q_binomial:
        return {{}, {}, 60, 60};
    case Check::maex_bivariate:
        return {range(1, 3), {}, 20, 20};
    }
    throw std::logic_error("unknown check");
}

CheckParams default_params(MapId m)
{
    switch (m) {
    case MapId::glaisher:
    case MapId::phi:
    case MapId::cap_phi:
        return {range(2, 4), {}, 20, 0};
    case MapId::gamma:
    case MapId::gamma_star:
    case MapId::delta:
        return {range(1, 3), {}, 16, 0};
    }
    throw std::logic_error("unknown map");
}

namespace {

VerificationRecord make_record(int r, std::optional<int> j, int n, Integer lhs, Integer rhs)
{
    VerificationRecord rec;
    rec.r = r;
    rec.j = j;
    rec.n = n;
    rec.lhs = lhs;
    rec.rhs = rhs;
    rec.match = lhs == rhs;
    return rec;
}

// Sum of a statistic against one series coefficient, over every r and n.
template <typename SeriesFor>
void sum_vs_series(VerificationReport& report, const CheckParams& params, Stat stat, SeriesFor series_for)
{
    for (int r : params.r_values) {
        const PowerSeries series = series_for(r, params.n_max);
        for (int n = 0; n <= params.n_max; ++n)
            report.records.push_back(make_record(r, std::nullopt, n, sigma_stat(n, r, stat), series.coeff(n)));
    }
}

void three_way_families(VerificationReport& report, const CheckParams& params, bool largest_multiple_run)
{
    // One enumeration per n; each family is a histogram over j.
    for (int r : params.r_values) {
        std::map<int, PowerSeries> series;
        if (largest_multiple_run)
            for (int j : params.j_values)
                series.emplace(j, gf_j_parts(r, j, params.n_max));
        for (int n = 0; n <= params.n_max; ++n) {
            std::map<int, Integer> first, second, third;
            for_each_partition(n, [&](const Partition& p) {
                if (largest_multiple_run) {
                    ++first[mult_of_largest_multiple(p, r)];
                    ++second[smallest_r_repeating(p, r)];
                    const int maex = maex_r(p, r - 1);
                    if (maex > 0)
                        ++third[count_parts_above(p, maex)];
                } else {
                    ++first[count_multiples(p, r)];
                    ++second[largest_r_repeating(p, r)];
                    ++third[count_parts_above(p, mex_r(p, r - 1))];
                }
            });
            for (int j : params.j_values) {
                const Integer a = first[j], b = second[j], c = third[j];
                if (largest_multiple_run) {
                    auto rec = make_record(r, j, n, a, series.at(j).coeff(n));
                    rec.aux = {{"S", b}, {"maex_above", c}};
                    rec.match = rec.match && a == b && a == c;
                    report.records.push_back(std::move(rec));
                } else {
                    auto rec = make_record(r, j, n, a, b);
                    rec.aux = {{"mex_above", c}};
                    rec.match = rec.match && a == c;
                    report.records.push_back(std::move(rec));
                }
            }
        }
    }
}

std::string describe(std::optional<QMonomial> a)
{
    if (!a)
        return "0";
    std::string out = a->sign < 0 ? "-" : "";
    if (a->exponent == 0)
        return out + "1";
    return out + "q^" + std::to_string(a->exponent);
}

void q_binomial_records(VerificationReport& report, const CheckParams& params)
{
    struct Specialization {
        std::optional<QMonomial> a;
        int z_exponent;
    };
    const std::vector<Specialization> cases{
        {std::nullopt, 1},   {std::nullopt, 2},     {QMonomial{1, 1}, 1}, {QMonomial{-1, 1}, 2},
        {QMonomial{1, 2}, 3}, {QMonomial{-1, 3}, 1}, {QMonomial{1, 0}, 1}, {QMonomial{-1, 0}, 1},
    };
    for (const auto& c : cases) {
        const auto sides = q_binomial_sides(c.a, c.z_exponent, params.order);
        for (int n = 0; n <= params.order; ++n) {
            auto rec = make_record(0, std::nullopt, n, sides.lhs.coeff(n), sides.rhs.coeff(n));
            rec.aux = {{"z_exponent", c.z_exponent}};
            rec.tag = "a=" + describe(c.a) + " z=q^" + std::to_string(c.z_exponent);
            report.records.push_back(std::move(rec));
        }
    }
}

void maex_bivariate_records(VerificationReport& report, const CheckParams& params)
{
    const int top = params.n_max;
    for (int r : params.r_values) {
        // maex < largest part <= n, so a z-box of size n_max is exact.
        const BivariateSeries closed = przq(r, top, top);
        const BivariateSeries double_sum = przq_double_sum(r, top, top);
        const PowerSeries column = closed.at_z_one();
        for (int n = 0; n <= top; ++n) {
            std::vector<Integer> by_maex(static_cast<std::size_t>(top) + 1, 0);
            Integer plus_total = 0;
            for_each_partition(n, [&](const Partition& p) {
                const int m = maex_r(p, r);
                if (m > 0) {
                    ++by_maex[static_cast<std::size_t>(m)];
                    ++plus_total;
                }
            });
            for (int m = 0; m <= top; ++m) {
                // zero-maex partitions are not in P_r^+, so their count is 0 here
                auto rec = make_record(r, m, n, by_maex[static_cast<std::size_t>(m)], closed.coeff(m, n));
                rec.aux = {{"double_sum", double_sum.coeff(m, n)}};
                rec.match = rec.match && rec.lhs == double_sum.coeff(m, n);
                report.records.push_back(std::move(rec));
            }
            auto total = make_record(r, std::nullopt, n, plus_total, column.coeff(n));
            total.tag = "z=1";
            report.records.push_back(std::move(total));
        }
    }
}

} // namespace

VerificationReport check_theorem(Check c, const CheckParams& params)
{
    const Stopwatch clock;
    VerificationReport report;
    report.check = to_string(c);
    report.r_values = params.r_values;
    report.j_values = params.j_values;
    report.n_max = params.n_max;
    if (params.n_max < 0)
        throw ContractError("n_max must be >= 0");
    const auto require_r_from = [&](int lowest) {
        for (int r : params.r_values)
            if (r < lowest)
                throw ContractError(report.check + " needs r >= " + std::to_string(lowest));
    };
    const auto require_j_from = [&](int lowest) {
        for (int j : params.j_values)
            if (j < lowest)
                throw ContractError(report.check + " needs j >= " + std::to_string(lowest));
    };

    switch (c) {
    case Check::sigma_mex:
        report.lhs_label = "sum of mex";
        report.rhs_label = "(-q;q)_inf^2";
        report.r_values = {1};
        sum_vs_series(report, {{1}, {}, params.n_max, params.order}, Stat::mex_r,
                      [](int, int order) { return gf_sigma_mex(order); });
        break;
    case Check::multiples_repeating:
        require_r_from(2);
        require_j_from(0);
        report.lhs_label = "E (j multiples of r)";
        report.rhs_label = "L (largest r-repeating part j)";
        three_way_families(report, params, false);
        break;
    case Check::mex_sum_shifted:
        require_r_from(1);
        report.lhs_label = "sum of mex_r + r - 1";
        report.rhs_label = "strict-times-residue-class product";
        sum_vs_series(report, params, Stat::mex_r_plus_rm1,
                      [](int r, int order) { return gf_mex_sum_shifted_rhs(r, order); });
        break;
    case Check::mex_sum_omega:
        require_r_from(1);
        report.lhs_label = "sum of mex_r + omega_r";
        report.rhs_label = "strict-times-bracket series";
        sum_vs_series(report, params, Stat::mex_r_plus_omega,
                      [](int r, int order) { return gf_mexr2_rhs(r, order); });
        break;
    case Check::sigma_maex:
        report.lhs_label = "sigma L - sigma maex";
        report.rhs_label = "sum q^n (q^2;q^2)_{n-1} / (q;q)_inf";
        report.r_values = {1};
        sum_vs_series(report, {{1}, {}, params.n_max, params.order}, Stat::ell_minus_maex,
                      [](int, int order) { return gf_max1_rhs(order); });
        break;
    case Check::multiple_run_repeating:
        require_r_from(2);
        require_j_from(1);
        report.lhs_label = "H (largest multiple of r occurs j times)";
        report.rhs_label = "j-parts series";
        three_way_families(report, params, true);
        break;
    case Check::maex_sum: {
        require_r_from(1);
        report.lhs_label = "sum of largest - maex_r + Omega_r";
        report.rhs_label = "sum-form series";
        for (int r : params.r_values) {
            const int order = std::max(params.n_max, params.order);
            const PowerSeries sum_form = gf_maxr1_rhs(r, order);
            const PowerSeries product_form = gf_maxr1_product(r, order);
            for (int n = 0; n <= params.n_max; ++n) {
                auto rec = make_record(r, std::nullopt, n, sigma_stat(n, r, Stat::ell_minus_maex_plus_omega),
                                       sum_form.coeff(n));
                rec.aux = {{"product_form", product_form.coeff(n)}};
                rec.match = rec.match && rec.lhs == product_form.coeff(n);
                report.records.push_back(std::move(rec));
            }
            // Beyond n_max only the two series forms are compared.
            for (int n = params.n_max + 1; n <= order; ++n) {
                auto rec = make_record(r, std::nullopt, n, sum_form.coeff(n), product_form.coeff(n));
                rec.tag = "series-only";
                report.records.push_back(std::move(rec));
            }
        }
        break;
    }
    case Check::q_binomial:
        report.lhs_label = "sum (a;q)_n z^n / (q;q)_n";
        report.rhs_label = "(az;q)_inf / (z;q)_inf";
        report.r_values = {};
        report.n_max = params.order;
        q_binomial_records(report, params);
        break;
    case Check::maex_bivariate:
        require_r_from(1);
        report.lhs_label = "#{lambda in P_r^+(n) : maex_r = j}";
        report.rhs_label = "bivariate closed form";
        maex_bivariate_records(report, params);
        break;
    case Check::maex_chain_endpoints:
        require_r_from(1);
        report.lhs_label = "sigma L series - enumerated sum of (maex_r - Omega_r)";
        report.rhs_label = "sum-form series";
        for (int r : params.r_values) {
            const PowerSeries sigma_l = gf_sigma_L(params.n_max);
            const PowerSeries target = gf_maxr1_rhs(r, params.n_max);
            for (int n = 0; n <= params.n_max; ++n)
                report.records.push_back(make_record(
                    r, std::nullopt, n, checked_sub(sigma_l.coeff(n), sigma_stat(n, r, Stat::maex_minus_omega)),
                    target.coeff(n)));
        }
        break;
    }
    report.wall_time_ms = clock.elapsed_ms();
    return report;
}

namespace {

struct Tally {
    Integer domain = 0;
    Integer codomain = 0;
    Integer membership_failures = 0;
    Integer forward_roundtrip_failures = 0;
    Integer inverse_roundtrip_failures = 0;
    Integer duplicate_images = 0;
    std::vector<std::pair<std::string, Integer>> extra;
    bool extra_ok = true;

    VerificationRecord record(int r, int n) const
    {
        auto rec = make_record(r, std::nullopt, n, domain, codomain);
        rec.aux = {{"membership_failures", membership_failures},
                   {"forward_roundtrip_failures", forward_roundtrip_failures},
                   {"inverse_roundtrip_failures", inverse_roundtrip_failures},
                   {"duplicate_images", duplicate_images}};
        rec.aux.insert(rec.aux.end(), extra.begin(), extra.end());
        rec.match = domain == codomain && membership_failures == 0 && forward_roundtrip_failures == 0 &&
                    inverse_roundtrip_failures == 0 && duplicate_images == 0 && extra_ok;
        return rec;
    }
};

// Glaisher and the two multiplicity-splitting maps act on single partitions.
// `fiber_in` and `fiber_out` give the j a partition belongs to on each side
// (nullopt: outside the domain/codomain); forward images must keep j.
template <typename Fwd, typename Inv, typename FiberIn, typename FiberOut>
Tally certify_partition_map(int n, Fwd forward, Inv inverse, FiberIn fiber_in, FiberOut fiber_out)
{
    Tally t;
    const auto all = enumerate(n);
    std::map<int, Integer> domain_fibers, codomain_fibers;
    std::set<Partition> images;
    for (const auto& x : all) {
        const auto j = fiber_in(x);
        if (!j)
            continue;
        ++t.domain;
        ++domain_fibers[*j];
        const Partition y = forward(x);
        if (y.weight() != x.weight() || fiber_out(y) != j)
            ++t.membership_failures;
        if (inverse(y) != x)
            ++t.forward_roundtrip_failures;
        if (!images.insert(y).second)
            ++t.duplicate_images;
    }
    for (const auto& y : all) {
        const auto j = fiber_out(y);
        if (!j)
            continue;
        ++t.codomain;
        ++codomain_fibers[*j];
        const Partition x = inverse(y);
        if (x.weight() != y.weight() || fiber_in(x) != j)
            ++t.membership_failures;
        if (forward(x) != y)
            ++t.inverse_roundtrip_failures;
    }
    Integer fiber_mismatches = 0;
    for (const auto& [j, count] : domain_fibers)
        if (codomain_fibers[j] != count)
            ++fiber_mismatches;
    for (const auto& [j, count] : codomain_fibers)
        if (domain_fibers[j] != count)
            ++fiber_mismatches;
    t.extra = {{"fiber_mismatches", fiber_mismatches}};
    t.extra_ok = fiber_mismatches == 0;
    return t;
}

// Pairs (alpha, beta) of total weight n, alpha (r+1)-strict and beta accepted by beta_ok.
template <typename BetaOk>
std::vector<PartitionPair> enumerate_pairs(int n, int r, BetaOk beta_ok)
{
    std::vector<PartitionPair> out;
    for (int a = 0; a <= n; ++a) {
        const auto alphas = enumerate(a, filters::r_strict(r + 1));
        const auto betas = enumerate(n - a);
        for (const auto& alpha : alphas)
            for (const auto& beta : betas)
                if (beta_ok(beta))
                    out.emplace_back(alpha, beta);
    }
    return out;
}

bool multiplicities_fit_m(const Partition& beta, int r)
{
    // largest part's multiplicity nonzero mod r+1, all others zero mod r+1
    const auto& blocks = beta.blocks();
    for (std::size_t i = 0; i < blocks.size(); ++i)
        if ((blocks[i].multiplicity % (r + 1) == 0) == (i == 0))
            return false;
    return true;
}

bool multiplicities_fit_w(const Partition& beta, int r)
{
    const auto& blocks = beta.blocks();
    for (std::size_t i = 0; i + 1 < blocks.size(); ++i)
        if (blocks[i].multiplicity % (r + 1) != 0)
            return false;
    return true;
}

bool single_nonzero_residue(const Partition& beta, int r)
{
    if (beta.empty())
        return false;
    const int residue = beta.largest_part() % (r + 1);
    return residue != 0 && std::ranges::all_of(beta.blocks(), [&](const auto& b) { return b.value % (r + 1) == residue; });
}

template <typename Fwd, typename Inv, typename Bound, typename InCodomain>
Tally certify_indexed_map(int n, int r, const std::vector<PartitionPair>& codomain, Fwd forward, Inv inverse,
                          Bound bound, InCodomain in_codomain)
{
    Tally t;
    std::set<PartitionPair> images;
    for_each_partition(n, [&](const Partition& lambda) {
        const int top = bound(lambda, r);
        for (int i = 1; i <= top; ++i) {
            ++t.domain;
            const PartitionPair y = forward(lambda, i, r);
            if (y.weight() != n || !in_codomain(y, r))
                ++t.membership_failures;
            else if (inverse(y, r) != IndexedPartition{lambda, i})
                ++t.forward_roundtrip_failures;
            if (!images.insert(y).second)
                ++t.duplicate_images;
        }
    });
    for (const auto& y : codomain) {
        ++t.codomain;
        const IndexedPartition x = inverse(y, r);
        if (x.lambda.weight() != n || x.index < 1 || x.index > bound(x.lambda, r))
            ++t.membership_failures;
        else if (forward(x.lambda, x.index, r) != y)
            ++t.inverse_roundtrip_failures;
    }
    return t;
}

Tally certify_at(MapId m, int r, int n)
{
    switch (m) {
    case MapId::glaisher:
        return certify_partition_map(
            n, [r](const Partition& p) { return glaisher_f(p, r); },
            [r](const Partition& p) { return glaisher_f_inv(p, r); },
            [r](const Partition& p) { return is_r_regular(p, r) ? std::optional<int>(0) : std::nullopt; },
            [r](const Partition& p) { return is_r_strict(p, r) ? std::optional<int>(0) : std::nullopt; });
    case MapId::phi:
        return certify_partition_map(
            n, [r](const Partition& p) { return phi_r(p, r); }, [r](const Partition& p) { return psi_r(p, r); },
            [r](const Partition& p) { return std::optional<int>(count_multiples(p, r)); },
            [r](const Partition& p) { return std::optional<int>(largest_r_repeating(p, r)); });
    case MapId::cap_phi:
        return certify_partition_map(
            n, [r](const Partition& p) { return cap_phi_r(p, r); },
            [r](const Partition& p) { return cap_psi_r(p, r); },
            [r](const Partition& p) {
                const int j = mult_of_largest_multiple(p, r);
                return j > 0 ? std::optional<int>(j) : std::nullopt;
            },
            [r](const Partition& p) {
                const int j = smallest_r_repeating(p, r);
                return j > 0 ? std::optional<int>(j) : std::nullopt;
            });
    case MapId::gamma: {
        const auto codomain = enumerate_pairs(n, r, [r](const Partition& b) { return multiplicities_fit_m(b, r); });
        return certify_indexed_map(
            n, r, codomain, [](const Partition& l, int i, int rr) { return gamma(l, i, rr); },
            [](const PartitionPair& p, int rr) { return gamma_inv(p, rr); }, gamma_index_bound, in_gamma_codomain);
    }
    case MapId::gamma_star: {
        auto codomain = enumerate_pairs(
            n, r, [r](const Partition& b) { return !b.empty() && multiplicities_fit_m(b, r); });
        for (const auto& alpha : enumerate(n, filters::r_strict(r + 1)))
            for (int c = 1; c <= r; ++c)
                codomain.emplace_back(alpha, ColoredEmpty{c});
        Tally t = certify_indexed_map(
            n, r, codomain, [](const Partition& l, int i, int rr) { return gamma_star(l, i, rr); },
            [](const PartitionPair& p, int rr) { return gamma_star_inv(p, rr); }, gamma_star_index_bound,
            in_gamma_star_codomain);

        // The same images, beta conjugated, against the residue-class form.
        Integer mex_sum_codomain = static_cast<Integer>(
            enumerate_pairs(n, r, [r](const Partition& b) { return single_nonzero_residue(b, r); }).size());
        mex_sum_codomain += static_cast<Integer>(enumerate(n, filters::r_strict(r + 1)).size()) * r;
        Integer orientation_failures = 0;
        for (const auto& y : codomain)
            if (!in_mex_sum_codomain(to_mex_sum_orientation(y), r))
                ++orientation_failures;
        t.extra = {{"mex_sum_codomain", mex_sum_codomain}, {"orientation_failures", orientation_failures}};
        t.extra_ok = mex_sum_codomain == t.domain && orientation_failures == 0;
        return t;
    }
    case MapId::delta: {
        const auto codomain = enumerate_pairs(n, r, [r](const Partition& b) { return multiplicities_fit_w(b, r); });
        return certify_indexed_map(
            n, r, codomain, [](const Partition& l, int i, int rr) { return delta(l, i, rr); },
            [](const PartitionPair& p, int rr) { return delta_inv(p, rr); }, delta_index_bound, in_delta_codomain);
    }
    }
    throw std::logic_error("unknown map");
}

} // namespace

VerificationReport certify_bijection(MapId m, const std::vector<int>& r_values, int n_max)
{
    const Stopwatch clock;
    VerificationReport report;
    report.check = "cert-" + to_string(m);
    report.lhs_label = "domain size";
    report.rhs_label = "codomain size";
    report.r_values = r_values;
    report.n_max = n_max;
    const bool partition_map = m == MapId::glaisher || m == MapId::phi || m == MapId::cap_phi;
    for (int r : r_values) {
        if (r < (partition_map ? 2 : 1))
            throw ContractError(report.check + " needs r >= " + (partition_map ? "2" : "1"));
        for (int n = 0; n <= n_max; ++n)
            report.records.push_back(certify_at(m, r, n).record(r, n));
    }
    report.wall_time_ms = clock.elapsed_ms();
    return report;
}

} // namespace rchain
