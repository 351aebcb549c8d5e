#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rchain/partition.hpp"
#include "rchain/report_io.hpp"
#include "rchain/verify.hpp"

using namespace rchain;

TEST(SigmaStat, Examples)
{
    EXPECT_EQ(sigma_stat(3, 1, Stat::mex_r), 6);
    for (int r = 1; r <= 4; ++r)
        EXPECT_EQ(sigma_stat(0, r, Stat::ell_minus_maex_plus_omega), 1);
    EXPECT_EQ(sigma_stat(1, 1, Stat::sigma_L), 1);
    EXPECT_EQ(sigma_stat(0, 1, Stat::sigma_L), 0);
}

TEST(SigmaStat, MatchesOracleSums)
{
    for (int n = 0; n <= 14; ++n)
        for (int r = 1; r <= 3; ++r) {
            Integer mex = 0, maex = 0, largest = 0;
            for (const auto& parts : oracle::partitions(n)) {
                mex += oracle::mex(parts, r);
                maex += oracle::maex(parts, 1);
                largest += oracle::largest(parts);
            }
            EXPECT_EQ(sigma_stat(n, r, Stat::mex_r), mex);
            EXPECT_EQ(sigma_stat(n, r, Stat::sigma_maex), maex);
            EXPECT_EQ(sigma_stat(n, r, Stat::sigma_L), largest);
            EXPECT_EQ(sigma_stat(n, r, Stat::ell_minus_maex), largest - maex);
        }
}

TEST(CountFamily, WorkedExampleIsFive)
{
    EXPECT_EQ(count_family(7, 3, 1, Family::maex_above), 5);
    EXPECT_EQ(count_family(7, 3, 1, Family::S), 5);
    EXPECT_EQ(count_family(7, 3, 1, Family::H), 5);
}

TEST(CountFamily, Contracts)
{
    EXPECT_THROW(count_family(5, 1, 0, Family::E), ContractError);
    EXPECT_THROW(count_family(5, 2, 0, Family::H), ContractError);
    EXPECT_THROW(count_family(5, 2, -1, Family::E), ContractError);
}

TEST(CountFamily, DoubleCountingSumsToPartitionNumber)
{
    const auto p = oracle::partition_numbers(16);
    for (int r = 2; r <= 4; ++r)
        for (int n = 0; n <= 16; ++n) {
            Integer e = 0, l = 0;
            for (int j = 0; j <= n; ++j) {
                e += count_family(n, r, j, Family::E);
                l += count_family(n, r, j, Family::L);
            }
            EXPECT_EQ(e, p[static_cast<std::size_t>(n)]);
            EXPECT_EQ(l, p[static_cast<std::size_t>(n)]);
            EXPECT_EQ(count_family(n, r, 0, Family::E),
                      static_cast<Integer>(enumerate(n, filters::r_regular(r)).size()));
        }
}

TEST(Names, ParseAndPrint)
{
    EXPECT_EQ(parse_check("thm-1.7"), Check::mex_sum_omega);
    EXPECT_EQ(parse_check("mex-sum-omega"), Check::mex_sum_omega);
    EXPECT_EQ(parse_check("thm-1.11"), Check::maex_sum);
    EXPECT_FALSE(parse_check("thm-9.9").has_value());
    EXPECT_EQ(parse_map("gamma-star"), MapId::gamma_star);
    EXPECT_FALSE(parse_map("sigma").has_value());
    for (Check c : {Check::sigma_mex, Check::multiples_repeating, Check::mex_sum_shifted, Check::mex_sum_omega,
                    Check::sigma_maex, Check::multiple_run_repeating, Check::maex_sum, Check::q_binomial,
                    Check::maex_bivariate, Check::maex_chain_endpoints})
        EXPECT_EQ(parse_check(to_string(c)), c);
}

TEST(CheckTheorem, SmallRangesPass)
{
    for (Check c : {Check::sigma_mex, Check::multiples_repeating, Check::mex_sum_shifted, Check::mex_sum_omega,
                    Check::sigma_maex, Check::multiple_run_repeating, Check::maex_sum, Check::q_binomial,
                    Check::maex_bivariate, Check::maex_chain_endpoints}) {
        CheckParams params = default_params(c);
        params.n_max = std::min(params.n_max, 12);
        params.order = 20;
        const auto report = check_theorem(c, params);
        EXPECT_TRUE(report.passed()) << report.check;
        EXPECT_FALSE(report.records.empty()) << report.check;
    }
}

TEST(CheckTheorem, ThreeWayRowCarriesAllCounts)
{
    const auto report = check_theorem(Check::multiple_run_repeating, {{3}, {1}, 7, 60});
    const auto& last = report.records.back();
    EXPECT_EQ(last.n, 7);
    EXPECT_EQ(last.lhs, 5);
    EXPECT_EQ(last.rhs, 5);
    ASSERT_EQ(last.aux.size(), 2u);
    EXPECT_EQ(last.aux[0].second, 5);
    EXPECT_EQ(last.aux[1].second, 5);
}

TEST(CheckTheorem, RejectsOutOfContractParameters)
{
    EXPECT_THROW(check_theorem(Check::multiples_repeating, {{1}, {0}, 5, 60}), ContractError);
    EXPECT_THROW(check_theorem(Check::multiple_run_repeating, {{2}, {0}, 5, 60}), ContractError);
    EXPECT_THROW(check_theorem(Check::mex_sum_omega, {{0}, {}, 5, 60}), ContractError);
}

TEST(CertifyBijection, SmallRangesPass)
{
    for (MapId m : {MapId::glaisher, MapId::phi, MapId::cap_phi, MapId::gamma, MapId::gamma_star, MapId::delta}) {
        const CheckParams params = default_params(m);
        const auto report = certify_bijection(m, params.r_values, 9);
        EXPECT_TRUE(report.passed()) << report.check;
    }
    EXPECT_THROW(certify_bijection(MapId::phi, {1}, 5), ContractError);
}

TEST(CertifyBijection, GlaisherIsEulerAtTwo)
{
    const auto report = certify_bijection(MapId::glaisher, {2}, 12);
    ASSERT_EQ(report.records.size(), 13u);
    // odd-part partitions of 12 number 15
    EXPECT_EQ(report.records[12].lhs, 15);
    EXPECT_TRUE(report.passed());
}

TEST(ReportIo, SerializationsAreStable)
{
    const auto report = check_theorem(Check::sigma_mex, {{1}, {}, 3, 60});
    const std::string csv = reports_to_csv({report});
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "theorem,r,j,n,lhs,rhs,match,aux");
    EXPECT_NE(csv.find("sigma-mex,1,,3,6,6,true,"), std::string::npos);
    const auto doc = nlohmann::json::parse(reports_to_json({report}, false));
    EXPECT_EQ(doc["schema"], 1);
    EXPECT_EQ(doc["reports"][0]["records"][3]["lhs"], "6");
    EXPECT_EQ(reports_to_json({report}, false), reports_to_json({check_theorem(Check::sigma_mex, {{1}, {}, 3, 60})}, false));
    EXPECT_NE(reports_to_text({report}).find("PASS sigma-mex"), std::string::npos);
}

TEST(ReportIo, MismatchMarksReportFailed)
{
    auto report = check_theorem(Check::sigma_mex, {{1}, {}, 3, 60});
    report.records[2].rhs += 1;
    report.records[2].match = report.records[2].lhs == report.records[2].rhs;
    EXPECT_FALSE(report.passed());
    EXPECT_EQ(report.mismatches(), 1u);
    EXPECT_NE(reports_to_csv({report}).find(",false,"), std::string::npos);
}
