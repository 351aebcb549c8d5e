#include "rchain/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "rchain/bijections.hpp"
#include "rchain/partition.hpp"
#include "rchain/qseries.hpp"
#include "rchain/report_io.hpp"
#include "rchain/verify.hpp"

namespace rchain::cli {

namespace {

using nlohmann::json;

enum class Format { text, json, csv };

struct Options {
    std::string format_text = "text";
    std::string out_path;
    std::string r_text;
    std::string j_text;
    int order = 60;
    std::optional<int> n;
    std::optional<int> m;
    std::optional<int> i;
    std::optional<int> modulus;
    std::optional<int> color;
    bool sort = false;
    bool trace = false;
    bool inverse = false;
    std::string target;
    std::string lambda_text;
    std::string alpha_text;
    std::string beta_text;
    std::string filter = "all";
    std::string stat;
};

int to_int(const std::string& token)
{
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(token, &used);
    } catch (const std::exception&) {
        throw ContractError("not an integer: '" + token + "'");
    }
    if (used != token.size())
        throw ContractError("not an integer: '" + token + "'");
    return value;
}

Format parse_format(const std::string& text)
{
    if (text == "text")
        return Format::text;
    if (text == "json")
        return Format::json;
    if (text == "csv")
        return Format::csv;
    throw ContractError("unknown format '" + text + "' (expected text, json or csv)");
}

int single_r(const Options& o)
{
    if (o.r_text.empty())
        return 1;
    const auto values = parse_int_list(o.r_text);
    if (values.size() != 1)
        throw ContractError("--r must be a single value here");
    require_positive_r(values.front(), "--r");
    return values.front();
}

std::vector<int> r_list(const Options& o)
{
    auto values = o.r_text.empty() ? std::vector<int>{1} : parse_int_list(o.r_text);
    for (int r : values)
        require_positive_r(r, "--r");
    return values;
}

Partition read_partition(const std::string& text, bool sort, const char* what)
{
    if (text.empty())
        throw ContractError(std::string("missing ") + what);
    return parse_partition(text, sort);
}

// ---- stats ------------------------------------------------------------------

std::string render_stats(const Options& o)
{
    const Partition lambda = read_partition(o.target, o.sort, "partition");
    const Format format = parse_format(o.format_text);
    json rows = json::array();
    std::ostringstream text, csv;
    csv << "partition,r,mex,maex,omega,Omega,class,G\n";
    for (int r : r_list(o)) {
        const std::string cls = in_p_zero(lambda, r) ? "P0" : "P+";
        const int mex = mex_r(lambda, r), maex = maex_r(lambda, r);
        const int omega = omega_r(lambda, r), cap_omega = cap_omega_r(lambda, r), g = g_stat(lambda, r);
        rows.push_back({{"r", r}, {"mex", mex}, {"maex", maex}, {"omega", omega}, {"Omega", cap_omega},
                        {"class", cls}, {"G", g}});
        text << to_string(lambda) << " r=" << r << " mex=" << mex << " maex=" << maex << " omega=" << omega
             << " Omega=" << cap_omega << " class=" << cls << " G=" << g << '\n';
        csv << '"' << to_string(lambda) << "\"," << r << ',' << mex << ',' << maex << ',' << omega << ','
            << cap_omega << ',' << cls << ',' << g << '\n';
    }
    switch (format) {
    case Format::json:
        return json{{"schema", kSchemaVersion}, {"partition", to_string(lambda)}, {"stats", rows}}.dump(2) + "\n";
    case Format::csv:
        return csv.str();
    case Format::text:
        break;
    }
    return text.str();
}

// ---- enumerate --------------------------------------------------------------

PartitionFilter make_filter(const Options& o)
{
    const int r = single_r(o);
    PartitionFilter filter;
    if (o.filter == "regular")
        filter = filters::r_regular(r);
    else if (o.filter == "strict")
        filter = filters::r_strict(r);
    else if (o.filter == "p0")
        filter = filters::in_class(PartitionClass::zero(r));
    else if (o.filter == "plus")
        filter = filters::in_class(PartitionClass::plus(r));
    else if (o.filter != "all")
        throw ContractError("unknown filter '" + o.filter + "' (expected all, regular, strict, p0, plus)");

    if (o.stat.empty())
        return filter;
    if (o.j_text.empty())
        throw ContractError("--stat needs --j");
    const auto js = parse_int_list(o.j_text);
    if (js.size() != 1)
        throw ContractError("--j must be a single value with --stat");
    static const std::map<std::string, std::function<int(const Partition&, int)>> stats{
        {"mex", mex_r},
        {"maex", maex_r},
        {"omega", omega_r},
        {"Omega", cap_omega_r},
        {"G", g_stat},
        {"multiples", count_multiples},
        {"largest-repeating", largest_r_repeating},
        {"smallest-repeating", smallest_r_repeating},
        {"largest-multiple-count", mult_of_largest_multiple},
    };
    const auto it = stats.find(o.stat);
    if (it == stats.end())
        throw ContractError("unknown statistic '" + o.stat + "'");
    auto by_stat = filters::stat_equals([fn = it->second, r](const Partition& p) { return fn(p, r); }, js.front());
    if (!filter)
        return by_stat;
    return [filter, by_stat](const Partition& p) { return filter(p) && by_stat(p); };
}

std::string render_enumerate(const Options& o)
{
    const int n = to_int(o.target);
    if (n < 0)
        throw ContractError("n must be >= 0");
    const auto parts = enumerate(n, make_filter(o));
    std::ostringstream out;
    switch (parse_format(o.format_text)) {
    case Format::json: {
        json list = json::array();
        for (const auto& p : parts)
            list.push_back(to_string(p));
        out << json{{"schema", kSchemaVersion}, {"n", n}, {"count", parts.size()}, {"partitions", list}}.dump(2)
            << '\n';
        break;
    }
    case Format::csv:
        out << "partition\n";
        for (const auto& p : parts)
            out << '"' << to_string(p) << "\"\n";
        break;
    case Format::text:
        for (const auto& p : parts)
            out << to_string(p) << '\n';
        out << "count: " << parts.size() << '\n';
        break;
    }
    return out.str();
}

// ---- series -----------------------------------------------------------------

int required(const std::optional<int>& v, const char* flag)
{
    if (!v)
        throw ContractError(std::string("this series needs ") + flag);
    return *v;
}

int single_j(const Options& o)
{
    if (o.j_text.empty())
        throw ContractError("this series needs --j");
    const auto values = parse_int_list(o.j_text);
    if (values.size() != 1)
        throw ContractError("--j must be a single value here");
    return values.front();
}

PowerSeries build_series(const Options& o)
{
    const std::string& name = o.target;
    const int order = o.order;
    if (name == "sigma-mex")
        return gf_sigma_mex(order);
    if (name == "mex-sum")
        return gf_mexr3_rhs(single_r(o), order);
    if (name == "mex-sum-shifted")
        return gf_mex_sum_shifted_rhs(single_r(o), order);
    if (name == "mex-sum-omega")
        return gf_mexr2_rhs(single_r(o), order);
    if (name == "sigma-maex")
        return gf_max1_rhs(order);
    if (name == "maex-sum")
        return gf_maxr1_rhs(single_r(o), order);
    if (name == "maex-sum-product")
        return gf_maxr1_product(single_r(o), order);
    if (name == "S")
        return gf_S(required(o.modulus, "--modulus"), order);
    if (name == "M")
        return gf_M(required(o.modulus, "--modulus"), order);
    if (name == "W")
        return gf_W(required(o.modulus, "--modulus"), order);
    if (name == "sigma-L")
        return gf_sigma_L(order);
    if (name == "partitions")
        return gf_partitions(order);
    if (name == "j-parts")
        return gf_j_parts(single_r(o), single_j(o), order);
    if (name == "gauss") {
        const int n = required(o.n, "--n"), m = required(o.m, "--m");
        if (n < 0 || m < 0 || m > n)
            throw ContractError("gauss needs 0 <= m <= n");
        return gauss_binomial(n, m);
    }
    throw ContractError("unknown series '" + name + "'");
}

std::string render_series(const Options& o)
{
    if (o.order < 0)
        throw ContractError("--order must be >= 0");
    const Format format = parse_format(o.format_text);
    std::ostringstream out;
    if (o.target == "przq") {
        const int r = single_r(o);
        const int z_order = o.m.value_or(o.order);
        const BivariateSeries s = przq(r, z_order, o.order);
        json rows = json::array();
        if (format == Format::csv)
            out << "m,n,coefficient\n";
        for (int m = 0; m <= z_order; ++m) {
            PowerSeries row(o.order);
            for (int n = 0; n <= o.order; ++n)
                row += PowerSeries::monomial(n, s.coeff(m, n), o.order);
            rows.push_back(series_to_json(row));
            if (format == Format::csv)
                for (int n = 0; n <= o.order; ++n)
                    out << m << ',' << n << ',' << s.coeff(m, n) << '\n';
            else if (format == Format::text)
                out << "z^" << m << ": " << to_string(row) << '\n';
        }
        if (format == Format::json)
            out << json{{"schema", kSchemaVersion}, {"series", "przq"}, {"r", r}, {"z_order", z_order},
                        {"order", o.order}, {"rows", rows}}
                       .dump(2)
                << '\n';
        return out.str();
    }
    const PowerSeries s = build_series(o);
    switch (format) {
    case Format::json:
        out << json{{"schema", kSchemaVersion}, {"series", o.target}, {"order", s.order()},
                    {"coefficients", series_to_json(s)}}
                   .dump(2)
            << '\n';
        break;
    case Format::csv:
        out << "n,coefficient\n";
        for (int n = 0; n <= s.order(); ++n)
            out << n << ',' << s.coeff(n) << '\n';
        break;
    case Format::text:
        out << to_string(s) << '\n';
        break;
    }
    return out.str();
}

// ---- bijection --------------------------------------------------------------

PartitionPair read_pair(const Options& o)
{
    const Partition alpha = o.alpha_text.empty() ? Partition{} : parse_partition(o.alpha_text, o.sort);
    if (o.color) {
        if (!o.beta_text.empty())
            throw ContractError("--color and --beta are exclusive");
        return PartitionPair(alpha, ColoredEmpty{*o.color});
    }
    const Partition beta = o.beta_text.empty() ? Partition{} : parse_partition(o.beta_text, o.sort);
    return PartitionPair(alpha, beta);
}

std::string render_bijection(const Options& o)
{
    const std::string& map = o.target;
    const int r = single_r(o);
    const Format format = parse_format(o.format_text);
    if (format == Format::csv)
        throw ContractError("bijection output supports text and json only");

    using Single = Partition (*)(const Partition&, int);
    static const std::map<std::string, std::pair<Single, Single>> singles{
        {"glaisher", {glaisher_f, glaisher_f_inv}},
        {"phi", {phi_r, psi_r}},
        {"cap-phi", {cap_phi_r, cap_psi_r}},
    };
    using Forward = PartitionPair (*)(const Partition&, int, int);
    using Inverse = IndexedPartition (*)(const PartitionPair&, int);
    using Trace = MapTrace (*)(const Partition&, int, int);
    struct Indexed {
        Forward forward;
        Inverse inverse;
        Trace trace;
    };
    static const std::map<std::string, Indexed> indexed{
        {"gamma", {gamma, gamma_inv, trace_gamma}},
        {"gamma-star", {gamma_star, gamma_star_inv, trace_gamma_star}},
        {"delta", {delta, delta_inv, trace_delta}},
    };

    if (const auto it = singles.find(map); it != singles.end()) {
        const Partition in = read_partition(o.lambda_text, o.sort, "--lambda");
        const Partition result = (o.inverse ? it->second.second : it->second.first)(in, r);
        if (format == Format::json)
            return json{{"schema", kSchemaVersion}, {"map", map}, {"inverse", o.inverse}, {"r", r},
                        {"input", to_string(in)}, {"output", to_string(result)}}
                       .dump(2) +
                   "\n";
        return to_string(result) + "\n";
    }
    if (map == "psi-pair" || map == "phi-pair") {
        const PartitionPair in = read_pair(o);
        std::vector<PartMove> moves;
        const auto& beta = in.beta_partition();
        const PartitionPair result = map == "psi-pair" ? psi_pair(in.alpha, beta, r, &moves)
                                                       : phi_pair(in.alpha, beta, r, &moves);
        if (format == Format::json) {
            json mv = json::array();
            for (const auto& m : moves)
                mv.push_back({{"value", m.value}, {"copies", m.copies}});
            return json{{"schema", kSchemaVersion}, {"map", map}, {"r", r}, {"input", pair_to_json(in)},
                        {"moves", mv}, {"output", pair_to_json(result)}}
                       .dump(2) +
                   "\n";
        }
        return to_string(result) + "\n";
    }
    const auto it = indexed.find(map);
    if (it == indexed.end())
        throw ContractError("unknown map '" + map + "'");
    if (o.inverse) {
        const IndexedPartition result = it->second.inverse(read_pair(o), r);
        if (format == Format::json || o.trace)
            return json{{"schema", kSchemaVersion}, {"map", map}, {"inverse", true}, {"r", r},
                        {"input", pair_to_json(read_pair(o))},
                        {"output", {{"lambda", to_string(result.lambda)}, {"i", result.index}}}}
                       .dump(2) +
                   "\n";
        return to_string(result.lambda) + " i=" + std::to_string(result.index) + "\n";
    }
    const Partition lambda = read_partition(o.lambda_text, o.sort, "--lambda");
    const int i = required(o.i, "--i");
    if (o.trace || format == Format::json)
        return trace_to_json(it->second.trace(lambda, i, r)).dump(2) + "\n";
    return to_string(it->second.forward(lambda, i, r)) + "\n";
}

// ---- verify -----------------------------------------------------------------

VerificationReport run_one(const std::string& name, const Options& o)
{
    const auto apply = [&](CheckParams p) {
        if (!o.r_text.empty())
            p.r_values = parse_int_list(o.r_text);
        if (!o.j_text.empty())
            p.j_values = parse_int_list(o.j_text);
        if (o.n)
            p.n_max = *o.n;
        p.order = o.order;
        return p;
    };
    if (name.starts_with("cert-")) {
        const auto map = parse_map(name.substr(5));
        if (!map)
            throw ContractError("unknown bijection '" + name.substr(5) + "'");
        const CheckParams p = apply(default_params(*map));
        return certify_bijection(*map, p.r_values, p.n_max);
    }
    const auto check = parse_check(name);
    if (!check)
        throw ContractError("unknown check '" + name + "'");
    return check_theorem(*check, apply(default_params(*check)));
}

std::vector<VerificationReport> run_verify(const Options& o)
{
    std::vector<std::string> names;
    if (o.target == "all") {
        for (Check c : {Check::sigma_mex, Check::multiples_repeating, Check::mex_sum_shifted, Check::mex_sum_omega,
                        Check::sigma_maex, Check::multiple_run_repeating, Check::maex_sum, Check::q_binomial,
                        Check::maex_bivariate, Check::maex_chain_endpoints})
            names.push_back(to_string(c));
        for (MapId m : {MapId::glaisher, MapId::phi, MapId::cap_phi, MapId::gamma, MapId::gamma_star, MapId::delta})
            names.push_back("cert-" + to_string(m));
        if (!o.r_text.empty() || !o.j_text.empty() || o.n)
            throw ContractError("'verify all' runs every check at its default ranges; drop --r, --j and --n");
    } else {
        names.push_back(o.target);
    }
    std::vector<VerificationReport> reports;
    for (const auto& name : names)
        reports.push_back(run_one(name, o));
    return reports;
}

void emit(const Options& o, const std::string& text, std::ostream& out)
{
    if (o.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file)
        throw ContractError("cannot open '" + o.out_path + "' for writing");
    file << text;
}

void add_common(CLI::App* cmd, Options& o)
{
    cmd->add_option("--format", o.format_text, "Output format: text, json or csv")->default_str("text");
    cmd->add_option("--out", o.out_path, "Write output to this file instead of stdout");
    cmd->add_option("--order", o.order, "Series truncation order")->default_str("60");
    cmd->add_option("--r", o.r_text, "Chain length r: a value, a range a..b, or a list");
}

} // namespace

std::vector<int> parse_int_list(const std::string& text)
{
    std::vector<int> out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        const auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(to_int(item));
            continue;
        }
        const int lo = to_int(item.substr(0, dots)), hi = to_int(item.substr(dots + 2));
        if (lo > hi)
            throw ContractError("empty range '" + item + "'");
        for (int v = lo; v <= hi; ++v)
            out.push_back(v);
    }
    if (out.empty())
        throw ContractError("empty value list");
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact r-chain excludant statistics, bijections and q-series checks", "rchain"};
    app.require_subcommand(1);
    Options o;

    auto* stats = app.add_subcommand("stats", "Print mex_r, maex_r, omega_r, Omega_r, class and G of a partition");
    stats->add_option("partition", o.target, "Partition literal, e.g. [7,4,4,3]")->required();
    stats->add_flag("--sort", o.sort, "Accept parts in any order");
    add_common(stats, o);

    auto* enumerate_cmd = app.add_subcommand("enumerate", "List partitions of n");
    enumerate_cmd->add_option("n", o.target, "Weight")->required();
    enumerate_cmd->add_option("--filter", o.filter, "all, regular, strict, p0 or plus")->default_str("all");
    enumerate_cmd->add_option("--stat", o.stat,
                              "Keep partitions whose statistic equals --j: mex, maex, omega, Omega, G, multiples, "
                              "largest-repeating, smallest-repeating, largest-multiple-count");
    enumerate_cmd->add_option("--j", o.j_text, "Statistic value for --stat");
    add_common(enumerate_cmd, o);

    auto* series = app.add_subcommand("series", "Expand a generating function");
    series->add_option("name", o.target,
                       "sigma-mex, mex-sum, mex-sum-shifted, mex-sum-omega, sigma-maex, maex-sum, "
                       "maex-sum-product, S, M, W, sigma-L, partitions, j-parts, gauss, przq")
        ->required();
    series->add_option("--j", o.j_text, "j for j-parts");
    series->add_option("--modulus", o.modulus, "Modulus for S, M and W");
    series->add_option("--n", o.n, "n for gauss");
    series->add_option("--m", o.m, "m for gauss; z-order for przq");
    add_common(series, o);

    auto* bijection = app.add_subcommand("bijection", "Apply a bijection or its inverse");
    bijection->add_option("map", o.target,
                          "glaisher, phi, cap-phi, psi-pair, phi-pair, gamma, gamma-star or delta")
        ->required();
    bijection->add_option("--lambda", o.lambda_text, "Input partition");
    bijection->add_option("--i", o.i, "Index for gamma, gamma-star and delta");
    bijection->add_option("--alpha", o.alpha_text, "First component of a pair input");
    bijection->add_option("--beta", o.beta_text, "Second component of a pair input");
    bijection->add_option("--color", o.color, "Color of an empty beta (gamma-star inverse)");
    bijection->add_flag("--inverse", o.inverse, "Apply the inverse map");
    bijection->add_flag("--trace", o.trace, "Print the intermediate steps as JSON");
    bijection->add_flag("--sort", o.sort, "Accept parts in any order");
    add_common(bijection, o);

    auto* verify = app.add_subcommand("verify", "Compare enumeration against series, or certify a bijection");
    verify->add_option("check", o.target,
                       "sigma-mex, multiples-repeating, mex-sum-shifted, mex-sum-omega, sigma-maex, "
                       "multiple-run-repeating, maex-sum, q-binomial, maex-bivariate, maex-endpoints, "
                       "thm-1.4 ... thm-1.11, cert-<map>, or all")
        ->required();
    verify->add_option("--j", o.j_text, "j values: a value, a range a..b, or a list");
    verify->add_option("--n", o.n, "Largest n to check");
    add_common(verify, o);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*stats)
            emit(o, render_stats(o), out);
        else if (*enumerate_cmd)
            emit(o, render_enumerate(o), out);
        else if (*series)
            emit(o, render_series(o), out);
        else if (*bijection)
            emit(o, render_bijection(o), out);
        else if (*verify) {
            if (o.n && *o.n < 0)
                throw ContractError("--n must be >= 0");
            const auto reports = run_verify(o);
            switch (parse_format(o.format_text)) {
            case Format::json:
                emit(o, reports_to_json(reports), out);
                break;
            case Format::csv:
                emit(o, reports_to_csv(reports), out);
                break;
            case Format::text:
                emit(o, reports_to_text(reports), out);
                break;
            }
            const bool ok = std::ranges::all_of(reports, [](const auto& r) { return r.passed(); });
            if (!o.out_path.empty())
                err << (ok ? "all checks passed" : "verification mismatch") << '\n';
            return ok ? kExitOk : kExitMismatch;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

} // namespace rchain::cli
