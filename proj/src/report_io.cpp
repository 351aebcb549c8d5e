#include "rchain/report_io.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace rchain {

namespace {

using nlohmann::json;

json record_to_json(const VerificationRecord& rec)
{
    json out;
    out["r"] = rec.r;
    out["j"] = rec.j ? json(*rec.j) : json(nullptr);
    out["n"] = rec.n;
    out["lhs"] = std::to_string(rec.lhs);
    out["rhs"] = std::to_string(rec.rhs);
    out["match"] = rec.match;
    json aux = json::object();
    for (const auto& [name, value] : rec.aux)
        aux[name] = std::to_string(value);
    out["aux"] = std::move(aux);
    if (!rec.tag.empty())
        out["tag"] = rec.tag;
    return out;
}

std::string aux_field(const VerificationRecord& rec)
{
    std::string out = rec.tag;
    for (const auto& [name, value] : rec.aux) {
        if (!out.empty())
            out += ';';
        out += name + '=' + std::to_string(value);
    }
    return out;
}

} // namespace

json to_json(const VerificationReport& report, bool with_timing)
{
    json out;
    out["check"] = report.check;
    out["lhs_label"] = report.lhs_label;
    out["rhs_label"] = report.rhs_label;
    out["parameters"] = {
        {"r", report.r_values}, {"j", report.j_values}, {"n_min", report.n_min}, {"n_max", report.n_max}};
    out["passed"] = report.passed();
    out["mismatches"] = report.mismatches();
    if (with_timing)
        out["wall_time_ms"] = report.wall_time_ms;
    json records = json::array();
    for (const auto& rec : report.records)
        records.push_back(record_to_json(rec));
    out["records"] = std::move(records);
    return out;
}

std::string reports_to_json(const std::vector<VerificationReport>& reports, bool with_timing)
{
    json list = json::array();
    for (const auto& report : reports)
        list.push_back(to_json(report, with_timing));
    json doc;
    doc["schema"] = kSchemaVersion;
    doc["passed"] = std::ranges::all_of(reports, [](const auto& r) { return r.passed(); });
    doc["reports"] = std::move(list);
    return doc.dump(2) + "\n";
}

std::string reports_to_csv(const std::vector<VerificationReport>& reports)
{
    std::ostringstream out;
    out << "theorem,r,j,n,lhs,rhs,match,aux\n";
    for (const auto& report : reports)
        for (const auto& rec : report.records)
            out << report.check << ',' << rec.r << ',' << (rec.j ? std::to_string(*rec.j) : "") << ',' << rec.n
                << ',' << rec.lhs << ',' << rec.rhs << ',' << (rec.match ? "true" : "false") << ','
                << aux_field(rec) << '\n';
    return out.str();
}

std::string reports_to_text(const std::vector<VerificationReport>& reports)
{
    std::ostringstream out;
    for (const auto& report : reports) {
        out << report.check << "\n  lhs: " << report.lhs_label << "\n  rhs: " << report.rhs_label << '\n';
        out << std::setw(4) << "r" << std::setw(4) << "j" << std::setw(5) << "n" << std::setw(22) << "lhs"
            << std::setw(22) << "rhs" << "  ok   aux\n";
        for (const auto& rec : report.records)
            out << std::setw(4) << rec.r << std::setw(4) << (rec.j ? std::to_string(*rec.j) : "-") << std::setw(5)
                << rec.n << std::setw(22) << rec.lhs << std::setw(22) << rec.rhs << (rec.match ? "  yes  " : "  NO   ")
                << aux_field(rec) << '\n';
        if (report.passed())
            out << "PASS " << report.check << " (" << report.records.size() << " records)\n\n";
        else
            out << "FAIL " << report.check << " (" << report.mismatches() << " of " << report.records.size()
                << " records mismatch)\n\n";
    }
    return out.str();
}

std::string to_string(const PartitionPair& pair)
{
    std::string beta;
    if (const auto* c = std::get_if<ColoredEmpty>(&pair.beta))
        beta = "empty(color " + std::to_string(c->color) + ")";
    else
        beta = to_string(std::get<Partition>(pair.beta));
    return "(" + to_string(pair.alpha) + ", " + beta + ")";
}

json series_to_json(const PowerSeries& s)
{
    json out = json::array();
    for (Integer c : s.coeffs())
        out.push_back(std::to_string(c));
    return out;
}

json pair_to_json(const PartitionPair& pair)
{
    json out;
    out["alpha"] = to_string(pair.alpha);
    if (const auto* c = std::get_if<ColoredEmpty>(&pair.beta))
        out["beta"] = {{"empty_color", c->color}};
    else
        out["beta"] = to_string(std::get<Partition>(pair.beta));
    return out;
}

json trace_to_json(const MapTrace& trace)
{
    json moves = json::array();
    for (const auto& m : trace.moves)
        moves.push_back({{"value", m.value}, {"copies", m.copies}});
    json out;
    out["schema"] = kSchemaVersion;
    out["map"] = trace.map;
    out["r"] = trace.r;
    out["input"] = {{"lambda", to_string(trace.input.lambda)}, {"i", trace.input.index}};
    out["case"] = to_string(trace.which);
    out["intermediate"] = {{"conjugate", to_string(trace.conjugate)},
                           {"cut_index", trace.cut_index},
                           {"moves", std::move(moves)},
                           {"shifted_copies", trace.shifted_copies}};
    out["output"] = pair_to_json(trace.output);
    return out;
}

} // namespace rchain
