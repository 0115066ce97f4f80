#include "tsikit/summary_report.hpp"

#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "tsikit/entropy.hpp"
#include "tsikit/io.hpp"
#include "tsikit/summaries.hpp"

namespace tsikit {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr double kLn2 = 0.6931471805599453;

ordered_json opt_json(const std::optional<double>& v) {
    return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json to_object(const SummaryReport& r) {
    ordered_json j;
    j["degree"] = r.degree;
    j["n"] = r.n;
    j["total_persistence"] = r.total_persistence;
    j["mean"] = opt_json(r.mean);
    j["tsi"] = r.tsi;
    j["tsigi"] = opt_json(r.tsigi);
    ordered_json ms = ordered_json::array();
    for (const auto& m : r.moments) ms.push_back(opt_json(m));
    j["moments"] = ms;
    j["entropy"] = opt_json(r.entropy);
    j["renyi2"] = opt_json(r.renyi2);
    j["cvtsi"] = opt_json(r.cvtsi);
    j["cvtsi_over_n"] = opt_json(r.cvtsi_over_n);
    return j;
}

void append_cell(std::string& row, const std::optional<double>& v) {
    row.push_back(',');
    if (v) row += format_double(*v);
}

}  // namespace

SummaryReport summarize(const Barcode& b, int degree, int k_moments) {
    if (k_moments < 1) throw std::invalid_argument("summarize: need at least one moment");
    SummaryReport r;
    r.degree = degree;
    r.n = b.n();
    r.total_persistence = b.total_persistence();
    r.tsi = tsi(b);

    const bool has_mass = r.n > 0 && b.max_lifetime() > 0.0;
    if (r.n >= 1) r.mean = b.mean_lifetime();
    if (has_mass) {
        r.tsigi = tsigi(b);
        r.entropy = persistent_entropy(b);
        r.renyi2 = renyi_entropy(b, 2.0);
    }
    r.moments.resize(static_cast<std::size_t>(k_moments));
    for (int k = 1; k <= k_moments; ++k)
        if (k == 1 ? r.n >= 1 : has_mass)
            r.moments[static_cast<std::size_t>(k - 1)] = moment(b, k);
    if (r.n >= 2 && has_mass) {
        r.cvtsi = cvtsi(b);
        r.cvtsi_over_n = *r.cvtsi / static_cast<double>(r.n);
    }
    return r;
}

SummaryReport in_bits(SummaryReport r) {
    if (r.entropy) r.entropy = *r.entropy / kLn2;
    if (r.renyi2) r.renyi2 = *r.renyi2 / kLn2;
    return r;
}

std::string report_json(const SummaryReport& r) { return to_object(r).dump(2) + "\n"; }

std::string report_json(const std::vector<SummaryReport>& reports) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) arr.push_back(to_object(r));
    return arr.dump(2) + "\n";
}

std::string report_csv_header(int k_moments) {
    std::string h = "degree,n,total_persistence,mean,tsi,tsigi";
    for (int k = 1; k <= k_moments; ++k) h += ",M" + std::to_string(k);
    h += ",entropy,renyi2,cvtsi,cvtsi_over_n\n";
    return h;
}

std::string report_csv_row(const SummaryReport& r) {
    std::string row = std::to_string(r.degree);
    row.push_back(',');
    row += std::to_string(r.n);
    row.push_back(',');
    row += format_double(r.total_persistence);
    append_cell(row, r.mean);
    row.push_back(',');
    row += format_double(r.tsi);
    append_cell(row, r.tsigi);
    for (const auto& m : r.moments) append_cell(row, m);
    append_cell(row, r.entropy);
    append_cell(row, r.renyi2);
    append_cell(row, r.cvtsi);
    append_cell(row, r.cvtsi_over_n);
    row.push_back('\n');
    return row;
}

}  // namespace tsikit
