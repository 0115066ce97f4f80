#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tsikit/barcode.hpp"

namespace tsikit {

// Scalar panel for one homology degree. Statistics the conventions leave
// undefined (entropy of an empty barcode, cvtsi of a single bar) stay absent
// instead of being defaulted: JSON renders them as null, CSV as empty cells.
struct SummaryReport {
    int degree = 0;
    std::size_t n = 0;
    double total_persistence = 0.0;
    std::optional<double> mean;
    double tsi = 0.0;
    std::optional<double> tsigi;
    std::vector<std::optional<double>> moments;  // M_1 .. M_K
    std::optional<double> entropy;
    std::optional<double> renyi2;
    std::optional<double> cvtsi;
    std::optional<double> cvtsi_over_n;
};

SummaryReport summarize(const Barcode& b, int degree, int k_moments = 3);

// Entropies rescaled from nats to bits; everything else untouched.
SummaryReport in_bits(SummaryReport r);

std::string report_json(const SummaryReport& r);
std::string report_json(const std::vector<SummaryReport>& reports);
std::string report_csv_header(int k_moments);
std::string report_csv_row(const SummaryReport& r);

}  // namespace tsikit
