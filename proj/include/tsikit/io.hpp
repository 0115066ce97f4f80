#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "tsikit/barcode.hpp"

namespace tsikit {

struct ParseError : std::runtime_error {
    std::size_t line;
    ParseError(const std::string& msg, std::size_t line_no)
        : std::runtime_error(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
};

// Shortest decimal text that parses back to the same double ("inf" for infinity).
std::string format_double(double v);

// Diagram CSV: header "degree,birth,death", one bar per row, death may be "inf".
// Returns one barcode per degree present; bar order preserved from the file.
std::map<int, Barcode> load_diagram(const std::string& path,
                                    InfinitePolicy policy = InfinitePolicy::Drop,
                                    double death_cap = 0.0);
std::string diagram_csv(const std::vector<Bar>& bars);
std::string diagram_csv(const std::map<int, Barcode>& by_degree);
void save_diagram(const std::string& path, const std::vector<Bar>& bars);
void save_diagram(const std::string& path, const std::map<int, Barcode>& by_degree);

// Point-cloud CSV: header "x0,x1,...,x{d-1}", one point per row.
PointCloud load_point_cloud(const std::string& path);
std::string point_cloud_csv(const PointCloud& pc);
void save_point_cloud(const std::string& path, const PointCloud& pc);

// Time-series CSV: header "value", one sample per row.
std::vector<double> load_series(const std::string& path);
std::string series_csv(const std::vector<double>& series);
void save_series(const std::string& path, const std::vector<double>& series);

}  // namespace tsikit
