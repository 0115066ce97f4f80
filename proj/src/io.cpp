#include "tsikit/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <string_view>
#include <system_error>

namespace tsikit {
namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

double parse_value(std::string_view field, std::size_t line_no, bool allow_inf) {
    field = trim(field);
    if (allow_inf && field == "inf") return std::numeric_limits<double>::infinity();
    double v{};
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw ParseError("non-numeric field '" + std::string(field) + "'", line_no);
    return v;
}

long parse_int(std::string_view field, std::size_t line_no) {
    field = trim(field);
    long v{};
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw ParseError("non-integer field '" + std::string(field) + "'", line_no);
    return v;
}

std::ifstream open_for_read(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    return in;
}

std::ofstream open_for_write(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path);
    return out;
}

}  // namespace

std::string format_double(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

std::map<int, Barcode> load_diagram(const std::string& path, InfinitePolicy policy,
                                    double death_cap) {
    std::ifstream in = open_for_read(path);
    std::map<int, std::vector<Bar>> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view sv = trim(line);
        if (sv.empty()) continue;
        if (line_no == 1) {
            if (sv != "degree,birth,death")
                throw ParseError("expected header 'degree,birth,death'", line_no);
            continue;
        }
        auto fields = split_fields(sv);
        if (fields.size() != 3) throw ParseError("expected 3 fields", line_no);
        Bar bar;
        long degree = parse_int(fields[0], line_no);
        if (degree < 0) throw ParseError("negative degree", line_no);
        bar.degree = static_cast<int>(degree);
        bar.birth = parse_value(fields[1], line_no, /*allow_inf=*/false);
        bar.death = parse_value(fields[2], line_no, /*allow_inf=*/true);
        if (bar.death < bar.birth) throw ParseError("death < birth", line_no);
        rows[bar.degree].push_back(bar);
    }
    std::map<int, Barcode> out;
    for (auto& [degree, bars] : rows)
        out.emplace(degree, Barcode(std::move(bars), policy, death_cap));
    return out;
}

std::string diagram_csv(const std::vector<Bar>& bars) {
    std::string out = "degree,birth,death\n";
    for (const Bar& bar : bars) {
        out += std::to_string(bar.degree);
        out.push_back(',');
        out += format_double(bar.birth);
        out.push_back(',');
        out += format_double(bar.death);
        out.push_back('\n');
    }
    return out;
}

std::string diagram_csv(const std::map<int, Barcode>& by_degree) {
    std::vector<Bar> bars;
    for (const auto& [degree, barcode] : by_degree)
        bars.insert(bars.end(), barcode.bars().begin(), barcode.bars().end());
    return diagram_csv(bars);
}

void save_diagram(const std::string& path, const std::vector<Bar>& bars) {
    open_for_write(path) << diagram_csv(bars);
}

void save_diagram(const std::string& path, const std::map<int, Barcode>& by_degree) {
    open_for_write(path) << diagram_csv(by_degree);
}

PointCloud load_point_cloud(const std::string& path) {
    std::ifstream in = open_for_read(path);
    PointCloud pc;
    std::size_t dim = 0;
    std::string line;
    std::size_t line_no = 0;
    std::vector<double> point;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view sv = trim(line);
        if (sv.empty()) continue;
        auto fields = split_fields(sv);
        if (line_no == 1) {
            dim = fields.size();
            for (std::size_t k = 0; k < dim; ++k)
                if (trim(fields[k]) != "x" + std::to_string(k))
                    throw ParseError("expected header 'x0,x1,...'", line_no);
            continue;
        }
        if (fields.size() != dim) throw ParseError("expected " + std::to_string(dim) + " fields",
                                                   line_no);
        point.clear();
        for (auto f : fields) point.push_back(parse_value(f, line_no, /*allow_inf=*/false));
        pc.push_back(point);
    }
    return pc;
}

std::string point_cloud_csv(const PointCloud& pc) {
    std::string out;
    for (std::size_t k = 0; k < pc.dim(); ++k) {
        if (k) out.push_back(',');
        out.push_back('x');
        out += std::to_string(k);
    }
    out.push_back('\n');
    for (std::size_t i = 0; i < pc.size(); ++i) {
        for (std::size_t k = 0; k < pc.dim(); ++k) {
            if (k) out.push_back(',');
            out += format_double(pc.coord(i, k));
        }
        out.push_back('\n');
    }
    return out;
}

void save_point_cloud(const std::string& path, const PointCloud& pc) {
    open_for_write(path) << point_cloud_csv(pc);
}

std::vector<double> load_series(const std::string& path) {
    std::ifstream in = open_for_read(path);
    std::vector<double> series;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view sv = trim(line);
        if (sv.empty()) continue;
        if (line_no == 1) {
            if (sv != "value") throw ParseError("expected header 'value'", line_no);
            continue;
        }
        series.push_back(parse_value(sv, line_no, /*allow_inf=*/false));
    }
    return series;
}

std::string series_csv(const std::vector<double>& series) {
    std::string out = "value\n";
    for (double v : series) {
        out += format_double(v);
        out.push_back('\n');
    }
    return out;
}

void save_series(const std::string& path, const std::vector<double>& series) {
    open_for_write(path) << series_csv(series);
}

}  // namespace tsikit
