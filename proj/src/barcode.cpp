#include "tsikit/barcode.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "tsikit/numeric.hpp"

namespace tsikit {

bool Bar::is_infinite() const { return std::isinf(death); }

Barcode::Barcode(std::vector<Bar> bars, InfinitePolicy policy, double death_cap)
    : bars_(std::move(bars)) {
    if (policy == InfinitePolicy::Truncate && !std::isfinite(death_cap))
        throw std::invalid_argument("truncation policy requires a finite death cap");

    lifetimes_.reserve(bars_.size());
    KahanAccumulator total;
    for (Bar& bar : bars_) {
        if (bar.degree < 0) throw std::invalid_argument("bar degree must be nonnegative");
        if (!std::isfinite(bar.birth)) throw std::invalid_argument("bar birth must be finite");
        if (std::isnan(bar.death)) throw std::invalid_argument("bar death must not be NaN");
        if (bar.death < bar.birth) throw std::invalid_argument("bar death must be >= birth");

        if (std::isinf(bar.death)) {
            // Drop keeps the bar listed but outside the lifetime statistics;
            // Truncate rewrites its death so bars() and lifetimes() agree.
            if (policy == InfinitePolicy::Drop) continue;
            bar.death = std::max(bar.birth, death_cap);
        }
        double ell = bar.death - bar.birth;
        lifetimes_.push_back(ell);
        total.add(ell);
    }
    total_ = total.value();
}

Barcode Barcode::from_lifetimes(std::span<const double> lifetimes, int degree) {
    std::vector<Bar> bars;
    bars.reserve(lifetimes.size());
    for (double ell : lifetimes) bars.push_back({degree, 0.0, ell});
    return Barcode(std::move(bars));
}

double Barcode::mean_lifetime() const {
    if (lifetimes_.empty()) throw std::domain_error("mean lifetime of an empty barcode");
    return total_ / static_cast<double>(lifetimes_.size());
}

double Barcode::min_lifetime() const {
    if (lifetimes_.empty()) throw std::domain_error("min lifetime of an empty barcode");
    return *std::min_element(lifetimes_.begin(), lifetimes_.end());
}

double Barcode::max_lifetime() const {
    if (lifetimes_.empty()) throw std::domain_error("max lifetime of an empty barcode");
    return *std::max_element(lifetimes_.begin(), lifetimes_.end());
}

PointCloud PointCloud::from_rows(const std::vector<std::vector<double>>& rows) {
    PointCloud pc;
    for (const auto& row : rows) {
        if (pc.dim_ == 0) pc.dim_ = row.size();
        pc.push_back(row);
    }
    return pc;
}

void PointCloud::push_back(std::span<const double> p) {
    if (dim_ == 0) dim_ = p.size();
    if (p.size() != dim_ || dim_ == 0)
        throw std::invalid_argument("point dimension mismatch");
    for (double x : p)
        if (!std::isfinite(x)) throw std::invalid_argument("point coordinates must be finite");
    coords_.insert(coords_.end(), p.begin(), p.end());
}

std::vector<std::vector<double>> PointCloud::rows() const {
    std::vector<std::vector<double>> out(size());
    for (std::size_t i = 0; i < size(); ++i) {
        auto p = point(i);
        out[i].assign(p.begin(), p.end());
    }
    return out;
}

}  // namespace tsikit
