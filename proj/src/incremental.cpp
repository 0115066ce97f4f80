#include "tsikit/incremental.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tsikit {
namespace {

void require_lifetime(double ell) {
    if (!(ell >= 0) || !std::isfinite(ell))
        throw std::invalid_argument("lifetime must be finite and nonnegative");
}

}  // namespace

RunningStats RunningStats::from_lifetimes(std::span<const double> lifetimes) {
    RunningStats stats;
    for (double ell : lifetimes) stats.insert(ell);
    return stats;
}

RunningStats RunningStats::from_barcode(const Barcode& b) {
    return from_lifetimes(b.lifetimes());
}

double RunningStats::mean() const {
    if (values_.empty()) throw std::domain_error("mean of empty stats");
    return sum_ / static_cast<double>(n());
}

double RunningStats::tsi() const {
    if (n() <= 1) return 0.0;
    double nd = static_cast<double>(n());
    double var = (sum_sq_ - sum_ * sum_ / nd) / (nd - 1.0);
    return var > 0 ? var : 0.0;  // clip the cancellation residue at the uniform case
}

double RunningStats::cvtsi() const {
    if (n() < 2) throw std::domain_error("cvtsi needs n >= 2");
    double m = mean();
    if (!(m > 0)) throw std::domain_error("cvtsi needs positive mean lifetime");
    return tsi() / (m * m);
}

bool RunningStats::contains(double ell, double tol) const {
    return std::any_of(values_.begin(), values_.end(),
                       [&](double v) { return std::abs(v - ell) <= tol; });
}

void RunningStats::insert(double ell) {
    require_lifetime(ell);
    sum_ += ell;
    sum_sq_ += ell * ell;
    values_.push_back(ell);
}

void RunningStats::erase(double ell) {
    auto it = std::min_element(values_.begin(), values_.end(), [&](double a, double b) {
        return std::abs(a - ell) < std::abs(b - ell);
    });
    if (it == values_.end() || std::abs(*it - ell) > 1e-9)
        throw std::invalid_argument("lifetime is not a member of the multiset");
    double member = *it;
    sum_ -= member;
    sum_sq_ -= member * member;
    values_.erase(it);
}

double tsi_after_insert(const RunningStats& stats, double ell) {
    if (stats.n() < 2) throw std::invalid_argument("insert formula needs n >= 2");
    require_lifetime(ell);
    double n = static_cast<double>(stats.n());
    double delta = ell - stats.mean();
    return (n - 1.0) / n * stats.tsi() + delta * delta / (n + 1.0);
}

double tsi_after_delete(const RunningStats& stats, double ell) {
    if (stats.n() <= 1) throw std::invalid_argument("delete formula needs n >= 2");
    require_lifetime(ell);
    if (!stats.contains(ell))
        throw std::invalid_argument("lifetime is not a member of the multiset");
    if (stats.n() == 2) return 0.0;  // one bar remains; tsi is 0 by convention
    double n = static_cast<double>(stats.n());
    double delta = ell - stats.mean();
    return (n - 1.0) / (n - 2.0) * stats.tsi() -
           n / ((n - 1.0) * (n - 2.0)) * delta * delta;
}

bool increases_tsi(const RunningStats& stats, double ell) {
    if (stats.n() < 2) throw std::invalid_argument("variance barrier needs n >= 2");
    require_lifetime(ell);
    double n = static_cast<double>(stats.n());
    double delta = ell - stats.mean();
    return delta * delta * n > (n + 1.0) * stats.tsi();
}

double cvtsi_after_insert(const RunningStats& stats, double ell) {
    if (stats.n() < 2) throw std::invalid_argument("insert formula needs n >= 2");
    require_lifetime(ell);
    double m = stats.mean();
    if (!(m > 0)) throw std::invalid_argument("cvtsi insert needs positive mean lifetime");
    double n = static_cast<double>(stats.n());
    double r = (ell - m) / m;
    double denom = n + 1.0 + r;
    double shrink = (n + 1.0) * (n + 1.0) * (n - 1.0) / (n * denom * denom);
    double kick = r / denom;
    return shrink * stats.cvtsi() + (n + 1.0) * kick * kick;
}

}  // namespace tsikit
