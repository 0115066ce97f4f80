#include "tsikit/summaries.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "tsikit/numeric.hpp"

namespace tsikit {

bool all_lifetimes_equal(const Barcode& b) {
    if (b.n() <= 1) return true;
    double tol = 1e-12 * std::max(1.0, std::abs(b.mean_lifetime()));
    return b.max_lifetime() - b.min_lifetime() <= tol;
}

double tsi(const Barcode& b) {
    std::size_t n = b.n();
    if (n <= 1) return 0.0;
    if (all_lifetimes_equal(b)) return 0.0;
    double mean = b.mean_lifetime();
    KahanAccumulator sq;
    for (double ell : b.lifetimes()) {
        double d = ell - mean;
        sq.add(d * d);
    }
    return sq.value() / static_cast<double>(n - 1);
}

std::pair<double, double> tsi_bounds(std::size_t n, double L) {
    if (n < 2) throw std::invalid_argument("tsi bounds need n >= 2");
    if (L < 0) throw std::invalid_argument("total persistence must be nonnegative");
    return {0.0, L * L / static_cast<double>(n)};
}

Barcode scale(const Barcode& b, double c) {
    if (!(c >= 0)) throw std::invalid_argument("scale factor must be nonnegative");
    std::vector<Bar> bars = b.bars();
    for (Bar& bar : bars) {
        bar.birth *= c;
        bar.death = (c == 0.0) ? 0.0 : bar.death * c;  // avoid 0 * inf
    }
    return Barcode(std::move(bars));
}

Barcode shift_deaths(const Barcode& b, double c) {
    if (!std::isfinite(c)) throw std::invalid_argument("shift must be finite");
    if (!b.empty() && c <= -b.min_lifetime())
        throw std::invalid_argument("shift would create a negative lifetime");
    std::vector<Bar> bars = b.bars();
    for (Bar& bar : bars) bar.death += c;
    return Barcode(std::move(bars));
}

double tsigi(const Barcode& b) {
    double L = b.total_persistence();
    if (!(L > 0)) throw std::domain_error("tsigi undefined for zero total persistence");
    KahanAccumulator sq;
    for (double ell : b.lifetimes()) sq.add(ell * ell);
    return sq.value() / L;
}

double moment(const Barcode& b, int k) {
    if (k < 1) throw std::invalid_argument("moment order must be >= 1");
    if (b.empty()) throw std::domain_error("moments undefined for an empty barcode");
    if (k == 1) return b.mean_lifetime();
    double lmax = b.max_lifetime();
    if (lmax == 0.0) throw std::domain_error("moment denominator is zero (all lifetimes 0)");
    // M_k = lmax * sum((l/lmax)^k) / sum((l/lmax)^(k-1)); ratios in [0,1], so any
    // k is overflow-free and the denominator is at least 1.
    KahanAccumulator num, den;
    for (double ell : b.lifetimes()) {
        double r = ell / lmax;
        double rk1 = std::pow(r, k - 1);
        den.add(rk1);
        num.add(rk1 * r);
    }
    return lmax * num.value() / den.value();
}

}  // namespace tsikit
