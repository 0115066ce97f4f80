#include "tsikit/entropy.hpp"

#include <cmath>
#include <stdexcept>

#include "tsikit/numeric.hpp"
#include "tsikit/summaries.hpp"

namespace tsikit {
namespace {

void require_weights(const Barcode& b) {
    if (!(b.total_persistence() > 0))
        throw std::domain_error("undefined for zero total persistence");
}

void require_cvtsi(const Barcode& b) {
    if (b.n() < 2) throw std::domain_error("undefined for fewer than 2 bars");
    require_weights(b);
}

}  // namespace

std::vector<double> weight_vector(const Barcode& b) {
    require_weights(b);
    double L = b.total_persistence();
    std::vector<double> p;
    p.reserve(b.n());
    KahanAccumulator s;
    for (double ell : b.lifetimes()) {
        p.push_back(ell / L);
        s.add(p.back());
    }
    double norm = s.value();
    for (double& w : p) w /= norm;
    return p;
}

double persistent_entropy(const Barcode& b) {
    KahanAccumulator acc;
    for (double p : weight_vector(b))
        if (p > 0) acc.add(p * std::log(p));
    return 0.0 - acc.value();
}

double renyi_entropy(const Barcode& b, double alpha) {
    if (!(alpha > 0) || alpha == 1)
        throw std::invalid_argument("renyi order must be positive and != 1");
    KahanAccumulator acc;
    for (double p : weight_vector(b))
        if (p > 0) acc.add(std::pow(p, alpha));
    return std::log(acc.value()) / (1.0 - alpha);
}

double cvtsi(const Barcode& b) {
    require_cvtsi(b);
    double mean = b.mean_lifetime();
    return tsi(b) / (mean * mean);
}

double collision_probability(const Barcode& b) {
    require_cvtsi(b);
    KahanAccumulator acc;
    for (double p : weight_vector(b)) acc.add(p * p);
    return acc.value();
}

double cvtsi_from_renyi2(std::size_t n, double h2) {
    if (n < 2) throw std::invalid_argument("cvtsi needs n >= 2");
    if (std::isnan(h2)) throw std::invalid_argument("h2 must be a number");
    double c = std::exp(-h2);
    double lo = 1.0 / static_cast<double>(n);
    if (c < lo - 1e-9 || c > 1.0 + 1e-9)
        throw std::invalid_argument("h2 outside the feasible range [0, ln n]");
    c = std::min(std::max(c, lo), 1.0);
    double nd = static_cast<double>(n);
    return nd * nd / (nd - 1.0) * (c - lo);
}

double distance_to_uniform_sq(const Barcode& b) {
    require_cvtsi(b);
    double u = 1.0 / static_cast<double>(b.n());
    KahanAccumulator acc;
    for (double p : weight_vector(b)) {
        double d = p - u;
        acc.add(d * d);
    }
    return acc.value();
}

double entropy_expansion_residual(const Barcode& b) {
    require_cvtsi(b);
    double nd = static_cast<double>(b.n());
    double quadratic = std::log(nd) - (nd - 1.0) / (2.0 * nd) * cvtsi(b);
    return persistent_entropy(b) - quadratic;
}

}  // namespace tsikit
