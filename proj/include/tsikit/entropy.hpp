#pragma once

#include <vector>

#include "tsikit/barcode.hpp"

namespace tsikit {

// Lifetime weights p_i = l_i / L, renormalized by their computed sum so that
// sum(p) == 1 holds to the last bit even when L is a compensated sum.
std::vector<double> weight_vector(const Barcode& b);

// Shannon entropy -sum(p ln p), natural log, 0*ln(0) = 0. Requires L > 0.
double persistent_entropy(const Barcode& b);

// Renyi entropy ln(sum(p^alpha))/(1-alpha), alpha > 0, alpha != 1.
// alpha = 2 gives -ln of the collision probability.
double renyi_entropy(const Barcode& b, double alpha);

// Scale-invariant TSI: tsi / (L/n)^2, equal to sum((n p_i - 1)^2)/(n-1).
// Requires n >= 2 and L > 0. Range [0, n]: 0 at uniform, n at {L,0,...,0}.
double cvtsi(const Barcode& b);

// sum(p_i^2); satisfies sum(p^2) = 1/n + ((n-1)/n^2) * cvtsi.
double collision_probability(const Barcode& b);

// Inverse of the cvtsi -> H2 reparametrization: (n^2/(n-1)) * (e^{-h2} - 1/n).
// h2 must satisfy e^{-h2} in [1/n, 1] up to 1e-9 slack.
double cvtsi_from_renyi2(std::size_t n, double h2);

// ||p - u||_2^2 where u is uniform; cvtsi = (n^2/(n-1)) * this.
double distance_to_uniform_sq(const Barcode& b);

// E - [ln n - ((n-1)/(2n)) * cvtsi]: the remainder of the quadratic entropy
// expansion around uniform, O(||p - u||^3).
double entropy_expansion_residual(const Barcode& b);

}  // namespace tsikit
