#pragma once

#include <utility>
#include <vector>

#include "tsikit/barcode.hpp"

namespace tsikit {

// One side of a bound: holds is lhs <= rhs + 1e-12.
struct BoundCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;
};

// Optimal diagram matching. Entries pair bar indices of the two diagrams;
// -1 stands for the diagonal (projection ((b+d)/2, (b+d)/2)). Every finite bar
// of each diagram appears exactly once.
struct Matching {
    std::vector<std::pair<int, int>> pairs;
    double cost = 0.0;
};

// W_p(B, empty) = (sum (l_i/2)^p)^(1/p) = 0.5*||l||_p for finite p,
// 0.5*max(l) for p = inf. p must be in [2, inf]; empty barcode gives 0.
double wasserstein_to_empty(const Barcode& b, double p);

// Exact bottleneck distance with diagonal augmentation: binary search over the
// candidate set (pairwise l_inf distances plus all diagonal projection
// distances) with an augmenting-path perfect-matching test at each threshold.
// Ground metric is l_inf on (birth, death). Operates on finite bars.
double bottleneck(const Barcode& b1, const Barcode& b2);
Matching bottleneck_matching(const Barcode& b1, const Barcode& b2);

// tsi(b) <= 4 n^(-2/p) W_p(b, empty)^2,  p in [2, inf]. Requires n >= 2.
BoundCheck check_tsi_empty_bound(const Barcode& b, double p);

// tsi(b) <= (n/(n-1)) * (max l - min l)^2 / 4  (Popoviciu). Requires n >= 2.
BoundCheck check_popoviciu_bound(const Barcode& b);

// |tsi(b1) - tsi(b2)| <= (4/(n-1)) (L1 + L2) d_B(b1, b2) for equal cardinality n >= 2.
BoundCheck check_equal_cardinality_bound(const Barcode& b1, const Barcode& b2);

// |cvtsi(b1) - cvtsi(b2)| <= (8 n^2 / ((n-1) min(mean1, mean2))) d_B(b1, b2)
// for equal cardinality n >= 2 and positive mean lifetimes.
BoundCheck check_cvtsi_stability_bound(const Barcode& b1, const Barcode& b2);

}  // namespace tsikit
