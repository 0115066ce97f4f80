#pragma once

#include <utility>

#include "tsikit/barcode.hpp"

namespace tsikit {

// Lifetimes within 1e-12 * max(1, mean) of each other count as all-equal;
// lifetimes come from floating subtraction, so exact comparison would be wrong.
bool all_lifetimes_equal(const Barcode& b);

// Unbiased sample variance of the lifetime multiset; 0 for n <= 1 and for
// all-equal lifetimes (exact extremal case).
double tsi(const Barcode& b);

// Attainable range of tsi over barcodes with n bars and total persistence L:
// (0, L^2/n). Lower end at the uniform multiset, upper at {L,0,...,0}.
std::pair<double, double> tsi_bounds(std::size_t n, double L);

// [b,d) -> [c*b, c*d). tsi scales by c^2; entropy-family statistics are invariant.
Barcode scale(const Barcode& b, double c);

// [b,d) -> [b, d+c); requires c > -min lifetime. tsi is unchanged.
Barcode shift_deaths(const Barcode& b, double c);

// Persistence-weighted mean lifetime sum(l^2)/sum(l); requires total persistence > 0.
double tsigi(const Barcode& b);

// Moment hierarchy M_k = S_k / S_{k-1} with S_k = sum(l^k), S_0 = n.
// M_1 = mean lifetime, M_2 = tsigi, M_k -> max lifetime as k grows.
// Computed with max-lifetime factoring so large k cannot overflow.
double moment(const Barcode& b, int k);

}  // namespace tsikit
