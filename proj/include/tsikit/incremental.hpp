#pragma once

#include <cstddef>
#include <vector>

#include "tsikit/barcode.hpp"

namespace tsikit {

// Power sums of a lifetime multiset: n, S1 = sum(l), S2 = sum(l^2).
// The update formulas below consume only (n, sum, sum_sq); the values vector
// is kept so that delete can reject lifetimes that are not members
// (tolerance 1e-9 absolute, per lifetimes arriving from floating pipelines).
class RunningStats {
public:
    RunningStats() = default;
    static RunningStats from_lifetimes(std::span<const double> lifetimes);
    static RunningStats from_barcode(const Barcode& b);

    std::size_t n() const { return values_.size(); }
    double sum() const { return sum_; }
    double sum_sq() const { return sum_sq_; }
    double mean() const;  // requires n >= 1

    // Sample variance from the power sums: (S2 - S1^2/n)/(n-1); 0 for n <= 1.
    double tsi() const;
    double cvtsi() const;  // requires n >= 2 and mean > 0

    bool contains(double ell, double tol = 1e-9) const;

    void insert(double ell);
    void erase(double ell);  // rejects non-members (1e-9 tolerance)

    const std::vector<double>& values() const { return values_; }

private:
    double sum_ = 0.0;
    double sum_sq_ = 0.0;
    std::vector<double> values_;
};

// tsi of the multiset with ell added: ((n-1)/n)*tsi + (ell - mean)^2/(n+1).
// Requires n >= 2. Exact algebra on the power sums.
double tsi_after_insert(const RunningStats& stats, double ell);

// tsi of the multiset with one copy of ell removed:
// ((n-1)/(n-2))*tsi - (n/((n-1)(n-2)))*(ell - mean)^2 for n >= 3.
// n == 2 leaves a single bar, whose tsi is 0 by the n <= 1 convention
// (the formula itself needs n >= 3). n <= 1 is rejected, as is a
// non-member ell (1e-9 tolerance).
double tsi_after_delete(const RunningStats& stats, double ell);

// Variance barrier: inserting ell increases tsi iff (ell - mean)^2 > ((n+1)/n)*tsi,
// strictly. Compared in product form so the equality case is exact.
bool increases_tsi(const RunningStats& stats, double ell);

// cvtsi of the multiset with ell added; with r = (ell - mean)/mean:
// ((n+1)^2 (n-1) / (n (n+1+r)^2)) * cvtsi + (n+1) * (r/(n+1+r))^2.
// Requires n >= 2 and mean > 0.
double cvtsi_after_insert(const RunningStats& stats, double ell);

}  // namespace tsikit
