#pragma once

#include <cmath>
#include <span>

namespace tsikit {

// Neumaier-compensated accumulator: the running error of every add is carried
// in a second double, so sums agree with exact arithmetic to one rounding.
struct KahanAccumulator {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }

    double value() const { return sum + comp; }
};

inline double compensated_sum(std::span<const double> xs) {
    KahanAccumulator acc;
    for (double x : xs) acc.add(x);
    return acc.value();
}

}  // namespace tsikit
