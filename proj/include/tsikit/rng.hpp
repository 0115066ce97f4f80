#pragma once

#include <cstdint>

namespace tsikit {

// Deterministic seed tree: derive() maps (state, salt) to a decorrelated child
// state, so substreams never overlap regardless of how much each consumes.
struct RngSeed {
    std::uint64_t state = 0;

    RngSeed derive(std::uint64_t salt) const;
};

// Quantile of the standard normal, accurate to full double precision after one
// Halley refinement of a rational initial guess. p must lie in (0, 1).
double inverse_normal_cdf(double p);

// Counter-based generator: output i is a bijective mix of key + i, so the
// stream is reproducible and random-access without carried state beyond the
// counter.
class CounterRng {
public:
    explicit CounterRng(RngSeed seed) : key_(seed.state) {}

    std::uint64_t next_u64();
    double next_unit();    // uniform on [0, 1)
    double next_open();    // uniform on (0, 1)
    double next_normal();  // standard normal

private:
    std::uint64_t key_ = 0;
    std::uint64_t counter_ = 0;
};

}  // namespace tsikit
