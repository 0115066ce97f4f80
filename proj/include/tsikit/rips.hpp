#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "tsikit/barcode.hpp"

namespace tsikit {

// Euclidean distances, zero diagonal, symmetric to the last bit (each
// unordered pair computed once and mirrored).
class DistanceMatrix {
public:
    explicit DistanceMatrix(const PointCloud& pc);

    std::size_t size() const { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }

    // min over points of the max distance to any other point; at this radius the
    // complex is a cone, so no degree-1 feature survives past it.
    double enclosing_radius() const;

private:
    std::size_t n_ = 0;
    std::vector<double> d_;
};

DistanceMatrix distance_matrix(const PointCloud& pc);

// Vietoris-Rips persistent homology in degrees 0..max_dim (max_dim in {0,1}).
// Degree 0 comes from union-find over weight-sorted edges (one infinite bar per
// component left at the cutoff); degree 1 from sparse Z/2 boundary reduction
// over triangles. Births and deaths are exact pairwise distances. max_radius
// defaults to the enclosing radius; zero-persistence pairs are dropped.
std::map<int, Barcode> rips_persistence(const PointCloud& pc, int max_dim = 1,
                                        std::optional<double> max_radius = std::nullopt);

}  // namespace tsikit
