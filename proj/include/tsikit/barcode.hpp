#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

namespace tsikit {

// One persistence interval [birth, death). death may be +infinity.
struct Bar {
    int degree = 0;
    double birth = 0.0;
    double death = 0.0;

    double lifetime() const { return death - birth; }
    bool is_infinite() const;

    friend bool operator==(const Bar&, const Bar&) = default;
};

// What to do with infinite bars when deriving the lifetime multiset.
// Drop excludes them from all scalar summaries; Truncate caps the death at a
// user-supplied filtration value instead.
enum class InfinitePolicy { Drop, Truncate };

// Immutable multiset of bars plus the derived lifetime multiset. Bars with
// infinite death are kept in bars() for I/O and metrics but, under the default
// policy, never enter lifetimes()/n()/total_persistence().
class Barcode {
public:
    Barcode() = default;
    explicit Barcode(std::vector<Bar> bars,
                     InfinitePolicy policy = InfinitePolicy::Drop,
                     double death_cap = std::numeric_limits<double>::quiet_NaN());

    // Bars [0, l) of the given degree; the usual way tests build lifetime multisets.
    static Barcode from_lifetimes(std::span<const double> lifetimes, int degree = 1);

    const std::vector<Bar>& bars() const { return bars_; }
    const std::vector<double>& lifetimes() const { return lifetimes_; }

    // Cardinality of the lifetime multiset (finite bars under Drop).
    std::size_t n() const { return lifetimes_.size(); }
    bool empty() const { return lifetimes_.empty(); }

    double total_persistence() const { return total_; }  // compensated sum of lifetimes
    double mean_lifetime() const;                        // requires n >= 1
    double min_lifetime() const;                         // requires n >= 1
    double max_lifetime() const;                         // requires n >= 1

private:
    std::vector<Bar> bars_;
    std::vector<double> lifetimes_;
    double total_ = 0.0;
};

// Finite list of points in d-dimensional Euclidean space, d >= 1.
// All coordinates finite; every point has the same dimension.
class PointCloud {
public:
    PointCloud() = default;
    explicit PointCloud(std::size_t dim) : dim_(dim) {}
    static PointCloud from_rows(const std::vector<std::vector<double>>& rows);

    std::size_t size() const { return dim_ == 0 ? 0 : coords_.size() / dim_; }
    std::size_t dim() const { return dim_; }

    std::span<const double> point(std::size_t i) const {
        return {coords_.data() + i * dim_, dim_};
    }
    double coord(std::size_t i, std::size_t k) const { return coords_[i * dim_ + k]; }

    void push_back(std::span<const double> p);
    std::vector<std::vector<double>> rows() const;

private:
    std::size_t dim_ = 0;
    std::vector<double> coords_;
};

}  // namespace tsikit
