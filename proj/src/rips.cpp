#include "tsikit/rips.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace tsikit {

DistanceMatrix::DistanceMatrix(const PointCloud& pc) : n_(pc.size()), d_(n_ * n_, 0.0) {
    const std::size_t dim = pc.dim();
    for (std::size_t i = 0; i < n_; ++i) {
        const auto pi = pc.point(i);
        for (std::size_t j = i + 1; j < n_; ++j) {
            const auto pj = pc.point(j);
            double acc = 0.0;
            for (std::size_t k = 0; k < dim; ++k) {
                const double diff = pi[k] - pj[k];
                acc += diff * diff;
            }
            const double dist = std::sqrt(acc);
            d_[i * n_ + j] = dist;
            d_[j * n_ + i] = dist;
        }
    }
}

double DistanceMatrix::enclosing_radius() const {
    if (n_ <= 1) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n_; ++i) {
        double worst = 0.0;
        for (std::size_t j = 0; j < n_; ++j) worst = std::max(worst, d_[i * n_ + j]);
        best = std::min(best, worst);
    }
    return best;
}

DistanceMatrix distance_matrix(const PointCloud& pc) { return DistanceMatrix(pc); }

namespace {

struct Edge {
    double w;
    std::int32_t a;
    std::int32_t b;
};

struct UnionFind {
    std::vector<std::int32_t> parent;
    std::vector<std::int32_t> size;

    explicit UnionFind(std::size_t n) : parent(n), size(n, 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    std::int32_t find(std::int32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    // False when x and y were already connected.
    bool unite(std::int32_t x, std::int32_t y) {
        std::int32_t rx = find(x);
        std::int32_t ry = find(y);
        if (rx == ry) return false;
        if (size[rx] < size[ry]) std::swap(rx, ry);
        parent[ry] = rx;
        size[rx] += size[ry];
        return true;
    }
};

// Symmetric difference of two ascending id lists.
void xor_into(std::vector<std::uint64_t>& col, const std::vector<std::uint64_t>& other,
              std::vector<std::uint64_t>& scratch) {
    scratch.clear();
    std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(),
                                  std::back_inserter(scratch));
    col.swap(scratch);
}

}  // namespace

std::map<int, Barcode> rips_persistence(const PointCloud& pc, int max_dim,
                                        std::optional<double> max_radius) {
    if (max_dim < 0 || max_dim > 1)
        throw std::invalid_argument("rips_persistence: max_dim must be 0 or 1");
    if (max_radius && !(*max_radius >= 0.0))
        throw std::invalid_argument("rips_persistence: max_radius must be nonnegative");

    const std::size_t n = pc.size();
    const double inf = std::numeric_limits<double>::infinity();

    std::vector<Bar> bars0;
    std::vector<Bar> bars1;

    if (n == 0) {
        std::map<int, Barcode> out;
        out.emplace(0, Barcode(bars0));
        if (max_dim >= 1) out.emplace(1, Barcode(bars1));
        return out;
    }

    const DistanceMatrix dm(pc);
    const double cap = max_radius ? *max_radius : dm.enclosing_radius();

    std::vector<Edge> edges;
    edges.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (dm(i, j) <= cap)
                edges.push_back({dm(i, j), static_cast<std::int32_t>(i),
                                 static_cast<std::int32_t>(j)});
    std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
        if (x.w != y.w) return x.w < y.w;
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    });
    const std::size_t ne = edges.size();

    // Degree 0: each component-merging edge kills the younger class at its weight.
    UnionFind uf(n);
    std::vector<char> is_tree(ne, 0);
    for (std::size_t e = 0; e < ne; ++e) {
        if (uf.unite(edges[e].a, edges[e].b)) {
            is_tree[e] = 1;
            if (edges[e].w > 0.0) bars0.push_back({0, 0.0, edges[e].w});
        }
    }
    {
        std::size_t components = 0;
        for (std::size_t v = 0; v < n; ++v)
            if (uf.find(static_cast<std::int32_t>(v)) == static_cast<std::int32_t>(v))
                ++components;
        for (std::size_t c = 0; c < components; ++c) bars0.push_back({0, 0.0, inf});
    }

    if (max_dim >= 1 && ne > 0) {
        // Edge ranks follow the sorted order; -1 marks pairs beyond the cap.
        std::vector<std::int32_t> rank(n * n, -1);
        for (std::size_t e = 0; e < ne; ++e) {
            rank[static_cast<std::size_t>(edges[e].a) * n + edges[e].b] =
                static_cast<std::int32_t>(e);
            rank[static_cast<std::size_t>(edges[e].b) * n + edges[e].a] =
                static_cast<std::int32_t>(e);
        }

        // Degree-1 pairs come from the coboundary reduction: one column per
        // cycle-creating edge, processed from the last edge down, rows ordered by
        // (highest edge rank, opposite vertex). A triangle id packs that key, so
        // id order refines filtration order and the column minimum is the pivot.
        const auto pack = [](std::int32_t r, std::size_t v) {
            return (static_cast<std::uint64_t>(r) << 32) | static_cast<std::uint64_t>(v);
        };
        const auto cofacet_id = [&](std::int32_t re, std::int32_t ra, std::int32_t rb,
                                    std::size_t a, std::size_t b, std::size_t k) {
            if (ra > rb) return ra > re ? pack(ra, b) : pack(re, k);
            return rb > re ? pack(rb, a) : pack(re, k);
        };
        const auto build_column = [&](std::int32_t re) {
            std::vector<std::uint64_t> out;
            const std::size_t a = static_cast<std::size_t>(edges[re].a);
            const std::size_t b = static_cast<std::size_t>(edges[re].b);
            for (std::size_t k = 0; k < n; ++k) {
                const std::int32_t ra = rank[a * n + k];
                const std::int32_t rb = rank[b * n + k];
                if (ra < 0 || rb < 0) continue;
                out.push_back(cofacet_id(re, ra, rb, a, b, k));
            }
            std::sort(out.begin(), out.end());
            return out;
        };
        const auto emit = [&](std::int32_t re, std::uint64_t pivot) {
            const std::int32_t t = static_cast<std::int32_t>(pivot >> 32);
            if (edges[t].w > edges[re].w) bars1.push_back({1, edges[re].w, edges[t].w});
        };

        std::unordered_map<std::uint64_t, std::int32_t> owner;  // pivot id -> edge
        std::unordered_map<std::int32_t, std::vector<std::uint64_t>> cols;
        std::vector<std::uint64_t> scratch;
        owner.reserve(ne);

        for (std::int32_t e = static_cast<std::int32_t>(ne) - 1; e >= 0; --e) {
            if (is_tree[e]) continue;  // paired in degree 0

            // Unclaimed minimal cofacet settles the column with no materialization.
            const std::size_t a = static_cast<std::size_t>(edges[e].a);
            const std::size_t b = static_cast<std::size_t>(edges[e].b);
            std::uint64_t least = std::numeric_limits<std::uint64_t>::max();
            for (std::size_t k = 0; k < n; ++k) {
                const std::int32_t ra = rank[a * n + k];
                const std::int32_t rb = rank[b * n + k];
                if (ra < 0 || rb < 0) continue;
                least = std::min(least, cofacet_id(e, ra, rb, a, b, k));
            }
            if (least == std::numeric_limits<std::uint64_t>::max()) {
                bars1.push_back({1, edges[e].w, inf});
                continue;
            }
            if (owner.emplace(least, e).second) {
                emit(e, least);
                continue;
            }

            std::vector<std::uint64_t> col = build_column(e);
            for (;;) {
                if (col.empty()) {
                    bars1.push_back({1, edges[e].w, inf});
                    break;
                }
                const std::uint64_t p = col.front();
                const auto it = owner.find(p);
                if (it == owner.end()) {
                    owner.emplace(p, e);
                    emit(e, p);
                    cols.emplace(e, std::move(col));
                    break;
                }
                auto cit = cols.find(it->second);
                if (cit == cols.end())
                    cit = cols.emplace(it->second, build_column(it->second)).first;
                xor_into(col, cit->second, scratch);
            }
        }
    }

    std::sort(bars0.begin(), bars0.end(), [](const Bar& x, const Bar& y) {
        if (x.birth != y.birth) return x.birth < y.birth;
        return x.death < y.death;
    });
    std::sort(bars1.begin(), bars1.end(), [](const Bar& x, const Bar& y) {
        if (x.birth != y.birth) return x.birth < y.birth;
        return x.death < y.death;
    });

    std::map<int, Barcode> out;
    out.emplace(0, Barcode(bars0));
    if (max_dim >= 1) out.emplace(1, Barcode(bars1));
    return out;
}

}  // namespace tsikit
