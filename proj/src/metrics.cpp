#include "tsikit/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "tsikit/entropy.hpp"
#include "tsikit/numeric.hpp"
#include "tsikit/summaries.hpp"

namespace tsikit {
namespace {

constexpr double kBoundSlack = 1e-12;

struct Point {
    double birth;
    double death;
};

std::vector<Point> finite_points(const Barcode& b) {
    std::vector<Point> pts;
    pts.reserve(b.bars().size());
    for (const Bar& bar : b.bars())
        if (!bar.is_infinite()) pts.push_back({bar.birth, bar.death});
    return pts;
}

double linf(const Point& a, const Point& b) {
    return std::max(std::abs(a.birth - b.birth), std::abs(a.death - b.death));
}

double diag_dist(const Point& a) { return (a.death - a.birth) / 2.0; }

// Perfect-matching feasibility at threshold t on the diagonal-augmented
// bipartite graph: left = A plus one proxy per bar of B, right = B plus one
// proxy per bar of A. A bar may pair with its own projection when it is within
// t of the diagonal; proxy-proxy edges are free.
class BottleneckGraph {
public:
    BottleneckGraph(const std::vector<Point>& a, const std::vector<Point>& b)
        : a_(a), b_(b), na_(a.size()), nb_(b.size()) {}

    bool feasible(double t) {
        std::size_t size = na_ + nb_;
        match_right_.assign(size, -1);
        match_left_.assign(size, -1);
        visited_.assign(size, 0);
        stamp_ = 0;
        for (std::size_t u = 0; u < size; ++u) {
            ++stamp_;
            if (!augment(u, t)) return false;
        }
        return true;
    }

    // Valid after a successful feasible() call.
    Matching extract(double t) const {
        Matching m;
        m.cost = t;
        for (std::size_t u = 0; u < na_; ++u) {
            long v = match_left_[u];
            m.pairs.emplace_back(static_cast<int>(u), v < static_cast<long>(nb_)
                                                          ? static_cast<int>(v)
                                                          : -1);
        }
        for (std::size_t u = na_; u < na_ + nb_; ++u) {
            long v = match_left_[u];
            if (v >= 0 && v < static_cast<long>(nb_))
                m.pairs.emplace_back(-1, static_cast<int>(v));
        }
        return m;
    }

private:
    bool edge(std::size_t u, std::size_t v, double t) const {
        bool u_real = u < na_;
        bool v_real = v < nb_;
        if (u_real && v_real) return linf(a_[u], b_[v]) <= t;
        if (u_real) return v - nb_ == u && diag_dist(a_[u]) <= t;  // own projection only
        if (v_real) return u - na_ == v && diag_dist(b_[v]) <= t;
        return true;  // diagonal to diagonal
    }

    bool augment(std::size_t u, double t) {
        for (std::size_t v = 0; v < na_ + nb_; ++v) {
            if (visited_[v] == stamp_ || !edge(u, v, t)) continue;
            visited_[v] = stamp_;
            if (match_right_[v] < 0 || augment(static_cast<std::size_t>(match_right_[v]), t)) {
                match_right_[v] = static_cast<long>(u);
                match_left_[u] = static_cast<long>(v);
                return true;
            }
        }
        return false;
    }

    const std::vector<Point>& a_;
    const std::vector<Point>& b_;
    std::size_t na_, nb_;
    std::vector<long> match_right_, match_left_;
    std::vector<unsigned> visited_;
    unsigned stamp_ = 0;
};

std::vector<double> candidate_thresholds(const std::vector<Point>& a,
                                         const std::vector<Point>& b) {
    std::vector<double> c;
    c.push_back(0.0);
    for (const Point& p : a) c.push_back(diag_dist(p));
    for (const Point& q : b) c.push_back(diag_dist(q));
    for (const Point& p : a)
        for (const Point& q : b) c.push_back(linf(p, q));
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    return c;
}

void require_pair(const Barcode& b1, const Barcode& b2) {
    if (b1.n() != b2.n()) throw std::invalid_argument("diagrams must have equal cardinality");
    if (b1.n() < 2) throw std::invalid_argument("bound needs n >= 2");
}

}  // namespace

double wasserstein_to_empty(const Barcode& b, double p) {
    if (std::isnan(p) || p < 2) throw std::invalid_argument("p must be in [2, inf]");
    if (b.empty()) return 0.0;
    double lmax = b.max_lifetime();
    if (std::isinf(p) || lmax == 0.0) return lmax / 2.0;
    // 0.5 * lmax * (sum (l/lmax)^p)^(1/p); ratios in [0,1] keep large p finite.
    KahanAccumulator acc;
    for (double ell : b.lifetimes()) acc.add(std::pow(ell / lmax, p));
    return 0.5 * lmax * std::pow(acc.value(), 1.0 / p);
}

Matching bottleneck_matching(const Barcode& b1, const Barcode& b2) {
    std::vector<Point> a = finite_points(b1);
    std::vector<Point> b = finite_points(b2);
    std::vector<double> cand = candidate_thresholds(a, b);
    BottleneckGraph graph(a, b);
    std::size_t lo = 0, hi = cand.size() - 1;  // the largest candidate is always feasible
    while (lo < hi) {
        std::size_t mid = lo + (hi - lo) / 2;
        if (graph.feasible(cand[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    graph.feasible(cand[lo]);
    return graph.extract(cand[lo]);
}

double bottleneck(const Barcode& b1, const Barcode& b2) {
    return bottleneck_matching(b1, b2).cost;
}

BoundCheck check_tsi_empty_bound(const Barcode& b, double p) {
    if (b.n() < 2) throw std::invalid_argument("bound needs n >= 2");
    double n = static_cast<double>(b.n());
    double w = wasserstein_to_empty(b, p);
    double factor = std::isinf(p) ? 1.0 : std::pow(n, -2.0 / p);
    BoundCheck check{tsi(b), 4.0 * factor * w * w, false};
    check.holds = check.lhs <= check.rhs + kBoundSlack;
    return check;
}

BoundCheck check_popoviciu_bound(const Barcode& b) {
    if (b.n() < 2) throw std::invalid_argument("bound needs n >= 2");
    double n = static_cast<double>(b.n());
    double range = b.max_lifetime() - b.min_lifetime();
    BoundCheck check{tsi(b), n / (n - 1.0) * 0.25 * range * range, false};
    check.holds = check.lhs <= check.rhs + kBoundSlack;
    return check;
}

BoundCheck check_equal_cardinality_bound(const Barcode& b1, const Barcode& b2) {
    require_pair(b1, b2);
    double n = static_cast<double>(b1.n());
    BoundCheck check;
    check.lhs = std::abs(tsi(b1) - tsi(b2));
    check.rhs = 4.0 / (n - 1.0) * (b1.total_persistence() + b2.total_persistence()) *
                bottleneck(b1, b2);
    check.holds = check.lhs <= check.rhs + kBoundSlack;
    return check;
}

BoundCheck check_cvtsi_stability_bound(const Barcode& b1, const Barcode& b2) {
    require_pair(b1, b2);
    double m1 = b1.mean_lifetime();
    double m2 = b2.mean_lifetime();
    if (!(m1 > 0) || !(m2 > 0))
        throw std::invalid_argument("bound needs positive mean lifetimes");
    double n = static_cast<double>(b1.n());
    BoundCheck check;
    check.lhs = std::abs(cvtsi(b1) - cvtsi(b2));
    check.rhs = 8.0 * n * n / ((n - 1.0) * std::min(m1, m2)) * bottleneck(b1, b2);
    check.holds = check.lhs <= check.rhs + kBoundSlack;
    return check;
}

}  // namespace tsikit
