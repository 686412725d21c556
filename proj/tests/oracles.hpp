#pragma once
// Test-only reference computations. Nothing here calls into the library's
// evaluation, policy or solver code paths.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <vector>

#include "rdtsp/core.hpp"
#include "rdtsp/rng.hpp"

namespace oracle {

using rdtsp::MetricInstance;
using rdtsp::Node;

// Sum of gamma^D_j with std::pow, straight from the definition.
inline double direct_value(const MetricInstance& inst, const std::vector<Node>& tour) {
    long double cum = 0.0L;
    long double total = 0.0L;
    Node prev = 0;
    for (Node v : tour) {
        cum += inst.distance(prev, v);
        total += std::pow(static_cast<long double>(inst.gamma()), cum);
        prev = v;
    }
    return static_cast<double>(total);
}

// Exhaustive search by recursion (not next_permutation).
inline double best_value(const MetricInstance& inst) {
    const std::size_t n = inst.n();
    std::vector<char> used(n + 1, 0);
    double best = -1.0;
    std::function<void(Node, double, double, std::size_t)> rec = [&](Node at, double cum,
                                                                     double acc, std::size_t depth) {
        if (depth == n) {
            best = std::max(best, acc);
            return;
        }
        for (Node v = 1; v <= static_cast<Node>(n); ++v) {
            if (used[v]) continue;
            used[v] = 1;
            const double c = cum + inst.distance(at, v);
            rec(v, c, acc + std::pow(inst.gamma(), c), depth + 1);
            used[v] = 0;
        }
    };
    rec(0, 0.0, 0.0, 0);
    return best;
}

// Half-life by bisection on gamma^x = 1/2 in long double.
inline long double half_life(long double gamma) {
    long double lo = 0.0L, hi = 1.0L;
    while (std::pow(gamma, hi) > 0.5L) hi *= 2.0L;
    for (int i = 0; i < 200; ++i) {
        const long double mid = 0.5L * (lo + hi);
        (std::pow(gamma, mid) > 0.5L ? lo : hi) = mid;
    }
    return 0.5L * (lo + hi);
}

// Greedy completion from `at`, skipping collected rewards.
inline void greedy_from(const MetricInstance& inst, Node at, std::vector<char>& used,
                        std::vector<Node>& tour) {
    const std::size_t n = inst.n();
    while (tour.size() < n) {
        Node best = 0;
        double bd = std::numeric_limits<double>::infinity();
        for (Node v = 1; v <= static_cast<Node>(n); ++v) {
            if (!used[v] && inst.distance(at, v) < bd) {
                bd = inst.distance(at, v);
                best = v;
            }
        }
        used[best] = 1;
        tour.push_back(best);
        at = best;
    }
}

inline std::vector<Node> nn_tour(const MetricInstance& inst) {
    std::vector<char> used(inst.n() + 1, 0);
    std::vector<Node> t;
    greedy_from(inst, 0, used, t);
    return t;
}

inline std::vector<Node> rnn_heads(const MetricInstance& inst, Node first) {
    std::vector<char> used(inst.n() + 1, 0);
    std::vector<Node> t{first};
    used[first] = 1;
    greedy_from(inst, first, used, t);
    return t;
}

inline std::vector<Node> ra_heads(const MetricInstance& inst, Node first) {
    std::vector<Node> rest;
    for (Node v = 1; v <= static_cast<Node>(inst.n()); ++v) {
        if (v != first) rest.push_back(v);
    }
    std::stable_sort(rest.begin(), rest.end(), [&](Node a, Node b) {
        return inst.distance(first, a) < inst.distance(first, b);
    });
    rest.insert(rest.begin(), first);
    return rest;
}

// Recursive DFS over edges shorter than theta, nearest neighbour first,
// then greedy from the last collected reward.
inline std::vector<Node> rdfs_heads(const MetricInstance& inst, Node first, double theta) {
    std::vector<char> used(inst.n() + 1, 0);
    std::vector<Node> t;
    std::function<void(Node)> visit = [&](Node u) {
        used[u] = 1;
        t.push_back(u);
        std::vector<Node> nb;
        for (Node v = 1; v <= static_cast<Node>(inst.n()); ++v) {
            if (!used[v] && inst.distance(u, v) < theta) nb.push_back(v);
        }
        std::stable_sort(nb.begin(), nb.end(), [&](Node a, Node b) {
            return inst.distance(u, a) < inst.distance(u, b);
        });
        for (Node v : nb) {
            if (!used[v]) visit(v);
        }
    };
    visit(first);
    greedy_from(inst, t.back(), used, t);
    return t;
}

inline int level_count(std::size_t n) {
    int l = 0;
    while ((std::size_t{1} << l) < n) ++l;
    return std::max(l, 1);
}

inline double theta_for(double gamma, std::size_t n, int level) {
    const double reduced = std::max(1.0, std::floor(static_cast<double>(n) / std::ldexp(1.0, level)));
    return static_cast<double>(half_life(gamma)) / std::sqrt(reduced);
}

// Random Euclidean instance in [0, scale]^2 with the start at a random point.
inline MetricInstance random_euclidean(std::size_t n, double gamma, rdtsp::RngStream& rng,
                                       double scale = 3.0) {
    std::vector<rdtsp::Point> pts;
    for (std::size_t i = 0; i <= n; ++i) pts.push_back({rng.uniform(0, scale), rng.uniform(0, scale)});
    return rdtsp::instance_from_points(std::move(pts), gamma);
}

// Floyd-Warshall closure of an edge list over nodes 0..m-1.
inline std::vector<double> metric_closure(std::size_t m,
                                          const std::vector<std::tuple<int, int, double>>& edges) {
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> d(m * m, inf);
    for (std::size_t i = 0; i < m; ++i) d[i * m + i] = 0.0;
    for (auto [a, b, w] : edges) {
        d[a * m + b] = std::min(d[a * m + b], w);
        d[b * m + a] = std::min(d[b * m + a], w);
    }
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                d[i * m + j] = std::min(d[i * m + j], d[i * m + k] + d[k * m + j]);
    return d;
}

}  // namespace oracle
