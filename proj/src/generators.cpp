#include "rdtsp/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "rdtsp/rng.hpp"

namespace rdtsp {

std::string_view scenario_name(ScenarioKind kind) {
    switch (kind) {
        case ScenarioKind::RandomCities: return "random_cities";
        case ScenarioKind::Line3: return "line3";
        case ScenarioKind::RandomClusters: return "random_clusters";
        case ScenarioKind::Circles: return "circles";
        case ScenarioKind::RuralUrban: return "rural_urban";
        case ScenarioKind::Path: return "path";
    }
    return "?";
}

ScenarioKind parse_scenario(std::string_view name) {
    for (auto k : {ScenarioKind::RandomCities, ScenarioKind::Line3, ScenarioKind::RandomClusters,
                   ScenarioKind::Circles, ScenarioKind::RuralUrban, ScenarioKind::Path}) {
        if (scenario_name(k) == name) return k;
    }
    throw Error(ErrorCode::UnknownKind, "unknown scenario '" + std::string(name) + "'");
}

namespace {

std::size_t isqrt(std::size_t n) {
    auto r = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

RngStream scenario_stream(ScenarioKind kind, std::size_t n, std::uint64_t seed) {
    return RngStream(seed, {hash_string(scenario_name(kind)), n});
}

void random_cities(const ScenarioSpec& s, RngStream& rng, std::vector<Point>& out) {
    const double x = s.x();
    for (std::size_t i = 0; i < s.n; ++i) {
        const double px = rng.uniform(0.0, x);
        const double py = rng.uniform(0.0, x);
        out.push_back({px, py});
    }
}

void line3(const ScenarioSpec& s, RngStream& rng, std::vector<Point>& out) {
    const double ell = s.ell();
    const double third = s.theta() / 3.0;
    const std::size_t g3 = s.n / 3;
    const std::size_t g2 = (s.n - g3) / 2;
    const std::size_t g1 = s.n - g3 - g2;

    double nearest_g1 = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < g1; ++i) {
        const double px = rng.uniform(-third - ell, -third + ell);
        const double py = rng.normal(0.0, ell);
        nearest_g1 = std::min(nearest_g1, std::hypot(px, py));
        out.push_back({px, py});
    }
    // Group 2 must sit strictly closer to the origin than all of group 1.
    for (std::size_t i = 0; i < g2; ++i) {
        for (;;) {
            const double px = rng.uniform(third - 3.0 * ell, third - 2.0 * ell);
            const double py = rng.normal(0.0, ell);
            if (std::hypot(px, py) < nearest_g1) {
                out.push_back({px, py});
                break;
            }
        }
    }
    const double clamp = kLine3ClampHalfLives * s.x();
    for (std::size_t i = 1; i <= g3; ++i) {
        const double px = std::min(std::ldexp(third, static_cast<int>(std::min<std::size_t>(i, 4096))), clamp);
        out.push_back({px, 0.0});
    }
}

void random_clusters(const ScenarioSpec& s, RngStream& rng, std::vector<Point>& out) {
    const double x = s.x();
    const double ell = s.ell();
    std::vector<Point> centres;
    for (int j = 0; j < s.k_clusters(); ++j) {
        const double angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
        const double radius = x + rng.normal(0.0, s.cluster_jitter * ell);
        centres.push_back({radius * std::cos(angle), radius * std::sin(angle)});
    }
    for (std::size_t i = 0; i < s.n; ++i) {
        const Point& c = centres[rng.below(centres.size())];
        const double px = rng.uniform(c.x - 10.0 * ell, c.x + 10.0 * ell);
        const double py = rng.uniform(c.y - 10.0 * ell, c.y + 10.0 * ell);
        out.push_back({px, py});
    }
}

void circles(const ScenarioSpec& s, std::vector<Point>& out) {
    const std::size_t rings = isqrt(s.n);
    const std::size_t per_ring = (s.n + rings - 1) / rings;
    const double root_n = std::sqrt(static_cast<double>(s.n));
    const double growth = 1.0 + 1.0 / std::sqrt(root_n);
    for (std::size_t i = 1; i <= rings && out.size() < s.n + 1; ++i) {
        const double rho = s.x() / root_n * std::pow(growth, static_cast<double>(i));
        for (std::size_t j = 0; j < per_ring && out.size() < s.n + 1; ++j) {
            const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) /
                                 static_cast<double>(per_ring);
            out.push_back({rho * std::cos(angle), rho * std::sin(angle)});
        }
    }
}

void rural_urban(const ScenarioSpec& s, RngStream& rng, std::vector<Point>& out) {
    const double x = s.x();
    const double ell = s.ell();
    const std::size_t city = (s.n + 1) / 2;
    for (std::size_t i = 0; i < city; ++i) {
        const double px = rng.normal(x, ell);
        const double py = rng.normal(0.0, ell);
        out.push_back({px, py});
    }
    for (std::size_t i = city; i < s.n; ++i) {
        const double px = rng.normal(-x, 10.0 * x);
        const double py = rng.normal(0.0, 10.0 * x);
        out.push_back({px, py});
    }
}

std::vector<double> path_positions(std::size_t n, double length, RngStream& rng) {
    std::vector<double> gaps(n - 1);
    for (double& g : gaps) g = 1.0 - rng.uniform01();  // (0, 1]
    const double total = std::accumulate(gaps.begin(), gaps.end(), 0.0);
    std::vector<double> pos{0.0};
    double at = 0.0;
    for (double g : gaps) {
        at += g * (length / total);
        pos.push_back(at);
    }
    return pos;
}

}  // namespace

std::vector<Point> scenario_points(const ScenarioSpec& spec) {
    if (spec.n < 3) throw Error(ErrorCode::NTooSmall, "scenarios need n >= 3");
    RngStream rng = scenario_stream(spec.kind, spec.n, spec.seed);
    std::vector<Point> pts{{0.0, 0.0}};
    pts.reserve(spec.n + 1);
    switch (spec.kind) {
        case ScenarioKind::RandomCities: random_cities(spec, rng, pts); break;
        case ScenarioKind::Line3: line3(spec, rng, pts); break;
        case ScenarioKind::RandomClusters: random_clusters(spec, rng, pts); break;
        case ScenarioKind::Circles: circles(spec, pts); break;
        case ScenarioKind::RuralUrban: rural_urban(spec, rng, pts); break;
        case ScenarioKind::Path:
            // The start coincides with the first reward at the origin.
            for (double p : path_positions(spec.n, spec.x(), rng)) pts.push_back({p, 0.0});
            break;
    }
    return pts;
}

MetricInstance generate_scenario(const ScenarioSpec& spec) {
    if (spec.kind == ScenarioKind::Path) return generate_path(spec.n, spec.x(), spec.seed);
    return instance_from_points(scenario_points(spec), spec.gamma());
}

MetricInstance generate_path(std::size_t n, double length, std::uint64_t seed) {
    if (n < 2) throw Error(ErrorCode::NTooSmall, "a path needs n >= 2");
    if (!(length > 0.0) || !std::isfinite(length)) {
        throw Error(ErrorCode::InvalidConfig, "path length must be positive");
    }
    RngStream rng = scenario_stream(ScenarioKind::Path, n, seed);
    std::vector<Point> pts{{0.0, 0.0}};
    for (double p : path_positions(n, length, rng)) pts.push_back({p, 0.0});
    // gamma^length = 1/2.
    return instance_from_points(std::move(pts), std::exp2(-1.0 / length));
}

MetricInstance AdversarialStar::to_instance() const {
    InstanceData data;
    data.n = n;
    data.gamma = gamma;
    const std::size_t m = n + 1;
    std::vector<char> in_clique(m, 0);
    for (Node v : clique) in_clique[v] = 1;
    data.dist.assign(m * m, 0.0);
    const double via_centre = 2.0 * d;
    const double inside = std::min(short_edge, via_centre);
    for (std::size_t i = 1; i < m; ++i) {
        data.dist[i] = d;
        data.dist[i * m] = d;
        for (std::size_t j = i + 1; j < m; ++j) {
            const double e = in_clique[i] && in_clique[j] ? inside : via_centre;
            data.dist[i * m + j] = e;
            data.dist[j * m + i] = e;
        }
    }
    return MetricInstance(std::move(data));
}

Tour AdversarialStar::clique_first_tour() const {
    Tour t;
    t.order = clique;
    std::vector<char> in_clique(n + 1, 0);
    for (Node v : clique) in_clique[v] = 1;
    for (std::size_t i = 1; i <= n; ++i) {
        if (!in_clique[i]) t.order.push_back(static_cast<Node>(i));
    }
    return t;
}

AdversarialStar adversarial_star_deterministic(const TourBuilder& policy, std::size_t n) {
    if (n < 8 || n % 2 != 0) throw Error(ErrorCode::NTooSmall, "need an even n >= 8");
    AdversarialStar star;
    star.n = n;
    star.gamma = 1.0 - 1.0 / static_cast<double>(n);
    star.d = x_of_gamma(star.gamma);
    const MetricInstance symmetric = star.to_instance();
    const Tour first = policy(symmetric);
    const Tour second = policy(symmetric);
    if (!(first == second)) {
        throw Error(ErrorCode::PolicyNondeterministic, "policy returned different tours on the same star");
    }
    if (!is_full_tour(n, first.order)) {
        throw Error(ErrorCode::InvalidTour, "policy did not return a full tour");
    }
    star.clique.assign(first.order.begin() + static_cast<std::ptrdiff_t>(n / 2), first.order.end());
    std::sort(star.clique.begin(), star.clique.end());
    return star;
}

AdversarialStar adversarial_star_clique(std::size_t n, std::uint64_t seed) {
    if (n < 16) throw Error(ErrorCode::NTooSmall, "need n >= 16");
    AdversarialStar star;
    star.n = n;
    star.gamma = 1.0 - 1.0 / std::sqrt(static_cast<double>(n));
    star.d = x_of_gamma(star.gamma);
    const std::size_t k = isqrt(n);
    std::vector<Node> leaves(n);
    std::iota(leaves.begin(), leaves.end(), 1);
    RngStream rng(seed, {hash_string("star_clique"), n});
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
        std::swap(leaves[i], leaves[j]);
    }
    star.clique.assign(leaves.begin(), leaves.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(star.clique.begin(), star.clique.end());
    return star;
}

}  // namespace rdtsp
