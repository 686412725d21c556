#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "rdtsp/core.hpp"

namespace rdtsp {

enum class ScenarioKind { RandomCities, Line3, RandomClusters, Circles, RuralUrban, Path };

inline constexpr ScenarioKind kFigureScenarios[] = {
    ScenarioKind::RandomCities, ScenarioKind::Line3, ScenarioKind::RandomClusters,
    ScenarioKind::Circles, ScenarioKind::RuralUrban};

std::string_view scenario_name(ScenarioKind kind);
ScenarioKind parse_scenario(std::string_view name);

inline constexpr int kClusterCount = 10;
// Group-3 rewards of line3 are clamped to this many half-life distances.
inline constexpr double kLine3ClampHalfLives = 64.0;

// Generator family plus its size and seed. Every other parameter is derived
// from n on demand.
struct ScenarioSpec {
    ScenarioKind kind = ScenarioKind::RandomCities;
    std::size_t n = 100;
    std::uint64_t seed = 0;
    // Std. dev. of the radial jitter of cluster centres, in units of ell().
    double cluster_jitter = 1.0;

    double gamma() const { return 1.0 - 1.0 / static_cast<double>(n); }
    double x() const { return x_of_gamma(gamma()); }
    double ell() const { return 0.01 * x(); }
    double theta() const { return x() / std::sqrt(static_cast<double>(n)); }
    int k_clusters() const { return kClusterCount; }
};

// Start at the origin; same spec, same instance.
MetricInstance generate_scenario(const ScenarioSpec& spec);
std::vector<Point> scenario_points(const ScenarioSpec& spec);

// n rewards on a segment of length `length` with random positive gaps; the
// start sits on the first reward. gamma is chosen so that x_of_gamma = length.
MetricInstance generate_path(std::size_t n, double length, std::uint64_t seed);

// Star with n leaves at spoke length d (gamma^d = 1/2) plus a clique of
// short edges among some leaves, closed under shortest paths.
struct AdversarialStar {
    std::size_t n = 0;
    std::vector<Node> clique;  // ascending
    double d = 0.0;
    double short_edge = 1.0;
    double gamma = 0.5;

    MetricInstance to_instance() const;
    // Clique members first, then the remaining leaves, each ascending.
    Tour clique_first_tour() const;
};

using TourBuilder = std::function<Tour(const MetricInstance&)>;

// Runs `policy` twice on the clique-free star and hides the clique among the
// last n/2 leaves it visits. gamma = 1 - 1/n.
AdversarialStar adversarial_star_deterministic(const TourBuilder& policy, std::size_t n);

// floor(sqrt n) leaves chosen uniformly (seeded) form the clique.
// gamma = 1 - 1/sqrt(n).
AdversarialStar adversarial_star_clique(std::size_t n, std::uint64_t seed);

}  // namespace rdtsp
