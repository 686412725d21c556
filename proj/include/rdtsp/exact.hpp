#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rdtsp/core.hpp"

namespace rdtsp {

inline constexpr std::size_t kBruteForceMaxN = 10;
inline constexpr std::size_t kHeldKarpMaxN = 20;
// Covers every d <= 3 star with up to 60 rewards: (3 + 1) * 21^3 < 2^16.
inline constexpr std::size_t kDStarStateBudget = std::size_t{1} << 16;

struct ExactSolution {
    double value = 0.0;
    Tour tour;
    std::string solver;
};

// Enumerates all n! tours. Ties keep the lexicographically smallest tour.
ExactSolution brute_force(const MetricInstance& inst, std::size_t max_n = kBruteForceMaxN);

// Bellman tables over (collected set, current node). value(mask, c) is the best
// discounted return still obtainable from node c once the rewards in `mask`
// are collected; length(mask, c) is the length of the path achieving it.
// Bit r-1 of a mask stands for reward r; node 0 is only valid with mask 0.
class HeldKarpTables {
public:
    HeldKarpTables(std::size_t n, std::vector<double> value, std::vector<double> length)
        : n_(n), value_(std::move(value)), length_(std::move(length)) {}

    std::size_t n() const { return n_; }
    double value(std::uint32_t mask, Node c) const { return value_[index(mask, c)]; }
    double length(std::uint32_t mask, Node c) const { return length_[index(mask, c)]; }

private:
    std::size_t index(std::uint32_t mask, Node c) const {
        return static_cast<std::size_t>(mask) * (n_ + 1) + static_cast<std::size_t>(c);
    }
    std::size_t n_;
    std::vector<double> value_;
    std::vector<double> length_;
};

HeldKarpTables held_karp_tables(const MetricInstance& inst, std::size_t max_n = kHeldKarpMaxN);
ExactSolution held_karp(const MetricInstance& inst, std::size_t max_n = kHeldKarpMaxN);

// Forward recursion that keeps, per (set, endpoint), only the path of maximal
// discounted value together with its length. Cheap, but not exact: a shorter
// path of lower value can lead to a better completion. Kept as a comparison
// baseline; its value never exceeds held_karp's.
ExactSolution held_karp_forward(const MetricInstance& inst, std::size_t max_n = kHeldKarpMaxN);

// Rewards on the real line, start anywhere on it.
struct LineInstance {
    double start = 0.0;
    std::vector<double> positions;  // ascending

    // Sorts positions; throws InvalidLine on empty or non-finite input.
    static LineInstance make(double start, std::vector<double> positions);
    // Node 0 at `start`, reward i at positions[i-1], Euclidean-backed on y = 0.
    MetricInstance to_instance(double gamma) const;
};

// Interval DP: the collected rewards always form an interval around the
// start, so states are (left frontier, right frontier, side). Rewards sitting
// exactly on the start are collected first at no cost. Ties go left.
ExactSolution line_dp(const LineInstance& line, double gamma);

// Rewards on d rays sharing the start as their centre.
struct DStarInstance {
    std::vector<std::vector<double>> arms;  // per-arm distances from centre, ascending

    static DStarInstance make(std::vector<std::vector<double>> arms);
    std::size_t reward_count() const;
    // Node 0 is the centre; rewards numbered arm by arm, inner to outer.
    MetricInstance to_instance(double gamma) const;
    std::size_t state_count() const;
};

// DP over (per-arm collected counts, current arm). Ties go to the lowest arm.
ExactSolution dstar_dp(const DStarInstance& star, double gamma,
                       std::size_t state_budget = kDStarStateBudget);

}  // namespace rdtsp
