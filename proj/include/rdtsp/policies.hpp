#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rdtsp/core.hpp"
#include "rdtsp/observation.hpp"
#include "rdtsp/rng.hpp"

namespace rdtsp {

enum class PolicyKind { NN, R_NN, NN_RDFS, NN_RA };

inline constexpr PolicyKind kAllPolicies[] = {PolicyKind::NN, PolicyKind::R_NN,
                                              PolicyKind::NN_RDFS, PolicyKind::NN_RA};

// CLI/config names: nn, rnn, nnrdfs, nnra.
std::string_view policy_name(PolicyKind kind);
PolicyKind parse_policy(std::string_view name);
bool is_stochastic(PolicyKind kind);

// How backtracking inside the RDFS phase is charged.
//   Shortcut: the agent jumps straight from the last collected reward to the
//             next one, so the walk equals the tour.
//   TreeWalk: the agent physically walks back along the DFS tree, and NN
//             resumes from the DFS root once the traversal unwinds.
enum class RdfsTravel { Shortcut, TreeWalk };

// The random decisions a stochastic policy makes, drawn up front. For NN, or
// a tails coin, only `heads == false` matters.
struct PolicyDraw {
    bool heads = false;
    Node first = 0;  // s1, 1-based
    int level = 0;   // RDFS: i in {1..rdfs_level_count(n)}
};

struct PolicyRun {
    Tour tour;
    std::vector<Node> walk;  // physical node sequence starting at 0
};

// ceil(log2 n), at least 1.
int rdfs_level_count(std::size_t n);
// theta = x / sqrt(n'), n' = max(1, floor(n / 2^level)).
double rdfs_theta(double gamma, std::size_t n, int level);

// Draw order: coin; on heads, s1 uniform on 1..n; for NN-RDFS, then the level.
PolicyDraw draw_branch(PolicyKind kind, std::size_t n, RngStream& rng);

PolicyRun run_branch(PolicyKind kind, const LocalView& view, const PolicyDraw& draw,
                     RdfsTravel travel = RdfsTravel::Shortcut);
Tour run_policy(PolicyKind kind, const LocalView& view, RngStream& rng,
                RdfsTravel travel = RdfsTravel::Shortcut);
Tour run_policy(PolicyKind kind, const MetricInstance& inst, RngStream& rng,
                RdfsTravel travel = RdfsTravel::Shortcut);

// Greedy: repeatedly collect the uncollected reward of highest V_i(current),
// i.e. smallest distance, lowest index on ties.
Tour nn(const LocalView& view);
Tour nn(const MetricInstance& inst);

Tour r_nn(const LocalView& view, RngStream& rng);
Tour nn_rdfs(const LocalView& view, RngStream& rng, RdfsTravel travel = RdfsTravel::Shortcut);
Tour nn_ra(const LocalView& view, RngStream& rng);

// Discounted value of a physical walk: each reward pays gamma^(distance walked
// until its first visit).
TourEvaluation evaluate_walk(const MetricInstance& inst, std::span<const Node> walk);

}  // namespace rdtsp
