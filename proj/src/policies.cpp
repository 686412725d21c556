#include "rdtsp/policies.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace rdtsp {

std::string_view policy_name(PolicyKind kind) {
    switch (kind) {
        case PolicyKind::NN: return "nn";
        case PolicyKind::R_NN: return "rnn";
        case PolicyKind::NN_RDFS: return "nnrdfs";
        case PolicyKind::NN_RA: return "nnra";
    }
    return "?";
}

PolicyKind parse_policy(std::string_view name) {
    for (PolicyKind k : kAllPolicies) {
        if (policy_name(k) == name) return k;
    }
    throw Error(ErrorCode::UnknownKind, "unknown policy '" + std::string(name) + "'");
}

bool is_stochastic(PolicyKind kind) { return kind != PolicyKind::NN; }

int rdfs_level_count(std::size_t n) {
    if (n <= 1) return 1;
    return static_cast<int>(std::bit_width(n - 1));
}

double rdfs_theta(double gamma, std::size_t n, int level) {
    const std::size_t reduced = std::max<std::size_t>(1, n >> level);
    return x_of_gamma(gamma) / std::sqrt(static_cast<double>(reduced));
}

namespace {

bool closer(const OptionEntry& a, const OptionEntry& b) {
    return a.distance < b.distance || (a.distance == b.distance && a.reward < b.reward);
}

void finish_greedy(Agent& agent) {
    while (!agent.done()) {
        const auto opts = agent.options();
        const auto best = std::min_element(opts.begin(), opts.end(), closer);
        agent.collect(best->reward);
    }
}

// Depth-first traversal from s1 over uncollected rewards joined by edges
// shorter than theta. Each DFS node keeps the theta-neighbours it saw when it
// was visited, nearest first; a cursor skips entries collected since.
void random_dfs(Agent& agent, Node first, double theta, RdfsTravel travel) {
    struct Frame {
        Node node;
        std::vector<Node> neighbours;
        std::size_t cursor = 0;
    };
    const auto push = [&](std::vector<Frame>& stack, Node node) {
        auto opts = agent.options();
        std::erase_if(opts, [&](const OptionEntry& e) { return !(e.distance < theta); });
        std::sort(opts.begin(), opts.end(), closer);
        Frame f{node, {}, 0};
        f.neighbours.reserve(opts.size());
        for (const auto& e : opts) f.neighbours.push_back(e.reward);
        stack.push_back(std::move(f));
    };

    agent.collect(first);
    std::vector<Frame> stack;
    push(stack, first);
    while (!stack.empty()) {
        Frame& top = stack.back();
        while (top.cursor < top.neighbours.size() && agent.collected(top.neighbours[top.cursor])) {
            ++top.cursor;
        }
        if (top.cursor < top.neighbours.size()) {
            const Node next = top.neighbours[top.cursor++];
            agent.collect(next);
            push(stack, next);
        } else {
            stack.pop_back();
            if (travel == RdfsTravel::TreeWalk && !stack.empty()) {
                agent.return_to(stack.back().node);
            }
        }
    }
}

void random_ascent(Agent& agent, Node first) {
    agent.collect(first);
    auto opts = agent.options();
    std::sort(opts.begin(), opts.end(), closer);
    for (const auto& e : opts) agent.collect(e.reward);
}

}  // namespace

PolicyDraw draw_branch(PolicyKind kind, std::size_t n, RngStream& rng) {
    PolicyDraw d;
    if (kind == PolicyKind::NN) return d;
    d.heads = rng.coin();
    if (!d.heads) return d;
    d.first = rng.uniform_int(1, static_cast<int>(n));
    if (kind == PolicyKind::NN_RDFS) d.level = rng.uniform_int(1, rdfs_level_count(n));
    return d;
}

PolicyRun run_branch(PolicyKind kind, const LocalView& view, const PolicyDraw& draw,
                     RdfsTravel travel) {
    Agent agent(view);
    if (kind != PolicyKind::NN && draw.heads) {
        if (draw.first < 1 || static_cast<std::size_t>(draw.first) > agent.n()) {
            throw Error(ErrorCode::InvalidHistory, "first pick out of range");
        }
        switch (kind) {
            case PolicyKind::R_NN:
                agent.collect(draw.first);
                break;
            case PolicyKind::NN_RDFS: {
                if (draw.level < 1 || draw.level > rdfs_level_count(agent.n())) {
                    throw Error(ErrorCode::InvalidHistory, "RDFS level out of range");
                }
                random_dfs(agent, draw.first, rdfs_theta(agent.gamma(), agent.n(), draw.level),
                           travel);
                break;
            }
            case PolicyKind::NN_RA:
                random_ascent(agent, draw.first);
                break;
            case PolicyKind::NN:
                break;
        }
    }
    finish_greedy(agent);
    return {agent.tour(), agent.walk()};
}

Tour run_policy(PolicyKind kind, const LocalView& view, RngStream& rng, RdfsTravel travel) {
    const PolicyDraw d = draw_branch(kind, view.reward_count(), rng);
    return run_branch(kind, view, d, travel).tour;
}

Tour run_policy(PolicyKind kind, const MetricInstance& inst, RngStream& rng, RdfsTravel travel) {
    return run_policy(kind, InstanceView(inst), rng, travel);
}

Tour nn(const LocalView& view) { return run_branch(PolicyKind::NN, view, {}).tour; }
Tour nn(const MetricInstance& inst) { return nn(InstanceView(inst)); }

Tour r_nn(const LocalView& view, RngStream& rng) {
    return run_policy(PolicyKind::R_NN, view, rng);
}
Tour nn_rdfs(const LocalView& view, RngStream& rng, RdfsTravel travel) {
    return run_policy(PolicyKind::NN_RDFS, view, rng, travel);
}
Tour nn_ra(const LocalView& view, RngStream& rng) {
    return run_policy(PolicyKind::NN_RA, view, rng);
}

TourEvaluation evaluate_walk(const MetricInstance& inst, std::span<const Node> walk) {
    if (walk.empty() || walk.front() != 0) {
        throw Error(ErrorCode::InvalidTour, "walk must begin at the start node 0");
    }
    std::vector<char> seen(inst.n() + 1, 0);
    TourEvaluation ev;
    double cum = 0.0;
    for (std::size_t t = 1; t < walk.size(); ++t) {
        const Node v = walk[t];
        if (v < 0 || static_cast<std::size_t>(v) > inst.n()) {
            throw Error(ErrorCode::InvalidTour, "walk node " + std::to_string(v) + " out of range");
        }
        cum += inst.distance(walk[t - 1], v);
        if (v != 0 && !seen[v]) {
            seen[v] = 1;
            ev.cum_dist.push_back(cum);
            ev.value += discount(inst.log_gamma(), cum);
        }
    }
    return ev;
}

}  // namespace rdtsp
