#include "rdtsp/observation.hpp"

#include <algorithm>
#include <string>

namespace rdtsp {

namespace {

std::vector<OptionEntry> build_options(const LocalView& view, double log_gamma, Node current,
                                       const std::vector<char>& collected) {
    std::vector<OptionEntry> out;
    const std::size_t n = view.reward_count();
    out.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
        if (collected[i]) continue;
        const Node r = static_cast<Node>(i);
        const double d = view.distance(current, r);
        out.push_back({r, d, discount(log_gamma, d)});
    }
    return out;
}

}  // namespace

LocalObservation observe(const LocalView& view, std::span<const Node> history) {
    const std::size_t n = view.reward_count();
    if (history.empty() || history.front() != 0) {
        throw Error(ErrorCode::InvalidHistory, "history must begin at the start node 0");
    }
    std::vector<char> seen(n + 1, 0);
    seen[0] = 1;
    for (std::size_t t = 1; t < history.size(); ++t) {
        const Node v = history[t];
        if (v < 1 || static_cast<std::size_t>(v) > n) {
            throw Error(ErrorCode::InvalidHistory, "unknown node " + std::to_string(v));
        }
        if (seen[v]) throw Error(ErrorCode::InvalidHistory, "node " + std::to_string(v) + " revisited");
        seen[v] = 1;
    }
    LocalObservation obs;
    obs.current = history.back();
    obs.history.assign(history.begin(), history.end());
    for (std::size_t i = 1; i <= n; ++i) {
        if (seen[i]) obs.visited.push_back(static_cast<Node>(i));
    }
    obs.options = build_options(view, log_of_gamma(view.gamma()), obs.current, seen);
    return obs;
}

LocalObservation observe(const MetricInstance& inst, std::span<const Node> history) {
    return observe(InstanceView(inst), history);
}

Agent::Agent(const LocalView& view)
    : view_(view),
      n_(view.reward_count()),
      gamma_(view.gamma()),
      log_gamma_(log_of_gamma(gamma_)),
      collected_(n_ + 1, 0) {
    collected_[0] = 1;
    order_.reserve(n_);
    walk_.reserve(n_ + 1);
    walk_.push_back(0);
}

std::vector<OptionEntry> Agent::options() const {
    return build_options(view_, log_gamma_, current_, collected_);
}

LocalObservation Agent::observe() const {
    LocalObservation obs;
    obs.current = current_;
    obs.visited = order_;
    std::sort(obs.visited.begin(), obs.visited.end());
    obs.history = walk_;
    obs.options = options();
    return obs;
}

void Agent::collect(Node reward) {
    if (reward < 1 || static_cast<std::size_t>(reward) > n_ || collected_[reward]) {
        throw Error(ErrorCode::InvalidHistory,
                    "reward " + std::to_string(reward) + " is not collectable");
    }
    collected_[reward] = 1;
    order_.push_back(reward);
    walk_.push_back(reward);
    current_ = reward;
    view_.on_collect(reward);
}

void Agent::return_to(Node visited) {
    if (visited < 0 || static_cast<std::size_t>(visited) > n_ || !collected_[visited]) {
        throw Error(ErrorCode::InvalidHistory,
                    "node " + std::to_string(visited) + " has not been visited");
    }
    if (visited == current_) return;
    walk_.push_back(visited);
    current_ = visited;
}

}  // namespace rdtsp
