#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rdtsp/core.hpp"

namespace rdtsp {

// The only window a local policy has on the graph. Implementations may be
// instrumented (see tests) to audit which distances get read.
class LocalView {
public:
    virtual ~LocalView() = default;
    virtual std::size_t reward_count() const = 0;
    virtual double gamma() const = 0;
    virtual double distance(Node from, Node to) const = 0;
    // Called by Agent each time a reward is collected.
    virtual void on_collect(Node /*reward*/) const {}
};

class InstanceView final : public LocalView {
public:
    explicit InstanceView(const MetricInstance& inst) : inst_(inst) {}
    std::size_t reward_count() const override { return inst_.n(); }
    double gamma() const override { return inst_.gamma(); }
    double distance(Node from, Node to) const override { return inst_.distance(from, to); }

private:
    const MetricInstance& inst_;
};

// V_i(current) = gamma^d(current, i) for one uncollected reward.
struct OptionEntry {
    Node reward = 0;
    double distance = 0.0;
    double value = 0.0;
};

struct LocalObservation {
    Node current = 0;
    std::vector<Node> visited;        // collected rewards, ascending
    std::vector<OptionEntry> options;  // uncollected rewards, ascending index
    std::vector<Node> history;        // starts at node 0
};

// Builds the observation at history.back(). Throws InvalidHistory when the
// history does not start at 0, repeats a node, or names an unknown node.
LocalObservation observe(const LocalView& view, std::span<const Node> history);
LocalObservation observe(const MetricInstance& inst, std::span<const Node> history);

// Walker that policies drive. It only ever reads distances from its current
// (already visited) position to uncollected rewards.
class Agent {
public:
    explicit Agent(const LocalView& view);

    std::size_t n() const { return n_; }
    double gamma() const { return gamma_; }
    Node current() const { return current_; }
    bool collected(Node r) const { return collected_[static_cast<std::size_t>(r)] != 0; }
    std::size_t remaining() const { return n_ - order_.size(); }
    bool done() const { return remaining() == 0; }

    LocalObservation observe() const;
    // Options only, without copying history; same locality guarantees.
    std::vector<OptionEntry> options() const;

    // Travel to an uncollected reward and collect it.
    void collect(Node reward);
    // Travel back to an already visited node (physical backtracking).
    void return_to(Node visited);

    const std::vector<Node>& order() const { return order_; }
    const std::vector<Node>& walk() const { return walk_; }
    Tour tour() const { return Tour{order_}; }

private:
    const LocalView& view_;
    std::size_t n_;
    double gamma_;
    double log_gamma_;
    Node current_ = 0;
    std::vector<char> collected_;
    std::vector<Node> order_;
    std::vector<Node> walk_;
};

}  // namespace rdtsp
