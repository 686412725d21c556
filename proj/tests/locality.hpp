#pragma once

#include <vector>

#include "rdtsp/observation.hpp"

// LocalView double that audits every distance read: the `from` endpoint must
// be the start or an already collected reward, the `to` endpoint must still be
// uncollected.
class RecordingView final : public rdtsp::LocalView {
public:
    explicit RecordingView(const rdtsp::MetricInstance& inst)
        : inst_(inst), collected_(inst.n() + 1, 0) {
        collected_[0] = 1;
    }
    std::size_t reward_count() const override { return inst_.n(); }
    double gamma() const override { return inst_.gamma(); }
    double distance(rdtsp::Node from, rdtsp::Node to) const override {
        ++reads;
        if (!collected_[from] || collected_[to]) ++violations;
        return inst_.distance(from, to);
    }
    void on_collect(rdtsp::Node r) const override { collected_[r] = 1; }

    mutable std::size_t reads = 0;
    mutable std::size_t violations = 0;

private:
    const rdtsp::MetricInstance& inst_;
    mutable std::vector<char> collected_;
};
