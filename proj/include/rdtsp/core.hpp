#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rdtsp/error.hpp"

namespace rdtsp {

// Node 0 is the start; rewards are 1..n.
using Node = int;

inline constexpr double kTriangleTolerance = 1e-9;
inline constexpr double kCoordRelTolerance = 1e-12;
inline constexpr double kDiscountFlush = 1e-300;

struct Point {
    double x = 0.0;
    double y = 0.0;
    friend bool operator==(const Point&, const Point&) = default;
};

// Unchecked instance payload. validate_instance() inspects it; MetricInstance
// owns a checked copy.
struct InstanceData {
    std::size_t n = 0;
    double gamma = 0.5;
    std::vector<double> dist;  // row-major (n+1) x (n+1)
    std::optional<std::vector<Point>> coords;
};

struct ValidationResult {
    std::optional<ErrorCode> error;
    std::size_t i = 0, j = 0, k = 0;
    std::string message;

    bool ok() const { return !error.has_value(); }
    explicit operator bool() const { return ok(); }
};

ValidationResult validate_instance(const InstanceData& data);

// Complete metric over {start, n rewards} with a discount factor. Immutable
// after construction; the constructor rejects anything validate_instance does.
class MetricInstance {
public:
    explicit MetricInstance(InstanceData data);

    std::size_t n() const { return data_.n; }
    std::size_t node_count() const { return data_.n + 1; }
    double gamma() const { return data_.gamma; }
    double log_gamma() const { return log_gamma_; }

    double distance(Node i, Node j) const {
        return data_.dist[static_cast<std::size_t>(i) * node_count() + static_cast<std::size_t>(j)];
    }
    std::span<const double> row(Node i) const {
        return {data_.dist.data() + static_cast<std::size_t>(i) * node_count(), node_count()};
    }

    bool has_coords() const { return data_.coords.has_value(); }
    std::span<const Point> coords() const;

    const InstanceData& data() const { return data_; }

private:
    InstanceData data_;
    double log_gamma_;
};

struct Tour {
    std::vector<Node> order;
    friend bool operator==(const Tour&, const Tour&) = default;
};

struct TourEvaluation {
    double value = 0.0;
    std::vector<double> cum_dist;
};

// gamma^d evaluated as exp(d ln gamma), flushed to zero below 1e-300.
double discount(double log_gamma, double d);

// Half-life distance: gamma^x = 1/2.
double x_of_gamma(double gamma);

// Natural log of gamma, accurate for gamma close to 1.
double log_of_gamma(double gamma);

bool is_full_tour(std::size_t n, std::span<const Node> order);

TourEvaluation evaluate_tour(const MetricInstance& inst, const Tour& tour);

// Evaluates the first `order.size()` collections of a partial tour. The prefix
// must hold distinct reward indices.
TourEvaluation evaluate_prefix(const MetricInstance& inst, std::span<const Node> order);

// Connected components of `subset` under edges of length strictly below theta.
// Components are ordered by smallest member; members ascend.
std::vector<std::vector<Node>> threshold_components(const MetricInstance& inst, double theta,
                                                    std::span<const Node> subset);

// points[0] is the start.
MetricInstance instance_from_points(std::vector<Point> points, double gamma);

}  // namespace rdtsp
