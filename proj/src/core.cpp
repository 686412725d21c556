#include "rdtsp/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace rdtsp {

namespace {

ValidationResult fail(ErrorCode code, std::size_t i, std::size_t j, std::size_t k,
                      const std::string& message) {
    ValidationResult r;
    r.error = code;
    r.i = i;
    r.j = j;
    r.k = k;
    r.message = message;
    return r;
}

std::string pair_text(std::size_t i, std::size_t j) {
    std::ostringstream os;
    os << "dist[" << i << "][" << j << "]";
    return os.str();
}

}  // namespace

ValidationResult validate_instance(const InstanceData& data) {
    const std::size_t m = data.n + 1;
    if (data.n == 0) {
        return fail(ErrorCode::EmptyInstance, 0, 0, 0, "instance has no rewards");
    }
    if (data.dist.size() != m * m) {
        return fail(ErrorCode::DimensionMismatch, 0, 0, 0,
                    "distance matrix must hold (n+1)^2 entries");
    }
    if (!(data.gamma > 0.0 && data.gamma < 1.0)) {
        return fail(ErrorCode::GammaOutOfRange, 0, 0, 0, "gamma must lie in (0,1)");
    }
    const auto d = [&](std::size_t i, std::size_t j) { return data.dist[i * m + j]; };
    for (std::size_t i = 0; i < m; ++i) {
        if (d(i, i) != 0.0) {
            return fail(ErrorCode::NonZeroDiagonal, i, i, 0, pair_text(i, i) + " must be 0");
        }
        for (std::size_t j = 0; j < m; ++j) {
            const double v = d(i, j);
            if (!std::isfinite(v) || v < 0.0) {
                return fail(ErrorCode::NegativeDistance, i, j, 0,
                            pair_text(i, j) + " must be finite and nonnegative");
            }
            if (v != d(j, i)) {
                return fail(ErrorCode::NonSymmetric, i, j, 0,
                            pair_text(i, j) + " differs from " + pair_text(j, i));
            }
        }
    }
    if (data.coords) {
        const auto& pts = *data.coords;
        if (pts.size() != m) {
            return fail(ErrorCode::CoordMismatch, 0, 0, 0, "coords must hold n+1 points");
        }
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i + 1; j < m; ++j) {
                const double e = std::hypot(pts[i].x - pts[j].x, pts[i].y - pts[j].y);
                const double tol = kCoordRelTolerance * std::max(e, std::numeric_limits<double>::min());
                if (std::abs(d(i, j) - e) > tol) {
                    return fail(ErrorCode::CoordMismatch, i, j, 0,
                                pair_text(i, j) + " disagrees with the planar distance");
                }
            }
        }
        // Euclidean distances satisfy the triangle inequality by construction.
        return {};
    }
    for (std::size_t i = 0; i < m; ++i) {
        const double* ri = data.dist.data() + i * m;
        for (std::size_t k = i + 1; k < m; ++k) {
            const double* rk = data.dist.data() + k * m;
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t j = 0; j < m; ++j) best = std::min(best, ri[j] + rk[j]);
            if (ri[k] > best + kTriangleTolerance) {
                for (std::size_t j = 0; j < m; ++j) {
                    if (ri[k] > ri[j] + rk[j] + kTriangleTolerance) {
                        std::ostringstream os;
                        os << pair_text(i, k) << " exceeds the path through node " << j;
                        return fail(ErrorCode::TriangleViolation, i, j, k, os.str());
                    }
                }
            }
        }
    }
    return {};
}

MetricInstance::MetricInstance(InstanceData data) : data_(std::move(data)) {
    if (auto r = validate_instance(data_); !r) {
        throw Error(*r.error, r.message);
    }
    log_gamma_ = log_of_gamma(data_.gamma);
}

std::span<const Point> MetricInstance::coords() const {
    if (!data_.coords) throw Error(ErrorCode::NoCoordinates, "instance is matrix-only");
    return *data_.coords;
}

double log_of_gamma(double gamma) {
    if (!(gamma > 0.0 && gamma < 1.0)) {
        throw Error(ErrorCode::GammaOutOfRange, "gamma must lie in (0,1)");
    }
    // gamma - 1 is exact for gamma >= 0.5.
    return gamma >= 0.5 ? std::log1p(gamma - 1.0) : std::log(gamma);
}

double discount(double log_gamma, double d) {
    const double v = std::exp(d * log_gamma);
    return v < kDiscountFlush ? 0.0 : v;
}

double x_of_gamma(double gamma) { return std::log(2.0) / -log_of_gamma(gamma); }

bool is_full_tour(std::size_t n, std::span<const Node> order) {
    if (order.size() != n) return false;
    std::vector<char> seen(n + 1, 0);
    for (Node v : order) {
        if (v < 1 || static_cast<std::size_t>(v) > n || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

TourEvaluation evaluate_prefix(const MetricInstance& inst, std::span<const Node> order) {
    const std::size_t n = inst.n();
    std::vector<char> seen(n + 1, 0);
    TourEvaluation ev;
    ev.cum_dist.reserve(order.size());
    Node prev = 0;
    double cum = 0.0;
    for (Node v : order) {
        if (v < 1 || static_cast<std::size_t>(v) > n || seen[v]) {
            throw Error(ErrorCode::InvalidTour, "tour entry " + std::to_string(v) +
                                                    " is out of range or repeated");
        }
        seen[v] = 1;
        cum += inst.distance(prev, v);
        ev.cum_dist.push_back(cum);
        ev.value += discount(inst.log_gamma(), cum);
        prev = v;
    }
    return ev;
}

TourEvaluation evaluate_tour(const MetricInstance& inst, const Tour& tour) {
    if (tour.order.size() != inst.n()) {
        throw Error(ErrorCode::InvalidTour, "tour must visit all " + std::to_string(inst.n()) +
                                                " rewards, got " +
                                                std::to_string(tour.order.size()));
    }
    return evaluate_prefix(inst, tour.order);
}

std::vector<std::vector<Node>> threshold_components(const MetricInstance& inst, double theta,
                                                    std::span<const Node> subset) {
    if (!(theta > 0.0)) throw Error(ErrorCode::InvalidTheta, "theta must be positive");
    if (subset.empty()) throw Error(ErrorCode::EmptySubset, "subset is empty");

    std::vector<Node> members(subset.begin(), subset.end());
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (Node v : members) {
        if (v < 0 || static_cast<std::size_t>(v) > inst.n()) {
            throw Error(ErrorCode::InvalidTour, "subset node " + std::to_string(v) + " out of range");
        }
    }

    const std::size_t m = members.size();
    std::vector<char> done(m, 0);
    std::vector<std::vector<Node>> out;
    std::vector<std::size_t> queue;
    for (std::size_t s = 0; s < m; ++s) {
        if (done[s]) continue;
        std::vector<Node> comp;
        queue.assign(1, s);
        done[s] = 1;
        while (!queue.empty()) {
            const std::size_t a = queue.back();
            queue.pop_back();
            comp.push_back(members[a]);
            for (std::size_t b = 0; b < m; ++b) {
                if (!done[b] && inst.distance(members[a], members[b]) < theta) {
                    done[b] = 1;
                    queue.push_back(b);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

MetricInstance instance_from_points(std::vector<Point> points, double gamma) {
    if (points.size() < 2) {
        throw Error(ErrorCode::EmptyInstance, "need the start plus at least one reward point");
    }
    InstanceData data;
    data.n = points.size() - 1;
    data.gamma = gamma;
    const std::size_t m = points.size();
    data.dist.assign(m * m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            const double e = std::hypot(points[i].x - points[j].x, points[i].y - points[j].y);
            data.dist[i * m + j] = e;
            data.dist[j * m + i] = e;
        }
    }
    data.coords = std::move(points);
    return MetricInstance(std::move(data));
}

}  // namespace rdtsp
