#include "rdtsp/exact.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

namespace rdtsp {

namespace {

void guard_size(std::size_t n, std::size_t max_n, const char* solver) {
    if (n > max_n) {
        throw Error(ErrorCode::TooLarge, std::string(solver) + " supports n <= " +
                                             std::to_string(max_n) + ", got " + std::to_string(n));
    }
}

}  // namespace

ExactSolution brute_force(const MetricInstance& inst, std::size_t max_n) {
    const std::size_t n = inst.n();
    guard_size(n, std::min(max_n, kBruteForceMaxN), "brute_force");
    std::vector<Node> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    ExactSolution best{-1.0, {}, "brute_force"};
    do {
        double cum = 0.0;
        double value = 0.0;
        Node prev = 0;
        for (Node v : perm) {
            cum += inst.distance(prev, v);
            value += discount(inst.log_gamma(), cum);
            prev = v;
        }
        // Permutations come in lexicographic order; only a clear improvement
        // displaces an earlier tour.
        if (value > best.value + 1e-12 * std::max(1.0, best.value)) {
            best.value = value;
            best.tour.order = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

HeldKarpTables held_karp_tables(const MetricInstance& inst, std::size_t max_n) {
    const std::size_t n = inst.n();
    guard_size(n, std::min(max_n, kHeldKarpMaxN), "held_karp");
    const std::size_t width = n + 1;
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    const std::size_t states = (static_cast<std::size_t>(full) + 1) * width;
    std::vector<double> value(states, 0.0);
    std::vector<double> length(states, 0.0);
    const double lg = inst.log_gamma();

    for (std::int64_t m = static_cast<std::int64_t>(full) - 1; m >= 0; --m) {
        const auto mask = static_cast<std::uint32_t>(m);
        for (Node c = 0; c <= static_cast<Node>(n); ++c) {
            if (c == 0 ? mask != 0 : !(mask & (std::uint32_t{1} << (c - 1)))) continue;
            double best = -1.0;
            double best_len = 0.0;
            for (Node k = 1; k <= static_cast<Node>(n); ++k) {
                const std::uint32_t bit = std::uint32_t{1} << (k - 1);
                if (mask & bit) continue;
                const std::size_t next = static_cast<std::size_t>(mask | bit) * width + k;
                const double d = inst.distance(c, k);
                const double q = discount(lg, d) * (1.0 + value[next]);
                if (q > best) {
                    best = q;
                    best_len = d + length[next];
                }
            }
            value[mask * width + c] = best;
            length[mask * width + c] = best_len;
        }
    }
    return HeldKarpTables(n, std::move(value), std::move(length));
}

ExactSolution held_karp(const MetricInstance& inst, std::size_t max_n) {
    const HeldKarpTables t = held_karp_tables(inst, max_n);
    const std::size_t n = inst.n();
    const double lg = inst.log_gamma();
    ExactSolution sol{t.value(0, 0), {}, "held_karp"};
    std::uint32_t mask = 0;
    Node c = 0;
    for (std::size_t step = 0; step < n; ++step) {
        double best = -1.0;
        Node arg = 0;
        for (Node k = 1; k <= static_cast<Node>(n); ++k) {
            const std::uint32_t bit = std::uint32_t{1} << (k - 1);
            if (mask & bit) continue;
            const double q = discount(lg, inst.distance(c, k)) * (1.0 + t.value(mask | bit, k));
            if (q > best) {
                best = q;
                arg = k;
            }
        }
        sol.tour.order.push_back(arg);
        mask |= std::uint32_t{1} << (arg - 1);
        c = arg;
    }
    return sol;
}

ExactSolution held_karp_forward(const MetricInstance& inst, std::size_t max_n) {
    const std::size_t n = inst.n();
    guard_size(n, std::min(max_n, kHeldKarpMaxN), "held_karp_forward");
    const std::size_t width = n + 1;
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    const std::size_t states = (static_cast<std::size_t>(full) + 1) * width;
    const double lg = inst.log_gamma();
    std::vector<double> value(states, -1.0);
    std::vector<double> length(states, 0.0);
    std::vector<Node> parent(states, 0);

    for (Node k = 1; k <= static_cast<Node>(n); ++k) {
        const std::size_t s = (std::size_t{1} << (k - 1)) * width + k;
        length[s] = inst.distance(0, k);
        value[s] = discount(lg, length[s]);
    }
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        if (std::popcount(mask) < 2) continue;
        for (Node k = 1; k <= static_cast<Node>(n); ++k) {
            const std::uint32_t bit = std::uint32_t{1} << (k - 1);
            if (!(mask & bit)) continue;
            const std::uint32_t prev = mask ^ bit;
            double best = -1.0;
            Node arg = 0;
            for (Node a = 1; a <= static_cast<Node>(n); ++a) {
                if (!(prev & (std::uint32_t{1} << (a - 1)))) continue;
                const std::size_t ps = prev * width + a;
                const double q = value[ps] + discount(lg, length[ps] + inst.distance(a, k));
                if (q > best) {
                    best = q;
                    arg = a;
                }
            }
            const std::size_t s = mask * width + k;
            value[s] = best;
            length[s] = length[prev * width + arg] + inst.distance(arg, k);
            parent[s] = arg;
        }
    }
    ExactSolution sol{-1.0, {}, "held_karp_forward"};
    Node end = 0;
    for (Node k = 1; k <= static_cast<Node>(n); ++k) {
        if (value[full * width + k] > sol.value) {
            sol.value = value[full * width + k];
            end = k;
        }
    }
    std::uint32_t mask = full;
    while (mask != 0) {
        sol.tour.order.push_back(end);
        const Node p = parent[mask * width + end];
        mask ^= std::uint32_t{1} << (end - 1);
        end = p;
    }
    std::reverse(sol.tour.order.begin(), sol.tour.order.end());
    return sol;
}

// ---------------------------------------------------------------------------
// Line

LineInstance LineInstance::make(double start, std::vector<double> positions) {
    if (positions.empty()) throw Error(ErrorCode::InvalidLine, "line has no rewards");
    if (!std::isfinite(start)) throw Error(ErrorCode::InvalidLine, "start must be finite");
    for (double p : positions) {
        if (!std::isfinite(p)) throw Error(ErrorCode::InvalidLine, "positions must be finite");
    }
    std::sort(positions.begin(), positions.end());
    return LineInstance{start, std::move(positions)};
}

MetricInstance LineInstance::to_instance(double gamma) const {
    std::vector<Point> pts;
    pts.reserve(positions.size() + 1);
    pts.push_back({start, 0.0});
    for (double p : positions) pts.push_back({p, 0.0});
    return instance_from_points(std::move(pts), gamma);
}

ExactSolution line_dp(const LineInstance& line, double gamma) {
    const auto& pos = line.positions;
    if (pos.empty() || !std::is_sorted(pos.begin(), pos.end())) {
        throw Error(ErrorCode::InvalidLine, "positions must be nonempty and ascending");
    }
    const double lg = log_of_gamma(gamma);
    const std::size_t m = pos.size();
    // Rewards [0, p) lie left of the start, [p, q) on it, [q, m) right of it.
    const std::size_t p = static_cast<std::size_t>(
        std::lower_bound(pos.begin(), pos.end(), line.start) - pos.begin());
    const std::size_t q = static_cast<std::size_t>(
        std::upper_bound(pos.begin(), pos.end(), line.start) - pos.begin());

    // State (a, b, side): rewards [0, a) and [b, m) still uncollected; the
    // agent stands at the left frontier (side 0) or the right one (side 1).
    const auto where = [&](std::size_t a, std::size_t b, int side) {
        if (side == 0) return a < p ? pos[a] : line.start;
        return b > q ? pos[b - 1] : line.start;
    };
    const std::size_t rows = p + 1;
    const std::size_t cols = m - q + 1;
    const auto idx = [&](std::size_t a, std::size_t b, int side) {
        return (a * cols + (b - q)) * 2 + static_cast<std::size_t>(side);
    };
    std::vector<double> value(rows * cols * 2, 0.0);
    std::vector<char> go_left(rows * cols * 2, 0);

    for (std::size_t t = 1; t <= p + (m - q); ++t) {
        for (std::size_t a = 0; a <= std::min(p, t); ++a) {
            if (t - a > m - q) continue;
            const std::size_t b = m - (t - a);
            for (int side = 0; side < 2; ++side) {
                const double cur = where(a, b, side);
                double v = 0.0;
                char left = 0;
                if (a == 0) {
                    // Only rightward rewards remain: sweep outward in order.
                    double x = cur, cum = 0.0;
                    for (std::size_t i = b; i < m; ++i) {
                        cum += std::abs(pos[i] - x);
                        v += discount(lg, cum);
                        x = pos[i];
                    }
                } else if (b == m) {
                    double x = cur, cum = 0.0;
                    for (std::size_t i = a; i-- > 0;) {
                        cum += std::abs(x - pos[i]);
                        v += discount(lg, cum);
                        x = pos[i];
                    }
                    left = 1;
                } else {
                    const double vl =
                        discount(lg, std::abs(cur - pos[a - 1])) * (1.0 + value[idx(a - 1, b, 0)]);
                    const double vr =
                        discount(lg, std::abs(pos[b] - cur)) * (1.0 + value[idx(a, b + 1, 1)]);
                    left = vl >= vr ? 1 : 0;
                    v = left ? vl : vr;
                }
                value[idx(a, b, side)] = v;
                go_left[idx(a, b, side)] = left;
            }
        }
    }

    ExactSolution sol{static_cast<double>(q - p), {}, "line_dp"};
    for (std::size_t i = p; i < q; ++i) sol.tour.order.push_back(static_cast<Node>(i + 1));
    sol.value += value[idx(p, q, 0)];
    std::size_t a = p, b = q;
    int side = 0;
    while (a > 0 || b < m) {
        if (go_left[idx(a, b, side)]) {
            sol.tour.order.push_back(static_cast<Node>(a));  // reward a-1 is node a
            --a;
            side = 0;
        } else {
            sol.tour.order.push_back(static_cast<Node>(b + 1));
            ++b;
            side = 1;
        }
    }
    return sol;
}

// ---------------------------------------------------------------------------
// d-star

DStarInstance DStarInstance::make(std::vector<std::vector<double>> arms) {
    if (arms.empty()) throw Error(ErrorCode::InvalidStar, "star needs at least one arm");
    std::size_t total = 0;
    for (auto& arm : arms) {
        for (double r : arm) {
            if (!std::isfinite(r) || !(r > 0.0)) {
                throw Error(ErrorCode::InvalidStar, "reward distances must be positive and finite");
            }
        }
        std::sort(arm.begin(), arm.end());
        total += arm.size();
    }
    if (total == 0) throw Error(ErrorCode::InvalidStar, "star has no rewards");
    return DStarInstance{std::move(arms)};
}

std::size_t DStarInstance::reward_count() const {
    std::size_t total = 0;
    for (const auto& arm : arms) total += arm.size();
    return total;
}

std::size_t DStarInstance::state_count() const {
    std::size_t s = arms.size() + 1;
    for (const auto& arm : arms) s *= arm.size() + 1;
    return s;
}

MetricInstance DStarInstance::to_instance(double gamma) const {
    struct Site {
        std::size_t arm;
        double r;
    };
    std::vector<Site> sites{{0, 0.0}};
    for (std::size_t i = 0; i < arms.size(); ++i) {
        for (double r : arms[i]) sites.push_back({i, r});
    }
    InstanceData data;
    data.n = sites.size() - 1;
    data.gamma = gamma;
    const std::size_t m = sites.size();
    data.dist.assign(m * m, 0.0);
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            if (a == b) continue;
            const Site& x = sites[a];
            const Site& y = sites[b];
            const bool same_ray = a == 0 || b == 0 || x.arm == y.arm;
            data.dist[a * m + b] = same_ray ? std::abs(x.r - y.r) : x.r + y.r;
        }
    }
    return MetricInstance(std::move(data));
}

ExactSolution dstar_dp(const DStarInstance& star, double gamma, std::size_t state_budget) {
    const auto& arms = star.arms;
    if (arms.empty() || star.reward_count() == 0) {
        throw Error(ErrorCode::InvalidStar, "star needs at least one reward");
    }
    for (const auto& arm : arms) {
        if (!std::is_sorted(arm.begin(), arm.end()) ||
            std::any_of(arm.begin(), arm.end(), [](double r) { return !(r > 0.0); })) {
            throw Error(ErrorCode::InvalidStar, "arm distances must be positive and ascending");
        }
    }
    if (star.state_count() > state_budget) {
        throw Error(ErrorCode::TooLarge, "d-star state count " + std::to_string(star.state_count()) +
                                             " exceeds budget " + std::to_string(state_budget));
    }
    const double lg = log_of_gamma(gamma);
    const std::size_t d = arms.size();
    const std::size_t slots = d + 1;  // slot 0 = centre, slot i+1 = frontier of arm i
    std::vector<std::size_t> stride(d);
    std::size_t states = 1;
    for (std::size_t i = 0; i < d; ++i) {
        stride[i] = states;
        states *= arms[i].size() + 1;
    }
    std::vector<double> value(states * slots, 0.0);
    std::vector<int> choice(states * slots, -1);
    std::vector<std::size_t> taken(d);

    for (std::size_t s = states; s-- > 0;) {
        std::size_t rest = s;
        for (std::size_t i = 0; i < d; ++i) {
            taken[i] = rest % (arms[i].size() + 1);
            rest /= arms[i].size() + 1;
        }
        std::vector<std::size_t> open;
        for (std::size_t i = 0; i < d; ++i) {
            if (taken[i] < arms[i].size()) open.push_back(i);
        }
        if (open.empty()) continue;
        for (std::size_t slot = 0; slot < slots; ++slot) {
            if (slot == 0 ? s != 0 : taken[slot - 1] == 0) continue;
            const std::size_t here_arm = slot == 0 ? d : slot - 1;
            const double here_r = slot == 0 ? 0.0 : arms[here_arm][taken[here_arm] - 1];
            const auto dist_to = [&](std::size_t i) {
                const double r = arms[i][taken[i]];
                return (slot == 0 || i == here_arm) ? std::abs(r - here_r) : r + here_r;
            };
            double best = -1.0;
            int arg = -1;
            if (open.size() == 1) {
                // One arm left: collect it outward in order.
                const std::size_t i = open.front();
                double cum = dist_to(i);
                best = 0.0;
                for (std::size_t k = taken[i]; k < arms[i].size(); ++k) {
                    if (k > taken[i]) cum += arms[i][k] - arms[i][k - 1];
                    best += discount(lg, cum);
                }
                arg = static_cast<int>(i);
            } else {
                for (std::size_t i : open) {
                    const double q = discount(lg, dist_to(i)) *
                                     (1.0 + value[(s + stride[i]) * slots + i + 1]);
                    if (q > best) {
                        best = q;
                        arg = static_cast<int>(i);
                    }
                }
            }
            value[s * slots + slot] = best;
            choice[s * slots + slot] = arg;
        }
    }

    std::vector<Node> offset(d, 1);
    for (std::size_t i = 1; i < d; ++i) {
        offset[i] = offset[i - 1] + static_cast<Node>(arms[i - 1].size());
    }
    ExactSolution sol{value[0], {}, "dstar_dp"};
    std::size_t s = 0, slot = 0;
    std::fill(taken.begin(), taken.end(), 0);
    for (std::size_t step = 0; step < star.reward_count(); ++step) {
        const auto i = static_cast<std::size_t>(choice[s * slots + slot]);
        sol.tour.order.push_back(offset[i] + static_cast<Node>(taken[i]));
        ++taken[i];
        s += stride[i];
        slot = i + 1;
    }
    return sol;
}

}  // namespace rdtsp
