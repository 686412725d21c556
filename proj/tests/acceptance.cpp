// Runs every acceptance criterion and prints one PASS/FAIL line each.
// Exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "oracles.hpp"
#include "properties.hpp"
#include "rdtsp/bench.hpp"
#include "rdtsp/exact.hpp"
#include "rdtsp/generators.hpp"
#include "rdtsp/policies.hpp"

using namespace rdtsp;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

struct Corpus {
    std::vector<MetricInstance> instances;
};

const Corpus& small_corpus() {
    static const Corpus corpus = [] {
        Corpus c;
        RngStream rng(1001);
        for (int i = 0; i < 100; ++i) {
            const std::size_t n = 2 + i % 7;
            const double gammas[] = {0.5, 0.9, 1.0 - 1.0 / static_cast<double>(n)};
            c.instances.push_back(oracle::random_euclidean(n, gammas[(i / 7) % 3], rng));
        }
        return c;
    }();
    return corpus;
}

Outcome oracle_equivalence() {
    double worst = 0;
    int bad = 0;
    for (const auto& inst : small_corpus().instances) {
        const double diff = std::abs(held_karp(inst).value - brute_force(inst).value);
        worst = std::max(worst, diff);
        if (diff > 1e-9) ++bad;
    }
    return {bad == 0, fmt("100 instances, %d mismatches, max |hk - bf| = %.3g", bad, worst)};
}

Outcome nn_lower_bound() {
    int bad = 0;
    double tightest = 1e300;
    for (const auto& inst : small_corpus().instances) {
        const double opt = brute_force(inst).value;
        const double nnv = evaluate_tour(inst, nn(inst)).value;
        if (inst.n() * nnv < opt - 1e-9) ++bad;
        tightest = std::min(tightest, nnv / opt * inst.n());
    }
    return {bad == 0, fmt("%d violations, min n*NN/OPT = %.4f", bad, tightest)};
}

Outcome structured_dp() {
    RngStream rng(1003);
    int bad_line = 0, bad_star = 0, bad_star_line = 0;
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = 1 + i % 8;
        std::vector<double> pos;
        for (std::size_t k = 0; k < n; ++k) pos.push_back(rng.uniform(-5, 5));
        const auto line = LineInstance::make(rng.uniform(-3, 3), pos);
        const double gamma = rng.uniform(0.5, 0.99);
        if (std::abs(line_dp(line, gamma).value - brute_force(line.to_instance(gamma)).value) > 1e-9) ++bad_line;
    }
    for (int i = 0; i < 50; ++i) {
        const std::size_t d = 1 + i % 3;
        const std::size_t total = d + rng.below(7 - d);
        std::vector<std::vector<double>> arms(d);
        for (std::size_t k = 0; k < total; ++k) arms[k % d].push_back(rng.uniform(0.1, 4));
        const auto star = DStarInstance::make(arms);
        const double gamma = rng.uniform(0.5, 0.99);
        const double v = dstar_dp(star, gamma).value;
        if (std::abs(v - brute_force(star.to_instance(gamma)).value) > 1e-9) ++bad_star;
        if (d <= 2) {
            std::vector<double> pos;
            for (double a : star.arms[0]) pos.push_back(-a);
            if (d == 2)
                for (double a : star.arms[1]) pos.push_back(a);
            if (std::abs(v - line_dp(LineInstance::make(0, pos), gamma).value) > 1e-9) ++bad_star_line;
        }
    }
    return {bad_line + bad_star + bad_star_line == 0,
            fmt("line %d/200, d-star %d/50, d<=2 star vs line %d mismatches", bad_line, bad_star, bad_star_line)};
}

Outcome deterministic_star() {
    bool ok = true;
    std::string detail;
    for (std::size_t n : {64, 256, 1024}) {
        const auto star = adversarial_star_deterministic([](const MetricInstance& i) { return nn(i); }, n);
        const auto inst = star.to_instance();
        const double ratio =
            evaluate_tour(inst, nn(inst)).value / evaluate_tour(inst, star.clique_first_tour()).value;
        ok = ok && ratio <= 24.0 / n;
        detail += fmt("n=%zu ratio %.3g (bound %.3g); ", n, ratio, 24.0 / n);
    }
    return {ok, detail};
}

Outcome clique_star() {
    bool ok = true;
    std::string detail;
    const PolicyKind stochastic[] = {PolicyKind::R_NN, PolicyKind::NN_RDFS, PolicyKind::NN_RA};
    for (std::size_t n : {256, 1024}) {
        const auto star = adversarial_star_clique(n, 7);
        const auto inst = star.to_instance();
        const auto ref = reference_from_tour(inst, star.clique_first_tour(), "clique_first");
        const double root = std::sqrt(static_cast<double>(n));
        ok = ok && ref.value >= 0.25 * root;
        detail += fmt("n=%zu ref %.2f (>= %.2f):", n, ref.value, 0.25 * root);
        const auto table = compare_ratios(inst, stochastic, ref, BoundFamily::CliqueStar, 1000, 11);
        for (const auto& row : table.rows) {
            ok = ok && row.ratio <= 8.0 / root;
            detail += fmt(" %s %.3g", std::string(policy_name(row.policy)).c_str(), row.ratio);
        }
        detail += fmt(" (bound %.3g); ", 8.0 / root);
    }
    return {ok, detail};
}

Outcome path_edges() {
    RngStream rng(1006);
    int bad = 0;
    std::size_t max_long = 0;
    for (int i = 0; i < 1000; ++i) {
        const std::size_t n = 2 + rng.below(300);
        const double x = rng.uniform(0.1, 100);
        const auto inst = generate_path(n, x, rng.next_u64());
        const double theta = x / std::sqrt(static_cast<double>(n));
        std::vector<double> xs;
        for (std::size_t k = 1; k <= n; ++k) xs.push_back(inst.coords()[k].x);
        std::sort(xs.begin(), xs.end());
        std::size_t longer = 0;
        for (std::size_t k = 1; k < xs.size(); ++k)
            if (xs[k] - xs[k - 1] > theta) ++longer;
        max_long = std::max(max_long, longer);
        if (!(static_cast<double>(longer) < x / theta)) ++bad;
    }
    return {bad == 0, fmt("1000 paths, %d violations, max long-edge count %zu", bad, max_long)};
}

Outcome expectations() {
    struct Case {
        PolicyKind kind;
        std::size_t n;
        std::size_t runs;
    };
    const Case cases[] = {{PolicyKind::R_NN, 5, 10000}, {PolicyKind::NN_RA, 5, 10000},
                          {PolicyKind::NN_RDFS, 4, 20000}, {PolicyKind::R_NN, 3, 10000},
                          {PolicyKind::NN_RA, 4, 10000}, {PolicyKind::NN_RDFS, 5, 20000}};
    RngStream rng(1007);
    bool ok = true;
    std::string detail;
    for (const auto& c : cases) {
        const auto inst = oracle::random_euclidean(c.n, 0.7, rng);
        const double nnv = oracle::direct_value(inst, oracle::nn_tour(inst));
        double branch = 0;
        const int levels = oracle::level_count(c.n);
        for (Node s = 1; s <= static_cast<Node>(c.n); ++s) {
            if (c.kind == PolicyKind::R_NN) branch += oracle::direct_value(inst, oracle::rnn_heads(inst, s)) / c.n;
            if (c.kind == PolicyKind::NN_RA) branch += oracle::direct_value(inst, oracle::ra_heads(inst, s)) / c.n;
            if (c.kind == PolicyKind::NN_RDFS)
                for (int l = 1; l <= levels; ++l)
                    branch += oracle::direct_value(
                                  inst, oracle::rdfs_heads(inst, s, oracle::theta_for(0.7, c.n, l))) /
                              (c.n * levels);
        }
        const double expected = 0.5 * nnv + 0.5 * branch;
        double s = 0, ss = 0;
        for (std::size_t r = 0; r < c.runs; ++r) {
            RngStream prng(1007, {static_cast<std::uint64_t>(c.kind), c.n, r});
            const double v = evaluate_tour(inst, run_policy(c.kind, inst, prng)).value;
            s += v;
            ss += v * v;
        }
        const double mean = s / c.runs;
        const double se = std::sqrt((ss - c.runs * mean * mean) / (c.runs - 1) / c.runs);
        const double z = std::abs(mean - expected) / se;
        ok = ok && z <= 3;
        detail += fmt("%s n=%zu z=%.2f; ", std::string(policy_name(c.kind)).c_str(), c.n, z);
    }
    return {ok, detail};
}

// Standard error of a row's worst-case value: the worst map's run spread.
double worst_se(const BenchRow& row) {
    const auto it = std::min_element(row.map_means.begin(), row.map_means.end());
    const std::size_t m = static_cast<std::size_t>(it - row.map_means.begin());
    return row.map_sd[m] / std::sqrt(static_cast<double>(row.runs));
}

// a - b separated by at least two combined standard errors
bool above(double a, double sa, double b, double sb) { return a - b >= 2.0 * std::hypot(sa, sb); }

Outcome figure_one() {
    ExperimentConfig cfg;
    cfg.n_list = {400};
    cfg.master_seed = 2024;
    const auto report = run_bench(cfg);
    const auto N = PolicyKind::NN, R = PolicyKind::R_NN, D = PolicyKind::NN_RDFS, A = PolicyKind::NN_RA;
    auto mean = [&](ScenarioKind s, PolicyKind p) { return report.row(s, 400, p).mean; };
    auto mse = [&](ScenarioKind s, PolicyKind p) { return report.row(s, 400, p).stderr_mean; };
    auto worst = [&](ScenarioKind s, PolicyKind p) { return report.row(s, 400, p).min; };
    auto wse = [&](ScenarioKind s, PolicyKind p) { return worst_se(report.row(s, 400, p)); };
    auto avg_above = [&](ScenarioKind s, PolicyKind a, PolicyKind b) { return above(mean(s, a), mse(s, a), mean(s, b), mse(s, b)); };
    auto worst_above = [&](ScenarioKind s, PolicyKind a, PolicyKind b) {
        return above(worst(s, a), wse(s, a), worst(s, b), wse(s, b));
    };

    using S = ScenarioKind;
    const bool a = avg_above(S::RandomCities, N, R) && avg_above(S::RandomCities, N, D) && avg_above(S::RandomCities, N, A);
    const bool b = avg_above(S::Line3, D, N) && avg_above(S::Line3, D, R) && avg_above(S::Line3, A, N) &&
                   avg_above(S::Line3, A, R);
    const bool c = worst_above(S::RandomClusters, D, N) && worst_above(S::RandomClusters, R, N);
    const bool d = avg_above(S::Circles, D, N) && avg_above(S::Circles, D, R) && avg_above(S::Circles, D, A);
    const bool e = worst_above(S::RuralUrban, R, N) && worst_above(S::RuralUrban, D, N) &&
                   worst_above(S::RuralUrban, A, N);

    auto line = [&](S s, bool worst_case) {
        std::string out = std::string(scenario_name(s)) + (worst_case ? " worst[" : " avg[");
        for (PolicyKind p : kAllPolicies) {
            out += fmt("%s %.2f+-%.2f ", std::string(policy_name(p)).c_str(), worst_case ? worst(s, p) : mean(s, p),
                       worst_case ? wse(s, p) : mse(s, p));
        }
        out.back() = ']';
        return out;
    };
    std::string detail = fmt("(a) %s (b) %s (c) %s (d) %s (e) %s", a ? "ok" : "FAIL", b ? "ok" : "FAIL",
                             c ? "ok" : "FAIL", d ? "ok" : "FAIL", e ? "ok" : "FAIL");
    detail += "\n      (a) " + line(S::RandomCities, false) + "\n      (b) " + line(S::Line3, false) +
              "\n      (c) " + line(S::RandomClusters, true) + "\n      (d) " + line(S::Circles, false) +
              "\n      (e) " + line(S::RuralUrban, true);
    return {a && b && c && d && e, detail};
}

Outcome determinism() {
    ExperimentConfig cfg;
    cfg.n_list = {100};
    cfg.master_seed = 99;
    cfg.workers = 1;
    const std::string one = report_csv(run_bench(cfg));
    cfg.workers = 8;
    const std::string eight = report_csv(run_bench(cfg));
    return {one == eight, fmt("CSV %zu bytes, identical: %s", one.size(), one == eight ? "yes" : "no")};
}

Outcome property_suite() {
    const auto st = props::run(10000, 1010);
    std::string detail = fmt("%zu cases;", st.cases);
    for (int p = 0; p < props::kCount; ++p)
        detail += fmt(" %s %zu/%zu", props::property_name(p), st.violations[p], st.checked[p]);
    if (!st.first_failure.empty()) detail += "; first: " + st.first_failure;
    return {st.ok() && st.cases >= 10000, detail};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
        double budget_s;  // 0: no time limit
    };
    const Criterion criteria[] = {
        {1, "held_karp equals brute_force", oracle_equivalence, 30},
        {2, "NN is within a factor n of optimal", nn_lower_bound, 0},
        {3, "line and d-star DP equal brute_force", structured_dp, 0},
        {4, "deterministic adversarial star ratio <= 24/n", deterministic_star, 10},
        {5, "sqrt(n)-clique star ratio <= 8/sqrt(n)", clique_star, 0},
        {6, "fewer than x/theta path edges longer than theta", path_edges, 0},
        {7, "stochastic means within 3 SE of exact expectation", expectations, 0},
        {8, "n=400 scenario ordering claims", figure_one, 1200},
        {9, "bench CSV independent of worker count", determinism, 0},
        {10, "property suite", property_suite, 0},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::string timing = fmt("%.2fs", secs);
        if (c.budget_s > 0) {
            timing += fmt(" of %.0fs", c.budget_s);
            if (secs >= c.budget_s) {
                o.pass = false;
                timing += " OVER BUDGET";
            }
        }
        if (!o.pass) ++failed;
        std::printf("%s %2d %s [%s]: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, timing.c_str(),
                    o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
    return failed;
}
