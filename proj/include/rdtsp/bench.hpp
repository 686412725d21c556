#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rdtsp/core.hpp"
#include "rdtsp/exact.hpp"
#include "rdtsp/instance_io.hpp"
#include "rdtsp/generators.hpp"
#include "rdtsp/policies.hpp"

namespace rdtsp {

struct ExperimentConfig {
    std::vector<ScenarioKind> scenarios{std::begin(kFigureScenarios), std::end(kFigureScenarios)};
    std::vector<std::size_t> n_list{100, 200, 400, 600, 800, 1000};
    std::size_t n_maps = 10;
    std::size_t n_alg = 100;
    // Maps first_map .. first_map + n_maps - 1 are generated; lets a sweep be
    // split into disjoint pieces and merged afterwards.
    std::size_t first_map = 0;
    std::vector<PolicyKind> policies{std::begin(kAllPolicies), std::end(kAllPolicies)};
    std::uint64_t master_seed = 0;
    std::size_t workers = 1;
    RdfsTravel rdfs_travel = RdfsTravel::Shortcut;
    double cluster_jitter = 1.0;
};

void validate_config(const ExperimentConfig& cfg);
// Missing keys keep their defaults. `workers` is honoured but never written
// to reports.
ExperimentConfig config_from_json(std::string_view text);
std::string config_to_json(const ExperimentConfig& cfg);

// Stable per-cell seeds.
std::uint64_t map_seed(std::uint64_t master, ScenarioKind scenario, std::size_t n,
                       std::size_t map_index);
RngStream run_stream(std::uint64_t master, ScenarioKind scenario, std::size_t n,
                     std::size_t map_index, PolicyKind policy, std::size_t run_index);

struct BenchRow {
    ScenarioKind scenario{};
    std::size_t n = 0;
    PolicyKind policy{};
    std::vector<std::size_t> map_indices;
    std::vector<double> map_means;  // mean over runs, per map
    std::vector<double> map_sd;     // sample std. dev. over runs, per map
    std::size_t runs = 0;           // runs per map (1 for deterministic policies)
    double mean = 0.0;              // across maps
    double min = 0.0;               // worst map
    double stderr_mean = 0.0;       // std. error of `mean` across maps
};

struct BenchReport {
    ExperimentConfig config;
    std::vector<BenchRow> rows;  // scenario-major, then n, then policy

    const BenchRow& row(ScenarioKind scenario, std::size_t n, PolicyKind policy) const;
};

// Recomputes mean/min/stderr from map_means.
void finalize_row(BenchRow& row);

BenchReport run_bench(const ExperimentConfig& cfg);

// Combines reports over disjoint map ranges of otherwise identical configs.
BenchReport merge_reports(const BenchReport& a, const BenchReport& b);

std::string report_csv(const BenchReport& report);
std::string report_json(const BenchReport& report);

// ---------------------------------------------------------------------------
// Ratios against a reference value

enum class BoundFamily {
    General,            // NN >= OPT / n
    DeterministicStar,  // deterministic local policies <= 24/n of OPT
    CliqueStar,         // any local policy <= 8/sqrt(n) of OPT
};

std::string_view bound_family_name(BoundFamily family);

struct Reference {
    double value = 0.0;
    std::string source;
};

Reference reference_from_exact(const ExactSolution& sol);
Reference reference_from_tour(const MetricInstance& inst, const Tour& tour, std::string source);

struct RatioRow {
    PolicyKind policy{};
    std::size_t runs = 0;
    double mean_value = 0.0;
    double stderr_value = 0.0;
    double ratio = 0.0;
    // Empty when the family states no bound for this policy.
    std::optional<double> bound;
    bool bound_is_lower = false;
    bool within_bound = true;
};

struct RatioTable {
    Reference reference;
    BoundFamily family = BoundFamily::General;
    std::vector<RatioRow> rows;
};

// Deterministic policies run once, stochastic ones `runs` times on streams
// derived from `seed`. Throws NoReference when `reference` is empty or not
// positive.
RatioTable compare_ratios(const MetricInstance& inst, std::span<const PolicyKind> policies,
                          const std::optional<Reference>& reference, BoundFamily family,
                          std::size_t runs, std::uint64_t seed);

std::string ratio_table_json(const RatioTable& table, std::size_t n);

}  // namespace rdtsp
