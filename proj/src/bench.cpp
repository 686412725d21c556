#include "rdtsp/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <map>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace rdtsp {

using nlohmann::json;

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string_view travel_name(RdfsTravel t) {
    return t == RdfsTravel::Shortcut ? "shortcut" : "tree_walk";
}

RdfsTravel parse_travel(std::string_view s) {
    if (s == "shortcut") return RdfsTravel::Shortcut;
    if (s == "tree_walk") return RdfsTravel::TreeWalk;
    throw Error(ErrorCode::InvalidConfig, "rdfs_travel must be shortcut or tree_walk");
}

double sample_sd(std::span<const double> xs, double mean) {
    if (xs.size() < 2) return 0.0;
    double ss = 0.0;
    for (double v : xs) ss += (v - mean) * (v - mean);
    return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

double mean_of(std::span<const double> xs) {
    double s = 0.0;
    for (double v : xs) s += v;
    return xs.empty() ? 0.0 : s / static_cast<double>(xs.size());
}

}  // namespace

void validate_config(const ExperimentConfig& cfg) {
    if (cfg.n_maps < 1) throw Error(ErrorCode::InvalidConfig, "n_maps must be >= 1");
    if (cfg.n_alg < 1) throw Error(ErrorCode::InvalidConfig, "n_alg must be >= 1");
    if (cfg.scenarios.empty()) throw Error(ErrorCode::InvalidConfig, "no scenarios");
    if (cfg.n_list.empty()) throw Error(ErrorCode::InvalidConfig, "n_list is empty");
    if (cfg.policies.empty()) throw Error(ErrorCode::InvalidConfig, "no policies");
    for (std::size_t n : cfg.n_list) {
        if (n < 3) throw Error(ErrorCode::InvalidConfig, "every n must be >= 3");
    }
    if (!(cfg.cluster_jitter >= 0.0)) {
        throw Error(ErrorCode::InvalidConfig, "cluster_jitter must be nonnegative");
    }
}

ExperimentConfig config_from_json(std::string_view text) {
    ExperimentConfig cfg;
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    try {
        if (j.contains("scenarios")) {
            cfg.scenarios.clear();
            for (const auto& s : j["scenarios"]) cfg.scenarios.push_back(parse_scenario(s.get<std::string>()));
        }
        if (j.contains("n_list")) cfg.n_list = j["n_list"].get<std::vector<std::size_t>>();
        if (j.contains("n_maps")) cfg.n_maps = j["n_maps"].get<std::size_t>();
        if (j.contains("n_alg")) cfg.n_alg = j["n_alg"].get<std::size_t>();
        if (j.contains("first_map")) cfg.first_map = j["first_map"].get<std::size_t>();
        if (j.contains("policies")) {
            cfg.policies.clear();
            for (const auto& p : j["policies"]) cfg.policies.push_back(parse_policy(p.get<std::string>()));
        }
        if (j.contains("master_seed")) cfg.master_seed = j["master_seed"].get<std::uint64_t>();
        if (j.contains("workers")) cfg.workers = j["workers"].get<std::size_t>();
        if (j.contains("rdfs_travel")) cfg.rdfs_travel = parse_travel(j["rdfs_travel"].get<std::string>());
        if (j.contains("cluster_jitter")) cfg.cluster_jitter = j["cluster_jitter"].get<double>();
    } catch (const json::exception& e) {
        throw Error(ErrorCode::InvalidConfig, e.what());
    }
    validate_config(cfg);
    return cfg;
}

std::string config_to_json(const ExperimentConfig& cfg) {
    json j;
    j["scenarios"] = json::array();
    for (auto s : cfg.scenarios) j["scenarios"].push_back(std::string(scenario_name(s)));
    j["n_list"] = cfg.n_list;
    j["n_maps"] = cfg.n_maps;
    j["n_alg"] = cfg.n_alg;
    j["first_map"] = cfg.first_map;
    j["policies"] = json::array();
    for (auto p : cfg.policies) j["policies"].push_back(std::string(policy_name(p)));
    j["master_seed"] = cfg.master_seed;
    j["workers"] = cfg.workers;
    j["rdfs_travel"] = std::string(travel_name(cfg.rdfs_travel));
    j["cluster_jitter"] = cfg.cluster_jitter;
    return j.dump(2) + "\n";
}

std::uint64_t map_seed(std::uint64_t master, ScenarioKind scenario, std::size_t n,
                       std::size_t map_index) {
    return RngStream(master, {hash_string(scenario_name(scenario)), n, map_index}).key();
}

RngStream run_stream(std::uint64_t master, ScenarioKind scenario, std::size_t n,
                     std::size_t map_index, PolicyKind policy, std::size_t run_index) {
    return RngStream(master, {hash_string(scenario_name(scenario)), n, map_index,
                              hash_string(policy_name(policy)), run_index});
}

const BenchRow& BenchReport::row(ScenarioKind scenario, std::size_t n, PolicyKind policy) const {
    for (const auto& r : rows) {
        if (r.scenario == scenario && r.n == n && r.policy == policy) return r;
    }
    throw Error(ErrorCode::InvalidConfig, "no row for " + std::string(scenario_name(scenario)) +
                                              " n=" + std::to_string(n) + " " +
                                              std::string(policy_name(policy)));
}

void finalize_row(BenchRow& row) {
    row.mean = mean_of(row.map_means);
    row.min = row.map_means.empty() ? 0.0
                                    : *std::min_element(row.map_means.begin(), row.map_means.end());
    row.stderr_mean = row.map_means.size() < 2
                          ? 0.0
                          : sample_sd(row.map_means, row.mean) /
                                std::sqrt(static_cast<double>(row.map_means.size()));
}

BenchReport run_bench(const ExperimentConfig& cfg) {
    validate_config(cfg);
    struct Cell {
        ScenarioKind scenario;
        std::size_t n;
        std::size_t map;
    };
    std::vector<Cell> cells;
    for (auto s : cfg.scenarios) {
        for (std::size_t n : cfg.n_list) {
            for (std::size_t m = 0; m < cfg.n_maps; ++m) cells.push_back({s, n, cfg.first_map + m});
        }
    }
    const std::size_t np = cfg.policies.size();
    std::vector<double> cell_mean(cells.size() * np, 0.0);
    std::vector<double> cell_sd(cells.size() * np, 0.0);
    std::vector<std::exception_ptr> failures(cells.size());

    const auto work = [&](std::size_t c) {
        const Cell& cell = cells[c];
        ScenarioSpec spec{cell.scenario, cell.n, map_seed(cfg.master_seed, cell.scenario, cell.n, cell.map),
                          cfg.cluster_jitter};
        try {
            const MetricInstance inst = generate_scenario(spec);
            const InstanceView view(inst);
            std::vector<double> values;
            for (std::size_t p = 0; p < np; ++p) {
                const PolicyKind kind = cfg.policies[p];
                const std::size_t runs = is_stochastic(kind) ? cfg.n_alg : 1;
                values.clear();
                for (std::size_t r = 0; r < runs; ++r) {
                    RngStream rng = run_stream(cfg.master_seed, cell.scenario, cell.n, cell.map, kind, r);
                    values.push_back(evaluate_tour(inst, run_policy(kind, view, rng, cfg.rdfs_travel)).value);
                }
                const double m = mean_of(values);
                cell_mean[c * np + p] = m;
                cell_sd[c * np + p] = sample_sd(values, m);
            }
        } catch (const Error& e) {
            std::ostringstream os;
            os << "cell scenario=" << scenario_name(cell.scenario) << " n=" << cell.n
               << " map=" << cell.map << ": " << e.what();
            failures[c] = std::make_exception_ptr(Error(e.code(), os.str()));
        } catch (...) {
            failures[c] = std::current_exception();
        }
    };

    const std::size_t workers = std::max<std::size_t>(1, std::min(cfg.workers, cells.size()));
    if (workers == 1) {
        for (std::size_t c = 0; c < cells.size(); ++c) work(c);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t c = next++; c < cells.size(); c = next++) work(c);
            });
        }
        for (auto& t : pool) t.join();
    }
    for (const auto& f : failures) {
        if (f) std::rethrow_exception(f);
    }

    BenchReport report;
    report.config = cfg;
    std::size_t base = 0;
    for (auto s : cfg.scenarios) {
        for (std::size_t n : cfg.n_list) {
            for (std::size_t p = 0; p < np; ++p) {
                BenchRow row;
                row.scenario = s;
                row.n = n;
                row.policy = cfg.policies[p];
                row.runs = is_stochastic(row.policy) ? cfg.n_alg : 1;
                for (std::size_t m = 0; m < cfg.n_maps; ++m) {
                    row.map_indices.push_back(cells[base + m].map);
                    row.map_means.push_back(cell_mean[(base + m) * np + p]);
                    row.map_sd.push_back(cell_sd[(base + m) * np + p]);
                }
                finalize_row(row);
                report.rows.push_back(std::move(row));
            }
            base += cfg.n_maps;
        }
    }
    return report;
}

BenchReport merge_reports(const BenchReport& a, const BenchReport& b) {
    const auto& ca = a.config;
    const auto& cb = b.config;
    if (ca.scenarios != cb.scenarios || ca.n_list != cb.n_list || ca.policies != cb.policies ||
        ca.n_alg != cb.n_alg || ca.master_seed != cb.master_seed ||
        ca.rdfs_travel != cb.rdfs_travel || ca.cluster_jitter != cb.cluster_jitter ||
        a.rows.size() != b.rows.size()) {
        throw Error(ErrorCode::InvalidConfig, "reports come from different experiments");
    }
    BenchReport out;
    out.config = ca;
    out.config.first_map = std::min(ca.first_map, cb.first_map);
    out.config.n_maps = ca.n_maps + cb.n_maps;
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        const BenchRow& ra = a.rows[i];
        const BenchRow& rb = b.rows[i];
        std::map<std::size_t, std::pair<double, double>> by_map;
        for (std::size_t m = 0; m < ra.map_indices.size(); ++m) {
            by_map[ra.map_indices[m]] = {ra.map_means[m], ra.map_sd[m]};
        }
        for (std::size_t m = 0; m < rb.map_indices.size(); ++m) {
            if (!by_map.emplace(rb.map_indices[m], std::pair{rb.map_means[m], rb.map_sd[m]}).second) {
                throw Error(ErrorCode::InvalidConfig, "map ranges overlap");
            }
        }
        BenchRow row;
        row.scenario = ra.scenario;
        row.n = ra.n;
        row.policy = ra.policy;
        row.runs = ra.runs;
        for (const auto& [m, v] : by_map) {
            row.map_indices.push_back(m);
            row.map_means.push_back(v.first);
            row.map_sd.push_back(v.second);
        }
        finalize_row(row);
        out.rows.push_back(std::move(row));
    }
    return out;
}

std::string report_csv(const BenchReport& report) {
    const auto& c = report.config;
    std::ostringstream os;
    os << "# rdtsp bench report\n"
       << "# generator_version=" << kGeneratorVersion << "\n"
       << "# rng=" << kRngAlgorithm << "\n"
       << "# master_seed=" << c.master_seed << "\n"
       << "# n_maps=" << c.n_maps << "\n"
       << "# n_alg=" << c.n_alg << "\n"
       << "# first_map=" << c.first_map << "\n"
       << "# rdfs_travel=" << travel_name(c.rdfs_travel) << "\n"
       << "# cluster_jitter=" << fmt_double(c.cluster_jitter) << "\n"
       << "scenario,n,policy,map_means,mean,min,stderr,n_maps,n_alg,master_seed\n";
    for (const auto& r : report.rows) {
        os << scenario_name(r.scenario) << ',' << r.n << ',' << policy_name(r.policy) << ",\"[";
        for (std::size_t i = 0; i < r.map_means.size(); ++i) {
            if (i) os << ',';
            os << fmt_double(r.map_means[i]);
        }
        os << "]\"," << fmt_double(r.mean) << ',' << fmt_double(r.min) << ','
           << fmt_double(r.stderr_mean) << ',' << r.map_means.size() << ',' << r.runs << ','
           << c.master_seed << '\n';
    }
    return os.str();
}

std::string report_json(const BenchReport& report) {
    const auto& c = report.config;
    json j;
    j["generator_version"] = std::string(kGeneratorVersion);
    j["rng"] = std::string(kRngAlgorithm);
    j["master_seed"] = c.master_seed;
    j["n_maps"] = c.n_maps;
    j["n_alg"] = c.n_alg;
    j["first_map"] = c.first_map;
    j["rdfs_travel"] = std::string(travel_name(c.rdfs_travel));
    j["cluster_jitter"] = c.cluster_jitter;
    j["rows"] = json::array();
    for (const auto& r : report.rows) {
        json row;
        row["scenario"] = std::string(scenario_name(r.scenario));
        row["n"] = r.n;
        row["policy"] = std::string(policy_name(r.policy));
        row["map_indices"] = r.map_indices;
        row["map_means"] = r.map_means;
        row["map_sd"] = r.map_sd;
        row["mean"] = r.mean;
        row["min"] = r.min;
        row["stderr"] = r.stderr_mean;
        row["n_maps"] = r.map_means.size();
        row["n_alg"] = r.runs;
        row["master_seed"] = c.master_seed;
        j["rows"].push_back(std::move(row));
    }
    return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------

std::string_view bound_family_name(BoundFamily family) {
    switch (family) {
        case BoundFamily::General: return "general";
        case BoundFamily::DeterministicStar: return "deterministic_star";
        case BoundFamily::CliqueStar: return "clique_star";
    }
    return "?";
}

Reference reference_from_exact(const ExactSolution& sol) { return {sol.value, sol.solver}; }

Reference reference_from_tour(const MetricInstance& inst, const Tour& tour, std::string source) {
    return {evaluate_tour(inst, tour).value, std::move(source)};
}

RatioTable compare_ratios(const MetricInstance& inst, std::span<const PolicyKind> policies,
                          const std::optional<Reference>& reference, BoundFamily family,
                          std::size_t runs, std::uint64_t seed) {
    if (!reference || !(reference->value > 0.0)) {
        throw Error(ErrorCode::NoReference, "a positive reference value is required");
    }
    if (runs < 1) throw Error(ErrorCode::InvalidConfig, "runs must be >= 1");
    const double n = static_cast<double>(inst.n());
    RatioTable table{*reference, family, {}};
    const InstanceView view(inst);
    for (PolicyKind kind : policies) {
        RatioRow row;
        row.policy = kind;
        row.runs = is_stochastic(kind) ? runs : 1;
        std::vector<double> values;
        for (std::size_t r = 0; r < row.runs; ++r) {
            RngStream rng(seed, {hash_string(policy_name(kind)), r});
            values.push_back(evaluate_tour(inst, run_policy(kind, view, rng)).value);
        }
        row.mean_value = mean_of(values);
        row.stderr_value = sample_sd(values, row.mean_value) / std::sqrt(static_cast<double>(values.size()));
        row.ratio = row.mean_value / reference->value;
        switch (family) {
            case BoundFamily::General:
                if (kind == PolicyKind::NN) {
                    row.bound = 1.0 / n;
                    row.bound_is_lower = true;
                }
                break;
            case BoundFamily::DeterministicStar:
                if (!is_stochastic(kind)) row.bound = 24.0 / n;
                break;
            case BoundFamily::CliqueStar:
                row.bound = 8.0 / std::sqrt(n);
                break;
        }
        if (row.bound) {
            row.within_bound = row.bound_is_lower ? row.ratio >= *row.bound - 1e-12
                                                  : row.ratio <= *row.bound + 1e-12;
        }
        table.rows.push_back(row);
    }
    return table;
}

std::string ratio_table_json(const RatioTable& table, std::size_t n) {
    json j;
    j["n"] = n;
    j["reference"] = {{"value", table.reference.value}, {"source", table.reference.source}};
    j["family"] = std::string(bound_family_name(table.family));
    j["rows"] = json::array();
    for (const auto& r : table.rows) {
        json row;
        row["policy"] = std::string(policy_name(r.policy));
        row["runs"] = r.runs;
        row["mean_value"] = r.mean_value;
        row["stderr"] = r.stderr_value;
        row["ratio"] = r.ratio;
        if (r.bound) {
            row["bound"] = *r.bound;
            row["bound_kind"] = r.bound_is_lower ? "lower" : "upper";
            row["within_bound"] = r.within_bound;
        } else {
            row["bound"] = nullptr;
        }
        j["rows"].push_back(std::move(row));
    }
    return j.dump(2) + "\n";
}

}  // namespace rdtsp
