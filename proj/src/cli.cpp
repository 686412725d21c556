#include "rdtsp/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rdtsp/bench.hpp"
#include "rdtsp/exact.hpp"
#include "rdtsp/generators.hpp"
#include "rdtsp/instance_io.hpp"
#include "rdtsp/policies.hpp"
#include "rdtsp/render.hpp"

namespace rdtsp::cli {

using nlohmann::json;

namespace {

const std::vector<std::string> kExactSolvers{"brute_force", "held_karp", "held_karp_forward"};

ExactSolution run_exact(const std::string& name, const MetricInstance& inst) {
    if (name == "brute_force") return brute_force(inst);
    if (name == "held_karp") return held_karp(inst);
    return held_karp_forward(inst);
}

RdfsTravel parse_travel_flag(const std::string& s) {
    return s == "tree_walk" ? RdfsTravel::TreeWalk : RdfsTravel::Shortcut;
}

RngStream solve_stream(std::uint64_t seed, PolicyKind kind, std::size_t run) {
    return RngStream(seed, {hash_string(policy_name(kind)), run});
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
    } else {
        write_text_file(path, text);
    }
}

std::vector<Node> read_tour_file(const std::string& path, std::size_t run) {
    json j;
    try {
        j = json::parse(read_text_file(path));
        if (j.contains("tour")) return j["tour"].get<std::vector<Node>>();
        if (j.contains("tours")) return j["tours"].at(run).get<std::vector<Node>>();
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("tour file: ") + e.what());
    }
    throw Error(ErrorCode::ParseError, "tour file needs a `tour` or `tours` field");
}

BoundFamily family_of(const std::optional<Provenance>& prov) {
    if (prov && prov->kind == "star_det") return BoundFamily::DeterministicStar;
    if (prov && prov->kind == "star_clique") return BoundFamily::CliqueStar;
    return BoundFamily::General;
}

struct GenArgs {
    std::string scenario;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::string output;
    std::string policy = "nn";
    double jitter = 1.0;
};

void run_gen(const GenArgs& a, std::ostream& out) {
    Provenance prov;
    prov.kind = a.scenario;
    prov.n = a.n;
    prov.seed = a.seed;
    if (a.scenario == "star_det" || a.scenario == "star_clique") {
        AdversarialStar star;
        if (a.scenario == "star_det") {
            const PolicyKind kind = parse_policy(a.policy);
            std::size_t calls = 0;
            star = adversarial_star_deterministic(
                [&](const MetricInstance& inst) {
                    RngStream rng(a.seed, {hash_string("star_det"), calls++});
                    return run_policy(kind, inst, rng);
                },
                a.n);
        } else {
            star = adversarial_star_clique(a.n, a.seed);
        }
        prov.clique = star.clique;
        emit(a.output, write_instance_json(star.to_instance(), prov), out);
        return;
    }
    ScenarioSpec spec{parse_scenario(a.scenario), a.n, a.seed, a.jitter};
    emit(a.output, write_instance_json(generate_scenario(spec), prov), out);
}

struct SolveArgs {
    std::string policy;
    std::string instance;
    std::optional<std::uint64_t> seed;
    std::size_t repeats = 1;
    std::string travel = "shortcut";
    bool tours = false;
    std::string output;
};

void run_solve(const SolveArgs& a, std::ostream& out) {
    const InstanceFile file = load_instance(a.instance);
    const MetricInstance& inst = file.instance;
    json j;
    j["n"] = inst.n();
    if (std::find(kExactSolvers.begin(), kExactSolvers.end(), a.policy) != kExactSolvers.end()) {
        const ExactSolution sol = run_exact(a.policy, inst);
        j["solver"] = sol.solver;
        j["value"] = sol.value;
        j["tour"] = sol.tour.order;
        emit(a.output, j.dump(2) + "\n", out);
        return;
    }
    const PolicyKind kind = parse_policy(a.policy);
    const InstanceView view(inst);
    std::vector<double> values;
    json tours = json::array();
    for (std::size_t r = 0; r < a.repeats; ++r) {
        RngStream rng = solve_stream(*a.seed, kind, r);
        const Tour t = run_policy(kind, view, rng, parse_travel_flag(a.travel));
        values.push_back(evaluate_tour(inst, t).value);
        if (a.tours) tours.push_back(t.order);
    }
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    j["policy"] = std::string(policy_name(kind));
    j["rng"] = std::string(kRngAlgorithm);
    j["master_seed"] = *a.seed;
    j["repeats"] = a.repeats;
    j["rdfs_travel"] = a.travel;
    j["values"] = values;
    j["mean"] = mean;
    if (a.tours) j["tours"] = std::move(tours);
    emit(a.output, j.dump(2) + "\n", out);
}

struct BenchArgs {
    std::string config;
    std::string output;
    std::string json_output;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> workers;
};

void run_bench_cmd(const BenchArgs& a, std::ostream& out) {
    const std::string text = read_text_file(a.config);
    ExperimentConfig cfg = config_from_json(text);
    bool has_seed = false;
    try {
        has_seed = json::parse(text).contains("master_seed");
    } catch (const json::exception&) {
    }
    if (a.seed) {
        cfg.master_seed = *a.seed;
    } else if (!has_seed) {
        throw Error(ErrorCode::InvalidConfig, "bench needs --seed or master_seed in the config");
    }
    if (a.workers) {
        cfg.workers = *a.workers;
    } else if (const char* env = std::getenv("RDTSP_WORKERS")) {
        cfg.workers = static_cast<std::size_t>(std::strtoull(env, nullptr, 10));
    }
    const BenchReport report = run_bench(cfg);
    emit(a.output, report_csv(report), out);
    if (!a.json_output.empty()) write_text_file(a.json_output, report_json(report));
}

struct CompareArgs {
    std::string instance;
    std::vector<std::string> policies{"nn", "rnn", "nnrdfs", "nnra"};
    std::size_t runs = 1000;
    std::optional<std::uint64_t> seed;
    std::string reference = "auto";
    std::string tour;
    std::string output;
};

void run_compare(const CompareArgs& a, std::ostream& out) {
    const InstanceFile file = load_instance(a.instance);
    const MetricInstance& inst = file.instance;
    std::optional<Reference> ref;
    std::string mode = a.reference;
    if (mode == "auto") {
        if (!a.tour.empty()) {
            mode = "tour";
        } else if (file.provenance && !file.provenance->clique.empty()) {
            mode = "clique";
        } else if (inst.n() <= 12) {
            mode = "exact";
        } else {
            mode = "none";
        }
    }
    if (mode == "tour") {
        if (a.tour.empty()) throw Error(ErrorCode::NoReference, "--reference tour needs --tour");
        ref = reference_from_tour(inst, Tour{read_tour_file(a.tour, 0)}, "tour:" + a.tour);
    } else if (mode == "clique") {
        if (!file.provenance || file.provenance->clique.empty()) {
            throw Error(ErrorCode::NoReference, "instance carries no clique");
        }
        AdversarialStar star;
        star.n = inst.n();
        star.clique = file.provenance->clique;
        ref = reference_from_tour(inst, star.clique_first_tour(), "clique_first");
    } else if (mode == "exact") {
        ref = reference_from_exact(held_karp(inst));
    } else if (mode != "none") {
        throw Error(ErrorCode::InvalidConfig, "unknown reference mode '" + mode + "'");
    }
    std::vector<PolicyKind> kinds;
    for (const auto& p : a.policies) kinds.push_back(parse_policy(p));
    const RatioTable table = compare_ratios(inst, kinds, ref, family_of(file.provenance), a.runs, *a.seed);
    emit(a.output, ratio_table_json(table, inst.n()), out);
}

struct RenderArgs {
    std::string instance;
    std::string tour;
    std::string policy;
    std::optional<std::uint64_t> seed;
    std::size_t run = 0;
    std::optional<std::size_t> prefix;
    int width = 800;
    int height = 800;
    std::string layout = "auto";
    std::string output;
};

void run_render(const RenderArgs& a, std::ostream& out) {
    const InstanceFile file = load_instance(a.instance);
    const MetricInstance& inst = file.instance;
    RenderSpec spec;
    spec.instance = &inst;
    if (!a.tour.empty()) {
        spec.tour = read_tour_file(a.tour, a.run);
    } else if (!a.policy.empty()) {
        if (!a.seed) throw Error(ErrorCode::InvalidConfig, "--policy needs --seed");
        const PolicyKind kind = parse_policy(a.policy);
        RngStream rng = solve_stream(*a.seed, kind, a.run);
        spec.tour = run_policy(kind, inst, rng).order;
        spec.title = std::string(policy_name(kind)) + " run " + std::to_string(a.run);
    } else {
        throw Error(ErrorCode::InvalidConfig, "render needs --tour or --policy");
    }
    spec.prefix = a.prefix;
    spec.width = a.width;
    spec.height = a.height;
    if (a.layout == "star" || (a.layout == "auto" && !inst.has_coords())) {
        spec.layout = Layout::Star;
    }
    emit(a.output, render_svg(spec), out);
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Reward-discounted TSP: local policies, exact solvers and benchmarks", "rdtsp"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate an instance file");
    gen_cmd->add_option("--scenario", gen.scenario,
                        "random_cities, line3, random_clusters, circles, rural_urban, path, "
                        "star_det or star_clique")
        ->required();
    gen_cmd->add_option("--n", gen.n, "Number of rewards")->required();
    gen_cmd->add_option("--seed", gen.seed, "Generator seed");
    gen_cmd->add_option("-o,--output", gen.output, "Output file (default: stdout)");
    gen_cmd->add_option("--policy", gen.policy, "Policy the star_det instance is built against");
    gen_cmd->add_option("--jitter", gen.jitter, "Cluster-centre jitter, in units of ell");

    SolveArgs solve;
    auto* solve_cmd = app.add_subcommand("solve", "Run a policy or exact solver on an instance");
    solve_cmd->add_option("--policy", solve.policy,
                          "nn, rnn, nnrdfs, nnra, brute_force, held_karp, held_karp_forward")
        ->required();
    solve_cmd->add_option("--instance", solve.instance, "Instance file")->required();
    solve_cmd->add_option("--seed", solve.seed, "Master seed")->required();
    solve_cmd->add_option("--repeats", solve.repeats, "Number of runs")->check(CLI::PositiveNumber);
    solve_cmd->add_option("--rdfs-travel", solve.travel, "shortcut or tree_walk")
        ->check(CLI::IsMember({"shortcut", "tree_walk"}));
    solve_cmd->add_flag("--tours", solve.tours, "Include every tour in the output");
    solve_cmd->add_option("-o,--output", solve.output, "Output file (default: stdout)");

    BenchArgs bench;
    auto* bench_cmd = app.add_subcommand("bench", "Run the benchmark protocol from a config file");
    bench_cmd->add_option("--config", bench.config, "Experiment config JSON")->required();
    bench_cmd->add_option("-o,--output", bench.output, "CSV output (default: stdout)");
    bench_cmd->add_option("--json", bench.json_output, "Also write the JSON report here");
    bench_cmd->add_option("--seed", bench.seed, "Master seed (overrides the config)");
    bench_cmd->add_option("--workers", bench.workers, "Worker threads (or RDTSP_WORKERS)");

    CompareArgs compare;
    auto* compare_cmd = app.add_subcommand("compare", "Policy/reference ratios with theorem bounds");
    compare_cmd->add_option("--instance", compare.instance, "Instance file")->required();
    compare_cmd->add_option("--policies", compare.policies, "Policies to compare")->delimiter(',');
    compare_cmd->add_option("--runs", compare.runs, "Runs per stochastic policy")
        ->check(CLI::PositiveNumber);
    compare_cmd->add_option("--seed", compare.seed, "Master seed")->required();
    compare_cmd->add_option("--reference", compare.reference, "auto, exact, clique, tour or none")
        ->check(CLI::IsMember({"auto", "exact", "clique", "tour", "none"}));
    compare_cmd->add_option("--tour", compare.tour, "Reference tour file");
    compare_cmd->add_option("-o,--output", compare.output, "Output file (default: stdout)");

    RenderArgs render;
    auto* render_cmd = app.add_subcommand("render", "Draw a tour prefix as SVG");
    render_cmd->add_option("--instance", render.instance, "Instance file")->required();
    render_cmd->add_option("--tour", render.tour, "Tour file (solve output)");
    render_cmd->add_option("--policy", render.policy, "Compute the tour with this policy");
    render_cmd->add_option("--seed", render.seed, "Master seed for --policy");
    render_cmd->add_option("--run", render.run, "Run index in the tour file or policy stream");
    render_cmd->add_option("--prefix", render.prefix, "Rewards to draw (default ceil(n/8))");
    render_cmd->add_option("--width", render.width, "Canvas width")->check(CLI::PositiveNumber);
    render_cmd->add_option("--height", render.height, "Canvas height")->check(CLI::PositiveNumber);
    render_cmd->add_option("--layout", render.layout, "auto, coords or star")
        ->check(CLI::IsMember({"auto", "coords", "star"}));
    render_cmd->add_option("-o,--output", render.output, "Output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen_cmd->parsed()) run_gen(gen, out);
        if (solve_cmd->parsed()) run_solve(solve, out);
        if (bench_cmd->parsed()) run_bench_cmd(bench, out);
        if (compare_cmd->parsed()) run_compare(compare, out);
        if (render_cmd->parsed()) run_render(render, out);
    } catch (const std::exception& e) {
        err << "rdtsp: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitOk;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    return dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace rdtsp::cli
