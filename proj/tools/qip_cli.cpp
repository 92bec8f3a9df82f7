#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qip/eval.hpp"
#include "qip/generator.hpp"
#include "qip/io.hpp"
#include "qip/local_search.hpp"
#include "qip/oracle.hpp"
#include "qip/report.hpp"
#include "qip/tabu.hpp"

namespace {

using namespace qip;

struct SolveOptions {
    std::string algorithm = "tsos";
    std::string instance_path;
    std::uint64_t seed = 0;
    std::optional<long long> rounds;
    std::optional<double> time_limit;
    long long tenure = 0;
};

std::string base_name(const std::string& path) {
    auto slash = path.find_last_of('/');
    std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
    return name;
}

std::string csv_header() {
    return "instance,algorithm,seed,OFV,TB,rounds,feasible";
}

std::string format_seconds(double s) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << s;
    return os.str();
}

RunReport run_solver(const Instance& inst, const SolveOptions& opt, const std::string& name,
                     std::vector<long long>& x_out) {
    RunReport rep;
    rep.instance_name = name;
    rep.algorithm = opt.algorithm;
    rep.seed = opt.seed;
    if (opt.algorithm == "1opt") {
        auto start = Clock::now();
        Rng rng(opt.seed);
        State state = make_state(inst, std::vector<long long>(static_cast<std::size_t>(inst.n()), 0));
        one_opt(state, inst, rng);
        rep.ofv = state.value;
        rep.seconds_to_best = std::chrono::duration<double>(Clock::now() - start).count();
        rep.rounds_completed = 0;
        rep.feasible = is_feasible(inst, state.x);
        x_out = state.x;
    } else {
        TsosConfig cfg;
        cfg.seed = opt.seed;
        cfg.tenure = opt.tenure;
        cfg.round_limit = opt.rounds;
        cfg.time_limit = opt.time_limit;
        auto [incumbent, report] = tsos(inst, cfg);
        rep.ofv = incumbent.value;
        rep.seconds_to_best = incumbent.seconds_to_best;
        rep.rounds_completed = report.rounds_completed;
        rep.feasible = is_feasible(inst, incumbent.x);
        x_out = incumbent.x;
    }
    return rep;
}

int cmd_generate(const GeneratorConfig& cfg, const std::string& out_dir) {
    Instance inst = generate(cfg);
    std::string name = instance_name(cfg);
    std::string path = out_dir.empty() ? name : out_dir + "/" + name;
    write_instance_file(inst, path);
    std::cout << path << '\n';
    return 0;
}

int cmd_solve(const SolveOptions& opt, std::string out_path) {
    Instance inst = read_instance_file(opt.instance_path);
    std::string name = base_name(opt.instance_path);
    std::vector<long long> x;
    RunReport rep = run_solver(inst, opt, name, x);
    if (out_path.empty()) out_path = opt.instance_path + ".sol";
    write_solution_file({name, rep.ofv, x}, out_path);
    std::cout << csv_header() << '\n'
              << rep.instance_name << ',' << rep.algorithm << ',' << rep.seed << ',' << rep.ofv
              << ',' << format_seconds(rep.seconds_to_best) << ',' << rep.rounds_completed << ','
              << (rep.feasible ? 1 : 0) << '\n';
    return 0;
}

int cmd_check(const std::string& instance_path, const std::string& solution_path) {
    Instance inst = read_instance_file(instance_path);
    Solution sol = read_solution_file(solution_path);
    if (static_cast<int>(sol.x.size()) != inst.n()) {
        std::cerr << "check: solution has " << sol.x.size() << " values, instance has " << inst.n()
                  << " variables\n";
        return 1;
    }
    bool feasible = is_feasible(inst, sol.x);
    long long actual = feasible ? serial::objective(inst, sol.x) : 0;
    bool objective_ok = feasible && actual == sol.objective;
    bool local_opt = false;
    if (feasible) {
        State state = make_state(inst, sol.x);
        local_opt = is_one_opt_local_optimum(state, inst);
    }
    std::cout << "feasible=" << (feasible ? "true" : "false")
              << " objective_stored=" << sol.objective << " objective_recomputed=" << actual
              << " objective_match=" << (objective_ok ? "true" : "false")
              << " local_opt=" << (local_opt ? "true" : "false") << '\n';
    return feasible && objective_ok ? 0 : 1;
}

int cmd_bench(const std::vector<std::string>& instance_paths, int runs, const SolveOptions& base,
              const std::string& out_path) {
    struct Job {
        std::size_t instance_idx;
        std::string algorithm;
        int run;
        RunReport report;
    };

    std::vector<Instance> instances;
    std::vector<std::string> names;
    for (const auto& p : instance_paths) {
        instances.push_back(read_instance_file(p));
        names.push_back(base_name(p));
    }

    const std::vector<std::string> algorithms = {"1opt", "tsos"};
    std::vector<Job> jobs;
    for (std::size_t ii = 0; ii < instances.size(); ++ii)
        for (const auto& alg : algorithms)
            for (int r = 0; r < runs; ++r) jobs.push_back({ii, alg, r, {}});

    // Independent (state, rng) pairs over shared immutable instances.
#pragma omp parallel for schedule(dynamic)
    for (std::size_t k = 0; k < jobs.size(); ++k) {
        Job& job = jobs[k];
        SolveOptions opt = base;
        opt.algorithm = job.algorithm;
        opt.seed = base.seed + static_cast<std::uint64_t>(job.run);
        std::vector<long long> x;
        job.report = run_solver(instances[job.instance_idx], opt, names[job.instance_idx], x);
    }

    // Best found per instance over the whole batch, and per-cell best for the
    // success counts.
    std::vector<long long> bfs(instances.size(), 0);
    for (const auto& job : jobs) bfs[job.instance_idx] = std::max(bfs[job.instance_idx], job.report.ofv);
    std::vector<std::vector<long long>> cell_best(instances.size(),
                                                  std::vector<long long>(algorithms.size(), 0));
    for (const auto& job : jobs) {
        std::size_t a = job.algorithm == "1opt" ? 0 : 1;
        cell_best[job.instance_idx][a] = std::max(cell_best[job.instance_idx][a], job.report.ofv);
    }

    std::ostringstream csv;
    csv << "instance,algorithm,run,seed,OFV,RPD,TB,success\n";
    for (const auto& job : jobs) { // job order is already (instance, algorithm, run)
        std::size_t a = job.algorithm == "1opt" ? 0 : 1;
        csv << job.report.instance_name << ',' << job.report.algorithm << ',' << job.run << ','
            << job.report.seed << ',' << job.report.ofv << ',' << std::fixed
            << std::setprecision(4) << rpd(bfs[job.instance_idx], job.report.ofv) << ','
            << format_seconds(job.report.seconds_to_best) << ','
            << (job.report.ofv == cell_best[job.instance_idx][a] ? 1 : 0) << '\n';
    }

    if (out_path.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot open for writing: " + out_path);
        out << csv.str();
    }
    return 0;
}

int cmd_oracle(const std::string& instance_path, long long budget) {
    Instance inst = read_instance_file(instance_path);
    GlobalOptimum opt = brute_force_global(inst, {budget});
    std::cout << "optimum " << opt.value << "\nx";
    for (long long v : opt.x) std::cout << ' ' << v;
    std::cout << '\n';
    return 0;
}

int cmd_stats(const std::string& instance_path, const std::string& solution_path) {
    Instance inst = read_instance_file(instance_path);
    Solution sol = read_solution_file(solution_path);
    auto s = extreme_value_stats(inst, sol.x);
    std::cout << "pct_at_zero,pct_at_upper,pct_interior\n"
              << std::fixed << std::setprecision(2) << s.pct_at_zero << ',' << s.pct_at_upper << ','
              << s.pct_interior << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quadratic integer programming toolkit: generator, 1-Opt and tabu-oscillation "
                 "solvers, verification oracle, benchmarks"};
    app.require_subcommand(1);

    GeneratorConfig gen_cfg;
    std::string gen_out_dir;
    bool unconstrained = false;
    std::string rhs_basis = "max";
    std::string tightness = "e";
    auto* gen = app.add_subcommand("generate", "Generate a seeded instance file");
    gen->add_option("--family", gen_cfg.family, "Coefficient-range family 1..5")
        ->check(CLI::Range(1, 5))
        ->required();
    gen->add_option("--n", gen_cfg.n, "Variable count")->required();
    gen->add_option("--c", gen_cfg.c, "Constraint ratio (0.2 or 0.5)");
    gen->add_option("--tightness", tightness, "RHS tightness bracket: e, d, or h")
        ->check(CLI::IsMember({"e", "d", "h"}));
    gen->add_flag("--unconstrained", unconstrained, "Generate without knapsack constraints");
    gen->add_option("--rhs-basis", rhs_basis, "RHS basis: max (consumption) or sum (coefficients)")
        ->check(CLI::IsMember({"max", "sum"}));
    gen->add_option("--seed", gen_cfg.seed, "Generator seed");
    gen->add_option("--out", gen_out_dir, "Output directory (default: current)");

    SolveOptions solve_opt;
    std::string solve_out;
    long long rounds = -1;
    double time_limit = -1.0;
    auto* solve = app.add_subcommand("solve", "Run a solver on an instance file");
    solve->add_option("--alg", solve_opt.algorithm, "Algorithm: 1opt or tsos")
        ->check(CLI::IsMember({"1opt", "tsos"}));
    solve->add_option("--instance", solve_opt.instance_path, "Instance file")->required();
    solve->add_option("--seed", solve_opt.seed, "Run seed");
    solve->add_option("--rounds", rounds, "Tabu search round limit");
    solve->add_option("--time-limit", time_limit, "Tabu search time limit, seconds");
    solve->add_option("--tenure", solve_opt.tenure, "Tabu tenure (default 10 + n/1000)");
    solve->add_option("--out", solve_out, "Solution file path (default: <instance>.sol)");

    std::string check_instance, check_solution;
    auto* check = app.add_subcommand("check", "Verify a solution file against its instance");
    check->add_option("--instance", check_instance, "Instance file")->required();
    check->add_option("--solution", check_solution, "Solution file")->required();

    std::vector<std::string> bench_instances;
    int bench_runs = 10;
    SolveOptions bench_opt;
    std::string bench_out;
    long long bench_rounds = -1;
    double bench_time_limit = -1.0;
    auto* bench = app.add_subcommand("bench", "Seeded multi-run benchmark over instances");
    bench->add_option("--instance", bench_instances, "Instance files")->required();
    bench->add_option("--runs", bench_runs, "Runs per instance per algorithm");
    bench->add_option("--seed", bench_opt.seed, "Base seed (run r uses seed + r)");
    bench->add_option("--rounds", bench_rounds, "Tabu search round limit");
    bench->add_option("--time-limit", bench_time_limit, "Tabu search time limit, seconds");
    bench->add_option("--tenure", bench_opt.tenure, "Tabu tenure");
    bench->add_option("--out", bench_out, "CSV output path (default: stdout)");

    std::string oracle_instance;
    long long oracle_budget = 20'000'000;
    auto* oracle = app.add_subcommand("oracle", "Brute-force global optimum (budget-guarded)");
    oracle->add_option("--instance", oracle_instance, "Instance file")->required();
    oracle->add_option("--budget", oracle_budget, "Maximum lattice points to enumerate");

    std::string stats_instance, stats_solution;
    auto* stats = app.add_subcommand("stats", "Extreme-value breakdown of a solution");
    stats->add_option("--instance", stats_instance, "Instance file")->required();
    stats->add_option("--solution", stats_solution, "Solution file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            gen_cfg.constrained = !unconstrained;
            gen_cfg.tightness = tightness_from_letter(tightness[0]);
            gen_cfg.rhs_basis =
                rhs_basis == "max" ? RhsBasis::max_consumption : RhsBasis::coefficient_sum;
            return cmd_generate(gen_cfg, gen_out_dir);
        }
        if (solve->parsed()) {
            if (rounds >= 0) solve_opt.rounds = rounds;
            if (time_limit >= 0) solve_opt.time_limit = time_limit;
            if (solve_opt.algorithm == "tsos" && !solve_opt.rounds && !solve_opt.time_limit)
                solve_opt.rounds = 100;
            return cmd_solve(solve_opt, solve_out);
        }
        if (check->parsed()) return cmd_check(check_instance, check_solution);
        if (bench->parsed()) {
            if (bench_rounds >= 0) bench_opt.rounds = bench_rounds;
            if (bench_time_limit >= 0) bench_opt.time_limit = bench_time_limit;
            if (!bench_opt.rounds && !bench_opt.time_limit) bench_opt.rounds = 100;
            return cmd_bench(bench_instances, bench_runs, bench_opt, bench_out);
        }
        if (oracle->parsed()) return cmd_oracle(oracle_instance, oracle_budget);
        if (stats->parsed()) return cmd_stats(stats_instance, stats_solution);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
