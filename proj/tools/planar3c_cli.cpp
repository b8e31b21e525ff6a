#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "planar3c/bench.hpp"
#include "planar3c/generators.hpp"
#include "planar3c/graph_io.hpp"
#include "planar3c/ptas.hpp"

using namespace planar3c;

namespace {

int exit_code(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InfeasibleInput:
    case ErrorKind::NonPlanar:
    case ErrorKind::Disconnected:
        return 2;
    case ErrorKind::Format:
    case ErrorKind::SelfLoop:
    case ErrorKind::InvalidRotation:
    case ErrorKind::TooManyParallel:
        return 3;
    case ErrorKind::BudgetExceeded:
        return 4;
    default:
        return 1;
    }
}

std::vector<int> parse_sizes(const std::string& text) {
    std::vector<int> sizes;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            sizes.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw Error(ErrorKind::InvalidArgument, "bad size '" + item + "'");
        }
    }
    if (sizes.empty()) throw Error(ErrorKind::InvalidArgument, "--sizes is empty");
    return sizes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"planar3c: approximation schemes for minimum 3-edge/3-vertex-connected spanning subgraphs of planar graphs"};
    app.require_subcommand(1);

    std::string problem = "3ecss", input, output, solver = "auto", solution_path, family, dump, sizes_text;
    std::optional<double> epsilon;
    std::optional<int> force_k, depth;
    int jobs = 0, n = 0, repeat = 5;
    std::uint64_t seed = 0;

    auto* solve_cmd = app.add_subcommand("solve", "approximate a minimum solution");
    solve_cmd->add_option("--problem", problem)->required()->check(CLI::IsMember({"3ecss", "3vcss"}));
    solve_cmd->add_option("--epsilon", epsilon);
    solve_cmd->add_option("--force-k", force_k);
    solve_cmd->add_option("--input", input)->required();
    solve_cmd->add_option("--output", output)->required();
    solve_cmd->add_option("--solver", solver)->check(CLI::IsMember({"dp", "exact", "auto"}));
    solve_cmd->add_option("--jobs", jobs);

    auto* verify_cmd = app.add_subcommand("verify", "check a solution file");
    verify_cmd->add_option("--problem", problem)->required()->check(CLI::IsMember({"3ecss", "3vcss"}));
    verify_cmd->add_option("--input", input)->required();
    verify_cmd->add_option("--solution", solution_path)->required();

    auto* gen_cmd = app.add_subcommand("gen", "generate an instance");
    gen_cmd->add_option("--family", family)->required();
    gen_cmd->add_option("--n", n)->required();
    gen_cmd->add_option("--seed", seed)->required();
    gen_cmd->add_option("--depth", depth);
    gen_cmd->add_option("--output", output)->required();

    auto* slice_cmd = app.add_subcommand("slice", "dump levels, slices, slice tree and decompositions");
    slice_cmd->add_option("--input", input)->required();
    auto* slice_eps = slice_cmd->add_option("--epsilon", epsilon);
    auto* slice_k = slice_cmd->add_option("--force-k", force_k);
    slice_eps->excludes(slice_k);
    slice_cmd->add_option("--problem", problem)->check(CLI::IsMember({"3ecss", "3vcss"}));
    slice_cmd->add_option("--dump", dump)->required();

    auto* bench_cmd = app.add_subcommand("bench", "time the pipeline over growing sizes");
    bench_cmd->add_option("--family", family)->required();
    bench_cmd->add_option("--sizes", sizes_text)->required();
    bench_cmd->add_option("--problem", problem)->required()->check(CLI::IsMember({"3ecss", "3vcss"}));
    bench_cmd->add_option("--force-k", force_k)->required();
    bench_cmd->add_option("--repeat", repeat);
    bench_cmd->add_option("--jobs", jobs);

    auto* stats_cmd = app.add_subcommand("stats", "levels, double layers and residues");
    stats_cmd->add_option("--input", input)->required();
    stats_cmd->add_option("--force-k", force_k);
    stats_cmd->add_option("--problem", problem)->check(CLI::IsMember({"3ecss", "3vcss"}));

    CLI11_PARSE(app, argc, argv);

    try {
        const Mode mode = parse_mode(problem);
        if (*solve_cmd) {
            const EmbeddedMultigraph g = read_graph(input);
            SolveOptions options;
            options.solver.choice = parse_solver(solver);
            options.jobs = jobs;
            const Solution sol = solve(g, mode, plan_epsilon(mode, epsilon, force_k), options);
            write_json(output, solution_to_json(sol));
            std::cout << "size " << sol.size() << " k " << sol.k << " slices " << sol.slices.size() << " |R| "
                      << sol.residual_size << '\n';
        } else if (*verify_cmd) {
            const EmbeddedMultigraph g = read_graph(input);
            const StoredSolution stored = solution_from_json(read_json(solution_path));
            if (stored.mode != mode) throw Error(ErrorKind::Format, "solution was computed for the other problem");
            const VerifyReport report = verify(g, stored.edges, mode);
            std::cout << (report.feasible() ? "feasible" : "infeasible") << " size " << report.size << ": "
                      << report.message << '\n';
            return report.feasible() ? 0 : 2;
        } else if (*gen_cmd) {
            GeneratorSpec spec{family, n, seed, depth, true};
            write_graph(output, generate(spec));
        } else if (*slice_cmd) {
            if (!epsilon && !force_k) throw Error(ErrorKind::InvalidArgument, "give --epsilon or --force-k");
            const EmbeddedMultigraph g = read_graph(input);
            const EpsilonPlan eplan = plan_epsilon(mode, epsilon, force_k);
            const DerivedGraph sp = spanner(g, mode);
            const LevelAssignment levels = compute_levels(sp.graph);
            const ShiftPlan plan = plan_shift(levels, eplan.k);
            const std::vector<Slice> slices = build_slices(mode, sp.graph, levels, plan);
            std::filesystem::create_directories(dump);
            const std::filesystem::path dir(dump);
            write_json((dir / "plan.json").string(), plan_to_json(levels, plan));
            write_json((dir / "slice_tree.json").string(), slice_tree_to_json(build_slice_tree(slices, sp.graph)));
            for (std::size_t i = 0; i < slices.size(); ++i) {
                write_json((dir / ("slice_" + std::to_string(i) + ".json")).string(), slice_to_json(slices[i]));
                write_json((dir / ("bd_" + std::to_string(i) + ".json")).string(),
                           decomposition_to_json(decompose(slices[i].graph, slices[i].outer_node)));
            }
            std::cout << slices.size() << " slices written to " << dump << '\n';
        } else if (*bench_cmd) {
            SolveOptions options;
            options.jobs = jobs;
            const BenchReport report = run_bench(family, parse_sizes(sizes_text), mode, *force_k, repeat, options);
            std::printf("%10s %10s %10s %8s %12s\n", "n", "vertices", "edges", "slices", "median_s");
            for (const BenchRow& row : report.rows)
                std::printf("%10d %10d %10d %8d %12.6f\n", row.requested, row.vertices, row.edges, row.slices,
                            row.median_seconds);
            for (std::size_t i = 0; i < report.ratios.size(); ++i)
                std::printf("ratio %d->%d %.3f\n", report.rows[i].requested, report.rows[i + 1].requested,
                            report.ratios[i]);
            std::printf("median ratio %.3f\n", report.median_ratio);
        } else if (*stats_cmd) {
            const EmbeddedMultigraph g = read_graph(input);
            const DerivedGraph sp = spanner(g, mode);
            const LevelAssignment levels = compute_levels(sp.graph);
            const ShiftPlan plan = plan_shift(levels, force_k.value_or(2));
            std::cout << plan_to_json(levels, plan).dump(2) << '\n';
        }
    } catch (const Error& e) {
        std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
