#include "planar3c/ptas.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <set>

#include <omp.h>

namespace planar3c {

EpsilonPlan plan_epsilon(Mode mode, std::optional<double> epsilon, std::optional<int> force_k) {
    EpsilonPlan plan;
    if (force_k) {
        if (*force_k < 2) throw Error(ErrorKind::InvalidArgument, "--force-k must be at least 2");
        plan.k = *force_k;
        plan.forced = true;
        plan.epsilon = epsilon.value_or((mode == Mode::ECSS ? 36.0 : 12.0) / plan.k);
        return plan;
    }
    if (!epsilon) throw Error(ErrorKind::InvalidArgument, "epsilon or force-k is required");
    if (!(*epsilon > 0.0 && *epsilon < 1.0))
        throw Error(ErrorKind::InvalidArgument, "epsilon must lie strictly between 0 and 1");
    plan.epsilon = *epsilon;
    plan.k = static_cast<int>(std::ceil((mode == Mode::ECSS ? 36.0 : 12.0) / *epsilon - 1e-9));
    return plan;
}

DerivedGraph spanner(const EmbeddedMultigraph& g, Mode mode) {
    return cap_parallel(g, mode == Mode::ECSS ? 3 : 1);
}

std::vector<SliceSolution> solve_slices(Mode mode, const std::vector<Slice>& slices, const SolveOptions& options) {
    const int count = static_cast<int>(slices.size());
    std::vector<SliceSolution> out(count);
    if (!options.parallel) {
        for (int i = 0; i < count; ++i) out[i] = solve_slice(mode, slices[i], options.solver);
        return out;
    }
    const int threads = options.jobs > 0 ? options.jobs : omp_get_max_threads();
    std::vector<std::exception_ptr> errors(count);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (int i = 0; i < count; ++i) {
        try {
            out[i] = solve_slice(mode, slices[i], options.solver);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

Solution solve(const EmbeddedMultigraph& g, Mode mode, const EpsilonPlan& plan, const SolveOptions& options) {
    const DerivedGraph sp = spanner(g, mode);
    const SimpleView view = SimpleView::of(sp.graph);
    if (!is_feasible(mode, view))
        throw Error(ErrorKind::InfeasibleInput, mode == Mode::ECSS ? "input graph is not 3-edge-connected"
                                                                    : "input graph is not triconnected");

    const LevelAssignment levels = compute_levels(sp.graph);
    const ShiftPlan shift = plan_shift(levels, plan.k);
    const std::vector<Slice> slices = build_slices(mode, sp.graph, levels, shift);
    const std::vector<SliceSolution> parts = solve_slices(mode, slices, options);

    Solution sol;
    sol.mode = mode;
    sol.epsilon = plan.epsilon;
    sol.k = plan.k;
    sol.t = shift.t;
    sol.max_level = levels.max_level;
    sol.residual_size = static_cast<long>(shift.residual.size());
    sol.spanner_edges = sp.graph.edge_count();

    std::vector<char> chosen(sp.graph.edge_count(), 0);
    for (EdgeId e : shift.residual) chosen[e] = 1;
    for (std::size_t i = 0; i < slices.size(); ++i) {
        const Slice& s = slices[i];
        for (EdgeId e : parts[i].edges)
            if (s.provenance[e].origin) chosen[*s.provenance[e].origin] = 1;
        sol.slices.push_back({s.window_index, s.circuit_id, s.graph.vertex_count(), s.graph.edge_count(),
                              parts[i].weight, parts[i].width, parts[i].path});
    }
    for (EdgeId e = 0; e < sp.graph.edge_count(); ++e)
        if (chosen[e]) sol.edges.push_back(sp.edge_origin[e]);
    std::sort(sol.edges.begin(), sol.edges.end());

    const VerifyReport report = verify(g, sol.edges, mode);
    if (!report.feasible())
        throw Error(ErrorKind::InfeasibleSlice, "combined solution failed verification: " + report.message);
    return sol;
}

VerifyReport verify(const EmbeddedMultigraph& g, const std::vector<EdgeId>& edges, Mode mode,
                    std::optional<long> optimum) {
    VerifyReport r;
    std::set<EdgeId> unique;
    for (EdgeId e : edges) {
        if (e < 0 || e >= g.edge_count()) {
            r.edges_valid = false;
            r.message = "edge index " + std::to_string(e) + " out of range";
            return r;
        }
        if (!unique.insert(e).second) {
            r.edges_valid = false;
            r.message = "edge index " + std::to_string(e) + " repeated";
            return r;
        }
    }
    r.size = static_cast<long>(edges.size());
    const SimpleView view = SimpleView::of(g, edges);
    std::vector<char> touched(g.vertex_count(), 0);
    for (const Edge& e : view.edges) touched[e.a] = touched[e.b] = 1;
    r.spanning = g.vertex_count() <= 1 || std::all_of(touched.begin(), touched.end(), [](char c) { return c != 0; });
    r.connectivity = is_feasible(mode, view);
    if (optimum && *optimum > 0) r.ratio = static_cast<double>(r.size) / static_cast<double>(*optimum);
    if (!r.spanning) r.message = "solution does not span every vertex";
    else if (!r.connectivity)
        r.message = mode == Mode::ECSS ? "solution is not 3-edge-connected" : "solution is not triconnected";
    else r.message = "ok";
    return r;
}

Accounting accounting(const Solution& solution, std::optional<long> optimum) {
    Accounting a;
    a.residual = solution.residual_size;
    a.spanner_edges = solution.spanner_edges;
    a.k = solution.k;
    a.residual_bound = static_cast<long>(a.k) * a.residual <= 2 * a.spanner_edges;
    for (const SliceReport& s : solution.slices) a.slice_weight_sum += s.weight;
    a.size = solution.size();
    a.weight_within_size = a.slice_weight_sum <= a.size;
    if (optimum) {
        const long c = solution.mode == Mode::ECSS ? 36 : 12;
        // |S| <= (1 + c/k) * opt  <=>  k * |S| <= (k + c) * opt
        a.ratio_bound = static_cast<long>(a.k) * a.size <= (a.k + c) * *optimum;
    }
    return a;
}

}  // namespace planar3c
