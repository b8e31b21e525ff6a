#include "planar3c/exact_solver.hpp"

#include <algorithm>
#include <functional>

namespace planar3c {

namespace {

// The present edges as a view, and the view index of `focus` (or -1).
SimpleView view_of(const EmbeddedMultigraph& g, const std::vector<char>& present, EdgeId focus, EdgeId* focus_index) {
    SimpleView view;
    view.vertex_count = g.vertex_count();
    *focus_index = -1;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!present[e]) continue;
        if (e == focus) *focus_index = static_cast<EdgeId>(view.edges.size());
        view.edges.push_back(g.edge(e));
    }
    return view;
}

bool removable(Mode mode, const EmbeddedMultigraph& g, const std::vector<char>& present, EdgeId e) {
    EdgeId index = -1;
    const SimpleView view = view_of(g, present, e, &index);
    return mode == Mode::ECSS ? still_3_edge_connected_without(view, index)
                              : still_triconnected_without(view, index);
}

void check_input(Mode mode, const EmbeddedMultigraph& g, std::span<const int> weight) {
    if (static_cast<int>(weight.size()) != g.edge_count())
        throw Error(ErrorKind::InvalidArgument, "weight vector does not match the edges");
    if (!is_feasible(mode, SimpleView::of(g)))
        throw Error(ErrorKind::InfeasibleSlice,
                    mode == Mode::ECSS ? "graph is not 3-edge-connected" : "graph is not triconnected");
}

SubgraphResult collect(const EmbeddedMultigraph& g, std::span<const int> weight, const std::vector<char>& present) {
    SubgraphResult r;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (present[e]) {
            r.edges.push_back(e);
            r.weight += weight[e];
        }
    return r;
}

}  // namespace

bool is_feasible(Mode mode, const SimpleView& g) {
    return mode == Mode::ECSS ? is_k_edge_connected(g, 3) : is_k_vertex_connected(g, 3);
}

SubgraphResult solve_exact(Mode mode, const EmbeddedMultigraph& g, std::span<const int> weight, int budget) {
    std::vector<EdgeId> candidates;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (weight[e] > 0) candidates.push_back(e);
    if (static_cast<int>(candidates.size()) > budget)
        throw Error(ErrorKind::BudgetExceeded, std::to_string(candidates.size()) +
                                                   " positive-weight edges exceed the exact budget of " +
                                                   std::to_string(budget));
    check_input(mode, g, weight);

    std::vector<char> present(g.edge_count(), 1), best = present;
    long best_weight = 0;
    for (EdgeId e : candidates) best_weight += weight[e];

    // Invariant: the present edges (decided or not) form a feasible graph.
    std::function<void(std::size_t, long)> search = [&](std::size_t i, long forced) {
        if (forced >= best_weight) return;
        if (i == candidates.size()) {
            best_weight = forced;
            best = present;
            return;
        }
        const EdgeId e = candidates[i];
        if (removable(mode, g, present, e)) {
            present[e] = 0;
            search(i + 1, forced);
            present[e] = 1;
        }
        search(i + 1, forced + weight[e]);
    };
    search(0, 0);
    return collect(g, weight, best);
}

SubgraphResult solve_greedy(Mode mode, const EmbeddedMultigraph& g, std::span<const int> weight) {
    check_input(mode, g, weight);
    std::vector<EdgeId> order;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (weight[e] > 0) order.push_back(e);
    std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
        return weight[a] != weight[b] ? weight[a] > weight[b] : a > b;
    });
    std::vector<char> present(g.edge_count(), 1);
    for (EdgeId e : order)
        if (removable(mode, g, present, e)) present[e] = 0;
    return collect(g, weight, present);
}

}  // namespace planar3c
