#include "planar3c/demands.hpp"

#include <vector>

namespace planar3c {

namespace {

class Router {
public:
    Router(const SimpleView& g, std::span<const Demand> demands, Mode mode)
        : g_(g), mode_(mode), adj_(g.vertex_count), edge_used_(g.edges.size(), 0),
          endpoint_(g.vertex_count, 0), vertex_used_(g.vertex_count, 0) {
        for (EdgeId e = 0; e < static_cast<EdgeId>(g.edges.size()); ++e) {
            adj_[g.edges[e].a].push_back(e);
            adj_[g.edges[e].b].push_back(e);
        }
        for (const Demand& d : demands) {
            for (int i = 0; i < d.b; ++i) paths_.push_back(d);
            endpoint_[d.x] = endpoint_[d.y] = 1;
        }
    }

    bool run() { return route(0); }

private:
    bool route(std::size_t index) {
        if (index == paths_.size()) return true;
        const Demand& d = paths_[index];
        if (d.x == d.y) return route(index + 1);
        return extend(index, d.x, d.y);
    }

    // Depth-first enumeration of simple paths from v to target.
    bool extend(std::size_t index, VertexId v, VertexId target) {
        for (EdgeId e : adj_[v]) {
            if (edge_used_[e]) continue;
            const VertexId w = g_.edges[e].a == v ? g_.edges[e].b : g_.edges[e].a;
            if (w == target) {
                edge_used_[e] = 1;
                if (route(index + 1)) return true;
                edge_used_[e] = 0;
                continue;
            }
            if (w == paths_[index].x) continue;
            const int owner = vertex_used_[w];
            const int mine = static_cast<int>(index) + 1;
            if (mode_ == Mode::ECSS ? owner == mine : (owner != 0 || endpoint_[w])) continue;
            edge_used_[e] = 1;
            vertex_used_[w] = mine;
            if (extend(index, w, target)) return true;
            edge_used_[e] = 0;
            vertex_used_[w] = owner;
        }
        return false;
    }

    const SimpleView& g_;
    Mode mode_;
    std::vector<std::vector<EdgeId>> adj_;
    std::vector<Demand> paths_;
    std::vector<char> edge_used_, endpoint_;
    std::vector<int> vertex_used_;  // owning path index + 1
};

}  // namespace

bool solve_demands(const SimpleView& g, std::span<const Demand> demands, Mode mode) {
    SimpleView view = g;
    if (mode == Mode::VCSS) {
        // Parallel copies add nothing to vertex-disjoint routing.
        std::vector<Edge> simple;
        for (const Edge& e : g.edges) {
            bool dup = false;
            for (const Edge& f : simple)
                if ((f.a == e.a && f.b == e.b) || (f.a == e.b && f.b == e.a)) dup = true;
            if (!dup) simple.push_back(e);
        }
        view.edges = std::move(simple);
    }
    return Router(view, demands, mode).run();
}

}  // namespace planar3c
