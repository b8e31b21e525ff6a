#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace planar3c {

using VertexId = int;
using EdgeId = int;
using FaceId = int;
/// A dart is an oriented edge: dart 2e runs a->b, dart 2e+1 runs b->a.
using Dart = int;

enum class ErrorKind {
    NonPlanar,
    SelfLoop,
    TooManyParallel,
    InvalidRotation,
    Disconnected,
    InfeasibleInput,
    InfeasibleSlice,
    BudgetExceeded,
    MalformedSliceSet,
    CorruptDecomposition,
    InvalidSpec,
    Format,
    InvalidArgument,
};

const char* to_string(ErrorKind kind);

/// Which connectivity problem is being solved.
enum class Mode { ECSS, VCSS };

/// "3ecss" / "3vcss".
const char* to_string(Mode mode);
/// Throws InvalidArgument on anything else.
Mode parse_mode(const std::string& text);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

struct Edge {
    VertexId a = 0;
    VertexId b = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
};

inline constexpr EdgeId dart_edge(Dart d) { return d >> 1; }
inline constexpr Dart reverse_dart(Dart d) { return d ^ 1; }

struct BuildOptions {
    /// Accept more than three parallel copies of an edge (callers then cap).
    bool allow_excess_parallel = false;
};

/// Planar multigraph with a fixed combinatorial embedding (rotation system).
/// Immutable after construction.
class EmbeddedMultigraph {
public:
    EmbeddedMultigraph() = default;

    /// Builds an embedded graph. With no rotation a planar embedding is
    /// computed; rotation[v] lists the edges at v in clockwise order.
    static EmbeddedMultigraph build(int vertex_count, std::vector<Edge> edges,
                                    std::optional<std::vector<std::vector<EdgeId>>> rotation = {},
                                    std::optional<FaceId> outer_face = {},
                                    BuildOptions options = {});

    int vertex_count() const { return static_cast<int>(rotation_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Edge& edge(EdgeId e) const { return edges_[e]; }
    std::span<const Edge> edges() const { return edges_; }

    VertexId tail(Dart d) const { return (d & 1) ? edges_[d >> 1].b : edges_[d >> 1].a; }
    VertexId head(Dart d) const { return (d & 1) ? edges_[d >> 1].a : edges_[d >> 1].b; }
    VertexId other_end(EdgeId e, VertexId v) const {
        return edges_[e].a == v ? edges_[e].b : edges_[e].a;
    }

    /// Darts leaving v, clockwise.
    std::span<const Dart> rotation(VertexId v) const { return rotation_[v]; }
    int degree(VertexId v) const { return static_cast<int>(rotation_[v].size()); }
    /// Successor of d in the rotation around tail(d).
    Dart rotation_next(Dart d) const;
    /// Next dart along the face to the left of d.
    Dart face_next(Dart d) const { return rotation_next(reverse_dart(d)); }

    int face_count() const { return static_cast<int>(faces_.size()); }
    FaceId face_of(Dart d) const { return face_of_dart_[d]; }
    std::span<const Dart> face(FaceId f) const { return faces_[f]; }
    FaceId outer_face() const { return outer_face_; }

    /// Rotation as edge lists, the serialized form.
    std::vector<std::vector<EdgeId>> rotation_edges() const;

    EmbeddedMultigraph with_outer_face(FaceId f) const;

    int component_count() const;

private:
    void trace_faces();
    void validate_embedding() const;

    std::vector<Edge> edges_;
    std::vector<std::vector<Dart>> rotation_;
    std::vector<int> position_;  // index of dart within its tail's rotation
    std::vector<std::vector<Dart>> faces_;
    std::vector<FaceId> face_of_dart_;
    FaceId outer_face_ = -1;
};

/// The edges on the walk of the designated outer face, sorted.
std::vector<EdgeId> outer_boundary(const EmbeddedMultigraph& g);

/// Result of a subgraph-producing operation: the new graph plus, per new
/// edge, the edge of the input it came from.
struct DerivedGraph {
    EmbeddedMultigraph graph;
    std::vector<EdgeId> edge_origin;
};

/// Keeps at most `cap` copies between every vertex pair (lowest edge ids win).
DerivedGraph cap_parallel(const EmbeddedMultigraph& g, int cap);

struct VertexKind {
    enum class Tag { Original, InnerNode, OuterNode };
    Tag tag = Tag::Original;
    int id = 0;  // original vertex id or component id
    friend bool operator==(const VertexKind&, const VertexKind&) = default;
};

struct Contraction {
    EmbeddedMultigraph graph;
    std::vector<EdgeId> edge_origin;
    /// Old vertex -> new vertex.
    std::vector<VertexId> vertex_map;
    /// Per new vertex: Original(old id) or InnerNode(component index).
    std::vector<VertexKind> kinds;
    int component_count = 0;
};

/// Contracts every connected component of g - keep into a single node on the
/// rotation system, then drops self-loops and caps parallel edges.
/// Kept vertices are renumbered first in increasing order, then the nodes.
Contraction contract_components(const EmbeddedMultigraph& g, std::span<const VertexId> keep,
                                int parallel_cap = 3);

/// Subgraph on the same vertex set restricted to the given edges; the
/// inherited rotation is kept.
DerivedGraph edge_subgraph(const EmbeddedMultigraph& g, std::span<const EdgeId> edges);

}  // namespace planar3c
