#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pcover {

/// Vertices are dense indices 0..n-1.
using Vertex = int;

struct Edge {
    Vertex u;
    Vertex v;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

using Rotation = std::vector<std::vector<Vertex>>;

// Simple connected undirected graph. Neighbor lists are sorted ascending and
// edges are stored once with u < v, in lexicographic order.
class Graph {
public:
    Graph() = default;

    /// Validates simplicity and connectivity.
    /// Throws Errc::multi_edge_or_loop, Errc::disconnected, Errc::invalid_argument.
    Graph(std::size_t n, std::span<const Edge> edges);

    std::size_t vertex_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    std::size_t degree(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)].size(); }
    std::size_t max_degree() const { return max_degree_; }
    bool adjacent(Vertex u, Vertex v) const;

    /// Position of w inside the sorted neighbor list of v, or -1.
    int neighbor_index(Vertex v, Vertex w) const;

    /// Copy of this graph with one extra edge. Throws if it already exists.
    Graph with_edge(Vertex u, Vertex v) const;

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<Edge> edges_;
    std::size_t max_degree_ = 0;
};

struct DegreeStats {
    std::size_t max_degree = 0;
    double average_degree = 0.0;
};

/// average_degree = 2|E|/n.
DegreeStats degrees(const Graph& g);

// A graph together with a rotation system: rotation[v] is the cyclic order of
// the neighbors of v. Faces are traced with next(u->v) = v->w where w is the
// neighbor preceding u in rotation[v].
class PlanarGraph : public Graph {
public:
    PlanarGraph() = default;

    /// Throws Errc::non_planar when the rotation system fails Euler's formula,
    /// Errc::invalid_argument when a rotation list is not a permutation of
    /// the neighbor list.
    PlanarGraph(Graph g, Rotation rotation, std::vector<std::string> labels = {});

    const Rotation& rotation() const { return rotation_; }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Boundary walks, each as the sequence of corner vertices in traversal
    /// order. A vertex may repeat on a face whose boundary is not a cycle.
    const std::vector<std::vector<Vertex>>& faces() const { return faces_; }
    std::size_t face_count() const;

    /// Vertex following u when walking the face to the left of u->v.
    Vertex face_successor(Vertex u, Vertex v) const;

private:
    void trace_faces();

    Rotation rotation_;
    std::vector<std::string> labels_;
    // rotation_position_[v][k]: index in rotation_[v] of the k-th sorted neighbor
    std::vector<std::vector<int>> rotation_position_;
    std::vector<std::vector<Vertex>> faces_;
};

/// Builds an embedded graph from an edge list. Without a rotation a planar
/// embedding is computed (Boyer-Myrvold); a non-planar input raises
/// Errc::non_planar.
PlanarGraph build_graph(std::size_t n, std::span<const Edge> edges,
                        std::optional<Rotation> rotation = std::nullopt);

}  // namespace pcover
