#include "pcover/graph.hpp"

#include "pcover/error.hpp"

#include <algorithm>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>
#include <numeric>
#include <queue>

namespace pcover {

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
    if (n == 0) {
        throw Error(Errc::invalid_argument, "graph needs at least one vertex");
    }
    edges_.reserve(edges.size());
    for (const Edge& e : edges) {
        if (e.u < 0 || e.v < 0 || static_cast<std::size_t>(e.u) >= n || static_cast<std::size_t>(e.v) >= n) {
            throw Error(Errc::invalid_argument,
                        "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") out of range");
        }
        if (e.u == e.v) {
            throw Error(Errc::multi_edge_or_loop, "loop at vertex " + std::to_string(e.u));
        }
        edges_.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
        throw Error(Errc::multi_edge_or_loop,
                    "repeated edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ")");
    }
    for (const Edge& e : edges_) {
        adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
        adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& nbrs : adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
        max_degree_ = std::max(max_degree_, nbrs.size());
    }

    std::vector<char> seen(n, 0);
    std::queue<Vertex> frontier;
    frontier.push(0);
    seen[0] = 1;
    std::size_t reached = 1;
    while (!frontier.empty()) {
        Vertex v = frontier.front();
        frontier.pop();
        for (Vertex w : neighbors(v)) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                frontier.push(w);
            }
        }
    }
    if (reached != n) {
        throw Error(Errc::disconnected,
                    std::to_string(n - reached) + " of " + std::to_string(n) + " vertices unreachable from 0");
    }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    auto nbrs = neighbors(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int Graph::neighbor_index(Vertex v, Vertex w) const {
    auto nbrs = neighbors(v);
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(), w);
    if (it == nbrs.end() || *it != w) {
        return -1;
    }
    return static_cast<int>(it - nbrs.begin());
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
    std::vector<Edge> extended = edges_;
    extended.push_back({u, v});
    return Graph(vertex_count(), extended);
}

DegreeStats degrees(const Graph& g) {
    DegreeStats stats;
    stats.max_degree = g.max_degree();
    stats.average_degree = 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.vertex_count());
    return stats;
}

PlanarGraph::PlanarGraph(Graph g, Rotation rotation, std::vector<std::string> labels)
    : Graph(std::move(g)), rotation_(std::move(rotation)), labels_(std::move(labels)) {
    const std::size_t n = vertex_count();
    if (rotation_.size() != n) {
        throw Error(Errc::invalid_argument, "rotation system has " + std::to_string(rotation_.size()) +
                                                " lists for " + std::to_string(n) + " vertices");
    }
    if (!labels_.empty() && labels_.size() != n) {
        throw Error(Errc::invalid_argument, "label count does not match vertex count");
    }
    rotation_position_.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
        const auto& rot = rotation_[v];
        auto& pos = rotation_position_[v];
        pos.assign(degree(static_cast<Vertex>(v)), -1);
        if (rot.size() != pos.size()) {
            throw Error(Errc::invalid_argument,
                        "rotation of vertex " + std::to_string(v) + " is not a permutation of its neighbors");
        }
        for (std::size_t i = 0; i < rot.size(); ++i) {
            int k = neighbor_index(static_cast<Vertex>(v), rot[i]);
            if (k < 0 || pos[static_cast<std::size_t>(k)] != -1) {
                throw Error(Errc::invalid_argument,
                            "rotation of vertex " + std::to_string(v) + " is not a permutation of its neighbors");
            }
            pos[static_cast<std::size_t>(k)] = static_cast<int>(i);
        }
    }
    trace_faces();
    const long euler = static_cast<long>(n) - static_cast<long>(edge_count()) + static_cast<long>(face_count());
    if (euler != 2) {
        throw Error(Errc::non_planar, "rotation system gives V - E + F = " + std::to_string(euler));
    }
}

std::size_t PlanarGraph::face_count() const {
    // A lone vertex has no darts but one face.
    return edge_count() == 0 ? 1 : faces_.size();
}

Vertex PlanarGraph::face_successor(Vertex u, Vertex v) const {
    const auto& rot = rotation_[static_cast<std::size_t>(v)];
    const int k = neighbor_index(v, u);
    const int pos = rotation_position_[static_cast<std::size_t>(v)][static_cast<std::size_t>(k)];
    const int deg = static_cast<int>(rot.size());
    return rot[static_cast<std::size_t>((pos + deg - 1) % deg)];
}

void PlanarGraph::trace_faces() {
    const std::size_t n = vertex_count();
    // Dart (v -> k-th sorted neighbor of v) has id offset[v] + k.
    std::vector<std::size_t> offset(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) {
        offset[v + 1] = offset[v] + degree(static_cast<Vertex>(v));
    }
    std::vector<char> used(offset[n], 0);
    faces_.clear();
    for (std::size_t v = 0; v < n; ++v) {
        for (Vertex w : neighbors(static_cast<Vertex>(v))) {
            Vertex a = static_cast<Vertex>(v);
            Vertex b = w;
            std::size_t dart = offset[v] + static_cast<std::size_t>(neighbor_index(a, b));
            if (used[dart]) {
                continue;
            }
            std::vector<Vertex> corners;
            while (!used[dart]) {
                used[dart] = 1;
                corners.push_back(a);
                Vertex c = face_successor(a, b);
                a = b;
                b = c;
                dart = offset[static_cast<std::size_t>(a)] + static_cast<std::size_t>(neighbor_index(a, b));
            }
            faces_.push_back(std::move(corners));
        }
    }
}

namespace {

Rotation planar_embedding(const Graph& g) {
    using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                             boost::property<boost::vertex_index_t, int>,
                                             boost::property<boost::edge_index_t, int>>;
    using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

    BoostGraph bg(g.vertex_count());
    for (const Edge& e : g.edges()) {
        boost::add_edge(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v), bg);
    }
    auto edge_index = boost::get(boost::edge_index, bg);
    int next_index = 0;
    boost::graph_traits<BoostGraph>::edge_iterator ei, ei_end;
    for (boost::tie(ei, ei_end) = boost::edges(bg); ei != ei_end; ++ei) {
        boost::put(edge_index, *ei, next_index++);
    }

    std::vector<std::vector<BoostEdge>> embedding(g.vertex_count());
    const bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding = &embedding[0]);
    if (!planar) {
        throw Error(Errc::non_planar, "graph admits no planar embedding");
    }

    Rotation rotation(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        for (const BoostEdge& e : embedding[v]) {
            auto s = boost::source(e, bg);
            auto t = boost::target(e, bg);
            rotation[v].push_back(static_cast<Vertex>(s == v ? t : s));
        }
    }
    return rotation;
}

}  // namespace

PlanarGraph build_graph(std::size_t n, std::span<const Edge> edges, std::optional<Rotation> rotation) {
    Graph g(n, edges);
    if (!rotation) {
        rotation = planar_embedding(g);
    }
    return PlanarGraph(std::move(g), std::move(*rotation));
}

}  // namespace pcover
