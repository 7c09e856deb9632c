#include "pcover/generators.hpp"

#include "pcover/error.hpp"

#include <string>

namespace pcover {

Family parse_family(std::string_view name) {
    if (name == "path") return Family::path;
    if (name == "cycle") return Family::cycle;
    if (name == "grid") return Family::grid;
    if (name == "binary_tree" || name == "tree") return Family::binary_tree;
    throw Error(Errc::invalid_argument, "unknown family '" + std::string(name) + "'");
}

std::string_view to_string(Family family) {
    switch (family) {
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::grid: return "grid";
        case Family::binary_tree: return "binary_tree";
    }
    return "unknown";
}

namespace {

void require_size(bool ok, std::string_view family, int size) {
    if (!ok) {
        throw Error(Errc::size_too_small, std::string(family) + "(" + std::to_string(size) + ")");
    }
}

// Rotation equal to the sorted neighbor lists; valid for any graph whose
// vertices have degree <= 2 and for trees.
PlanarGraph with_sorted_rotation(Graph g) {
    Rotation rotation(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        auto nbrs = g.neighbors(static_cast<Vertex>(v));
        rotation[v].assign(nbrs.begin(), nbrs.end());
    }
    return PlanarGraph(std::move(g), std::move(rotation));
}

}  // namespace

PlanarGraph path_graph(int n) {
    require_size(n >= 1, "path", n);
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) {
        edges.push_back({i, i + 1});
    }
    return with_sorted_rotation(Graph(static_cast<std::size_t>(n), edges));
}

PlanarGraph cycle_graph(int n) {
    require_size(n >= 3, "cycle", n);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        edges.push_back({i, (i + 1) % n});
    }
    return with_sorted_rotation(Graph(static_cast<std::size_t>(n), edges));
}

PlanarGraph grid_graph(int m) {
    require_size(m >= 1, "grid", m);
    const int side = 2 * m + 1;
    std::vector<Edge> edges;
    for (int y = -m; y <= m; ++y) {
        for (int x = -m; x <= m; ++x) {
            if (x < m) edges.push_back({grid_vertex(m, x, y), grid_vertex(m, x + 1, y)});
            if (y < m) edges.push_back({grid_vertex(m, x, y), grid_vertex(m, x, y + 1)});
        }
    }
    Graph g(static_cast<std::size_t>(side * side), edges);

    Rotation rotation(g.vertex_count());
    std::vector<std::string> labels(g.vertex_count());
    for (int y = -m; y <= m; ++y) {
        for (int x = -m; x <= m; ++x) {
            auto& rot = rotation[static_cast<std::size_t>(grid_vertex(m, x, y))];
            if (y < m) rot.push_back(grid_vertex(m, x, y + 1));
            if (x < m) rot.push_back(grid_vertex(m, x + 1, y));
            if (y > -m) rot.push_back(grid_vertex(m, x, y - 1));
            if (x > -m) rot.push_back(grid_vertex(m, x - 1, y));
            labels[static_cast<std::size_t>(grid_vertex(m, x, y))] =
                "(" + std::to_string(x) + "," + std::to_string(y) + ")";
        }
    }
    return PlanarGraph(std::move(g), std::move(rotation), std::move(labels));
}

PlanarGraph binary_tree_graph(int depth) {
    require_size(depth >= 1, "binary_tree", depth);
    const int n = (1 << (depth + 1)) - 1;
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) {
        edges.push_back({(v - 1) / 2, v});
    }
    return with_sorted_rotation(Graph(static_cast<std::size_t>(n), edges));
}

PlanarGraph generate(Family family, int size) {
    switch (family) {
        case Family::path: return path_graph(size);
        case Family::cycle: return cycle_graph(size);
        case Family::grid: return grid_graph(size);
        case Family::binary_tree: return binary_tree_graph(size);
    }
    throw Error(Errc::invalid_argument, "unknown family");
}

}  // namespace pcover
