#pragma once

#include "pcover/graph.hpp"

#include <string_view>

namespace pcover {

enum class Family { path, cycle, grid, binary_tree };

Family parse_family(std::string_view name);
std::string_view to_string(Family family);

/// path(n): n vertices in a line.
PlanarGraph path_graph(int n);
/// cycle(n): n >= 3 vertices.
PlanarGraph cycle_graph(int n);
/// grid(m): Z^2 restricted to [-m,m]^2 with 4-neighbor adjacency, n = (2m+1)^2.
/// Vertex (x,y) has index (y+m)(2m+1) + (x+m); rotation order is N, E, S, W.
PlanarGraph grid_graph(int m);
/// Complete binary tree of the given depth, 2^(depth+1) - 1 vertices.
PlanarGraph binary_tree_graph(int depth);

/// Throws Errc::size_too_small when the size parameter is below the family minimum.
PlanarGraph generate(Family family, int size);

/// Index of the grid point (x, y) in grid_graph(m).
constexpr Vertex grid_vertex(int m, int x, int y) { return (y + m) * (2 * m + 1) + (x + m); }

}  // namespace pcover
