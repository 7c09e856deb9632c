#pragma once

#include "pcover/graph.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace pcover {

using Triangle = std::array<Vertex, 3>;

// An embedded graph all of whose faces are triangles. Vertices
// 0..original_vertex_count-1 are those of the graph that was completed;
// higher indices are Steiner vertices.
struct Triangulation {
    PlanarGraph graph;
    /// Oriented faces in boundary-walk order.
    std::vector<Triangle> faces;
    std::size_t original_vertex_count = 0;
    std::size_t original_max_degree = 0;
    std::size_t added_edges = 0;
    std::size_t added_vertices = 0;
    std::size_t max_degree = 0;
    /// max_degree <= 3 * original_max_degree.
    bool within_degree_bound = true;
    /// First face incident to a minimum-eccentricity vertex; the default outer
    /// face for packings.
    Triangle suggested_outer_face{};
};

/// Wraps an already triangulated embedded graph. Throws
/// Errc::not_a_triangulation if some face walk does not have exactly three
/// distinct corners.
Triangulation as_triangulation(PlanarGraph g);

/// Completes g to a triangulation containing it as a subgraph. Each
/// non-triangular face gets a zig-zag of diagonals; faces whose boundary is not
/// a simple cycle, or whose diagonals would duplicate an existing edge, are
/// first lined with a ring of Steiner vertices.
/// Throws Errc::too_small for n < 3.
Triangulation triangulate(const PlanarGraph& g);

}  // namespace pcover
