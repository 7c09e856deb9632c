#include "pcover/error.hpp"
#include "pcover/generators.hpp"
#include "pcover/packing.hpp"
#include "pcover/triangulation.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace pcover;

namespace {

const std::vector<Edge> k4_edges{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

// Descartes: three unit circles, inner Soddy circle curvature 3 + 2 sqrt 3.
const double k4_inner = 1.0 / (3.0 + 2.0 * std::sqrt(3.0));

Triangulation k4() { return as_triangulation(build_graph(4, k4_edges)); }

Triangulation octahedron() {
    // Triangle 0,1,2 with the opposite triangle 3,4,5; i joined to i+3's neighbors.
    const std::vector<Edge> e{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5},
                              {0, 4}, {0, 5}, {1, 3}, {1, 5}, {2, 3}, {2, 4}};
    return as_triangulation(build_graph(6, e));
}

Triangulation bipyramid() {
    const std::vector<Edge> e{{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}, {2, 3}, {0, 4}, {1, 4}, {2, 4}};
    return as_triangulation(build_graph(5, e));
}

}  // namespace

TEST_CASE("K4 inner radius matches the Descartes circle") {
    const Triangulation t = k4();
    CHECK(k4_inner == doctest::Approx(0.1547005).epsilon(1e-6));
    for (const Triangle& face : t.faces) {
        const CirclePacking p = compute_packing(t, face);
        int inner = 0 + 1 + 2 + 3 - face[0] - face[1] - face[2];
        CHECK(p.radii[inner] == doctest::Approx(k4_inner).epsilon(1e-9));
        for (Vertex v : face) {
            CHECK(p.radii[v] == doctest::Approx(1.0));
        }
        CHECK(p.residual < 1e-8);
        const auto d = diagnostics(p, t);
        CHECK(d.ring_ratio == doctest::Approx(1.0 / k4_inner).epsilon(1e-8));
        CHECK(d.ring_ratio == doctest::Approx(6.4641).epsilon(1e-4));
        CHECK_FALSE(d.min_nonneighbor_gap_ratio.has_value());
    }
}

TEST_CASE("outer face is matched as a vertex set") {
    const Triangulation t = k4();
    const CirclePacking a = compute_packing(t, {0, 1, 2});
    const CirclePacking b = compute_packing(t, {2, 0, 1});
    CHECK(a.radii == b.radii);
}

TEST_CASE("packing errors") {
    const Triangulation t = octahedron();
    try {
        compute_packing(t, {0, 1, 3});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::not_a_face);
    }
    PackingOptions tight;
    tight.max_sweeps = 2;
    tight.tol = 1e-14;
    try {
        compute_packing(triangulate(grid_graph(3)), triangulate(grid_graph(3)).suggested_outer_face, tight);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::no_convergence);
        CHECK(is_numerical(e.code()));
    }
}

TEST_CASE("octahedron packs with equal interior radii") {
    const Triangulation t = octahedron();
    const CirclePacking p = compute_packing(t, {0, 1, 2});
    CHECK(p.radii[3] == doctest::Approx(p.radii[4]).epsilon(1e-9));
    CHECK(p.radii[4] == doctest::Approx(p.radii[5]).epsilon(1e-9));
    // Edges inside one symmetry orbit have ratio 1.
    CHECK(p.radii[3] / p.radii[4] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(p.residual < 1e-8);
}

TEST_CASE("double pyramid: the interior apex radius does not depend on which apex is interior") {
    // With apex 3 on the outer face its radius is 1 while apex 4 is interior;
    // swapping the roles must give the same interior radius.
    const Triangulation t = bipyramid();
    const CirclePacking a = compute_packing(t, {0, 1, 3});
    const CirclePacking b = compute_packing(t, {0, 1, 4});
    CHECK(a.radii[4] == doctest::Approx(b.radii[3]).epsilon(1e-9));
    CHECK(a.radii[2] == doctest::Approx(b.radii[2]).epsilon(1e-9));
}

TEST_CASE("tangency and disjointness on triangulated grids") {
    for (int m = 1; m <= 5; ++m) {
        CAPTURE(m);
        const Triangulation t = triangulate(grid_graph(m));
        const CirclePacking p = compute_packing(t, t.suggested_outer_face);
        const PackingCheck c = check_packing(p, t.graph);
        CHECK(c.max_tangency_residual < 1e-8);
        CHECK(c.max_overlap < 1e-8);
        CHECK(p.residual == doctest::Approx(c.max_tangency_residual).epsilon(1e-6));
        for (Vertex v : p.outer_face) {
            CHECK(p.radii[v] == doctest::Approx(1.0));
        }
        const auto d = diagnostics(p, t);
        CHECK(d.ring_ratio >= 1.0);
        REQUIRE(d.min_nonneighbor_gap_ratio.has_value());
        CHECK(*d.min_nonneighbor_gap_ratio > 0.0);
    }
}

TEST_CASE("every face of triangulated grid(2) works as outer face") {
    const Triangulation t = triangulate(grid_graph(2));
    for (const Triangle& face : t.faces) {
        const CirclePacking p = compute_packing(t, face);
        CHECK(check_packing(p, t.graph).max_tangency_residual < 1e-8);
    }
}

TEST_CASE("ring ratio stays bounded as the grid grows") {
    std::vector<double> ratios;
    for (int m = 2; m <= 4; ++m) {
        const Triangulation t = triangulate(grid_graph(m));
        ratios.push_back(diagnostics(compute_packing(t, t.suggested_outer_face), t).ring_ratio);
    }
    const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
    CHECK(*hi / *lo < 2.0);
}

TEST_CASE("packing is deterministic") {
    const Triangulation t = triangulate(grid_graph(3));
    const CirclePacking a = compute_packing(t, t.suggested_outer_face);
    const CirclePacking b = compute_packing(t, t.suggested_outer_face);
    CHECK(a.radii == b.radii);
    CHECK(a.centers == b.centers);
    CHECK(a.iterations == b.iterations);
}

TEST_CASE("tangent angle") {
    // Three equal disks: each angle is pi/3.
    CHECK(tangent_angle(1.0, 1.0, 1.0) == doctest::Approx(std::numbers::pi / 3));
    // A tiny center disk between two huge ones sees nearly pi.
    CHECK(tangent_angle(1e-6, 1.0, 1.0) == doctest::Approx(std::numbers::pi).epsilon(1e-2));
}
