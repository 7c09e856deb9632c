#include "oracles.hpp"

#include "pcover/electrical.hpp"
#include "pcover/error.hpp"
#include "pcover/generators.hpp"
#include "pcover/triangulation.hpp"

#include <doctest.h>

#include <cmath>

using namespace pcover;

namespace {

const std::vector<Edge> k4_edges{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

}  // namespace

TEST_CASE("series and parallel resistances") {
    CHECK(ElectricalSystem(path_graph(3)).effective_resistance(0, 2) == doctest::Approx(2.0));
    const ElectricalSystem c4(cycle_graph(4));
    CHECK(c4.effective_resistance(0, 2) == doctest::Approx(1.0));
    CHECK(c4.effective_resistance(0, 1) == doctest::Approx(0.75));
    const Graph k4(4, k4_edges);
    const ElectricalSystem sys(k4);
    for (const Edge& e : k4.edges()) {
        CHECK(sys.effective_resistance(e.u, e.v) == doctest::Approx(0.5));
    }
}

TEST_CASE("resistance oracle: K4 pseudoinverse") {
    const auto r = oracle::resistances(Graph(4, k4_edges));
    CHECK(r[0][3] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("resistance errors") {
    const ElectricalSystem sys(path_graph(3));
    try {
        sys.effective_resistance(1, 1);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::same_vertex);
    }
    CHECK_THROWS_AS(sys.effective_resistance(0, 9), Error);
}

TEST_CASE("potentials carry a unit current") {
    const Graph g = grid_graph(2);
    const ElectricalSystem sys(g);
    const auto f = sys.unit_current_potentials(3, 17);
    CHECK(f[17] == 0.0);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        double net = 0.0;
        for (Vertex w : g.neighbors(static_cast<Vertex>(v))) {
            net += f[v] - f[static_cast<std::size_t>(w)];
        }
        const double expected = v == 3 ? 1.0 : v == 17 ? -1.0 : 0.0;
        CHECK(net == doctest::Approx(expected).epsilon(1e-9));
    }
}

TEST_CASE("dense and iterative solvers agree") {
    const Graph g = grid_graph(7);  // 225 vertices, above the dense limit
    const ElectricalSystem sys(g);
    const Graph small = grid_graph(3);
    const ElectricalSystem small_sys(small);
    CHECK(g.vertex_count() > GroundedLaplacian::dense_limit);
    const auto r = oracle::resistances(small);
    for (auto [u, v] : {std::pair{0, 48}, std::pair{10, 11}, std::pair{24, 3}}) {
        CHECK(small_sys.effective_resistance(u, v) == doctest::Approx(r[u][v]).epsilon(1e-10));
    }
    // Symmetry of the grid: the two diagonal corner pairs are equivalent.
    const double a = sys.effective_resistance(0, 224);
    const double b = sys.effective_resistance(14, 210);
    CHECK(a == doctest::Approx(b).epsilon(1e-8));
    CHECK_FALSE(GroundedLaplacian(g, 0, 1e-10).dense());
}

TEST_CASE("resistance submatrix matches single solves") {
    const Graph g = binary_tree_graph(3);
    const ElectricalSystem sys(g);
    const std::vector<Vertex> vs{14, 0, 7, 3};
    const Eigen::MatrixXd r = sys.resistance_submatrix(vs);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = 0; j < vs.size(); ++j) {
            const double expected = i == j ? 0.0 : sys.effective_resistance(vs[i], vs[j]);
            CHECK(r(i, j) == doctest::Approx(expected).epsilon(1e-10));
        }
    }
    // Tree: resistance is path length.
    CHECK(r(0, 1) == doctest::Approx(3.0));
}

TEST_CASE("Dirichlet energy") {
    const Graph p3 = path_graph(3);
    CHECK(dirichlet_energy(p3, std::vector<double>{5, 5, 5}) == 0.0);
    CHECK(dirichlet_energy(p3, std::vector<double>{0, 1, 2}) == doctest::Approx(2.0));
    CHECK(dirichlet_energy(path_graph(2), std::vector<double>{1, 0}) == doctest::Approx(1.0));
    CHECK_THROWS_AS(dirichlet_energy(p3, std::vector<double>{0, 1}), Error);
}

TEST_CASE("variational lower bound") {
    const Graph p3 = path_graph(3);
    CHECK(resistance_lower_bound_variational(p3, std::vector<double>{0, 1, 2}, 0, 2) == doctest::Approx(2.0));
    CHECK(resistance_lower_bound_variational(p3, std::vector<double>{0, 1, 1}, 0, 2) == doctest::Approx(1.0));
    const Graph k4(4, k4_edges);
    CHECK(resistance_lower_bound_variational(k4, std::vector<double>{1, 0, 0, 0}, 0, 1) ==
          doctest::Approx(1.0 / 3.0));
    try {
        resistance_lower_bound_variational(p3, std::vector<double>{1, 1, 1}, 0, 2);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::zero_energy);
    }
}

TEST_CASE("log-map bound on the K4 packing") {
    const Triangulation t = as_triangulation(build_graph(4, k4_edges));
    const CirclePacking p = compute_packing(t, {0, 1, 2});
    const LogMapBound b = log_map_lower_bound(p, t.graph, 3, 0);
    CHECK(b.a == doctest::Approx(std::log(0.1547005)).epsilon(1e-6));
    CHECK_FALSE(b.degenerate);
    CHECK(b.value > 0.0);
    CHECK(b.value <= 0.5 + 1e-10);
}

TEST_CASE("log-map bound never exceeds the exact resistance") {
    const Triangulation t = triangulate(grid_graph(4));
    const CirclePacking p = compute_packing(t, t.suggested_outer_face);
    const ElectricalSystem sys(t.graph);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(t.graph.vertex_count() - 1));
    for (int i = 0; i < 60; ++i) {
        const Vertex u = pick(rng);
        const Vertex w = pick(rng);
        if (u == w) {
            continue;
        }
        const LogMapBound b = log_map_lower_bound(p, t.graph, u, w);
        CHECK(b.value <= sys.effective_resistance(u, w) + 1e-10);
    }
}

TEST_CASE("log-map bound over log distance ratio stays in a window") {
    std::vector<double> ratios;
    for (int m : {2, 4, 8}) {
        const Triangulation t = triangulate(grid_graph(m));
        const CirclePacking p = compute_packing(t, t.suggested_outer_face);
        const Vertex u = grid_vertex(m, 0, 0);
        const Vertex w = grid_vertex(m, -m, -m);
        const LogMapBound b = log_map_lower_bound(p, t.graph, u, w);
        REQUIRE_FALSE(b.degenerate);
        ratios.push_back(b.value / (b.b - b.a));
    }
    const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
    CHECK(*lo > 0.0);
    CHECK(*hi / *lo < 3.0);
}

TEST_CASE("triangle inequality witnesses") {
    const ElectricalSystem p3(path_graph(3));
    const auto t = resistance_triangle_check(p3, 0, 1, 2);
    CHECK(t.r_uw == doctest::Approx(2.0));
    CHECK(t.excess == doctest::Approx(0.0).scale(1.0));
    CHECK(t.holds);
    const ElectricalSystem k4(Graph(4, k4_edges));
    CHECK(resistance_triangle_check(k4, 0, 1, 2).excess == doctest::Approx(-0.5));
    const ElectricalSystem c4(cycle_graph(4));
    const auto c = resistance_triangle_check(c4, 0, 1, 2);
    CHECK(c.r_uv == doctest::Approx(0.75));
    CHECK(c.r_uw == doctest::Approx(1.0));
    CHECK(c.holds);
}

TEST_CASE("oracle equivalence: resistances on all graphs up to five vertices") {
    for (std::size_t n = 2; n <= 5; ++n) {
        for (const Graph& g : oracle::all_connected_graphs(n)) {
            const auto expected = oracle::resistances(g);
            const Eigen::MatrixXd r = ElectricalSystem(g).resistance_matrix();
            for (std::size_t u = 0; u < n; ++u) {
                for (std::size_t v = 0; v < n; ++v) {
                    REQUIRE(std::abs(r(u, v) - expected[u][v]) <= 1e-9);
                }
            }
        }
    }
}

TEST_CASE("property: Rayleigh monotonicity and triangle inequality") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(4, 20)(rng);
        const Graph g = oracle::random_connected_graph(n, 0.2, rng);
        const ElectricalSystem sys(g);
        const Eigen::MatrixXd r = sys.resistance_matrix();
        std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
        Vertex a = pick(rng);
        Vertex b = pick(rng);
        if (a == b || g.adjacent(a, b)) {
            continue;
        }
        const Graph h = g.with_edge(std::min(a, b), std::max(a, b));
        const Eigen::MatrixXd rh = ElectricalSystem(h).resistance_matrix();
        CHECK((rh.array() <= r.array() + 1e-10).all());
        for (std::size_t u = 0; u < n; ++u) {
            for (std::size_t v = 0; v < n; ++v) {
                for (std::size_t w = 0; w < n; ++w) {
                    REQUIRE(r(u, w) <= r(u, v) + r(v, w) + 1e-10);
                }
                // Adjacent vertices are joined by a unit resistor.
                if (g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
                    REQUIRE(r(u, v) <= 1.0 + 1e-10);
                }
            }
        }
        // Foster: sum over edges of R = n - 1.
        double foster = 0.0;
        for (const Edge& e : g.edges()) {
            foster += r(e.u, e.v);
        }
        CHECK(foster == doctest::Approx(static_cast<double>(n - 1)).epsilon(1e-9));
    }
}
