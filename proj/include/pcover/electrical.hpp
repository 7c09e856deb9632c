#pragma once

#include "pcover/graph.hpp"
#include "pcover/packing.hpp"

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <optional>
#include <span>
#include <vector>

namespace pcover {

/// Graph Laplacian with the row and column of one vertex deleted (that
/// vertex is held at potential 0). Dense Cholesky up to dense_limit
/// vertices, Jacobi-preconditioned conjugate gradient above.
class GroundedLaplacian {
public:
    static constexpr std::size_t dense_limit = 200;

    GroundedLaplacian(const Graph& g, Vertex ground, double tol);

    /// Solves L x = b on all vertices but the ground and returns x over all
    /// vertices with x[ground] = 0. Entry b[ground] is ignored.
    /// Throws Errc::solve_failure if the relative residual exceeds tol.
    std::vector<double> solve(std::span<const double> rhs) const;

    Vertex ground() const { return ground_; }
    bool dense() const { return dense_.has_value(); }

private:
    Eigen::Index reduced_index(Vertex v) const { return v < ground_ ? v : v - 1; }

    Vertex ground_;
    double tol_;
    std::size_t n_;
    Eigen::SparseMatrix<double> reduced_;
    std::optional<Eigen::LLT<Eigen::MatrixXd>> dense_;
};

using PotentialFunction = std::vector<double>;

// Unit resistors on every edge. Keeps its own copy of the graph. Const
// member functions may be called concurrently.
class ElectricalSystem {
public:
    explicit ElectricalSystem(const Graph& g, double solver_tol = 1e-10);

    const Graph& graph() const { return graph_; }
    double solver_tol() const { return solver_tol_; }

    /// Throws Errc::same_vertex, Errc::solve_failure.
    double effective_resistance(Vertex u, Vertex v) const;

    /// Potentials driving a unit current from source to sink, with f(sink) = 0.
    PotentialFunction unit_current_potentials(Vertex source, Vertex sink) const;

    /// All pairwise resistances (n x n, zero diagonal).
    Eigen::MatrixXd resistance_matrix() const;

    /// Pairwise resistances among the given vertices, one solve per vertex.
    Eigen::MatrixXd resistance_submatrix(std::span<const Vertex> vertices) const;

private:
    Graph graph_;
    double solver_tol_;
    GroundedLaplacian laplacian_;
};

/// Sum over edges of (f(a) - f(b))^2.
double dirichlet_energy(const Graph& g, std::span<const double> f);

/// (f(v) - f(u))^2 / D(f), a lower bound for R(u, v). Throws Errc::zero_energy.
double resistance_lower_bound_variational(const Graph& g, std::span<const double> f, Vertex u, Vertex v);

struct LogMapBound {
    /// (b - a)^2 / D(f), or 0 when degenerate.
    double value = 0.0;
    double a = 0.0;  ///< log r_u
    double b = 0.0;  ///< log |z_w - z_u|
    double energy = 0.0;
    /// b <= a: w's center is within r_u of z_u, no bound produced.
    bool degenerate = false;
    PotentialFunction f;
};

/// Test function f(v) = min(log|z_v - z_u|, b) for v != u, f(u) = log r_u,
/// built from the packing; its energy ratio is a lower bound for R(u, w).
/// Throws Errc::same_vertex, Errc::coincident_centers, Errc::zero_energy.
LogMapBound log_map_lower_bound(const CirclePacking& p, const Graph& g, Vertex u, Vertex w);

struct TriangleWitness {
    double r_uw = 0.0;
    double r_uv = 0.0;
    double r_vw = 0.0;
    /// r_uw - (r_uv + r_vw); <= 0 when the inequality holds.
    double excess = 0.0;
    bool holds = true;
};

/// Checks R(u,w) <= R(u,v) + R(v,w) up to 2 * solver_tol.
TriangleWitness resistance_triangle_check(const ElectricalSystem& sys, Vertex u, Vertex v, Vertex w);

}  // namespace pcover
