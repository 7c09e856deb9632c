#include "pcover/electrical.hpp"

#include "pcover/error.hpp"

#include <Eigen/IterativeLinearSolvers>
#include <algorithm>
#include <cmath>

namespace pcover {

GroundedLaplacian::GroundedLaplacian(const Graph& g, Vertex ground, double tol)
    : ground_(ground), tol_(tol), n_(g.vertex_count()) {
    if (ground < 0 || static_cast<std::size_t>(ground) >= n_) {
        throw Error(Errc::invalid_argument, "ground vertex out of range");
    }
    const auto m = static_cast<Eigen::Index>(n_ - 1);
    std::vector<Eigen::Triplet<double>> entries;
    entries.reserve(n_ + 2 * g.edge_count());
    for (std::size_t v = 0; v < n_; ++v) {
        const auto vv = static_cast<Vertex>(v);
        if (vv == ground_) {
            continue;
        }
        entries.emplace_back(reduced_index(vv), reduced_index(vv), static_cast<double>(g.degree(vv)));
        for (Vertex w : g.neighbors(vv)) {
            if (w != ground_) {
                entries.emplace_back(reduced_index(vv), reduced_index(w), -1.0);
            }
        }
    }
    reduced_.resize(m, m);
    reduced_.setFromTriplets(entries.begin(), entries.end());
    if (n_ <= dense_limit) {
        dense_.emplace(Eigen::MatrixXd(reduced_));
        if (dense_->info() != Eigen::Success) {
            throw Error(Errc::solve_failure, "grounded Laplacian is not positive definite");
        }
    }
}

std::vector<double> GroundedLaplacian::solve(std::span<const double> rhs) const {
    if (rhs.size() != n_) {
        throw Error(Errc::invalid_argument, "right-hand side has wrong length");
    }
    std::vector<double> x(n_, 0.0);
    if (n_ == 1) {
        return x;
    }
    Eigen::VectorXd b(static_cast<Eigen::Index>(n_ - 1));
    for (std::size_t v = 0; v < n_; ++v) {
        if (static_cast<Vertex>(v) != ground_) {
            b[reduced_index(static_cast<Vertex>(v))] = rhs[v];
        }
    }
    Eigen::VectorXd sol;
    if (dense_) {
        sol = dense_->solve(b);
    } else {
        Eigen::ConjugateGradient<Eigen::SparseMatrix<double>, Eigen::Lower | Eigen::Upper,
                                 Eigen::DiagonalPreconditioner<double>>
            cg;
        cg.setTolerance(tol_);
        cg.setMaxIterations(static_cast<Eigen::Index>(20 * n_ + 100));
        cg.compute(reduced_);
        sol = cg.solve(b);
    }
    const double b_norm = b.norm();
    const double residual = (reduced_ * sol - b).norm();
    if (!std::isfinite(residual) || residual > tol_ * std::max(b_norm, 1e-300)) {
        throw Error(Errc::solve_failure, "relative residual " + std::to_string(residual / b_norm) +
                                             " exceeds " + std::to_string(tol_));
    }
    for (std::size_t v = 0; v < n_; ++v) {
        if (static_cast<Vertex>(v) != ground_) {
            x[v] = sol[reduced_index(static_cast<Vertex>(v))];
        }
    }
    return x;
}

ElectricalSystem::ElectricalSystem(const Graph& g, double solver_tol)
    : graph_(g),
      solver_tol_(solver_tol),
      laplacian_(g, static_cast<Vertex>(g.vertex_count() - 1), solver_tol) {}

PotentialFunction ElectricalSystem::unit_current_potentials(Vertex source, Vertex sink) const {
    const std::size_t n = graph_.vertex_count();
    if (source == sink) {
        throw Error(Errc::same_vertex, "resistance needs two distinct vertices");
    }
    if (source < 0 || sink < 0 || static_cast<std::size_t>(source) >= n || static_cast<std::size_t>(sink) >= n) {
        throw Error(Errc::invalid_argument, "vertex out of range");
    }
    std::vector<double> current(n, 0.0);
    current[static_cast<std::size_t>(source)] = 1.0;
    current[static_cast<std::size_t>(sink)] = -1.0;
    PotentialFunction f = laplacian_.solve(current);
    const double at_sink = f[static_cast<std::size_t>(sink)];
    for (double& x : f) {
        x -= at_sink;
    }
    return f;
}

double ElectricalSystem::effective_resistance(Vertex u, Vertex v) const {
    return unit_current_potentials(u, v)[static_cast<std::size_t>(u)];
}

Eigen::MatrixXd ElectricalSystem::resistance_matrix() const {
    std::vector<Vertex> all(graph_.vertex_count());
    for (std::size_t v = 0; v < all.size(); ++v) {
        all[v] = static_cast<Vertex>(v);
    }
    return resistance_submatrix(all);
}

Eigen::MatrixXd ElectricalSystem::resistance_submatrix(std::span<const Vertex> vertices) const {
    // Grounded Green's function G restricted to the vertex list;
    // R(u,v) = G_uu + G_vv - G_uv - G_vu.
    const std::size_t n = graph_.vertex_count();
    const auto k = static_cast<Eigen::Index>(vertices.size());
    Eigen::MatrixXd green = Eigen::MatrixXd::Zero(k, k);
    std::vector<double> unit(n, 0.0);
    for (Eigen::Index i = 0; i < k; ++i) {
        const Vertex u = vertices[static_cast<std::size_t>(i)];
        if (u < 0 || static_cast<std::size_t>(u) >= n) {
            throw Error(Errc::invalid_argument, "vertex " + std::to_string(u) + " out of range");
        }
        if (u == laplacian_.ground()) {
            continue;
        }
        unit[static_cast<std::size_t>(u)] = 1.0;
        const auto column = laplacian_.solve(unit);
        unit[static_cast<std::size_t>(u)] = 0.0;
        for (Eigen::Index j = 0; j < k; ++j) {
            green(j, i) = column[static_cast<std::size_t>(vertices[static_cast<std::size_t>(j)])];
        }
    }
    Eigen::MatrixXd r(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
        for (Eigen::Index j = 0; j < k; ++j) {
            r(i, j) = vertices[static_cast<std::size_t>(i)] == vertices[static_cast<std::size_t>(j)]
                          ? 0.0
                          : green(i, i) + green(j, j) - green(i, j) - green(j, i);
        }
    }
    return r;
}

double dirichlet_energy(const Graph& g, std::span<const double> f) {
    if (f.size() != g.vertex_count()) {
        throw Error(Errc::invalid_argument, "potential must be defined on every vertex");
    }
    double energy = 0.0;
    for (const Edge& e : g.edges()) {
        const double d = f[static_cast<std::size_t>(e.u)] - f[static_cast<std::size_t>(e.v)];
        energy += d * d;
    }
    return energy;
}

double resistance_lower_bound_variational(const Graph& g, std::span<const double> f, Vertex u, Vertex v) {
    const double energy = dirichlet_energy(g, f);
    if (!(energy > 0.0)) {
        throw Error(Errc::zero_energy, "potential is constant");
    }
    const double drop = f[static_cast<std::size_t>(v)] - f[static_cast<std::size_t>(u)];
    return drop * drop / energy;
}

LogMapBound log_map_lower_bound(const CirclePacking& p, const Graph& g, Vertex u, Vertex w) {
    if (u == w) {
        throw Error(Errc::same_vertex, "log-map bound needs two distinct vertices");
    }
    const std::size_t n = g.vertex_count();
    if (p.centers.size() < n || p.radii.size() < n) {
        throw Error(Errc::invalid_argument, "packing does not cover the graph");
    }
    const Point zu = p.centers[static_cast<std::size_t>(u)];
    LogMapBound out;
    out.a = std::log(p.radii[static_cast<std::size_t>(u)]);
    out.b = std::log(std::abs(p.centers[static_cast<std::size_t>(w)] - zu));
    if (out.b <= out.a) {
        out.degenerate = true;
        return out;
    }
    out.f.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
        if (static_cast<Vertex>(v) == u) {
            out.f[v] = out.a;
            continue;
        }
        const double dist = std::abs(p.centers[v] - zu);
        if (!(dist > 0.0)) {
            throw Error(Errc::coincident_centers, "vertex " + std::to_string(v) + " shares the center of " +
                                                      std::to_string(u));
        }
        // Re log(z - z_u) = log |z - z_u|.
        out.f[v] = std::min(std::log(dist), out.b);
    }
    out.energy = dirichlet_energy(g, out.f);
    if (!(out.energy > 0.0)) {
        throw Error(Errc::zero_energy, "log-map potential is constant");
    }
    out.value = (out.b - out.a) * (out.b - out.a) / out.energy;
    return out;
}

TriangleWitness resistance_triangle_check(const ElectricalSystem& sys, Vertex u, Vertex v, Vertex w) {
    TriangleWitness t;
    t.r_uw = sys.effective_resistance(u, w);
    t.r_uv = sys.effective_resistance(u, v);
    t.r_vw = sys.effective_resistance(v, w);
    t.excess = t.r_uw - (t.r_uv + t.r_vw);
    t.holds = t.excess <= 2.0 * sys.solver_tol() * std::max(1.0, t.r_uw);
    return t;
}

}  // namespace pcover
