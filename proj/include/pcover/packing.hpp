#pragma once

#include "pcover/graph.hpp"
#include "pcover/triangulation.hpp"

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

namespace pcover {

using Point = std::complex<double>;

// Disk C_v has center centers[v] and radius radii[v]; disks of adjacent
// vertices are tangent, others have disjoint interiors.
struct CirclePacking {
    std::vector<Point> centers;
    std::vector<double> radii;
    Triangle outer_face{};
    /// Max over edges of | |z_u - z_v| - (r_u + r_v) |.
    double residual = 0.0;
    /// Max over interior vertices of |angle sum - 2 pi| when iteration stopped.
    double angle_error = 0.0;
    long iterations = 0;
};

struct PackingOptions {
    /// Stop once every interior angle sum is within tol of 2 pi.
    double tol = 1e-10;
    /// Radius assigned to each of the three outer disks.
    double boundary_radius = 1.0;
    long max_sweeps = 1'000'000;
};

/// Radius iteration with the outer face held at boundary_radius, followed by
/// a breadth-first layout from the outer face.
/// Throws Errc::not_a_face, Errc::no_convergence, Errc::invalid_argument.
CirclePacking compute_packing(const Triangulation& t, Triangle outer_face, const PackingOptions& options = {});

/// Angle at a disk of radius r_center between tangent neighbors of radii r_a, r_b.
double tangent_angle(double r_center, double r_a, double r_b);

/// dist(C_u, C_v) = max(0, |z_u - z_v| - r_u - r_v).
double disk_distance(const CirclePacking& p, Vertex u, Vertex v);

struct PackingDiagnostics {
    /// max over edges of r_v / r_u (both orientations), so >= 1.
    double ring_ratio = 1.0;
    /// min over ordered non-adjacent pairs of dist(C_v, C_u) / r_u; absent
    /// when the graph is complete.
    std::optional<double> min_nonneighbor_gap_ratio;
    long iterations = 0;
    double final_angle_error = 0.0;
};

PackingDiagnostics diagnostics(const CirclePacking& p, const Triangulation& t);

struct PackingCheck {
    double max_tangency_residual = 0.0;
    /// max over non-edges of (r_u + r_v) - |z_u - z_v|, i.e. positive means overlap.
    double max_overlap = 0.0;
};

/// Recomputes tangency and disjointness directly from centers and radii.
PackingCheck check_packing(const CirclePacking& p, const Graph& g);

}  // namespace pcover
