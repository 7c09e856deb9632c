#pragma once

#include "pcover/electrical.hpp"
#include "pcover/graph.hpp"

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <vector>

namespace pcover {

// Pairwise hitting times of the simple random walk; H(u,v) is the expected
// number of steps from u until v is first visited.
class WalkTimes {
public:
    explicit WalkTimes(Eigen::MatrixXd hitting) : hitting_(std::move(hitting)) {}

    std::size_t size() const { return static_cast<std::size_t>(hitting_.rows()); }
    double hitting(Vertex u, Vertex v) const { return hitting_(u, v); }
    double commute(Vertex u, Vertex v) const { return hitting_(u, v) + hitting_(v, u); }
    double difference(Vertex u, Vertex v) const { return hitting_(u, v) - hitting_(v, u); }
    const Eigen::MatrixXd& matrix() const { return hitting_; }

private:
    Eigen::MatrixXd hitting_;
};

/// H(., target) from the first-step equations h(target) = 0,
/// h(u) = 1 + (1/d_u) sum_{w~u} h(w). Throws Errc::solve_failure.
std::vector<double> hitting_times_exact(const Graph& g, Vertex target, double tol = 1e-10);

/// Full hitting-time matrix, one linear solve per target.
WalkTimes walk_times(const Graph& g, double tol = 1e-10);

/// H(u,v) = 1/2 sum_w d_w (R(u,v) + R(v,w) - R(u,w)).
double hitting_via_tetali(const ElectricalSystem& sys, Vertex u, Vertex v);
/// Same formula over a precomputed resistance matrix.
double hitting_via_tetali(const Graph& g, const Eigen::MatrixXd& resistance, Vertex u, Vertex v);

struct CommuteDifference {
    double commute = 0.0;     ///< H(u,v) + H(v,u)
    double difference = 0.0;  ///< H(u,v) - H(v,u)
    double commute_from_resistance = 0.0;  ///< 2|E| R(u,v)
};

/// Throws Errc::same_vertex, Errc::solve_failure.
CommuteDifference commute_and_difference(const Graph& g, Vertex u, Vertex v, double tol = 1e-10);

struct DifferenceOrdering {
    /// Vertices sorted ascending by D(anchor, .), values within tol tied and
    /// ordered by index.
    std::vector<Vertex> order;
    /// max over i <= j of -D(v_i, v_j), clamped at 0.
    double max_violation = 0.0;
    bool satisfied = true;
};

DifferenceOrdering difference_ordering(const WalkTimes& times, Vertex anchor, double tol = 1e-9);
DifferenceOrdering difference_ordering(const Graph& g, Vertex anchor, double tol = 1e-9);

/// h_k = sum_{i=1}^k 1/i.
double harmonic_number(std::size_t k);

struct MatthewsBounds {
    double upper = 0.0;  ///< h_{n-1} max_{u,v} H(u,v)
    double lower = 0.0;  ///< h_{|V0|-1} min_{u != v in V0} H(u,v)
    std::vector<Vertex> subset;
};

/// subset defaults to all vertices. Throws Errc::subset_too_small.
MatthewsBounds matthews_bounds(const WalkTimes& times, std::optional<std::vector<Vertex>> subset = std::nullopt);
MatthewsBounds matthews_bounds(const Graph& g, std::optional<std::vector<Vertex>> subset = std::nullopt);

struct CoverTimeEstimate {
    Vertex start = 0;
    long trials = 0;
    double mean = 0.0;
    /// Sample standard deviation over sqrt(trials).
    double std_error = 0.0;
    std::uint64_t seed = 0;
};

/// Monte Carlo estimate of E_start C. Trial t draws from an engine seeded by
/// (seed, t) only, so results do not depend on the worker count
/// (0 = hardware concurrency).
CoverTimeEstimate simulate_cover_time(const Graph& g, Vertex start, long trials, std::uint64_t seed,
                                      unsigned workers = 0);

struct UpperBoundCheck {
    /// average_degree * n * (n - 1) = 2|E|(n-1)
    double bound = 0.0;
    double six_n_squared = 0.0;
    /// bound < 6 n^2
    bool passes = false;
};

UpperBoundCheck planar_upper_bound_check(const Graph& g);

}  // namespace pcover
