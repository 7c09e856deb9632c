#pragma once

#include "pcover/graph.hpp"
#include "pcover/packing.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace pcover {

struct SeparationConfig {
    /// Bin exponent; must lie in (0, 1/5).
    double s = 1.0 / 6.0;
    /// Relative residual for the exact resistance solves.
    double solver_tol = 1e-10;
};

/// Bin index j -> members, where member v satisfies r_v in (n^{s(j-1)}, n^{sj}].
using RadiusBins = std::map<int, std::vector<Vertex>>;

/// The unique j with r in (n^{s(j-1)}, n^{sj}]. Values within 1e-9 (relative)
/// of a bin edge are snapped onto it.
int radius_bin(double r, std::size_t n, double s);

/// Bins of W with n = |W|. Throws Errc::empty_w, Errc::invalid_argument (|W| < 2).
RadiusBins radius_bins(const CirclePacking& p, std::span<const Vertex> w, double s);

/// Greedy maximal subset with pairwise dist(C_u, C_v) >= min_distance,
/// scanning by decreasing radius, ties by ascending index.
std::vector<Vertex> greedy_separated_subset(const CirclePacking& p, std::span<const Vertex> members,
                                            double min_distance);

enum class Parity { even, odd };

struct SeparatedSet {
    std::vector<Vertex> members;
    std::size_t source_size = 0;
    RadiusBins bins;
    Parity parity = Parity::even;
    /// Z_j for each bin of the chosen parity.
    RadiusBins selected;
    /// log|V'| / log|W|; absent when |W| < 2.
    std::optional<double> empirical_c;
    /// min pairwise R over V' divided by log|W|; absent when |V'| < 2.
    std::optional<double> empirical_r;
    std::optional<double> min_resistance;
    /// max radius ratio over edges of the packed graph.
    double ring_ratio = 1.0;
    /// n^s >= ring_ratio, the premise under which bins two apart cannot be adjacent.
    bool gap_premise = false;
    /// Edges joining W-vertices whose bins differ by at least two.
    std::size_t gap_violations = 0;
};

/// Picks the parity class holding at least |W|/2 vertices (even on ties),
/// runs the greedy selection in each of its bins with min_distance
/// n^{s(j+1)}, and measures pairwise resistances of the union on g.
/// Throws Errc::empty_w, Errc::invalid_argument.
SeparatedSet select_separated(const CirclePacking& p, const Graph& g, std::span<const Vertex> w,
                              const SeparationConfig& config = {});

struct SeparationReport {
    double min_resistance = 0.0;
    Vertex argmin_u = 0;
    Vertex argmin_v = 0;
    double threshold = 0.0;
    bool passed = false;
};

/// All pairwise resistances of the members on g, compared to threshold.
/// Throws Errc::subset_too_small, Errc::solve_failure.
SeparationReport verify_separation(const Graph& g, std::span<const Vertex> members, double threshold,
                                   double solver_tol = 1e-10);

}  // namespace pcover
