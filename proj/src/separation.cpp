#include "pcover/separation.hpp"

#include "pcover/electrical.hpp"
#include "pcover/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pcover {

int radius_bin(double r, std::size_t n, double s) {
    if (!(r > 0.0) || n < 2 || !(s > 0.0)) {
        throw Error(Errc::invalid_argument, "radius_bin needs r > 0, n >= 2, s > 0");
    }
    const double x = std::log(r) / (s * std::log(static_cast<double>(n)));
    const double nearest = std::round(x);
    if (std::abs(x - nearest) <= 1e-9 * std::max(1.0, std::abs(x))) {
        return static_cast<int>(nearest);
    }
    return static_cast<int>(std::ceil(x));
}

namespace {

void require_members(const CirclePacking& p, std::span<const Vertex> w) {
    if (w.empty()) {
        throw Error(Errc::empty_w, "vertex set is empty");
    }
    for (Vertex v : w) {
        if (v < 0 || static_cast<std::size_t>(v) >= p.radii.size()) {
            throw Error(Errc::invalid_argument, "vertex " + std::to_string(v) + " is not packed");
        }
    }
}

}  // namespace

RadiusBins radius_bins(const CirclePacking& p, std::span<const Vertex> w, double s) {
    require_members(p, w);
    if (w.size() < 2) {
        throw Error(Errc::invalid_argument, "radius bins need |W| >= 2");
    }
    RadiusBins bins;
    for (Vertex v : w) {
        bins[radius_bin(p.radii[static_cast<std::size_t>(v)], w.size(), s)].push_back(v);
    }
    return bins;
}

std::vector<Vertex> greedy_separated_subset(const CirclePacking& p, std::span<const Vertex> members,
                                            double min_distance) {
    if (!(min_distance > 0.0)) {
        throw Error(Errc::invalid_argument, "min_distance must be positive");
    }
    std::vector<Vertex> order(members.begin(), members.end());
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        const double ra = p.radii[static_cast<std::size_t>(a)];
        const double rb = p.radii[static_cast<std::size_t>(b)];
        return ra != rb ? ra > rb : a < b;
    });
    std::vector<Vertex> chosen;
    for (Vertex v : order) {
        const bool far = std::all_of(chosen.begin(), chosen.end(),
                                     [&](Vertex z) { return disk_distance(p, v, z) >= min_distance; });
        if (far) {
            chosen.push_back(v);
        }
    }
    return chosen;
}

SeparatedSet select_separated(const CirclePacking& p, const Graph& g, std::span<const Vertex> w,
                              const SeparationConfig& config) {
    if (!(config.s > 0.0 && config.s < 0.2)) {
        throw Error(Errc::invalid_argument, "s must lie in (0, 1/5)");
    }
    require_members(p, w);
    if (p.radii.size() < g.vertex_count()) {
        throw Error(Errc::invalid_argument, "packing does not cover the graph");
    }

    SeparatedSet out;
    out.source_size = w.size();
    for (const Edge& e : g.edges()) {
        const double ru = p.radii[static_cast<std::size_t>(e.u)];
        const double rv = p.radii[static_cast<std::size_t>(e.v)];
        out.ring_ratio = std::max(out.ring_ratio, std::max(ru / rv, rv / ru));
    }
    if (w.size() == 1) {
        out.members.assign(w.begin(), w.end());
        return out;
    }

    const auto n = static_cast<double>(w.size());
    out.bins = radius_bins(p, w, config.s);
    out.gap_premise = std::pow(n, config.s) >= out.ring_ratio;

    std::map<Vertex, int> bin_of;
    std::size_t even_count = 0;
    for (const auto& [j, members] : out.bins) {
        for (Vertex v : members) {
            bin_of[v] = j;
        }
        if (j % 2 == 0) {
            even_count += members.size();
        }
    }
    for (const Edge& e : g.edges()) {
        auto iu = bin_of.find(e.u);
        auto iv = bin_of.find(e.v);
        if (iu != bin_of.end() && iv != bin_of.end() && std::abs(iu->second - iv->second) >= 2) {
            ++out.gap_violations;
        }
    }

    out.parity = 2 * even_count >= w.size() ? Parity::even : Parity::odd;
    for (const auto& [j, members] : out.bins) {
        const bool even = j % 2 == 0;
        if (even != (out.parity == Parity::even)) {
            continue;
        }
        const double min_distance = std::pow(n, config.s * static_cast<double>(j + 1));
        auto z = greedy_separated_subset(p, members, min_distance);
        out.members.insert(out.members.end(), z.begin(), z.end());
        out.selected[j] = std::move(z);
    }
    std::sort(out.members.begin(), out.members.end());

    const double log_w = std::log(n);
    out.empirical_c = std::log(static_cast<double>(out.members.size())) / log_w;
    if (out.members.size() >= 2) {
        ElectricalSystem sys(g, config.solver_tol);
        const Eigen::MatrixXd r = sys.resistance_submatrix(out.members);
        double min_r = std::numeric_limits<double>::infinity();
        for (Eigen::Index i = 0; i < r.rows(); ++i) {
            for (Eigen::Index j = i + 1; j < r.cols(); ++j) {
                min_r = std::min(min_r, r(i, j));
            }
        }
        out.min_resistance = min_r;
        out.empirical_r = min_r / log_w;
    }
    return out;
}

SeparationReport verify_separation(const Graph& g, std::span<const Vertex> members, double threshold,
                                   double solver_tol) {
    if (members.size() < 2) {
        throw Error(Errc::subset_too_small, "verification needs at least two vertices");
    }
    ElectricalSystem sys(g, solver_tol);
    const Eigen::MatrixXd r = sys.resistance_submatrix(members);
    SeparationReport report;
    report.threshold = threshold;
    report.min_resistance = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < r.rows(); ++i) {
        for (Eigen::Index j = i + 1; j < r.cols(); ++j) {
            if (r(i, j) < report.min_resistance) {
                report.min_resistance = r(i, j);
                report.argmin_u = members[static_cast<std::size_t>(i)];
                report.argmin_v = members[static_cast<std::size_t>(j)];
            }
        }
    }
    report.passed = report.min_resistance >= threshold;
    return report;
}

}  // namespace pcover
