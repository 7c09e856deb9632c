#include "pcover/walks.hpp"

#include "pcover/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <thread>

namespace pcover {

namespace {

void require_vertex(const Graph& g, Vertex v) {
    if (v < 0 || static_cast<std::size_t>(v) >= g.vertex_count()) {
        throw Error(Errc::invalid_argument, "vertex " + std::to_string(v) + " out of range");
    }
}

}  // namespace

std::vector<double> hitting_times_exact(const Graph& g, Vertex target, double tol) {
    require_vertex(g, target);
    // d_u h(u) - sum_{w~u} h(w) = d_u for u != target: the grounded Laplacian.
    std::vector<double> rhs(g.vertex_count());
    for (std::size_t v = 0; v < rhs.size(); ++v) {
        rhs[v] = static_cast<double>(g.degree(static_cast<Vertex>(v)));
    }
    return GroundedLaplacian(g, target, tol).solve(rhs);
}

WalkTimes walk_times(const Graph& g, double tol) {
    const auto n = static_cast<Eigen::Index>(g.vertex_count());
    Eigen::MatrixXd h(n, n);
    for (Eigen::Index t = 0; t < n; ++t) {
        const auto column = hitting_times_exact(g, static_cast<Vertex>(t), tol);
        for (Eigen::Index u = 0; u < n; ++u) {
            h(u, t) = column[static_cast<std::size_t>(u)];
        }
    }
    return WalkTimes(std::move(h));
}

double hitting_via_tetali(const Graph& g, const Eigen::MatrixXd& resistance, Vertex u, Vertex v) {
    double sum = 0.0;
    for (std::size_t w = 0; w < g.vertex_count(); ++w) {
        const auto ww = static_cast<Eigen::Index>(w);
        sum += static_cast<double>(g.degree(static_cast<Vertex>(w))) *
               (resistance(u, v) + resistance(v, ww) - resistance(u, ww));
    }
    return 0.5 * sum;
}

double hitting_via_tetali(const ElectricalSystem& sys, Vertex u, Vertex v) {
    const Graph& g = sys.graph();
    require_vertex(g, u);
    require_vertex(g, v);
    if (u == v) {
        return 0.0;
    }
    const double r_uv = sys.effective_resistance(u, v);
    double sum = 0.0;
    for (std::size_t w = 0; w < g.vertex_count(); ++w) {
        const auto ww = static_cast<Vertex>(w);
        const double r_vw = ww == v ? 0.0 : sys.effective_resistance(v, ww);
        const double r_uw = ww == u ? 0.0 : sys.effective_resistance(u, ww);
        sum += static_cast<double>(g.degree(ww)) * (r_uv + r_vw - r_uw);
    }
    return 0.5 * sum;
}

CommuteDifference commute_and_difference(const Graph& g, Vertex u, Vertex v, double tol) {
    require_vertex(g, u);
    require_vertex(g, v);
    if (u == v) {
        throw Error(Errc::same_vertex, "commute time needs two distinct vertices");
    }
    const double h_uv = hitting_times_exact(g, v, tol)[static_cast<std::size_t>(u)];
    const double h_vu = hitting_times_exact(g, u, tol)[static_cast<std::size_t>(v)];
    ElectricalSystem sys(g, tol);
    CommuteDifference out;
    out.commute = h_uv + h_vu;
    out.difference = h_uv - h_vu;
    out.commute_from_resistance = 2.0 * static_cast<double>(g.edge_count()) * sys.effective_resistance(u, v);
    return out;
}

DifferenceOrdering difference_ordering(const WalkTimes& times, Vertex anchor, double tol) {
    const std::size_t n = times.size();
    if (anchor < 0 || static_cast<std::size_t>(anchor) >= n) {
        throw Error(Errc::invalid_argument, "anchor out of range");
    }
    DifferenceOrdering out;
    out.order.resize(n);
    std::iota(out.order.begin(), out.order.end(), 0);
    std::stable_sort(out.order.begin(), out.order.end(), [&](Vertex a, Vertex b) {
        return times.difference(anchor, a) < times.difference(anchor, b);
    });
    // Values within tol of the first member of a run count as tied and are
    // ordered by index.
    std::vector<std::size_t> run(n, 0);
    for (std::size_t i = 1, first = 0; i < n; ++i) {
        if (times.difference(anchor, out.order[i]) - times.difference(anchor, out.order[first]) > tol) {
            first = i;
        }
        run[static_cast<std::size_t>(out.order[i])] = first;
    }
    run[static_cast<std::size_t>(out.order[0])] = 0;
    std::sort(out.order.begin(), out.order.end(), [&](Vertex a, Vertex b) {
        const auto ra = run[static_cast<std::size_t>(a)];
        const auto rb = run[static_cast<std::size_t>(b)];
        return ra != rb ? ra < rb : a < b;
    });
    // i <= j must give D(v_i, v_j) >= 0.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            out.max_violation = std::max(out.max_violation, -times.difference(out.order[i], out.order[j]));
        }
    }
    out.satisfied = out.max_violation <= tol;
    return out;
}

DifferenceOrdering difference_ordering(const Graph& g, Vertex anchor, double tol) {
    return difference_ordering(walk_times(g), anchor, tol);
}

double harmonic_number(std::size_t k) {
    double h = 0.0;
    for (std::size_t i = k; i >= 1; --i) {
        h += 1.0 / static_cast<double>(i);
    }
    return h;
}

MatthewsBounds matthews_bounds(const WalkTimes& times, std::optional<std::vector<Vertex>> subset) {
    const std::size_t n = times.size();
    MatthewsBounds out;
    if (subset) {
        out.subset = std::move(*subset);
        std::sort(out.subset.begin(), out.subset.end());
        out.subset.erase(std::unique(out.subset.begin(), out.subset.end()), out.subset.end());
        for (Vertex v : out.subset) {
            if (v < 0 || static_cast<std::size_t>(v) >= n) {
                throw Error(Errc::invalid_argument, "subset vertex " + std::to_string(v) + " out of range");
            }
        }
    } else {
        out.subset.resize(n);
        std::iota(out.subset.begin(), out.subset.end(), 0);
    }
    if (out.subset.size() < 2) {
        throw Error(Errc::subset_too_small, "Matthews lower bound needs at least two vertices");
    }
    const Eigen::MatrixXd& h = times.matrix();
    out.upper = harmonic_number(n - 1) * h.maxCoeff();
    double min_h = std::numeric_limits<double>::infinity();
    for (Vertex u : out.subset) {
        for (Vertex v : out.subset) {
            if (u != v) {
                min_h = std::min(min_h, h(u, v));
            }
        }
    }
    out.lower = harmonic_number(out.subset.size() - 1) * min_h;
    return out;
}

MatthewsBounds matthews_bounds(const Graph& g, std::optional<std::vector<Vertex>> subset) {
    return matthews_bounds(walk_times(g), std::move(subset));
}

CoverTimeEstimate simulate_cover_time(const Graph& g, Vertex start, long trials, std::uint64_t seed,
                                      unsigned workers) {
    require_vertex(g, start);
    if (trials < 1) {
        throw Error(Errc::invalid_argument, "trials must be at least 1");
    }
    const std::size_t n = g.vertex_count();
    // Compressed adjacency for the inner loop.
    std::vector<std::size_t> offset(n + 1, 0);
    std::vector<Vertex> targets;
    targets.reserve(2 * g.edge_count());
    for (std::size_t v = 0; v < n; ++v) {
        auto nbrs = g.neighbors(static_cast<Vertex>(v));
        targets.insert(targets.end(), nbrs.begin(), nbrs.end());
        offset[v + 1] = targets.size();
    }

    std::vector<std::uint64_t> steps(static_cast<std::size_t>(trials), 0);
    auto run_trials = [&](unsigned worker, unsigned stride) {
        std::vector<char> visited(n);
        for (long t = worker; t < trials; t += stride) {
            const auto tt = static_cast<std::uint64_t>(t);
            std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                              static_cast<std::uint32_t>(tt), static_cast<std::uint32_t>(tt >> 32)};
            std::mt19937_64 rng(seq);
            std::fill(visited.begin(), visited.end(), 0);
            Vertex v = start;
            visited[static_cast<std::size_t>(v)] = 1;
            std::size_t remaining = n - 1;
            std::uint64_t count = 0;
            while (remaining > 0) {
                const std::size_t lo = offset[static_cast<std::size_t>(v)];
                const std::size_t deg = offset[static_cast<std::size_t>(v) + 1] - lo;
                std::uniform_int_distribution<std::size_t> pick(0, deg - 1);
                v = targets[lo + pick(rng)];
                ++count;
                if (!visited[static_cast<std::size_t>(v)]) {
                    visited[static_cast<std::size_t>(v)] = 1;
                    --remaining;
                }
            }
            steps[static_cast<std::size_t>(t)] = count;
        }
    };

    if (workers == 0) {
        workers = std::max(1u, std::thread::hardware_concurrency());
    }
    workers = static_cast<unsigned>(std::min<long>(workers, trials));
    if (workers == 1) {
        run_trials(0, 1);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(run_trials, w, workers);
        }
    }

    CoverTimeEstimate est;
    est.start = start;
    est.trials = trials;
    est.seed = seed;
    double sum = 0.0;
    for (auto s : steps) {
        sum += static_cast<double>(s);
    }
    est.mean = sum / static_cast<double>(trials);
    if (trials > 1) {
        double ss = 0.0;
        for (auto s : steps) {
            const double d = static_cast<double>(s) - est.mean;
            ss += d * d;
        }
        est.std_error = std::sqrt(ss / static_cast<double>(trials - 1)) / std::sqrt(static_cast<double>(trials));
    }
    return est;
}

UpperBoundCheck planar_upper_bound_check(const Graph& g) {
    const auto n = static_cast<double>(g.vertex_count());
    UpperBoundCheck out;
    out.bound = degrees(g).average_degree * n * (n - 1.0);
    out.six_n_squared = 6.0 * n * n;
    out.passes = out.bound < out.six_n_squared;
    return out;
}

}  // namespace pcover
