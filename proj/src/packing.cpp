#include "pcover/packing.hpp"

#include "pcover/error.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <numbers>
#include <utility>

namespace pcover {

double tangent_angle(double r_center, double r_a, double r_b) {
    // Law of cosines on sides r_c + r_a, r_c + r_b, r_a + r_b, written as
    // 1 - cos(angle) = 2 r_a r_b / ((r_c + r_a)(r_c + r_b)).
    const double s = r_a * r_b / ((r_center + r_a) * (r_center + r_b));
    return 2.0 * std::asin(std::sqrt(std::clamp(s, 0.0, 1.0)));
}

double disk_distance(const CirclePacking& p, Vertex u, Vertex v) {
    const auto iu = static_cast<std::size_t>(u);
    const auto iv = static_cast<std::size_t>(v);
    return std::max(0.0, std::abs(p.centers[iu] - p.centers[iv]) - p.radii[iu] - p.radii[iv]);
}

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

bool same_vertex_set(Triangle a, Triangle b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

double angle_sum(const std::vector<Vertex>& flower, Vertex v, const std::vector<double>& radii) {
    const double r = radii[static_cast<std::size_t>(v)];
    double sum = 0.0;
    const std::size_t k = flower.size();
    for (std::size_t i = 0; i < k; ++i) {
        sum += tangent_angle(r, radii[static_cast<std::size_t>(flower[i])],
                             radii[static_cast<std::size_t>(flower[(i + 1) % k])]);
    }
    return sum;
}

// Uniform-neighbor update: replace the petals by k equal disks giving the
// same angle sum, then pick the center radius for which those k disks close
// up to exactly 2 pi.
double uniform_neighbor_radius(double r, double angle, std::size_t k) {
    const double beta = std::sin(angle / (2.0 * static_cast<double>(k)));
    const double delta = std::sin(std::numbers::pi / static_cast<double>(k));
    const double petal = r * beta / (1.0 - beta);
    return petal * (1.0 - delta) / delta;
}

}  // namespace

CirclePacking compute_packing(const Triangulation& t, Triangle outer_face, const PackingOptions& options) {
    if (!(options.tol > 0.0) || !(options.boundary_radius > 0.0)) {
        throw Error(Errc::invalid_argument, "tolerance and boundary radius must be positive");
    }
    const PlanarGraph& g = t.graph;
    const std::size_t n = g.vertex_count();

    auto outer_it = std::find_if(t.faces.begin(), t.faces.end(),
                                 [&](const Triangle& f) { return same_vertex_set(f, outer_face); });
    if (outer_it == t.faces.end()) {
        throw Error(Errc::not_a_face, "(" + std::to_string(outer_face[0]) + "," + std::to_string(outer_face[1]) +
                                          "," + std::to_string(outer_face[2]) + ") is not a face");
    }
    const Triangle outer = *outer_it;

    std::vector<char> is_boundary(n, 0);
    for (Vertex v : outer) {
        is_boundary[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<Vertex> interior;
    for (std::size_t v = 0; v < n; ++v) {
        if (!is_boundary[v]) {
            interior.push_back(static_cast<Vertex>(v));
        }
    }

    CirclePacking p;
    p.outer_face = outer;
    p.radii.assign(n, options.boundary_radius);

    // Radius iteration (Gauss-Seidel sweeps of the uniform-neighbor update).
    long sweep = 0;
    double error = std::numeric_limits<double>::infinity();
    while (true) {
        double sweep_error = 0.0;
        for (Vertex v : interior) {
            const auto& flower = g.rotation()[static_cast<std::size_t>(v)];
            const double theta = angle_sum(flower, v, p.radii);
            sweep_error = std::max(sweep_error, std::abs(theta - two_pi));
            auto& r = p.radii[static_cast<std::size_t>(v)];
            r = uniform_neighbor_radius(r, theta, flower.size());
        }
        ++sweep;
        if (sweep_error < options.tol || sweep >= options.max_sweeps) {
            error = 0.0;
            for (Vertex v : interior) {
                const auto& flower = g.rotation()[static_cast<std::size_t>(v)];
                error = std::max(error, std::abs(angle_sum(flower, v, p.radii) - two_pi));
            }
            if (error < options.tol) {
                break;
            }
            if (sweep >= options.max_sweeps) {
                throw Error(Errc::no_convergence, "angle error " + std::to_string(error) + " after " +
                                                      std::to_string(sweep) + " sweeps");
            }
        }
    }
    p.iterations = sweep;
    p.angle_error = error;

    // Layout. Every face lies to the left of its boundary walk, except that the
    // rest of the packing lies to the right of the outer face's walk.
    std::map<std::pair<Vertex, Vertex>, std::size_t> face_of_dart;
    for (std::size_t f = 0; f < t.faces.size(); ++f) {
        const Triangle& tri = t.faces[f];
        for (std::size_t i = 0; i < 3; ++i) {
            face_of_dart[{tri[i], tri[(i + 1) % 3]}] = f;
        }
    }
    p.centers.assign(n, Point(0.0, 0.0));
    std::vector<char> placed(n, 0);
    auto place_third = [&](Vertex a, Vertex b, Vertex c, double side) {
        const auto ia = static_cast<std::size_t>(a);
        const auto ic = static_cast<std::size_t>(c);
        const Point ab = p.centers[static_cast<std::size_t>(b)] - p.centers[ia];
        const double alpha = tangent_angle(p.radii[ia], p.radii[static_cast<std::size_t>(b)], p.radii[ic]);
        p.centers[ic] = p.centers[ia] + (p.radii[ia] + p.radii[ic]) * (ab / std::abs(ab)) * std::polar(1.0, side * alpha);
        placed[ic] = 1;
    };

    const auto [a0, b0, c0] = outer;
    p.centers[static_cast<std::size_t>(a0)] = Point(0.0, 0.0);
    p.centers[static_cast<std::size_t>(b0)] = Point(p.radii[static_cast<std::size_t>(a0)] + p.radii[static_cast<std::size_t>(b0)], 0.0);
    placed[static_cast<std::size_t>(a0)] = 1;
    placed[static_cast<std::size_t>(b0)] = 1;
    place_third(a0, b0, c0, -1.0);

    std::vector<char> face_done(t.faces.size(), 0);
    std::deque<std::pair<Vertex, Vertex>> darts;
    auto finish_face = [&](std::size_t f) {
        face_done[f] = 1;
        const Triangle& tri = t.faces[f];
        for (std::size_t i = 0; i < 3; ++i) {
            darts.emplace_back(tri[(i + 1) % 3], tri[i]);
        }
    };
    finish_face(static_cast<std::size_t>(outer_it - t.faces.begin()));
    while (!darts.empty()) {
        auto [a, b] = darts.front();
        darts.pop_front();
        auto it = face_of_dart.find({a, b});
        if (it == face_of_dart.end() || face_done[it->second]) {
            continue;
        }
        const Triangle& tri = t.faces[it->second];
        std::size_t i = 0;
        while (tri[i] != a) {
            ++i;
        }
        const Vertex c = tri[(i + 2) % 3];
        if (!placed[static_cast<std::size_t>(c)]) {
            place_third(a, b, c, 1.0);
        }
        finish_face(it->second);
    }

    p.residual = check_packing(p, g).max_tangency_residual;
    return p;
}

PackingCheck check_packing(const CirclePacking& p, const Graph& g) {
    PackingCheck check;
    const std::size_t n = g.vertex_count();
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            const double gap = std::abs(p.centers[u] - p.centers[v]) - p.radii[u] - p.radii[v];
            if (g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
                check.max_tangency_residual = std::max(check.max_tangency_residual, std::abs(gap));
            } else {
                check.max_overlap = std::max(check.max_overlap, -gap);
            }
        }
    }
    return check;
}

PackingDiagnostics diagnostics(const CirclePacking& p, const Triangulation& t) {
    PackingDiagnostics d;
    const Graph& g = t.graph;
    for (const Edge& e : g.edges()) {
        const double ru = p.radii[static_cast<std::size_t>(e.u)];
        const double rv = p.radii[static_cast<std::size_t>(e.v)];
        d.ring_ratio = std::max(d.ring_ratio, std::max(ru / rv, rv / ru));
    }
    const std::size_t n = g.vertex_count();
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
                continue;
            }
            const double dist = disk_distance(p, static_cast<Vertex>(u), static_cast<Vertex>(v));
            const double ratio = dist / std::max(p.radii[u], p.radii[v]);
            d.min_nonneighbor_gap_ratio = d.min_nonneighbor_gap_ratio ? std::min(*d.min_nonneighbor_gap_ratio, ratio) : ratio;
        }
    }
    d.iterations = p.iterations;
    d.final_angle_error = p.angle_error;
    return d;
}

}  // namespace pcover
