#include "pcover/triangulation.hpp"

#include "pcover/error.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace pcover {

namespace {

struct FacePlan {
    std::vector<Triangle> triangles;
    std::vector<Edge> diagonals;
};

Edge normalized(Vertex a, Vertex b) { return {std::min(a, b), std::max(a, b)}; }

// Serpentine triangulation of a polygon with distinct corners, cutting ears
// alternately from the front and the back. Every corner receives at most two
// diagonals. Triangles keep the orientation of the polygon.
FacePlan zigzag(const std::vector<Vertex>& polygon) {
    FacePlan plan;
    std::deque<Vertex> rest(polygon.begin(), polygon.end());
    bool from_front = true;
    while (rest.size() > 3) {
        const std::size_t last = rest.size() - 1;
        if (from_front) {
            plan.triangles.push_back({rest[last], rest[0], rest[1]});
            plan.diagonals.push_back(normalized(rest[last], rest[1]));
            rest.pop_front();
        } else {
            plan.triangles.push_back({rest[last - 1], rest[last], rest[0]});
            plan.diagonals.push_back(normalized(rest[last - 1], rest[0]));
            rest.pop_back();
        }
        from_front = !from_front;
    }
    plan.triangles.push_back({rest[0], rest[1], rest[2]});
    return plan;
}

bool has_distinct_corners(const std::vector<Vertex>& face) {
    std::vector<Vertex> sorted = face;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

// Rotation system induced by a set of oriented triangles covering every dart.
Rotation rotation_from_triangles(std::size_t n, const std::vector<Triangle>& triangles) {
    std::vector<std::map<Vertex, Vertex>> successor(n);
    for (const Triangle& t : triangles) {
        const auto [a, b, c] = t;
        successor[static_cast<std::size_t>(a)][b] = c;
        successor[static_cast<std::size_t>(b)][c] = a;
        successor[static_cast<std::size_t>(c)][a] = b;
    }
    Rotation rotation(n);
    for (std::size_t v = 0; v < n; ++v) {
        const auto& succ = successor[v];
        if (succ.empty()) {
            continue;
        }
        Vertex start = succ.begin()->first;
        Vertex w = start;
        do {
            rotation[v].push_back(w);
            auto it = succ.find(w);
            if (it == succ.end() || rotation[v].size() > succ.size()) {
                throw Error(Errc::not_a_triangulation,
                            "triangles do not close up around vertex " + std::to_string(v));
            }
            w = it->second;
        } while (w != start);
    }
    return rotation;
}

// First face (in face order) incident to a vertex of minimum eccentricity.
Triangle central_face(const PlanarGraph& g, const std::vector<Triangle>& faces) {
    const std::size_t n = g.vertex_count();
    std::size_t best_ecc = n;
    Vertex best = 0;
    std::vector<int> dist(n);
    std::vector<Vertex> queue(n);
    for (std::size_t s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::size_t head = 0, tail = 0;
        queue[tail++] = static_cast<Vertex>(s);
        dist[s] = 0;
        int ecc = 0;
        while (head < tail) {
            Vertex v = queue[head++];
            ecc = dist[static_cast<std::size_t>(v)];
            for (Vertex w : g.neighbors(v)) {
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = ecc + 1;
                    queue[tail++] = w;
                }
            }
        }
        if (static_cast<std::size_t>(ecc) < best_ecc) {
            best_ecc = static_cast<std::size_t>(ecc);
            best = static_cast<Vertex>(s);
        }
    }
    for (const Triangle& f : faces) {
        if (std::find(f.begin(), f.end(), best) != f.end()) {
            return f;
        }
    }
    return faces.front();
}

Triangulation summarize(PlanarGraph g, std::size_t original_n, std::size_t original_edges,
                        std::size_t original_max_degree) {
    Triangulation t;
    for (const auto& face : g.faces()) {
        if (face.size() != 3 || !has_distinct_corners(face)) {
            throw Error(Errc::not_a_triangulation,
                        "face of length " + std::to_string(face.size()) + " starting at vertex " +
                            std::to_string(face.front()));
        }
        t.faces.push_back({face[0], face[1], face[2]});
    }
    if (t.faces.empty()) {
        throw Error(Errc::not_a_triangulation, "graph has no faces");
    }
    t.original_vertex_count = original_n;
    t.original_max_degree = original_max_degree;
    t.added_vertices = g.vertex_count() - original_n;
    t.added_edges = g.edge_count() - original_edges;
    t.max_degree = g.max_degree();
    t.within_degree_bound = t.max_degree <= 3 * original_max_degree;
    t.suggested_outer_face = central_face(g, t.faces);
    t.graph = std::move(g);
    return t;
}

}  // namespace

Triangulation as_triangulation(PlanarGraph g) {
    if (g.faces().empty()) {
        throw Error(Errc::not_a_triangulation, "graph has no faces");
    }
    const std::size_t n = g.vertex_count();
    const std::size_t e = g.edge_count();
    const std::size_t m = g.max_degree();
    return summarize(std::move(g), n, e, m);
}

Triangulation triangulate(const PlanarGraph& g) {
    const std::size_t n = g.vertex_count();
    if (n < 3) {
        throw Error(Errc::too_small, "triangulation needs at least 3 vertices, got " + std::to_string(n));
    }
    const auto& faces = g.faces();
    if (std::all_of(faces.begin(), faces.end(),
                    [](const auto& f) { return f.size() == 3 && has_distinct_corners(f); })) {
        return as_triangulation(g);
    }

    std::set<Edge> edge_set(g.edges().begin(), g.edges().end());
    std::vector<Edge> steiner_edges;
    std::vector<Triangle> triangles;
    Vertex next_vertex = static_cast<Vertex>(n);

    for (const auto& face : faces) {
        const std::size_t k = face.size();

        bool done = false;
        if (k == 3) {
            triangles.push_back({face[0], face[1], face[2]});
            done = true;
        } else if (has_distinct_corners(face)) {
            // Try each starting corner until the diagonals avoid existing edges.
            for (std::size_t start = 0; start < k && !done; ++start) {
                std::vector<Vertex> polygon(k);
                for (std::size_t i = 0; i < k; ++i) {
                    polygon[i] = face[(start + i) % k];
                }
                FacePlan plan = zigzag(polygon);
                bool clash = std::any_of(plan.diagonals.begin(), plan.diagonals.end(),
                                         [&](const Edge& e) { return edge_set.count(e) > 0; });
                if (!clash) {
                    edge_set.insert(plan.diagonals.begin(), plan.diagonals.end());
                    triangles.insert(triangles.end(), plan.triangles.begin(), plan.triangles.end());
                    done = true;
                }
            }
        }
        if (!done) {
            // Ring of fresh vertices s_i inside the face, s_i joined to the
            // boundary edge c_i c_{i+1}; the inner k-gon is then zig-zagged.
            std::vector<Vertex> ring(k);
            for (auto& s : ring) {
                s = next_vertex++;
            }
            for (std::size_t i = 0; i < k; ++i) {
                const Vertex c0 = face[i];
                const Vertex c1 = face[(i + 1) % k];
                const Vertex s0 = ring[i];
                const Vertex s1 = ring[(i + 1) % k];
                triangles.push_back({c0, c1, s0});
                triangles.push_back({s0, c1, s1});
                steiner_edges.push_back(normalized(s0, c0));
                steiner_edges.push_back(normalized(s0, c1));
                steiner_edges.push_back(normalized(s0, s1));
            }
            FacePlan inner = zigzag(ring);
            triangles.insert(triangles.end(), inner.triangles.begin(), inner.triangles.end());
            steiner_edges.insert(steiner_edges.end(), inner.diagonals.begin(), inner.diagonals.end());
        }
    }

    std::vector<Edge> all_edges(edge_set.begin(), edge_set.end());
    all_edges.insert(all_edges.end(), steiner_edges.begin(), steiner_edges.end());
    const auto total_n = static_cast<std::size_t>(next_vertex);
    Graph completed(total_n, all_edges);
    Rotation rotation = rotation_from_triangles(total_n, triangles);

    std::vector<std::string> labels;
    if (!g.labels().empty()) {
        labels = g.labels();
        for (std::size_t v = n; v < total_n; ++v) {
            labels.push_back("steiner" + std::to_string(v - n));
        }
    }
    PlanarGraph embedded(std::move(completed), std::move(rotation), std::move(labels));
    return summarize(std::move(embedded), n, g.edge_count(), g.max_degree());
}

}  // namespace pcover
