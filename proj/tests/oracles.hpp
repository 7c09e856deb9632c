#pragma once

// Slow reference computations used only by tests. Nothing here calls into
// the electrical or walks modules.

#include "pcover/graph.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<long double>>;

inline Matrix identity(std::size_t n) {
    Matrix m(n, std::vector<long double>(n, 0.0L));
    for (std::size_t i = 0; i < n; ++i) {
        m[i][i] = 1.0L;
    }
    return m;
}

/// Gauss-Jordan with partial pivoting; returns a^{-1} b column by column.
inline Matrix solve(Matrix a, Matrix b) {
    const std::size_t n = a.size();
    const std::size_t k = b.empty() ? 0 : b[0].size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::fabs(a[r][col]) > std::fabs(a[pivot][col])) {
                pivot = r;
            }
        }
        if (std::fabs(a[pivot][col]) < 1e-300L) {
            throw std::runtime_error("singular system");
        }
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        const long double inv = 1.0L / a[col][col];
        for (std::size_t c = 0; c < n; ++c) a[col][c] *= inv;
        for (std::size_t c = 0; c < k; ++c) b[col][c] *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0.0L) {
                continue;
            }
            const long double f = a[r][col];
            for (std::size_t c = 0; c < n; ++c) a[r][c] -= f * a[col][c];
            for (std::size_t c = 0; c < k; ++c) b[r][c] -= f * b[col][c];
        }
    }
    return b;
}

inline Matrix laplacian(const pcover::Graph& g) {
    const std::size_t n = g.vertex_count();
    Matrix l(n, std::vector<long double>(n, 0.0L));
    for (const auto& e : g.edges()) {
        l[e.u][e.u] += 1;
        l[e.v][e.v] += 1;
        l[e.u][e.v] -= 1;
        l[e.v][e.u] -= 1;
    }
    return l;
}

/// R(u,v) from the Moore-Penrose pseudoinverse L+ = (L + J/n)^{-1} - J/n.
inline std::vector<std::vector<double>> resistances(const pcover::Graph& g) {
    const std::size_t n = g.vertex_count();
    Matrix l = laplacian(g);
    for (auto& row : l) {
        for (auto& x : row) x += 1.0L / static_cast<long double>(n);
    }
    const Matrix p = solve(l, identity(n));
    std::vector<std::vector<double>> r(n, std::vector<double>(n, 0.0));
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            r[u][v] = static_cast<double>(p[u][u] + p[v][v] - p[u][v] - p[v][u]);
        }
    }
    return r;
}

/// H(., target) from the full first-step system, target row pinned to 0.
inline std::vector<double> hitting(const pcover::Graph& g, pcover::Vertex target) {
    const std::size_t n = g.vertex_count();
    Matrix a(n, std::vector<long double>(n, 0.0L));
    Matrix b(n, std::vector<long double>(1, 0.0L));
    for (std::size_t u = 0; u < n; ++u) {
        a[u][u] = 1.0L;
        if (static_cast<pcover::Vertex>(u) == target) {
            continue;
        }
        const auto nbrs = g.neighbors(static_cast<pcover::Vertex>(u));
        for (auto w : nbrs) {
            a[u][w] -= 1.0L / static_cast<long double>(nbrs.size());
        }
        b[u][0] = 1.0L;
    }
    const Matrix x = solve(a, b);
    std::vector<double> h(n);
    for (std::size_t u = 0; u < n; ++u) h[u] = static_cast<double>(x[u][0]);
    return h;
}

/// Exact expected cover time from every start, by dynamic programming over
/// (position, visited set). Visited sets are processed from the full set
/// downwards, so every superset is already known. n <= 12.
inline std::vector<double> cover_times(const pcover::Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n > 12) {
        throw std::invalid_argument("cover DP is limited to 12 vertices");
    }
    const std::uint32_t full = (1u << n) - 1;
    std::vector<std::vector<long double>> t(full + 1, std::vector<long double>(n, 0.0L));
    for (std::uint32_t s = full - 1; s >= 1; --s) {
        std::vector<std::size_t> in;
        std::vector<int> pos(n, -1);
        for (std::size_t v = 0; v < n; ++v) {
            if (s >> v & 1u) {
                pos[v] = static_cast<int>(in.size());
                in.push_back(v);
            }
        }
        const std::size_t k = in.size();
        Matrix a(k, std::vector<long double>(k, 0.0L));
        Matrix b(k, std::vector<long double>(1, 1.0L));
        for (std::size_t i = 0; i < k; ++i) {
            const auto v = static_cast<pcover::Vertex>(in[i]);
            const auto nbrs = g.neighbors(v);
            const long double p = 1.0L / static_cast<long double>(nbrs.size());
            a[i][i] += 1.0L;
            for (auto w : nbrs) {
                if (pos[w] >= 0) {
                    a[i][pos[w]] -= p;
                } else {
                    b[i][0] += p * t[s | (1u << w)][w];
                }
            }
        }
        const Matrix x = solve(a, b);
        for (std::size_t i = 0; i < k; ++i) {
            t[s][in[i]] = x[i][0];
        }
    }
    std::vector<double> out(n);
    for (std::size_t v = 0; v < n; ++v) {
        out[v] = static_cast<double>(t[1u << v][v]);
    }
    return out;
}

inline bool connected(std::size_t n, const std::vector<pcover::Edge>& edges) {
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t parts = n;
    for (const auto& e : edges) {
        auto a = find(static_cast<std::size_t>(e.u));
        auto b = find(static_cast<std::size_t>(e.v));
        if (a != b) {
            parent[a] = b;
            --parts;
        }
    }
    return parts == 1;
}

/// Every labeled connected simple graph on n vertices.
inline std::vector<pcover::Graph> all_connected_graphs(std::size_t n) {
    std::vector<pcover::Edge> slots;
    for (int u = 0; u < static_cast<int>(n); ++u) {
        for (int v = u + 1; v < static_cast<int>(n); ++v) slots.push_back({u, v});
    }
    std::vector<pcover::Graph> out;
    for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
        std::vector<pcover::Edge> edges;
        for (std::size_t i = 0; i < slots.size(); ++i) {
            if (mask >> i & 1u) edges.push_back(slots[i]);
        }
        if (connected(n, edges)) out.emplace_back(n, edges);
    }
    return out;
}

/// Random spanning tree plus each remaining pair with probability p.
inline pcover::Graph random_connected_graph(std::size_t n, double p, std::mt19937_64& rng) {
    std::vector<pcover::Edge> edges;
    std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
    for (std::size_t v = 1; v < n; ++v) {
        const auto u = std::uniform_int_distribution<std::size_t>(0, v - 1)(rng);
        edges.push_back({static_cast<int>(u), static_cast<int>(v)});
        used[u][v] = true;
    }
    std::bernoulli_distribution extra(p);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (!used[u][v] && extra(rng)) edges.push_back({static_cast<int>(u), static_cast<int>(v)});
        }
    }
    return pcover::Graph(n, edges);
}

/// All connected graphs with 2..5 vertices, then `per_size` random ones for
/// each of 6, 7, 8 vertices.
inline std::vector<pcover::Graph> small_graph_corpus(std::size_t per_size = 40, std::uint64_t seed = 7) {
    std::vector<pcover::Graph> out;
    for (std::size_t n = 2; n <= 5; ++n) {
        auto part = all_connected_graphs(n);
        out.insert(out.end(), part.begin(), part.end());
    }
    std::mt19937_64 rng(seed);
    for (std::size_t n = 6; n <= 8; ++n) {
        for (std::size_t i = 0; i < per_size; ++i) {
            const double p = std::uniform_real_distribution<double>(0.0, 0.6)(rng);
            out.push_back(random_connected_graph(n, p, rng));
        }
    }
    return out;
}

/// Stacked triangulation: start from a triangle and repeatedly insert a
/// vertex into a uniformly chosen face. Returns the edge list.
inline std::vector<pcover::Edge> random_stacked_triangulation(std::size_t n, std::mt19937_64& rng) {
    std::vector<pcover::Edge> edges{{0, 1}, {1, 2}, {0, 2}};
    std::vector<std::array<int, 3>> faces{{0, 1, 2}, {0, 1, 2}};
    for (int v = 3; v < static_cast<int>(n); ++v) {
        const auto i = std::uniform_int_distribution<std::size_t>(0, faces.size() - 1)(rng);
        const auto f = faces[i];
        for (int c : f) edges.push_back({c, v});
        faces[i] = {f[0], f[1], v};
        faces.push_back({f[1], f[2], v});
        faces.push_back({f[0], f[2], v});
    }
    return edges;
}

/// Connected planar graph: a stacked triangulation with random edges
/// removed while connectivity is kept.
inline std::vector<pcover::Edge> random_planar_edges(std::size_t n, double keep, std::mt19937_64& rng) {
    auto edges = random_stacked_triangulation(n, rng);
    std::shuffle(edges.begin(), edges.end(), rng);
    std::bernoulli_distribution drop(1.0 - keep);
    for (std::size_t i = 0; i < edges.size();) {
        if (drop(rng)) {
            auto trial = edges;
            trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
            if (connected(n, trial)) {
                edges = std::move(trial);
                continue;
            }
        }
        ++i;
    }
    return edges;
}

}  // namespace oracle
