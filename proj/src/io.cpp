#include "pcover/io.hpp"

#include "pcover/error.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace pcover {

Json graph_to_json(const PlanarGraph& g) {
    Json edges = Json::array();
    for (const Edge& e : g.edges()) {
        edges.push_back({e.u, e.v});
    }
    Json doc;
    doc["n"] = g.vertex_count();
    doc["edges"] = std::move(edges);
    doc["rotation"] = g.rotation();
    return doc;
}

PlanarGraph graph_from_json(const Json& doc) {
    try {
        const auto n = doc.at("n").get<long>();
        if (n < 1) {
            throw Error(Errc::invalid_argument, "graph needs n >= 1");
        }
        std::vector<Edge> edges;
        for (const auto& e : doc.at("edges")) {
            if (!e.is_array() || e.size() != 2) {
                throw Error(Errc::invalid_argument, "edge entries must be [u, v]");
            }
            edges.push_back({e[0].get<Vertex>(), e[1].get<Vertex>()});
        }
        std::optional<Rotation> rotation;
        if (doc.contains("rotation") && !doc["rotation"].is_null()) {
            rotation = doc["rotation"].get<Rotation>();
        }
        return build_graph(static_cast<std::size_t>(n), edges, std::move(rotation));
    } catch (const Json::exception& e) {
        throw Error(Errc::invalid_argument, std::string("graph JSON: ") + e.what());
    }
}

Json packing_to_json(const CirclePacking& p) {
    Json centers = Json::array();
    for (const Point& z : p.centers) {
        centers.push_back({z.real(), z.imag()});
    }
    Json doc;
    doc["centers"] = std::move(centers);
    doc["radii"] = p.radii;
    doc["outer_face"] = p.outer_face;
    doc["residual"] = p.residual;
    return doc;
}

CirclePacking packing_from_json(const Json& doc) {
    try {
        CirclePacking p;
        for (const auto& c : doc.at("centers")) {
            if (!c.is_array() || c.size() != 2) {
                throw Error(Errc::invalid_argument, "centers must be [x, y] pairs");
            }
            p.centers.emplace_back(c[0].get<double>(), c[1].get<double>());
        }
        p.radii = doc.at("radii").get<std::vector<double>>();
        p.outer_face = doc.at("outer_face").get<Triangle>();
        p.residual = doc.at("residual").get<double>();
        if (p.radii.size() != p.centers.size()) {
            throw Error(Errc::invalid_argument, "centers and radii differ in length");
        }
        return p;
    } catch (const Json::exception& e) {
        throw Error(Errc::invalid_argument, std::string("packing JSON: ") + e.what());
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(Errc::invalid_argument, "cannot open " + path);
    }
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw Error(Errc::invalid_argument, path + ": " + e.what());
    }
}

PlanarGraph read_graph_file(const std::string& path) { return graph_from_json(read_json_file(path)); }

CirclePacking read_packing_file(const std::string& path) { return packing_from_json(read_json_file(path)); }

std::string format_double(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return ec == std::errc{} ? std::string(buf, end) : std::string("nan");
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        int value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
            throw Error(Errc::invalid_argument, "not an integer list: '" + text + "'");
        }
        out.push_back(value);
    }
    if (out.empty()) {
        throw Error(Errc::invalid_argument, "empty integer list");
    }
    return out;
}

}  // namespace pcover
