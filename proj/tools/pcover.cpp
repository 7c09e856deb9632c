#include "pcover/electrical.hpp"
#include "pcover/error.hpp"
#include "pcover/experiments.hpp"
#include "pcover/generators.hpp"
#include "pcover/io.hpp"
#include "pcover/packing.hpp"
#include "pcover/separation.hpp"
#include "pcover/triangulation.hpp"
#include "pcover/version.hpp"
#include "pcover/walks.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace pcover;

namespace {

enum ExitCode { exit_pass = 0, exit_assertion = 1, exit_usage = 2, exit_numerical = 3 };

struct Options {
    std::string graph;
    std::string packing;
    std::string family = "grid";
    std::string sizes;
    std::string out;
    std::string outer;
    std::string pairs;
    std::string subset;
    std::string members;
    long trials = 10'000;
    std::uint64_t seed = 0;
    double tol = 0.0;
    double solver_tol = 1e-10;
    double packing_tol = 1e-10;
    double s = 1.0 / 6.0;
    double threshold = 0.0;
    double r_min = 0.01;
    long max_sweeps = 1'000'000;
    int start = -1;
    int target = 0;
    unsigned workers = 0;
    bool triangulate = false;
    bool all_pairs = false;
};

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(o.out, std::ios::binary);
    if (!file) {
        throw Error(Errc::invalid_argument, "cannot write " + o.out);
    }
    file << text;
}

std::string json_text(const Json& doc) { return doc.dump(2) + "\n"; }

Vertex checked_vertex(const Graph& g, long v, const char* what) {
    if (v < 0 || static_cast<std::size_t>(v) >= g.vertex_count()) {
        throw Error(Errc::invalid_argument, std::string(what) + " " + std::to_string(v) + " out of range");
    }
    return static_cast<Vertex>(v);
}

std::vector<Vertex> vertex_list(const Graph& g, const std::string& text) {
    std::vector<Vertex> out;
    if (text == "all") {
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
            out.push_back(static_cast<Vertex>(v));
        }
        return out;
    }
    for (int v : parse_int_list(text)) {
        out.push_back(checked_vertex(g, v, "vertex"));
    }
    return out;
}

ExperimentSpec experiment(const Options& o) {
    ExperimentSpec spec;
    spec.family = parse_family(o.family);
    spec.sizes = parse_int_list(o.sizes);
    spec.trials = o.trials;
    spec.seed = o.seed;
    spec.tol = o.solver_tol;
    spec.packing_tol = o.packing_tol;
    spec.s = o.s;
    spec.r_min = o.r_min;
    spec.workers = o.workers;
    spec.validate();
    return spec;
}

int run_gen(const Options& o) {
    const auto sizes = parse_int_list(o.sizes);
    if (sizes.size() != 1) {
        throw Error(Errc::invalid_argument, "gen takes exactly one size");
    }
    PlanarGraph g = generate(parse_family(o.family), sizes.front());
    emit(o, json_text(graph_to_json(o.triangulate ? triangulate(g).graph : g)));
    return exit_pass;
}

int run_pack(const Options& o) {
    const Triangulation t = as_triangulation(read_graph_file(o.graph));
    Triangle outer = t.suggested_outer_face;
    if (!o.outer.empty()) {
        const auto abc = parse_int_list(o.outer);
        if (abc.size() != 3) {
            throw Error(Errc::invalid_argument, "--outer needs three vertices");
        }
        outer = {abc[0], abc[1], abc[2]};
    }
    PackingOptions options;
    options.tol = o.tol > 0.0 ? o.tol : 1e-10;
    options.max_sweeps = o.max_sweeps;
    emit(o, json_text(packing_to_json(compute_packing(t, outer, options))));
    return exit_pass;
}

int run_resist(const Options& o) {
    const PlanarGraph g = read_graph_file(o.graph);
    const double tol = o.tol > 0.0 ? o.tol : 1e-10;
    ElectricalSystem sys(g, tol);
    std::vector<std::pair<Vertex, Vertex>> pairs;
    if (o.all_pairs) {
        for (std::size_t u = 0; u < g.vertex_count(); ++u) {
            for (std::size_t v = u + 1; v < g.vertex_count(); ++v) {
                pairs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
            }
        }
    } else {
        if (o.pairs.empty()) {
            throw Error(Errc::invalid_argument, "give --pairs or --all-pairs");
        }
        std::istringstream in(o.pairs);
        std::string item;
        while (std::getline(in, item, ';')) {
            const auto uv = parse_int_list(item);
            if (uv.size() != 2) {
                throw Error(Errc::invalid_argument, "pairs are written u,v");
            }
            pairs.emplace_back(checked_vertex(g, uv[0], "vertex"), checked_vertex(g, uv[1], "vertex"));
        }
    }
    std::ostringstream out;
    out << metadata_line({{"command", "resist"}, {"tol", format_double(tol)}}) << "\nu,v,R\n";
    if (o.all_pairs) {
        const Eigen::MatrixXd r = sys.resistance_matrix();
        for (auto [u, v] : pairs) {
            out << u << ',' << v << ',' << format_double(r(u, v)) << "\n";
        }
    } else {
        for (auto [u, v] : pairs) {
            out << u << ',' << v << ',' << format_double(sys.effective_resistance(u, v)) << "\n";
        }
    }
    emit(o, out.str());
    return exit_pass;
}

int run_hit(const Options& o) {
    const PlanarGraph g = read_graph_file(o.graph);
    const double tol = o.tol > 0.0 ? o.tol : 1e-10;
    const Vertex target = checked_vertex(g, o.target, "target");
    const auto h = hitting_times_exact(g, target, tol);
    std::ostringstream out;
    out << metadata_line({{"command", "hit"}, {"target", std::to_string(target)}, {"tol", format_double(tol)}})
        << "\nu,H\n";
    for (std::size_t u = 0; u < h.size(); ++u) {
        out << u << ',' << format_double(h[u]) << "\n";
    }
    emit(o, out.str());
    return exit_pass;
}

int run_cover(const Options& o) {
    const PlanarGraph g = read_graph_file(o.graph);
    const Vertex start = checked_vertex(g, o.start < 0 ? 0 : o.start, "start");
    const auto est = simulate_cover_time(g, start, o.trials, o.seed, o.workers);
    std::ostringstream out;
    out << metadata_line({{"command", "cover"}, {"seed", std::to_string(o.seed)}}) << "\n"
        << "n,start,trials,seed,mean,std_error\n"
        << g.vertex_count() << ',' << est.start << ',' << est.trials << ',' << est.seed << ','
        << format_double(est.mean) << ',' << format_double(est.std_error) << "\n";
    emit(o, out.str());
    return exit_pass;
}

int run_matthews(const Options& o) {
    const PlanarGraph g = read_graph_file(o.graph);
    std::optional<std::vector<Vertex>> subset;
    if (!o.subset.empty()) {
        subset = vertex_list(g, o.subset);
    }
    const double tol = o.tol > 0.0 ? o.tol : 1e-10;
    const auto b = matthews_bounds(walk_times(g, tol), std::move(subset));
    std::ostringstream out;
    out << metadata_line({{"command", "matthews"}, {"tol", format_double(tol)}}) << "\n"
        << "n,subset_size,lower,upper\n"
        << g.vertex_count() << ',' << b.subset.size() << ',' << format_double(b.lower) << ','
        << format_double(b.upper) << "\n";
    emit(o, out.str());
    return exit_pass;
}

int run_select(const Options& o) {
    const PlanarGraph g = read_graph_file(o.graph);
    const CirclePacking p = read_packing_file(o.packing);
    if (p.radii.size() != g.vertex_count()) {
        throw Error(Errc::invalid_argument, "packing and graph have different vertex counts");
    }
    const auto w = vertex_list(g, o.subset.empty() ? "all" : o.subset);
    const SeparatedSet sel = select_separated(p, g, w, {o.s, o.solver_tol});
    Json doc;
    doc["meta"] = {{"tool", "pcover"}, {"version", version}, {"command", "select"}, {"s", o.s},
                   {"tol", o.solver_tol}};
    doc["selection"] = selection_to_json(sel);
    emit(o, json_text(doc));
    return exit_pass;
}

int run_verify(const Options& o) {
    if (!o.graph.empty()) {
        const PlanarGraph g = read_graph_file(o.graph);
        if (o.members.empty()) {
            throw Error(Errc::invalid_argument, "verify --graph needs --members");
        }
        const auto members = vertex_list(g, o.members);
        const auto rep = verify_separation(g, members, o.threshold, o.solver_tol);
        Json doc;
        doc["meta"] = {{"tool", "pcover"}, {"version", version}, {"command", "verify"}, {"tol", o.solver_tol}};
        doc["members"] = members;
        doc["threshold"] = rep.threshold;
        doc["min_resistance"] = rep.min_resistance;
        doc["argmin"] = {rep.argmin_u, rep.argmin_v};
        doc["passed"] = rep.passed;
        emit(o, json_text(doc));
        return rep.passed ? exit_pass : exit_assertion;
    }
    const SelectionReport report = run_selection_pipeline(experiment(o));
    emit(o, json_text(report.to_json()));
    return report.passed() ? exit_pass : exit_assertion;
}

int run_suite(const Options& o) {
    const double tol = o.tol > 0.0 ? o.tol : 1e-7;
    std::vector<IdentityReport> reports;
    if (!o.graph.empty()) {
        reports.push_back(run_identity_suite(read_graph_file(o.graph), o.graph, tol, o.solver_tol, o.seed));
    } else {
        const ExperimentSpec spec = experiment(o);
        for (int size : spec.sizes) {
            const std::string name = std::string(to_string(spec.family)) + "(" + std::to_string(size) + ")";
            reports.push_back(run_identity_suite(generate(spec.family, size), name, tol, o.solver_tol, o.seed));
        }
    }
    emit(o, identity_csv(reports, tol, o.seed));
    const bool ok = std::all_of(reports.begin(), reports.end(), [](const IdentityReport& r) { return r.passed(); });
    return ok ? exit_pass : exit_assertion;
}

int run_scaling_command(const Options& o) {
    const ScalingReport report = run_scaling(experiment(o));
    emit(o, report.to_csv());
    return report.passed() ? exit_pass : exit_assertion;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Random-walk cover times, resistances and circle packings of planar graphs"};
    app.set_version_flag("--version", std::string(version));
    app.require_subcommand(1);
    Options o;
    std::function<int(const Options&)> action;

    auto graph_opt = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--graph", o.graph, "Graph JSON file");
        if (required) {
            opt->required();
        }
    };
    auto out_opt = [&](CLI::App* sub) { sub->add_option("--out", o.out, "Output file (default stdout)"); };
    auto family_opts = [&](CLI::App* sub) {
        sub->add_option("--family", o.family, "path, cycle, grid or binary_tree")->capture_default_str();
        sub->add_option("--sizes", o.sizes, "Comma-separated size parameters, ascending");
    };
    auto solver_opt = [&](CLI::App* sub) {
        sub->add_option("--solver-tol", o.solver_tol, "Relative residual for linear solves")->capture_default_str();
    };

    auto* gen = app.add_subcommand("gen", "Generate a family graph");
    family_opts(gen);
    gen->get_option("--sizes")->required();
    gen->add_flag("--triangulate", o.triangulate, "Complete to a triangulation");
    out_opt(gen);
    gen->callback([&] { action = run_gen; });

    auto* pack = app.add_subcommand("pack", "Circle packing of a triangulation");
    graph_opt(pack, true);
    pack->add_option("--outer", o.outer, "Outer face a,b,c (default: a central face)");
    pack->add_option("--tol", o.tol, "Angle-sum tolerance (default 1e-10)");
    pack->add_option("--max-sweeps", o.max_sweeps, "Iteration cap")->capture_default_str();
    out_opt(pack);
    pack->callback([&] { action = run_pack; });

    auto* resist = app.add_subcommand("resist", "Effective resistances");
    graph_opt(resist, true);
    resist->add_option("--pairs", o.pairs, "u1,v1;u2,v2;...");
    resist->add_flag("--all-pairs", o.all_pairs, "Every pair u < v");
    resist->add_option("--tol", o.tol, "Relative residual (default 1e-10)");
    out_opt(resist);
    resist->callback([&] { action = run_resist; });

    auto* hit = app.add_subcommand("hit", "Exact hitting times to a target");
    graph_opt(hit, true);
    hit->add_option("--target", o.target, "Target vertex")->required();
    hit->add_option("--tol", o.tol, "Relative residual (default 1e-10)");
    out_opt(hit);
    hit->callback([&] { action = run_hit; });

    auto* cover = app.add_subcommand("cover", "Monte Carlo cover time");
    graph_opt(cover, true);
    cover->add_option("--start", o.start, "Start vertex (default 0)");
    cover->add_option("--trials", o.trials, "Number of walks")->capture_default_str();
    cover->add_option("--seed", o.seed, "Base seed")->capture_default_str();
    cover->add_option("--workers", o.workers, "Threads (0 = hardware); output does not depend on it");
    out_opt(cover);
    cover->callback([&] { action = run_cover; });

    auto* matthews = app.add_subcommand("matthews", "Matthews cover-time bounds");
    graph_opt(matthews, true);
    matthews->add_option("--subset", o.subset, "Vertices for the lower bound (default all)");
    matthews->add_option("--tol", o.tol, "Relative residual (default 1e-10)");
    out_opt(matthews);
    matthews->callback([&] { action = run_matthews; });

    auto* select = app.add_subcommand("select", "Well-separated subset from a packing");
    graph_opt(select, true);
    select->add_option("--packing", o.packing, "Packing JSON file")->required();
    select->add_option("--subset", o.subset, "all or v1,v2,...")->capture_default_str();
    select->add_option("--s", o.s, "Bin exponent in (0, 1/5)")->capture_default_str();
    solver_opt(select);
    out_opt(select);
    select->callback([&] { action = run_select; });

    auto* verify = app.add_subcommand("verify", "Check pairwise resistances, or run the selection pipeline");
    graph_opt(verify, false);
    verify->add_option("--members", o.members, "Vertices to check (with --graph)");
    verify->add_option("--threshold", o.threshold, "Required minimum resistance (with --graph)");
    family_opts(verify);
    verify->add_option("--s", o.s, "Bin exponent in (0, 1/5)")->capture_default_str();
    verify->add_option("--r-min", o.r_min, "Pipeline threshold factor on log|W|")->capture_default_str();
    verify->add_option("--packing-tol", o.packing_tol, "Angle-sum tolerance")->capture_default_str();
    solver_opt(verify);
    out_opt(verify);
    verify->callback([&] { action = run_verify; });

    auto* suite = app.add_subcommand("suite", "Identity checks on a graph or family");
    graph_opt(suite, false);
    family_opts(suite);
    suite->add_option("--tol", o.tol, "Allowed violation (default 1e-7)");
    suite->add_option("--seed", o.seed, "Seed for sampled triples")->capture_default_str();
    solver_opt(suite);
    out_opt(suite);
    suite->callback([&] { action = run_suite; });

    auto* scaling = app.add_subcommand("scaling", "Cover-time scaling over a family");
    family_opts(scaling);
    scaling->get_option("--sizes")->required();
    scaling->add_option("--trials", o.trials, "Walks per size")->capture_default_str();
    scaling->add_option("--seed", o.seed, "Base seed")->capture_default_str();
    scaling->add_option("--workers", o.workers, "Threads (0 = hardware); output does not depend on it");
    scaling->add_option("--tol", o.solver_tol, "Relative residual for linear solves")->capture_default_str();
    out_opt(scaling);
    scaling->callback([&] { action = run_scaling_command; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_pass : exit_usage;
    }
    try {
        return action(o);
    } catch (const Error& e) {
        std::cerr << "pcover: " << e.what() << "\n";
        return is_numerical(e.code()) ? exit_numerical : exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "pcover: " << e.what() << "\n";
        return exit_usage;
    }
}
