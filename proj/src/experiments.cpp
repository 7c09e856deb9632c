#include "pcover/experiments.hpp"

#include "pcover/electrical.hpp"
#include "pcover/error.hpp"
#include "pcover/packing.hpp"
#include "pcover/triangulation.hpp"
#include "pcover/version.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace pcover {

void ExperimentSpec::validate() const {
    if (sizes.empty()) {
        throw Error(Errc::invalid_argument, "no sizes given");
    }
    for (std::size_t i = 1; i < sizes.size(); ++i) {
        if (sizes[i] <= sizes[i - 1]) {
            throw Error(Errc::invalid_argument, "sizes must be strictly ascending");
        }
    }
    if (trials < 1) {
        throw Error(Errc::invalid_argument, "trials must be at least 1");
    }
    if (!(tol > 0.0) || !(packing_tol > 0.0)) {
        throw Error(Errc::invalid_argument, "tolerances must be positive");
    }
    if (!(s > 0.0 && s < 0.2)) {
        throw Error(Errc::invalid_argument, "s must lie in (0, 1/5)");
    }
}

std::string metadata_line(const std::vector<std::pair<std::string, std::string>>& fields) {
    std::string line = "# pcover " + std::string(version);
    for (const auto& [key, value] : fields) {
        line += " " + key + "=" + value;
    }
    return line;
}

Vertex default_start(Family family, int size) {
    return family == Family::grid ? grid_vertex(size, 0, 0) : 0;
}

namespace {

const char* flag(bool b) { return b ? "true" : "false"; }

bool is_path_like(Family family) { return family == Family::path; }

}  // namespace

bool ScalingReport::passed() const {
    return window <= window_limit && std::all_of(rows.begin(), rows.end(), [](const ScalingRow& r) {
               return r.upper_ok && r.matthews_ok;
           });
}

std::string ScalingReport::to_csv() const {
    std::ostringstream out;
    out << metadata_line({{"command", "scaling"},
                          {"family", std::string(to_string(spec.family))},
                          {"trials", std::to_string(spec.trials)},
                          {"seed", std::to_string(spec.seed)},
                          {"tol", format_double(spec.tol)}})
        << "\n";
    out << "size,n,edges,start,trials,mean,std_error,n_log2n,six_n2,degree_bound,matthews_lower,"
           "matthews_upper,ratio_n_log2n,ratio_n2,upper_ok,matthews_ok\n";
    for (const ScalingRow& r : rows) {
        out << r.size << ',' << r.n << ',' << r.edges << ',' << r.start << ',' << spec.trials << ','
            << format_double(r.mean) << ',' << format_double(r.std_error) << ',' << format_double(r.n_log2) << ','
            << format_double(r.six_n2) << ',' << format_double(r.degree_bound) << ','
            << format_double(r.matthews_lower) << ',' << format_double(r.matthews_upper) << ','
            << format_double(r.ratio_n_log2) << ',' << format_double(r.ratio_n2) << ',' << flag(r.upper_ok) << ','
            << flag(r.matthews_ok) << "\n";
    }
    out << "# window=" << format_double(window) << " window_limit=" << format_double(window_limit)
        << " passed=" << flag(passed()) << "\n";
    return out.str();
}

ScalingReport run_scaling(const ExperimentSpec& spec) {
    spec.validate();
    ScalingReport report;
    report.spec = spec;
    report.window_limit = is_path_like(spec.family) ? 2.0 : 3.0;
    for (int size : spec.sizes) {
        const PlanarGraph g = generate(spec.family, size);
        ScalingRow row;
        row.size = size;
        row.n = g.vertex_count();
        row.edges = g.edge_count();
        row.start = default_start(spec.family, size);
        const auto est = simulate_cover_time(g, row.start, spec.trials, spec.seed, spec.workers);
        row.mean = est.mean;
        row.std_error = est.std_error;
        const auto n = static_cast<double>(row.n);
        const double log_n = std::log(n);
        row.n_log2 = n * log_n * log_n;
        row.six_n2 = 6.0 * n * n;
        row.degree_bound = planar_upper_bound_check(g).bound;
        if (row.n >= 2) {
            const auto bounds = matthews_bounds(walk_times(g, spec.tol));
            row.matthews_lower = bounds.lower;
            row.matthews_upper = bounds.upper;
        }
        row.ratio_n_log2 = row.n_log2 > 0.0 ? row.mean / row.n_log2 : 0.0;
        row.ratio_n2 = row.mean / (n * n);
        row.upper_ok = row.mean < row.six_n2 && row.mean < row.degree_bound + 3.0 * row.std_error;
        row.matthews_ok = row.mean >= row.matthews_lower - 3.0 * row.std_error &&
                          row.mean <= row.matthews_upper + 3.0 * row.std_error;
        report.rows.push_back(row);
    }
    double lo = INFINITY;
    double hi = 0.0;
    for (const ScalingRow& r : report.rows) {
        const double ratio = is_path_like(spec.family) ? r.ratio_n2 : r.ratio_n_log2;
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    }
    report.window = lo > 0.0 ? hi / lo : INFINITY;
    return report;
}

SelectionRow run_selection(const PlanarGraph& g, const ExperimentSpec& spec, int size) {
    SelectionRow row;
    row.size = size;
    row.n = g.vertex_count();
    const Triangulation t = triangulate(g);
    row.triangulated_n = t.graph.vertex_count();
    row.max_degree = t.max_degree;
    row.outer_face = t.suggested_outer_face;
    PackingOptions options;
    options.tol = spec.packing_tol;
    const CirclePacking p = compute_packing(t, t.suggested_outer_face, options);
    row.packing_residual = p.residual;

    std::vector<Vertex> w(t.original_vertex_count);
    for (std::size_t v = 0; v < w.size(); ++v) {
        w[v] = static_cast<Vertex>(v);
    }
    row.selection = select_separated(p, t.graph, w, {spec.s, spec.tol});
    const auto w_size = static_cast<double>(w.size());
    row.size_floor = std::pow(w_size, 1.0 - 5.0 * spec.s) / 2.0;
    row.threshold = spec.r_min * std::log(w_size);
    const bool large_enough = static_cast<double>(row.selection.members.size()) >= row.size_floor;
    if (row.selection.members.size() >= 2) {
        row.verification = verify_separation(t.graph, row.selection.members, row.threshold, spec.tol);
        row.passed = large_enough && row.verification->passed;
    } else {
        row.passed = large_enough;
    }
    return row;
}

bool SelectionReport::passed() const {
    return std::all_of(rows.begin(), rows.end(), [](const SelectionRow& r) { return r.passed; });
}

namespace {

Json optional_number(const std::optional<double>& x) { return x ? Json(*x) : Json(nullptr); }

Json bins_json(const RadiusBins& bins) {
    Json out = Json::object();
    for (const auto& [j, members] : bins) {
        out[std::to_string(j)] = members;
    }
    return out;
}

}  // namespace

Json selection_to_json(const SeparatedSet& sel) {
    Json doc;
    doc["source_size"] = sel.source_size;
    doc["bins"] = bins_json(sel.bins);
    doc["parity"] = sel.parity == Parity::even ? "even" : "odd";
    doc["selected"] = bins_json(sel.selected);
    doc["members"] = sel.members;
    doc["empirical_c"] = optional_number(sel.empirical_c);
    doc["empirical_r"] = optional_number(sel.empirical_r);
    doc["min_resistance"] = optional_number(sel.min_resistance);
    doc["ring_ratio"] = sel.ring_ratio;
    doc["gap_premise"] = sel.gap_premise;
    doc["gap_violations"] = sel.gap_violations;
    return doc;
}

Json SelectionReport::to_json() const {
    Json doc;
    doc["meta"] = {{"tool", "pcover"},
                   {"version", version},
                   {"command", "verify"},
                   {"family", to_string(spec.family)},
                   {"sizes", spec.sizes},
                   {"s", spec.s},
                   {"r_min", spec.r_min},
                   {"tol", spec.tol},
                   {"packing_tol", spec.packing_tol},
                   {"seed", spec.seed}};
    Json rows_json = Json::array();
    for (const SelectionRow& r : rows) {
        Json row;
        row["size"] = r.size;
        row["n"] = r.n;
        row["triangulated_n"] = r.triangulated_n;
        row["max_degree"] = r.max_degree;
        row["outer_face"] = r.outer_face;
        row["packing_residual"] = r.packing_residual;
        row["size_floor"] = r.size_floor;
        row["selection"] = selection_to_json(r.selection);
        row["threshold"] = r.threshold;
        if (r.verification) {
            row["verification"] = {{"min_resistance", r.verification->min_resistance},
                                   {"argmin", {r.verification->argmin_u, r.verification->argmin_v}},
                                   {"passed", r.verification->passed}};
        } else {
            row["verification"] = nullptr;
        }
        row["passed"] = r.passed;
        rows_json.push_back(std::move(row));
    }
    doc["rows"] = std::move(rows_json);
    doc["passed"] = passed();
    return doc;
}

SelectionReport run_selection_pipeline(const ExperimentSpec& spec) {
    spec.validate();
    SelectionReport report;
    report.spec = spec;
    for (int size : spec.sizes) {
        report.rows.push_back(run_selection(generate(spec.family, size), spec, size));
    }
    return report;
}

bool IdentityReport::passed() const {
    return std::all_of(results.begin(), results.end(), [](const IdentityResult& r) { return r.passed; });
}

IdentityReport run_identity_suite(const Graph& g, std::string instance, double tol, double solver_tol,
                                  std::uint64_t seed, std::size_t exhaustive_limit, std::size_t samples) {
    IdentityReport report;
    report.instance = std::move(instance);
    report.n = g.vertex_count();
    const std::size_t n = g.vertex_count();
    IdentityResult commute{"commute_resistance"};
    IdentityResult additivity{"difference_additivity"};
    IdentityResult tetali{"tetali_hitting"};
    IdentityResult triangle{"resistance_triangle"};
    IdentityResult ordering{"difference_ordering"};

    if (n >= 2) {
        const WalkTimes times = walk_times(g, solver_tol);
        const Eigen::MatrixXd r = ElectricalSystem(g, solver_tol).resistance_matrix();
        const auto two_m = 2.0 * static_cast<double>(g.edge_count());

        auto check_pair = [&](Vertex u, Vertex v) {
            commute.max_violation =
                std::max(commute.max_violation, std::abs(times.commute(u, v) - two_m * r(u, v)));
            ++commute.checked;
            tetali.max_violation =
                std::max(tetali.max_violation, std::abs(times.hitting(u, v) - hitting_via_tetali(g, r, u, v)));
            ++tetali.checked;
        };
        auto check_triple = [&](Vertex u, Vertex v, Vertex w) {
            const double d = times.difference(u, v) + times.difference(v, w) - times.difference(u, w);
            additivity.max_violation = std::max(additivity.max_violation, std::abs(d));
            ++additivity.checked;
            triangle.max_violation = std::max(triangle.max_violation, r(u, w) - r(u, v) - r(v, w));
            ++triangle.checked;
        };

        report.exhaustive = n <= exhaustive_limit;
        if (report.exhaustive) {
            for (std::size_t u = 0; u < n; ++u) {
                for (std::size_t v = 0; v < n; ++v) {
                    if (u != v) {
                        check_pair(static_cast<Vertex>(u), static_cast<Vertex>(v));
                    }
                    for (std::size_t w = 0; w < n; ++w) {
                        check_triple(static_cast<Vertex>(u), static_cast<Vertex>(v), static_cast<Vertex>(w));
                    }
                }
            }
        } else {
            std::mt19937_64 rng(seed);
            std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
            for (std::size_t i = 0; i < samples; ++i) {
                const Vertex u = pick(rng);
                const Vertex v = pick(rng);
                const Vertex w = pick(rng);
                if (u != v) {
                    check_pair(u, v);
                }
                check_triple(u, v, w);
            }
        }
        const DifferenceOrdering ord = difference_ordering(times, 0, tol);
        ordering.max_violation = ord.max_violation;
        ordering.checked = n * (n - 1) / 2;
    }
    for (IdentityResult* res : {&commute, &additivity, &tetali, &triangle, &ordering}) {
        res->max_violation = std::max(res->max_violation, 0.0);
        res->passed = res->max_violation <= tol;
        report.results.push_back(*res);
    }
    return report;
}

std::string identity_csv(const std::vector<IdentityReport>& reports, double tol, std::uint64_t seed) {
    std::ostringstream out;
    out << metadata_line({{"command", "suite"}, {"tol", format_double(tol)}, {"seed", std::to_string(seed)}})
        << "\n";
    out << "instance,n,identity,exhaustive,checked,max_violation,pass\n";
    for (const IdentityReport& rep : reports) {
        for (const IdentityResult& r : rep.results) {
            out << rep.instance << ',' << rep.n << ',' << r.name << ',' << flag(rep.exhaustive) << ','
                << r.checked << ',' << format_double(r.max_violation) << ',' << flag(r.passed) << "\n";
        }
    }
    return out.str();
}

}  // namespace pcover
