#pragma once

#include "pcover/generators.hpp"
#include "pcover/io.hpp"
#include "pcover/separation.hpp"
#include "pcover/walks.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pcover {

struct ExperimentSpec {
    Family family = Family::grid;
    /// Family size parameters, strictly ascending.
    std::vector<int> sizes;
    long trials = 10'000;
    std::uint64_t seed = 0;
    /// Relative residual for linear solves.
    double tol = 1e-10;
    /// Angle-sum tolerance for packings.
    double packing_tol = 1e-10;
    double s = 1.0 / 6.0;
    /// Resistance threshold factor: verification requires R >= r_min log|W|.
    double r_min = 0.01;
    unsigned workers = 0;

    /// Throws Errc::invalid_argument.
    void validate() const;
};

struct ScalingRow {
    int size = 0;
    std::size_t n = 0;
    std::size_t edges = 0;
    Vertex start = 0;
    double mean = 0.0;
    double std_error = 0.0;
    double n_log2 = 0.0;        ///< n (ln n)^2
    double six_n2 = 0.0;        ///< 6 n^2
    double degree_bound = 0.0;  ///< average degree * n (n - 1)
    double matthews_lower = 0.0;
    double matthews_upper = 0.0;
    double ratio_n_log2 = 0.0;
    double ratio_n2 = 0.0;
    /// mean < 6n^2 and mean < degree_bound + 3 SE.
    bool upper_ok = false;
    /// mean within [lower - 3 SE, upper + 3 SE].
    bool matthews_ok = false;
};

struct ScalingReport {
    ExperimentSpec spec;
    std::vector<ScalingRow> rows;
    /// max/min of the family's scaling ratio over rows (n^2 for paths,
    /// n (ln n)^2 otherwise).
    double window = 1.0;
    /// 2 for paths, 3 otherwise.
    double window_limit = 3.0;

    bool passed() const;
    /// '#' metadata line, header, one line per row.
    std::string to_csv() const;
};

/// Start vertex used for cover-time runs: the grid center, vertex 0 otherwise.
Vertex default_start(Family family, int size);

ScalingReport run_scaling(const ExperimentSpec& spec);

struct SelectionRow {
    int size = 0;
    std::size_t n = 0;
    std::size_t triangulated_n = 0;
    std::size_t max_degree = 0;
    Triangle outer_face{};
    double packing_residual = 0.0;
    SeparatedSet selection;
    double size_floor = 0.0;  ///< |W|^{1-5s} / 2
    double threshold = 0.0;   ///< r_min log|W|
    std::optional<SeparationReport> verification;
    bool passed = false;
};

/// Triangulate, pack on the suggested outer face, select with W = original
/// vertices, verify pairwise resistances on the triangulation.
SelectionRow run_selection(const PlanarGraph& g, const ExperimentSpec& spec, int size = 0);

/// bins, parity, selected Z_j, members, empirical constants, ring ratio.
Json selection_to_json(const SeparatedSet& sel);

struct SelectionReport {
    ExperimentSpec spec;
    std::vector<SelectionRow> rows;
    bool passed() const;
    Json to_json() const;
};

SelectionReport run_selection_pipeline(const ExperimentSpec& spec);

struct IdentityResult {
    std::string name;
    double max_violation = 0.0;
    std::size_t checked = 0;
    bool passed = false;
};

struct IdentityReport {
    std::string instance;
    std::size_t n = 0;
    bool exhaustive = true;
    std::vector<IdentityResult> results;
    bool passed() const;
};

/// Commute = 2|E| R, additivity of D, hitting times from resistances, the
/// triangle inequality for R and the D-ordering. All pairs and triples when
/// n <= exhaustive_limit, sampled triples otherwise.
IdentityReport run_identity_suite(const Graph& g, std::string instance, double tol = 1e-7,
                                  double solver_tol = 1e-10, std::uint64_t seed = 0,
                                  std::size_t exhaustive_limit = 100, std::size_t samples = 20'000);

/// instance,identity,checked,max_violation,pass rows with a metadata line.
std::string identity_csv(const std::vector<IdentityReport>& reports, double tol, std::uint64_t seed);

/// "# pcover <version> key=value ..." line shared by CSV outputs.
std::string metadata_line(const std::vector<std::pair<std::string, std::string>>& fields);

}  // namespace pcover
