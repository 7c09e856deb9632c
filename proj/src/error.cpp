#include "pcover/error.hpp"

namespace pcover {

std::string_view to_string(Errc code) {
    switch (code) {
        case Errc::invalid_argument: return "InvalidArgument";
        case Errc::non_planar: return "NonPlanar";
        case Errc::disconnected: return "Disconnected";
        case Errc::multi_edge_or_loop: return "MultiEdgeOrLoop";
        case Errc::size_too_small: return "SizeTooSmall";
        case Errc::too_small: return "TooSmall";
        case Errc::not_a_triangulation: return "NotATriangulation";
        case Errc::not_a_face: return "NotAFace";
        case Errc::no_convergence: return "NoConvergence";
        case Errc::solve_failure: return "SolveFailure";
        case Errc::same_vertex: return "SameVertex";
        case Errc::zero_energy: return "ZeroEnergy";
        case Errc::coincident_centers: return "CoincidentCenters";
        case Errc::subset_too_small: return "SubsetTooSmall";
        case Errc::empty_w: return "EmptyW";
    }
    return "Unknown";
}

}  // namespace pcover
