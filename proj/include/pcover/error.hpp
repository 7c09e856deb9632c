#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pcover {

enum class Errc {
    invalid_argument,
    non_planar,
    disconnected,
    multi_edge_or_loop,
    size_too_small,
    too_small,
    not_a_triangulation,
    not_a_face,
    no_convergence,
    solve_failure,
    same_vertex,
    zero_energy,
    coincident_centers,
    subset_too_small,
    empty_w,
};

std::string_view to_string(Errc code);

/// Numerical failures (solver residual too large, iteration cap reached) as
/// opposed to bad input.
constexpr bool is_numerical(Errc code) {
    return code == Errc::no_convergence || code == Errc::solve_failure;
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace pcover
