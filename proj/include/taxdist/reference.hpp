#pragma once

#include <string>
#include <vector>

#include "taxdist/matrix.hpp"

namespace taxdist::reference {

// Small worked configurations with hand-verifiable distance matrices.

/// Origin plus an equilateral triangle on the radius-2 circle, one vertex at (2, 0).
DataMatrix triangle_with_center();
/// The triangle alone: (2, 0), (-1, sqrt 3), (-1, -sqrt 3).
DataMatrix triangle();
/// Origin plus the vertices of the edge-2 axis-aligned square.
DataMatrix square_with_center();
/// [[2, 50], [5, 20], [1, 10]]; its first column has nearest neighbors disjoint from the full matrix's.
DataMatrix flipping_pair();
/// [[1, 0], [0, 0], [0, 1]].
DataMatrix unit_corner();
/// Single column [1, 2, 3].
DataMatrix line_three();
/// [[1, 1], [2, 0], [3, 0]].
DataMatrix line_three_lifted();

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Runs the built-in worked-example checks (used by the `verify` subcommand).
std::vector<Check> run_checks();

} // namespace taxdist::reference
