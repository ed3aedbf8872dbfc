// tolerances.hpp — Centralized numerical tolerances

#pragma once

namespace framequant::tol {

// Absolute tolerance for identities that hold exactly up to rounding
// (traces, frame expansions, multiplier algebra, ...).
inline constexpr double identity = 1e-10;

// Tolerance for results of iterative eigen/SVD solves.
inline constexpr double eigen_solve = 1e-6;

// Threshold below which a frame's lower bound counts as degenerate,
// relative to the upper bound.
inline constexpr double frame_degeneracy = 1e-12;

} // namespace framequant::tol
