#pragma once

namespace hypwalk {

/// Comparison tolerance for plane-model geometry; tree arithmetic is exact.
inline constexpr double kGeomTol = 1e-9;

/// Permitted |det - 1| after renormalization.
inline constexpr double kDetTol = 1e-9;

/// Determinant drift beyond this (before renormalization) is treated as
/// numeric degradation rather than roundoff.
inline constexpr double kDetDriftMax = 1e-6;

/// Plane certificates must clear the criterion by at least this much, so
/// float noise can never flip a borderline certificate to sound.
inline constexpr double kMarginTol = 1e-6;

/// Equality tolerance used when deduplicating measure support elements.
inline constexpr double kElementEqTol = 1e-12;

}  // namespace hypwalk
