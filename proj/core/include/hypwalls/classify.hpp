#pragma once

#include <vector>

#include "hypwalls/walls.hpp"

namespace hypwalls {

enum class IsometryKind { Identity, Elliptic, Parabolic, Hyperbolic, Loxodromic };

struct IsometryClass {
    IsometryKind kind = IsometryKind::Identity;
    // True when |tr| fell inside the parabolic tolerance band without being exact.
    bool marginal = false;
    // Power at which the geometric classifier found a disjoint pair (1 when
    // trace-based or decided at the first power).
    int n_used = 1;
};

const char* to_string(IsometryKind kind);

// Trace classification: Identity for +-I; Parabolic for real trace with
// ||tr|-2| <= tol; Elliptic/Hyperbolic for real trace below/above; Loxodromic
// for non-real trace.
IsometryClass classify_trace(const MoebiusMatrix& m, double tol = tolerance());

// Boundary fixed points: roots of c z^2 + (d-a) z - b = 0, with infinity when
// c = 0. Parabolic elements report the single point (a-d)/(2c).
std::vector<BoundaryPoint> fixed_points(const MoebiusMatrix& m, double tol = tolerance());

struct WallRelation {
    enum class Kind { Tangent, Disjoint, CircleIntersection } kind = Kind::Disjoint;
    // Tangency point on the boundary of H^3 (C u {infinity}).
    BoundaryPoint tangent_at{};
};

// Relative position of Sigma_{Psi(gamma)} and Sigma_{Psi(gamma^{-1})}:
// tangent for parabolic (at the fixed point), disjoint for hyperbolic, a
// circle through both fixed points for elliptic.
WallRelation wall_relation(const MoebiusMatrix& m, double tol = tolerance());

// Classification by the relative position of the walls of gamma^n and
// gamma^{-n}; agrees with classify_trace wherever both are defined. Throws
// InconclusiveError when max_power is exhausted without a verdict.
IsometryClass classify_geometric(const MoebiusMatrix& m, int max_power = 64,
                                 double tol = tolerance());

// cos of the rotation angle of an elliptic gamma with c = 0 around its
// vertical axis, Re(a^2)/|a|^2. The paper states the quantity without naming
// it an angle or a cosine; it is exposed as a cosine.
double elliptic_rotation_cosine(const MoebiusMatrix& m);

}  // namespace hypwalls
