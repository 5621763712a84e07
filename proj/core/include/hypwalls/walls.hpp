#pragma once

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "hypwalls/models.hpp"

namespace hypwalls {

// Euclidean hemisphere wall in the half-space model: |z - center|^2 + r^2 = radius^2.
struct SphereWall {
    Complex center;
    double radius = 1.0;
};

// Vertical plane wall: Re(conj(normal) * z) + offset = 0, |normal| = 1.
struct PlaneWall {
    Complex normal{1.0, 0.0};
    double offset = 0.0;
};

// Sphere wall in the ball model; bisectors satisfy 1 + radius^2 = |center|^2
// (orthogonality to S^2).
struct BallSphereWall {
    Quaternion center;
    double radius = 1.0;
};

using Wall = std::variant<SphereWall, PlaneWall, BallSphereWall>;

// S^2 itself, as a wall value for angle computations.
inline BallSphereWall unit_sphere_wall() { return {Quaternion{}, 1.0}; }

// Isometric sphere ISO_gamma = {P : |cz+d|^2 + |c|^2 r^2 = 1}: center -d/c, radius 1/|c|.
SphereWall isometric_sphere_half_space(const MoebiusMatrix& m, double tol = tolerance());

// Poincare bisector of the geodesic [j, gamma^{-1}(j)] in the half-space model:
// a sphere when |a|^2+|c|^2 != 1, otherwise the vertical plane
// Re(conj(v) z) + |v|^2/2 = 0 with v = conj(a) b + conj(c) d.
Wall bisector_half_space(const MoebiusMatrix& m, double tol = tolerance());

// Bisector of [0, Psi(gamma^{-1})(0)] in the ball model.
BallSphereWall bisector_ball(const MoebiusMatrix& m, double tol = tolerance());

// Psi(gamma^{-1})(0), the reflected center: the inverse point of the wall
// center with respect to S^2.
Quaternion ball_wall_inverse_point(const MoebiusMatrix& m, double tol = tolerance());

struct WallGap {
    double distance = 0.0;  // |hat(P)_gamma - P_gamma|
    bool equal = false;     // d = conj(a) within tolerance (ISO_gamma == Sigma_gamma)
};

// Distance between the isometric-sphere and bisector centers,
// |d - conj(a)| / (|c| |(|a|^2+|c|^2) - 1|). Requires c != 0 and |a|^2+|c|^2 != 1.
WallGap wall_gap(const MoebiusMatrix& m, double tol = tolerance());

// rho_gamma = 1 - sqrt((x+2)/(x-2)) + 2/sqrt(x-2) for x = ||gamma||^2 > 2;
// equals 1 + R - |P| for the matching ball wall and strictly decreases in x.
double rho_gamma(double normsq);

struct DihedralAngle {
    // Verbatim paper formula where one applies (two ball bisectors, or a wall
    // against the boundary plane); absent otherwise.
    std::optional<double> cos_paper;
    // |cos| of the angle between surface normals at a numerically located
    // intersection point.
    double cos_oracle = 0.0;
};

// Angle between two walls of the same model; throws NoIntersectionError when
// they do not meet.
DihedralAngle dihedral_angle(const Wall& w1, const Wall& w2, double tol = tolerance());

// Angle between Sigma_{Psi(gamma)} and the boundary plane pi_0 = {j-part = 0}:
// paper value | |b|^2+|d|^2-|a|^2-|c|^2 | / (2 sqrt(||gamma||^2 - 2)) plus the
// normals oracle.
DihedralAngle dihedral_angle_boundary(const MoebiusMatrix& m, double tol = tolerance());

enum class Position { On, Interior, Exterior };

// Position of 0, j or -j relative to Sigma_{Psi(gamma)}: j is on the wall iff
// |a|^2+|c|^2 = 1 and interior iff < 1; -j likewise with |b|^2+|d|^2; 0 is
// always exterior.
enum class BasePoint { Zero, PlusJ, MinusJ };
Position boundary_position(const MoebiusMatrix& m, BasePoint point, double tol = tolerance());

bool wall_equal(const Wall& w1, const Wall& w2, double tol = tolerance());

// Low-discrepancy points on a wall. Half-space samples keep r bounded away
// from 0; ball samples stay strictly inside B^3. `window` bounds plane samples.
std::vector<HalfSpacePoint> sample_wall_half_space(const Wall& w, int n, unsigned seed,
                                                   double window = 4.0, bool fuchsian = false);
std::vector<BallPoint> sample_wall_ball(const BallSphereWall& w, int n, unsigned seed);

// Unified Euclidean view used by angle computations and rendering.
struct EuclideanSphere {
    std::array<double, 3> center{};
    double radius = 1.0;
};
struct EuclideanPlane {
    std::array<double, 3> normal{};  // unit; plane is normal . x + offset = 0
    double offset = 0.0;
};
using EuclideanSurface = std::variant<EuclideanSphere, EuclideanPlane>;

EuclideanSurface wall_surface(const Wall& w);

// Signed margin, positive on the exterior side (the component containing the
// model center j resp. 0; planes through the center get the +normal side).
double wall_exterior_margin(const Wall& w, const Quaternion& point);

}  // namespace hypwalls
