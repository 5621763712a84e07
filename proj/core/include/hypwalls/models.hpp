#pragma once

#include <array>
#include <iosfwd>
#include <optional>

#include "hypwalls/quat.hpp"

namespace hypwalls {

// Group element of SL(2,C) acting on upper half-space H^3 = {z + rj : r > 0}.
// det = 1 is enforced at construction and the projective sign is canonicalized
// (first nonzero entry gets nonnegative real part; ties broken by imaginary part),
// so values compare deterministically under PSL semantics.
class MoebiusMatrix {
  public:
    MoebiusMatrix() : a_(1), b_(0), c_(0), d_(1) {}
    MoebiusMatrix(Complex a, Complex b, Complex c, Complex d, double tol = tolerance());

    Complex a() const { return a_; }
    Complex b() const { return b_; }
    Complex c() const { return c_; }
    Complex d() const { return d_; }

    Complex trace() const { return a_ + d_; }
    // |a|^2+|b|^2+|c|^2+|d|^2; always >= 2, with equality exactly on SU(2).
    double normsq() const;

    MoebiusMatrix inverse() const { return {d_, -b_, -c_, a_}; }
    MoebiusMatrix operator*(const MoebiusMatrix& o) const {
        return {a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_,
                c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_};
    }

    bool is_identity(double tol = tolerance()) const;
    // Projective comparison (signs are canonical, so entrywise).
    bool approx_equal(const MoebiusMatrix& o, double tol = tolerance()) const;

  private:
    Complex a_, b_, c_, d_;
};

std::ostream& operator<<(std::ostream& os, const MoebiusMatrix& m);

// Element of SB_2(H): [[A, C'], [C, A']] with A*conj(A) - C*conj(C) = 1.
struct SBMatrix {
    Quaternion A;
    Quaternion C;

    double normsq() const { return 2.0 * (A.normsq() + C.normsq()); }
    SBMatrix inverse() const { return {quat_conj(A), -quat_star(C)}; }
};

SBMatrix sb_mul(const SBMatrix& f, const SBMatrix& g);

// Interior point z + rj of H^3.
struct HalfSpacePoint {
    Complex z;
    double r = 1.0;

    HalfSpacePoint() = default;
    HalfSpacePoint(Complex z_, double r_);
    Quaternion quaternion() const { return Quaternion::from_complex(z, r); }
};

// Point of the boundary C u {infinity} of H^3.
struct BoundaryPoint {
    bool infinity = false;
    Complex z{};

    static BoundaryPoint inf() { return {true, {}}; }
    static BoundaryPoint at(Complex z) { return {false, z}; }
};

// Interior point of the ball model: quaternion in C + Rj with norm < 1.
struct BallPoint {
    Quaternion p;

    BallPoint() = default;
    explicit BallPoint(const Quaternion& q);
};

// Point of S^2, the boundary of the ball model.
struct BallBoundaryPoint {
    Quaternion p;  // norm 1, zero k part
};

// Action of SL(2,C) on H^3 by P |-> (aP+b)(cP+d)^{-1}, evaluated via the
// explicit closed form for z + rj.
HalfSpacePoint act_half_space(const MoebiusMatrix& m, const HalfSpacePoint& P);

// Same action evaluated directly in the quaternions; test oracle for the closed form.
HalfSpacePoint act_half_space_quaternion(const MoebiusMatrix& m, const HalfSpacePoint& P);

// Moebius action on the boundary C u {infinity}.
BoundaryPoint act_boundary(const MoebiusMatrix& m, const BoundaryPoint& p);

// Psi : SL(2,C) -> SB_2(H), the entrywise form of conj(g)*gamma*g.
SBMatrix psi(const MoebiusMatrix& m);

// Ball action Q |-> (AQ + C')(CQ + A')^{-1}.
BallPoint act_ball(const SBMatrix& f, const BallPoint& Q);

// Extended evaluation of the same Moebius map at any quaternion of C + Rj or
// at infinity (used for boundary points, inverse points and wall centers).
// Returns nullopt for the pole (which maps to infinity).
std::optional<Quaternion> act_ball_extended(const SBMatrix& f, const Quaternion& Q);
Quaternion act_ball_at_infinity(const SBMatrix& f);
BallBoundaryPoint act_ball_boundary(const SBMatrix& f, const BallBoundaryPoint& p);

// eta0 : H^3 -> B^3, P |-> (P - j)(-jP + 1)^{-1}; maps j to 0, 0 to -j, infinity to j.
BallPoint eta0(const HalfSpacePoint& P);
BallBoundaryPoint eta0(const BoundaryPoint& p);
HalfSpacePoint eta0_inv(const BallPoint& Q);
BoundaryPoint eta0_inv(const BallBoundaryPoint& q);

// True iff ||gamma||^2 - 2 < tol, equivalently gamma(j) = j.
bool is_su2(const MoebiusMatrix& m, double tol = tolerance());

// cosh rho(P,P') = 1 + d(P,P')^2 / (2 r r').
double hyperbolic_distance(const HalfSpacePoint& P, const HalfSpacePoint& Q);

// Ball metric: rho(0,u) = ln((1+|u|)/(1-|u|)) and the general two-point form.
double ball_distance_from_origin(const BallPoint& u);
double ball_distance(const BallPoint& u, const BallPoint& v);

inline BoundaryPoint mobius_fixed_infinity() { return BoundaryPoint::inf(); }

}  // namespace hypwalls
