#include "hypwalls/models.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace hypwalls {

namespace {

double normsq(Complex v) { return std::norm(v); }

// Canonical projective sign: first nonzero entry gets re > 0, or im > 0 when
// the real part vanishes.
bool needs_flip(const std::array<Complex, 4>& e, double tol) {
    for (const Complex& v : e) {
        if (std::abs(v.real()) > tol) return v.real() < 0.0;
        if (std::abs(v.imag()) > tol) return v.imag() < 0.0;
    }
    return false;
}

}  // namespace

MoebiusMatrix::MoebiusMatrix(Complex a, Complex b, Complex c, Complex d, double tol)
    : a_(a), b_(b), c_(c), d_(d) {
    const Complex det = a_ * d_ - b_ * c_;
    if (std::abs(det - 1.0) > std::max(tol, 1e-6)) {
        std::ostringstream os;
        os << "determinant " << det.real() << (det.imag() < 0 ? "" : "+") << det.imag()
           << "i is not 1";
        throw DeterminantError(os.str());
    }
    if (needs_flip({a_, b_, c_, d_}, tol)) {
        a_ = -a_;
        b_ = -b_;
        c_ = -c_;
        d_ = -d_;
    }
}

double MoebiusMatrix::normsq() const {
    return hypwalls::normsq(a_) + hypwalls::normsq(b_) + hypwalls::normsq(c_) + hypwalls::normsq(d_);
}

bool MoebiusMatrix::is_identity(double tol) const {
    return std::abs(a_ - 1.0) <= tol && std::abs(b_) <= tol && std::abs(c_) <= tol &&
           std::abs(d_ - 1.0) <= tol;
}

bool MoebiusMatrix::approx_equal(const MoebiusMatrix& o, double tol) const {
    return std::abs(a_ - o.a_) <= tol && std::abs(b_ - o.b_) <= tol && std::abs(c_ - o.c_) <= tol &&
           std::abs(d_ - o.d_) <= tol;
}

std::ostream& operator<<(std::ostream& os, const MoebiusMatrix& m) {
    return os << "[[" << m.a() << ", " << m.b() << "], [" << m.c() << ", " << m.d() << "]]";
}

SBMatrix sb_mul(const SBMatrix& f, const SBMatrix& g) {
    // [[A1, C1'],[C1, A1']] * [[A2, C2'],[C2, A2']]
    const Quaternion A = quat_mul(f.A, g.A) + quat_mul(quat_prime(f.C), g.C);
    const Quaternion C = quat_mul(f.C, g.A) + quat_mul(quat_prime(f.A), g.C);
    return {A, C};
}

HalfSpacePoint::HalfSpacePoint(Complex z_, double r_) : z(z_), r(r_) {
    if (!(r > 0.0)) throw DomainError("half-space point requires r > 0");
}

BallPoint::BallPoint(const Quaternion& q) : p(q) {
    if (std::abs(q.z) > 1e-7) throw DomainError("ball point must lie in C + Rj");
    if (p.normsq() >= 1.0) throw DomainError("ball point must have norm < 1");
    p.z = 0.0;
}

HalfSpacePoint act_half_space(const MoebiusMatrix& m, const HalfSpacePoint& P) {
    const Complex a = m.a(), b = m.b(), c = m.c(), d = m.d();
    const double den = std::norm(c * P.z + d) + std::norm(c) * P.r * P.r;
    const Complex zn = ((a * P.z + b) * std::conj(c * P.z + d) + a * std::conj(c) * P.r * P.r) / den;
    return {zn, P.r / den};
}

HalfSpacePoint act_half_space_quaternion(const MoebiusMatrix& m, const HalfSpacePoint& P) {
    const Quaternion Pq = P.quaternion();
    const Quaternion num = quat_mul(Quaternion::from_complex(m.a()), Pq) + Quaternion::from_complex(m.b());
    const Quaternion den = quat_mul(Quaternion::from_complex(m.c()), Pq) + Quaternion::from_complex(m.d());
    const Quaternion out = quat_mul(num, quat_inv(den));
    return {out.complex_part(), out.j_part()};
}

BoundaryPoint act_boundary(const MoebiusMatrix& m, const BoundaryPoint& p) {
    const Complex a = m.a(), b = m.b(), c = m.c(), d = m.d();
    if (p.infinity) {
        if (std::abs(c) == 0.0) return BoundaryPoint::inf();
        return BoundaryPoint::at(a / c);
    }
    const Complex den = c * p.z + d;
    if (std::abs(den) == 0.0) return BoundaryPoint::inf();
    return BoundaryPoint::at((a * p.z + b) / den);
}

SBMatrix psi(const MoebiusMatrix& m) {
    const Complex a = m.a(), b = m.b(), c = m.c(), d = m.d();
    const Complex au = 0.5 * (a + std::conj(d));
    const Complex av = 0.5 * (b - std::conj(c));
    const Complex cu = 0.5 * (c + std::conj(b));
    const Complex cv = 0.5 * (d - std::conj(a));
    return {Quaternion{au.real(), au.imag(), av.real(), av.imag()},
            Quaternion{cu.real(), cu.imag(), cv.real(), cv.imag()}};
}

std::optional<Quaternion> act_ball_extended(const SBMatrix& f, const Quaternion& Q) {
    const Quaternion num = quat_mul(f.A, Q) + quat_prime(f.C);
    const Quaternion den = quat_mul(f.C, Q) + quat_prime(f.A);
    if (den.normsq() < 1e-28) return std::nullopt;
    return quat_mul(num, quat_inv(den));
}

Quaternion act_ball_at_infinity(const SBMatrix& f) {
    // (AQ+C')(CQ+A')^{-1} -> A C^{-1} as Q -> infinity.
    return quat_mul(f.A, quat_inv(f.C));
}

BallPoint act_ball(const SBMatrix& f, const BallPoint& Q) {
    const auto out = act_ball_extended(f, Q.p);
    if (!out) throw DomainError("ball action hit a pole at an interior point");
    return BallPoint{*out};
}

BallBoundaryPoint act_ball_boundary(const SBMatrix& f, const BallBoundaryPoint& p) {
    const auto out = act_ball_extended(f, p.p);
    if (!out) throw DomainError("S^2 action hit a pole");
    Quaternion q = *out;
    q.z = 0.0;
    const double n = q.norm();
    return {q / n};
}

namespace {

// (P - j)(-jP + 1)^{-1} evaluated in H; defined on all of C + Rj (no pole
// there since |-jP+1|^2 = 1 + |P|^2 + 2 j-part(P) > 0 on r >= 0).
Quaternion eta0_raw(const Quaternion& P) {
    static const Quaternion minus_j{0.0, 0.0, -1.0, 0.0};
    const Quaternion num = P + minus_j;
    const Quaternion den = quat_mul(minus_j, P) + Quaternion{1.0, 0.0, 0.0, 0.0};
    Quaternion out = quat_mul(num, quat_inv(den));
    out.z = 0.0;
    return out;
}

Quaternion eta0_inv_raw(const Quaternion& Q) {
    static const Quaternion plus_j{0.0, 0.0, 1.0, 0.0};
    const Quaternion num = Q + plus_j;
    const Quaternion den = quat_mul(plus_j, Q) + Quaternion{1.0, 0.0, 0.0, 0.0};
    Quaternion out = quat_mul(num, quat_inv(den));
    out.z = 0.0;
    return out;
}

}  // namespace

BallPoint eta0(const HalfSpacePoint& P) {
    BallPoint out;
    out.p = eta0_raw(P.quaternion());
    return out;
}

BallBoundaryPoint eta0(const BoundaryPoint& p) {
    if (p.infinity) return {{0.0, 0.0, 1.0, 0.0}};
    Quaternion q = eta0_raw(Quaternion::from_complex(p.z));
    const double n = q.norm();
    return {q / n};
}

HalfSpacePoint eta0_inv(const BallPoint& Q) {
    const Quaternion out = eta0_inv_raw(Q.p);
    return {out.complex_part(), out.j_part()};
}

BoundaryPoint eta0_inv(const BallBoundaryPoint& q) {
    static const Quaternion plus_j{0.0, 0.0, 1.0, 0.0};
    if (quat_close(q.p, plus_j, 1e-12)) return BoundaryPoint::inf();
    const Quaternion out = eta0_inv_raw(q.p);
    return BoundaryPoint::at(out.complex_part());
}

bool is_su2(const MoebiusMatrix& m, double tol) { return m.normsq() - 2.0 < tol; }

double hyperbolic_distance(const HalfSpacePoint& P, const HalfSpacePoint& Q) {
    const double d2 = std::norm(P.z - Q.z) + (P.r - Q.r) * (P.r - Q.r);
    return std::acosh(1.0 + d2 / (2.0 * P.r * Q.r));
}

double ball_distance_from_origin(const BallPoint& u) {
    const double n = u.p.norm();
    return std::log((1.0 + n) / (1.0 - n));
}

double ball_distance(const BallPoint& u, const BallPoint& v) {
    const double d2 = (u.p - v.p).normsq();
    const double du = 1.0 - u.p.normsq();
    const double dv = 1.0 - v.p.normsq();
    return std::acosh(1.0 + 2.0 * d2 / (du * dv));
}

}  // namespace hypwalls
