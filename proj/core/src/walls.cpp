#include "hypwalls/walls.hpp"

#include <algorithm>
#include <cmath>

namespace hypwalls {

namespace {

using Vec3 = std::array<double, 3>;

Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 add(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Vec3 scale(const Vec3& a, double s) { return {a[0] * s, a[1] * s, a[2] * s}; }
double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
double vnorm(const Vec3& a) { return std::sqrt(dot(a, a)); }
Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Vec3 any_unit_orthogonal(const Vec3& e) {
    const Vec3 probe = std::abs(e[0]) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    Vec3 p = cross(e, probe);
    return scale(p, 1.0 / vnorm(p));
}

Vec3 point3(const Quaternion& q) { return {q.w, q.x, q.y}; }

double halton(std::uint64_t i, unsigned base) {
    double f = 1.0, r = 0.0;
    for (std::uint64_t n = i + 1; n > 0; n /= base) {
        f /= base;
        r += f * static_cast<double>(n % base);
    }
    return r;
}

struct MatrixData {
    Complex a, b, c, d;
    double s;  // |a|^2 + |c|^2
    double t;  // |b|^2 + |d|^2
    Complex v; // conj(a) b + conj(c) d
};

MatrixData matrix_data(const MoebiusMatrix& m) {
    MatrixData md{m.a(), m.b(), m.c(), m.d(), 0, 0, {}};
    md.s = std::norm(md.a) + std::norm(md.c);
    md.t = std::norm(md.b) + std::norm(md.d);
    md.v = std::conj(md.a) * md.b + std::conj(md.c) * md.d;
    return md;
}

}  // namespace

SphereWall isometric_sphere_half_space(const MoebiusMatrix& m, double tol) {
    if (std::abs(m.c()) <= tol) throw NoIsometricSphereError{};
    return {-m.d() / m.c(), 1.0 / std::abs(m.c())};
}

Wall bisector_half_space(const MoebiusMatrix& m, double tol) {
    if (is_su2(m, tol)) throw InSU2Error{};
    const MatrixData md = matrix_data(m);
    if (std::abs(md.s - 1.0) <= tol) {
        const double len = std::abs(md.v);
        return PlaneWall{md.v / len, len / 2.0};
    }
    const Complex center = -md.v / (md.s - 1.0);
    const double radius = std::sqrt((1.0 + std::norm(center)) / md.s);
    return SphereWall{center, radius};
}

BallSphereWall bisector_ball(const MoebiusMatrix& m, double tol) {
    if (is_su2(m, tol)) throw InSU2Error{};
    const MatrixData md = matrix_data(m);
    const double x = md.s + md.t;
    const Complex zc = -2.0 * md.v / (x - 2.0);
    const double jc = (md.t - md.s) / (x - 2.0);
    return {Quaternion::from_complex(zc, jc), 2.0 / std::sqrt(x - 2.0)};
}

Quaternion ball_wall_inverse_point(const MoebiusMatrix& m, double tol) {
    const BallSphereWall w = bisector_ball(m, tol);
    const double x = m.normsq();
    return w.center * ((x - 2.0) / (x + 2.0));
}

WallGap wall_gap(const MoebiusMatrix& m, double tol) {
    const MatrixData md = matrix_data(m);
    if (std::abs(md.c) <= tol) throw NoIsometricSphereError{};
    if (std::abs(md.s - 1.0) <= tol) throw PlaneBisectorError{};
    WallGap gap;
    gap.distance = std::abs(md.d - std::conj(md.a)) / (std::abs(md.c) * std::abs(md.s - 1.0));
    gap.equal = std::abs(md.d - std::conj(md.a)) <= tol;
    return gap;
}

double rho_gamma(double normsq) {
    if (!(normsq > 2.0)) throw DomainError("rho_gamma requires ||gamma||^2 > 2");
    return 1.0 - std::sqrt((normsq + 2.0) / (normsq - 2.0)) + 2.0 / std::sqrt(normsq - 2.0);
}

EuclideanSurface wall_surface(const Wall& w) {
    if (const auto* s = std::get_if<SphereWall>(&w)) {
        return EuclideanSphere{{s->center.real(), s->center.imag(), 0.0}, s->radius};
    }
    if (const auto* p = std::get_if<PlaneWall>(&w)) {
        return EuclideanPlane{{p->normal.real(), p->normal.imag(), 0.0}, p->offset};
    }
    const auto& b = std::get<BallSphereWall>(w);
    return EuclideanSphere{point3(b.center), b.radius};
}

double wall_exterior_margin(const Wall& w, const Quaternion& point) {
    const Vec3 pt = point3(point);
    if (const auto* s = std::get_if<SphereWall>(&w)) {
        const Vec3 c{s->center.real(), s->center.imag(), 0.0};
        // exterior is the side of j = (0,0,1)
        const double side = vnorm(sub({0, 0, 1}, c)) - s->radius >= 0.0 ? 1.0 : -1.0;
        return side * (vnorm(sub(pt, c)) - s->radius);
    }
    if (const auto* p = std::get_if<PlaneWall>(&w)) {
        const double raw =
            p->normal.real() * pt[0] + p->normal.imag() * pt[1] + p->offset;
        const double side = p->offset >= 0.0 ? 1.0 : -1.0;
        return side * raw;
    }
    const auto& b = std::get<BallSphereWall>(w);
    const Vec3 c = point3(b.center);
    const double side = vnorm(c) - b.radius >= 0.0 ? 1.0 : -1.0;  // side of the origin
    return side * (vnorm(sub(pt, c)) - b.radius);
}

namespace {

// Point on the intersection of two Euclidean surfaces together with the unit
// normals there; throws NoIntersectionError.
struct SurfaceMeet {
    double cos_angle;
};

SurfaceMeet meet(const EuclideanSphere& s1, const EuclideanSphere& s2, double tol) {
    const Vec3 delta = sub(s2.center, s1.center);
    const double d = vnorm(delta);
    const double band = std::max(tol, 1e-12) * std::max(1.0, s1.radius + s2.radius);
    if (d > s1.radius + s2.radius + band) throw NoIntersectionError{};
    if (d + band < std::abs(s1.radius - s2.radius)) throw NoIntersectionError{};
    if (d < 1e-15) {
        // identical spheres (radii match within band): angle 0
        return {1.0};
    }
    const Vec3 e = scale(delta, 1.0 / d);
    const double x = (d * d + s1.radius * s1.radius - s2.radius * s2.radius) / (2.0 * d);
    const double h2 = s1.radius * s1.radius - x * x;
    const double h = std::sqrt(std::max(h2, 0.0));
    const Vec3 perp = any_unit_orthogonal(e);
    const Vec3 u = add(add(s1.center, scale(e, x)), scale(perp, h));
    const Vec3 n1 = scale(sub(u, s1.center), 1.0 / s1.radius);
    const Vec3 n2 = scale(sub(u, s2.center), 1.0 / s2.radius);
    return {std::min(1.0, std::abs(dot(n1, n2)))};
}

SurfaceMeet meet(const EuclideanSphere& s, const EuclideanPlane& p, double tol) {
    const double dist = dot(p.normal, s.center) + p.offset;
    const double band = std::max(tol, 1e-12) * std::max(1.0, s.radius);
    if (std::abs(dist) > s.radius + band) throw NoIntersectionError{};
    const Vec3 foot = sub(s.center, scale(p.normal, dist));
    const double h = std::sqrt(std::max(s.radius * s.radius - dist * dist, 0.0));
    const Vec3 perp = any_unit_orthogonal(p.normal);
    const Vec3 u = add(foot, scale(perp, h));
    const Vec3 n1 = scale(sub(u, s.center), 1.0 / s.radius);
    return {std::min(1.0, std::abs(dot(n1, p.normal)))};
}

SurfaceMeet meet(const EuclideanPlane& p1, const EuclideanPlane& p2, double tol) {
    const double c = std::abs(dot(p1.normal, p2.normal));
    if (c > 1.0 - 1e-12) {
        // parallel: intersect only if identical
        const double off2 = dot(p1.normal, p2.normal) > 0 ? p2.offset : -p2.offset;
        if (std::abs(p1.offset - off2) > std::max(tol, 1e-12)) throw NoIntersectionError{};
        return {1.0};
    }
    return {std::min(1.0, c)};
}

double oracle_cos(const Wall& w1, const Wall& w2, double tol) {
    const EuclideanSurface e1 = wall_surface(w1);
    const EuclideanSurface e2 = wall_surface(w2);
    return std::visit(
        [&](const auto& a, const auto& b) -> double {
            if constexpr (std::is_same_v<std::decay_t<decltype(a)>, EuclideanPlane> &&
                          std::is_same_v<std::decay_t<decltype(b)>, EuclideanSphere>) {
                return meet(b, a, tol).cos_angle;
            } else {
                return meet(a, b, tol).cos_angle;
            }
        },
        e1, e2);
}

}  // namespace

DihedralAngle dihedral_angle(const Wall& w1, const Wall& w2, double tol) {
    DihedralAngle out;
    out.cos_oracle = oracle_cos(w1, w2, tol);
    const auto* b1 = std::get_if<BallSphereWall>(&w1);
    const auto* b2 = std::get_if<BallSphereWall>(&w2);
    if (b1 && b2) {
        // Lemma angles item 1 as printed (squared radii in the denominator).
        const double ip = quat_dot(b1->center, b2->center);
        out.cos_paper = 2.0 * std::abs(1.0 - ip) /
                        (2.0 * b1->radius * b1->radius * b2->radius * b2->radius);
    }
    return out;
}

DihedralAngle dihedral_angle_boundary(const MoebiusMatrix& m, double tol) {
    const BallSphereWall w = bisector_ball(m, tol);
    const MatrixData md = matrix_data(m);
    DihedralAngle out;
    out.cos_paper = std::abs(md.t - md.s) / (2.0 * std::sqrt(md.s + md.t - 2.0));
    const EuclideanPlane pi0{{0.0, 0.0, 1.0}, 0.0};
    out.cos_oracle = meet(std::get<EuclideanSphere>(wall_surface(Wall{w})), pi0, tol).cos_angle;
    return out;
}

Position boundary_position(const MoebiusMatrix& m, BasePoint point, double tol) {
    if (is_su2(m, tol)) throw InSU2Error{};
    const MatrixData md = matrix_data(m);
    double value = 0.0;
    switch (point) {
        case BasePoint::Zero:
            return Position::Exterior;  // 0 is never on Sigma_{Psi(gamma)}
        case BasePoint::PlusJ:
            value = md.s;
            break;
        case BasePoint::MinusJ:
            value = md.t;
            break;
    }
    if (std::abs(value - 1.0) <= tol) return Position::On;
    return value < 1.0 ? Position::Interior : Position::Exterior;
}

bool wall_equal(const Wall& w1, const Wall& w2, double tol) {
    if (w1.index() != w2.index()) return false;
    if (const auto* s1 = std::get_if<SphereWall>(&w1)) {
        const auto& s2 = std::get<SphereWall>(w2);
        return std::abs(s1->center - s2.center) <= tol && std::abs(s1->radius - s2.radius) <= tol;
    }
    if (const auto* p1 = std::get_if<PlaneWall>(&w1)) {
        const auto& p2 = std::get<PlaneWall>(w2);
        const bool same =
            std::abs(p1->normal - p2.normal) <= tol && std::abs(p1->offset - p2.offset) <= tol;
        const bool flipped =
            std::abs(p1->normal + p2.normal) <= tol && std::abs(p1->offset + p2.offset) <= tol;
        return same || flipped;
    }
    const auto& b1 = std::get<BallSphereWall>(w1);
    const auto& b2 = std::get<BallSphereWall>(w2);
    return quat_close(b1.center, b2.center, tol) && std::abs(b1.radius - b2.radius) <= tol;
}

std::vector<HalfSpacePoint> sample_wall_half_space(const Wall& w, int n, unsigned seed,
                                                   double window, bool fuchsian) {
    std::vector<HalfSpacePoint> out;
    out.reserve(static_cast<std::size_t>(n));
    const std::uint64_t off = static_cast<std::uint64_t>(seed) * 65537ull;
    if (const auto* s = std::get_if<SphereWall>(&w)) {
        for (int k = 0; k < n; ++k) {
            const double u1 = halton(off + static_cast<std::uint64_t>(k), 2);
            const double u2 = halton(off + static_cast<std::uint64_t>(k), 3);
            const double ct = 0.05 + 0.93 * u1;  // r-component fraction, away from the boundary
            const double st = std::sqrt(1.0 - ct * ct);
            const double phi = fuchsian ? (k % 2 == 0 ? 0.0 : 3.14159265358979323846)
                                        : 2.0 * 3.14159265358979323846 * u2;
            const Complex z = s->center + s->radius * st * Complex{std::cos(phi), std::sin(phi)};
            out.emplace_back(z, s->radius * ct);
        }
        return out;
    }
    if (const auto* p = std::get_if<PlaneWall>(&w)) {
        const Complex dir = Complex{0.0, 1.0} * p->normal;  // direction along the plane
        const Complex z0 = -p->offset * p->normal;
        for (int k = 0; k < n; ++k) {
            const double u1 = halton(off + static_cast<std::uint64_t>(k), 2);
            const double u2 = halton(off + static_cast<std::uint64_t>(k), 3);
            const double t = fuchsian ? 0.0 : (2.0 * u1 - 1.0) * window;
            const double r = 0.1 + u2 * (window - 0.1);
            out.emplace_back(z0 + t * dir, r);
        }
        return out;
    }
    throw DomainError("half-space sampling requires a half-space wall");
}

std::vector<BallPoint> sample_wall_ball(const BallSphereWall& w, int n, unsigned seed) {
    const double cn = w.center.norm();
    if (cn <= w.radius) throw DomainError("ball wall sampling requires |center| > radius");
    const Vec3 chat = scale(point3(w.center), 1.0 / cn);
    const Vec3 e1 = any_unit_orthogonal(chat);
    const Vec3 e2 = cross(chat, e1);
    const double tlo = w.radius / cn;
    std::vector<BallPoint> out;
    out.reserve(static_cast<std::size_t>(n));
    const std::uint64_t off = static_cast<std::uint64_t>(seed) * 65537ull;
    for (int k = 0; k < n; ++k) {
        const double u1 = halton(off + static_cast<std::uint64_t>(k), 2);
        const double u2 = halton(off + static_cast<std::uint64_t>(k), 3);
        const double t = tlo + (0.02 + 0.96 * u1) * (1.0 - tlo);
        const double st = std::sqrt(std::max(0.0, 1.0 - t * t));
        const double phi = 2.0 * 3.14159265358979323846 * u2;
        Vec3 v = scale(chat, -t);
        v = add(v, scale(e1, st * std::cos(phi)));
        v = add(v, scale(e2, st * std::sin(phi)));
        const Vec3 pt = add(point3(w.center), scale(v, w.radius));
        BallPoint bp;
        bp.p = Quaternion{pt[0], pt[1], pt[2], 0.0};
        out.push_back(bp);
    }
    return out;
}

}  // namespace hypwalls
