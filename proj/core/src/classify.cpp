#include "hypwalls/classify.hpp"

#include <cmath>

namespace hypwalls {

const char* to_string(IsometryKind kind) {
    switch (kind) {
        case IsometryKind::Identity: return "identity";
        case IsometryKind::Elliptic: return "elliptic";
        case IsometryKind::Parabolic: return "parabolic";
        case IsometryKind::Hyperbolic: return "hyperbolic";
        case IsometryKind::Loxodromic: return "loxodromic";
    }
    return "?";
}

IsometryClass classify_trace(const MoebiusMatrix& m, double tol) {
    IsometryClass out;
    const Complex tr = m.trace();
    if (m.is_identity(tol)) {
        out.kind = IsometryKind::Identity;
        return out;
    }
    if (std::abs(tr.imag()) > tol) {
        out.kind = IsometryKind::Loxodromic;
        return out;
    }
    const double t = std::abs(tr.real());
    if (std::abs(t - 2.0) <= tol) {
        out.kind = IsometryKind::Parabolic;
        out.marginal = t != 2.0;
        return out;
    }
    out.kind = t < 2.0 ? IsometryKind::Elliptic : IsometryKind::Hyperbolic;
    return out;
}

std::vector<BoundaryPoint> fixed_points(const MoebiusMatrix& m, double tol) {
    if (m.is_identity(tol)) throw IdentityHasAllPointsError{};
    const Complex a = m.a(), b = m.b(), c = m.c(), d = m.d();
    if (std::abs(c) <= tol) {
        if (std::abs(d - a) <= tol) return {BoundaryPoint::inf()};
        return {BoundaryPoint::inf(), BoundaryPoint::at(b / (d - a))};
    }
    // c z^2 + (d - a) z - b = 0; discriminant tr^2 - 4
    const Complex disc = (a + d) * (a + d) - 4.0;
    if (std::abs(disc) <= tol * tol) {
        return {BoundaryPoint::at((a - d) / (2.0 * c))};
    }
    const Complex sq = std::sqrt(disc);
    return {BoundaryPoint::at((a - d + sq) / (2.0 * c)),
            BoundaryPoint::at((a - d - sq) / (2.0 * c))};
}

WallRelation wall_relation(const MoebiusMatrix& m, double tol) {
    if (is_su2(m, tol)) throw SU2UndefinedError{};
    const BallSphereWall w1 = bisector_ball(m, tol);
    const BallSphereWall w2 = bisector_ball(m.inverse(), tol);
    const Quaternion delta = w2.center - w1.center;
    const double dist = delta.norm();
    const double rsum = w1.radius + w2.radius;
    const double rdiff = std::abs(w1.radius - w2.radius);
    const double band = std::max(tol, 1e-12) * std::max(1.0, rsum);
    WallRelation rel;
    if (dist <= band && rdiff <= band) {
        // coincident walls (gamma^{-1} = gamma_0 gamma, order-2 elliptic)
        rel.kind = WallRelation::Kind::CircleIntersection;
        return rel;
    }
    if (std::abs(dist - rsum) <= band || (dist > rdiff && std::abs(dist - rdiff) <= band)) {
        rel.kind = WallRelation::Kind::Tangent;
        // external tangency point, on S^2 for bisector pairs
        const Quaternion at = w1.center + delta * (w1.radius / dist);
        const double n = at.norm();
        rel.tangent_at = eta0_inv(BallBoundaryPoint{at / n});
        return rel;
    }
    if (dist > rsum + band || dist + band < rdiff) {
        rel.kind = WallRelation::Kind::Disjoint;
        return rel;
    }
    rel.kind = WallRelation::Kind::CircleIntersection;
    return rel;
}

IsometryClass classify_geometric(const MoebiusMatrix& m, int max_power, double tol) {
    if (m.is_identity(tol)) throw IdentityHasAllPointsError{};
    if (is_su2(m, tol)) throw SU2UndefinedError{};

    const Complex tr = m.trace();
    const bool real_trace = std::abs(tr.imag()) <= tol;

    IsometryClass out;
    MoebiusMatrix power = m;
    for (int n = 1; n <= max_power; ++n) {
        if (n > 1 && power.is_identity(tol)) {
            out.kind = IsometryKind::Elliptic;
            out.n_used = n;
            return out;
        }
        if (n > 1 && is_su2(power, tol)) {
            // SU(2) power of a non-SU(2) element only happens at +-I; treat the
            // tolerance case as elliptic as well.
            out.kind = IsometryKind::Elliptic;
            out.n_used = n;
            return out;
        }
        const WallRelation rel = wall_relation(power, tol);
        if (rel.kind == WallRelation::Kind::Tangent && n == 1) {
            out.kind = IsometryKind::Parabolic;
            return out;
        }
        if (rel.kind == WallRelation::Kind::Disjoint) {
            out.n_used = n;
            out.kind = (n == 1 && real_trace) ? IsometryKind::Hyperbolic : IsometryKind::Loxodromic;
            return out;
        }
        // Tangency at a power > 1 is not conclusive (parabolic inputs are
        // already tangent at n = 1); keep searching.
        power = power * m;
    }
    // Every computed power intersects in a circle: elliptic, corroborated by
    // the trace staying inside (-2, 2).
    if (real_trace && std::abs(tr.real()) < 2.0 - tol) {
        out.kind = IsometryKind::Elliptic;
        out.n_used = max_power;
        return out;
    }
    throw InconclusiveError("no disjoint wall pair up to power " + std::to_string(max_power));
}

double elliptic_rotation_cosine(const MoebiusMatrix& m) {
    const Complex a = m.a();
    return (a * a).real() / std::norm(a);
}

}  // namespace hypwalls
