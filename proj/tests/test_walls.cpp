#include <doctest.h>

#include <random>

#include "hypwalls/walls.hpp"
#include "testutil.hpp"

using namespace hypwalls;
using namespace hypwalls::testutil;

namespace {

const HalfSpacePoint kJ{Complex{}, 1.0};

double plane_eval(const PlaneWall& p, Complex z) {
    return (std::conj(p.normal) * z).real() + p.offset;
}

}  // namespace

TEST_CASE("isometric sphere closed form") {
    const SphereWall w = isometric_sphere_half_space(MoebiusMatrix{2, 1, 1, 1});
    CHECK(std::abs(w.center - Complex{-1, 0}) < 1e-15);
    CHECK(w.radius == doctest::Approx(1.0));
    CHECK_THROWS_AS(isometric_sphere_half_space(MoebiusMatrix{1, 1, 0, 1}), NoIsometricSphereError);

    // j on ISO_gamma iff |c|^2 + |d|^2 = 1
    const SphereWall v = isometric_sphere_half_space(MoebiusMatrix{1, -1, 1, 0});
    CHECK(std::abs(v.center) < 1e-15);
    CHECK(v.radius == doctest::Approx(1.0));

    // sampled points satisfy |cz+d|^2 + |c|^2 r^2 = 1
    std::mt19937_64 rng(31);
    for (int t = 0; t < 25; ++t) {
        const MoebiusMatrix m = random_matrix(rng);
        if (std::abs(m.c()) < 0.1) continue;
        const SphereWall iso = isometric_sphere_half_space(m);
        for (const HalfSpacePoint& u : sample_wall_half_space(Wall{iso}, 20, 7)) {
            const double lhs = std::norm(m.c() * u.z + m.d()) + std::norm(m.c()) * u.r * u.r;
            CHECK(std::abs(lhs - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("half-space bisector examples") {
    // translation: midplane Re z = -1/2
    const Wall w = bisector_half_space(MoebiusMatrix{1, 1, 0, 1});
    const auto& p = std::get<PlaneWall>(w);
    CHECK(std::abs(p.normal - Complex{1, 0}) < 1e-15);
    CHECK(p.offset == doctest::Approx(0.5));
    CHECK(plane_eval(p, Complex{-0.5, 3.7}) == doctest::Approx(0.0));

    const Wall s = bisector_half_space(MoebiusMatrix{2, 1, 1, 1});
    const auto& sw = std::get<SphereWall>(s);
    CHECK(std::abs(sw.center - Complex{-0.75, 0}) < 1e-12);
    CHECK(sw.radius == doctest::Approx(std::sqrt(5.0) / 4.0));

    CHECK_THROWS_AS(bisector_half_space(MoebiusMatrix{0, -1, 1, 0}), InSU2Error);
}

TEST_CASE("bisector defining property, half space") {
    std::mt19937_64 rng(32);
    for (int t = 0; t < 100; ++t) {
        const MoebiusMatrix m = random_matrix_min_norm(rng, 2.01);
        const Wall w = bisector_half_space(m);
        const HalfSpacePoint target = act_half_space(m.inverse(), kJ);
        for (const HalfSpacePoint& u : sample_wall_half_space(w, 20, 3, 4.0)) {
            const double d1 = hyperbolic_distance(kJ, u);
            const double d2 = hyperbolic_distance(u, target);
            CHECK(std::abs(d1 - d2) < 1e-9);
        }
    }
}

TEST_CASE("ball bisector closed forms") {
    const MoebiusMatrix t{1, 1, 0, 1};
    const BallSphereWall w = bisector_ball(t);
    CHECK(quat_close(w.center, {-2, 0, 1, 0}, 1e-12));
    CHECK(w.radius == doctest::Approx(2.0));
    CHECK(1.0 + w.radius * w.radius == doctest::Approx(w.center.normsq()));  // 5

    std::mt19937_64 rng(33);
    for (int tcase = 0; tcase < 100; ++tcase) {
        const MoebiusMatrix m = random_matrix_min_norm(rng, 2.01);
        const double x = m.normsq();
        const SBMatrix f = psi(m);
        CHECK(std::abs(f.A.normsq() - (2.0 + x) / 4.0) < 1e-10 * std::max(1.0, x));
        CHECK(std::abs(f.C.normsq() - (x - 2.0) / 4.0) < 1e-10 * std::max(1.0, x));
        const BallSphereWall b = bisector_ball(m);
        CHECK(std::abs(b.radius * b.radius - 4.0 / (x - 2.0)) < 1e-10 * std::max(1.0, b.radius));
        CHECK(std::abs(b.center.normsq() - (2.0 + x) / (x - 2.0)) < 1e-9);
        CHECK(std::abs(1.0 + b.radius * b.radius - b.center.normsq()) < 1e-9);

        // center equals -C^{-1} A'
        const Quaternion center = -quat_mul(quat_inv(f.C), quat_prime(f.A));
        CHECK(quat_close(center, b.center, 1e-9));

        // inverse point: Psi(gamma^{-1})(0), collinear with the center, |P||P*| = 1
        const Quaternion ip = ball_wall_inverse_point(m);
        const BallPoint img = act_ball(psi(m.inverse()), BallPoint{});
        CHECK(quat_close(ip, img.p, 1e-9));
        CHECK(std::abs(ip.norm() * b.center.norm() - 1.0) < 1e-9);
    }
}

TEST_CASE("R = 1 exactly when the norm is 6") {
    std::mt19937_64 rng(133);
    for (int t = 0; t < 200; ++t) {
        const MoebiusMatrix m = random_matrix(rng);
        if (std::abs(m.normsq() - 6.0) > 1e-9) continue;
        CHECK(bisector_ball(m).radius == doctest::Approx(1.0));
    }
    // direct instance with norm 6: diag(lambda, 1/lambda), lambda^2 + 1/lambda^2 = 6
    const double lam = std::sqrt((6.0 + std::sqrt(32.0)) / 2.0);
    const MoebiusMatrix d{lam, 0.0, 0.0, 1.0 / lam};
    CHECK(d.normsq() == doctest::Approx(6.0));
    CHECK(bisector_ball(d).radius == doctest::Approx(1.0));
}

TEST_CASE("bisector defining property, ball") {
    std::mt19937_64 rng(34);
    for (int t = 0; t < 100; ++t) {
        const MoebiusMatrix m = random_matrix_min_norm(rng, 2.01);
        const BallSphereWall w = bisector_ball(m);
        const BallPoint target = act_ball(psi(m.inverse()), BallPoint{});
        for (const BallPoint& u : sample_wall_ball(w, 20, 5)) {
            const double d1 = ball_distance_from_origin(u);
            const double d2 = ball_distance(u, target);
            CHECK(std::abs(d1 - d2) < 1e-9);
        }
    }
}

TEST_CASE("ball bisector is eta0 of the half-space bisector") {
    std::mt19937_64 rng(35);
    for (int t = 0; t < 50; ++t) {
        const MoebiusMatrix m = random_matrix_min_norm(rng, 2.01);
        const Wall w = bisector_half_space(m);
        const BallSphereWall b = bisector_ball(m);
        for (const HalfSpacePoint& u : sample_wall_half_space(w, 10, 2)) {
            const BallPoint v = eta0(u);
            CHECK(std::abs((v.p - b.center).norm() - b.radius) < 1e-8);
        }
    }
}

TEST_CASE("wall gap") {
    const WallGap g1 = wall_gap(MoebiusMatrix{2, 1, 1, 1});
    CHECK(g1.distance == doctest::Approx(0.25));
    CHECK_FALSE(g1.equal);

    const WallGap g2 = wall_gap(MoebiusMatrix{2, 1, 3, 2});
    CHECK(g2.distance == doctest::Approx(0.0));
    CHECK(g2.equal);
    // shared wall: center -2/3, radius 1/3
    const auto iso = isometric_sphere_half_space(MoebiusMatrix{2, 1, 3, 2});
    const auto bis = std::get<SphereWall>(bisector_half_space(MoebiusMatrix{2, 1, 3, 2}));
    CHECK(std::abs(iso.center - bis.center) < 1e-12);
    CHECK(std::abs(iso.center - Complex{-2.0 / 3.0, 0.0}) < 1e-12);
    CHECK(iso.radius == doctest::Approx(bis.radius));
    CHECK(iso.radius == doctest::Approx(1.0 / 3.0));

    CHECK_THROWS_AS(wall_gap(MoebiusMatrix{1, 1, 0, 1}), NoIsometricSphereError);

    // remark path: c = 0 with a plane bisector forces |a| = 1 and d = conj(a)
    std::mt19937_64 rng2(136);
    for (int t = 0; t < 20; ++t) {
        std::uniform_real_distribution<double> ang(0.0, 6.28);
        const Complex a = std::polar(1.0, ang(rng2));
        const MoebiusMatrix m{a, random_complex(rng2), 0.0, 1.0 / a};
        CHECK(std::abs(m.d() - std::conj(m.a())) < 1e-12);
        CHECK(std::holds_alternative<PlaneWall>(bisector_half_space(m)));
        CHECK(std::abs(m.trace().imag()) < 1e-12);
    }

    // d = conj(a) forces c = lambda conj(b) with lambda real, and real trace
    std::mt19937_64 rng(36);
    for (int t = 0; t < 200; ++t) {
        const MoebiusMatrix m = random_matrix(rng);
        if (std::abs(m.c()) < 0.05 || std::abs(std::norm(m.a()) + std::norm(m.c()) - 1.0) < 0.05)
            continue;
        const WallGap g = wall_gap(m);
        const double direct = std::abs(m.d() - std::conj(m.a())) /
                              (std::abs(m.c()) *
                               std::abs(std::norm(m.a()) + std::norm(m.c()) - 1.0));
        CHECK(g.distance == doctest::Approx(direct));
        if (g.equal) {
            const Complex lambda = m.c() / std::conj(m.b());
            CHECK(std::abs(lambda.imag()) < 1e-7);
            CHECK(std::abs(m.trace().imag()) < 1e-9);
        }
    }
}

TEST_CASE("prop identity |conj(a)b + conj(c)d|^2 = st - 1") {
    std::mt19937_64 rng(37);
    for (int t = 0; t < 200; ++t) {
        const MoebiusMatrix m = random_matrix(rng);
        const double s = std::norm(m.a()) + std::norm(m.c());
        const double tt = std::norm(m.b()) + std::norm(m.d());
        const double v = std::norm(std::conj(m.a()) * m.b() + std::conj(m.c()) * m.d());
        CHECK(std::abs(v - (s * tt - 1.0)) < 1e-10 * std::max(1.0, s * tt));
    }
}

TEST_CASE("rho_gamma") {
    CHECK(rho_gamma(3.0) == doctest::Approx(3.0 - std::sqrt(5.0)));
    CHECK_THROWS_AS(rho_gamma(2.0), DomainError);
    CHECK(rho_gamma(1e12) == doctest::Approx(0.0).epsilon(1e-5));

    // equals 1 + R - |P| on the matching wall
    const BallSphereWall w = bisector_ball(MoebiusMatrix{1, 1, 0, 1});
    CHECK(rho_gamma(3.0) == doctest::Approx(1.0 + w.radius - w.center.norm()));

    // strictly decreasing on the spec grid
    double prev = rho_gamma(2.01);
    for (double x = 2.1; x <= 100.0; x += 0.1) {
        const double cur = rho_gamma(x);
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("dihedral angles") {
    std::mt19937_64 rng(38);
    // (Sigma, S^2) is orthogonal
    for (int t = 0; t < 50; ++t) {
        const MoebiusMatrix m = random_matrix_min_norm(rng, 2.05);
        const DihedralAngle a = dihedral_angle(Wall{bisector_ball(m)}, Wall{unit_sphere_wall()});
        CHECK(std::abs(a.cos_oracle) < 1e-9);
    }
    // tangent pair: [[1,0],[1,1]] and inverse have half-space spheres at +-1
    {
        const MoebiusMatrix m{1, 0, 1, 1};
        const Wall w1 = bisector_half_space(m);
        const Wall w2 = bisector_half_space(m.inverse());
        const DihedralAngle a = dihedral_angle(w1, w2);
        CHECK(std::abs(a.cos_oracle) == doctest::Approx(1.0));
    }
    // wall against the boundary plane: item 2 paper value matches the oracle
    for (int t = 0; t < 50; ++t) {
        const MoebiusMatrix m = random_matrix_min_norm(rng, 2.05);
        const BallSphereWall w = bisector_ball(m);
        if (std::abs(w.center.y) > w.radius) continue;  // misses pi_0
        const DihedralAngle a = dihedral_angle_boundary(m);
        CHECK(a.cos_paper.has_value());
        CHECK(std::abs(*a.cos_paper - a.cos_oracle) < 1e-9);
    }
    // item-1 comparison report: paper formula as printed vs oracle; the
    // printed denominator carries squared radii, so no agreement asserted.
    int intersecting = 0;
    for (int t = 0; t < 200 && intersecting < 25; ++t) {
        const MoebiusMatrix m1 = random_matrix_min_norm(rng, 2.05);
        const MoebiusMatrix m2 = random_matrix_min_norm(rng, 2.05);
        const BallSphereWall w1 = bisector_ball(m1), w2 = bisector_ball(m2);
        try {
            const DihedralAngle a = dihedral_angle(Wall{w1}, Wall{w2});
            ++intersecting;
            REQUIRE(a.cos_paper.has_value());
            // the oracle agrees with the first-power version of the formula
            const double ip = quat_dot(w1.center, w2.center);
            const double first_power = std::abs(1.0 - ip) / (w1.radius * w2.radius);
            if (first_power <= 1.0) CHECK(std::abs(a.cos_oracle - first_power) < 1e-9);
            CHECK(*a.cos_paper ==
                  doctest::Approx(first_power / (w1.radius * w2.radius)).epsilon(1e-9));
        } catch (const NoIntersectionError&) {
        }
    }
    CHECK(intersecting > 0);
}

TEST_CASE("boundary positions") {
    CHECK(boundary_position(MoebiusMatrix{1, 1, 0, 1}, BasePoint::PlusJ) == Position::On);
    CHECK(boundary_position(MoebiusMatrix{2, 1, 1, 1}, BasePoint::Zero) == Position::Exterior);
    CHECK_THROWS_AS(boundary_position(MoebiusMatrix{0, -1, 1, 0}, BasePoint::PlusJ), InSU2Error);

    // 0 is exterior: |P|^2 - R^2 = 1 for every bisector; j side matches s vs 1
    std::mt19937_64 rng(39);
    for (int t = 0; t < 100; ++t) {
        const MoebiusMatrix m = random_matrix_min_norm(rng, 2.01);
        const BallSphereWall w = bisector_ball(m);
        CHECK(w.center.normsq() - w.radius * w.radius == doctest::Approx(1.0));
        const double s = std::norm(m.a()) + std::norm(m.c());
        const Quaternion j{0, 0, 1, 0};
        const double margin = (j - w.center).norm() - w.radius;
        if (s < 1.0 - 1e-6) {
            CHECK(margin < 0.0);
            CHECK(boundary_position(m, BasePoint::PlusJ, 1e-9) == Position::Interior);
        }
        if (s > 1.0 + 1e-6) {
            CHECK(margin > 0.0);
            CHECK(boundary_position(m, BasePoint::PlusJ, 1e-9) == Position::Exterior);
        }
        const double tt = std::norm(m.b()) + std::norm(m.d());
        const Quaternion mj{0, 0, -1, 0};
        const double margin2 = (mj - w.center).norm() - w.radius;
        if (tt < 1.0 - 1e-6) CHECK(margin2 < 0.0);
        if (tt > 1.0 + 1e-6) CHECK(margin2 > 0.0);
    }
}

TEST_CASE("composition relations and the equal-wall criterion") {
    std::mt19937_64 rng(40);
    for (int t = 0; t < 100; ++t) {
        const MoebiusMatrix g = random_matrix_min_norm(rng, 2.05);
        const MoebiusMatrix g1 = random_matrix(rng);
        const MoebiusMatrix g2 = random_su2(rng);

        // hat(P)_{g2 g g1} = hat(P)_{g g1} = g1^{-1}(hat(P)_g). Isometric
        // spheres depend on the bottom row, so the left factor must fix
        // infinity: the relation holds for the diagonal unitaries in SU(2)
        // (a full SU(2) factor moves hat(P); see the ball-model item below
        // for the SU(2)-invariant statement).
        std::uniform_real_distribution<double> ang(0.0, 6.28);
        const Complex unit = std::polar(1.0, ang(rng));
        const MoebiusMatrix g2diag{unit, 0.0, 0.0, std::conj(unit)};
        if (std::abs((g2diag * g * g1).c()) > 0.05 && std::abs((g * g1).c()) > 0.05 &&
            std::abs(g.c()) > 0.05) {
            const Complex lhs = isometric_sphere_half_space(g2diag * g * g1).center;
            const Complex mid = isometric_sphere_half_space(g * g1).center;
            const BoundaryPoint moved = act_boundary(
                g1.inverse(), BoundaryPoint::at(isometric_sphere_half_space(g).center));
            CHECK(std::abs(lhs - mid) < 1e-8);
            REQUIRE_FALSE(moved.infinity);
            CHECK(std::abs(lhs - moved.z) < 1e-7);
            // radii agree as well: identical isometric spheres
            CHECK(isometric_sphere_half_space(g2diag * g * g1).radius ==
                  doctest::Approx(isometric_sphere_half_space(g * g1).radius));
        }

        // P_{Psi(g2 g g1)} = P_{Psi(g g1)} = Psi(g1^{-1})(P_{Psi(g)})
        if (!is_su2(g2 * g * g1, 1e-6) && !is_su2(g * g1, 1e-6)) {
            const Quaternion lhs = bisector_ball(g2 * g * g1).center;
            const Quaternion mid = bisector_ball(g * g1).center;
            const auto moved = act_ball_extended(psi(g1.inverse()), bisector_ball(g).center);
            REQUIRE(moved.has_value());
            CHECK(quat_close(lhs, mid, 1e-7));
            CHECK(quat_close(lhs, *moved, 1e-7));
        }

        // equal-wall criterion: same wall iff gamma_1 = gamma_0 gamma, gamma_0 in SU(2)
        const MoebiusMatrix companion = g2 * g;
        CHECK(wall_equal(Wall{bisector_ball(companion)}, Wall{bisector_ball(g)}, 1e-7));
        const MoebiusMatrix other = random_matrix_min_norm(rng, 2.05);
        if (std::abs(other.normsq() - g.normsq()) > 1e-3) {
            CHECK_FALSE(wall_equal(Wall{bisector_ball(other)}, Wall{bisector_ball(g)}, 1e-7));
        }
    }
}

TEST_CASE("cusp lemma: eta0(hat(P)) interior when j is doubly exterior") {
    std::mt19937_64 rng(41);
    int hits = 0;
    for (int t = 0; t < 2000 && hits < 50; ++t) {
        const MoebiusMatrix m = random_matrix_min_norm(rng, 2.05);
        if (std::abs(m.c()) < 0.05) continue;
        const Quaternion j{0, 0, 1, 0};
        const BallSphereWall w = bisector_ball(m);
        const BallSphereWall winv = bisector_ball(m.inverse());
        const bool ext1 = (j - w.center).norm() - w.radius > 1e-6;
        const bool ext2 = (j - winv.center).norm() - winv.radius > 1e-6;
        if (!ext1 || !ext2) continue;
        ++hits;
        const BallBoundaryPoint hp =
            eta0(BoundaryPoint::at(isometric_sphere_half_space(m).center));
        CHECK((hp.p - w.center).norm() < w.radius);
    }
    CHECK(hits == 50);
}

TEST_CASE("wall equality conventions") {
    const Wall p1 = PlaneWall{Complex{1, 0}, 0.5};
    const Wall p2 = PlaneWall{Complex{-1, 0}, -0.5};
    const Wall p3 = PlaneWall{Complex{1, 0}, -0.5};
    CHECK(wall_equal(p1, p2, 1e-12));
    CHECK_FALSE(wall_equal(p1, p3, 1e-12));
    CHECK_FALSE(wall_equal(p1, Wall{SphereWall{Complex{}, 1.0}}, 1e-12));
}
