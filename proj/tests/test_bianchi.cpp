#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "hypwalls/bianchi.hpp"
#include "hypwalls/classify.hpp"

using namespace hypwalls;

namespace {

bool squarefree(int n) {
    for (int p = 2; p * p <= n; ++p) {
        if (n % (p * p) == 0) return false;
    }
    return n >= 1;
}

// Independent class-number oracle: count over the full (a, b) lattice box
// with none of the reduced-form shortcuts used by the implementation.
int class_number_brute(std::int64_t D) {
    int count = 0;
    for (std::int64_t a = 1; a * a <= (-D) * (-D); ++a) {
        if (3 * a * a > -D) break;
        for (std::int64_t b = -a; b <= a; ++b) {
            if ((b * b - D) % (4 * a) != 0) continue;
            const std::int64_t c = (b * b - D) / (4 * a);
            const bool reduced = (-a < b && b <= a && a <= c) && !(a == c && b < 0);
            if (!reduced) continue;
            std::int64_t g = std::gcd(std::gcd(a, std::abs(b)), c);
            if (g != 1) continue;
            ++count;
        }
    }
    return count;
}

}  // namespace

TEST_CASE("ring contexts") {
    const BianchiContext c1 = ring_ctx(1);
    CHECK_FALSE(c1.half_mode);
    CHECK(std::abs(c1.omega() - Complex{0, 1}) < 1e-15);
    CHECK(c1.disc == -4);

    const BianchiContext c3 = ring_ctx(3);
    CHECK(c3.half_mode);
    CHECK(std::abs(c3.omega() - Complex{0.5, std::sqrt(3.0) / 2.0}) < 1e-15);
    CHECK(c3.disc == -3);

    CHECK_THROWS_AS(ring_ctx(4), NotSquarefreeError);
    CHECK_THROWS_AS(ring_ctx(12), NotSquarefreeError);
    CHECK_THROWS_AS(ring_ctx(0), NotSquarefreeError);
}

TEST_CASE("exact ring arithmetic") {
    const BianchiContext ctx = ring_ctx(5);
    const RingElement w{0, 1};
    CHECK(re_mul(ctx, w, w) == RingElement{-5, 0});
    CHECK(re_norm(ctx, {2, 3}) == 4 + 45);
    CHECK(re_conj(ctx, {2, 3}) == RingElement{2, -3});

    const BianchiContext c7 = ring_ctx(7);  // e = 2, omega^2 = omega - 2
    CHECK(re_mul(c7, {0, 1}, {0, 1}) == RingElement{-2, 1});
    CHECK(re_norm(c7, {1, 1}) == 1 + 1 + 2);      // |1+omega|^2 = 4
    CHECK(re_conj(c7, {0, 1}) == RingElement{1, -1});  // conj(omega) = 1 - omega
    // conj agrees with the complex embedding
    const Complex emb = re_to_complex(c7, {3, -2});
    CHECK(std::abs(std::conj(emb) - re_to_complex(c7, re_conj(c7, {3, -2}))) < 1e-12);
    CHECK(std::abs(std::norm(emb) - static_cast<double>(re_norm(c7, {3, -2}))) < 1e-9);

    RingElement q;
    CHECK(re_divide(ctx, {10, 5}, {5, 0}, q));
    CHECK(q == RingElement{2, 1});
    CHECK_FALSE(re_divide(ctx, {1, 0}, {2, 0}, q));
}

TEST_CASE("f_infty regions match the printed cases") {
    // d = 2: |Re z| <= 1/2, |Im z| <= sqrt(2)/2
    const FInftyRegion r2 = f_infty(ring_ctx(2));
    CHECK(r2.contains(Complex{0.49, 0.70}, 1e-12));
    CHECK_FALSE(r2.contains(Complex{0.51, 0.0}));
    CHECK_FALSE(r2.contains(Complex{0.0, 0.72}));
    CHECK(r2.margin(Complex{0.5, 0.0}) == doctest::Approx(0.0));

    // d = 7: hexagon with vertices +-(d+1)sqrt(d)/(4d) i and +-1/2 +- (d-1)sqrt(d)/(4d) i
    const FInftyRegion r7 = f_infty(ring_ctx(7));
    const double s7 = std::sqrt(7.0);
    const Complex v1{0.0, 8.0 * s7 / 28.0};
    const Complex v2{0.5, 6.0 * s7 / 28.0};
    for (const Complex v : {v1, -v1, v2, -v2, std::conj(v2), -std::conj(v2)}) {
        CHECK(std::abs(r7.margin(v)) < 1e-12);  // vertices on the boundary
    }
    CHECK(r7.contains(Complex{0, 0}, 1e-12));
    CHECK(r7.contains(Complex{0.5, 0.5}, 1e-12));   // on the Re = 1/2 edge, below the corner
    CHECK_FALSE(r7.contains(Complex{0.5, 0.6}));    // beyond Re + sqrt(7) Im = 2
    CHECK_FALSE(r7.contains(Complex{0.6, 0.0}));

    // d = 3: 0 <= Re z <= 1/2, 0 <= Re z + sqrt(3) Im z <= 1
    const FInftyRegion r3 = f_infty(ring_ctx(3));
    CHECK(r3.contains(Complex{0.25, 0.1}, 1e-12));
    CHECK_FALSE(r3.contains(Complex{-0.01, 0.2}));
    CHECK_FALSE(r3.contains(Complex{0.25, 0.5}));
    CHECK(r3.margin(Complex{0.5, (1.0 - 0.5) / std::sqrt(3.0)}) == doctest::Approx(0.0));

    // d = 1: |Re z| <= 1/2, 0 <= Im z <= 1/2
    const FInftyRegion r1 = f_infty(ring_ctx(1));
    CHECK(r1.contains(Complex{-0.49, 0.49}, 1e-12));
    CHECK_FALSE(r1.contains(Complex{0.0, -0.01}));
    CHECK_FALSE(r1.contains(Complex{0.0, 0.51}));

    // prism tags satisfy d = conj(a) (DF-compatible chamber pairings)
    for (int d : {1, 2, 3, 7, 11}) {
        for (const FInftyFace& f : f_infty(ring_ctx(d)).faces) {
            CHECK(std::abs(f.pairing.d() - std::conj(f.pairing.a())) < 1e-12);
        }
    }
}

TEST_CASE("vertices of the prism stay inside the unit circle for d in {1,2,3,7,11}") {
    // exact integer inequalities: rectangle corners |v|^2 = (1+d)/4 <= 1 iff d <= 3;
    // hexagon corners (d+1)^2 <= 16 d  iff  d^2 - 14 d + 1 <= 0.
    for (const int d : {1, 2}) CHECK(1 + d <= 4);
    for (const int d : {7, 11}) {
        CHECK((d + 1) * (d + 1) <= 16 * d);              // i-vertex
        CHECK(4 * d + (d - 1) * (d - 1) <= 16 * d);      // corner vertex
    }
    // d = 3 special region: vertices 0, 1/(sqrt 3) i, 1/2 - i/(2 sqrt 3), 1/2 + i/(2 sqrt 3)
    const double s3 = std::sqrt(3.0);
    for (const Complex v :
         {Complex{0, 0}, Complex{0, 1.0 / s3}, Complex{0.5, -0.5 / s3}, Complex{0.5, 0.5 / s3}}) {
        CHECK(std::abs(v) <= 1.0 + 1e-12);
    }
    // numeric double check against the region planes
    for (const int d : {2, 7, 11}) {
        const FInftyRegion region = f_infty(ring_ctx(d));
        // walk the boundary coarsely: margin 0 points must satisfy |z| <= 1 for these d
        for (const FInftyFace& f : region.faces) {
            const Complex n = f.plane.normal;
            const Complex base = -f.plane.offset * n;
            const Complex dir = n * Complex{0, 1};
            for (double t = -2.0; t <= 2.0; t += 0.01) {
                const Complex z = base + t * dir;
                if (region.margin(z) > -1e-9) CHECK(std::abs(z) <= 1.0 + 1e-9);
            }
        }
    }
}

TEST_CASE("bianchi enumeration") {
    const BianchiContext ctx = ring_ctx(1);
    const auto norm2 = enumerate_bianchi(ctx, 2);
    // exactly the monomial matrices of norm 2 (projectively): I, diag(i,-i),
    // [[0,-1],[1,0]]-class, [[0,i],[i,0]]-class
    CHECK(norm2.size() == 4);
    for (const BianchiElement& e : norm2) {
        CHECK(e.normsq == 2);
        const bool diag = e.exact.b.is_zero() && e.exact.c.is_zero();
        const bool anti = e.exact.a.is_zero() && e.exact.d.is_zero();
        CHECK((diag || anti));
    }

    const auto elems = enumerate_bianchi(ctx, 12);
    CHECK(elems.size() > 8);
    std::set<std::array<std::int64_t, 8>> keys;
    for (const BianchiElement& e : elems) {
        // determinant is exactly one
        CHECK(rm_det(ctx, e.exact) == RingElement{1, 0});
        CHECK(e.normsq <= 12);
        // j never interior: |a|^2 + |c|^2 is a nonnegative integer, and 0 forces det 0
        const std::int64_t s = re_norm(ctx, e.exact.a) + re_norm(ctx, e.exact.c);
        CHECK(s >= 1);
        keys.insert({e.exact.a.u, e.exact.a.v, e.exact.b.u, e.exact.b.v, e.exact.c.u, e.exact.c.v,
                     e.exact.d.u, e.exact.d.v});
    }
    CHECK(keys.size() == elems.size());  // no duplicates

    // closed under inverse and under gamma_0 companions
    const auto find = [&](const RingMatrix& m) {
        const auto canon = [](RingMatrix x) {
            for (const RingElement* e : {&x.a, &x.b, &x.c, &x.d}) {
                if (e->is_zero()) continue;
                if (e->u < 0 || (e->u == 0 && e->v < 0))
                    return RingMatrix{re_neg(x.a), re_neg(x.b), re_neg(x.c), re_neg(x.d)};
                break;
            }
            return x;
        };
        const RingMatrix c = canon(m);
        return std::any_of(elems.begin(), elems.end(),
                           [&](const BianchiElement& e) { return e.exact == c; });
    };
    for (const BianchiElement& e : elems) {
        CHECK(find(rm_adjugate(e.exact)));  // inverse for det 1
        const RingMatrix g0gamma{re_neg(e.exact.c), re_neg(e.exact.d), e.exact.a, e.exact.b};
        CHECK(find(g0gamma));
    }
}

TEST_CASE("class numbers from reduced forms") {
    CHECK(class_number(ring_ctx(1)) == 1);
    CHECK(class_number(ring_ctx(2)) == 1);
    CHECK(class_number(ring_ctx(3)) == 1);
    CHECK(class_number(ring_ctx(5)) == 2);
    CHECK(class_number(ring_ctx(6)) == 2);
    CHECK(class_number(ring_ctx(14)) == 4);
    CHECK(class_number(ring_ctx(23)) == 3);
    for (int d = 1; d <= 40; ++d) {
        if (!squarefree(d)) continue;
        const BianchiContext ctx = ring_ctx(d);
        CHECK(class_number(ctx) == class_number_brute(ctx.disc));
    }
}

TEST_CASE("ideal machinery") {
    const BianchiContext z5 = ring_ctx(5);
    CHECK(ideal_is_proper(z5, {2, 0}, {1, 1}));  // <2, 1+sqrt(-5)>: norm 2
    const BianchiContext z1 = ring_ctx(1);
    CHECK_FALSE(ideal_is_proper(z1, {3, 0}, {1, 1}));  // 3 - (1+i)(1-i) = 1
    CHECK_FALSE(ideal_is_proper(z5, {1, 0}, {7, 3}));  // contains 1

    const IdealHNF two = ideal_from_generators(
        z5, {{2, 0}, {1, 1}, re_mul(z5, {0, 1}, {2, 0}), re_mul(z5, {0, 1}, {1, 1})});
    CHECK(two.norm() == 2);
    CHECK_FALSE(ideal_is_principal(z5, two));
    // <2,1+w>^2 = <2> is principal (the class has order two)
    CHECK(ideal_is_principal(z5, ideal_mul(z5, two, two)));
    CHECK(ideal_class_equal(z5, two, ideal_conj(z5, two)));

    // 2 is inert-free sanity in Z[i]: <1+i> is principal with norm 2
    const IdealHNF onepi = ideal_from_generators(
        z1, {{1, 1}, re_mul(z1, {0, 1}, {1, 1})});
    CHECK(onepi.norm() == 2);
    CHECK(ideal_is_principal(z1, onepi));
}

TEST_CASE("ideal points for the class-number-one fields") {
    for (const int d : {1, 2, 3, 7, 11, 19}) {
        const auto pts = ideal_points(ring_ctx(d));
        REQUIRE(pts.size() == 1);
        CHECK(pts[0].infinity);
    }
}

TEST_CASE("ideal points d=5 and d=15") {
    const auto p5 = ideal_points(ring_ctx(5));
    REQUIRE(p5.size() == 2);
    CHECK(p5[0].infinity);
    CHECK(p5[1].q == 2);
    CHECK(p5[1].r == 1);
    CHECK(std::abs(p5[1].z - Complex{0.5, std::sqrt(5.0) / 2.0}) < 1e-12);

    const auto p15 = ideal_points(ring_ctx(15));
    REQUIRE(p15.size() == 2);
    CHECK(p15[1].q == 2);
    CHECK(p15[1].r == 0);  // omega/2
    CHECK(std::abs(p15[1].z - ring_ctx(15).omega() / 2.0) < 1e-12);
}

TEST_CASE("ideal point count equals the class number for squarefree d <= 40") {
    for (int d = 1; d <= 40; ++d) {
        if (!squarefree(d)) continue;
        const BianchiContext ctx = ring_ctx(d);
        const auto pts = ideal_points(ctx);
        CHECK(static_cast<int>(pts.size()) == class_number(ctx));
        for (const IdealPoint& p : pts) {
            if (p.infinity) continue;
            // arithmetic consistency: <r+omega, q> proper, and |z| >= 1
            CHECK(ideal_is_proper(ctx, {p.r, 1}, {p.q, 0}));
            CHECK(std::abs(p.z) >= 1.0 - 1e-12);
        }
    }
}

TEST_CASE("brute-force scan oracle for the finite ideal points") {
    // independent of the ideal-class machinery: scan the full rectangle
    // 0 <= r < q and count candidate residues for d = 5 and d = 15
    {
        const BianchiContext ctx = ring_ctx(5);
        std::vector<std::pair<int, int>> hits;
        for (int q = 2; q * q * 3 <= 4 * 5; ++q) {
            for (int r = 0; r < q; ++r) {
                if (re_norm(ctx, {r, 1}) % q == 0 && q * q <= re_norm(ctx, {r, 1})) {
                    hits.push_back({r, q});
                }
            }
        }
        REQUIRE(hits.size() == 1);
        CHECK(hits[0] == std::pair{1, 2});
    }
    {
        const BianchiContext ctx = ring_ctx(15);
        std::vector<std::pair<int, int>> hits;
        for (int q = 2; q <= (2 + 7) / 3; ++q) {  // (2 + sqrt(4+45))/3 = 3
            for (int r = 0; r < q; ++r) {
                const auto n = re_norm(ctx, {r, 1});
                if (n % q == 0 && q * q <= n && 2 * std::abs(2 * r + 1) <= 2 * q) {
                    hits.push_back({r, q});
                }
            }
        }
        REQUIRE(hits.size() == 1);
        CHECK(hits[0] == std::pair{0, 2});
    }
}

TEST_CASE("cusp parabolics") {
    std::mt19937_64 rng(61);
    std::uniform_int_distribution<std::int64_t> coeff(-4, 4);
    for (const int d : {1, 2, 5, 6, 15}) {
        const BianchiContext ctx = ring_ctx(d);
        const RingElement one{1, 0};
        for (int t = 0; t < 10; ++t) {
            const RingElement alpha{coeff(rng), coeff(rng)};
            RingElement beta{coeff(rng), coeff(rng)};
            if (beta.is_zero()) beta = {1, 0};
            const CuspParabolics cp = cusp_parabolics(ctx, alpha, beta);

            CHECK(rm_det(ctx, cp.gamma_plus) == one);
            CHECK(rm_det(ctx, cp.gamma_minus) == one);
            CHECK(rm_trace(cp.gamma_plus) == RingElement{2, 0});

            // gamma^{-1} gamma_+ gamma = [[1,1],[0,1]] exactly:
            // adj(gamma) gamma_+ gamma = det(gamma) [[1,1],[0,1]]
            const RingElement det = rm_det(ctx, cp.gamma);
            const RingMatrix lhs =
                rm_mul(ctx, rm_mul(ctx, rm_adjugate(cp.gamma), cp.gamma_plus), cp.gamma);
            const RingMatrix expected =
                rm_scale(ctx, det, RingMatrix{one, one, RingElement{0, 0}, one});
            CHECK(lhs == expected);

            const RingMatrix lhs2 =
                rm_mul(ctx, rm_mul(ctx, rm_adjugate(cp.gamma), cp.gamma_minus), cp.gamma);
            const RingMatrix expected2 = rm_scale(
                ctx, det, RingMatrix{one, omega_k(ctx), RingElement{0, 0}, one});
            CHECK(lhs2 == expected2);
        }
    }

    // alpha = 1 + sqrt(-5), beta = 2: both parabolics fix (1+sqrt(-5))/2
    const BianchiContext z5 = ring_ctx(5);
    const CuspParabolics cp = cusp_parabolics(z5, {1, 1}, {2, 0});
    const Complex p = re_to_complex(z5, {1, 1}) / 2.0;
    for (const RingMatrix* g : {&cp.gamma_plus, &cp.gamma_minus}) {
        const MoebiusMatrix m = rm_to_moebius(z5, *g);
        bool fixes = false;
        for (const BoundaryPoint& fp : fixed_points(m)) {
            if (!fp.infinity && std::abs(fp.z - p) < 1e-9) fixes = true;
        }
        CHECK(fixes);
    }

    CHECK_THROWS_AS(cusp_parabolics(z5, {1, 0}, {0, 0}), DomainError);
}
