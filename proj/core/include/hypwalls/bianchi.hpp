#pragma once

#include <cstdint>
#include <vector>

#include "hypwalls/models.hpp"
#include "hypwalls/walls.hpp"

namespace hypwalls {

// Exact arithmetic context for O_K = Z[omega], K = Q(sqrt(-d)):
// omega = sqrt(-d) when d = 1,2 mod 4, omega = (1+sqrt(-d))/2 when d = 3 mod 4.
struct BianchiContext {
    int d = 1;
    bool half_mode = false;  // d = 3 mod 4: omega^2 = omega - (1+d)/4
    std::int64_t e = 0;      // (1+d)/4 in half mode
    std::int64_t disc = 0;   // field discriminant d_K (-4d or -d)

    Complex omega() const;
};

BianchiContext ring_ctx(int d);

// u + v * omega with exact integer coordinates.
struct RingElement {
    std::int64_t u = 0;
    std::int64_t v = 0;

    bool operator==(const RingElement&) const = default;
    bool is_zero() const { return u == 0 && v == 0; }
};

RingElement re_add(const RingElement& a, const RingElement& b);
RingElement re_sub(const RingElement& a, const RingElement& b);
RingElement re_neg(const RingElement& a);
RingElement re_mul(const BianchiContext& ctx, const RingElement& a, const RingElement& b);
RingElement re_conj(const BianchiContext& ctx, const RingElement& a);
// |a|^2, an exact nonnegative integer.
std::int64_t re_norm(const BianchiContext& ctx, const RingElement& a);
Complex re_to_complex(const BianchiContext& ctx, const RingElement& a);
// Exact division a/b in Z[omega]; returns false when b does not divide a.
bool re_divide(const BianchiContext& ctx, const RingElement& a, const RingElement& b,
               RingElement& out);

// omega_K = (d_K + sqrt(d_K))/2 expressed in Z[omega].
RingElement omega_k(const BianchiContext& ctx);

// 2x2 matrix over Z[omega].
struct RingMatrix {
    RingElement a, b, c, d;

    bool operator==(const RingMatrix&) const = default;
};

RingMatrix rm_mul(const BianchiContext& ctx, const RingMatrix& m, const RingMatrix& n);
RingMatrix rm_adjugate(const RingMatrix& m);
RingElement rm_det(const BianchiContext& ctx, const RingMatrix& m);
RingElement rm_trace(const RingMatrix& m);
std::int64_t rm_normsq(const BianchiContext& ctx, const RingMatrix& m);
RingMatrix rm_scale(const BianchiContext& ctx, const RingElement& s, const RingMatrix& m);
// Requires det = 1 exactly.
MoebiusMatrix rm_to_moebius(const BianchiContext& ctx, const RingMatrix& m);

// One hyperplane constraint of the Gamma_infinity prism: interior is
// Re(conj(normal) z) + offset >= 0. `pairing` is the group element whose
// bisector (or chamber reflection) the face belongs to.
struct FInftyFace {
    PlaneWall plane;
    MoebiusMatrix pairing;
};

struct FInftyRegion {
    std::vector<FInftyFace> faces;

    double margin(Complex z) const;  // min over faces
    bool contains(Complex z, double tol = 0.0) const { return margin(z) >= -tol; }
};

// The fundamental prism of Gamma_infinity over C, exactly the four printed
// cases (rectangle for d = 1,2 mod 4; hexagon for 3 < d = 3 mod 4; the
// special d = 3 and d = 1 regions).
FInftyRegion f_infty(const BianchiContext& ctx);

struct BianchiElement {
    RingMatrix exact;
    MoebiusMatrix matrix;
    std::int64_t normsq = 0;
};

// All det-1 matrices over Z[omega] with exact ||gamma||^2 <= bound, one
// representative per projective pair, sorted by (norm, entries).
std::vector<BianchiElement> enumerate_bianchi(const BianchiContext& ctx, std::int64_t normsq_bound);

// Ideal a*Z + (b + c*omega)*Z in Hermite normal form (a, c > 0, 0 <= b < a, c | a, c | b).
struct IdealHNF {
    std::int64_t a = 1;
    std::int64_t b = 0;
    std::int64_t c = 1;

    std::int64_t norm() const { return a * c; }
    bool operator==(const IdealHNF&) const = default;
};

IdealHNF ideal_from_generators(const BianchiContext& ctx, const std::vector<RingElement>& gens);
IdealHNF ideal_mul(const BianchiContext& ctx, const IdealHNF& lhs, const IdealHNF& rhs);
IdealHNF ideal_conj(const BianchiContext& ctx, const IdealHNF& ideal);
bool ideal_is_principal(const BianchiContext& ctx, const IdealHNF& ideal);
bool ideal_class_equal(const BianchiContext& ctx, const IdealHNF& lhs, const IdealHNF& rhs);

// True iff <alpha, beta> is a proper ideal of O_K (Hermite-form determinant > 1).
bool ideal_is_proper(const BianchiContext& ctx, const RingElement& alpha, const RingElement& beta);

// Class number of Q(sqrt(-d)) by exhaustive count of reduced primitive binary
// quadratic forms of discriminant d_K.
int class_number(const BianchiContext& ctx);

struct IdealPoint {
    bool infinity = false;
    // z = (r + omega)/q for finite points.
    std::int64_t r = 0;
    std::int64_t q = 1;
    Complex z{};
    // The sigma^2 tau mirror -conj(z) lands in the same cusp class.
    bool self_paired = false;
};

// Ideal points of the Bianchi fundamental domain: infinity plus one
// representative (r + omega)/q per nontrivial cusp class; the count equals
// class_number(ctx).
std::vector<IdealPoint> ideal_points(const BianchiContext& ctx);

struct CuspParabolics {
    RingMatrix gamma_plus;   // [[1+ab, -a^2], [b^2, 1-ab]]
    RingMatrix gamma_minus;  // same with omega_K factors
    RingMatrix gamma;        // [[ab, 1], [b^2, 0]], det = -b^2
};

// Rank-2 parabolic pair fixing alpha/beta together with the conjugating
// matrix: gamma^{-1} gamma_+ gamma = [[1,1],[0,1]] and
// gamma^{-1} gamma_- gamma = [[1,omega_K],[0,1]], all exact.
CuspParabolics cusp_parabolics(const BianchiContext& ctx, const RingElement& alpha,
                               const RingElement& beta);

}  // namespace hypwalls
