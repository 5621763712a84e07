#include "hypwalls/bianchi.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>

namespace hypwalls {

namespace {

std::int64_t isqrt_floor(std::int64_t x) {
    if (x < 0) return -1;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

bool is_square(std::int64_t x, std::int64_t& root) {
    if (x < 0) return false;
    root = isqrt_floor(x);
    return root * root == x;
}

// g = gcd(a,b) with x a + y b = g
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
    if (b == 0) {
        x = a >= 0 ? 1 : -1;
        y = 0;
        return std::abs(a);
    }
    std::int64_t x1, y1;
    const std::int64_t g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

std::int64_t pos_mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

Complex BianchiContext::omega() const {
    const double sq = std::sqrt(static_cast<double>(d));
    return half_mode ? Complex{0.5, 0.5 * sq} : Complex{0.0, sq};
}

BianchiContext ring_ctx(int d) {
    if (d < 1) throw NotSquarefreeError(d);
    for (std::int64_t p = 2; p * p <= d; ++p) {
        if (d % (p * p) == 0) throw NotSquarefreeError(d);
    }
    BianchiContext ctx;
    ctx.d = d;
    ctx.half_mode = (d % 4 == 3);
    ctx.e = ctx.half_mode ? (1 + static_cast<std::int64_t>(d)) / 4 : 0;
    ctx.disc = ctx.half_mode ? -static_cast<std::int64_t>(d) : -4 * static_cast<std::int64_t>(d);
    return ctx;
}

RingElement re_add(const RingElement& a, const RingElement& b) { return {a.u + b.u, a.v + b.v}; }
RingElement re_sub(const RingElement& a, const RingElement& b) { return {a.u - b.u, a.v - b.v}; }
RingElement re_neg(const RingElement& a) { return {-a.u, -a.v}; }

RingElement re_mul(const BianchiContext& ctx, const RingElement& a, const RingElement& b) {
    if (ctx.half_mode) {
        // omega^2 = omega - e
        return {a.u * b.u - ctx.e * a.v * b.v, a.u * b.v + a.v * b.u + a.v * b.v};
    }
    // omega^2 = -d
    return {a.u * b.u - ctx.d * a.v * b.v, a.u * b.v + a.v * b.u};
}

RingElement re_conj(const BianchiContext& ctx, const RingElement& a) {
    if (ctx.half_mode) return {a.u + a.v, -a.v};  // conj(omega) = 1 - omega
    return {a.u, -a.v};
}

std::int64_t re_norm(const BianchiContext& ctx, const RingElement& a) {
    if (ctx.half_mode) return a.u * a.u + a.u * a.v + ctx.e * a.v * a.v;
    return a.u * a.u + ctx.d * a.v * a.v;
}

Complex re_to_complex(const BianchiContext& ctx, const RingElement& a) {
    return static_cast<double>(a.u) + static_cast<double>(a.v) * ctx.omega();
}

bool re_divide(const BianchiContext& ctx, const RingElement& a, const RingElement& b,
               RingElement& out) {
    const std::int64_t n = re_norm(ctx, b);
    if (n == 0) return false;
    const RingElement num = re_mul(ctx, a, re_conj(ctx, b));
    if (num.u % n != 0 || num.v % n != 0) return false;
    out = {num.u / n, num.v / n};
    return true;
}

RingElement omega_k(const BianchiContext& ctx) {
    if (ctx.half_mode) return {-(1 + static_cast<std::int64_t>(ctx.d)) / 2, 1};
    return {-2 * static_cast<std::int64_t>(ctx.d), 1};
}

RingMatrix rm_mul(const BianchiContext& ctx, const RingMatrix& m, const RingMatrix& n) {
    return {re_add(re_mul(ctx, m.a, n.a), re_mul(ctx, m.b, n.c)),
            re_add(re_mul(ctx, m.a, n.b), re_mul(ctx, m.b, n.d)),
            re_add(re_mul(ctx, m.c, n.a), re_mul(ctx, m.d, n.c)),
            re_add(re_mul(ctx, m.c, n.b), re_mul(ctx, m.d, n.d))};
}

RingMatrix rm_adjugate(const RingMatrix& m) { return {m.d, re_neg(m.b), re_neg(m.c), m.a}; }

RingElement rm_det(const BianchiContext& ctx, const RingMatrix& m) {
    return re_sub(re_mul(ctx, m.a, m.d), re_mul(ctx, m.b, m.c));
}

RingElement rm_trace(const RingMatrix& m) { return re_add(m.a, m.d); }

std::int64_t rm_normsq(const BianchiContext& ctx, const RingMatrix& m) {
    return re_norm(ctx, m.a) + re_norm(ctx, m.b) + re_norm(ctx, m.c) + re_norm(ctx, m.d);
}

RingMatrix rm_scale(const BianchiContext& ctx, const RingElement& s, const RingMatrix& m) {
    return {re_mul(ctx, s, m.a), re_mul(ctx, s, m.b), re_mul(ctx, s, m.c), re_mul(ctx, s, m.d)};
}

MoebiusMatrix rm_to_moebius(const BianchiContext& ctx, const RingMatrix& m) {
    return {re_to_complex(ctx, m.a), re_to_complex(ctx, m.b), re_to_complex(ctx, m.c),
            re_to_complex(ctx, m.d)};
}

double FInftyRegion::margin(Complex z) const {
    double best = std::numeric_limits<double>::infinity();
    for (const FInftyFace& f : faces) {
        const double m = (std::conj(f.plane.normal) * z).real() + f.plane.offset;
        best = std::min(best, m);
    }
    return best;
}

namespace {

FInftyFace translation_face(const BianchiContext& ctx, const RingElement& mu) {
    const Complex muc = re_to_complex(ctx, mu);
    const double len = std::abs(muc);
    PlaneWall plane{muc / len, len / 2.0};
    MoebiusMatrix pairing{1.0, muc, 0.0, 1.0};
    return {plane, pairing};
}

FInftyFace chamber_face(Complex normal, const MoebiusMatrix& pairing) {
    return {PlaneWall{normal / std::abs(normal), 0.0}, pairing};
}

}  // namespace

FInftyRegion f_infty(const BianchiContext& ctx) {
    FInftyRegion region;
    if (ctx.d == 1) {
        region.faces.push_back(translation_face(ctx, {1, 0}));
        region.faces.push_back(translation_face(ctx, {-1, 0}));
        region.faces.push_back(translation_face(ctx, {0, -1}));  // Im z <= 1/2
        region.faces.push_back(
            chamber_face(Complex{0.0, 1.0}, MoebiusMatrix{{0.0, 1.0}, 0.0, 0.0, {0.0, -1.0}}));
        return region;
    }
    if (!ctx.half_mode) {
        for (const RingElement mu : {RingElement{1, 0}, RingElement{-1, 0}, RingElement{0, 1},
                                     RingElement{0, -1}}) {
            region.faces.push_back(translation_face(ctx, mu));
        }
        return region;
    }
    if (ctx.d == 3) {
        const Complex w = ctx.omega();
        const MoebiusMatrix rot{w, 0.0, 0.0, Complex{1.0, 0.0} - w};  // z -> omega^2 z
        region.faces.push_back(translation_face(ctx, {-1, 0}));      // Re z <= 1/2
        region.faces.push_back(translation_face(ctx, {0, -1}));      // Re + sqrt3 Im <= 1
        // The chamber rays arg = pi/2 and arg = -pi/6 are swapped by the
        // order-3 rotation; each face is tagged with the element mapping it
        // onto its partner.
        region.faces.push_back(chamber_face(Complex{1.0, 0.0}, rot.inverse()));  // Re z >= 0
        region.faces.push_back(chamber_face(w, rot));  // Re + sqrt3 Im >= 0
        return region;
    }
    for (const RingElement mu : {RingElement{1, 0}, RingElement{-1, 0}, RingElement{0, 1},
                                 RingElement{0, -1}, RingElement{-1, 1}, RingElement{1, -1}}) {
        region.faces.push_back(translation_face(ctx, mu));
    }
    return region;
}

namespace {

std::vector<RingElement> elements_up_to_norm(const BianchiContext& ctx, std::int64_t bound) {
    std::vector<RingElement> out;
    if (bound < 0) return out;
    if (!ctx.half_mode) {
        const std::int64_t vmax = isqrt_floor(bound / ctx.d);
        for (std::int64_t v = -vmax; v <= vmax; ++v) {
            const std::int64_t umax = isqrt_floor(bound - ctx.d * v * v);
            for (std::int64_t u = -umax; u <= umax; ++u) out.push_back({u, v});
        }
        return out;
    }
    // (2u+v)^2 + d v^2 <= 4 bound
    const std::int64_t vmax = isqrt_floor(4 * bound / ctx.d);
    for (std::int64_t v = -vmax; v <= vmax; ++v) {
        const std::int64_t m = isqrt_floor(4 * bound - ctx.d * v * v);
        for (std::int64_t w = -m; w <= m; ++w) {
            if ((w - v) % 2 != 0) continue;
            const RingElement x{(w - v) / 2, v};
            if (re_norm(ctx, x) <= bound) out.push_back(x);
        }
    }
    return out;
}

bool ring_entry_negative(const RingElement& x) { return x.u < 0 || (x.u == 0 && x.v < 0); }

RingMatrix canonical_sign(const RingMatrix& m) {
    for (const RingElement* e : {&m.a, &m.b, &m.c, &m.d}) {
        if (e->is_zero()) continue;
        if (ring_entry_negative(*e)) {
            return {re_neg(m.a), re_neg(m.b), re_neg(m.c), re_neg(m.d)};
        }
        break;
    }
    return m;
}

std::array<std::int64_t, 8> matrix_key(const RingMatrix& m) {
    return {m.a.u, m.a.v, m.b.u, m.b.v, m.c.u, m.c.v, m.d.u, m.d.v};
}

}  // namespace

std::vector<BianchiElement> enumerate_bianchi(const BianchiContext& ctx, std::int64_t bound) {
    std::vector<RingMatrix> found;
    const RingElement one{1, 0};
    const auto smalls = elements_up_to_norm(ctx, bound);

    // a = 0: -bc = 1, so b is a unit and c = -b^{-1} = -conj(b).
    for (const RingElement& b : smalls) {
        if (re_norm(ctx, b) != 1) continue;
        const RingElement c = re_neg(re_conj(ctx, b));
        for (const RingElement& d : smalls) {
            if (2 + re_norm(ctx, d) > bound) continue;
            found.push_back(canonical_sign({RingElement{0, 0}, b, c, d}));
        }
    }
    // a != 0: d = (1 + bc)/a when the division is exact.
    for (const RingElement& a : smalls) {
        if (a.is_zero()) continue;
        const std::int64_t na = re_norm(ctx, a);
        for (const RingElement& b : smalls) {
            const std::int64_t nab = na + re_norm(ctx, b);
            if (nab > bound) continue;
            for (const RingElement& c : smalls) {
                const std::int64_t nabc = nab + re_norm(ctx, c);
                if (nabc > bound) continue;
                const RingElement num = re_add(one, re_mul(ctx, b, c));
                RingElement d;
                if (!re_divide(ctx, num, a, d)) continue;
                if (nabc + re_norm(ctx, d) > bound) continue;
                found.push_back(canonical_sign({a, b, c, d}));
            }
        }
    }

    std::sort(found.begin(), found.end(), [&](const RingMatrix& x, const RingMatrix& y) {
        const std::int64_t nx = rm_normsq(ctx, x), ny = rm_normsq(ctx, y);
        if (nx != ny) return nx < ny;
        return matrix_key(x) < matrix_key(y);
    });
    found.erase(std::unique(found.begin(), found.end()), found.end());

    std::vector<BianchiElement> out;
    out.reserve(found.size());
    for (const RingMatrix& m : found) {
        out.push_back({m, rm_to_moebius(ctx, m), rm_normsq(ctx, m)});
    }
    return out;
}

IdealHNF ideal_from_generators([[maybe_unused]] const BianchiContext& ctx,
                               const std::vector<RingElement>& gens) {
    // Row-reduce the Z-module spanned by gens (coordinates in {1, omega}).
    std::int64_t b0 = 0, c0 = 0;
    std::vector<RingElement> work = gens;
    for (const RingElement& g : work) {
        if (g.v == 0) continue;
        if (c0 == 0) {
            b0 = g.u;
            c0 = g.v;
        } else {
            std::int64_t x, y;
            const std::int64_t g2 = ext_gcd(c0, g.v, x, y);
            const std::int64_t nb = x * b0 + y * g.u;
            b0 = nb;
            c0 = g2;
        }
        if (c0 < 0) {
            c0 = -c0;
            b0 = -b0;
        }
    }
    if (c0 == 0) throw DomainError("module has rank < 2 (zero ideal?)");
    std::int64_t a = 0;
    for (const RingElement& g : work) {
        const std::int64_t rest = g.u - (g.v / c0) * b0;  // g.v divisible by c0 by construction
        a = std::gcd(a, std::abs(rest));
    }
    if (a == 0) throw DomainError("module has rank < 2");
    return {a, pos_mod(b0, a), c0};
}

namespace {

std::vector<RingElement> ideal_basis(const IdealHNF& ideal) {
    return {{ideal.a, 0}, {ideal.b, ideal.c}};
}

}  // namespace

IdealHNF ideal_mul(const BianchiContext& ctx, const IdealHNF& lhs, const IdealHNF& rhs) {
    std::vector<RingElement> gens;
    for (const RingElement& x : ideal_basis(lhs)) {
        for (const RingElement& y : ideal_basis(rhs)) gens.push_back(re_mul(ctx, x, y));
    }
    return ideal_from_generators(ctx, gens);
}

IdealHNF ideal_conj(const BianchiContext& ctx, const IdealHNF& ideal) {
    std::vector<RingElement> gens;
    for (const RingElement& x : ideal_basis(ideal)) {
        const RingElement xc = re_conj(ctx, x);
        gens.push_back(xc);
        gens.push_back(re_mul(ctx, xc, {0, 1}));
    }
    return ideal_from_generators(ctx, gens);
}

bool ideal_is_principal(const BianchiContext& ctx, const IdealHNF& ideal) {
    // Strip the rational content: ideal = c * <q, r + omega>.
    const std::int64_t q = ideal.a / ideal.c;
    const std::int64_t r = ideal.b / ideal.c;
    if (q == 1) return true;
    // Principal iff some element s + t*omega of the primitive part has norm q.
    if (!ctx.half_mode) {
        const std::int64_t tmax = isqrt_floor(q / ctx.d);
        for (std::int64_t t = -tmax; t <= tmax; ++t) {
            std::int64_t s;
            if (!is_square(q - ctx.d * t * t, s)) continue;
            for (const std::int64_t sv : {s, -s}) {
                if (pos_mod(sv - t * r, q) == 0) return true;
                if (s == 0) break;
            }
        }
        return false;
    }
    const std::int64_t tmax = isqrt_floor(4 * q / ctx.d);
    for (std::int64_t t = -tmax; t <= tmax; ++t) {
        std::int64_t m;
        if (!is_square(4 * q - ctx.d * t * t, m)) continue;
        for (const std::int64_t mv : {m, -m}) {
            if ((mv - t) % 2 != 0) continue;
            const std::int64_t s = (mv - t) / 2;
            if (pos_mod(s - t * r, q) == 0) return true;
            if (m == 0) break;
        }
    }
    return false;
}

bool ideal_class_equal(const BianchiContext& ctx, const IdealHNF& lhs, const IdealHNF& rhs) {
    return ideal_is_principal(ctx, ideal_mul(ctx, lhs, ideal_conj(ctx, rhs)));
}

bool ideal_is_proper(const BianchiContext& ctx, const RingElement& alpha, const RingElement& beta) {
    if (alpha.is_zero() && beta.is_zero()) throw DomainError("<0, 0> is not an ideal");
    const RingElement w{0, 1};
    const IdealHNF ideal = ideal_from_generators(
        ctx, {alpha, beta, re_mul(ctx, w, alpha), re_mul(ctx, w, beta)});
    return ideal.norm() > 1;
}

int class_number(const BianchiContext& ctx) {
    const std::int64_t D = ctx.disc;  // negative fundamental discriminant
    int count = 0;
    for (std::int64_t a = 1; 3 * a * a <= -D; ++a) {
        for (std::int64_t b = -a + 1; b <= a; ++b) {
            const std::int64_t num = b * b - D;
            if (num % (4 * a) != 0) continue;
            const std::int64_t c = num / (4 * a);
            if (c < a) continue;
            if (a == c && b < 0) continue;
            if (std::gcd(std::gcd(a, std::abs(b)), c) != 1) continue;
            ++count;
        }
    }
    return count;
}

namespace {

// 2 Re(r + omega) as an exact integer numerator over denominator 2.
std::int64_t two_re(const BianchiContext& ctx, std::int64_t r) {
    return ctx.half_mode ? 2 * r + 1 : 2 * r;
}

}  // namespace

std::vector<IdealPoint> ideal_points(const BianchiContext& ctx) {
    struct Candidate {
        std::int64_t r, q;
        IdealHNF ideal;
    };
    std::vector<Candidate> cands;

    // The printed q bounds (q^2 <= 4d/3 resp. q <= (2+sqrt(4+3d))/3) are
    // implied by the strip and q <= |r+omega| constraints below; scanning a
    // slightly larger range is exact-safe.
    const std::int64_t qmax = isqrt_floor(4 * static_cast<std::int64_t>(ctx.d) / 3) + 2;
    for (std::int64_t q = 2; q <= qmax; ++q) {
        // strip: 2|Re(r + omega)| <= q, dropping the Re = -q/2 boundary copy
        for (std::int64_t r = -q; r <= q; ++r) {
            const std::int64_t t = two_re(ctx, r);
            if (t <= -q || t > q) continue;  // keep the +q/2 representative only
            const RingElement rw{r, 1};
            const std::int64_t n = re_norm(ctx, rw);
            if (n % q != 0) continue;      // q | |r+omega|^2
            if (q * q > n) continue;       // q <= |r+omega|  (equivalently |z| >= 1)
            // |Im(r+omega)|^2 <= d q^2 / 4, exact rational comparison
            const std::int64_t im4 = ctx.half_mode ? ctx.d : 4 * ctx.d;  // 4 Im^2
            if (im4 > ctx.d * q * q) continue;
            cands.push_back({r, q, IdealHNF{q, pos_mod(r, q), 1}});
        }
    }

    // Group by cusp class (= ideal class); keep one representative per class.
    std::vector<int> cls(cands.size(), -1);
    int nclasses = 0;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        if (cls[i] >= 0) continue;
        cls[i] = nclasses++;
        for (std::size_t jj = i + 1; jj < cands.size(); ++jj) {
            if (cls[jj] < 0 && ideal_class_equal(ctx, cands[i].ideal, cands[jj].ideal)) {
                cls[jj] = cls[i];
            }
        }
    }

    std::vector<IdealPoint> out;
    IdealPoint inf;
    inf.infinity = true;
    inf.self_paired = true;
    out.push_back(inf);
    for (int k = 0; k < nclasses; ++k) {
        const Candidate* best = nullptr;
        for (std::size_t i = 0; i < cands.size(); ++i) {
            if (cls[i] != k) continue;
            if (!best) {
                best = &cands[i];
                continue;
            }
            const auto key = [](const Candidate& c) {
                return std::array<std::int64_t, 3>{c.q, c.r < 0 ? 1 : 0, std::abs(c.r)};
            };
            if (key(cands[i]) < key(*best)) best = &cands[i];
        }
        IdealPoint pt;
        pt.infinity = false;
        pt.r = best->r;
        pt.q = best->q;
        pt.z = (static_cast<double>(best->r) + ctx.omega()) / static_cast<double>(best->q);
        pt.self_paired = ideal_class_equal(ctx, best->ideal, ideal_conj(ctx, best->ideal));
        out.push_back(pt);
    }
    std::sort(out.begin(), out.end(), [](const IdealPoint& x, const IdealPoint& y) {
        if (x.infinity != y.infinity) return x.infinity;
        if (x.q != y.q) return x.q < y.q;
        return x.r < y.r;
    });
    return out;
}

CuspParabolics cusp_parabolics(const BianchiContext& ctx, const RingElement& alpha,
                               const RingElement& beta) {
    if (beta.is_zero()) throw DomainError("cusp parabolics require beta != 0");
    const RingElement one{1, 0};
    const RingElement ab = re_mul(ctx, alpha, beta);
    const RingElement a2 = re_mul(ctx, alpha, alpha);
    const RingElement b2 = re_mul(ctx, beta, beta);
    const RingElement wk = omega_k(ctx);

    CuspParabolics out;
    out.gamma_plus = {re_add(one, ab), re_neg(a2), b2, re_sub(one, ab)};
    out.gamma_minus = {re_add(one, re_mul(ctx, wk, ab)), re_neg(re_mul(ctx, wk, a2)),
                       re_mul(ctx, wk, b2), re_sub(one, re_mul(ctx, wk, ab))};
    out.gamma = {ab, one, b2, RingElement{0, 0}};
    return out;
}

}  // namespace hypwalls
