#include "hypwalls/domains.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <sstream>
#include <thread>

namespace hypwalls {

namespace {

std::array<std::int64_t, 8> quantized_key(const MoebiusMatrix& m) {
    const auto q = [](Complex v) {
        return std::pair{static_cast<std::int64_t>(std::llround(v.real() * 1e9)),
                         static_cast<std::int64_t>(std::llround(v.imag() * 1e9))};
    };
    const auto [ar, ai] = q(m.a());
    const auto [br, bi] = q(m.b());
    const auto [cr, ci] = q(m.c());
    const auto [dr, di] = q(m.d());
    return {ar, ai, br, bi, cr, ci, dr, di};
}

bool element_order(const EnumeratedElement& x, const EnumeratedElement& y) {
    if (std::abs(x.normsq - y.normsq) > 1e-9) return x.normsq < y.normsq;
    if (x.word.size() != y.word.size()) return x.word.size() < y.word.size();
    return x.word < y.word;
}

void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& body) {
    if (threads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    const int nt = std::min<std::size_t>(threads, n);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nt));
    std::atomic<std::size_t> next{0};
    for (int t = 0; t < nt; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) body(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace

std::vector<EnumeratedElement> enumerate_group(const GroupSpec& spec, int max_word_len,
                                               double norm_bound) {
    if (max_word_len < 1) throw DomainError("max_word_len must be >= 1");
    struct Letter {
        MoebiusMatrix m;
        char label;
        int inverse_of;  // index of the cancelling letter
    };
    std::vector<Letter> alphabet;
    for (std::size_t i = 0; i < spec.generators.size(); ++i) {
        const char lo = static_cast<char>('a' + i);
        const char up = static_cast<char>('A' + i);
        const int base = static_cast<int>(alphabet.size());
        alphabet.push_back({spec.generators[i], lo, base + 1});
        alphabet.push_back({spec.generators[i].inverse(), up, base});
    }

    std::map<std::array<std::int64_t, 8>, EnumeratedElement> seen;
    const auto try_insert = [&](const MoebiusMatrix& m, const std::string& word) {
        EnumeratedElement e{m, word, m.normsq()};
        auto [it, inserted] = seen.emplace(quantized_key(m), e);
        if (!inserted && element_order(e, it->second)) it->second = e;
        return inserted;
    };

    struct Node {
        MoebiusMatrix m;
        std::string word;
        int last = -1;
    };
    std::vector<Node> frontier{{MoebiusMatrix{}, "", -1}};
    try_insert(MoebiusMatrix{}, "");
    for (int len = 1; len <= max_word_len; ++len) {
        std::vector<Node> next;
        for (const Node& node : frontier) {
            for (std::size_t li = 0; li < alphabet.size(); ++li) {
                if (node.last >= 0 && static_cast<int>(li) == alphabet[node.last].inverse_of)
                    continue;  // reduced words only
                const MoebiusMatrix m = node.m * alphabet[li].m;
                Node child{m, node.word + alphabet[li].label, static_cast<int>(li)};
                try_insert(m, child.word);
                next.push_back(std::move(child));
            }
        }
        frontier = std::move(next);
    }
    for (std::size_t i = 0; i < spec.extra_elements.size(); ++i) {
        const char label = static_cast<char>('r' + (i % 8));
        try_insert(spec.extra_elements[i], std::string("+") + label + std::to_string(i));
        try_insert(spec.extra_elements[i].inverse(), std::string("-") + label + std::to_string(i));
    }

    std::vector<EnumeratedElement> out;
    out.reserve(seen.size());
    for (auto& [key, e] : seen) {
        if (e.normsq <= norm_bound + 1e-9) out.push_back(e);
    }
    std::sort(out.begin(), out.end(), element_order);
    return out;
}

namespace {

void add_bisector_wall(std::vector<TaggedWall>& walls, const EnumeratedElement& e, double tol) {
    const Wall w = bisector_half_space(e.matrix, tol);
    for (TaggedWall& tw : walls) {
        if (tw.source == WallSource::Bisector && wall_equal(tw.wall, w, std::max(tol, 1e-7))) {
            tw.tags.push_back(e);
            std::sort(tw.tags.begin(), tw.tags.end(), element_order);
            return;
        }
    }
    walls.push_back({w, {e}, WallSource::Bisector, 1.0});
}

double wall_extent(const TaggedWall& w) {
    if (const auto* s = std::get_if<SphereWall>(&w.wall)) return std::abs(s->center) + s->radius;
    if (const auto* p = std::get_if<PlaneWall>(&w.wall)) return 2.0 * std::abs(p->offset) + 1.0;
    return 2.0;
}

void finish_domain(DomainSpec& dom) {
    double ext = 3.0;
    for (const TaggedWall& w : dom.walls) ext = std::max(ext, wall_extent(w) + 1.0);
    dom.extent = ext;
}

EnumeratedElement gamma0_element() {
    return {MoebiusMatrix{0.0, -1.0, 1.0, 0.0}, "S", 2.0};
}

}  // namespace

DomainSpec make_domain(const GroupSpec& spec, const std::vector<EnumeratedElement>& elements,
                       double tol) {
    DomainSpec dom;
    dom.tol = tol;
    dom.fuchsian = spec.fuchsian;
    if (spec.unit_sphere_stabilizer) {
        dom.walls.push_back({SphereWall{Complex{}, 1.0}, {gamma0_element()}, WallSource::UnitSphere, 1.0});
    }
    for (const EnumeratedElement& e : elements) {
        if (e.matrix.is_identity(tol) || is_su2(e.matrix, tol)) continue;
        add_bisector_wall(dom.walls, e, tol);
    }
    finish_domain(dom);
    return dom;
}

DomainSpec bianchi_domain(const BianchiContext& ctx, std::int64_t norm_bound, double tol) {
    DomainSpec dom;
    dom.tol = tol;
    const FInftyRegion region = f_infty(ctx);
    for (const FInftyFace& f : region.faces) {
        EnumeratedElement tag{f.pairing, "T", f.pairing.normsq()};
        dom.walls.push_back({f.plane, {tag}, WallSource::Prism, 1.0});
    }
    dom.walls.push_back({SphereWall{Complex{}, 1.0}, {gamma0_element()}, WallSource::UnitSphere, 1.0});
    for (const BianchiElement& e : enumerate_bianchi(ctx, norm_bound)) {
        if (e.normsq <= 2) continue;  // identity and Gamma_0 companions
        std::ostringstream word;
        word << "[" << e.exact.a.u << "," << e.exact.a.v << ";" << e.exact.b.u << "," << e.exact.b.v
             << ";" << e.exact.c.u << "," << e.exact.c.v << ";" << e.exact.d.u << "," << e.exact.d.v
             << "]";
        add_bisector_wall(dom.walls, {e.matrix, word.str(), static_cast<double>(e.normsq)}, tol);
    }
    finish_domain(dom);
    return dom;
}

double domain_wall_margin(const TaggedWall& w, const HalfSpacePoint& P) {
    if (w.source == WallSource::Prism) {
        const auto& plane = std::get<PlaneWall>(w.wall);
        return w.prism_sign * ((std::conj(plane.normal) * P.z).real() + plane.offset);
    }
    return wall_exterior_margin(w.wall, P.quaternion());
}

Membership membership(const HalfSpacePoint& P, const DomainSpec& dom) {
    double worst = std::numeric_limits<double>::infinity();
    for (const TaggedWall& w : dom.walls) worst = std::min(worst, domain_wall_margin(w, P));
    if (worst < -dom.tol) return Membership::Outside;
    if (worst <= dom.tol) return Membership::Boundary;
    return Membership::Inside;
}

Reduction reduce_point(const HalfSpacePoint& P, const DomainSpec& dom, const GroupSpec& spec,
                       int max_steps) {
    (void)spec;
    Reduction red;
    red.point = P;
    red.applied = MoebiusMatrix{};
    for (int step = 0; step < max_steps; ++step) {
        double worst = std::numeric_limits<double>::infinity();
        const TaggedWall* worst_wall = nullptr;
        for (const TaggedWall& w : dom.walls) {
            const double m = domain_wall_margin(w, red.point);
            if (m < worst) {
                worst = m;
                worst_wall = &w;
            }
        }
        if (worst >= -dom.tol || !worst_wall) {
            red.steps = step;
            return red;
        }
        MoebiusMatrix g = worst_wall->tags.front().matrix;
        if (worst_wall->source == WallSource::Prism) {
            const auto& plane = std::get<PlaneWall>(worst_wall->wall);
            if (plane.offset > dom.tol) {
                // translation face: jump the whole deficit at once
                const int k = static_cast<int>(std::floor(-worst / (2.0 * plane.offset))) + 1;
                MoebiusMatrix pow = g;
                for (int i = 1; i < k; ++i) pow = pow * g;
                g = pow;
            }
        }
        red.point = act_half_space(g, red.point);
        red.applied = g * red.applied;
    }
    throw StepLimitError("reduce_point: step limit exhausted (wall list too small?)");
}

std::vector<Face> faces(const DomainSpec& dom, int samples_per_wall, unsigned seed, int threads) {
    const double strict = std::max(dom.tol, 1e-7);
    std::vector<std::optional<Face>> results(dom.walls.size());

    parallel_for(dom.walls.size(), threads, [&](std::size_t wi) {
        const TaggedWall& w = dom.walls[wi];
        std::vector<HalfSpacePoint> samples;
        try {
            samples = sample_wall_half_space(w.wall, samples_per_wall,
                                             seed * 9176u + static_cast<unsigned>(wi),
                                             dom.extent, dom.fuchsian);
        } catch (const DomainError&) {
            return;
        }
        Face face{wi, {}};
        for (const HalfSpacePoint& u : samples) {
            bool witness = true;
            for (std::size_t wj = 0; wj < dom.walls.size(); ++wj) {
                if (wj == wi) continue;
                if (domain_wall_margin(dom.walls[wj], u) <= strict) {
                    witness = false;
                    break;
                }
            }
            if (witness && std::abs(domain_wall_margin(w, u)) <= strict) {
                face.witnesses.push_back(u);
                if (face.witnesses.size() >= 16) break;
            }
        }
        if (!face.witnesses.empty()) results[wi] = std::move(face);
    });

    std::vector<Face> out;
    for (auto& r : results) {
        if (r) out.push_back(std::move(*r));
    }
    return out;
}

namespace {

Membership membership_banded(const HalfSpacePoint& P, const DomainSpec& dom, double band) {
    double worst = std::numeric_limits<double>::infinity();
    for (const TaggedWall& w : dom.walls) worst = std::min(worst, domain_wall_margin(w, P));
    if (worst < -band) return Membership::Outside;
    if (worst <= band) return Membership::Boundary;
    return Membership::Inside;
}

}  // namespace

DfReport df_check(const GroupSpec& spec, const DomainSpec& dom, int samples_per_wall,
                  unsigned seed) {
    (void)spec;
    const double band = std::max(dom.tol * 10.0, 1e-6);
    DfReport report;
    const std::vector<Face> fs = faces(dom, samples_per_wall, seed);
    report.is_df = true;
    for (const Face& f : fs) {
        const TaggedWall& w = dom.walls[f.wall_index];
        SidePairing sp{f.wall_index, std::nullopt, 0.0};
        for (const EnumeratedElement& cand : w.tags) {
            bool ok = true;
            std::size_t tested = 0;
            for (const HalfSpacePoint& u : f.witnesses) {
                if (tested++ >= 8) break;
                if (membership_banded(act_half_space(cand.matrix, u), dom, band) ==
                    Membership::Outside) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                sp.pairing = cand;
                break;
            }
        }
        if (sp.pairing) {
            const MoebiusMatrix& g = sp.pairing->matrix;
            sp.df_deviation = std::abs(g.d() - std::conj(g.a()));
        }
        const bool violates = !sp.pairing || sp.df_deviation > band;
        if (violates) {
            report.is_df = false;
            report.witnesses.push_back(f.wall_index);
        }
        report.pairings.push_back(std::move(sp));
    }
    return report;
}

namespace {

// Intersection of two face walls in the Fuchsian (x, r) half-plane together
// with inward normals; nullopt when they do not meet.
struct MeetPoint {
    double x, r;
    std::array<double, 2> n1, n2;  // unit normals pointing into the domain
};

std::optional<MeetPoint> fuchsian_meet(const TaggedWall& A, const TaggedWall& B) {
    const auto inward = [&](const TaggedWall& w, double x, double r) -> std::array<double, 2> {
        // gradient of the margin function, normalized
        const double h = 1e-7;
        const double m0 = domain_wall_margin(w, {Complex{x, 0.0}, r});
        const double mx = domain_wall_margin(w, {Complex{x + h, 0.0}, r});
        const double mr = domain_wall_margin(w, {Complex{x, 0.0}, r + h});
        double gx = (mx - m0) / h, gr = (mr - m0) / h;
        const double n = std::hypot(gx, gr);
        return {gx / n, gr / n};
    };
    const auto surfA = wall_surface(A.wall);
    const auto surfB = wall_surface(B.wall);
    const auto* sA = std::get_if<EuclideanSphere>(&surfA);
    const auto* sB = std::get_if<EuclideanSphere>(&surfB);
    const auto* pA = std::get_if<EuclideanPlane>(&surfA);
    const auto* pB = std::get_if<EuclideanPlane>(&surfB);
    double x = 0.0, r = -1.0;
    if (sA && sB) {
        const double cA = sA->center[0], cB = sB->center[0];
        const double d = std::abs(cB - cA);
        if (d < 1e-15) return std::nullopt;
        const double xx = (d * d + sA->radius * sA->radius - sB->radius * sB->radius) / (2.0 * d);
        const double h2 = sA->radius * sA->radius - xx * xx;
        if (h2 < -1e-9) return std::nullopt;
        x = cA + (cB > cA ? xx : -xx);
        r = std::sqrt(std::max(h2, 0.0));
    } else if (pA && pB) {
        return std::nullopt;  // vertical lines are parallel
    } else {
        const auto* s = sA ? sA : sB;
        const auto* p = sA ? pB : pA;
        // vertical line x = x0 with p->normal = (nx, ny=0, 0)
        if (std::abs(p->normal[0]) < 1e-12) return std::nullopt;
        const double x0 = -p->offset / p->normal[0];
        const double h2 = s->radius * s->radius - (x0 - s->center[0]) * (x0 - s->center[0]);
        if (h2 < -1e-9) return std::nullopt;
        x = x0;
        r = std::sqrt(std::max(h2, 0.0));
    }
    if (r < 1e-6) r = 1e-6;  // tangency on the boundary: probe just above
    MeetPoint mp{x, r, {}, {}};
    mp.n1 = inward(A, x, r);
    mp.n2 = inward(B, x, r);
    return mp;
}

}  // namespace

ReflectionAngleReport reflection_angle_check(const DomainSpec& dom, double tol,
                                             int samples_per_wall, unsigned seed) {
    if (!dom.fuchsian) throw DomainError("reflection_angle_check requires a Fuchsian domain");
    ReflectionAngleReport report;
    const std::vector<Face> fs = faces(dom, samples_per_wall, seed);
    for (std::size_t i = 0; i < fs.size(); ++i) {
        for (std::size_t j = i + 1; j < fs.size(); ++j) {
            const auto mp = fuchsian_meet(dom.walls[fs[i].wall_index],
                                          dom.walls[fs[j].wall_index]);
            if (!mp) continue;
            const double c =
                -(mp->n1[0] * mp->n2[0] + mp->n1[1] * mp->n2[1]);  // interior dihedral
            const double angle = std::acos(std::clamp(c, -1.0, 1.0));
            AnglePair pair{fs[i].wall_index, fs[j].wall_index, angle, 0.0, false};
            if (angle <= std::max(tol, 1e-6)) {
                pair.angle = 0.0;
                pair.submultiple = true;  // tangency, alpha = 0
            } else {
                const double ratio = 3.14159265358979323846 / angle;
                const double n = std::round(ratio);
                pair.pi_over = ratio;
                pair.submultiple = n >= 1.0 && std::abs(angle - 3.14159265358979323846 / n) <=
                                                   std::max(tol, 1e-9);
            }
            if (!pair.submultiple) report.ok = false;
            report.angles.push_back(pair);
        }
    }
    return report;
}

MoebiusMatrix apply_symmetry(SymmetryKind kind, const MoebiusMatrix& m) {
    const Complex a = m.a(), b = m.b(), c = m.c(), d = m.d();
    const Complex i{0.0, 1.0};
    switch (kind) {
        case SymmetryKind::Sigma: return {a, i * b, -i * c, d};
        case SymmetryKind::Sigma2: return {a, -b, -c, d};
        case SymmetryKind::Delta: return {d, -c, -b, a};
        case SymmetryKind::Tau: return {std::conj(a), std::conj(b), std::conj(c), std::conj(d)};
        case SymmetryKind::Phi:
            return {std::conj(d), std::conj(c), std::conj(b), std::conj(a)};
    }
    return m;
}

double volume_bounds(double min_normsq_nontrivial, double stabilizer_fraction, BoundMode mode) {
    const double r = 1.0 - rho_gamma(min_normsq_nontrivial);
    const double rho0 = std::log((1.0 + r) / (1.0 - r));
    const double pi = 3.14159265358979323846;
    if (mode == BoundMode::Volume) {
        return stabilizer_fraction * pi * (std::sinh(2.0 * rho0) - 2.0 * rho0);
    }
    const double s = std::sinh(0.5 * rho0);
    return stabilizer_fraction * 4.0 * pi * s * s;
}

}  // namespace hypwalls
