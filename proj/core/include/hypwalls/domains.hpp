#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypwalls/bianchi.hpp"
#include "hypwalls/classify.hpp"
#include "hypwalls/walls.hpp"

namespace hypwalls {

// Finitely generated group given by matrices, plus what is known about the
// stabilizers used when assembling a fundamental domain.
struct GroupSpec {
    std::vector<MoebiusMatrix> generators;
    // Elements adjoined to every enumeration (bundled side pairings etc.).
    std::vector<MoebiusMatrix> extra_elements;
    // Gamma_0 contains [[0,-1],[1,0]]: the unit hemisphere is a chamber wall.
    bool unit_sphere_stabilizer = false;
    bool fuchsian = false;
    std::string name;
};

struct EnumeratedElement {
    MoebiusMatrix matrix;
    std::string word;  // letters a..z for generators, A..Z for inverses
    double normsq = 0.0;
};

// Reduced words in the generators up to max_word_len, projectively
// deduplicated and filtered by ||gamma||^2 <= norm_bound; identity included;
// deterministic (norm, word) order.
std::vector<EnumeratedElement> enumerate_group(const GroupSpec& spec, int max_word_len,
                                               double norm_bound);

enum class WallSource { Bisector, Prism, UnitSphere };

struct TaggedWall {
    Wall wall;
    // Group elements sharing this wall, sorted by (norm, word); the first is
    // the default tag.
    std::vector<EnumeratedElement> tags;
    WallSource source = WallSource::Bisector;
    // Orientation for prism walls: interior margin = sign * (Re(conj(n)z) + offset).
    double prism_sign = 1.0;
};

struct DomainSpec {
    std::vector<TaggedWall> walls;
    bool fuchsian = false;
    double tol = 1e-9;
    // Scale of the configuration; bounds plane sampling windows.
    double extent = 4.0;
};

// Dirichlet domain pieces from an enumerated element list (walls of every
// non-SU(2) element, deduplicated; unit hemisphere added for a Gamma_0
// stabilizer).
DomainSpec make_domain(const GroupSpec& spec, const std::vector<EnumeratedElement>& elements,
                       double tol = tolerance());

// Bianchi Dirichlet domain: Gamma_infinity prism + unit hemisphere + bisector
// walls of all elements with exact norm <= norm_bound.
DomainSpec bianchi_domain(const BianchiContext& ctx, std::int64_t norm_bound,
                          double tol = tolerance());

enum class Membership { Inside, Boundary, Outside };

// Margin of P against a single wall (positive = exterior / domain side).
double domain_wall_margin(const TaggedWall& w, const HalfSpacePoint& P);

Membership membership(const HalfSpacePoint& P, const DomainSpec& dom);

// Reduce P into the domain: repeatedly apply the element of the most violated
// wall. Returns the reduced point and the group element g with g(P) = result.
struct Reduction {
    HalfSpacePoint point{Complex{}, 1.0};
    MoebiusMatrix applied;
    int steps = 0;
};
Reduction reduce_point(const HalfSpacePoint& P, const DomainSpec& dom, const GroupSpec& spec,
                       int max_steps = 256);

struct Face {
    std::size_t wall_index;            // into dom.walls
    std::vector<HalfSpacePoint> witnesses;  // samples interior to the face
};

// Walls that carry a 2-dimensional piece of the domain boundary: a wall
// contributes iff some sample on it is (weakly) inside everything else and
// strictly exterior to every other wall. Deterministic for a fixed seed.
std::vector<Face> faces(const DomainSpec& dom, int samples_per_wall = 200, unsigned seed = 0,
                        int threads = 1);

struct SidePairing {
    std::size_t wall_index;
    std::optional<EnumeratedElement> pairing;  // empty when no candidate maps the face into the domain
    double df_deviation = 0.0;                 // |d - conj(a)| of the chosen pairing
};

struct DfReport {
    bool is_df = false;
    std::vector<SidePairing> pairings;
    std::vector<std::size_t> witnesses;  // wall indices violating d = conj(a)
};

// DF criterion: the domain is simultaneously Ford and Dirichlet iff every
// side-pairing transformation satisfies d = conj(a).
DfReport df_check(const GroupSpec& spec, const DomainSpec& dom, int samples_per_wall = 200,
                  unsigned seed = 0);

struct AnglePair {
    std::size_t wall_a, wall_b;
    double angle;       // interior dihedral angle in [0, pi); 0 = tangent
    double pi_over;     // pi / angle (infinity reported as 0 for tangency)
    bool submultiple;   // angle == 0 or pi/angle integral within tolerance
};

struct ReflectionAngleReport {
    bool ok = true;
    std::vector<AnglePair> angles;
};

// Fuchsian check: every pair of intersecting face walls must meet at a
// submultiple of pi (or be tangent).
ReflectionAngleReport reflection_angle_check(const DomainSpec& dom, double tol = 1e-6,
                                             int samples_per_wall = 200, unsigned seed = 0);

enum class SymmetryKind { Sigma, Sigma2, Delta, Tau, Phi };

// The symmetry operators on SL(2,C): sigma = conj by diag(sqrt(i), sqrt(-i)),
// delta = conj by [[0,-1],[1,0]], tau = entrywise conjugation, phi =
// sigma^2 . delta . tau. Wall actions: P_{tau g} = conj(P_g),
// P_{sigma^2 g} = -P_g, P_{sigma g} = i P_g, radii preserved; phi reflects
// the wall in the unit sphere.
MoebiusMatrix apply_symmetry(SymmetryKind kind, const MoebiusMatrix& m);

enum class BoundMode { Volume, Area };

// Lower bound pi(sinh(2 rho) - 2 rho) resp. 4 pi sinh^2(rho/2) with
// rho = rho(0, r), r = 1 - rho_gamma(min_normsq), scaled by the stabilizer
// fraction.
double volume_bounds(double min_normsq_nontrivial, double stabilizer_fraction, BoundMode mode);

}  // namespace hypwalls
