#pragma once

#include <stdexcept>
#include <string>

namespace hypwalls {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Inversion of a (numerically) zero quaternion.
struct ZeroQuaternionError : Error {
    ZeroQuaternionError() : Error("zero quaternion has no inverse") {}
};

// Matrix constructor rejected: determinant not 1 within tolerance.
struct DeterminantError : Error {
    explicit DeterminantError(const std::string& what) : Error(what) {}
};

// c(gamma) = 0: gamma fixes infinity and has no isometric sphere.
struct NoIsometricSphereError : Error {
    NoIsometricSphereError() : Error("gamma stabilizes infinity: no isometric sphere") {}
};

// gamma stabilizes the model center; the bisector is undefined.
struct InSU2Error : Error {
    InSU2Error() : Error("gamma is in SU(2): bisector undefined") {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

// |a|^2 + |c|^2 = 1: the bisector is a vertical plane, the sphere-only
// comparison does not apply.
struct PlaneBisectorError : Error {
    PlaneBisectorError() : Error("bisector is a vertical plane (|a|^2+|c|^2 = 1)") {}
};

struct NoIntersectionError : Error {
    NoIntersectionError() : Error("walls do not intersect") {}
};

struct IdentityHasAllPointsError : Error {
    IdentityHasAllPointsError() : Error("identity fixes every point") {}
};

struct SU2UndefinedError : Error {
    SU2UndefinedError() : Error("wall relation undefined for SU(2) elements") {}
};

struct InconclusiveError : Error {
    explicit InconclusiveError(const std::string& what) : Error(what) {}
};

struct StepLimitError : Error {
    explicit StepLimitError(const std::string& what) : Error(what) {}
};

struct NotSquarefreeError : Error {
    explicit NotSquarefreeError(int d)
        : Error("d = " + std::to_string(d) + " is not a squarefree positive integer") {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

struct IOError : Error {
    explicit IOError(const std::string& what) : Error(what) {}
};

// Global absolute tolerance for equality predicates. Set once at startup
// (CLI --tol / HYPWALLS_TOL); individual operations may take an override.
double tolerance();
void set_tolerance(double tol);

}  // namespace hypwalls
