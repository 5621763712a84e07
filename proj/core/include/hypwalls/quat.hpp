#pragma once

#include <cmath>
#include <complex>
#include <iosfwd>

#include "hypwalls/errors.hpp"

namespace hypwalls {

using Complex = std::complex<double>;

// Element of the classical quaternion algebra H(-1,-1,R):
// w + x*i + y*j + z*k with i^2 = j^2 = k^2 = -1, ij = k.
struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}

    // Embeds u + v*j, the C + Rj subspace both hyperbolic models live in.
    static Quaternion from_complex(Complex u, double v = 0.0) { return {u.real(), u.imag(), v, 0.0}; }

    Complex complex_part() const { return {w, x}; }
    double j_part() const { return y; }

    double normsq() const { return w * w + x * x + y * y + z * z; }
    double norm() const { return std::sqrt(normsq()); }

    bool is_zero(double tol) const { return normsq() <= tol * tol; }

    Quaternion operator-() const { return {-w, -x, -y, -z}; }
    Quaternion operator+(const Quaternion& o) const { return {w + o.w, x + o.x, y + o.y, z + o.z}; }
    Quaternion operator-(const Quaternion& o) const { return {w - o.w, x - o.x, y - o.y, z - o.z}; }
    Quaternion operator*(double s) const { return {w * s, x * s, y * s, z * s}; }
    Quaternion operator/(double s) const { return {w / s, x / s, y / s, z / s}; }
};

enum class Involution { Conj, Prime, Star };

// Hamilton product.
Quaternion quat_mul(const Quaternion& p, const Quaternion& q);

// q^{-1} = conj(q)/|q|^2; throws ZeroQuaternionError when |q|^2 is below tolerance.
Quaternion quat_inv(const Quaternion& q, double tol = tolerance());

// conj negates i,j,k; prime negates i,j; star negates k.
Quaternion apply_involution(const Quaternion& q, Involution kind);

inline Quaternion quat_conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }
inline Quaternion quat_prime(const Quaternion& q) { return {q.w, -q.x, -q.y, q.z}; }
inline Quaternion quat_star(const Quaternion& q) { return {q.w, q.x, q.y, -q.z}; }

// R^4 dot product of coefficient vectors.
inline double quat_dot(const Quaternion& p, const Quaternion& q) {
    return p.w * q.w + p.x * q.x + p.y * q.y + p.z * q.z;
}

inline bool quat_close(const Quaternion& p, const Quaternion& q, double tol) {
    return (p - q).norm() <= tol;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

}  // namespace hypwalls
