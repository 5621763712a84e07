#include "hypwalls/quat.hpp"

#include <atomic>
#include <ostream>

namespace hypwalls {

namespace {
std::atomic<double> g_tolerance{1e-9};
}

double tolerance() { return g_tolerance.load(std::memory_order_relaxed); }
void set_tolerance(double tol) { g_tolerance.store(tol, std::memory_order_relaxed); }

Quaternion quat_mul(const Quaternion& p, const Quaternion& q) {
    return {
        p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
        p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
        p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
        p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w,
    };
}

Quaternion quat_inv(const Quaternion& q, double tol) {
    const double n2 = q.normsq();
    if (n2 <= tol * tol) throw ZeroQuaternionError{};
    return quat_conj(q) / n2;
}

Quaternion apply_involution(const Quaternion& q, Involution kind) {
    switch (kind) {
        case Involution::Conj: return quat_conj(q);
        case Involution::Prime: return quat_prime(q);
        case Involution::Star: return quat_star(q);
    }
    return q;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << q.w << (q.x < 0 ? "" : "+") << q.x << "i" << (q.y < 0 ? "" : "+") << q.y << "j"
              << (q.z < 0 ? "" : "+") << q.z << "k";
}

}  // namespace hypwalls
