#include "hypwalls/fixtures.hpp"

#include <cmath>

namespace hypwalls {
namespace fixtures {

GroupSpec gamma2() {
    GroupSpec spec;
    spec.name = "gamma2";
    spec.fuchsian = true;
    spec.generators = {MoebiusMatrix{1.0, 2.0, 0.0, 1.0}, MoebiusMatrix{1.0, 0.0, 2.0, 1.0}};
    return spec;
}

GroupSpec psl2z() {
    GroupSpec spec;
    spec.name = "psl2z";
    spec.fuchsian = true;
    spec.generators = {MoebiusMatrix{1.0, 1.0, 0.0, 1.0}, MoebiusMatrix{0.0, -1.0, 1.0, 0.0}};
    spec.unit_sphere_stabilizer = true;  // S = [[0,-1],[1,0]] stabilizes i
    return spec;
}

GroupSpec figure_eight() {
    const double s3 = std::sqrt(3.0);
    const Complex w{-0.5, 0.5 * s3};  // (-1 + sqrt(-3))/2
    const Complex w2 = w * w;
    GroupSpec spec;
    spec.name = "figure8";
    spec.generators = {MoebiusMatrix{1.0, 1.0, 0.0, 1.0}, MoebiusMatrix{1.0, 0.0, w, 1.0}};
    spec.extra_elements = {
        MoebiusMatrix{0.0, w, -w2, Complex{1.0, 0.0} - w},   // gamma_3
        MoebiusMatrix{0.0, -w, w2, Complex{1.0, 0.0} - w},   // gamma_4
        MoebiusMatrix{1.0, -1.0, -w, Complex{1.0, 0.0} + w}  // gamma_5
    };
    return spec;
}

std::vector<MoebiusMatrix> whitehead() {
    const Complex lambda{0.5, 0.5};  // sqrt(2i)/2
    const Complex i{0.0, 1.0};
    const auto scaled = [&](Complex a, Complex b, Complex c, Complex d) {
        return MoebiusMatrix{lambda * a, lambda * b, lambda * c, lambda * d};
    };
    return {
        scaled(Complex{-2.0, -1.0}, i, -i, i),
        scaled(Complex{2.0, -1.0}, -i, -i, -i),
        scaled(Complex{-2.0, -1.0}, -i, i, i),
        scaled(Complex{2.0, -1.0}, i, i, -i),
    };
}

}  // namespace fixtures
}  // namespace hypwalls
