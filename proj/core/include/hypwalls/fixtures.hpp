#pragma once

#include "hypwalls/domains.hpp"

namespace hypwalls {
namespace fixtures {

// Gamma(2) = <z+2, z/(2z+1)>, the congruence group at level 2 (Fuchsian, free).
GroupSpec gamma2();

// PSL(2,Z) with generators [[1,1],[0,1]] and [[0,-1],[1,0]].
GroupSpec psl2z();

// Figure-eight knot group <[[1,1],[0,1]], [[1,0],[w,1]]>, w = (-1+sqrt(-3))/2,
// with the extra side-pairing elements gamma_3, gamma_4, gamma_5 bundled.
GroupSpec figure_eight();

// Whitehead link complement group fixture: gamma_1..gamma_4 with
// lambda = sqrt(2i)/2.
std::vector<MoebiusMatrix> whitehead();

}  // namespace fixtures
}  // namespace hypwalls
