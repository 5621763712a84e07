#pragma once

#include <string>

#include "hypwalls/classify.hpp"
#include "hypwalls/domains.hpp"

namespace hypwalls {

// Matrix literal: [[a],[b],[c],[d]], each complex number a two-element array
// [re, im]. Throws ParseError (with byte offset) or DeterminantError.
MoebiusMatrix parse_matrix(const std::string& text, double tol = tolerance());
std::string matrix_to_json(const MoebiusMatrix& m);

// Group file: {"name": ..., "fuchsian": bool, "unit_sphere_stabilizer": bool,
//              "generators": [matrix...], "extra_elements": [matrix...]}
GroupSpec parse_group(const std::string& text, double tol = tolerance());

// {"kind":"sphere","center":[re,im],"radius":r} |
// {"kind":"plane","normal":[re,im],"offset":o} |
// {"kind":"ball-sphere","center":[x,y,z],"radius":r}
std::string wall_to_json(const Wall& w);
Wall parse_wall(const std::string& text);

std::string classify_report_json(const MoebiusMatrix& m, double tol = tolerance(),
                                 int max_power = 64);
std::string bianchi_ideal_points_json(const BianchiContext& ctx);
std::string domain_report_json(const DomainSpec& dom, const std::vector<Face>& faces,
                               const DfReport& df);
std::string wall_report_json(const MoebiusMatrix& m, const std::string& model,
                             const std::string& kind, double tol = tolerance());
std::string reduce_report_json(const HalfSpacePoint& input, const Reduction& red);

}  // namespace hypwalls
