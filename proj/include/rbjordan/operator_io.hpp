#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "rbjordan/rbop.hpp"

namespace rbjordan {

/// Operator file layout (basis order 1, e_1..e_n; matrix given by rows):
///   field Zp:7
///   form 6,6,6
///   0,1,2,3
///   1,0,3,5
///   2,4,0,1
///   3,2,6,0
/// Blank lines and lines starting with '#' are ignored.
LinOperator parse_operator(std::string_view text);
LinOperator read_operator(std::istream& in);
std::string write_operator(const LinOperator& op);

} // namespace rbjordan
