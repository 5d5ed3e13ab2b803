#pragma once

// Point-file text format: one point per line, "<x> <y>", each coordinate an
// integer "7" or a fraction "-3/4". Blank lines and lines starting with '#'
// are ignored. Duplicate points are a parse error (reported with the line
// number), so a file always round-trips to the same PointSet.

#include "irt/errors.hpp"
#include "irt/geometry.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace irt {

// Accepts "123", "-7", "3/4", "-3/4". Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

PointSet parse_point_file(std::istream& in);
PointSet parse_point_file_at(const std::string& path);

void write_point_file(std::ostream& out, const PointSet& points);

}  // namespace irt
