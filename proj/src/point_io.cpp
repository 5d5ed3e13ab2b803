#include "irt/point_io.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace irt {

namespace {

bool valid_integer_token(std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    std::string_view num_part = text.substr(0, slash);
    if (!valid_integer_token(num_part))
        throw ParseError("bad rational '" + std::string(text) + "'");
    if (num_part.front() == '+') num_part.remove_prefix(1);  // cpp_int rejects '+'
    if (slash == std::string_view::npos) return Rational(BigInt(std::string(num_part)));

    std::string_view den_part = text.substr(slash + 1);
    if (!valid_integer_token(den_part) || den_part.front() == '-' || den_part.front() == '+')
        throw ParseError("bad rational '" + std::string(text) + "'");
    BigInt den{std::string(den_part)};
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(BigInt(std::string(num_part)), den);
}

PointSet parse_point_file(std::istream& in) {
    PointSet points;
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        std::istringstream fields(line);
        std::string xs, ys, extra;
        if (!(fields >> xs)) continue;  // blank
        if (xs.front() == '#') continue;
        if (!(fields >> ys)) throw ParseError("expected two coordinates", line_number);
        if (fields >> extra) throw ParseError("trailing content '" + extra + "'", line_number);

        Point p;
        try {
            p = Point{parse_rational(xs), parse_rational(ys)};
        } catch (const ParseError& e) {
            throw ParseError(e.what(), line_number);
        }
        if (!points.insert(p))
            throw ParseError("duplicate point " + p.to_string(), line_number);
    }
    return points;
}

PointSet parse_point_file_at(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parse_point_file(in);
}

void write_point_file(std::ostream& out, const PointSet& points) {
    for (const Point& p : points) out << p.to_string() << "\n";
}

}  // namespace irt
