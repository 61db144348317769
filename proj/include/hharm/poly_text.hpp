#pragma once

#include <stdexcept>
#include <string>

#include "hharm/hpoly.hpp"

namespace hharm {

struct PolyParseError : std::domain_error {
    using std::domain_error::domain_error;
};

std::string to_string(const PiScalar& s);
std::string to_string(const HPoly& p);        // variables z, zbar, t
std::string to_string(const CenterPoly& p);   // variables z0, zbar0, t0, R

// Display conversions to real coordinates via z = x + iy.
std::string to_string_xyt(const HPoly& p);       // variables x, y, t
std::string to_string_xyt(const CenterPoly& p);  // variables x0, y0, t0, R

// Grammar: rationals, variables z zbar t, constants i and pi, + - * ^ and
// parentheses; '/' only by nonzero scalar constants (so "3/4" is a rational).
HPoly parse_poly(const std::string& text);

}  // namespace hharm
