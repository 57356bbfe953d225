#pragma once

#include <string>

#include "ctxf/states.hpp"

namespace ctxf {

// Radians as decimals or "pi" arithmetic: "0.5", "pi", "pi/8", "3pi/4",
// "2*pi/3", "-pi/2".
double parse_angle(const std::string& text);

// "ghz:N" | "diag:THETA,PHI" | "amps:re,im;re,im;re,im;re,im"
PureState parse_state(const std::string& spec);

// "bloch:THETA,PHI" or an alias: "x", "y", "z", "pi8", "5pi8".
BlochBasis parse_basis(const std::string& spec);

// "bell:basis1,basis2[;basis1,basis2...]"; a single pair is shared by all
// n_parties parties.
BellScenario parse_scenario(const std::string& spec, int n_parties);

}  // namespace ctxf
