#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ptc/integrator.hpp"

namespace ptc {

inline constexpr std::string_view kTrajectoryCsvHeader = "t,x,u";

/// 17 significant digits, scientific notation, locale-independent.
/// Round-trips every finite double exactly.
std::string format_double(double value);

/// Strict inverse of format_double (accepts any from_chars float syntax).
/// Throws ParseError on malformed or trailing input.
double parse_double(std::string_view text);

/// Header "t,x,u" then one row per sample.
void write_trajectory_csv(std::ostream& out, const Trajectory& traj);

/// Reads rows written by write_trajectory_csv. Throws ParseError on
/// malformed content.
std::vector<Sample> read_trajectory_csv(std::istream& in);

}  // namespace ptc
