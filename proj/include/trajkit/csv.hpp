#pragma once

#include <iosfwd>
#include <string>

#include "trajkit/signal.hpp"

namespace trajkit {

/// Trajectory file format: a CSV with header "k,u_0,...,u_{m-1},y_0,...,y_{p-1}"
/// and one row per time step, k running 0..N-1 without gaps or duplicates.
/// Values are written in shortest round-trip decimal form, so a write/parse
/// cycle reproduces every double exactly.

Trajectory parse_trajectory_csv(const std::string& path);
Trajectory parse_trajectory_csv(std::istream& in, const std::string& path_for_errors = "<stream>");

void write_trajectory_csv(const std::string& path, const Trajectory& traj);
void write_trajectory_csv(std::ostream& out, const Trajectory& traj);

/// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double value);

}  // namespace trajkit
