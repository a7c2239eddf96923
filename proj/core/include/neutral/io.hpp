#pragma once

#include "neutral/flows.hpp"
#include "neutral/intersection.hpp"
#include "neutral/knots.hpp"

#include <iosfwd>
#include <string>

namespace neutral {

// CSV rows (u, Re nu, Im nu, A), one header line.
void write_knot_csv(std::ostream& os, const LineKnot& knot);
LineKnot read_knot_csv(std::istream& is);

// CSV rows (t, Re nu, Im nu, A).
void write_trajectory_csv(std::ostream& os, const Trajectory& traj);

// CSV rows (phi, theta, branch, Re xi, Im xi, Re eta, Im eta).
void write_point_cloud_csv(std::ostream& os,
                           const std::vector<TorusSample>& points);

void write_file(const std::string& path, const std::string& contents);

}  // namespace neutral
