#include "neutral/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace neutral {

namespace {

std::vector<double> parse_row(const std::string& line) {
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    return row;
}

}  // namespace

void write_knot_csv(std::ostream& os, const LineKnot& knot) {
    os << "u,re_nu,im_nu,A\n" << std::setprecision(17);
    for (const auto& s : knot.samples)
        os << s.u << ',' << s.nu.real() << ',' << s.nu.imag() << ',' << s.A
           << '\n';
}

LineKnot read_knot_csv(std::istream& is) {
    LineKnot knot;
    std::string line;
    bool first = true;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (first && line.find("u,") == 0) {
            first = false;
            continue;
        }
        first = false;
        auto row = parse_row(line);
        if (row.size() != 4) throw domain_error("read_knot_csv: bad row");
        knot.samples.push_back({row[0], cplx(row[1], row[2]), row[3]});
    }
    return knot;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
    os << "t,re_nu,im_nu,A\n" << std::setprecision(17);
    for (size_t i = 0; i < traj.t.size(); ++i)
        os << traj.t[i] << ',' << traj.states[i].nu.real() << ','
           << traj.states[i].nu.imag() << ',' << traj.states[i].A << '\n';
}

void write_point_cloud_csv(std::ostream& os,
                           const std::vector<TorusSample>& points) {
    os << "phi,theta,branch,re_xi,im_xi,re_eta,im_eta\n"
       << std::setprecision(17);
    for (const auto& p : points)
        os << p.phi << ',' << p.theta << ','
           << (p.branch == Branch::plus ? 1 : -1) << ',' << p.line.xi.real()
           << ',' << p.line.xi.imag() << ',' << p.line.eta.real() << ','
           << p.line.eta.imag() << '\n';
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream f(path);
    if (!f) throw domain_error("write_file: cannot open " + path);
    f << contents;
}

}  // namespace neutral
