#pragma once

#include <string>
#include <vector>

#include "qflow/core_geometry.hpp"

namespace qflow {

/// A named representative of one of the special G120 point orbits.
/// Descriptors use 1-based index groups separated by '_', e.g. "p10_45_2",
/// "q30_1_24_1", "q24_1234" (the digits of q24 are exponents of omega5).
struct SpecialPoint {
    std::string descriptor;
    PointX x;
    int expected_orbit_size = 0;
    int expected_stabilizer_order = 0;
    bool on_quadric = false;

    PointU u() const { return x_to_u(x); }
};

struct SpecialLine {
    std::string descriptor;
    std::array<PointU, 2> span;  ///< orthonormal spanning pair
    int expected_orbit_size = 0;
};

struct SpecialPlane {
    std::string descriptor;
    Vec5 form_x{};  ///< the plane is {form_x . x = 0}
    Vec4 form_u{};
    std::string corresponding_point;
    int expected_orbit_size = 0;
};

/// Throws UnknownDescriptor for an unknown family, BadIndices for malformed or repeated indices.
SpecialPoint point(const std::string& descriptor);
SpecialLine line(const std::string& descriptor);
SpecialPlane plane(const std::string& descriptor);

/// Point families: p5 p10_1 p10_2 p15 p20 p30 q20_1 q20_2 q24 q30_1 q30_2 q60.
std::vector<std::string> point_families();
/// Every projectively distinct point of a family, one descriptor each (first in lexicographic order).
std::vector<SpecialPoint> family_points(const std::string& family);

/// Line families: L1_10 M1_10 L1_15 M1_15 L1_30. Plane families: L2_5 L2_10 M2_10.
std::vector<std::string> line_families();
std::vector<SpecialLine> family_lines(const std::string& family);
std::vector<std::string> plane_families();
std::vector<SpecialPlane> family_planes(const std::string& family);

/// Line through two distinct points (orthonormalized span).
SpecialLine line_through(const PointU& p, const PointU& q, std::string descriptor = "");
/// Line cut out by linear forms in u-space (the kernel must be two-dimensional).
SpecialLine line_from_forms(const std::vector<Vec4>& forms, std::string descriptor = "");

/// Scale-free distance from p to the line (sine of the angle to its projection).
double line_residual(const SpecialLine& l, const PointU& p);
bool on_line(const SpecialLine& l, const PointU& p, double tol = 1e-10);
double plane_residual(const SpecialPlane& pl, const PointU& p);
bool same_line(const SpecialLine& a, const SpecialLine& b, double tol = 1e-9);

/// The lines of the a-ruling (or b-ruling) through a point of the quadric.
SpecialLine ruling_line(const PointU& p, bool a_family);

/// Distinct images of a line under the group.
std::vector<SpecialLine> line_orbit(const SpecialLine& l, double tol = 1e-9);

struct ConfigCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Table data round trips, incidence bullets and the quadric line-orbit counts.
std::vector<ConfigCheck> verify_configuration();

}  // namespace qflow
