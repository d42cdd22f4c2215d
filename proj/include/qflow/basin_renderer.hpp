#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qflow/equivariants.hpp"
#include "qflow/special_orbits.hpp"

namespace qflow {

/// Rectangular window centred at (cx, cy); cell (i, j) has column i from the left and row j
/// from the top.
struct GridSpec {
    double cx = 0, cy = 0;
    double width = 4, height = 4;
    int nx = 720, ny = 720;

    /// Throws InvalidInput on non-positive extents or resolution.
    void validate() const;
    double x(int i) const { return cx - 0.5 * width + (i + 0.5) * width / nx; }
    double y(int j) const { return cy + 0.5 * height - (j + 0.5) * height / ny; }
    /// Cell containing (x, y), or false when outside the window.
    bool cell_of(double x, double y, int& i, int& j) const;
    std::size_t cells() const { return static_cast<std::size_t>(nx) * ny; }
};

struct Attractor1D {
    std::string label;
    std::vector<ChartValue> cycle;  ///< a fixed point or the points of a cycle in orbit order
};

struct AttractorSet1D {
    std::vector<Attractor1D> items;
    double radius = 1e-4;  ///< chordal capture radius

    /// Throws InvalidInput when a cycle is empty or two points are within 3 radii.
    void validate() const;
};

struct AttractorU {
    std::string label;
    std::vector<PointU> cycle;
};

struct AttractorSetU {
    std::vector<AttractorU> items;
    double radius = 1e-4;

    void validate() const;
};

/// Per-cell classification: index into the attractor set, -1 for unresolved (black).
struct Portrait {
    GridSpec grid;
    std::vector<std::string> labels;
    std::vector<int> cell;
    std::vector<int> iterations;  ///< iterate at which the capture began (-1 when unresolved)

    int at(int i, int j) const { return cell[static_cast<std::size_t>(j) * grid.nx + i]; }
};

/// Each cell z = x + iy is iterated homogeneously on CP^1. A cell resolves to the first
/// attractor whose cycle it enters and then follows for one more step (period-2 cycles are
/// matched as sets, in either phase).
Portrait render_1d(const RestrictedMap1D& map, const GridSpec& grid, const AttractorSet1D& attractors,
                   int max_iter = 60);

/// Real affine chart of a real projective plane in permutation coordinates:
/// (x, y) -> origin + x e1 + y e2, with origin, e1, e2 mutually orthogonal.
struct PlaneChart {
    std::string plane;  ///< descriptor of the special plane
    std::array<double, 5> origin{}, e1{}, e2{};

    std::array<double, 5> embed(double x, double y) const;
    PointU embed_u(double x, double y) const;
    /// Affine coordinates of a real point of the plane. Throws NotOnChart off the plane or
    /// on the line at infinity.
    std::pair<double, double> coords(const std::array<double, 5>& p, double tol = 1e-8) const;
    std::pair<double, double> coords(const PointU& p, double tol = 1e-8) const;
};

/// The real plane {x_i = x_j} (i < j, 1-based): the 10-point p10_ij_2 at the origin and the
/// other three 5-points, in increasing index, at (1, 0), (-1/2, sqrt3/2), (-1/2, -sqrt3/2).
PlaneChart s3_plane_chart(int i, int j);

/// Largest relative distance of map images of sample chart points from the plane.
double plane_invariance_residual(const PlaneChart& chart, const EquivariantMap& map, int samples = 20,
                                 std::uint64_t seed = 1);

/// Iterates the full map on CP^3 from every embedded cell. Uses the real permutation
/// coordinate path of the map when it has one. Throws PlaneNotInvariant when sampled images
/// leave the plane by more than 1e-8.
Portrait render_plane(const PlaneChart& chart, const EquivariantMap& map, const GridSpec& grid,
                      const AttractorSetU& attractors, int max_iter = 60);

struct PortraitStats {
    std::vector<double> fractions;  ///< per attractor, over the counted cells
    double black = 0;
    double mean_iterations = 0;  ///< over resolved cells
    std::size_t counted = 0;
};

/// Statistics over the cells whose centre passes `mask` (all cells when empty).
PortraitStats attractor_statistics(const Portrait& portrait,
                                   const std::function<bool(double, double)>& mask = {});

/// Fraction of cells whose label, after the symmetry, matches the label of the image cell.
/// `transform` maps cell centres; `label_map[k]` is the label attractor k is sent to. Cells
/// whose 3x3 neighbourhood is not uniform, or whose image falls outside the window, are skipped.
double symmetry_agreement(const Portrait& portrait, const std::function<std::pair<double, double>(double, double)>& transform,
                          const std::vector<int>& label_map);

/// Attracting cycles of period <= max_period reached from a coarse seed grid over the window.
/// Labels are "c<k>" in order of discovery from the top-left seed.
AttractorSet1D find_attractors_1d(const RestrictedMap1D& map, const GridSpec& window, int max_period = 4,
                                  int seeds_per_side = 24);

/// Named portraits: every restricted 1-D map (attractors found by find_attractors_1d) and
/// "f6_RP2", phi6 on the real plane {x_4 = x_5}.
struct PortraitPreset {
    std::string name;
    bool plane = false;
    GridSpec grid;  ///< default window at 720 x 720
    AttractorSet1D attractors_1d;
    PlaneChart chart;
    AttractorSetU attractors_u;
    std::string map;  ///< restricted map or equivariant map name
};

PortraitPreset portrait_preset(const std::string& name);
std::vector<std::string> portrait_preset_names();
Portrait render_preset(const PortraitPreset& preset, int max_iter = 60);

/// Binary PPM (P6). Attractor k gets a fixed hue, shaded by capture iteration; unresolved cells are black.
std::vector<std::uint8_t> ppm_bytes(const Portrait& portrait);
/// Throws InvalidInput when the file cannot be written.
void write_ppm(const std::string& path, const Portrait& portrait);

/// Worker threads used by the renderers: QUINTIC_FLOW_THREADS when set to a positive integer,
/// otherwise the hardware concurrency.
int render_threads();

}  // namespace qflow
