#ifndef SPECSTAB_MESH_HPP
#define SPECSTAB_MESH_HPP

#include <array>
#include <complex>
#include <vector>

#include "specstab/conformal_map.hpp"

namespace specstab {

/// Structured triangulation of the unit disc: concentric rings, ring j
/// holding 6j vertices at radius j/R, zipper-triangulated between rings.
/// 3R^2 + 3R + 1 vertices, counterclockwise triangles, 30-degree minimum
/// angle, fully deterministic in the refinement level.
struct Mesh {
    std::vector<Complex> vertices;
    std::vector<std::array<int, 3>> triangles;
    int refinement = 0;
    std::vector<bool> boundary; // per-vertex: |z| = 1

    int num_vertices() const { return static_cast<int>(vertices.size()); }
    int num_triangles() const { return static_cast<int>(triangles.size()); }
};

Mesh mesh_unit_disc(int refinement);

/// Signed doubled area of triangle t (positive for counterclockwise).
double triangle_doubled_area(const Mesh& mesh, int t);

} // namespace specstab

#endif
