#include "specstab/mesh.hpp"
#include "specstab/errors.hpp"

#include <cmath>
#include <numbers>

namespace specstab {

Mesh mesh_unit_disc(int refinement) {
    if (refinement < 1) throw Error("mesh_unit_disc requires refinement >= 1");
    const int R = refinement;
    Mesh mesh;
    mesh.refinement = R;
    mesh.vertices.reserve(static_cast<std::size_t>(3 * R * R + 3 * R + 1));

    const double two_pi = 2.0 * std::numbers::pi;
    std::vector<int> ring_start(static_cast<std::size_t>(R) + 1, 0);
    mesh.vertices.push_back({0.0, 0.0});
    for (int j = 1; j <= R; ++j) {
        ring_start[static_cast<std::size_t>(j)] = mesh.num_vertices();
        const int n = 6 * j;
        const double r = static_cast<double>(j) / R;
        for (int m = 0; m < n; ++m) {
            const double th = two_pi * m / n;
            mesh.vertices.push_back({r * std::cos(th), r * std::sin(th)});
        }
    }
    mesh.boundary.assign(mesh.vertices.size(), false);
    for (int m = 0; m < 6 * R; ++m)
        mesh.boundary[static_cast<std::size_t>(ring_start[static_cast<std::size_t>(R)] + m)] = true;

    // center fan
    for (int m = 0; m < 6; ++m)
        mesh.triangles.push_back({0, 1 + m, 1 + (m + 1) % 6});

    // zipper between ring j (inner, 6j vertices) and ring j+1 (outer, 6j+6):
    // advance whichever ring's next vertex comes first in angle.
    for (int j = 1; j < R; ++j) {
        const int ni = 6 * j, no = 6 * (j + 1);
        const int si = ring_start[static_cast<std::size_t>(j)];
        const int so = ring_start[static_cast<std::size_t>(j + 1)];
        int i = 0, k = 0;
        while (i < ni || k < no) {
            const bool advance_outer =
                k < no &&
                (i == ni || static_cast<double>(k + 1) / no <= static_cast<double>(i + 1) / ni + 1e-15);
            if (advance_outer) {
                mesh.triangles.push_back({so + k % no, so + (k + 1) % no, si + i % ni});
                ++k;
            } else {
                mesh.triangles.push_back({si + i % ni, so + k % no, si + (i + 1) % ni});
                ++i;
            }
        }
    }
    return mesh;
}

double triangle_doubled_area(const Mesh& mesh, int t) {
    const auto& tri = mesh.triangles[static_cast<std::size_t>(t)];
    const Complex a = mesh.vertices[static_cast<std::size_t>(tri[0])];
    const Complex b = mesh.vertices[static_cast<std::size_t>(tri[1])];
    const Complex c = mesh.vertices[static_cast<std::size_t>(tri[2])];
    return (b.real() - a.real()) * (c.imag() - a.imag()) -
           (b.imag() - a.imag()) * (c.real() - a.real());
}

} // namespace specstab
