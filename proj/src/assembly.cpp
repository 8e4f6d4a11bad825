#include "specstab/assembly.hpp"
#include "specstab/errors.hpp"

#include <cmath>
#include <vector>

namespace specstab {

namespace {

// shared element loop: emits (i, j, value) triplets of integral w phi_i phi_j
// per triangle with the 3-point edge-midpoint rule; allow_nonpositive relaxes
// the weight-sign guard for absolute-difference weights.
SparseMatrix assemble_mass_impl(const Mesh& mesh, const std::function<double(Complex)>& w,
                                bool allow_nonpositive) {
    const int n = mesh.num_vertices();
    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(static_cast<std::size_t>(mesh.num_triangles()) * 9);

    for (int t = 0; t < mesh.num_triangles(); ++t) {
        const auto& tri = mesh.triangles[static_cast<std::size_t>(t)];
        const Complex p0 = mesh.vertices[static_cast<std::size_t>(tri[0])];
        const Complex p1 = mesh.vertices[static_cast<std::size_t>(tri[1])];
        const Complex p2 = mesh.vertices[static_cast<std::size_t>(tri[2])];
        const double area = 0.5 * triangle_doubled_area(mesh, t);
        if (area < 1e-14) throw DegenerateTriangle("triangle " + std::to_string(t));

        const Complex mid[3] = {0.5 * (p0 + p1), 0.5 * (p1 + p2), 0.5 * (p2 + p0)};
        double wm[3];
        for (int m = 0; m < 3; ++m) {
            wm[m] = w(mid[m]);
            if (!allow_nonpositive && wm[m] <= 0.0)
                throw NonpositiveWeight("weight <= 0 at quadrature point (" +
                                        std::to_string(mid[m].real()) + ", " +
                                        std::to_string(mid[m].imag()) + ")");
        }
        // P1 basis at midpoint of edge m: 1/2 on the edge's endpoints, 0 opposite
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                double s = 0.0;
                for (int m = 0; m < 3; ++m) {
                    const double vi = (i == m || i == (m + 1) % 3) ? 0.5 : 0.0;
                    const double vj = (j == m || j == (m + 1) % 3) ? 0.5 : 0.0;
                    s += wm[m] * vi * vj;
                }
                trips.emplace_back(tri[i], tri[j], area / 3.0 * s);
            }
        }
    }
    SparseMatrix M(n, n);
    M.setFromTriplets(trips.begin(), trips.end());
    M.makeCompressed();
    return M;
}

} // namespace

SparseMatrix assemble_stiffness(const Mesh& mesh) {
    const int n = mesh.num_vertices();
    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(static_cast<std::size_t>(mesh.num_triangles()) * 9);

    for (int t = 0; t < mesh.num_triangles(); ++t) {
        const auto& tri = mesh.triangles[static_cast<std::size_t>(t)];
        const Complex p[3] = {mesh.vertices[static_cast<std::size_t>(tri[0])],
                              mesh.vertices[static_cast<std::size_t>(tri[1])],
                              mesh.vertices[static_cast<std::size_t>(tri[2])]};
        const double a2 = triangle_doubled_area(mesh, t);
        if (0.5 * a2 < 1e-14) throw DegenerateTriangle("triangle " + std::to_string(t));

        // grad of barycentric i = rot90(edge opposite i) / (2 area)
        double gx[3], gy[3];
        for (int i = 0; i < 3; ++i) {
            const Complex e = p[(i + 2) % 3] - p[(i + 1) % 3];
            gx[i] = -e.imag() / a2;
            gy[i] = e.real() / a2;
        }
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                trips.emplace_back(tri[i], tri[j], 0.5 * a2 * (gx[i] * gx[j] + gy[i] * gy[j]));
    }
    SparseMatrix A(n, n);
    A.setFromTriplets(trips.begin(), trips.end());
    A.makeCompressed();
    return A;
}

SparseMatrix assemble_weighted_mass(const Mesh& mesh,
                                    const std::function<double(Complex)>& w) {
    return assemble_mass_impl(mesh, w, false);
}

SparseMatrix assemble_weighted_mass(const Mesh& mesh, const ConformalMap& map) {
    return assemble_mass_impl(mesh, [&](Complex z) { return weight(map, z); }, false);
}

SparseMatrix assemble_absdiff_mass(const Mesh& mesh, const ConformalMap& map1,
                                   const ConformalMap& map2) {
    return assemble_mass_impl(
        mesh, [&](Complex z) { return std::abs(weight(map1, z) - weight(map2, z)); }, true);
}

} // namespace specstab
