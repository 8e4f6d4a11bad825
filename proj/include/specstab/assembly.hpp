#ifndef SPECSTAB_ASSEMBLY_HPP
#define SPECSTAB_ASSEMBLY_HPP

#include <Eigen/SparseCore>
#include <functional>

#include "specstab/conformal_map.hpp"
#include "specstab/mesh.hpp"

namespace specstab {

using SparseMatrix = Eigen::SparseMatrix<double>;
using Vector = Eigen::VectorXd;

/// P1 stiffness matrix of the weak form integral grad f . grad g; no boundary
/// condition imposed (natural Neumann), so constants span the kernel.
SparseMatrix assemble_stiffness(const Mesh& mesh);

/// Weighted mass matrix of integral w f g with the weight sampled by the
/// order-2 edge-midpoint rule on each triangle. Throws NonpositiveWeight if
/// w <= 0 at a quadrature point.
SparseMatrix assemble_weighted_mass(const Mesh& mesh,
                                    const std::function<double(Complex)>& w);

/// Mass against the conformal weight h = |phi'|^2 of the map.
SparseMatrix assemble_weighted_mass(const Mesh& mesh, const ConformalMap& map);

/// Mass against |w| with no positivity requirement (used for |h1 - h2|).
SparseMatrix assemble_absdiff_mass(const Mesh& mesh, const ConformalMap& map1,
                                   const ConformalMap& map2);

} // namespace specstab

#endif
