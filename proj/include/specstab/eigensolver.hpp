#ifndef SPECSTAB_EIGENSOLVER_HPP
#define SPECSTAB_EIGENSOLVER_HPP

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <functional>

namespace specstab {

struct EigenPairs {
    Eigen::VectorXd values;  // ascending
    Eigen::MatrixXd vectors; // columns, M-orthonormal
    int iterations = 0;      // 0 on the dense path
};

struct EigenSolveOptions {
    // dense reduction below the cutoff, shift-invert Lanczos above; the
    // cutoff keeps desk-scale meshes on whichever path is faster without
    // changing any computed value beyond solver tolerance
    int dense_cutoff = 2000;
    double tol = 1e-11;
    int max_iterations = 0; // 0: pick from k
    unsigned seed = 0x5eedu;
};

/// Smallest k eigenpairs of A x = lambda M x with A symmetric positive
/// semidefinite and M symmetric positive definite. Dense reduction for small
/// problems; shift-invert Lanczos (shift -1, full reorthogonalization in the
/// M-inner product) otherwise. Eigenvalues are reported as computed, sorted
/// nondecreasing; eigenvectors satisfy X^T M X = I.
EigenPairs smallest_generalized(const Eigen::SparseMatrix<double>& A,
                                const Eigen::SparseMatrix<double>& M, int k,
                                const EigenSolveOptions& opts = {});

/// Largest ratio x^T N x / x^T A x over x with x^T A x > 0, where N (given by
/// its action) and A are symmetric positive semidefinite and share the
/// constant-vector kernel. Lanczos on the grounded pseudo-inverse operator in
/// the A-inner product.
double largest_pencil_ratio(const std::function<void(const Eigen::VectorXd&, Eigen::VectorXd&)>& N_apply,
                            const Eigen::SparseMatrix<double>& A,
                            const EigenSolveOptions& opts = {});

} // namespace specstab

#endif
