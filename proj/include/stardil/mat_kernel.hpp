#pragma once

#include <Eigen/Dense>
#include <complex>

#include "stardil/errors.hpp"

namespace stardil {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// Default floating point contracts used throughout the library.
namespace tol {
inline constexpr double hermitian = 1e-10;    // relative Hermitian-deviation slack
inline constexpr double rank_cutoff = 1e-10;  // eigenvalue cutoff relative to lambda_max
inline constexpr double verify = 1e-8;        // verification residual budget
inline constexpr double psd = 1e-9;           // PSD verdict slack (scale-aware)
}  // namespace tol

// Max-abs entry of a matrix; 0 for empty matrices.
double max_abs(const CMatrix& m);

// Smallest eigenvalue of the symmetrized (M + M*)/2.
// Throws ShapeError if M is not square or is far from Hermitian.
double hermitian_eig_min(const CMatrix& m);

struct FactorResult {
    CMatrix q;        // r x n, with m ~= q.adjoint() * q
    Eigen::Index rank = 0;
    double residual = 0.0;  // max-abs of (m - q* q)
};

// Rank-revealing factorization of a PSD matrix via Hermitian eigendecomposition
// with eigenvalue clipping at cutoff * lambda_max.
// Throws NotPsdError when lambda_min < -tolerance * max(1, ||m||_max).
FactorResult psd_factor(const CMatrix& m, double tolerance = tol::rank_cutoff);

struct LstsqResult {
    CMatrix x;
    double residual = 0.0;  // Frobenius norm of (a x - b)
};

// Minimum-norm least squares: x minimizing ||a x - b||_F.
LstsqResult lstsq(const CMatrix& a, const CMatrix& b);

// Largest singular value.
double op_norm(const CMatrix& a);

// Numerical column rank at threshold * sigma_max.
Eigen::Index col_rank(const CMatrix& a, double threshold = tol::rank_cutoff);

}  // namespace stardil
