#include "stardil/mat_kernel.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace stardil {

double max_abs(const CMatrix& m) {
    if (m.size() == 0) return 0.0;
    return m.cwiseAbs().maxCoeff();
}

double hermitian_eig_min(const CMatrix& m) {
    if (m.rows() != m.cols())
        throw ShapeError("hermitian_eig_min: matrix is not square");
    if (m.rows() == 0) return 0.0;
    const double scale = std::max(1.0, max_abs(m));
    if (max_abs(m - m.adjoint()) > tol::hermitian * scale * 10)
        throw ShapeError("hermitian_eig_min: matrix is not Hermitian within tolerance");
    CMatrix h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

FactorResult psd_factor(const CMatrix& m, double tolerance) {
    if (m.rows() != m.cols())
        throw ShapeError("psd_factor: matrix is not square");
    FactorResult out;
    const Eigen::Index n = m.rows();
    if (n == 0) {
        out.q = CMatrix(0, 0);
        return out;
    }
    CMatrix h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
    const Eigen::VectorXd ev = es.eigenvalues();
    const double lmax = std::max(0.0, ev.maxCoeff());
    const double scale = std::max(1.0, max_abs(m));
    const double lmin = ev.minCoeff();
    if (lmin < -tolerance * scale * 10)
        throw NotPsdError(lmin, -1, "psd_factor: matrix is not positive semidefinite");
    const double cutoff = tolerance * std::max(lmax, 1e-300);
    Eigen::Index r = 0;
    for (Eigen::Index i = 0; i < n; ++i)
        if (ev(i) > cutoff) ++r;
    out.q = CMatrix(r, n);
    Eigen::Index row = 0;
    // Eigenvalues come sorted ascending; keep the significant ones.
    for (Eigen::Index i = 0; i < n; ++i) {
        if (ev(i) > cutoff) {
            out.q.row(row) = std::sqrt(ev(i)) * es.eigenvectors().col(i).adjoint();
            ++row;
        }
    }
    out.rank = r;
    out.residual = max_abs(m - out.q.adjoint() * out.q);
    return out;
}

LstsqResult lstsq(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows())
        throw ShapeError("lstsq: row counts of a and b differ");
    LstsqResult out;
    if (a.cols() == 0) {
        out.x = CMatrix(0, b.cols());
        out.residual = b.norm();
        return out;
    }
    if (b.cols() == 0) {
        out.x = CMatrix(a.cols(), 0);
        out.residual = 0.0;
        return out;
    }
    Eigen::CompleteOrthogonalDecomposition<CMatrix> cod(a);
    out.x = cod.solve(b);
    out.residual = (a * out.x - b).norm();
    return out;
}

double op_norm(const CMatrix& a) {
    if (a.size() == 0) return 0.0;
    Eigen::JacobiSVD<CMatrix> svd(a);
    return svd.singularValues()(0);
}

Eigen::Index col_rank(const CMatrix& a, double threshold) {
    if (a.size() == 0) return 0;
    Eigen::JacobiSVD<CMatrix> svd(a);
    const auto& sv = svd.singularValues();
    const double cutoff = threshold * std::max(sv(0), 1e-300);
    Eigen::Index r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff) ++r;
    return r;
}

}  // namespace stardil
