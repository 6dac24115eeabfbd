#include "trk/linalg.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace trk {

double max_abs(const ComplexMatrix& m)
{
    if (m.size() == 0) {
        return 0.0;
    }
    return m.cwiseAbs().maxCoeff();
}

double hermiticity_defect(const ComplexMatrix& m)
{
    if (m.rows() != m.cols() || m.size() == 0) {
        return 0.0;
    }
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& m)
{
    if (m.rows() != m.cols()) {
        return false;
    }
    return hermiticity_defect(m) <= 1e-12 * (1.0 + max_abs(m));
}

void require_hermitian(const ComplexMatrix& m, const std::string& who)
{
    if (m.rows() != m.cols()) {
        throw DimensionError(who + ": matrix is not square (" + std::to_string(m.rows())
                             + "x" + std::to_string(m.cols()) + ")");
    }
    const double defect = hermiticity_defect(m);
    const double tol = 1e-12 * (1.0 + max_abs(m));
    if (defect > tol) {
        throw NumericalError(who + ": Hermiticity violated, defect " + std::to_string(defect)
                             + " exceeds tolerance " + std::to_string(tol));
    }
}

namespace {

// Largest-magnitude entry made real and non-negative, ties broken by lowest index.
void fix_column_phases(ComplexMatrix& v)
{
    for (Eigen::Index c = 0; c < v.cols(); ++c) {
        Eigen::Index best = 0;
        double best_abs = std::abs(v(0, c));
        for (Eigen::Index r = 1; r < v.rows(); ++r) {
            const double a = std::abs(v(r, c));
            if (a > best_abs) {
                best_abs = a;
                best = r;
            }
        }
        if (best_abs > 0.0) {
            const Complex phase = v(best, c) / best_abs;
            v.col(c) *= std::conj(phase);
            v(best, c) = Complex(std::abs(v(best, c)), 0.0);
        }
    }
}

} // namespace

EigenSystem hermitian_eig(const ComplexMatrix& m)
{
    require_hermitian(m, "hermitian_eig");
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
    if (solver.info() != Eigen::Success) {
        // Eigen caps the implicit-QL sweeps internally; report the residual we got.
        ComplexMatrix v = solver.eigenvectors();
        const double residual =
            (m * v - v * solver.eigenvalues().asDiagonal().toDenseMatrix().cast<Complex>())
                .cwiseAbs()
                .maxCoeff();
        throw NumericalError("hermitian_eig: iteration cap exceeded, residual "
                             + std::to_string(residual));
    }
    EigenSystem out;
    out.values = solver.eigenvalues();
    out.vectors = solver.eigenvectors();
    fix_column_phases(out.vectors);
    return out;
}

ComplexMatrix hermitian_function(const ComplexMatrix& m, MatrixFunction kind)
{
    const EigenSystem es = hermitian_eig(m);
    RealVector f(es.values.size());
    for (Eigen::Index i = 0; i < es.values.size(); ++i) {
        f[i] = (kind == MatrixFunction::cosine) ? std::cos(es.values[i]) : std::sin(es.values[i]);
    }
    ComplexMatrix out = es.vectors * f.asDiagonal() * es.vectors.adjoint();
    out = 0.5 * (out + out.adjoint().eval());
    return out;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b)
{
    if (a.cols() != b.rows()) {
        throw DimensionError("matmul: inner dimensions differ (" + std::to_string(a.cols())
                             + " vs " + std::to_string(b.rows()) + ")");
    }
    return a * b;
}

ComplexMatrix adjoint(const ComplexMatrix& a)
{
    return a.adjoint();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b)
{
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

} // namespace trk
