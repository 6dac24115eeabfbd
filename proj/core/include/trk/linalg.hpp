// linalg.hpp — Dense complex matrices, Hermitian eigendecomposition, operator functions

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace trk {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

// Thrown on dimension mismatches and contract violations of the inputs.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Thrown when a numerical routine fails (non-Hermitian input, no convergence).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Eigendecomposition of a Hermitian matrix.
//
// values are ascending; the k-th column of vectors is the k-th eigenvector.
// Phase convention: in each column the entry of largest magnitude (ties broken
// by lowest index) is real and non-negative, which makes the output
// deterministic for identical input.
struct EigenSystem {
    RealVector values;
    ComplexMatrix vectors;
};

double max_abs(const ComplexMatrix& m);

// max |M(i,j) - conj(M(j,i))| over all entries; 0 for empty matrices.
double hermiticity_defect(const ComplexMatrix& m);

// Hermitian within max defect <= 1e-12 * (1 + max|M|).
bool is_hermitian(const ComplexMatrix& m);

// Throws NumericalError (non-Hermitian) or DimensionError (non-square).
void require_hermitian(const ComplexMatrix& m, const std::string& who);

EigenSystem hermitian_eig(const ComplexMatrix& m);

enum class MatrixFunction { cosine, sine };

// V f(diag) V^dag with f applied to the eigenvalues; result re-symmetrized.
ComplexMatrix hermitian_function(const ComplexMatrix& m, MatrixFunction kind);

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& a);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

} // namespace trk
