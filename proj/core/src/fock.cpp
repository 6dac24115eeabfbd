#include "trk/fock.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace trk {

int HilbertSpace::total_dim() const
{
    int d = 1;
    for (int n : subsystem_dims) {
        d *= n;
    }
    return d;
}

std::vector<int> HilbertSpace::digits(int index) const
{
    std::vector<int> out(subsystem_dims.size());
    for (int s = static_cast<int>(subsystem_dims.size()) - 1; s >= 0; --s) {
        out[s] = index % subsystem_dims[s];
        index /= subsystem_dims[s];
    }
    return out;
}

HilbertSpace make_space(std::vector<int> dims)
{
    if (dims.empty()) {
        throw DimensionError("make_space: no subsystems");
    }
    for (int n : dims) {
        if (n < 2) {
            throw DimensionError("make_space: subsystem dimension " + std::to_string(n) + " < 2");
        }
    }
    return HilbertSpace{std::move(dims)};
}

ComplexMatrix identity(int n)
{
    return ComplexMatrix::Identity(n, n);
}

ComplexMatrix annihilation(int n)
{
    if (n < 2) {
        throw DimensionError("annihilation: truncation " + std::to_string(n) + " < 2");
    }
    ComplexMatrix a = ComplexMatrix::Zero(n, n);
    for (int k = 0; k + 1 < n; ++k) {
        a(k, k + 1) = std::sqrt(static_cast<double>(k + 1));
    }
    return a;
}

ComplexMatrix number_operator(int n)
{
    if (n < 2) {
        throw DimensionError("number_operator: truncation " + std::to_string(n) + " < 2");
    }
    ComplexMatrix out = ComplexMatrix::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        out(k, k) = static_cast<double>(k);
    }
    return out;
}

QuadraturePair quadratures(int n)
{
    const ComplexMatrix a = annihilation(n);
    const double s = 1.0 / std::sqrt(2.0);
    QuadraturePair qp;
    qp.Q = s * (a + a.adjoint());
    qp.P = Complex(0.0, 1.0) * s * (a.adjoint() - a);
    return qp;
}

ComplexMatrix pauli(Pauli which)
{
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    switch (which) {
    case Pauli::x:
        m(0, 1) = 1.0;
        m(1, 0) = 1.0;
        break;
    case Pauli::y:
        m(0, 1) = Complex(0.0, -1.0);
        m(1, 0) = Complex(0.0, 1.0);
        break;
    case Pauli::z:
        m(0, 0) = -1.0;
        m(1, 1) = 1.0;
        break;
    case Pauli::plus:
        m(1, 0) = 1.0; // |e><g|
        break;
    case Pauli::minus:
        m(0, 1) = 1.0; // |g><e|
        break;
    }
    return m;
}

ComplexMatrix photon_parity(int n)
{
    if (n < 2) {
        throw DimensionError("photon_parity: truncation " + std::to_string(n) + " < 2");
    }
    ComplexMatrix out = ComplexMatrix::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        out(k, k) = (k % 2 == 0) ? 1.0 : -1.0;
    }
    return out;
}

ComplexMatrix embed(const ComplexMatrix& op, const HilbertSpace& space, int position)
{
    const int nsub = static_cast<int>(space.subsystem_dims.size());
    if (position < 0 || position >= nsub) {
        throw DimensionError("embed: position " + std::to_string(position) + " out of range");
    }
    if (op.rows() != op.cols() || op.rows() != space.subsystem_dims[position]) {
        throw DimensionError("embed: operator dimension " + std::to_string(op.rows())
                             + " does not match subsystem dimension "
                             + std::to_string(space.subsystem_dims[position]));
    }
    ComplexMatrix out = ComplexMatrix::Identity(1, 1);
    for (int s = 0; s < nsub; ++s) {
        if (s == position) {
            out = kron(out, op);
        } else {
            out = kron(out, identity(space.subsystem_dims[s]));
        }
    }
    return out;
}

std::vector<int> kept_indices(const HilbertSpace& space, const std::vector<int>& kept_dims)
{
    if (kept_dims.size() != space.subsystem_dims.size()) {
        throw DimensionError("kept_indices: kept_dims has wrong number of subsystems");
    }
    for (std::size_t s = 0; s < kept_dims.size(); ++s) {
        if (kept_dims[s] < 1 || kept_dims[s] > space.subsystem_dims[s]) {
            throw DimensionError("kept_indices: kept dimension out of range for subsystem "
                                 + std::to_string(s));
        }
    }
    std::vector<int> out;
    const int total = space.total_dim();
    for (int idx = 0; idx < total; ++idx) {
        const std::vector<int> d = space.digits(idx);
        bool keep = true;
        for (std::size_t s = 0; s < d.size(); ++s) {
            if (d[s] >= kept_dims[s]) {
                keep = false;
                break;
            }
        }
        if (keep) {
            out.push_back(idx);
        }
    }
    return out;
}

ComplexMatrix project(const ComplexMatrix& op, const HilbertSpace& space,
                      const std::vector<int>& kept_dims)
{
    if (op.rows() != space.total_dim() || op.cols() != space.total_dim()) {
        throw DimensionError("project: operator does not live on the given space");
    }
    const std::vector<int> keep = kept_indices(space, kept_dims);
    const int n = static_cast<int>(keep.size());
    ComplexMatrix out(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            out(i, j) = op(keep[i], keep[j]);
        }
    }
    return out;
}

} // namespace trk
