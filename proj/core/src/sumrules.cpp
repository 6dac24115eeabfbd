#include "trk/sumrules.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace trk {

DressedSpectrum diagonalize_model(const BuiltModel& model)
{
    DressedSpectrum spec;
    spec.basis = hermitian_eig(model.hamiltonian);
    spec.ground_energy = spec.basis.values[0];
    spec.omegas.resize(spec.basis.values.size());
    for (Eigen::Index k = 0; k < spec.basis.values.size(); ++k) {
        spec.omegas[k] = spec.basis.values[k] - spec.ground_energy;
    }
    spec.omegas[0] = 0.0;
    return spec;
}

MatrixElementTable matrix_elements(const DressedSpectrum& spec, const ComplexMatrix& op, int keep,
                                   const std::string& label)
{
    if (op.rows() != spec.basis.vectors.rows() || op.cols() != spec.basis.vectors.rows()) {
        throw DimensionError("matrix_elements: operator dimension does not match the basis");
    }
    if (keep < 1 || keep > spec.levels()) {
        throw DimensionError("matrix_elements: keep out of range");
    }
    const ComplexMatrix v = spec.basis.vectors.leftCols(keep);
    return MatrixElementTable{label, v.adjoint() * op * v};
}

ComplexMatrix dressed_operator(const DressedSpectrum& spec, const ComplexMatrix& op)
{
    if (op.rows() != spec.basis.vectors.rows() || op.cols() != spec.basis.vectors.rows()) {
        throw DimensionError("dressed_operator: operator dimension does not match the basis");
    }
    return spec.basis.vectors.adjoint() * op * spec.basis.vectors;
}

RealMatrix quadrature_relation_residual(const DressedSpectrum& spec,
                                        const MatrixElementTable& q_table,
                                        const MatrixElementTable& p_table, double omega_m)
{
    const ComplexMatrix& q = q_table.elements;
    const ComplexMatrix& p = p_table.elements;
    if (q.rows() != p.rows() || q.cols() != p.cols()) {
        throw DimensionError("quadrature_relation_residual: Q and P tables differ in size");
    }
    RealMatrix r(q.rows(), q.cols());
    for (Eigen::Index i = 0; i < q.rows(); ++i) {
        for (Eigen::Index j = 0; j < q.cols(); ++j) {
            const double omega_ij = spec.omegas[i] - spec.omegas[j];
            r(i, j) = std::abs(omega_m * p(i, j) - Complex(0.0, 1.0) * omega_ij * q(i, j));
        }
    }
    return r;
}

std::vector<double> oscillator_strengths(const DressedSpectrum& spec, const ComplexMatrix& q_full,
                                         double omega_m, int ref_state)
{
    if (ref_state < 0 || ref_state >= spec.levels()) {
        throw DimensionError("oscillator_strengths: reference state out of range");
    }
    std::vector<double> f(spec.levels());
    for (int k = 0; k < spec.levels(); ++k) {
        const double omega_ki = spec.omegas[k] - spec.omegas[ref_state];
        f[k] = 2.0 * (omega_ki / omega_m) * std::norm(q_full(ref_state, k));
    }
    f[ref_state] = 0.0;
    return f;
}

std::vector<double> partial_sums(const std::vector<double>& f_terms)
{
    std::vector<double> out(f_terms.size());
    double acc = 0.0;
    for (std::size_t k = 0; k < f_terms.size(); ++k) {
        acc += f_terms[k];
        out[k] = acc;
    }
    return out;
}

ComplexMatrix generalized_trk_matrix(const DressedSpectrum& spec, const ComplexMatrix& q_full,
                                     double omega_m, int block)
{
    if (block < 1 || block > spec.levels()) {
        throw DimensionError("generalized_trk_matrix: block out of range");
    }
    ComplexMatrix g = ComplexMatrix::Zero(block, block);
    for (int i = 0; i < block; ++i) {
        for (int j = 0; j < block; ++j) {
            Complex acc = 0.0;
            for (int k = 0; k < spec.levels(); ++k) {
                const double w = (spec.omegas[k] - spec.omegas[i])
                                 + (spec.omegas[k] - spec.omegas[j]);
                acc += (w / omega_m) * q_full(i, k) * q_full(k, j);
            }
            g(i, j) = acc;
        }
    }
    return g;
}

MomentumSumResult momentum_sum_rule(const DressedSpectrum& spec, const ComplexMatrix& p_full,
                                    double omega_m, int ref_state)
{
    if (ref_state < 0 || ref_state >= spec.levels()) {
        throw DimensionError("momentum_sum_rule: reference state out of range");
    }
    MomentumSumResult out;
    for (int k = 0; k < spec.levels(); ++k) {
        if (k == ref_state) {
            continue;
        }
        const double omega_ki = spec.omegas[k] - spec.omegas[ref_state];
        const double p_sq = std::norm(p_full(ref_state, k));
        if (omega_ki == 0.0) {
            if (std::sqrt(p_sq) > 1e-10) {
                out.degenerate_violations.push_back(k);
            }
            continue;
        }
        out.total += 2.0 * omega_m * p_sq / omega_ki;
    }
    return out;
}

double atomic_trk(const DressedSpectrum& spec, const ComplexMatrix& x_full, double mass,
                  int ref_state)
{
    if (ref_state < 0 || ref_state >= spec.levels()) {
        throw DimensionError("atomic_trk: reference state out of range");
    }
    double total = 0.0;
    for (int k = 0; k < spec.levels(); ++k) {
        const double omega_kj = spec.omegas[k] - spec.omegas[ref_state];
        total += 2.0 * mass * omega_kj * std::norm(x_full(ref_state, k));
    }
    return total;
}

SumRuleReport make_report(const BuiltModel& model, const DressedSpectrum& spec, int mode_index,
                          int ref_state, int display_levels)
{
    if (mode_index < 0 || mode_index >= static_cast<int>(model.modes.size())) {
        throw DimensionError("make_report: mode index out of range");
    }
    const int block = std::min(display_levels, spec.levels());
    if (ref_state < 0 || ref_state >= block) {
        throw DimensionError("make_report: reference state outside the displayed block");
    }
    const ModeOps& mode = model.modes[mode_index];
    const ComplexMatrix q_full = dressed_operator(spec, mode.Q);
    const ComplexMatrix p_full = dressed_operator(spec, mode.P);

    SumRuleReport rep;
    rep.mode_label = mode.label;
    rep.reference_state = ref_state;
    rep.f_terms = oscillator_strengths(spec, q_full, mode.omega, ref_state);
    rep.partial_sums = partial_sums(rep.f_terms);
    rep.total = rep.partial_sums.back();
    rep.momentum_total = momentum_sum_rule(spec, p_full, mode.omega, ref_state).total;

    rep.abs_q_sq.resize(block);
    rep.abs_p_sq.resize(block);
    rep.residuals.resize(block);
    double r_max = 0.0;
    for (int k = 0; k < block; ++k) {
        rep.abs_q_sq[k] = std::norm(q_full(ref_state, k));
        rep.abs_p_sq[k] = std::norm(p_full(ref_state, k));
        const double omega_rk = spec.omegas[ref_state] - spec.omegas[k];
        rep.residuals[k] = std::abs(mode.omega * p_full(ref_state, k)
                                    - Complex(0.0, 1.0) * omega_rk * q_full(ref_state, k));
    }
    // residual max over the whole displayed block, not just the reference row
    for (int i = 0; i < block; ++i) {
        for (int j = 0; j < block; ++j) {
            const double omega_ij = spec.omegas[i] - spec.omegas[j];
            r_max = std::max(r_max, std::abs(mode.omega * p_full(i, j)
                                             - Complex(0.0, 1.0) * omega_ij * q_full(i, j)));
        }
    }
    rep.quadrature_residual_max = r_max;

    const ComplexMatrix g = generalized_trk_matrix(spec, q_full, mode.omega, block);
    rep.generalized_identity_deviation =
        (g - ComplexMatrix::Identity(block, block)).cwiseAbs().maxCoeff();
    return rep;
}

} // namespace trk
