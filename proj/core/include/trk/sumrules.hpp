// sumrules.hpp — Dressed-state matrix elements, quadrature relation, TRK sums

#pragma once

#include "trk/linalg.hpp"
#include "trk/models.hpp"

#include <string>
#include <vector>

namespace trk {

// Eigenfrequencies relative to the ground state plus the eigenvector basis of
// the total Hamiltonian. omegas[0] = 0 by construction.
struct DressedSpectrum {
    std::vector<double> omegas;
    EigenSystem basis;
    double ground_energy = 0.0;

    int levels() const { return static_cast<int>(omegas.size()); }
};

DressedSpectrum diagonalize_model(const BuiltModel& model);

// O_ij = <psi_i|O|psi_j> over the lowest `keep` dressed states.
struct MatrixElementTable {
    std::string operator_label;
    ComplexMatrix elements;
};

MatrixElementTable matrix_elements(const DressedSpectrum& spec, const ComplexMatrix& op,
                                   int keep, const std::string& label = "");

// V^dag O V over all levels; the intermediate-state sums below need the full set.
ComplexMatrix dressed_operator(const DressedSpectrum& spec, const ComplexMatrix& op);

// R_ij = |omega_m P_ij - i (omega_i - omega_j) Q_ij|
RealMatrix quadrature_relation_residual(const DressedSpectrum& spec,
                                        const MatrixElementTable& q_table,
                                        const MatrixElementTable& p_table, double omega_m);

// F_{i,k} = 2 (omega_k - omega_i)/omega_m |Q_ik|^2, one entry per level k.
// q_full must cover all levels (see dressed_operator).
std::vector<double> oscillator_strengths(const DressedSpectrum& spec, const ComplexMatrix& q_full,
                                         double omega_m, int ref_state);

std::vector<double> partial_sums(const std::vector<double>& f_terms);

// G_ij = sum_k (omega_{k,i} + omega_{k,j})/omega_m Q_ik Q_kj over all levels k,
// restricted to the lowest `block` levels. Equals the identity when the sum
// saturates.
ComplexMatrix generalized_trk_matrix(const DressedSpectrum& spec, const ComplexMatrix& q_full,
                                     double omega_m, int block);

// 2 omega_m sum_k |P_ik|^2 / omega_{k,i}. Zero-frequency transitions with a
// nonzero matrix element are surfaced as diagnostics, not divided by.
struct MomentumSumResult {
    double total = 0.0;
    std::vector<int> degenerate_violations; // levels k with omega_{k,i}=0 and |P_ik|>1e-10
};

MomentumSumResult momentum_sum_rule(const DressedSpectrum& spec, const ComplexMatrix& p_full,
                                    double omega_m, int ref_state);

// 2 m sum_k omega_{k,j} |x_{k,j}|^2 from reference state j.
double atomic_trk(const DressedSpectrum& spec, const ComplexMatrix& x_full, double mass,
                  int ref_state = 0);

// Per-mode oscillator strengths, partial sums, residuals; the CLI serializes this.
struct SumRuleReport {
    std::string mode_label;
    int reference_state = 0;
    std::vector<double> f_terms;      // one per level
    std::vector<double> partial_sums; // cumulative
    double total = 0.0;               // = partial_sums.back()
    double momentum_total = 0.0;
    double quadrature_residual_max = 0.0;      // over the displayed block
    double generalized_identity_deviation = 0.0; // max|G - I| over the displayed block
    std::vector<double> abs_q_sq; // |Q_{i,k}|^2 per level, displayed block
    std::vector<double> abs_p_sq;
    std::vector<double> residuals; // R_{i,k} per level, displayed block
};

SumRuleReport make_report(const BuiltModel& model, const DressedSpectrum& spec, int mode_index,
                          int ref_state, int display_levels);

} // namespace trk
