// response.hpp — Radiative rates, two-port transmission, master-equation oracle

#pragma once

#include "trk/models.hpp"
#include "trk/sumrules.hpp"

#include <vector>

namespace trk {

// Gamma_{k,j} = 2 pi alpha omega_{k,j} |Q_{k,j}|^2 for k > j (ohmic coupling
// g^2(omega) = alpha omega); Gamma_k = sum_{j<k} Gamma_{k,j}.
struct RateTable {
    RealMatrix gamma;                // lower triangular, (k, j) with k > j
    std::vector<double> gamma_total; // row sums
    double alpha = 0.0;
};

RateTable decay_rates(const DressedSpectrum& spec, const ComplexMatrix& q_full, double alpha);

struct TransmissionCurve {
    std::vector<double> omega_samples;
    std::vector<double> t_values;
};

// T(omega) = omega^2 |sum_k (Gamma_{k,0}/omega_{k,0}) / (omega_{k,0} - omega - i Gamma_k)|^2
TransmissionCurve transmission(const DressedSpectrum& spec, const RateTable& rates,
                               const std::vector<double>& omega_grid);

struct LineWeight {
    int level = 0;
    double omega_k0 = 0.0;
    double gamma_k0 = 0.0;
    double gamma_k = 0.0;
    double weight_analytic = 0.0; // pi Gamma_{k,0}^2 / Gamma_k
    double weight_numeric = 0.0;  // quadrature of the isolated-line term over +-20 Gamma_k
    bool window_overlap = false;
};

std::vector<LineWeight> integrate_lines(const DressedSpectrum& spec, const RateTable& rates);

// Appendix ambiguity toggle for the width in the coherence denominator:
// eq11 uses the total width Gamma_n once (matching the transmission formula
// literally); two_port doubles it (one contribution per port).
enum class WidthConvention { eq11, two_port };

// Independent linear-response path: first-order density-matrix coherences
// rho^(1)_{n0}(omega) assembled into |<V_out>/<V_in>|^2. Cross-validates
// transmission(); the drive amplitude beta must cancel exactly.
TransmissionCurve linear_response_oracle(const BuiltModel& model, int mode_index, double alpha,
                                         const std::vector<double>& omega_grid,
                                         WidthConvention convention = WidthConvention::eq11,
                                         double beta = 1.0);

} // namespace trk
