#include "trk/response.hpp"

#include <cmath>
#include <stdexcept>

namespace trk {

namespace {
const double kPi = 3.14159265358979323846;
const double kTwoPi = 2.0 * kPi;
} // namespace

RateTable decay_rates(const DressedSpectrum& spec, const ComplexMatrix& q_full, double alpha)
{
    if (!(alpha > 0.0)) {
        throw std::invalid_argument("decay_rates: alpha must be positive");
    }
    const int n = spec.levels();
    RateTable out;
    out.alpha = alpha;
    out.gamma = RealMatrix::Zero(n, n);
    out.gamma_total.assign(n, 0.0);
    for (int k = 1; k < n; ++k) {
        double row = 0.0;
        for (int j = 0; j < k; ++j) {
            const double omega_kj = spec.omegas[k] - spec.omegas[j];
            const double g = kTwoPi * alpha * omega_kj * std::norm(q_full(k, j));
            out.gamma(k, j) = g;
            row += g;
        }
        out.gamma_total[k] = row;
    }
    return out;
}

TransmissionCurve transmission(const DressedSpectrum& spec, const RateTable& rates,
                               const std::vector<double>& omega_grid)
{
    if (omega_grid.empty()) {
        throw std::invalid_argument("transmission: empty frequency grid");
    }
    for (std::size_t s = 1; s < omega_grid.size(); ++s) {
        if (!(omega_grid[s] > omega_grid[s - 1])) {
            throw std::invalid_argument("transmission: grid must be strictly increasing");
        }
    }
    TransmissionCurve curve;
    curve.omega_samples = omega_grid;
    curve.t_values.resize(omega_grid.size());
    const int n = spec.levels();
    for (std::size_t s = 0; s < omega_grid.size(); ++s) {
        const double omega = omega_grid[s];
        Complex acc = 0.0;
        for (int k = 1; k < n; ++k) {
            const double omega_k0 = spec.omegas[k];
            const double gamma_k0 = rates.gamma(k, 0);
            if (omega_k0 <= 0.0 || gamma_k0 <= 0.0) {
                continue;
            }
            acc += (gamma_k0 / omega_k0)
                   / Complex(omega_k0 - omega, -rates.gamma_total[k]);
        }
        curve.t_values[s] = omega * omega * std::norm(acc);
    }
    return curve;
}

std::vector<LineWeight> integrate_lines(const DressedSpectrum& spec, const RateTable& rates)
{
    std::vector<LineWeight> lines;
    const int n = spec.levels();
    for (int k = 1; k < n; ++k) {
        const double omega_k0 = spec.omegas[k];
        const double gamma_k0 = rates.gamma(k, 0);
        LineWeight lw;
        lw.level = k;
        lw.omega_k0 = omega_k0;
        lw.gamma_k0 = gamma_k0;
        lw.gamma_k = rates.gamma_total[k];
        if (gamma_k0 <= 0.0 || omega_k0 <= 0.0) {
            lines.push_back(lw);
            continue;
        }
        lw.weight_analytic = kPi * gamma_k0 * gamma_k0 / lw.gamma_k;

        // Simpson quadrature of the isolated-line term over +-20 Gamma_k.
        const double half_window = 20.0 * lw.gamma_k;
        const double lo = omega_k0 - half_window;
        const double hi = omega_k0 + half_window;
        const int intervals = 4000;
        const double h = (hi - lo) / intervals;
        const double amp = gamma_k0 / omega_k0;
        auto term = [&](double omega) {
            const double d = omega_k0 - omega;
            return omega * omega * amp * amp / (d * d + lw.gamma_k * lw.gamma_k);
        };
        double sum = term(lo) + term(hi);
        for (int s = 1; s < intervals; ++s) {
            sum += term(lo + s * h) * ((s % 2 == 1) ? 4.0 : 2.0);
        }
        lw.weight_numeric = sum * h / 3.0;
        lines.push_back(lw);
    }
    // window collision check among lines that carry weight
    for (std::size_t a = 0; a < lines.size(); ++a) {
        for (std::size_t b = a + 1; b < lines.size(); ++b) {
            if (lines[a].gamma_k0 <= 0.0 || lines[b].gamma_k0 <= 0.0) {
                continue;
            }
            const double lo_a = lines[a].omega_k0 - 20.0 * lines[a].gamma_k;
            const double hi_a = lines[a].omega_k0 + 20.0 * lines[a].gamma_k;
            const double lo_b = lines[b].omega_k0 - 20.0 * lines[b].gamma_k;
            const double hi_b = lines[b].omega_k0 + 20.0 * lines[b].gamma_k;
            if (lo_a <= hi_b && lo_b <= hi_a) {
                lines[a].window_overlap = true;
                lines[b].window_overlap = true;
            }
        }
    }
    return lines;
}

TransmissionCurve linear_response_oracle(const BuiltModel& model, int mode_index, double alpha,
                                         const std::vector<double>& omega_grid,
                                         WidthConvention convention, double beta)
{
    if (mode_index < 0 || mode_index >= static_cast<int>(model.modes.size())) {
        throw DimensionError("linear_response_oracle: mode index out of range");
    }
    if (model.space.total_dim() > 2000) {
        throw DimensionError("linear_response_oracle: model dimension "
                             + std::to_string(model.space.total_dim())
                             + " exceeds the oracle guard (2000)");
    }
    if (omega_grid.empty()) {
        throw std::invalid_argument("linear_response_oracle: empty frequency grid");
    }
    for (double omega : omega_grid) {
        if (!(omega > 0.0)) {
            throw std::invalid_argument("linear_response_oracle: grid must be positive");
        }
    }
    if (!(alpha > 0.0)) {
        throw std::invalid_argument("linear_response_oracle: alpha must be positive");
    }

    // Dressed basis and the system operator X = Q coupled to the ports.
    const DressedSpectrum spec = diagonalize_model(model);
    const ComplexMatrix x = dressed_operator(spec, model.modes[mode_index].Q);
    const int n = spec.levels();

    // g(omega) = G sqrt(omega); concrete port constants with K Phi_zpf / Lambda = 2 pi G.
    const double g_const = std::sqrt(alpha);
    const double lambda = 1.0;
    const double phi_zpf = 1.0;
    const double k_const = kTwoPi * g_const * lambda / phi_zpf;
    const double width_factor = (convention == WidthConvention::two_port) ? 2.0 : 1.0;

    // Total widths Gamma_n = sum_{k<n} 2 pi g^2(omega_{n,k}) |X_{n,k}|^2.
    std::vector<double> width(n, 0.0);
    for (int j = 1; j < n; ++j) {
        double acc = 0.0;
        for (int k = 0; k < j; ++k) {
            const double omega_jk = spec.omegas[j] - spec.omegas[k];
            acc += kTwoPi * g_const * g_const * omega_jk * std::norm(x(j, k));
        }
        width[j] = width_factor * acc;
    }

    TransmissionCurve curve;
    curve.omega_samples = omega_grid;
    curve.t_values.resize(omega_grid.size());
    for (std::size_t s = 0; s < omega_grid.size(); ++s) {
        const double omega = omega_grid[s];
        const double g_drive = g_const * std::sqrt(omega);
        // <V_out> = i K Phi_zpf omega sum_j X_{0j} rho_{j0}
        Complex v_out = 0.0;
        for (int j = 1; j < n; ++j) {
            const double omega_j0 = spec.omegas[j];
            if (omega_j0 <= 0.0) {
                continue;
            }
            const Complex rho_j0 = Complex(0.0, 1.0) * g_drive * beta * x(j, 0)
                                   / Complex(omega - omega_j0, width[j]);
            v_out += x(0, j) * rho_j0;
        }
        v_out *= Complex(0.0, 1.0) * k_const * phi_zpf * omega;
        // <V_in> = -i Lambda sqrt(omega) beta
        const Complex v_in = Complex(0.0, -1.0) * lambda * std::sqrt(omega) * beta;
        curve.t_values[s] = std::norm(v_out / v_in);
    }
    return curve;
}

} // namespace trk
