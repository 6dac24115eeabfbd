// sumrule.cpp — CLI: sum-rule reports, parameter sweeps, transmission spectra

#include "trk/modelspec.hpp"
#include "trk/models.hpp"
#include "trk/response.hpp"
#include "trk/sumrules.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

// Fixed 12-significant-digit formatting so identical inputs give byte-identical
// output regardless of locale or stream state.
std::string fmt(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw trk::ValidationError("cannot open model file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text)
{
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw trk::ValidationError("cannot open output file '" + path + "'");
    }
    out << text;
}

trk::ModelFile load_model_file(const std::string& path)
{
    return trk::validate_file(trk::parse_model_file(read_file(path)));
}

int resolve_jobs(int flag_value)
{
    if (flag_value > 0) {
        return flag_value;
    }
    if (const char* env = std::getenv("SUMRULE_JOBS")) {
        const int n = std::atoi(env);
        if (n > 0) {
            return n;
        }
    }
    return 1;
}

struct ReportOptions {
    std::string model_path;
    std::string out = "-";
    std::string format = "csv";
    int levels = 15;
    int mode = 0;
    int ref = 0;
};

void check_mode_and_levels(const trk::BuiltModel& model, int mode, int levels)
{
    if (mode < 0 || mode >= static_cast<int>(model.modes.size())) {
        throw trk::ValidationError("mode index " + std::to_string(mode)
                                   + " out of range (model has "
                                   + std::to_string(model.modes.size()) + " mode(s))");
    }
    if (levels < 1 || levels > model.space.total_dim()) {
        throw trk::ValidationError("levels must be in [1, " + std::to_string(model.space.total_dim())
                                   + "]");
    }
}

int cmd_report(const ReportOptions& opt)
{
    const trk::ModelFile file = load_model_file(opt.model_path);
    const trk::BuiltModel model = trk::build_model(file.definition);
    check_mode_and_levels(model, opt.mode, opt.levels);
    if (opt.ref < 0 || opt.ref >= opt.levels) {
        throw trk::ValidationError("reference state must be in [0, levels)");
    }
    const trk::DressedSpectrum spec = trk::diagonalize_model(model);
    const trk::SumRuleReport report = trk::make_report(model, spec, opt.mode, opt.ref, opt.levels);

    std::ostringstream out;
    if (opt.format == "json") {
        nlohmann::json j;
        j["model"] = trk::kind_name(file.definition.kind);
        j["mode"] = report.mode_label;
        j["reference_state"] = report.reference_state;
        j["omega"] = std::vector<double>(spec.omegas.begin(), spec.omegas.begin() + opt.levels);
        j["F"] = report.f_terms;
        j["partial_sums"] = report.partial_sums;
        j["total"] = report.total;
        j["momentum_total"] = report.momentum_total;
        j["quadrature_residual_max"] = report.quadrature_residual_max;
        j["generalized_identity_deviation"] = report.generalized_identity_deviation;
        j["abs_Q_sq"] = report.abs_q_sq;
        j["abs_P_sq"] = report.abs_p_sq;
        j["residuals"] = report.residuals;
        out << j.dump(2) << "\n";
    } else {
        out << "k,omega_k,abs_Q_ik_sq,abs_P_ik_sq,F_ik,partial_sum,quad_residual\n";
        for (int k = 0; k < opt.levels; ++k) {
            out << k << ',' << fmt(spec.omegas[k]) << ',' << fmt(report.abs_q_sq[k]) << ','
                << fmt(report.abs_p_sq[k]) << ',' << fmt(report.f_terms[k]) << ','
                << fmt(report.partial_sums[k]) << ',' << fmt(report.residuals[k]) << "\n";
        }
    }
    write_output(opt.out, out.str());
    return 0;
}

struct SweepOptions {
    std::string model_path;
    std::string out = "-";
    int levels = 6;
    int mode = 0;
    int jobs = 0;
};

int cmd_sweep(const SweepOptions& opt)
{
    const trk::ModelFile file = load_model_file(opt.model_path);
    if (!file.sweep) {
        throw trk::ValidationError("model file has no [sweep] section");
    }
    const trk::SweepSpec& sweep = *file.sweep;
    const int points = sweep.point_count();
    std::vector<std::string> rows(points);

    std::atomic<int> next{0};
    std::atomic<bool> numerical_failure{false};
    std::string failure_message;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (int idx = next.fetch_add(1); idx < points; idx = next.fetch_add(1)) {
            if (numerical_failure.load()) {
                return;
            }
            try {
                trk::ModelDefinition def = file.definition;
                def.params[sweep.param] = sweep.value_at(idx);
                const trk::BuiltModel model = trk::build_model(def);
                check_mode_and_levels(model, opt.mode, opt.levels);
                const trk::DressedSpectrum spec = trk::diagonalize_model(model);
                const trk::SumRuleReport report =
                    trk::make_report(model, spec, opt.mode, 0, opt.levels);
                const double omega_m = model.modes[opt.mode].omega;
                const double w10 = spec.omegas[1];
                std::ostringstream row;
                row << fmt(sweep.value_at(idx));
                for (int k = 1; k < opt.levels; ++k) {
                    row << ',' << fmt(spec.omegas[k]);
                }
                row << ',' << fmt(report.abs_q_sq[1]) << ',' << fmt(report.abs_p_sq[1]) << ','
                    << fmt(w10 * w10 / (omega_m * omega_m) * report.abs_q_sq[1]) << ','
                    << fmt(report.total);
                rows[idx] = row.str();
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                failure_message = e.what();
                numerical_failure.store(true);
                return;
            }
        }
    };

    const int jobs = std::min(resolve_jobs(opt.jobs), points);
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) {
            pool.emplace_back(worker);
        }
        for (std::thread& t : pool) {
            t.join();
        }
    }
    if (numerical_failure.load()) {
        throw trk::NumericalError("sweep point failed: " + failure_message);
    }

    std::ostringstream out;
    out << sweep.param;
    for (int k = 1; k < opt.levels; ++k) {
        out << ",omega_" << k;
    }
    out << ",abs_Q10_sq,abs_P10_sq,scaled_Q10_sq,sum_total\n";
    for (const std::string& row : rows) {
        out << row << "\n";
    }
    write_output(opt.out, out.str());
    return 0;
}

struct TransmissionOptions {
    std::string model_path;
    std::string out = "-";
    std::string lines_out;
    int mode = 0;
    bool oracle = false;
};

int cmd_transmission(const TransmissionOptions& opt)
{
    const trk::ModelFile file = load_model_file(opt.model_path);
    if (!file.response) {
        throw trk::ValidationError("model file has no [response] section");
    }
    const trk::ResponseSpec& resp = *file.response;
    const trk::BuiltModel model = trk::build_model(file.definition);
    check_mode_and_levels(model, opt.mode, 1);
    const trk::DressedSpectrum spec = trk::diagonalize_model(model);
    const trk::ComplexMatrix q_full = trk::dressed_operator(spec, model.modes[opt.mode].Q);
    const trk::RateTable rates = trk::decay_rates(spec, q_full, resp.alpha);
    const std::vector<double> grid = resp.grid();
    const trk::TransmissionCurve curve = trk::transmission(spec, rates, grid);
    trk::TransmissionCurve oracle_curve;
    if (opt.oracle) {
        oracle_curve = trk::linear_response_oracle(model, opt.mode, resp.alpha, grid);
    }

    std::ostringstream out;
    out << (opt.oracle ? "omega,T,T_oracle\n" : "omega,T\n");
    for (std::size_t s = 0; s < grid.size(); ++s) {
        out << fmt(grid[s]) << ',' << fmt(curve.t_values[s]);
        if (opt.oracle) {
            out << ',' << fmt(oracle_curve.t_values[s]);
        }
        out << "\n";
    }
    write_output(opt.out, out.str());

    std::string lines_path = opt.lines_out;
    if (lines_path.empty()) {
        lines_path = (opt.out == "-") ? "" : opt.out + ".lines.csv";
    }
    if (!lines_path.empty()) {
        std::ostringstream lines;
        lines << "k,omega_k0,Gamma_k0,Gamma_k,weight_analytic,weight_numeric\n";
        for (const trk::LineWeight& lw : trk::integrate_lines(spec, rates)) {
            lines << lw.level << ',' << fmt(lw.omega_k0) << ',' << fmt(lw.gamma_k0) << ','
                  << fmt(lw.gamma_k) << ',' << fmt(lw.weight_analytic) << ','
                  << fmt(lw.weight_numeric) << "\n";
        }
        write_output(lines_path, lines.str());
    }
    return 0;
}

struct SpectrumOptions {
    std::string model_path;
    std::string out = "-";
    int levels = 15;
};

int cmd_spectrum(const SpectrumOptions& opt)
{
    const trk::ModelFile file = load_model_file(opt.model_path);
    const trk::BuiltModel model = trk::build_model(file.definition);
    if (opt.levels < 1 || opt.levels > model.space.total_dim()) {
        throw trk::ValidationError("levels must be in [1, " + std::to_string(model.space.total_dim())
                                   + "]");
    }
    const trk::DressedSpectrum spec = trk::diagonalize_model(model);
    std::ostringstream out;
    out << "k,omega_k\n";
    for (int k = 0; k < opt.levels; ++k) {
        out << k << ',' << fmt(spec.omegas[k]) << "\n";
    }
    write_output(opt.out, out.str());
    return 0;
}

template <typename Fn>
int guarded(Fn&& fn)
{
    try {
        return fn();
    } catch (const trk::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const trk::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Dressed-state sum rules, spectra, and transmission for "
                 "catalogued light-matter models"};
    app.require_subcommand(1);

    ReportOptions report;
    CLI::App* rep = app.add_subcommand("report", "Oscillator strengths and sum-rule report");
    rep->add_option("model_file", report.model_path, "Model definition file")->required();
    rep->add_option("--levels", report.levels, "Displayed levels K (default 15)");
    rep->add_option("--mode", report.mode, "Bosonic mode index (default 0)");
    rep->add_option("--ref", report.ref, "Reference state i (default 0)");
    rep->add_option("--out", report.out, "Output path, '-' for stdout");
    rep->add_option("--format", report.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    SweepOptions sweep;
    CLI::App* sw = app.add_subcommand("sweep", "Parameter sweep from the [sweep] section");
    sw->add_option("model_file", sweep.model_path, "Model definition file")->required();
    sw->add_option("--levels", sweep.levels, "Levels per row (default 6)");
    sw->add_option("--mode", sweep.mode, "Bosonic mode index (default 0)");
    sw->add_option("--jobs", sweep.jobs, "Worker threads (default SUMRULE_JOBS or 1)");
    sw->add_option("--out", sweep.out, "Output path, '-' for stdout");

    TransmissionOptions trans;
    CLI::App* tr = app.add_subcommand("transmission",
                                      "Two-port transmission from the [response] section");
    tr->add_option("model_file", trans.model_path, "Model definition file")->required();
    tr->add_option("--mode", trans.mode, "Bosonic mode index (default 0)");
    tr->add_flag("--oracle", trans.oracle, "Add the linear-response cross-check column");
    tr->add_option("--out", trans.out, "Output path, '-' for stdout");
    tr->add_option("--lines", trans.lines_out,
                   "Line-weight CSV path (default <out>.lines.csv, omitted for stdout)");

    SpectrumOptions spectrum;
    CLI::App* sp = app.add_subcommand("spectrum", "Eigenfrequencies relative to ground");
    sp->add_option("model_file", spectrum.model_path, "Model definition file")->required();
    sp->add_option("--levels", spectrum.levels, "Displayed levels (default 15)");
    sp->add_option("--out", spectrum.out, "Output path, '-' for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitValidation;
    }

    if (rep->parsed()) {
        return guarded([&] { return cmd_report(report); });
    }
    if (sw->parsed()) {
        return guarded([&] { return cmd_sweep(sweep); });
    }
    if (tr->parsed()) {
        return guarded([&] { return cmd_transmission(trans); });
    }
    return guarded([&] { return cmd_spectrum(spectrum); });
}
