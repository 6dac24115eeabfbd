// test_models.cpp — Model builders against analytic spectra and invariants

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trk/models.hpp"
#include "trk/sumrules.hpp"

#include <algorithm>
#include <cmath>

using namespace trk;

namespace {

std::vector<double> lowest_omegas(const ModelDefinition& def, int count)
{
    const DressedSpectrum spec = diagonalize_model(build_model(def));
    return {spec.omegas.begin(), spec.omegas.begin() + count};
}

} // namespace

TEST_CASE("every catalog default builds a Hermitian Hamiltonian with matching mode ops")
{
    for (ModelKind kind : all_model_kinds()) {
        const ModelDefinition def = default_definition(kind);
        const BuiltModel model = build_model(def);
        CHECK(is_hermitian(model.hamiltonian));
        CHECK(model.hamiltonian.rows() == model.space.total_dim());
        CHECK(!model.modes.empty());
        for (const ModeOps& mode : model.modes) {
            CHECK(is_hermitian(mode.Q));
            CHECK(is_hermitian(mode.P));
            CHECK(mode.omega > 0.0);
            CHECK(mode.Q.rows() == model.space.total_dim());
        }
    }
}

TEST_CASE("decoupled Rabi model: degenerate harmonic pairs")
{
    ModelDefinition def = default_definition(ModelKind::rabi_coulomb);
    def.params["eta"] = 0.0;
    const std::vector<double> w = lowest_omegas(def, 7);
    const std::vector<double> expected = {0, 1, 1, 2, 2, 3, 3};
    for (int k = 0; k < 7; ++k) {
        CHECK(w[k] == doctest::Approx(expected[k]).epsilon(1e-10));
    }
}

TEST_CASE("Jaynes-Cummings analytic polariton levels at resonance")
{
    ModelDefinition def = default_definition(ModelKind::jaynes_cummings);
    for (double eta : {0.1, 0.5, 0.9}) {
        def.params["eta"] = eta;
        // excitation number is conserved: levels omega_c (n -+ eta sqrt(n))
        // relative to ground, sorted by energy
        std::vector<double> expected = {0.0};
        for (int n = 1; n <= 4; ++n) {
            expected.push_back(n - eta * std::sqrt(static_cast<double>(n)));
            expected.push_back(n + eta * std::sqrt(static_cast<double>(n)));
        }
        std::sort(expected.begin(), expected.end());
        const std::vector<double> w = lowest_omegas(def, 6);
        for (int k = 0; k < 6; ++k) {
            CHECK(w[k] == doctest::Approx(expected[k]).epsilon(1e-12));
        }
    }

    // eta = 0 coincides with the decoupled Rabi spectrum
    def.params["eta"] = 0.0;
    ModelDefinition rabi = default_definition(ModelKind::rabi_coulomb);
    rabi.params["eta"] = 0.0;
    const std::vector<double> wj = lowest_omegas(def, 8);
    const std::vector<double> wr = lowest_omegas(rabi, 8);
    for (int k = 0; k < 8; ++k) {
        CHECK(wj[k] == doctest::Approx(wr[k]).epsilon(1e-9));
    }
}

TEST_CASE("Kerr resonator: Fock eigenstates with exact level formula")
{
    const ModelDefinition def = default_definition(ModelKind::kerr_resonator);
    const double chi = def.params.at("chi");
    const DressedSpectrum spec = diagonalize_model(build_model(def));
    for (int k = 0; k < 10; ++k) {
        CHECK(spec.omegas[k] == doctest::Approx(k + chi * k * (k - 1)).epsilon(1e-12));
    }
    CHECK(max_abs(spec.basis.vectors - identity(def.truncations[0])) < 1e-12);
}

TEST_CASE("nonlinear resonator at eta = 0 is harmonic")
{
    ModelDefinition def = default_definition(ModelKind::nonlinear_resonator);
    def.params["eta"] = 0.0;
    const std::vector<double> w = lowest_omegas(def, 6);
    for (int k = 0; k < 6; ++k) {
        CHECK(w[k] == doctest::Approx(static_cast<double>(k)).epsilon(1e-12));
    }
}

TEST_CASE("converter at g = 0: product spectrum")
{
    ModelDefinition def = default_definition(ModelKind::two_resonator_qubit);
    def.params["g_a"] = 0.0;
    def.params["g_b"] = 0.0;
    const double wa = def.params.at("omega_a");
    const double wb = def.params.at("omega_b");
    const double w0 = def.params.at("omega_0");

    std::vector<double> expected;
    for (int na = 0; na < def.truncations[0]; ++na) {
        for (int nb = 0; nb < def.truncations[1]; ++nb) {
            expected.push_back(na * wa + nb * wb - 0.5 * w0);
            expected.push_back(na * wa + nb * wb + 0.5 * w0);
        }
    }
    std::sort(expected.begin(), expected.end());
    const double ground = expected.front();
    const std::vector<double> w = lowest_omegas(def, 12);
    for (int k = 0; k < 12; ++k) {
        CHECK(w[k] == doctest::Approx(expected[k] - ground).epsilon(1e-10));
    }
}

TEST_CASE("dipole-gauge atom decouples at q = 0")
{
    ModelDefinition def = default_definition(ModelKind::dipole_gauge_atom);
    def.params["charge"] = 0.0;
    const std::vector<double> w = lowest_omegas(def, 4);
    // two independent unit-frequency oscillators
    CHECK(w[1] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(w[2] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(w[3] == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("optomech variants coincide at g = 0")
{
    ModelDefinition def = default_definition(ModelKind::optomech_standard);
    def.params["g"] = 0.0;
    ModelDefinition law = def;
    law.kind = ModelKind::optomech_law;
    const std::vector<double> ws = lowest_omegas(def, 8);
    const std::vector<double> wl = lowest_omegas(law, 8);
    const double wc = def.params.at("omega_c");
    const double wm = def.params.at("omega_mech");
    for (int k = 0; k < 8; ++k) {
        CHECK(ws[k] == doctest::Approx(wl[k]).epsilon(1e-10));
    }
    CHECK(ws[1] == doctest::Approx(wc).epsilon(1e-10));
    CHECK(ws[2] == doctest::Approx(wm).epsilon(1e-10));
}

TEST_CASE("padded operator functions: Pythagorean identity survives projection")
{
    const int n = 60;
    const int pad = 20;
    for (double eta : {0.5, 2.0}) {
        const ComplexMatrix a = annihilation(n + pad);
        const ComplexMatrix arg = 2.0 * eta * (a + a.adjoint().eval());
        const ComplexMatrix c = hermitian_function(arg, MatrixFunction::cosine);
        const ComplexMatrix s = hermitian_function(arg, MatrixFunction::sine);
        const HilbertSpace padded = make_space({n + pad});
        const ComplexMatrix kept = project(c * c + s * s, padded, {n});
        CHECK(max_abs(kept - identity(n)) < 1e-10);
    }
}

TEST_CASE("truncation convergence on cheap kinds")
{
    for (ModelKind kind : {ModelKind::kerr_resonator, ModelKind::nonlinear_resonator}) {
        ModelDefinition d1 = default_definition(kind);
        ModelDefinition d2 = d1;
        for (int& n : d2.truncations) {
            n += 10;
        }
        const std::vector<double> w1 = lowest_omegas(d1, 10);
        const std::vector<double> w2 = lowest_omegas(d2, 10);
        for (int k = 1; k < 10; ++k) {
            CHECK(std::abs(w1[k] - w2[k]) / (1.0 + std::abs(w2[k])) < 1e-8);
        }
    }
}

TEST_CASE("kind names and parameter tables")
{
    CHECK(kind_name(ModelKind::rabi_coulomb) == "rabi_coulomb");
    CHECK(kind_from_name("optomech_law") == ModelKind::optomech_law);
    CHECK(!kind_from_name("rabi").has_value());
    CHECK(required_params(ModelKind::kerr_resonator) == std::vector<std::string>{"omega_c", "chi"});
    CHECK(truncation_keys(ModelKind::two_resonator_qubit)
          == std::vector<std::string>{"n_fock_a", "n_fock_b"});
}

TEST_CASE("builder error paths")
{
    ModelDefinition def = default_definition(ModelKind::rabi_coulomb);
    def.params.erase("eta");
    CHECK_THROWS_AS(build_model(def), std::invalid_argument);

    def = default_definition(ModelKind::rabi_coulomb);
    def.params["eta"] = -0.1;
    CHECK_THROWS_AS(build_model(def), std::invalid_argument);

    def = default_definition(ModelKind::rabi_coulomb);
    def.truncations = {60, 8};
    CHECK_THROWS_AS(build_model(def), std::invalid_argument);

    def = default_definition(ModelKind::optomech_law);
    def.params["omega_mech"] = -1.0;
    CHECK_THROWS_AS(build_model(def), std::invalid_argument);

    def = default_definition(ModelKind::dipole_gauge_atom);
    def.params["mass"] = 0.0;
    CHECK_THROWS_AS(build_model(def), std::invalid_argument);
}
