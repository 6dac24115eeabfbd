// models.hpp — Catalogued light-matter Hamiltonians on truncated Hilbert spaces

#pragma once

#include "trk/fock.hpp"
#include "trk/linalg.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace trk {

enum class ModelKind {
    rabi_coulomb,
    jaynes_cummings,
    nonlinear_resonator,
    kerr_resonator,
    two_resonator_qubit,
    dipole_gauge_atom,
    optomech_standard,
    optomech_law,
};

const std::vector<ModelKind>& all_model_kinds();
std::string kind_name(ModelKind kind);
std::optional<ModelKind> kind_from_name(const std::string& name);

// Parameter names required by a kind, in canonical order.
const std::vector<std::string>& required_params(ModelKind kind);
// Per-bosonic-mode truncation key names, in the order of ModelDefinition::truncations.
const std::vector<std::string>& truncation_keys(ModelKind kind);

// Validated description of one catalogued Hamiltonian. All frequencies are in
// units of the model's reference frequency, hbar = 1.
struct ModelDefinition {
    ModelKind kind = ModelKind::rabi_coulomb;
    std::map<std::string, double> params;
    std::vector<int> truncations;
    int workspace_pad = 20;

    double param(const std::string& name) const;
    bool operator==(const ModelDefinition&) const = default;
};

// Catalog default parameters and truncations for a kind.
ModelDefinition default_definition(ModelKind kind);

// Quadrature pair and bare frequency of one bosonic mode, embedded in the
// model's full space.
struct ModeOps {
    std::string label;
    ComplexMatrix Q;
    ComplexMatrix P;
    double omega = 0.0;
};

struct BuiltModel {
    ComplexMatrix hamiltonian;
    HilbertSpace space;
    std::vector<ModeOps> modes;
    std::map<std::string, ComplexMatrix> extra_ops; // e.g. particle position "x"
};

// Dispatches on def.kind; throws DimensionError/NumericalError on bad input.
BuiltModel build_model(const ModelDefinition& def);

BuiltModel build_rabi_coulomb(const ModelDefinition& def);
BuiltModel build_jaynes_cummings(const ModelDefinition& def);
BuiltModel build_nonlinear_resonator(const ModelDefinition& def);
BuiltModel build_kerr_resonator(const ModelDefinition& def);
BuiltModel build_two_resonator_qubit(const ModelDefinition& def);
BuiltModel build_dipole_gauge_atom(const ModelDefinition& def);

enum class OptomechVariant { standard, law };
BuiltModel build_optomech(const ModelDefinition& def, OptomechVariant variant);

} // namespace trk
