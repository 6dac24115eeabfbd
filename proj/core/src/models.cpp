#include "trk/models.hpp"

#include <cmath>
#include <stdexcept>

namespace trk {

namespace {

const double kPi = 3.14159265358979323846;

struct KindInfo {
    ModelKind kind;
    const char* name;
    std::vector<std::string> params;
    std::vector<std::string> truncations;
};

const std::vector<KindInfo>& kind_table()
{
    static const std::vector<KindInfo> table = {
        {ModelKind::rabi_coulomb, "rabi_coulomb", {"omega_c", "omega_0", "eta"}, {"n_fock"}},
        {ModelKind::jaynes_cummings, "jaynes_cummings", {"omega_c", "omega_0", "eta"}, {"n_fock"}},
        {ModelKind::nonlinear_resonator, "nonlinear_resonator", {"omega_c", "eta"}, {"n_fock"}},
        {ModelKind::kerr_resonator, "kerr_resonator", {"omega_c", "chi"}, {"n_fock"}},
        {ModelKind::two_resonator_qubit, "two_resonator_qubit",
         {"omega_a", "omega_b", "omega_0", "g_a", "g_b", "theta"}, {"n_fock_a", "n_fock_b"}},
        {ModelKind::dipole_gauge_atom, "dipole_gauge_atom",
         {"mass", "charge", "omega_0", "omega_c", "a_zpf"}, {"n_particle", "n_cavity"}},
        {ModelKind::optomech_standard, "optomech_standard",
         {"omega_c", "omega_mech", "g"}, {"n_cavity", "n_mech"}},
        {ModelKind::optomech_law, "optomech_law",
         {"omega_c", "omega_mech", "g"}, {"n_cavity", "n_mech"}},
    };
    return table;
}

const KindInfo& info(ModelKind kind)
{
    for (const KindInfo& k : kind_table()) {
        if (k.kind == kind) {
            return k;
        }
    }
    throw std::invalid_argument("unknown model kind");
}

void check_truncations(const ModelDefinition& def, std::size_t expected)
{
    if (def.truncations.size() != expected) {
        throw std::invalid_argument(kind_name(def.kind) + ": expected "
                                    + std::to_string(expected) + " truncation(s), got "
                                    + std::to_string(def.truncations.size()));
    }
    for (int n : def.truncations) {
        if (n < 2) {
            throw std::invalid_argument(kind_name(def.kind) + ": truncation "
                                        + std::to_string(n) + " < 2");
        }
    }
    if (def.workspace_pad < 0) {
        throw std::invalid_argument(kind_name(def.kind) + ": negative workspace_pad");
    }
}

void require_positive(const ModelDefinition& def, const std::string& name)
{
    if (!(def.param(name) > 0.0)) {
        throw std::invalid_argument(kind_name(def.kind) + ": parameter " + name
                                    + " must be positive");
    }
}

void require_nonnegative(const ModelDefinition& def, const std::string& name)
{
    if (!(def.param(name) >= 0.0)) {
        throw std::invalid_argument(kind_name(def.kind) + ": parameter " + name
                                    + " must be non-negative");
    }
}

ModeOps embedded_mode(const std::string& label, const HilbertSpace& space, int position,
                      double omega)
{
    const QuadraturePair qp = quadratures(space.subsystem_dims[position]);
    return ModeOps{label, embed(qp.Q, space, position), embed(qp.P, space, position), omega};
}

} // namespace

const std::vector<ModelKind>& all_model_kinds()
{
    static const std::vector<ModelKind> kinds = [] {
        std::vector<ModelKind> out;
        for (const KindInfo& k : kind_table()) {
            out.push_back(k.kind);
        }
        return out;
    }();
    return kinds;
}

std::string kind_name(ModelKind kind)
{
    return info(kind).name;
}

std::optional<ModelKind> kind_from_name(const std::string& name)
{
    for (const KindInfo& k : kind_table()) {
        if (name == k.name) {
            return k.kind;
        }
    }
    return std::nullopt;
}

const std::vector<std::string>& required_params(ModelKind kind)
{
    return info(kind).params;
}

const std::vector<std::string>& truncation_keys(ModelKind kind)
{
    return info(kind).truncations;
}

double ModelDefinition::param(const std::string& name) const
{
    const auto it = params.find(name);
    if (it == params.end()) {
        throw std::invalid_argument(kind_name(kind) + ": missing parameter " + name);
    }
    if (!std::isfinite(it->second)) {
        throw std::invalid_argument(kind_name(kind) + ": parameter " + name + " is not finite");
    }
    return it->second;
}

ModelDefinition default_definition(ModelKind kind)
{
    ModelDefinition def;
    def.kind = kind;
    switch (kind) {
    case ModelKind::rabi_coulomb:
        def.params = {{"omega_c", 1.0}, {"omega_0", 1.0}, {"eta", 0.5}};
        def.truncations = {60};
        break;
    case ModelKind::jaynes_cummings:
        def.params = {{"omega_c", 1.0}, {"omega_0", 1.0}, {"eta", 0.5}};
        def.truncations = {60};
        break;
    case ModelKind::nonlinear_resonator:
        def.params = {{"omega_c", 1.0}, {"eta", 0.12}};
        def.truncations = {50};
        break;
    case ModelKind::kerr_resonator:
        def.params = {{"omega_c", 1.0}, {"chi", 0.1}};
        def.truncations = {30};
        break;
    case ModelKind::two_resonator_qubit:
        def.params = {{"omega_a", 3.0}, {"omega_b", 2.0}, {"omega_0", 1.0},
                      {"g_a", 0.2},    {"g_b", 0.2},     {"theta", kPi / 6.0}};
        def.truncations = {8, 8};
        break;
    case ModelKind::dipole_gauge_atom:
        // a_zpf chosen so that charge*omega_c*a_zpf*x_zpf = 0.3*omega_0 at mass 1.
        def.params = {{"mass", 1.0}, {"charge", 1.0}, {"omega_0", 1.0}, {"omega_c", 1.0},
                      {"a_zpf", 0.3 * std::sqrt(2.0)}};
        def.truncations = {30, 30};
        break;
    case ModelKind::optomech_standard:
    case ModelKind::optomech_law:
        // The law-variant coupling is metastable (-g^2 X^4 / omega_mech branch);
        // omega_mech and the truncation are chosen so edge states with large
        // <X^2> stay far above the lowest levels, keeping them convergent.
        def.params = {{"omega_c", 1.0}, {"omega_mech", 2.0}, {"g", 0.05}};
        def.truncations = {20, 20};
        break;
    }
    return def;
}

BuiltModel build_model(const ModelDefinition& def)
{
    switch (def.kind) {
    case ModelKind::rabi_coulomb:
        return build_rabi_coulomb(def);
    case ModelKind::jaynes_cummings:
        return build_jaynes_cummings(def);
    case ModelKind::nonlinear_resonator:
        return build_nonlinear_resonator(def);
    case ModelKind::kerr_resonator:
        return build_kerr_resonator(def);
    case ModelKind::two_resonator_qubit:
        return build_two_resonator_qubit(def);
    case ModelKind::dipole_gauge_atom:
        return build_dipole_gauge_atom(def);
    case ModelKind::optomech_standard:
        return build_optomech(def, OptomechVariant::standard);
    case ModelKind::optomech_law:
        return build_optomech(def, OptomechVariant::law);
    }
    throw std::invalid_argument("build_model: unknown kind");
}

BuiltModel build_rabi_coulomb(const ModelDefinition& def)
{
    check_truncations(def, 1);
    require_positive(def, "omega_c");
    require_positive(def, "omega_0");
    require_nonnegative(def, "eta");
    const double wc = def.param("omega_c");
    const double w0 = def.param("omega_0");
    const double eta = def.param("eta");
    const int n = def.truncations[0];
    const int n_work = n + def.workspace_pad;

    // Operator cosine/sine evaluated in the padded photon space, then the full
    // Hamiltonian is projected back to the kept truncation.
    const ComplexMatrix a = annihilation(n_work);
    const ComplexMatrix arg = 2.0 * eta * (a + a.adjoint());
    const ComplexMatrix cos_m = hermitian_function(arg, MatrixFunction::cosine);
    const ComplexMatrix sin_m = hermitian_function(arg, MatrixFunction::sine);

    const HilbertSpace padded = make_space({n_work, 2});
    ComplexMatrix h = wc * kron(number_operator(n_work), identity(2))
                      + 0.5 * w0 * (kron(cos_m, pauli(Pauli::z)) + kron(sin_m, pauli(Pauli::y)));

    BuiltModel model;
    model.space = make_space({n, 2});
    model.hamiltonian = project(h, padded, {n, 2});
    model.modes.push_back(embedded_mode("a", model.space, 0, wc));
    return model;
}

BuiltModel build_jaynes_cummings(const ModelDefinition& def)
{
    check_truncations(def, 1);
    require_positive(def, "omega_c");
    require_positive(def, "omega_0");
    require_nonnegative(def, "eta");
    const double wc = def.param("omega_c");
    const double w0 = def.param("omega_0");
    const double eta = def.param("eta");
    const int n = def.truncations[0];

    const ComplexMatrix a = annihilation(n);
    BuiltModel model;
    model.space = make_space({n, 2});
    model.hamiltonian = wc * kron(number_operator(n), identity(2))
                        + 0.5 * w0 * kron(identity(n), pauli(Pauli::z))
                        + eta * wc
                              * (kron(a, pauli(Pauli::plus))
                                 + kron(a.adjoint(), pauli(Pauli::minus)));
    model.modes.push_back(embedded_mode("a", model.space, 0, wc));
    return model;
}

BuiltModel build_nonlinear_resonator(const ModelDefinition& def)
{
    check_truncations(def, 1);
    require_positive(def, "omega_c");
    require_nonnegative(def, "eta");
    const double wc = def.param("omega_c");
    const double eta = def.param("eta");
    const int n = def.truncations[0];
    const int n_work = n + def.workspace_pad;

    const ComplexMatrix a = annihilation(n_work);
    const ComplexMatrix x = a + a.adjoint();
    const ComplexMatrix x2 = x * x;
    const ComplexMatrix h = wc * number_operator(n_work) + eta * wc * x2 * x
                            + 0.1 * eta * wc * x2 * x2;

    BuiltModel model;
    model.space = make_space({n});
    model.hamiltonian = project(h, make_space({n_work}), {n});
    model.modes.push_back(embedded_mode("a", model.space, 0, wc));
    return model;
}

BuiltModel build_kerr_resonator(const ModelDefinition& def)
{
    check_truncations(def, 1);
    require_positive(def, "omega_c");
    const double wc = def.param("omega_c");
    const double chi = def.param("chi");
    const int n = def.truncations[0];

    BuiltModel model;
    model.space = make_space({n});
    ComplexMatrix h = ComplexMatrix::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        h(k, k) = wc * k + chi * static_cast<double>(k) * (k - 1);
    }
    model.hamiltonian = h;
    model.modes.push_back(embedded_mode("a", model.space, 0, wc));
    return model;
}

BuiltModel build_two_resonator_qubit(const ModelDefinition& def)
{
    check_truncations(def, 2);
    require_positive(def, "omega_a");
    require_positive(def, "omega_b");
    require_positive(def, "omega_0");
    const double wa = def.param("omega_a");
    const double wb = def.param("omega_b");
    const double w0 = def.param("omega_0");
    const double ga = def.param("g_a");
    const double gb = def.param("g_b");
    const double theta = def.param("theta");

    BuiltModel model;
    model.space = make_space({def.truncations[0], def.truncations[1], 2});
    const HilbertSpace& sp = model.space;
    const ComplexMatrix xa =
        embed(annihilation(sp.subsystem_dims[0]), sp, 0)
        + embed(annihilation(sp.subsystem_dims[0]).adjoint().eval(), sp, 0);
    const ComplexMatrix xb =
        embed(annihilation(sp.subsystem_dims[1]), sp, 1)
        + embed(annihilation(sp.subsystem_dims[1]).adjoint().eval(), sp, 1);
    model.hamiltonian = wa * embed(number_operator(sp.subsystem_dims[0]), sp, 0)
                        + wb * embed(number_operator(sp.subsystem_dims[1]), sp, 1)
                        + 0.5 * w0 * embed(pauli(Pauli::z), sp, 2)
                        + (ga * xa + gb * xb)
                              * (std::cos(theta) * embed(pauli(Pauli::x), sp, 2)
                                 + std::sin(theta) * embed(pauli(Pauli::z), sp, 2));
    model.modes.push_back(embedded_mode("a", sp, 0, wa));
    model.modes.push_back(embedded_mode("b", sp, 1, wb));
    return model;
}

BuiltModel build_dipole_gauge_atom(const ModelDefinition& def)
{
    check_truncations(def, 2);
    require_positive(def, "mass");
    require_positive(def, "omega_0");
    require_positive(def, "omega_c");
    const double m = def.param("mass");
    const double q = def.param("charge");
    const double w0 = def.param("omega_0");
    const double wc = def.param("omega_c");
    const double a0 = def.param("a_zpf");
    const int np = def.truncations[0];
    const int nc = def.truncations[1];
    const int np_work = np + def.workspace_pad;

    // Particle in its bare harmonic-oscillator number basis; the quadratic
    // terms are formed in the padded particle space and projected.
    const double x_zpf = 1.0 / std::sqrt(2.0 * m * w0);
    const double p_zpf = std::sqrt(m * w0 / 2.0);
    const ComplexMatrix b = annihilation(np_work);
    const ComplexMatrix x = x_zpf * (b + b.adjoint());
    const ComplexMatrix p = Complex(0.0, 1.0) * p_zpf * (b.adjoint() - b);

    const HilbertSpace padded = make_space({np_work, nc});
    const ComplexMatrix a_cav = annihilation(nc);
    const ComplexMatrix field = Complex(0.0, 1.0) * (a_cav.adjoint() - a_cav);
    const ComplexMatrix h_particle = p * p / (2.0 * m) + 0.5 * m * w0 * w0 * x * x
                                     + q * q * wc * a0 * a0 * x * x;
    const ComplexMatrix h = kron(h_particle, identity(nc))
                            + wc * kron(identity(np_work), number_operator(nc))
                            + q * wc * a0 * kron(x, field);

    BuiltModel model;
    model.space = make_space({np, nc});
    model.hamiltonian = project(h, padded, {np, nc});
    model.modes.push_back(embedded_mode("a", model.space, 1, wc));
    model.extra_ops["x"] = kron(x.topLeftCorner(np, np).eval(), identity(nc));
    return model;
}

BuiltModel build_optomech(const ModelDefinition& def, OptomechVariant variant)
{
    check_truncations(def, 2);
    require_positive(def, "omega_c");
    require_positive(def, "omega_mech");
    const double wc = def.param("omega_c");
    const double wm = def.param("omega_mech");
    const double g = def.param("g");
    const int nc = def.truncations[0];
    const int nm = def.truncations[1];

    BuiltModel model;
    model.space = make_space({nc, nm});
    if (variant == OptomechVariant::standard) {
        const ComplexMatrix bm = annihilation(nm);
        model.hamiltonian = wc * kron(number_operator(nc), identity(nm))
                            + wm * kron(identity(nc), number_operator(nm))
                            + g * kron(number_operator(nc), bm + bm.adjoint());
    } else {
        // The squared field term is formed in a padded cavity space.
        const int nc_work = nc + def.workspace_pad;
        const ComplexMatrix a = annihilation(nc_work);
        const ComplexMatrix xc = a + a.adjoint();
        const ComplexMatrix bm = annihilation(nm);
        const ComplexMatrix h = wc * kron(number_operator(nc_work), identity(nm))
                                + wm * kron(identity(nc_work), number_operator(nm))
                                + g * kron(xc * xc, bm + bm.adjoint());
        model.hamiltonian = project(h, make_space({nc_work, nm}), {nc, nm});
    }
    model.modes.push_back(embedded_mode("a", model.space, 0, wc));
    model.modes.push_back(embedded_mode("b", model.space, 1, wm));
    return model;
}

} // namespace trk
