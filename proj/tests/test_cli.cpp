// test_cli.cpp — End-to-end checks of the sumrule binary

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#ifndef SUMRULE_BIN
#error "SUMRULE_BIN must point at the CLI binary"
#endif
#ifndef CONFIG_DIR
#error "CONFIG_DIR must point at the canonical model files"
#endif

namespace {

namespace fs = std::filesystem;

const fs::path kTmp = fs::path("cli_tmp");

int run(const std::string& args)
{
    const std::string cmd = std::string(SUMRULE_BIN) + " " + args + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    if (status < 0) {
        return -1;
    }
    return (status >> 8) & 0xFF; // POSIX wait status to exit code
}

std::string slurp(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spit(const fs::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    out << text;
}

struct Csv {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

Csv parse_csv(const std::string& text)
{
    Csv csv;
    std::istringstream in(text);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        std::istringstream cells(line);
        std::string cell;
        if (first) {
            while (std::getline(cells, cell, ',')) {
                csv.header.push_back(cell);
            }
            first = false;
            continue;
        }
        std::vector<double> row;
        while (std::getline(cells, cell, ',')) {
            row.push_back(std::strtod(cell.c_str(), nullptr));
        }
        csv.rows.push_back(row);
    }
    return csv;
}

std::string config(const std::string& name)
{
    return (fs::path(CONFIG_DIR) / name).string();
}

struct TmpDir {
    TmpDir() { fs::create_directories(kTmp); }
} tmp_dir;

} // namespace

TEST_CASE("report on the harmonic model saturates the partial sum")
{
    const fs::path out = kTmp / "harmonic_report.csv";
    REQUIRE(run("report " + config("harmonic.model") + " --levels 10 --out " + out.string())
            == 0);
    const Csv csv = parse_csv(slurp(out));
    REQUIRE(csv.header
            == std::vector<std::string>{"k", "omega_k", "abs_Q_ik_sq", "abs_P_ik_sq", "F_ik",
                                        "partial_sum", "quad_residual"});
    REQUIRE(csv.rows.size() == 10);
    CHECK(std::abs(csv.rows.back()[5] - 1.0) < 1e-9);
    CHECK(csv.rows[1][4] == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("byte-identical reruns and stdout streaming")
{
    const fs::path out1 = kTmp / "det1.csv";
    const fs::path out2 = kTmp / "det2.csv";
    REQUIRE(run("report " + config("rabi_coulomb.model") + " --out " + out1.string()) == 0);
    REQUIRE(run("report " + config("rabi_coulomb.model") + " --out " + out2.string()) == 0);
    CHECK(slurp(out1) == slurp(out2));

    const fs::path out3 = kTmp / "det3.csv";
    REQUIRE(std::system((std::string(SUMRULE_BIN) + " report " + config("rabi_coulomb.model")
                         + " --out - > " + out3.string() + " 2>/dev/null")
                            .c_str())
            == 0);
    CHECK(slurp(out1) == slurp(out3));
}

TEST_CASE("validation failures exit with code 2 and write nothing")
{
    const fs::path out = kTmp / "never_written.csv";
    fs::remove(out);
    CHECK(run("report " + (kTmp / "no_such_file.model").string() + " --out " + out.string())
          == 2);
    CHECK_FALSE(fs::exists(out));

    const fs::path bad = kTmp / "bad.model";
    spit(bad, "[model]\nkind = rabi\n[truncation]\nn_fock = 60\n");
    CHECK(run("report " + bad.string() + " --out " + out.string()) == 2);
    CHECK_FALSE(fs::exists(out));

    const fs::path dup = kTmp / "dup.model";
    spit(dup, "[model]\nkind = kerr_resonator\nomega_c = 1\nchi = 0.1\nchi = 0.2\n"
              "[truncation]\nn_fock = 30\n");
    CHECK(run("report " + dup.string()) == 2);

    CHECK(run("report " + config("rabi_coulomb.model") + " --levels 0") == 2);
    CHECK(run("report " + config("rabi_coulomb.model") + " --mode 5") == 2);
    CHECK(run("sweep " + config("rabi_coulomb.model")) == 2); // no [sweep] section
    CHECK(run("transmission " + config("rabi_coulomb.model")) == 2);
    CHECK(run("report") == 2);            // missing positional
    CHECK(run("frobnicate x.model") == 2); // unknown subcommand
}

TEST_CASE("deep-strong-coupling report concentrates weight on level 3")
{
    const fs::path model = kTmp / "rabi_dsc.model";
    spit(model, "[model]\nkind = rabi_coulomb\nomega_c = 1.0\nomega_0 = 1.0\neta = 1.8\n"
                "[truncation]\nn_fock = 60\n");
    const fs::path out = kTmp / "rabi_dsc.csv";
    REQUIRE(run("report " + model.string() + " --levels 10 --out " + out.string()) == 0);
    const Csv csv = parse_csv(slurp(out));
    int argmax = 0;
    for (std::size_t k = 1; k < csv.rows.size(); ++k) {
        if (csv.rows[k][4] > csv.rows[argmax][4]) {
            argmax = static_cast<int>(k);
        }
    }
    CHECK(argmax == 3);
    CHECK(csv.rows[3][4] > 0.8);
}

TEST_CASE("sweep: constant JC matrix element, parallel runs byte-identical")
{
    const fs::path model = kTmp / "jc_sweep.model";
    spit(model, "[model]\nkind = jaynes_cummings\nomega_c = 1.0\nomega_0 = 1.0\neta = 0.5\n"
                "[truncation]\nn_fock = 40\n"
                "[sweep]\nparam = eta\nstart = 0.1\nstop = 1.0\nstep = 0.1\n");
    const fs::path out1 = kTmp / "jc_sweep1.csv";
    const fs::path out2 = kTmp / "jc_sweep2.csv";
    REQUIRE(run("sweep " + model.string() + " --levels 4 --jobs 1 --out " + out1.string()) == 0);
    REQUIRE(run("sweep " + model.string() + " --levels 4 --jobs 3 --out " + out2.string()) == 0);
    CHECK(slurp(out1) == slurp(out2));

    const Csv csv = parse_csv(slurp(out1));
    REQUIRE(csv.header.size() == 8);
    CHECK(csv.header[0] == "eta");
    CHECK(csv.header[4] == "abs_Q10_sq");
    REQUIRE(csv.rows.size() == 10);
    for (const std::vector<double>& row : csv.rows) {
        CHECK(std::abs(row[4] - 0.25) < 1e-10);
    }
    CHECK(csv.rows[0][0] == doctest::Approx(0.1));
    CHECK(csv.rows[9][0] == doctest::Approx(1.0));
}

TEST_CASE("sweep honours the SUMRULE_JOBS fallback")
{
    const fs::path model = kTmp / "jc_sweep.model"; // written by the previous case
    const fs::path out = kTmp / "jc_sweep_env.csv";
    const std::string cmd = std::string("SUMRULE_JOBS=2 ") + SUMRULE_BIN + " sweep "
                            + model.string() + " --levels 4 --out " + out.string()
                            + " 2>/dev/null";
    REQUIRE(std::system(cmd.c_str()) == 0);
    CHECK(slurp(out) == slurp(kTmp / "jc_sweep1.csv"));
}

TEST_CASE("transmission with oracle column and line weights")
{
    const fs::path out = kTmp / "harmonic_t.csv";
    REQUIRE(run("transmission " + config("harmonic.model") + " --oracle --out " + out.string())
            == 0);
    const Csv csv = parse_csv(slurp(out));
    REQUIRE(csv.header == std::vector<std::string>{"omega", "T", "T_oracle"});
    double peak = 0.0;
    double peak_omega = 0.0;
    for (const std::vector<double>& row : csv.rows) {
        CHECK(std::abs(row[1] - row[2]) < 1e-10);
        if (row[1] > peak) {
            peak = row[1];
            peak_omega = row[0];
        }
    }
    CHECK(peak == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(peak_omega == doctest::Approx(1.0).epsilon(1e-12));

    const Csv lines = parse_csv(slurp(kTmp / "harmonic_t.csv.lines.csv"));
    REQUIRE(lines.header
            == std::vector<std::string>{"k", "omega_k0", "Gamma_k0", "Gamma_k",
                                        "weight_analytic", "weight_numeric"});
    bool found_line = false;
    for (const std::vector<double>& row : lines.rows) {
        if (row[2] > 1e-12) {
            CHECK(row[0] == doctest::Approx(1.0));
            CHECK(row[5] / row[4] > 0.9);
            CHECK(row[5] / row[4] < 1.1);
            found_line = true;
        }
    }
    CHECK(found_line);
}

TEST_CASE("spectrum output matches the Kerr level formula")
{
    const fs::path out = kTmp / "kerr_spec.csv";
    REQUIRE(run("spectrum " + config("kerr_resonator.model") + " --levels 8 --out "
                + out.string())
            == 0);
    const Csv csv = parse_csv(slurp(out));
    REQUIRE(csv.rows.size() == 8);
    for (int k = 0; k < 8; ++k) {
        CHECK(csv.rows[k][1] == doctest::Approx(k + 0.1 * k * (k - 1)).epsilon(1e-9));
    }
}

TEST_CASE("json report is well formed")
{
    const fs::path out = kTmp / "report.json";
    REQUIRE(run("report " + config("jaynes_cummings.model") + " --levels 5 --format json --out "
                + out.string())
            == 0);
    const nlohmann::json j = nlohmann::json::parse(slurp(out));
    CHECK(j["model"] == "jaynes_cummings");
    CHECK(j["reference_state"] == 0);
    CHECK(j["F"].size() == 120); // all levels, not just the displayed block
    CHECK(std::abs(j["abs_Q_sq"][1].get<double>() - 0.25) < 1e-10);
    CHECK(std::abs(j["residuals"][1].get<double>() - 0.25) < 1e-10);
}
