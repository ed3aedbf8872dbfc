// framequant_cli.cpp — Batch front door: identity-suite reports and
// phase-space data exports.
//
//   framequant check     [--d N] [--n-fock N] [--grid L,h] [--seed N]
//                        [--tol name=val]... [--out PATH]
//   framequant wigner    --state vacuum|fock:n|coherent:re,im [--grid L,h] [--out PATH]
//   framequant quasi     --state ... --s re,im [--n-fock N] [--grid L,h] [--out PATH]
//   framequant star-demo [--d N] [--seed N] [--out PATH]
//
// Exit codes: 0 all good, 1 failed check, 2 configuration error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "framequant/framequant.hpp"

using namespace framequant;
using nlohmann::json;

namespace {

struct CliError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::pair<double, double> parse_pair(const std::string& text, const char* what) {
    std::istringstream in(text);
    double a = 0.0, b = 0.0;
    char comma = 0;
    if (!(in >> a >> comma >> b) || comma != ',') {
        throw CliError(std::string("invalid ") + what + " '" + text + "' (expected re,im or L,h)");
    }
    return {a, b};
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_output(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw CliError("cannot open output file '" + out_path + "'");
    out << payload;
}

// state spec: vacuum | fock:n | coherent:re,im
fock::SampledWavefunction parse_state(const std::string& spec, double half_extent, double dx) {
    if (spec == "vacuum") return fock::sample_fock_state(0, half_extent, dx);
    if (spec.rfind("fock:", 0) == 0) {
        const long n = std::strtol(spec.c_str() + 5, nullptr, 10);
        if (n < 0 || n > 200) throw CliError("fock level out of range in '" + spec + "'");
        return fock::sample_fock_state(n, half_extent, dx);
    }
    if (spec.rfind("coherent:", 0) == 0) {
        auto [re, im] = parse_pair(spec.substr(9), "coherent label");
        return fock::sample_coherent(Complex(re, im), half_extent, dx);
    }
    throw CliError("unknown state '" + spec + "' (expected vacuum, fock:n or coherent:re,im)");
}

Operator parse_state_operator(const std::string& spec, Eigen::Index n_fock) {
    if (spec == "vacuum") {
        Vector v = fock::fock_state(n_fock, 0);
        return ops::rank_one(v, v);
    }
    if (spec.rfind("fock:", 0) == 0) {
        const long n = std::strtol(spec.c_str() + 5, nullptr, 10);
        if (n < 0 || n >= n_fock) throw CliError("fock level out of range in '" + spec + "'");
        Vector v = fock::fock_state(n_fock, n);
        return ops::rank_one(v, v);
    }
    if (spec.rfind("coherent:", 0) == 0) {
        auto [re, im] = parse_pair(spec.substr(9), "coherent label");
        fock::DisplacementEngine engine(n_fock);
        Vector v = fock::coherent_state(engine, Complex(re, im));
        return ops::rank_one(v, v);
    }
    throw CliError("unknown state '" + spec + "' (expected vacuum, fock:n or coherent:re,im)");
}

json config_json(const checks::SuiteConfig& cfg) {
    json tols = json::object();
    for (const auto& [name, tol] : cfg.tolerance_overrides) tols[name] = tol;
    return json{{"d", cfg.d},
                {"n_fock", cfg.n_fock},
                {"grid", {{"half_extent", cfg.grid_half_extent}, {"spacing", cfg.grid_spacing}}},
                {"seed", cfg.seed},
                {"tolerance_overrides", tols}};
}

int run_check(const checks::SuiteConfig& cfg, const std::string& out_path) {
    std::vector<checks::CheckResult> results = checks::run_check_suite(cfg);
    bool all_pass = true;
    json items = json::array();
    for (const auto& r : results) {
        all_pass = all_pass && r.pass;
        items.push_back(json{{"name", r.name},
                             {"paper_ref", r.math_ref},
                             {"residual", r.residual},
                             {"tolerance", r.tolerance},
                             {"pass", r.pass}});
    }
    json report{{"version", checks::library_version},
                {"config", config_json(cfg)},
                {"checks", items},
                {"all_pass", all_pass}};
    write_output(out_path, report.dump(2) + "\n");
    return all_pass ? 0 : 1;
}

int run_wigner(const std::string& state, double half_extent, double spacing,
               const std::string& out_path) {
    Grid grid(half_extent, spacing);
    auto wf = parse_state(state, 2.0 * half_extent, spacing / 4.0);
    wigner::WignerFunction w = wigner::wigner_distribution(wf, grid);
    std::string csv = "q,p,value\n";
    for (Eigen::Index j = 0; j < grid.n_per_axis(); ++j)
        for (Eigen::Index k = 0; k < grid.n_per_axis(); ++k) {
            csv += format_double(grid.q(j)) + "," + format_double(grid.p(k)) + "," +
                   format_double(w.at(j, k).real()) + "\n";
        }
    write_output(out_path, csv);
    return 0;
}

int run_quasi(const std::string& state, Complex s_value, Eigen::Index n_fock, double half_extent,
              double spacing, const std::string& out_path) {
    Grid grid(half_extent, spacing);
    cg::SParameter s(s_value); // throws on s = 1
    Operator a = parse_state_operator(state, n_fock);
    cg::QuasiDistribution q = cg::quasi_distribution(a, s, grid, n_fock, state);
    std::string csv = "q,p,re,im\n";
    for (Eigen::Index idx = 0; idx < grid.size(); ++idx) {
        csv += format_double(grid.q(grid.j_of(idx))) + "," +
               format_double(grid.p(grid.k_of(idx))) + "," +
               format_double(q.values(idx).real()) + "," +
               format_double(q.values(idx).imag()) + "\n";
    }
    write_output(out_path, csv);
    return 0;
}

int run_star_demo(Eigen::Index d, std::uint64_t seed, const std::string& out_path) {
    auto rep = std::make_shared<const groups::ProjectiveRep>(groups::weyl_heisenberg_finite(d));
    hsf::OperatorFrame frame(rep, ops::rank_one(ops::basis_vector(d, 0), ops::basis_vector(d, 0)));
    rng::Engine eng(seed);
    Operator a = rng::matrix(d, eng), b = rng::matrix(d, eng);
    hsf::BiPhaseFunction da = hsf::dequantize(frame, a);
    hsf::BiPhaseFunction db = hsf::dequantize(frame, b);
    hsf::BiPhaseFunction star = hsf::star_product(frame, da, db);
    hsf::BiPhaseFunction dab = hsf::dequantize(frame, a * b);
    const double residual = norm(PhaseFunction(star.points, star.values - dab.values));
    json report{{"version", checks::library_version},
                {"d", d},
                {"seed", seed},
                {"norm_dequantized_a", norm(da)},
                {"norm_dequantized_b", norm(db)},
                {"norm_star_product", norm(star)},
                {"norm_dequantized_ab", norm(dab)},
                {"homomorphism_residual", residual}};
    write_output(out_path, report.dump(2) + "\n");
    return residual <= 1e-9 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"frame-based quantization toolkit"};
    app.require_subcommand(1);

    checks::SuiteConfig cfg;
    std::string grid_spec = "6,0.2";
    std::string s_spec = "-1,0";
    std::string state = "vacuum";
    std::string out_path;
    std::vector<std::string> tol_specs;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--grid", grid_spec, "phase-space grid as L,h");
        sub->add_option("--out", out_path, "output path (default: stdout)");
    };

    CLI::App* check = app.add_subcommand("check", "run the identity suite, emit a JSON report");
    check->add_option("--d", cfg.d, "qudit dimension (odd, >= 3)");
    check->add_option("--n-fock", cfg.n_fock, "Fock-space truncation");
    check->add_option("--seed", cfg.seed, "seed for the deterministic generators");
    check->add_option("--tol", tol_specs, "tolerance override name=value")->take_all();
    add_common(check);

    CLI::App* wig = app.add_subcommand("wigner", "export a Wigner distribution as CSV");
    wig->add_option("--state", state, "vacuum | fock:n | coherent:re,im");
    add_common(wig);

    CLI::App* quasi = app.add_subcommand("quasi", "export an s-parametrized quasi-distribution");
    quasi->add_option("--state", state, "vacuum | fock:n | coherent:re,im");
    quasi->add_option("--s", s_spec, "s parameter as re,im (s = 1 is rejected)");
    quasi->add_option("--n-fock", cfg.n_fock, "Fock-space truncation");
    add_common(quasi);

    CLI::App* star = app.add_subcommand("star-demo", "star-product homomorphism demo as JSON");
    star->add_option("--d", cfg.d, "qudit dimension (odd, >= 3)");
    star->add_option("--seed", cfg.seed, "seed for the random pair");
    star->add_option("--out", out_path, "output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        auto [l_val, h_val] = parse_pair(grid_spec, "grid");
        cfg.grid_half_extent = l_val;
        cfg.grid_spacing = h_val;
        for (const std::string& spec : tol_specs) {
            const auto eq = spec.find('=');
            if (eq == std::string::npos) throw CliError("invalid --tol '" + spec + "'");
            cfg.tolerance_overrides[spec.substr(0, eq)] = std::stod(spec.substr(eq + 1));
        }

        if (check->parsed()) {
            cfg.validate();
            return run_check(cfg, out_path);
        }
        if (wig->parsed()) {
            return run_wigner(state, cfg.grid_half_extent, cfg.grid_spacing, out_path);
        }
        if (quasi->parsed()) {
            auto [re, im] = parse_pair(s_spec, "s parameter");
            return run_quasi(state, Complex(re, im), cfg.n_fock, cfg.grid_half_extent,
                             cfg.grid_spacing, out_path);
        }
        if (star->parsed()) {
            if (cfg.d < 3 || cfg.d % 2 == 0) throw CliError("d must be odd and >= 3");
            return run_star_demo(cfg.d, cfg.seed, out_path);
        }
    } catch (const std::exception& e) {
        json err{{"error", e.what()}};
        std::cerr << err.dump() << "\n";
        return 2;
    }
    return 2;
}
