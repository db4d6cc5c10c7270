// Command-line front end: spectra, phase-space grids, evolution with
// residual reports, Weyl transforms, star products and the identity suite.

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>

#include "cylwig/checks.hpp"
#include "cylwig/dynamics.hpp"
#include "cylwig/energy.hpp"
#include "cylwig/io.hpp"
#include "cylwig/liouville.hpp"
#include "cylwig/star.hpp"
#include "cylwig/symbol_text.hpp"
#include "cylwig/weyl.hpp"
#include "cylwig/wigner_ops.hpp"

namespace {

using namespace cylwig;

struct GlobalOptions {
    double hbar = 1.0;
    int n_max = 16;
    double inertia = 1.0;
    double amplitude = 0.0;
    int k_mode = 1;
};

PendulumModel make_model(const GlobalOptions& g) {
    if (g.amplitude == 0.0) return PendulumModel::free_rotor(g.inertia, g.hbar);
    return PendulumModel::pendulum(g.inertia, g.amplitude, g.hbar, g.k_mode);
}

WaveFunction parse_state(const std::string& spec, int n_max) {
    const auto colon = spec.find(':');
    const std::string kind = spec.substr(0, colon);
    const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (kind == "basis") {
        return WaveFunction::basis(std::stoi(rest), n_max);
    }
    if (kind == "twomode") {
        const auto comma = rest.find(',');
        if (comma == std::string::npos) throw CLI::ValidationError("--state", "twomode needs 'm,n'");
        WaveFunction psi(n_max);
        psi.set_coeff(std::stoi(rest.substr(0, comma)), 1.0 / std::sqrt(2.0));
        psi.set_coeff(std::stoi(rest.substr(comma + 1)), 1.0 / std::sqrt(2.0));
        return psi;
    }
    if (kind == "gauss") {
        double sigma = 2.0, center = 0.0;
        if (!rest.empty()) {
            const auto comma = rest.find(',');
            sigma = std::stod(rest.substr(0, comma));
            if (comma != std::string::npos) center = std::stod(rest.substr(comma + 1));
        }
        WaveFunction psi(n_max);
        for (int n = -n_max; n <= n_max; ++n) psi.set_coeff(n, std::exp(-std::pow((n - center) / sigma, 2)));
        return psi.normalized();
    }
    if (kind == "file") {
        std::ifstream in(rest);
        if (!in) throw CLI::ValidationError("--state", "cannot open " + rest);
        nlohmann::json j;
        in >> j;
        return wave_function_from_json(j);
    }
    throw CLI::ValidationError("--state", "unknown state spec '" + spec + "' (basis:N | twomode:M,N | gauss:S[,C] | file:PATH)");
}

PhaseSpaceGrid parse_grid(const std::string& spec) {
    // "t=64,p=-4:4:161"
    int n_theta = 64;
    double p_lo = -4.0, p_hi = 4.0;
    int n_p = 161;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.rfind("t=", 0) == 0) {
            n_theta = std::stoi(item.substr(2));
        } else if (item.rfind("p=", 0) == 0) {
            const std::string body = item.substr(2);
            const auto c1 = body.find(':');
            const auto c2 = body.find(':', c1 + 1);
            if (c1 == std::string::npos || c2 == std::string::npos)
                throw CLI::ValidationError("--grid", "p axis needs 'p=lo:hi:count'");
            p_lo = std::stod(body.substr(0, c1));
            p_hi = std::stod(body.substr(c1 + 1, c2 - c1 - 1));
            n_p = std::stoi(body.substr(c2 + 1));
        } else {
            throw CLI::ValidationError("--grid", "unknown grid item '" + item + "'");
        }
    }
    if (p_hi != -p_lo) throw CLI::ValidationError("--grid", "pbar window must be symmetric");
    return PhaseSpaceGrid::uniform(n_theta, p_hi, n_p);
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw CLI::ValidationError("--out", "cannot open " + path);
    return file;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cylwig: Wigner-Moyal calculus on the cylinder S^1 x R"};
    app.set_config("--config", "", "key=value configuration file");
    app.require_subcommand(1);

    GlobalOptions g;
    app.add_option("--hbar", g.hbar, "Planck constant (action units)")->capture_default_str();
    app.add_option("--nmax", g.n_max, "basis cutoff, coefficients n in [-nmax, nmax]")->capture_default_str();
    app.add_option("--inertia", g.inertia, "moment of inertia m r0^2")->capture_default_str();
    app.add_option("--amp", g.amplitude, "pendulum amplitude A in U = -A cos(k theta)")->capture_default_str();
    app.add_option("--kmode", g.k_mode, "potential mode k")->capture_default_str();

    // spectrum
    auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of the rotor Hamiltonian");
    int spec_count = 10;
    std::string spec_out;
    spectrum->add_option("--count", spec_count, "number of lowest eigenvalues")->capture_default_str();
    spectrum->add_option("--out", spec_out, "output file (default stdout)");

    // wigner
    auto* wigner = app.add_subcommand("wigner", "Wigner function on a phase-space grid");
    std::string wig_state = "basis:0", wig_grid = "t=64,p=-4:4:161", wig_out, wig_format = "csv";
    double wig_thermal = 0.0;
    wigner->add_option("--state", wig_state, "basis:N | twomode:M,N | gauss:S[,C] | file:PATH")->capture_default_str();
    wigner->add_option("--thermal", wig_thermal, "use the thermal state at this beta instead of --state");
    wigner->add_option("--grid", wig_grid, "grid spec t=COUNT,p=LO:HI:COUNT")->capture_default_str();
    wigner->add_option("--format", wig_format, "csv | json")->capture_default_str();
    wigner->add_option("--out", wig_out, "output file (default stdout)");

    // evolve
    auto* evolve = app.add_subcommand("evolve", "Schroedinger evolution with optional residual report");
    std::string ev_state = "gauss:2", ev_dump, ev_residual, ev_form = "shift", ev_grid = "t=48,p=-6:6:121";
    double ev_t0 = 0.0, ev_t1 = 1.0;
    int ev_steps = 10, ev_nseries = 4;
    evolve->add_option("--state", ev_state, "initial state spec")->capture_default_str();
    evolve->add_option("--t0", ev_t0)->capture_default_str();
    evolve->add_option("--t1", ev_t1)->capture_default_str();
    evolve->add_option("--steps", ev_steps, "number of steps after t0")->capture_default_str();
    evolve->add_option("--dump", ev_dump, "trajectory output (JSON lines)");
    evolve->add_option("--liouville-residual", ev_residual, "residual report output (JSON)");
    evolve->add_option("--form", ev_form, "potential term form: shift | series")->capture_default_str();
    evolve->add_option("--n-series", ev_nseries, "series truncation order")->capture_default_str();
    evolve->add_option("--grid", ev_grid, "residual grid spec")->capture_default_str();

    // weyl
    auto* weyl = app.add_subcommand("weyl", "quantize a symbol / dequantize a matrix");
    std::string weyl_quant, weyl_dequant, weyl_out;
    weyl->add_option("--quantize", weyl_quant, "symbol expression to quantize");
    weyl->add_option("--dequantize", weyl_dequant, "matrix JSON file to turn into a symbol");
    weyl->add_option("--out", weyl_out, "output file (default stdout)");

    // star
    auto* star_cmd = app.add_subcommand("star", "star product of two symbol expressions");
    std::string star_a, star_b;
    star_cmd->add_option("a", star_a, "left symbol")->required();
    star_cmd->add_option("b", star_b, "right symbol")->required();

    // check
    auto* check = app.add_subcommand("check", "run the identity/property suite");
    std::vector<std::string> check_suites;
    check->add_option("--suite", check_suites, "suites to run (default all): " + [] {
        std::string s;
        for (const auto& name : available_suites()) s += (s.empty() ? "" : ", ") + name;
        return s;
    }());

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;  // usage error
    }

    try {
        const PendulumModel model = make_model(g);

        if (spectrum->parsed()) {
            const EigenSystem eig = eigensystem(model, g.n_max);
            std::ofstream file;
            std::ostream& os = open_output(file, spec_out);
            os << "index,energy\n";
            for (int j = 0; j < std::min<int>(spec_count, eig.energies.size()); ++j)
                os << j << ',' << format_double(eig.energies(j)) << '\n';
            return 0;
        }

        if (wigner->parsed()) {
            const PhaseSpaceGrid grid = parse_grid(wig_grid);
            ShiftedSincField field;
            if (wig_thermal > 0.0) {
                const PendulumSolver solver(model, g.n_max);
                field = ShiftedSincField::from_moyal(solver.thermal_state(wig_thermal));
            } else {
                field = ShiftedSincField::from_wavefunction(parse_state(wig_state, g.n_max).normalized());
            }
            const std::vector<cd> values = field.evaluate_grid(grid);
            std::ofstream file;
            std::ostream& os = open_output(file, wig_out);
            if (wig_format == "json")
                os << grid_to_json(grid, values, true).dump(2) << '\n';
            else
                write_grid_csv(os, grid, values, true);
            return 0;
        }

        if (evolve->parsed()) {
            const PendulumSolver solver(model, g.n_max);
            const WaveFunction psi0 = parse_state(ev_state, g.n_max).normalized();
            std::vector<double> times;
            for (int i = 0; i <= ev_steps; ++i) times.push_back(ev_t0 + (ev_t1 - ev_t0) * i / std::max(1, ev_steps));
            std::vector<WaveFunction> states;
            for (double t : times) states.push_back(solver.evolve(psi0, t));
            if (!ev_dump.empty()) {
                std::ofstream file(ev_dump);
                if (!file) throw CLI::ValidationError("--dump", "cannot open " + ev_dump);
                write_trajectory_jsonl(file, times, states);
            }
            if (!ev_residual.empty()) {
                LiouvilleOptions opts;
                opts.form = ev_form == "series" ? PotentialForm::Series : PotentialForm::Shift;
                opts.n_series = ev_nseries;
                PhaseSpaceGrid grid = parse_grid(ev_grid);
                // Residual grids must avoid theta = +-pi.
                const double h = kTwoPi / grid.theta.size();
                for (double& t : grid.theta) t += 0.5 * h;
                nlohmann::json report = nlohmann::json::array();
                for (std::size_t i = 0; i < times.size(); ++i) {
                    auto stats = liouville_residual_state(states[i], solver, grid, opts);
                    nlohmann::json rec = residual_report_json(stats);
                    rec["t"] = times[i];
                    report.push_back(std::move(rec));
                }
                std::ofstream file(ev_residual);
                if (!file) throw CLI::ValidationError("--liouville-residual", "cannot open " + ev_residual);
                file << report.dump(2) << '\n';
            }
            if (ev_dump.empty() && ev_residual.empty())
                write_trajectory_jsonl(std::cout, times, states);
            return 0;
        }

        if (weyl->parsed()) {
            std::ofstream file;
            std::ostream& os = open_output(file, weyl_out);
            if (!weyl_quant.empty()) {
                const PhaseSpaceSymbol sym = to_phase_space_symbol(parse_symbol(weyl_quant));
                os << to_json(weyl_quantize(sym, g.n_max, g.hbar)).dump(2) << '\n';
                return 0;
            }
            if (!weyl_dequant.empty()) {
                std::ifstream in(weyl_dequant);
                if (!in) throw CLI::ValidationError("--dequantize", "cannot open " + weyl_dequant);
                nlohmann::json j;
                in >> j;
                const auto res = weyl_symbol(banded_operator_from_json(j), {.hbar = g.hbar});
                if (res.exact()) {
                    os << print_symbol(from_phase_space_symbol(*res.symbol, 1e-13)) << '\n';
                } else {
                    std::cerr << "matrix is not polynomial-banded; emitting sampled symbol\n";
                    os << grid_to_json(res.sampled->grid, res.sampled->values, false).dump(2) << '\n';
                }
                return 0;
            }
            std::cerr << "weyl: need --quantize or --dequantize\n";
            return 2;
        }

        if (star_cmd->parsed()) {
            const PhaseSpaceSymbol a = to_phase_space_symbol(parse_symbol(star_a));
            const PhaseSpaceSymbol b = to_phase_space_symbol(parse_symbol(star_b));
            std::cout << print_symbol(from_phase_space_symbol(star(a, b, g.hbar), 1e-13)) << '\n';
            return 0;
        }

        if (check->parsed()) {
            const auto results = run_checks(check_suites);
            bool all_ok = true;
            for (const auto& r : results) {
                std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.suite << '/' << r.name << "  measured "
                          << format_double(r.measured) << "  tolerance " << format_double(r.tolerance);
                if (!r.detail.empty()) std::cout << "  (" << r.detail << ')';
                std::cout << '\n';
                all_ok = all_ok && r.passed;
            }
            return all_ok ? 0 : 1;
        }
    } catch (const ParseError& e) {
        std::cerr << "symbol parse error: " << e.what() << '\n';
        return 2;
    } catch (const ParameterError& e) {
        std::cerr << "parameter error: " << e.what() << '\n';
        return 2;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
