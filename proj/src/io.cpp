#include "cylwig/io.hpp"

#include <cstdio>
#include <ostream>

namespace cylwig {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

nlohmann::json to_json(const WaveFunction& psi) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const cd& c : psi.coeffs()) coeffs.push_back({c.real(), c.imag()});
    return {{"n_max", psi.n_max()}, {"coeffs", coeffs}};
}

WaveFunction wave_function_from_json(const nlohmann::json& j) {
    const int n_max = j.at("n_max").get<int>();
    const auto& arr = j.at("coeffs");
    if (static_cast<int>(arr.size()) != 2 * n_max + 1)
        throw ValidationError("coeffs length does not match n_max");
    std::vector<cd> c;
    c.reserve(arr.size());
    for (const auto& e : arr) c.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
    return WaveFunction(n_max, std::move(c));
}

nlohmann::json to_json(const BandedOperator& a) {
    // Row-major band storage: for each row m, columns n = m-bw .. m+bw;
    // slots outside the matrix hold zeros.
    const int bw = a.bandwidth();
    nlohmann::json entries = nlohmann::json::array();
    for (int m = -a.n_max(); m <= a.n_max(); ++m)
        for (int d = -bw; d <= bw; ++d) {
            const cd v = a.entry(m, m + d);
            entries.push_back({v.real(), v.imag()});
        }
    return {{"n_max", a.n_max()}, {"bandwidth", bw}, {"entries", entries}};
}

BandedOperator banded_operator_from_json(const nlohmann::json& j) {
    const int n_max = j.at("n_max").get<int>();
    const int bw = j.at("bandwidth").get<int>();
    const auto& arr = j.at("entries");
    const int per_row = 2 * bw + 1;
    if (static_cast<int>(arr.size()) != (2 * n_max + 1) * per_row)
        throw ValidationError("entries length does not match n_max/bandwidth");
    BandedOperator a(n_max, bw);
    int idx = 0;
    for (int m = -n_max; m <= n_max; ++m)
        for (int d = -bw; d <= bw; ++d, ++idx) {
            const cd v(arr[idx].at(0).get<double>(), arr[idx].at(1).get<double>());
            const int n = m + d;
            if (n < -n_max || n > n_max) {
                if (v != cd{0.0, 0.0}) throw ValidationError("nonzero band entry outside the matrix");
                continue;
            }
            a.set_entry(m, n, v);
        }
    return a;
}

void write_grid_csv(std::ostream& os, const PhaseSpaceGrid& grid, const std::vector<cd>& values, bool real_valued) {
    if (values.size() != grid.size()) throw ParameterError("value array does not match the grid");
    os << (real_valued ? "theta,pbar,value\n" : "theta,pbar,value_re,value_im\n");
    const std::size_t np = grid.pbar.size();
    for (std::size_t row = 0; row < grid.theta.size(); ++row)
        for (std::size_t j = 0; j < np; ++j) {
            const cd v = values[row * np + j];
            os << format_double(grid.theta[row]) << ',' << format_double(grid.pbar[j]) << ','
               << format_double(v.real());
            if (!real_valued) os << ',' << format_double(v.imag());
            os << '\n';
        }
}

nlohmann::json grid_to_json(const PhaseSpaceGrid& grid, const std::vector<cd>& values, bool real_valued) {
    if (values.size() != grid.size()) throw ParameterError("value array does not match the grid");
    nlohmann::json rows = nlohmann::json::array();
    const std::size_t np = grid.pbar.size();
    for (std::size_t row = 0; row < grid.theta.size(); ++row) {
        nlohmann::json line = nlohmann::json::array();
        for (std::size_t j = 0; j < np; ++j) {
            const cd v = values[row * np + j];
            if (real_valued)
                line.push_back(v.real());
            else
                line.push_back({v.real(), v.imag()});
        }
        rows.push_back(std::move(line));
    }
    return {{"theta", grid.theta}, {"pbar", grid.pbar}, {"values", rows}};
}

void write_trajectory_jsonl(std::ostream& os, const std::vector<double>& times,
                            const std::vector<WaveFunction>& states) {
    if (times.size() != states.size()) throw ParameterError("time and state arrays differ in length");
    for (std::size_t i = 0; i < times.size(); ++i) {
        nlohmann::json coeffs = nlohmann::json::array();
        for (const cd& c : states[i].coeffs()) coeffs.push_back({c.real(), c.imag()});
        os << nlohmann::json{{"t", times[i]}, {"coeffs", coeffs}}.dump() << '\n';
    }
}

nlohmann::json residual_report_json(const ResidualStats& stats) {
    return {{"grid", {{"n_theta", stats.n_theta}, {"n_pbar", stats.n_pbar}, {"pbar_max", stats.pbar_max}}},
            {"max_abs", stats.max_abs},
            {"mean_abs", stats.mean_abs},
            {"term_norms", stats.term_norms}};
}

}  // namespace cylwig
