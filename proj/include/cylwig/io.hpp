#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "cylwig/banded_operator.hpp"
#include "cylwig/grid.hpp"
#include "cylwig/liouville.hpp"
#include "cylwig/wave_function.hpp"

namespace cylwig {

/// 17 significant digits, locale-independent ('%.17g').
std::string format_double(double v);

nlohmann::json to_json(const WaveFunction& psi);
WaveFunction wave_function_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BandedOperator& a);
BandedOperator banded_operator_from_json(const nlohmann::json& j);

/// Grid dump, one row per node: `theta,pbar,value` for real fields,
/// `theta,pbar,value_re,value_im` otherwise. values is row-major [theta][pbar].
void write_grid_csv(std::ostream& os, const PhaseSpaceGrid& grid, const std::vector<cd>& values, bool real_valued);

nlohmann::json grid_to_json(const PhaseSpaceGrid& grid, const std::vector<cd>& values, bool real_valued);

/// Trajectory dump: JSON lines, one record {"t": ..., "coeffs": [[re,im],...]} per step.
void write_trajectory_jsonl(std::ostream& os, const std::vector<double>& times,
                            const std::vector<WaveFunction>& states);

nlohmann::json residual_report_json(const ResidualStats& stats);

}  // namespace cylwig
