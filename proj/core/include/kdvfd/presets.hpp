#pragma once

#include <functional>
#include <string>

#include "kdvfd/scheme.hpp"

namespace kdvfd {

enum class PresetKind { Soliton1, Soliton2, L2Data, Custom };

/// A named experiment: scheme configuration template plus initial data and,
/// when available, the exact solution to compare against.
///
/// soliton1: truncated line [-10,10], u0 = one-soliton at time -1, run for 2
///           time units and compare against the soliton at time 1.
/// soliton2: truncated line [-40,60], u0 = two-soliton (a=0.5, b=1) at time
///           -10, run for 30 and compare at time 20.
/// l2data:   periodic [-5,5], u0 = the x^{-1/3} profile, run for 0.5.
struct ExperimentPreset {
    std::string name;
    PresetKind kind = PresetKind::Custom;
    SchemeConfig config;  // n_cells filled in per run
    std::function<double(double)> initial;
    /// Exact solution as a function of (x, simulation time); empty if unknown.
    std::function<double(double, double)> exact;

    bool has_exact() const { return static_cast<bool>(exact); }
};

/// Build one of the stock presets. n_cells may be overridden later via
/// config_for().
ExperimentPreset make_preset(PresetKind kind, std::size_t n_cells = 0);

/// Preset lookup by CLI name ("soliton1", "soliton2", "l2data").
/// Throws std::invalid_argument for unknown names.
ExperimentPreset make_preset(const std::string& name, std::size_t n_cells = 0);

/// The preset's configuration resized to n_cells (validated).
SchemeConfig config_for(const ExperimentPreset& preset, std::size_t n_cells);

/// Initial data sampled pointwise onto the configured grid.
GridFunction initial_for(const ExperimentPreset& preset, const SchemeConfig& config);

}  // namespace kdvfd
