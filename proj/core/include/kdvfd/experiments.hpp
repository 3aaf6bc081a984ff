#pragma once

#include <filesystem>
#include <span>

#include "kdvfd/diagnostics.hpp"
#include "kdvfd/presets.hpp"

namespace kdvfd {

/// Load an experiment from a flat JSON config. Recognized keys mirror the
/// SchemeConfig field names verbatim (x_left, x_right, n_cells, boundary,
/// t_end, cfl_delta, cfl_delta_tilde, dt_rule, k_quad, courant, record_every,
/// diagnostics, kato_R) plus "name" to start from a stock preset and
/// "initial"/"exact" selectors for custom runs. Malformed files and invariant
/// violations throw std::invalid_argument naming the field.
ExperimentPreset parse_config(const std::filesystem::path& path);

/// Run one experiment and serialize everything under out_dir:
///   snap_t<timestamp>.csv  (header x,u) per recorded snapshot,
///   diagnostics.csv        (step,t,l2,sup,mass,dissipation,l2_ok,entropy_ok),
///   summary.json           (E_percent when an exact solution exists, steps,
///                           dt, lambda, ...).
/// Returns 0 on success; nonzero when any inequality flag failed or the
/// solver aborted. All numbers are printed with 17 significant digits.
int run_experiment(const ExperimentPreset& preset, std::size_t n_cells,
                   const std::filesystem::path& out_dir);

/// Run the resolution sweep (concurrently across n) and write a CSV table
/// n_cells,E_percent,rate to out_path. Returns 0 unless a run aborted.
int emit_convergence_table(const ExperimentPreset& preset,
                           std::span<const std::size_t> n_list,
                           const std::filesystem::path& out_path, bool oracle_mode = false);

/// Sweep parallelism: min(KDVFD_THREADS, hardware concurrency), at least 1.
unsigned sweep_threads();

}  // namespace kdvfd
