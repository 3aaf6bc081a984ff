#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "kdvfd/grid.hpp"
#include "kdvfd/presets.hpp"
#include "kdvfd/scheme.hpp"

namespace kdvfd {

struct ConvergenceRow {
    std::size_t n_cells = 0;
    double error_percent = 0.0;
    std::optional<double> rate;  // log2(E_prev / E_this), from the second row on
};

/// Relative error in percent at the grid nodes:
///   E = 100 * sum_j |exact(x_j, t) - u_j| / sum_j exact(x_j, t).
/// Throws std::invalid_argument when the denominator is not positive.
double relative_error(const GridFunction& u_num,
                      const std::function<double(double, double)>& exact, double t_exact);

/// Fill in the rate column of a table: rate_i = log2(E_{i-1}/E_i), defined
/// only for strictly positive error pairs.
void attach_rates(std::vector<ConvergenceRow>& rows);

/// Run the preset at each resolution (concurrently; see KDVFD_THREADS) and
/// tabulate errors against the preset's exact solution. n_list should be
/// ascending with each entry double the previous for the rates to mean
/// anything. oracle_mode replaces the numerical result by exact samples,
/// which must produce a zero error column.
std::vector<ConvergenceRow> convergence_table(const ExperimentPreset& preset,
                                              std::span<const std::size_t> n_list,
                                              bool oracle_mode = false);

/// Local-H1 (Kato smoothing) budget of a fully recorded trajectory:
///   sum_n dt_n * dx * sum_{|x_j| <= R-1} (D+ u^n_j)^2, n over all but the
/// final state. Requires record_every == 1 and [-(R-1), R-1] inside the
/// window; throws std::invalid_argument otherwise.
double kato_budget(const Trajectory& traj, double R);

/// ||u||_p^2 = (u, u)_p.
double weighted_energy(const GridFunction& u, const WeightFunction& p);

struct InterpolantReport {
    bool ok = true;
    double worst_ratio = 0.0;   // max over samples of ||u_dx(.,t)||^2 / ||u0||^2
    std::size_t samples = 0;
};

/// Verify ||u_dx(.,t)||_{L2} <= ||u^0|| (1 + 1e-10) at sampled times using the
/// closed-form cell integral of the bilinear interpolant,
///   integral |u_dx|^2 dx = (2/3)||w||^2 + (dx/3) sum_j w_{j+1} w_j,
/// with w the time-interpolated nodal values. Requires record_every == 1.
InterpolantReport check_interpolant_bounds(const Trajectory& traj);

}  // namespace kdvfd
