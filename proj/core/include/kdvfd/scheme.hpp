#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "kdvfd/banded.hpp"
#include "kdvfd/grid.hpp"
#include "kdvfd/ops.hpp"

namespace kdvfd {

/// Time step selection rule.
///
/// CflLambda:    dt = lambda * dx^{3/2} with lambda the largest value passing
///               both stability inequalities (scaled by 0.99); the rule under
///               which the per-step energy estimates are guaranteed.
/// QuadraticK:   dt = K * dx^2.
/// CourantLinear:dt = c * dx / max|u0| (transport CFL; dt = c * dx for zero
///               data). Not covered by the energy estimates, but the rule that
///               resolves traveling waves at first order in dx.
enum class DtRule { CflLambda, QuadraticK, CourantLinear };

/// How much per-step bookkeeping run() does.
/// None  - finiteness checks only.
/// Light - L2/sup/mass per step.
/// Full  - Light plus dissipation terms and every inequality flag.
enum class DiagLevel { None, Light, Full };

struct SchemeConfig {
    double x_left = 0.0;
    double x_right = 1.0;
    std::size_t n_cells = 0;
    Boundary boundary = Boundary::TruncatedLine;
    double t_end = 0.0;
    double cfl_delta = 0.5;        // delta in the first stability inequality
    double cfl_delta_tilde = 0.5;  // delta-tilde in the second
    DtRule dt_rule = DtRule::CflLambda;
    double k_quad = 1.0;   // K for QuadraticK
    double courant = 0.9;  // c for CourantLinear
    std::size_t record_every = 1;  // snapshot cadence in steps; 0 = endpoints only
    DiagLevel diagnostics = DiagLevel::Full;
    std::optional<double> kato_R;  // accumulate the local-H1 budget over |x| <= R-1

    double dx() const { return (x_right - x_left) / static_cast<double>(n_cells); }

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;
};

struct Snapshot {
    std::size_t step = 0;
    double t = 0.0;
    GridFunction u;
};

/// Time-indexed sequence of grid functions produced by run().
/// snapshots always contains u^0 and the final state; timestamps are strictly
/// increasing and the last one equals t_end exactly.
struct Trajectory {
    std::vector<Snapshot> snapshots;
    double dt_used = 0.0;
    std::size_t steps_taken = 0;
    /// True when every step was recorded, which is what interpolate() and the
    /// interpolant-based diagnostics need for exact fidelity.
    bool full_fidelity = true;

    GridLayout layout() const { return snapshots.front().u.layout(); }
};

/// Per-step ledger entry. The inequality flags compare both sides of the
/// energy estimates evaluated from raw state:
///   ineq_l2_ok:           ||u^{n+1}||^2 + dt sqrt(dx) * dissipation
///                          <= ||u^n||^2 * (1 + 1e-10)
///   ineq_cell_entropy_ok: w_j^2/2 <= <u^2>_j/2 - (dt/3) D(u^3)_j
///                          - delta dx^2 (Du_j)^2 / 2 + 1e-10 at every j
///   ineq_alpha_ok:        ||a^{n+1}||^2 <= (1 + 3 dt ||Du^n||_inf) ||a^n||^2
///                          * (1 + 1e-8), a^n the forward time difference
struct StepDiagnostics {
    std::size_t step = 0;
    double t = 0.0;
    double l2 = 0.0;
    double sup = 0.0;
    double mass = 0.0;
    double dissipation = 0.0;
    bool ineq_l2_ok = true;
    bool ineq_cell_entropy_ok = true;
    std::optional<double> alpha_l2;
    std::optional<bool> ineq_alpha_ok;
};

struct RunResult {
    Trajectory trajectory;
    std::vector<StepDiagnostics> diary;  // cadence follows record_every
    double dt = 0.0;
    double lambda = 0.0;  // dt / dx^{3/2}
    bool cfl_satisfied = false;  // both stability inequalities hold for lambda
    std::size_t steps_checked = 0;
    std::size_t flags_failed = 0;      // over every step, not just recorded ones
    double max_l2_growth = 0.0;        // max ||u^{n+1}|| / ||u^n||
    double mass_drift_rel = 0.0;       // max |mass_n - mass_0| / |mass_0|
    std::optional<double> kato_budget;
};

/// Thrown when a step produces NaN/Inf; carries the failing step index.
class SolverAbort : public std::runtime_error {
public:
    SolverAbort(std::size_t step, const std::string& what);
    std::size_t step() const { return step_; }

private:
    std::size_t step_;
};

/// Lax-Friedrichs substep for the convective term: w = <u> - dt <u> Du.
GridFunction burgers_substep(const GridFunction& u, double dt);

/// One full scheme step: u^{n+1} = solve(M, burgers_substep(u, dt)).
/// f must be the factorization of M assembled for the same dx, dt, boundary.
GridFunction step(const GridFunction& u, double dt, const Factorization& f);

/// Largest lambda = dt/dx^{3/2} satisfying both stability inequalities
///   lambda ||u0|| (1/3 + lambda ||u0|| / 2) < (1 - delta) / 2
///   6 ||u0||^2 lambda^2 + ||u0|| lambda    < (1 - delta_tilde) / 2
/// scaled by a hard 0.99 safety factor. Returns +infinity when u0_norm == 0.
/// Throws std::invalid_argument unless delta, delta_tilde are in (0,1).
double max_lambda(double u0_norm, double delta, double delta_tilde);

/// Pointwise sampling of initial data onto the configured grid.
GridFunction sample_initial(const SchemeConfig& config,
                            const std::function<double(double)>& u0);

/// Integrate the scheme to t_end (final step shortened to land exactly).
/// Throws SolverAbort on NaN/Inf, std::invalid_argument on config/grid
/// mismatch.
RunResult run(const SchemeConfig& config, const GridFunction& u0);

/// Piecewise bilinear space-time interpolant through the recorded snapshots.
/// Exact scheme fidelity needs full_fidelity (record_every == 1); otherwise
/// the nearest recorded bracketing pair is used. Throws std::out_of_range for
/// (x, t) outside the stored window/span.
double interpolate(const Trajectory& traj, double x, double t);

}  // namespace kdvfd
