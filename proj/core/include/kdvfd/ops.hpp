#pragma once

#include <cstddef>
#include <span>

#include "kdvfd/grid.hpp"

namespace kdvfd {

/// Finite-difference flavor: D+ (forward), D- (backward), D = (D+ + D-)/2.
enum class DiffKind { Forward, Backward, Central };

/// Apply D+, D- or D to a grid function. Same grid metadata on the result.
GridFunction difference(DiffKind kind, const GridFunction& u);

/// Two-point average <u>(x) = (u(x+dx) + u(x-dx)) / 2.
GridFunction average(const GridFunction& u);

/// Shift operator S^{+-}: shift(+1, u)(x) = u(x + dx).
GridFunction shift(int sign, const GridFunction& u);

/// Discrete inner product (u, v) = dx * sum_j u_j v_j.
/// Throws std::invalid_argument on mismatched grids.
double inner(const GridFunction& u, const GridFunction& v);

/// Weighted inner product (u, v)_p = dx * sum_j p_j u_j v_j.
double inner(const GridFunction& u, const GridFunction& v, const WeightFunction& p);

struct Norms {
    double l2 = 0.0;
    double sup = 0.0;
};

/// Discrete L2 norm (dx-weighted) and sup norm.
Norms norms(const GridFunction& u);

namespace kernels {

// Span-level primitives shared with the time stepper. out.size() == u.size().
void difference(DiffKind kind, std::span<const double> u, std::span<double> out, double dx,
                Boundary boundary);
void average(std::span<const double> u, std::span<double> out, Boundary boundary);
void shift(int sign, std::span<const double> u, std::span<double> out, Boundary boundary);

/// Compensated dx * sum_j u_j.
double grid_sum(std::span<const double> u, double dx);
/// Compensated dx * sum_j u_j v_j.
double grid_dot(std::span<const double> u, std::span<const double> v, double dx);
/// Compensated dx * sum_j p_j u_j v_j.
double grid_dot_weighted(std::span<const double> u, std::span<const double> v,
                         std::span<const double> p, double dx);
/// Compensated dx * sum_j u_j^2.
double grid_norm_sq(std::span<const double> u, double dx);
double sup_norm(std::span<const double> u);

}  // namespace kernels

}  // namespace kdvfd
