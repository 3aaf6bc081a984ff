#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace kdvfd {

/// Boundary handling for samples outside the stored window.
///
/// Periodic wraps indices modulo the stored length J; TruncatedLine treats
/// everything outside the window as zero.
enum class Boundary { Periodic, TruncatedLine };

/// Shape of a uniform grid: sample count, spacing, left edge, boundary mode.
struct GridLayout {
    std::size_t n = 0;
    double dx = 0.0;
    double x0 = 0.0;
    Boundary boundary = Boundary::TruncatedLine;

    double x(std::size_t j) const { return x0 + static_cast<double>(j) * dx; }
    bool operator==(const GridLayout&) const = default;
};

/// Immutable vector of solution samples u_j on a uniform grid.
///
/// values()[0] sits at the left edge of the window (x0). In Periodic mode the
/// stored length is the period J. Construction validates dx > 0, non-empty
/// data, and that every sample is finite; violations throw std::invalid_argument.
class GridFunction {
public:
    GridFunction(std::vector<double> values, double dx, Boundary boundary, double x0 = 0.0);

    std::size_t size() const { return values_.size(); }
    double dx() const { return dx_; }
    double x0() const { return x0_; }
    Boundary boundary() const { return boundary_; }
    std::span<const double> values() const { return values_; }
    double operator[](std::size_t j) const { return values_[j]; }
    double x(std::size_t j) const { return x0_ + static_cast<double>(j) * dx_; }

    /// Boundary-aware access: wraps in Periodic mode, zero-extends otherwise.
    double at(std::ptrdiff_t j) const;

    GridLayout layout() const { return {values_.size(), dx_, x0_, boundary_}; }

private:
    std::vector<double> values_;
    double dx_;
    double x0_;
    Boundary boundary_;
};

/// Samples of the mollified ramp weight p = p_hat * omega on a grid.
///
/// p rises from 1 (x <= -R-1) to 1+2R (x >= R+1) with 0 <= p' <= 1.
class WeightFunction {
public:
    WeightFunction(std::vector<double> samples, double R, const GridLayout& layout);

    std::span<const double> samples() const { return samples_; }
    double operator[](std::size_t j) const { return samples_[j]; }
    double R() const { return R_; }
    const GridLayout& layout() const { return layout_; }
    std::size_t size() const { return samples_.size(); }

private:
    std::vector<double> samples_;
    double R_;
    GridLayout layout_;
};

/// Build the weight p = p_hat * omega on the given grid, where
/// p_hat(x) = clamp(1 + x + R, 1, 1 + 2R) and omega is the unit hat mollifier
/// on [-1,1]. The convolution is evaluated by composite Simpson quadrature on
/// a sub-grid at least 10x finer than dx, with panels split at the integrand's
/// kinks so the piecewise-quadratic pieces integrate exactly.
///
/// Requires R > 1; throws std::invalid_argument otherwise.
WeightFunction build_weight(double R, const GridLayout& grid);

}  // namespace kdvfd
