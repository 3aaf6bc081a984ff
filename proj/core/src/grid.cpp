#include "kdvfd/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace kdvfd {

GridFunction::GridFunction(std::vector<double> values, double dx, Boundary boundary, double x0)
    : values_(std::move(values)), dx_(dx), x0_(x0), boundary_(boundary) {
    if (!(dx_ > 0.0)) {
        throw std::invalid_argument("GridFunction: dx must be positive");
    }
    if (values_.empty()) {
        throw std::invalid_argument("GridFunction: values must be nonempty");
    }
    for (std::size_t j = 0; j < values_.size(); ++j) {
        if (!std::isfinite(values_[j])) {
            throw std::invalid_argument("GridFunction: non-finite value at index " +
                                        std::to_string(j));
        }
    }
}

double GridFunction::at(std::ptrdiff_t j) const {
    const auto n = static_cast<std::ptrdiff_t>(values_.size());
    if (boundary_ == Boundary::Periodic) {
        std::ptrdiff_t m = j % n;
        if (m < 0) m += n;
        return values_[static_cast<std::size_t>(m)];
    }
    if (j < 0 || j >= n) return 0.0;
    return values_[static_cast<std::size_t>(j)];
}

WeightFunction::WeightFunction(std::vector<double> samples, double R, const GridLayout& layout)
    : samples_(std::move(samples)), R_(R), layout_(layout) {
    if (samples_.size() != layout_.n) {
        throw std::invalid_argument("WeightFunction: sample count does not match layout");
    }
    // Quadrature-level slack on the exact bounds 1 <= p <= 1+2R, p nondecreasing.
    const double tol = 1e-9 * (1.0 + 2.0 * R_);
    double prev = samples_.empty() ? 1.0 : samples_.front();
    for (std::size_t j = 0; j < samples_.size(); ++j) {
        const double p = samples_[j];
        if (!(p >= 1.0 - tol) || !(p <= 1.0 + 2.0 * R_ + tol)) {
            throw std::invalid_argument("WeightFunction: sample out of [1, 1+2R] at index " +
                                        std::to_string(j));
        }
        if (p < prev - tol) {
            throw std::invalid_argument("WeightFunction: samples must be nondecreasing");
        }
        prev = std::max(prev, p);
    }
}

namespace {

// Ramp clamp(1 + x + R, 1, 1+2R).
double ramp_hat(double x, double R) {
    return std::max(1.0, std::min(1.0 + x + R, 1.0 + 2.0 * R));
}

// Unit hat mollifier on [-1, 1].
double hat(double x) { return std::max(0.0, 1.0 - std::abs(x)); }

// Composite Simpson of f over [a, b] with an even panel count >= 2.
template <typename F>
double simpson(F&& f, double a, double b, std::size_t panels) {
    if (b <= a) return 0.0;
    if (panels % 2 != 0) ++panels;
    panels = std::max<std::size_t>(panels, 2);
    const double h = (b - a) / static_cast<double>(panels);
    double odd = 0.0, even = 0.0;
    for (std::size_t i = 1; i < panels; i += 2) odd += f(a + static_cast<double>(i) * h);
    for (std::size_t i = 2; i < panels; i += 2) even += f(a + static_cast<double>(i) * h);
    return h / 3.0 * (f(a) + 4.0 * odd + 2.0 * even + f(b));
}

// (p_hat * omega)(x): integrate over the mollifier support [x-1, x+1], split at
// every kink of the integrand so each piece is a polynomial Simpson handles
// exactly.
double convolved_ramp(double x, double R, double dx) {
    const double lo = x - 1.0, hi = x + 1.0;
    double cuts[5] = {lo, hi, x, -R, R};
    std::sort(std::begin(cuts), std::end(cuts));
    const auto f = [&](double y) { return ramp_hat(y, R) * hat(x - y); };

    const double target_h = std::min(dx / 10.0, 0.05);
    double total = 0.0;
    for (int i = 0; i + 1 < 5; ++i) {
        const double a = std::max(cuts[i], lo), b = std::min(cuts[i + 1], hi);
        if (b - a <= 0.0) continue;
        const auto panels = static_cast<std::size_t>(std::ceil((b - a) / target_h));
        total += simpson(f, a, b, panels);
    }
    return total;
}

}  // namespace

WeightFunction build_weight(double R, const GridLayout& grid) {
    if (!(R > 1.0)) {
        throw std::invalid_argument("build_weight: R must exceed 1");
    }
    if (grid.n == 0 || !(grid.dx > 0.0)) {
        throw std::invalid_argument("build_weight: invalid grid layout");
    }
    std::vector<double> p(grid.n);
    for (std::size_t j = 0; j < grid.n; ++j) {
        const double x = grid.x(j);
        if (x <= -R - 1.0) {
            p[j] = 1.0;
        } else if (x >= R + 1.0) {
            p[j] = 1.0 + 2.0 * R;
        } else {
            p[j] = convolved_ramp(x, R, grid.dx);
        }
    }
    return WeightFunction(std::move(p), R, grid);
}

}  // namespace kdvfd
