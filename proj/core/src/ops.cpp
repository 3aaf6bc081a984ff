#include "kdvfd/ops.hpp"

#include <cmath>
#include <stdexcept>

namespace kdvfd {

namespace kernels {

namespace {

struct Kahan {
    double sum = 0.0;
    double carry = 0.0;
    void add(double x) {
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

// Boundary-aware neighbor fetch for the edge cells.
inline double fetch(std::span<const double> u, std::ptrdiff_t j, Boundary b) {
    const auto n = static_cast<std::ptrdiff_t>(u.size());
    if (b == Boundary::Periodic) {
        std::ptrdiff_t m = j % n;
        if (m < 0) m += n;
        return u[static_cast<std::size_t>(m)];
    }
    return (j < 0 || j >= n) ? 0.0 : u[static_cast<std::size_t>(j)];
}

}  // namespace

void difference(DiffKind kind, std::span<const double> u, std::span<double> out, double dx,
                Boundary boundary) {
    const std::size_t n = u.size();
    const double inv = 1.0 / dx;
    const double half_inv = 0.5 * inv;
    switch (kind) {
        case DiffKind::Forward:
            for (std::size_t j = 0; j + 1 < n; ++j) out[j] = (u[j + 1] - u[j]) * inv;
            out[n - 1] = (fetch(u, static_cast<std::ptrdiff_t>(n), boundary) - u[n - 1]) * inv;
            break;
        case DiffKind::Backward:
            out[0] = (u[0] - fetch(u, -1, boundary)) * inv;
            for (std::size_t j = 1; j < n; ++j) out[j] = (u[j] - u[j - 1]) * inv;
            break;
        case DiffKind::Central:
            out[0] = (u[1 < n ? 1 : 0] - fetch(u, -1, boundary)) * half_inv;
            for (std::size_t j = 1; j + 1 < n; ++j) out[j] = (u[j + 1] - u[j - 1]) * half_inv;
            if (n > 1) {
                out[n - 1] =
                    (fetch(u, static_cast<std::ptrdiff_t>(n), boundary) - u[n - 2]) * half_inv;
            }
            break;
    }
}

void average(std::span<const double> u, std::span<double> out, Boundary boundary) {
    const std::size_t n = u.size();
    out[0] = 0.5 * (u[1 < n ? 1 : 0] + fetch(u, -1, boundary));
    for (std::size_t j = 1; j + 1 < n; ++j) out[j] = 0.5 * (u[j + 1] + u[j - 1]);
    if (n > 1) {
        out[n - 1] = 0.5 * (fetch(u, static_cast<std::ptrdiff_t>(n), boundary) + u[n - 2]);
    }
}

void shift(int sign, std::span<const double> u, std::span<double> out, Boundary boundary) {
    const auto n = static_cast<std::ptrdiff_t>(u.size());
    const std::ptrdiff_t s = sign > 0 ? 1 : -1;
    for (std::ptrdiff_t j = 0; j < n; ++j) {
        out[static_cast<std::size_t>(j)] = fetch(u, j + s, boundary);
    }
}

double grid_sum(std::span<const double> u, double dx) {
    Kahan acc;
    for (double v : u) acc.add(v);
    return dx * acc.sum;
}

double grid_dot(std::span<const double> u, std::span<const double> v, double dx) {
    Kahan acc;
    for (std::size_t j = 0; j < u.size(); ++j) acc.add(u[j] * v[j]);
    return dx * acc.sum;
}

double grid_dot_weighted(std::span<const double> u, std::span<const double> v,
                         std::span<const double> p, double dx) {
    Kahan acc;
    for (std::size_t j = 0; j < u.size(); ++j) acc.add(p[j] * u[j] * v[j]);
    return dx * acc.sum;
}

double grid_norm_sq(std::span<const double> u, double dx) {
    Kahan acc;
    for (double v : u) acc.add(v * v);
    return dx * acc.sum;
}

double sup_norm(std::span<const double> u) {
    double m = 0.0;
    for (double v : u) m = std::max(m, std::abs(v));
    return m;
}

}  // namespace kernels

namespace {

void require_matching(const GridFunction& u, const GridFunction& v) {
    if (u.size() != v.size() || u.dx() != v.dx() || u.boundary() != v.boundary()) {
        throw std::invalid_argument("mismatched grids");
    }
}

}  // namespace

GridFunction difference(DiffKind kind, const GridFunction& u) {
    std::vector<double> out(u.size());
    kernels::difference(kind, u.values(), out, u.dx(), u.boundary());
    return GridFunction(std::move(out), u.dx(), u.boundary(), u.x0());
}

GridFunction average(const GridFunction& u) {
    std::vector<double> out(u.size());
    kernels::average(u.values(), out, u.boundary());
    return GridFunction(std::move(out), u.dx(), u.boundary(), u.x0());
}

GridFunction shift(int sign, const GridFunction& u) {
    std::vector<double> out(u.size());
    kernels::shift(sign, u.values(), out, u.boundary());
    return GridFunction(std::move(out), u.dx(), u.boundary(), u.x0());
}

double inner(const GridFunction& u, const GridFunction& v) {
    require_matching(u, v);
    return kernels::grid_dot(u.values(), v.values(), u.dx());
}

double inner(const GridFunction& u, const GridFunction& v, const WeightFunction& p) {
    require_matching(u, v);
    if (p.size() != u.size()) {
        throw std::invalid_argument("mismatched weight");
    }
    return kernels::grid_dot_weighted(u.values(), v.values(), p.samples(), u.dx());
}

Norms norms(const GridFunction& u) {
    Norms out;
    out.l2 = std::sqrt(kernels::grid_norm_sq(u.values(), u.dx()));
    out.sup = kernels::sup_norm(u.values());
    return out;
}

}  // namespace kdvfd
