#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "kdvfd/grid.hpp"

namespace kdvfd {

/// The implicit Airy-step matrix M = I + dt * D+^2 D- in banded form.
///
/// Row j has entries at column offsets {-1, 0, +1, +2} with coefficients
/// {-mu3, 1 + 3*mu3, -3*mu3, +mu3}, mu3 = dt/dx^3. On the truncated line the
/// band is simply clipped at the ends; in Periodic mode the wrapped entries
/// live in three rows (0, n-2, n-1) and are kept as a rank-<=3 correction of
/// the clipped band so solves stay O(n).
class BandedOperator {
public:
    struct WrapEntry {
        std::size_t row;
        std::size_t col;
        double value;
    };

    /// Requires dx > 0, dt >= 0 and n >= 4; throws std::invalid_argument.
    static BandedOperator assemble(double dx, double dt, std::size_t n, Boundary boundary);

    std::size_t size() const { return n_; }
    double dx() const { return dx_; }
    double dt() const { return dt_; }
    double mu3() const { return mu3_; }
    Boundary boundary() const { return boundary_; }

    double coeff_sub() const { return -mu3_; }         // column j-1
    double coeff_diag() const { return 1.0 + 3.0 * mu3_; }
    double coeff_super1() const { return -3.0 * mu3_; }  // column j+1
    double coeff_super2() const { return mu3_; }          // column j+2

    /// The entries that wrap around in Periodic mode (empty on the line).
    /// They occupy at most three distinct rows.
    std::vector<WrapEntry> wrap_entries() const;

    /// y = M x, boundary-aware. x and y must have length n and not alias.
    void multiply(std::span<const double> x, std::span<double> y) const;

private:
    BandedOperator(double dx, double dt, std::size_t n, Boundary boundary);

    std::size_t n_;
    double dx_;
    double dt_;
    double mu3_;
    Boundary boundary_;
};

/// Banded LU of M with partial pivoting (lower bandwidth 1, upper bandwidth 2,
/// fill to 3 under pivoting). In Periodic mode the clipped band is factored and
/// the wrap entries are folded back in through a Sherman-Morrison-Woodbury
/// rank-<=3 correction. Immutable after construction; concurrent solves are
/// fine since solve() allocates its own workspace.
class Factorization {
public:
    struct Workspace {
        std::vector<double> x;
        std::vector<double> r;
    };

    explicit Factorization(const BandedOperator& op);

    const BandedOperator& op() const { return op_; }
    std::size_t size() const { return op_.size(); }

    /// Solve M x = rhs. Residual ||M x - rhs|| <= 1e-10 ||rhs|| (one step of
    /// iterative refinement is always applied). Throws on length mismatch.
    std::vector<double> solve(std::span<const double> rhs) const;

    /// Same, writing into x using caller-owned scratch (hot path; not
    /// thread-shared). rhs and x may alias.
    void solve_into(std::span<const double> rhs, std::span<double> x, Workspace& ws) const;

private:
    void band_solve(std::span<double> b) const;          // LU substitution only
    void full_solve(std::span<double> b) const;          // band + Woodbury correction
    void factor();

    BandedOperator op_;
    std::vector<double> band_;    // 5 x n, entry (i,j) at band_[(i - j + 3) * n + j]
    std::vector<int> pivot_;      // pivot_[k] in {k, k+1}
    // Woodbury data (Periodic only): w*_ = A^{-1} e_row, cap_ = LU of I3 + V W.
    std::array<std::vector<double>, 3> w_;
    std::array<double, 9> cap_{};
    std::array<int, 3> cap_pivot_{};
};

/// Convenience wrappers mirroring the assemble/factor/solve split.
Factorization factor(const BandedOperator& op);
std::vector<double> solve(const Factorization& f, std::span<const double> rhs);

}  // namespace kdvfd
