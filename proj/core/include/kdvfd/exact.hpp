#pragma once

#include <stdexcept>

namespace kdvfd {

/// One-soliton solution of u_t + u u_x + u_xxx = 0: a bump of height 9
/// traveling right with speed 3.
double one_soliton(double x, double t);

/// Parameters of the two-soliton solution; requires 0 < a < b.
struct TwoSolitonParams {
    double a = 0.5;
    double b = 1.0;

    TwoSolitonParams() = default;
    TwoSolitonParams(double a_, double b_);
};

/// Two-soliton solution: waves of speed 2a and 2b that collide at t = 0.
/// The apparent singularity along x = 2bt is removable; near that line an
/// algebraically equivalent form is used to avoid the coth blow-up.
double two_soliton(double x, double t, const TwoSolitonParams& p = {});

/// L2-but-not-smooth initial profile: x^{-1/3} on (0,1), zero elsewhere in
/// [-5,5], extended 10-periodically.
double l2_singular_init(double x);

}  // namespace kdvfd
