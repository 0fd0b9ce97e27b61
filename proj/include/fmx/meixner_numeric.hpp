#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "fmx/error.hpp"
#include "fmx/meixner.hpp"

namespace fmx {

using ComplexVal = std::complex<double>;

/// G_mu(w) for a standard free Meixner law, from G = 1/(w - t) with the tail value t
/// solving (1+b) t^2 - (w-a) t + 1 = 0.
///
/// The two roots multiply to 1/(1+b); the Cauchy-transform branch is the one of
/// smaller modulus (t ~ 1/(w-a) at infinity, Im t < 0 on the upper half plane).
/// Equal moduli mean w sits on the support of the continuous part.
inline ComplexVal eval_G_numeric(const MeixnerParams& p, ComplexVal w, double tol = 1e-12)
{
    const double a = p.a().get_d();
    const double c = 1.0 + p.b().get_d();
    const ComplexVal u = w - a;
    ComplexVal t;
    if (c == 0.0) {
        if (std::abs(u) <= tol) throw precondition_error("evaluation on support");
        t = 1.0 / u;
    } else {
        const ComplexVal s = std::sqrt(u * u - 4.0 * c);
        // pick the sign that avoids cancellation for the large root
        const ComplexVal big = (std::abs(u + s) >= std::abs(u - s) ? u + s : u - s) / (2.0 * c);
        if (std::abs(std::abs(big) * std::sqrt(c) - 1.0) <= tol) throw precondition_error("evaluation on support");
        t = 1.0 / (c * big);
    }
    const ComplexVal denom = w - t;
    if (std::abs(denom) <= tol) throw precondition_error("evaluation on support (atom)");
    return 1.0 / denom;
}

/// Density of the absolutely continuous part of mu_{a,b} at real x, by Stieltjes inversion
/// with the boundary value of the square-root branch taken analytically (t from the upper
/// half plane). Zero outside (a - 2 sqrt(1+b), a + 2 sqrt(1+b)), and identically zero for b = -1.
inline double density_numeric(const MeixnerParams& p, double x, double tol = 1e-12)
{
    const double a = p.a().get_d();
    const double c = 1.0 + p.b().get_d();
    if (c == 0.0) return 0.0;
    const double u = x - a;
    const double disc = 4.0 * c - u * u;
    if (disc <= tol) return 0.0;
    const ComplexVal t(u / (2.0 * c), -std::sqrt(disc) / (2.0 * c));
    const ComplexVal G = 1.0 / (ComplexVal(x, 0.0) - t);
    return -G.imag() / std::numbers::pi;
}

} // namespace fmx
