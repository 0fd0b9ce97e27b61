#pragma once

// Standard free Meixner distributions mu_{a,b}: Jacobi parameters
//   alpha_0 = 0, alpha_n = a (n >= 1),  omega_1 = 1, omega_n = 1 + b (n >= 2),  b >= -1.
//
// The Voiculescu-transform identities are checked in composable form:
//   phi(1/g(z)) = z                 <=>  R(g(z)) = z,
//   phi_mu(y) = G_{omega_{a,b}}(y)  <=>  R_mu(w) = G~_{omega_{a,b}}(w),
//   G_mu = g o phi_eta              <=>  G~_mu = g o G~_{omega_{a,1+b}}.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "fmx/error.hpp"
#include "fmx/jacobi.hpp"
#include "fmx/rational.hpp"
#include "fmx/series.hpp"
#include "fmx/transforms.hpp"
#include "fmx/verdict.hpp"

namespace fmx {

class MeixnerParams {
public:
    MeixnerParams(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b))
    {
        if (b_ < -1) throw precondition_error("free Meixner parameter b must satisfy b >= -1 (got " + to_string(b_) + ")");
    }

    [[nodiscard]] const Rational& a() const { return a_; }
    [[nodiscard]] const Rational& b() const { return b_; }

    friend bool operator==(const MeixnerParams&, const MeixnerParams&) = default;

private:
    Rational a_;
    Rational b_;
};

/// Semicircle law omega_{mean, variance}: constant Jacobi parameters alpha = mean, omega = variance.
class SemicircleParams {
public:
    SemicircleParams(Rational mean, Rational variance) : mean_(std::move(mean)), var_(std::move(variance))
    {
        if (var_ < 0) throw not_a_measure("omega_{a,b} is not a measure (variance " + to_string(var_) + " < 0)");
    }

    [[nodiscard]] const Rational& mean() const { return mean_; }
    [[nodiscard]] const Rational& variance() const { return var_; }

private:
    Rational mean_;
    Rational var_;
};

inline JacobiParams meixner_jacobi(const MeixnerParams& p)
{
    return JacobiParams({Rational(0)}, {Rational(1)}, JacobiTail{p.a(), 1 + p.b()});
}

inline MomentSeq meixner_moments(const MeixnerParams& p, std::size_t N)
{
    return jacobi_to_moments(meixner_jacobi(p), N);
}

namespace detail {

/// Series of z / (1 + s z + t z^2).
inline TruncSeries z_over_quadratic(const Rational& s, const Rational& t, std::size_t N)
{
    std::vector<Rational> c(N + 1);
    // q_k for 1/(1 + s z + t z^2): q_k = -s q_{k-1} - t q_{k-2}
    if (N >= 1) c[1] = 1;
    for (std::size_t k = 2; k <= N; ++k) {
        Rational v = -s * c[k - 1];
        if (k >= 3) v -= t * c[k - 2];
        c[k] = v;
    }
    return {N, std::move(c)};
}

/// Solution X = w + s w X + t w X^2 with X(0) = 0: x_1 = 1,
/// x_n = s x_{n-1} + t sum_{i+j=n-1} x_i x_j.
inline std::vector<Rational> quadratic_fixed_point(const Rational& s, const Rational& t, std::size_t N)
{
    std::vector<Rational> x(N + 1);
    if (N >= 1) x[1] = 1;
    for (std::size_t n = 2; n <= N; ++n) {
        Rational acc = s * x[n - 1];
        Rational conv;
        for (std::size_t i = 1; i + 1 < n; ++i) conv += x[i] * x[n - 1 - i];
        acc += t * conv;
        x[n] = acc;
    }
    return x;
}

} // namespace detail

/// g(z) = z / (1 + a z + b z^2).
inline TruncSeries meixner_g(const MeixnerParams& p, std::size_t N = default_order)
{
    return detail::z_over_quadratic(p.a(), p.b(), N);
}

/// rho(z) = z / (1 + a z + (1 + b) z^2), from 1/g(z) = F(1/rho(z)).
inline TruncSeries meixner_rho(const MeixnerParams& p, std::size_t N = default_order)
{
    return detail::z_over_quadratic(p.a(), 1 + p.b(), N);
}

/// kappa_1 .. kappa_N of mu_{a,b}: the series solution of R = w (1 + a R + b R^2).
inline CumulantSeries meixner_R(const MeixnerParams& p, std::size_t N = default_order)
{
    auto x = detail::quadratic_fixed_point(p.a(), p.b(), N == 0 ? 0 : N - 1);
    x.resize(N);
    return CumulantSeries(std::move(x));
}

/// G~ of omega_{mean,variance} to order N from G = 1/(y - mean - variance G).
inline CauchyAtInfinity semicircle_G(const SemicircleParams& s, std::size_t N = default_order)
{
    if (N < 1) throw precondition_error("semicircle_G: order must be at least 1");
    return CauchyAtInfinity(TruncSeries(N, detail::quadratic_fixed_point(s.mean(), s.variance(), N)));
}

/// G~_mu from the continued-fraction fixed point G(w) = 1/(w - t), t = G_{omega_{a,1+b}}(w).
inline CauchyAtInfinity meixner_G_fixed_point(const MeixnerParams& p, std::size_t N = default_order)
{
    if (N < 1) throw precondition_error("meixner_G_fixed_point: order must be at least 1");
    const TruncSeries t = semicircle_G(SemicircleParams(p.a(), 1 + p.b()), N).series();
    // G~ = w / (1 - w t)
    const TruncSeries wt = t.truncated(N - 1).times_z();
    return CauchyAtInfinity(reciprocal(TruncSeries::constant(N, 1) - wt).truncated(N - 1).times_z());
}

/// R(g(z)) = z to order N for an arbitrary cumulant series.
inline Verdict phi_identity_verdict(const CumulantSeries& R, const TruncSeries& g, std::size_t N)
{
    if (R.size() < N + 1) throw insufficient_data("phi identity at order " + std::to_string(N) + " needs " +
                                                  std::to_string(N + 1) + " cumulants");
    const TruncSeries lhs = compose(R.as_series().truncated(N), g.truncated(N));
    return compare_series(TruncSeries::identity(N), lhs);
}

inline Verdict phi_identity_verdict(const MeixnerParams& p, std::size_t N = default_order)
{
    return phi_identity_verdict(meixner_R(p, N + 1), meixner_g(p, N), N);
}

inline bool verify_phi_identity(const MeixnerParams& p, std::size_t N = default_order)
{
    return phi_identity_verdict(p, N).pass;
}

/// kappa_{n+2}(mu_{a,b}) = m_n(omega_{a,b}) for n < N (b >= 0).
inline Verdict levy_representation_verdict(const MeixnerParams& p, std::size_t N = default_order)
{
    if (p.b() < 0) throw precondition_error("b < 0: use verify_negative_b");
    const CumulantSeries R = meixner_R(p, N + 1);
    const CauchyAtInfinity G = semicircle_G(SemicircleParams(p.a(), p.b()), N);
    for (std::size_t n = 0; n < N; ++n)
        if (R.kappa(n + 2) != G.moment(n)) return Verdict::fail({{n}, G.moment(n), R.kappa(n + 2)});
    return Verdict::ok();
}

inline bool verify_levy_representation(const MeixnerParams& p, std::size_t N = default_order)
{
    return levy_representation_verdict(p, N).pass;
}

/// g o G~_{omega_{a, eta_variance}} = G~_mu to order N; the identity holds for eta_variance = 1 + b.
inline Verdict negative_b_verdict(const MeixnerParams& p, std::size_t N, const Rational& eta_variance)
{
    if (N < 1) throw precondition_error("negative-b check: order must be at least 1");
    const TruncSeries H = semicircle_G(SemicircleParams(p.a(), eta_variance), N).series();
    const TruncSeries lhs = compose(meixner_g(p, N), H);
    const TruncSeries rhs = moments_to_G(meixner_moments(p, N - 1)).series();
    return compare_series(rhs, lhs);
}

inline Verdict negative_b_verdict(const MeixnerParams& p, std::size_t N = default_order)
{
    if (p.b() >= 0) throw precondition_error("negative-b representation requires -1 <= b < 0");
    return negative_b_verdict(p, N, 1 + p.b());
}

inline bool verify_negative_b(const MeixnerParams& p, std::size_t N = default_order)
{
    return negative_b_verdict(p, N).pass;
}

} // namespace fmx
