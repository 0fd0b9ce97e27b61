#pragma once

// Multiplicative renormalization with h(x) = (1 - x)^{-1}:
//   psi(z, x) = (1 - rho(z) x)^{-1} / E[(1 - rho(z) X)^{-1}] = sum_n Q_n(x) z^n,
// and the criterion that E[psi(z,X) psi(v,X)] depends on zv only.

#include <algorithm>
#include <cstddef>
#include <future>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "fmx/biseries.hpp"
#include "fmx/error.hpp"
#include "fmx/jacobi.hpp"
#include "fmx/meixner.hpp"
#include "fmx/poly.hpp"
#include "fmx/rational.hpp"
#include "fmx/series.hpp"
#include "fmx/transforms.hpp"
#include "fmx/verdict.hpp"

namespace fmx {

/// psi(z, x) = sum_{n <= N} Q_n(x) z^n.
struct RenormGF {
    std::size_t order = 0;
    std::vector<Poly> q_polys;

    friend bool operator==(const RenormGF&, const RenormGF&) = default;
};

namespace detail {

inline void require_unit_like(const TruncSeries& s, const char* name)
{
    if (s.order() < 1 || s[0] != 0 || s[1] == 0)
        throw precondition_error(std::string(name) + " must satisfy " + name + "(0) = 0 and " + name + "'(0) != 0");
}

/// Q_n(x) = sum_k [z^n] T_k(z) x^k for a family of series T_0, T_1, ...
inline RenormGF collect_by_power_of_x(const std::vector<TruncSeries>& T, std::size_t N)
{
    RenormGF psi{N, {}};
    psi.q_polys.reserve(N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
        std::vector<Rational> c(n + 1);
        for (std::size_t k = 0; k <= n; ++k) c[k] = T[k][n];
        psi.q_polys.emplace_back(std::move(c));
    }
    return psi;
}

} // namespace detail

/// psi from rho: numerator sum_k x^k rho^k, denominator sum_k m_k rho^k.
inline RenormGF build_psi(const MomentSeq& m, const TruncSeries& rho, std::size_t N = default_order)
{
    detail::require_unit_like(rho, "rho");
    if (m.order() < N)
        throw insufficient_data("build_psi at order " + std::to_string(N) + " needs " + std::to_string(N + 1) +
                                " moments");
    const TruncSeries r = rho.truncated(N);
    std::vector<TruncSeries> pw;
    pw.reserve(N + 1);
    pw.push_back(TruncSeries::constant(N, 1));
    for (std::size_t k = 1; k <= N; ++k) pw.push_back(pw.back() * r);

    TruncSeries denom(N);
    for (std::size_t k = 0; k <= N; ++k) denom = denom + pw[k] * m[k];
    const TruncSeries inv = reciprocal(denom);

    std::vector<TruncSeries> T;
    T.reserve(N + 1);
    for (std::size_t k = 0; k <= N; ++k) T.push_back(pw[k] * inv);
    return detail::collect_by_power_of_x(T, N);
}

/// psi in the form 1 / (g(z) (K(g(z)) - x)) = 1 / (A(z) - x g(z)), A = 1 + g R(g),
/// expanded as sum_k x^k g^k / A^{k+1}.
inline RenormGF build_psi_bd(const MomentSeq& m, const TruncSeries& g, std::size_t N = default_order)
{
    detail::require_unit_like(g, "g");
    if (m.order() < N)
        throw insufficient_data("build_psi_bd at order " + std::to_string(N) + " needs " +
                                std::to_string(N + 1) + " moments");
    const TruncSeries gs = g.truncated(N);
    TruncSeries A = TruncSeries::constant(N, 1);
    if (N >= 1) {
        // g R(g) = z * ((g/z) R(g)); both factors are known to order N - 1
        const CumulantSeries R = moments_to_R(m.truncated(N));
        A = A + (gs.divided_by_z() * compose(R.as_series(), gs.truncated(N - 1))).times_z();
    }
    const TruncSeries B = reciprocal(A);
    const TruncSeries step = gs * B;
    std::vector<TruncSeries> T;
    T.reserve(N + 1);
    T.push_back(B);
    for (std::size_t k = 1; k <= N; ++k) T.push_back(T.back() * step);
    return detail::collect_by_power_of_x(T, N);
}

/// E[psi(z,X) psi(v,X)] as a bivariate series: coefficient (i, j) = E[Q_i(X) Q_j(X)].
inline BiTruncSeries psi_product_expectation(const MomentSeq& m, const RenormGF& psi)
{
    if (m.order() < 2 * psi.order)
        throw insufficient_data("criterion at order " + std::to_string(psi.order) + " needs " +
                                std::to_string(2 * psi.order + 1) + " moments");
    const RationalMatrix G = gram(psi.q_polys, m);
    BiTruncSeries B(psi.order);
    for (std::size_t i = 0; i <= psi.order; ++i)
        for (std::size_t j = 0; j <= psi.order; ++j) B(i, j) = G[i][j];
    return B;
}

inline Verdict akk_verdict(const MomentSeq& m, const RenormGF& psi)
{
    return diag_dependence_verdict(psi_product_expectation(m, psi));
}

inline bool akk_check(const MomentSeq& m, const RenormGF& psi) { return akk_verdict(m, psi).pass; }

/// a_n = leading coefficient of Q_n (the z -> 0 limit of psi(z, x/z) keeps exactly these).
inline std::vector<Rational> extract_an(const RenormGF& psi)
{
    std::vector<Rational> a;
    a.reserve(psi.q_polys.size());
    for (std::size_t n = 0; n < psi.q_polys.size(); ++n) {
        const Poly& q = psi.q_polys[n];
        if (q.degree() != static_cast<int>(n))
            throw precondition_error("not a generating function; a_n undefined (deg Q_" + std::to_string(n) +
                                     " = " + std::to_string(q.degree()) + ")");
        a.push_back(q.leading());
    }
    return a;
}

/// The difference quotient (phi(1/g(z)) - phi(1/g(v))) / (1/g(z) - 1/g(v)) as a bivariate series.
///
/// With S = R o g (= phi(1/g)), 1/g(z) - 1/g(v) = (z - v)(b - 1/(zv)). After multiplying through
/// by zv the quotient is zv * [(S(z) - S(v)) / (z - v)] / (b zv - 1); the divided difference
/// sum_n s_n sum_{i+j=n-1} z^i v^j is exact.
inline BiTruncSeries phi_diff_quotient(const MeixnerParams& p, const CumulantSeries& R, std::size_t N)
{
    // coefficient (i, j) with i, j <= N reaches S up to z^{2N+1}
    const std::size_t M = 2 * N + 1;
    if (R.size() < M + 1)
        throw insufficient_data("difference quotient at order " + std::to_string(N) + " needs " +
                                std::to_string(M + 1) + " cumulants");
    const TruncSeries S = compose(R.as_series().truncated(M), meixner_g(p, M));
    BiTruncSeries dd(N);
    for (std::size_t n = 1; n <= M; ++n) {
        if (S[n] == 0) continue;
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t j = n - 1 - i;
            if (i <= N && j <= N) dd(i, j) += S[n];
        }
    }
    BiTruncSeries zv(N), den(N);
    if (N >= 1) zv(1, 1) = 1;
    den(0, 0) = -1;
    if (N >= 1) den(1, 1) = p.b();
    return zv * dd * reciprocal(den);
}

inline Verdict phi_diff_quotient_verdict(const MeixnerParams& p, std::size_t N = default_order)
{
    return diag_dependence_verdict(phi_diff_quotient(p, meixner_R(p, 2 * N + 2), N));
}

inline bool phi_diff_quotient_check(const MeixnerParams& p, std::size_t N = default_order)
{
    return phi_diff_quotient_verdict(p, N).pass;
}

/// Some(a, b) iff the standard Jacobi parameters are stationary from alpha_1 and omega_2 on.
/// Only listed parameters up to the termination level are compared.
inline std::optional<MeixnerParams> classify_mrm(const JacobiParams& J)
{
    if (!J.has_alpha(0) || J.alpha(0) != 0 || J.omega(1) != 1)
        throw precondition_error("standardize first (need alpha_0 = 0 and omega_1 = 1)");
    const Rational omega2 = J.omega(2);
    const std::size_t k = J.termination_level().value_or(std::numeric_limits<std::size_t>::max());
    // omega_2 = 0: the law sits on two points and only alpha_1 still matters
    if (k == 2) return MeixnerParams(J.alpha(1), Rational(-1));
    const Rational alpha1 = J.alpha(1);
    const auto& ha = J.head_alpha();
    const auto& ho = J.head_omega();
    for (std::size_t n = 1; n < ha.size() && n < k; ++n)
        if (ha[n] != alpha1) return std::nullopt;
    for (std::size_t n = 2; n <= ho.size() && n <= k; ++n)
        if (ho[n - 1] != omega2) return std::nullopt;
    if (const auto& tail = J.tail()) {
        if (ha.size() < k && tail->alpha != alpha1) return std::nullopt;
        if (ho.size() + 1 <= k && tail->omega != omega2) return std::nullopt;
    }
    return MeixnerParams(alpha1, omega2 - 1);
}

/// rho(z) = z / (1 + s z + t z^2).
struct RhoCandidate {
    Rational s;
    Rational t;
};

inline TruncSeries rho_family(const RhoCandidate& c, std::size_t N) { return detail::z_over_quadratic(c.s, c.t, N); }

/// Distinct rationals p/q with |p/q| <= bound and 1 <= q <= max_den, ascending.
inline std::vector<Rational> rational_grid(long bound, long max_den)
{
    std::vector<Rational> v;
    for (long q = 1; q <= max_den; ++q)
        for (long p = -bound * q; p <= bound * q; ++p) {
            Rational r(p, q);
            r.canonicalize();
            v.push_back(r);
        }
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

struct RhoSearchResult {
    std::optional<RhoCandidate> passing; // first passing candidate in (s, t) order
    std::size_t candidates = 0;
};

/// Exhaustive search over rho_family(s, t) for s, t in `grid`, testing akk_check at order N.
///
/// Q_0..Q_k and their Gram block do not change when the order grows, so each candidate is
/// screened at orders 2, 4, ... before the full order.
inline RhoSearchResult search_rho(const MomentSeq& m, std::size_t N, const std::vector<Rational>& grid,
                                  unsigned threads = 0)
{
    if (m.order() < 2 * N) throw insufficient_data("rho search at order " + std::to_string(N) + " needs " +
                                                   std::to_string(2 * N + 1) + " moments");
    std::vector<RhoCandidate> cands;
    cands.reserve(grid.size() * grid.size());
    for (const auto& s : grid)
        for (const auto& t : grid) cands.push_back({s, t});

    auto passes = [&](const RhoCandidate& c) {
        for (std::size_t k = std::min<std::size_t>(2, N);; k = std::min(N, 2 * k)) {
            if (!akk_check(m, build_psi(m, rho_family(c, k), k))) return false;
            if (k == N) return true;
        }
    };

    if (threads == 0) threads = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    const std::size_t chunk = (cands.size() + threads - 1) / threads;
    std::vector<std::future<std::optional<std::size_t>>> jobs;
    for (std::size_t lo = 0; lo < cands.size(); lo += chunk) {
        const std::size_t hi = std::min(cands.size(), lo + chunk);
        jobs.push_back(std::async(std::launch::async, [&, lo, hi]() -> std::optional<std::size_t> {
            for (std::size_t i = lo; i < hi; ++i)
                if (passes(cands[i])) return i;
            return std::nullopt;
        }));
    }
    std::optional<std::size_t> best;
    for (auto& j : jobs)
        if (auto r = j.get(); r && (!best || *r < *best)) best = r;

    RhoSearchResult res;
    res.candidates = cands.size();
    if (best) res.passing = cands[*best];
    return res;
}

} // namespace fmx
