#pragma once

// Transform calculus on truncated series.
//
// Every series "at infinity" is written in w = 1/z:
//   G~(w) := G(1/w) = sum_n m_n w^{n+1},
//   R(w)   = K(w) - 1/w = sum_{n>=1} kappa_n w^{n-1},   phi(y) = R(1/y).
// K and phi are never built as Laurent objects; identities involving them are
// restated through R and composition.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "fmx/error.hpp"
#include "fmx/jacobi.hpp"
#include "fmx/rational.hpp"
#include "fmx/series.hpp"
#include "fmx/verdict.hpp"

namespace fmx {

/// G~(w) = sum m_n w^{n+1} truncated at w^N (so it carries m_0 .. m_{N-1}).
class CauchyAtInfinity {
public:
    explicit CauchyAtInfinity(TruncSeries series) : s_(std::move(series))
    {
        if (s_.order() < 1 || s_[0] != 0 || s_[1] != 1)
            throw precondition_error("Cauchy transform at infinity must start w + O(w^2)");
    }

    [[nodiscard]] std::size_t order() const { return s_.order(); }
    [[nodiscard]] const TruncSeries& series() const { return s_; }
    [[nodiscard]] const Rational& moment(std::size_t n) const { return s_[n + 1]; }
    [[nodiscard]] MomentSeq moments() const
    {
        std::vector<Rational> m(s_.coeffs().begin() + 1, s_.coeffs().end());
        return MomentSeq(std::move(m));
    }

    friend bool operator==(const CauchyAtInfinity&, const CauchyAtInfinity&) = default;

private:
    TruncSeries s_;
};

/// Free cumulants kappa_1 .. kappa_N.
class CumulantSeries {
public:
    CumulantSeries() = default;
    explicit CumulantSeries(std::vector<Rational> kappas) : k_(std::move(kappas)) {}

    /// From R(w) = sum kappa_n w^{n-1} of order N - 1.
    static CumulantSeries from_series(const TruncSeries& R)
    {
        return CumulantSeries(std::vector<Rational>(R.coeffs().begin(), R.coeffs().end()));
    }

    [[nodiscard]] std::size_t size() const { return k_.size(); }
    [[nodiscard]] const std::vector<Rational>& kappas() const { return k_; }
    /// kappa_n, n >= 1.
    [[nodiscard]] const Rational& kappa(std::size_t n) const
    {
        if (n == 0 || n > k_.size())
            throw insufficient_data("kappa_" + std::to_string(n) + " is not available");
        return k_[n - 1];
    }

    /// R(w) as a series of order size() - 1.
    [[nodiscard]] TruncSeries as_series() const
    {
        if (k_.empty()) throw insufficient_data("empty cumulant series");
        return {k_.size() - 1, k_};
    }

    friend bool operator==(const CumulantSeries&, const CumulantSeries&) = default;

private:
    std::vector<Rational> k_;
};

inline CauchyAtInfinity moments_to_G(const MomentSeq& m)
{
    std::vector<Rational> c(m.order() + 2);
    for (std::size_t n = 0; n <= m.order(); ++n) c[n + 1] = m[n];
    return CauchyAtInfinity(TruncSeries(m.order() + 1, std::move(c)));
}

/// kappa_1 .. kappa_N from m_0 .. m_N.
///
/// H := revert(G~) satisfies G(1/H(z)) = z, so K = 1/H. Writing H = z h with h(0) = 1,
/// R = K - 1/z = (1/h - 1) / z.
inline CumulantSeries moments_to_R(const MomentSeq& m)
{
    const std::size_t N = m.order();
    if (N == 0) return CumulantSeries{};
    const TruncSeries H = revert(moments_to_G(m).series());
    const TruncSeries h = H.divided_by_z();
    const TruncSeries excess = reciprocal(h) - TruncSeries::constant(h.order(), 1);
    return CumulantSeries::from_series(excess.divided_by_z());
}

/// m_0 .. m_N from kappa_1 .. kappa_N via the fixed point G~ = w / (1 - w R(G~)).
/// Each sweep fixes one more coefficient.
inline MomentSeq R_to_moments(const CumulantSeries& R, std::size_t N)
{
    if (R.size() < N)
        throw insufficient_data(std::to_string(N) + " moments need " + std::to_string(N) + " cumulants, got " +
                                std::to_string(R.size()));
    if (N == 0) return MomentSeq({Rational(1)});
    const TruncSeries Rs = TruncSeries(N - 1, std::vector<Rational>(R.kappas().begin(), R.kappas().begin() + static_cast<std::ptrdiff_t>(N)));
    const TruncSeries one = TruncSeries::constant(N, 1);
    TruncSeries G = TruncSeries::identity(N + 1);
    for (std::size_t sweep = 0; sweep <= N; ++sweep) {
        const TruncSeries wRG = compose(Rs, G.truncated(N - 1)).times_z(); // order N
        G = reciprocal(one - wRG).times_z();
    }
    return CauchyAtInfinity(G).moments();
}

/// Exact check of G(y) (y - R(G(y))) = 1, written in w as
/// (G~(w)/w) (1 - w R(G~(w))) = 1 + O(w^{N+1}).
inline Verdict G_functional_eq_verdict(const MomentSeq& m, const CumulantSeries& R)
{
    const std::size_t N = m.order();
    if (R.size() != N)
        throw order_mismatch("functional equation: " + std::to_string(N) + " moments vs " +
                             std::to_string(R.size()) + " cumulants");
    const TruncSeries Gw = moments_to_G(m).series(); // order N + 1
    const TruncSeries G_over_w = Gw.divided_by_z();  // order N
    TruncSeries factor = TruncSeries::constant(N, 1);
    if (N >= 1) factor = factor - compose(R.as_series(), Gw.truncated(N - 1)).times_z();
    return compare_series(TruncSeries::constant(N, 1), G_over_w * factor);
}

inline bool check_G_functional_eq(const MomentSeq& m, const CumulantSeries& R)
{
    return G_functional_eq_verdict(m, R).pass;
}

} // namespace fmx
