#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fmx/error.hpp"
#include "fmx/poly.hpp"
#include "fmx/rational.hpp"

namespace fmx {

/// Constant continuation of the Jacobi parameters beyond the heads.
struct JacobiTail {
    Rational alpha;
    Rational omega;
    friend bool operator==(const JacobiTail&, const JacobiTail&) = default;
};

/// Jacobi-Szego parameters of the monic three-term recurrence
///   x P_n = P_{n+1} + alpha_n P_n + omega_n P_{n-1},   omega_0 = 1 (implicit).
///
/// head_alpha lists alpha_0, alpha_1, ...; head_omega lists omega_1, omega_2, ....
/// With a tail, every parameter past a head equals the tail constant. Without one,
/// the heads describe a finite Jacobi matrix: omega beyond head_omega is 0, and an
/// alpha beyond head_alpha is unknown (asking for it throws insufficient_data).
class JacobiParams {
public:
    JacobiParams(std::vector<Rational> head_alpha, std::vector<Rational> head_omega,
                 std::optional<JacobiTail> tail = std::nullopt)
        : alpha_(std::move(head_alpha)), omega_(std::move(head_omega)), tail_(std::move(tail))
    {
        for (std::size_t k = 0; k < omega_.size(); ++k)
            if (omega_[k] < 0) throw not_a_measure("omega_" + std::to_string(k + 1) + " is negative");
        if (tail_ && tail_->omega < 0) throw not_a_measure("tail omega is negative");
    }

    [[nodiscard]] const std::vector<Rational>& head_alpha() const { return alpha_; }
    [[nodiscard]] const std::vector<Rational>& head_omega() const { return omega_; }
    [[nodiscard]] const std::optional<JacobiTail>& tail() const { return tail_; }

    [[nodiscard]] bool has_alpha(std::size_t n) const { return n < alpha_.size() || tail_.has_value(); }

    [[nodiscard]] const Rational& alpha(std::size_t n) const
    {
        if (n < alpha_.size()) return alpha_[n];
        if (tail_) return tail_->alpha;
        throw insufficient_data("alpha_" + std::to_string(n) + " is not available");
    }

    /// omega_n for n >= 1.
    [[nodiscard]] Rational omega(std::size_t n) const
    {
        if (n == 0) return Rational(1);
        if (n <= omega_.size()) return omega_[n - 1];
        if (tail_) return tail_->omega;
        return Rational(0);
    }

    /// Smallest k >= 1 with omega_k = 0 (the measure then has exactly k atoms); nullopt if none.
    [[nodiscard]] std::optional<std::size_t> termination_level() const
    {
        for (std::size_t k = 0; k < omega_.size(); ++k)
            if (omega_[k] == 0) return k + 1;
        if (!tail_ || tail_->omega == 0) return omega_.size() + 1;
        return std::nullopt;
    }

    /// Largest N for which jacobi_to_moments(*this, N) has every parameter it needs; nullopt if unbounded.
    [[nodiscard]] std::optional<std::size_t> moment_capacity() const
    {
        if (tail_) return std::nullopt;
        auto term = termination_level();
        // live levels are 0 .. term-1; alpha up to there suffices for every order
        if (term && *term <= alpha_.size()) return std::nullopt;
        return 2 * alpha_.size();
    }

    friend bool operator==(const JacobiParams&, const JacobiParams&) = default;

private:
    std::vector<Rational> alpha_;
    std::vector<Rational> omega_;
    std::optional<JacobiTail> tail_;
};

/// Moment sequence m_0 = 1, m_1, ..., m_N of a probability measure.
class MomentSeq {
public:
    explicit MomentSeq(std::vector<Rational> moments) : m_(std::move(moments))
    {
        if (m_.empty() || m_[0] != 1) throw precondition_error("moment sequence must start with m_0 = 1");
    }

    [[nodiscard]] std::size_t order() const { return m_.size() - 1; }
    [[nodiscard]] const Rational& operator[](std::size_t n) const
    {
        if (n >= m_.size())
            throw insufficient_data("moment m_" + std::to_string(n) + " requested, only " +
                                    std::to_string(m_.size()) + " moments available");
        return m_[n];
    }
    [[nodiscard]] const std::vector<Rational>& values() const { return m_; }

    [[nodiscard]] MomentSeq truncated(std::size_t order) const
    {
        if (order > this->order()) (void)(*this)[order];
        return MomentSeq(std::vector<Rational>(m_.begin(), m_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
    }

    /// The moment functional E[p(X)] = sum_k p_k m_k.
    [[nodiscard]] Rational expect(const Poly& p) const
    {
        if (p.degree() > static_cast<int>(order()))
            throw insufficient_data("degree " + std::to_string(p.degree()) + " exceeds the " +
                                    std::to_string(order()) + " available moments");
        Rational acc;
        for (std::size_t k = 0; k < p.coeffs().size(); ++k) acc += p.coeffs()[k] * m_[k];
        return acc;
    }

    friend bool operator==(const MomentSeq&, const MomentSeq&) = default;

private:
    std::vector<Rational> m_;
};

/// Monic orthogonal polynomials P_0 .. P_N and their squared norms.
struct OrthoBasis {
    std::vector<Poly> polys;
    std::vector<Rational> norms;
};

using RationalMatrix = std::vector<std::vector<Rational>>;

/// m_0 .. m_N, where m_n is the (0,0) entry of T^n for the tridiagonal operator
/// T e_k = e_{k+1} + alpha_k e_k + omega_k e_{k-1}.
///
/// Levels deeper than N/2 cannot return to e_0 within N steps and are dropped, as
/// are levels at or past a vanishing omega.
inline MomentSeq jacobi_to_moments(const JacobiParams& J, std::size_t N)
{
    std::size_t depth = N / 2;
    if (auto term = J.termination_level()) depth = std::min(depth, *term - 1);
    // the diagonal at level j only matters while a path can still come back: 2j + 1 <= N
    std::vector<Rational> diag(depth + 1), off(depth + 1);
    for (std::size_t j = 0; j <= depth; ++j) {
        if (2 * j + 1 <= N) diag[j] = J.alpha(j);
        if (j >= 1) off[j] = J.omega(j);
    }

    std::vector<Rational> v(depth + 1), next(depth + 1);
    v[0] = 1;
    std::vector<Rational> m(N + 1);
    m[0] = 1;
    for (std::size_t n = 1; n <= N; ++n) {
        for (std::size_t j = 0; j <= depth; ++j) {
            Rational acc = diag[j] * v[j];
            if (j >= 1) acc += v[j - 1];
            if (j + 1 <= depth) acc += off[j + 1] * v[j + 1];
            next[j] = acc;
        }
        std::swap(v, next);
        m[n] = v[0];
    }
    return MomentSeq(std::move(m));
}

/// Result of inverting moments back to Jacobi parameters.
struct JacobiRecovery {
    JacobiParams params;
    /// Level k at which omega_k = 0 was found (measure supported on k points).
    std::optional<std::size_t> terminated_at;
};

/// Stieltjes procedure: build P_0, P_1, ... against the moment functional and read
/// alpha_k = E[x P_k^2] / E[P_k^2], omega_k = E[P_k^2] / E[P_{k-1}^2].
///
/// N moments determine alpha_0 .. alpha_{(N-1)/2} and omega_1 .. omega_{N/2}.
inline JacobiRecovery moments_to_jacobi(const MomentSeq& m)
{
    const std::size_t N = m.order();
    std::vector<Rational> alpha, omega;
    Poly prev;                        // P_{k-1}
    Poly cur = Poly::constant(1);     // P_k
    Rational prev_norm(1);            // E[P_{k-1}^2]
    for (std::size_t k = 0;; ++k) {
        if (2 * k > N) break;
        const Poly sq = cur * cur;
        const Rational norm = m.expect(sq);
        if (k >= 1) {
            const Rational w = norm / prev_norm;
            if (w < 0)
                throw not_a_measure("not a moment sequence of a positive measure (omega_" + std::to_string(k) +
                                    " = " + to_string(w) + ")");
            omega.push_back(w);
            if (w == 0) return {JacobiParams(std::move(alpha), std::move(omega)), k};
        }
        if (2 * k + 1 > N) break;
        const Rational a = m.expect(sq.times_x()) / norm;
        alpha.push_back(a);
        Poly nxt = cur.times_x() - a * cur;
        if (k >= 1) nxt = nxt - omega.back() * prev;
        prev = std::move(cur);
        cur = std::move(nxt);
        prev_norm = norm;
    }
    return {JacobiParams(std::move(alpha), std::move(omega)), std::nullopt};
}

/// P_0 .. P_N by the three-term recurrence, with norms omega_1 * ... * omega_n.
inline OrthoBasis ortho_polys(const JacobiParams& J, std::size_t N)
{
    OrthoBasis b;
    b.polys.reserve(N + 1);
    b.norms.reserve(N + 1);
    b.polys.push_back(Poly::constant(1));
    b.norms.emplace_back(1);
    for (std::size_t n = 1; n <= N; ++n) {
        const Poly& p = b.polys[n - 1];
        Poly next = p.times_x() - J.alpha(n - 1) * p;
        if (n >= 2) next = next - J.omega(n - 1) * b.polys[n - 2];
        b.polys.push_back(std::move(next));
        b.norms.push_back(b.norms.back() * J.omega(n));
    }
    return b;
}

/// Entry (i, j) is E[Q_i(X) Q_j(X)].
inline RationalMatrix gram(const std::vector<Poly>& polys, const MomentSeq& m)
{
    const std::size_t n = polys.size();
    RationalMatrix g(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            g[i][j] = m.expect(polys[i] * polys[j]);
            g[j][i] = g[i][j];
        }
    return g;
}

} // namespace fmx
