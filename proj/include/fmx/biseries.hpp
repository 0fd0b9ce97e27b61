#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fmx/error.hpp"
#include "fmx/rational.hpp"
#include "fmx/series.hpp"
#include "fmx/verdict.hpp"

namespace fmx {

/// Truncated bivariate series sum c_ij z^i v^j, 0 <= i,j <= N, stored densely.
/// Truncation is per variable (modulo z^{N+1} and v^{N+1}).
class BiTruncSeries {
public:
    explicit BiTruncSeries(std::size_t order = default_order) : n_(order), c_((order + 1) * (order + 1)) {}

    [[nodiscard]] std::size_t order() const { return n_; }
    [[nodiscard]] const Rational& operator()(std::size_t i, std::size_t j) const { return c_.at(idx(i, j)); }
    Rational& operator()(std::size_t i, std::size_t j) { return c_.at(idx(i, j)); }

    /// f(z) viewed as a function of (z, v).
    static BiTruncSeries from_z(const TruncSeries& f)
    {
        BiTruncSeries b(f.order());
        for (std::size_t i = 0; i <= f.order(); ++i) b(i, 0) = f[i];
        return b;
    }
    /// f(v) viewed as a function of (z, v).
    static BiTruncSeries from_v(const TruncSeries& f)
    {
        BiTruncSeries b(f.order());
        for (std::size_t j = 0; j <= f.order(); ++j) b(0, j) = f[j];
        return b;
    }
    /// f(zv).
    static BiTruncSeries from_product(const TruncSeries& f)
    {
        BiTruncSeries b(f.order());
        for (std::size_t k = 0; k <= f.order(); ++k) b(k, k) = f[k];
        return b;
    }

    /// The diagonal c_kk as a univariate series in the product zv.
    [[nodiscard]] TruncSeries diagonal() const
    {
        std::vector<Rational> d(n_ + 1);
        for (std::size_t k = 0; k <= n_; ++k) d[k] = (*this)(k, k);
        return {n_, std::move(d)};
    }

    friend bool operator==(const BiTruncSeries&, const BiTruncSeries&) = default;

    friend BiTruncSeries operator+(const BiTruncSeries& a, const BiTruncSeries& b)
    {
        check_orders(a, b);
        BiTruncSeries r(a.n_);
        for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] = a.c_[k] + b.c_[k];
        return r;
    }
    friend BiTruncSeries operator-(const BiTruncSeries& a, const BiTruncSeries& b)
    {
        check_orders(a, b);
        BiTruncSeries r(a.n_);
        for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] = a.c_[k] - b.c_[k];
        return r;
    }
    friend BiTruncSeries operator*(const BiTruncSeries& a, const BiTruncSeries& b)
    {
        check_orders(a, b);
        const std::size_t n = a.n_;
        BiTruncSeries r(n);
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t j = 0; j <= n; ++j) {
                const Rational& aij = a(i, j);
                if (aij == 0) continue;
                for (std::size_t k = 0; i + k <= n; ++k)
                    for (std::size_t l = 0; j + l <= n; ++l) r(i + k, j + l) += aij * b(k, l);
            }
        return r;
    }

private:
    [[nodiscard]] std::size_t idx(std::size_t i, std::size_t j) const
    {
        if (i > n_ || j > n_) throw std::out_of_range("BiTruncSeries index beyond order");
        return i * (n_ + 1) + j;
    }
    static void check_orders(const BiTruncSeries& a, const BiTruncSeries& b)
    {
        if (a.n_ != b.n_)
            throw order_mismatch("bivariate order mismatch (" + std::to_string(a.n_) + " vs " +
                                 std::to_string(b.n_) + ")");
    }

    std::size_t n_;
    std::vector<Rational> c_;
};

/// Multiplicative inverse of a bivariate series with nonzero constant term.
inline BiTruncSeries reciprocal(const BiTruncSeries& d)
{
    if (d(0, 0) == 0) throw precondition_error("not invertible as a power series");
    const std::size_t n = d.order();
    const Rational inv = 1 / d(0, 0);
    BiTruncSeries c(n);
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= n; ++j) {
            if (i == 0 && j == 0) {
                c(0, 0) = inv;
                continue;
            }
            Rational acc;
            for (std::size_t k = 0; k <= i; ++k)
                for (std::size_t l = 0; l <= j; ++l) {
                    if (k == 0 && l == 0) continue;
                    if (d(k, l) != 0) acc += d(k, l) * c(i - k, j - l);
                }
            c(i, j) = -acc * inv;
        }
    return c;
}

/// First nonzero off-diagonal coefficient, scanning by increasing i + j.
inline std::optional<std::pair<std::size_t, std::size_t>> first_off_diagonal(const BiTruncSeries& b)
{
    const std::size_t n = b.order();
    for (std::size_t s = 1; s <= 2 * n; ++s)
        for (std::size_t i = (s > n ? s - n : 0); i <= std::min(s, n); ++i) {
            const std::size_t j = s - i;
            if (i != j && b(i, j) != 0) return std::pair{i, j};
        }
    return std::nullopt;
}

/// A function of (z, v) depends only on zv iff every off-diagonal coefficient vanishes.
inline bool is_diag_dependent(const BiTruncSeries& b) { return !first_off_diagonal(b).has_value(); }

/// is_diag_dependent with the offending coefficient as witness.
inline Verdict diag_dependence_verdict(const BiTruncSeries& b)
{
    if (auto ij = first_off_diagonal(b)) return Verdict::fail({{ij->first, ij->second}, Rational(0), b(ij->first, ij->second)});
    return Verdict::ok();
}

} // namespace fmx
