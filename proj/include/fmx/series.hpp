#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fmx/error.hpp"
#include "fmx/rational.hpp"
#include "fmx/verdict.hpp"

namespace fmx {

inline constexpr std::size_t default_order = 16;

/// Truncated formal power series c_0 + c_1 z + ... + c_N z^N + O(z^{N+1}).
///
/// Values are immutable once built; every operation returns a new series.
/// Binary arithmetic requires equal orders (use truncated() to align).
class TruncSeries {
public:
    explicit TruncSeries(std::size_t order = default_order) : c_(order + 1) {}

    /// Coefficients beyond `order` are an error; missing ones are zero.
    TruncSeries(std::size_t order, std::vector<Rational> coeffs) : c_(std::move(coeffs))
    {
        if (c_.size() > order + 1)
            throw precondition_error("TruncSeries: " + std::to_string(c_.size()) +
                                     " coefficients exceed order " + std::to_string(order));
        c_.resize(order + 1);
    }

    static TruncSeries constant(std::size_t order, const Rational& c) { return {order, {c}}; }
    /// The series z (z itself when order >= 1, zero at order 0).
    static TruncSeries identity(std::size_t order)
    {
        TruncSeries s(order);
        if (order >= 1) s.c_[1] = 1;
        return s;
    }

    [[nodiscard]] std::size_t order() const { return c_.size() - 1; }
    [[nodiscard]] const Rational& operator[](std::size_t k) const { return c_.at(k); }
    [[nodiscard]] std::span<const Rational> coeffs() const { return c_; }

    [[nodiscard]] TruncSeries truncated(std::size_t order) const
    {
        if (order > this->order())
            throw insufficient_data("cannot extend a series of order " + std::to_string(this->order()) +
                                    " to order " + std::to_string(order));
        return {order, std::vector<Rational>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(order) + 1)};
    }

    /// z * f; the result is known to one more order.
    [[nodiscard]] TruncSeries times_z() const
    {
        std::vector<Rational> r(c_.size() + 1);
        std::copy(c_.begin(), c_.end(), r.begin() + 1);
        return {order() + 1, std::move(r)};
    }

    /// f / z for f with vanishing constant term; the result loses one order.
    [[nodiscard]] TruncSeries divided_by_z() const
    {
        if (c_[0] != 0) throw precondition_error("divided_by_z: nonzero constant term");
        if (order() == 0) throw insufficient_data("divided_by_z: series of order 0");
        return {order() - 1, std::vector<Rational>(c_.begin() + 1, c_.end())};
    }

    friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

    friend TruncSeries operator+(const TruncSeries& f, const TruncSeries& g)
    {
        check_orders(f, g, "add");
        TruncSeries r(f.order());
        for (std::size_t k = 0; k <= f.order(); ++k) r.c_[k] = f.c_[k] + g.c_[k];
        return r;
    }
    friend TruncSeries operator-(const TruncSeries& f, const TruncSeries& g)
    {
        check_orders(f, g, "sub");
        TruncSeries r(f.order());
        for (std::size_t k = 0; k <= f.order(); ++k) r.c_[k] = f.c_[k] - g.c_[k];
        return r;
    }
    friend TruncSeries operator-(const TruncSeries& f)
    {
        TruncSeries r(f.order());
        for (std::size_t k = 0; k <= f.order(); ++k) r.c_[k] = -f.c_[k];
        return r;
    }
    friend TruncSeries operator*(const TruncSeries& f, const Rational& s)
    {
        TruncSeries r(f.order());
        for (std::size_t k = 0; k <= f.order(); ++k) r.c_[k] = f.c_[k] * s;
        return r;
    }
    friend TruncSeries operator*(const Rational& s, const TruncSeries& f) { return f * s; }

    friend TruncSeries operator*(const TruncSeries& f, const TruncSeries& g)
    {
        check_orders(f, g, "mul");
        const std::size_t n = f.order();
        TruncSeries r(n);
        for (std::size_t i = 0; i <= n; ++i) {
            if (f.c_[i] == 0) continue;
            for (std::size_t j = 0; i + j <= n; ++j) r.c_[i + j] += f.c_[i] * g.c_[j];
        }
        return r;
    }

private:
    static void check_orders(const TruncSeries& f, const TruncSeries& g, const char* op)
    {
        if (f.order() != g.order())
            throw order_mismatch(std::string(op) + ": order mismatch (" + std::to_string(f.order()) + " vs " +
                                 std::to_string(g.order()) + ")");
    }

    std::vector<Rational> c_;
};

enum class ArithOp { add, sub, mul };

inline TruncSeries arith(ArithOp op, const TruncSeries& f, const TruncSeries& g)
{
    switch (op) {
    case ArithOp::add: return f + g;
    case ArithOp::sub: return f - g;
    case ArithOp::mul: return f * g;
    }
    throw precondition_error("arith: unknown operation");
}

/// Multiplicative inverse; requires a nonzero constant term.
inline TruncSeries reciprocal(const TruncSeries& f)
{
    if (f[0] == 0) throw precondition_error("not invertible as a power series");
    const std::size_t n = f.order();
    std::vector<Rational> g(n + 1);
    const Rational inv0 = 1 / f[0];
    g[0] = inv0;
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc;
        for (std::size_t i = 1; i <= k; ++i) acc += f[i] * g[k - i];
        g[k] = -acc * inv0;
    }
    return {n, std::move(g)};
}

/// f / g.
inline TruncSeries divide(const TruncSeries& f, const TruncSeries& g) { return f * reciprocal(g); }

/// f^k, k >= 0.
inline TruncSeries power(const TruncSeries& f, std::size_t k)
{
    TruncSeries r = TruncSeries::constant(f.order(), 1);
    for (std::size_t i = 0; i < k; ++i) r = r * f;
    return r;
}

/// f(g(z)) for g(0) = 0, truncated at min(f.order, g.order).
inline TruncSeries compose(const TruncSeries& f, const TruncSeries& g)
{
    if (g[0] != 0) throw precondition_error("compose: inner series has nonzero constant term");
    const std::size_t n = std::min(f.order(), g.order());
    const TruncSeries inner = g.truncated(n);
    // Horner; terms beyond z^n of f only feed O(z^{n+1}).
    TruncSeries r = TruncSeries::constant(n, f[n]);
    for (std::size_t k = n; k-- > 0;) r = r * inner + TruncSeries::constant(n, f[k]);
    return r;
}

/// Compositional inverse h of f (f(h(z)) = h(f(z)) = z), for f = c_1 z + ..., c_1 != 0.
///
/// Coefficients are fixed one at a time: [z^k] f(h) = c_1 h_k + sum_{j>=2} c_j [z^k] h^j,
/// and [z^k] h^j with j >= 2 only involves h_1 .. h_{k-1}.
inline TruncSeries revert(const TruncSeries& f)
{
    const std::size_t n = f.order();
    if (n == 0 || f[0] != 0 || f[1] == 0) throw precondition_error("not invertible under composition");
    // pow[j][k] = [z^k] h^j
    std::vector<std::vector<Rational>> pow(n + 1, std::vector<Rational>(n + 1));
    std::vector<Rational> h(n + 1);
    const Rational inv1 = 1 / f[1];
    h[1] = inv1;
    pow[1][1] = inv1;
    for (std::size_t k = 2; k <= n; ++k) {
        Rational rest;
        for (std::size_t j = 2; j <= k; ++j) {
            Rational acc;
            for (std::size_t i = 1; i + j - 1 <= k; ++i) acc += h[i] * pow[j - 1][k - i];
            pow[j][k] = acc;
            rest += f[j] * acc;
        }
        h[k] = -rest * inv1;
        pow[1][k] = h[k];
    }
    return {n, std::move(h)};
}

/// Exact comparison with a witness at the first differing coefficient.
inline Verdict compare_series(const TruncSeries& expected, const TruncSeries& actual)
{
    const std::size_t n = std::min(expected.order(), actual.order());
    for (std::size_t k = 0; k <= n; ++k)
        if (expected[k] != actual[k]) return Verdict::fail({{k}, expected[k], actual[k]});
    return Verdict::ok();
}

} // namespace fmx
