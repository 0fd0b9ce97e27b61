#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "fmx/rational.hpp"

namespace fmx {

/// Dense univariate polynomial with exact rational coefficients, lowest degree first.
/// Trailing zeros are stripped, so the zero polynomial has no coefficients.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }
    static Poly x() { return Poly(std::vector<Rational>{Rational(0), Rational(1)}); }
    /// c * x^k
    static Poly monomial(std::size_t k, const Rational& c)
    {
        std::vector<Rational> v(k + 1);
        v[k] = c;
        return Poly(std::move(v));
    }

    /// -1 for the zero polynomial.
    [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return c_.empty(); }
    [[nodiscard]] const std::vector<Rational>& coeffs() const { return c_; }

    /// Coefficient of x^k (zero beyond the degree).
    [[nodiscard]] Rational operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
    [[nodiscard]] const Rational& leading() const
    {
        if (c_.empty()) throw precondition_error("zero polynomial has no leading coefficient");
        return c_.back();
    }

    friend bool operator==(const Poly&, const Poly&) = default;

    friend Poly operator+(const Poly& p, const Poly& q)
    {
        std::vector<Rational> r(std::max(p.c_.size(), q.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = p[i] + q[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& p) { return p * Rational(-1); }
    friend Poly operator-(const Poly& p, const Poly& q) { return p + (-q); }

    friend Poly operator*(const Poly& p, const Rational& s)
    {
        if (s == 0) return {};
        std::vector<Rational> r(p.c_);
        for (auto& c : r) c *= s;
        return Poly(std::move(r));
    }
    friend Poly operator*(const Rational& s, const Poly& p) { return p * s; }

    friend Poly operator*(const Poly& p, const Poly& q)
    {
        if (p.is_zero() || q.is_zero()) return {};
        std::vector<Rational> r(p.c_.size() + q.c_.size() - 1);
        for (std::size_t i = 0; i < p.c_.size(); ++i) {
            if (p.c_[i] == 0) continue;
            for (std::size_t j = 0; j < q.c_.size(); ++j) r[i + j] += p.c_[i] * q.c_[j];
        }
        return Poly(std::move(r));
    }

    /// Multiplication by x.
    [[nodiscard]] Poly times_x() const
    {
        if (is_zero()) return {};
        std::vector<Rational> r(c_.size() + 1);
        std::copy(c_.begin(), c_.end(), r.begin() + 1);
        return Poly(std::move(r));
    }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

} // namespace fmx
