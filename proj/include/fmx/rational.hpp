#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "fmx/error.hpp"

namespace fmx {

// mpq_class keeps numerator/denominator canonical (gcd 1, positive
// denominator) after every arithmetic operation.
using Rational = mpq_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "p" or "p/q" (optional leading sign on p, q > 0 decimal digits).
inline Rational parse_rational(std::string_view text)
{
    auto digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    std::string_view body = text;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
    if (!digits(num) || (slash != std::string_view::npos && !digits(den)))
        throw parse_error("not a rational number: \"" + std::string(text) + "\"");

    mpz_class n(std::string(num), 10);
    if (text.front() == '-') n = -n;
    mpz_class d(1);
    if (slash != std::string_view::npos) {
        d = mpz_class(std::string(den), 10);
        if (d == 0) throw parse_error("zero denominator in \"" + std::string(text) + "\"");
    }
    Rational q(n, d);
    q.canonicalize();
    return q;
}

namespace literals {
inline Rational operator""_q(const char* s, std::size_t n) { return parse_rational({s, n}); }
} // namespace literals

} // namespace fmx
