#pragma once

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hla {

// Exact rationals. GMP keeps every mpq result in lowest terms with a
// positive denominator, so equality is structural.
using Scalar = mpq_class;

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

inline bool is_canonical(const Scalar& s)
{
    if (sgn(s.get_den()) <= 0) return false;
    mpz_class g;
    mpz_class num = abs(s.get_num());
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), s.get_den().get_mpz_t());
    return g == 1;
}

inline std::string to_string(const Scalar& s) { return s.get_str(); }

/// Parses `[+-]digits[/digits]`. Denominator must be positive.
inline bool try_parse_scalar(std::string_view text, Scalar& out)
{
    std::size_t pos = 0;
    std::string num;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        if (text[pos] == '-') num.push_back('-');
        ++pos;
    }
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) num.push_back(text[pos++]);
    if (pos == start) return false;
    std::string den = "1";
    if (pos < text.size()) {
        if (text[pos] != '/') return false;
        ++pos;
        den.clear();
        std::size_t dstart = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) den.push_back(text[pos++]);
        if (pos == dstart || pos != text.size()) return false;
    }
    mpz_class n(num, 10);
    mpz_class d(den, 10);
    if (d == 0) return false;
    out = Scalar(n, d);
    out.canonicalize();
    return true;
}

inline Scalar parse_scalar(std::string_view text)
{
    Scalar s;
    if (!try_parse_scalar(text, s)) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    return s;
}

} // namespace hla
