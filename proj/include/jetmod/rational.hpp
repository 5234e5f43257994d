#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace jetmod {

/// Exact rational number. GMP keeps every value canonical: reduced, with a
/// positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Base class for every error raised by the library.
class JetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses an integer or "p/q" string. Only the canonical spelling is
/// accepted: "2/4", "1/1", "-0", "+3", "3/-4" and whitespace are rejected.
Rational parse_rational(std::string_view text);

/// Canonical spelling: "p/q" with q > 1, or a plain integer.
std::string to_string(const Rational& q);

/// Decimal rendering with `digits` digits after the point, rounded toward
/// zero. Presentation only.
std::string to_decimal(const Rational& q, int digits);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// True when q is the square of a rational; `root` receives the
/// non-negative square root.
bool rational_sqrt(const Rational& q, Rational& root);

} // namespace jetmod
