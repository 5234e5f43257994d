#include "jetmod/rational.hpp"

#include <cctype>

namespace jetmod {

namespace {

bool is_canonical_integer(std::string_view s, bool allow_sign)
{
    if (s.empty()) return false;
    std::size_t pos = 0;
    if (s[0] == '-') {
        if (!allow_sign) return false;
        pos = 1;
    }
    if (pos == s.size()) return false;
    for (std::size_t i = pos; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    // No leading zeros, and no "-0".
    if (s[pos] == '0' && (s.size() - pos > 1 || pos == 1)) return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    if (!is_canonical_integer(num, true))
        throw JetError("malformed rational '" + std::string(text) + "'");
    Rational q;
    if (slash == std::string_view::npos) {
        q = Rational(Integer(std::string(num)));
        return q;
    }
    const auto den = text.substr(slash + 1);
    if (!is_canonical_integer(den, false) || den == "0")
        throw JetError("malformed rational '" + std::string(text) + "'");
    q = Rational(Integer(std::string(num)), Integer(std::string(den)));
    const Rational raw = q;
    q.canonicalize();
    if (q.get_den() == 1 || q.get_num() != raw.get_num() || q.get_den() != raw.get_den())
        throw JetError("non-canonical rational '" + std::string(text) + "' (write it as '" +
                       to_string(q) + "')");
    return q;
}

std::string to_string(const Rational& q)
{
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_decimal(const Rational& q, int digits)
{
    if (digits < 0) digits = 0;
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    Integer scaled = abs(q.get_num()) * scale;
    Integer whole = scaled / q.get_den();
    std::string body = whole.get_str();
    if (digits > 0) {
        if (body.size() <= static_cast<std::size_t>(digits))
            body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
        body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    }
    return (sgn(q) < 0 && whole != 0 ? "-" : "") + body;
}

bool rational_sqrt(const Rational& q, Rational& root)
{
    if (sgn(q) < 0) return false;
    if (!mpz_perfect_square_p(q.get_num().get_mpz_t()) ||
        !mpz_perfect_square_p(q.get_den().get_mpz_t()))
        return false;
    Integer n = sqrt(q.get_num());
    Integer d = sqrt(q.get_den());
    root = Rational(n, d);
    root.canonicalize();
    return true;
}

} // namespace jetmod
