#pragma once

#include "jetmod/jet_core.hpp"

#include <initializer_list>
#include <utility>

namespace jetmod::test {

using TermList = std::initializer_list<std::pair<MultiIndex, Rational>>;

inline JetScalar series(std::size_t dim, int order, TermList terms)
{
    JetScalar s(dim, order);
    for (const auto& [m, c] : terms) s.add_term(m, c);
    return s;
}

inline Rational q(long num, long den = 1)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

} // namespace jetmod::test
