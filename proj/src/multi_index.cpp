#include "jetmod/multi_index.hpp"

#include "jetmod/rational.hpp"

namespace jetmod {

MultiIndex::MultiIndex(std::size_t dim) : dim_(static_cast<std::uint8_t>(dim))
{
    if (dim > max_dim)
        throw JetError("dimension " + std::to_string(dim) + " exceeds the supported maximum of " +
                       std::to_string(max_dim));
}

MultiIndex::MultiIndex(std::initializer_list<unsigned> exponents)
    : MultiIndex(std::vector<unsigned>(exponents))
{
}

MultiIndex::MultiIndex(const std::vector<unsigned>& exponents) : MultiIndex(exponents.size())
{
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] > 255) throw JetError("exponent too large in multi-index");
        exps_[i] = static_cast<std::uint8_t>(exponents[i]);
        degree_ = static_cast<std::uint16_t>(degree_ + exponents[i]);
    }
}

MultiIndex MultiIndex::unit(std::size_t dim, std::size_t axis)
{
    MultiIndex m(dim);
    m.exps_[axis] = 1;
    m.degree_ = 1;
    return m;
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const
{
    MultiIndex m(*this);
    for (std::size_t i = 0; i < dim_; ++i)
        m.exps_[i] = static_cast<std::uint8_t>(m.exps_[i] + other.exps_[i]);
    m.degree_ = static_cast<std::uint16_t>(degree_ + other.degree_);
    return m;
}

MultiIndex MultiIndex::decremented(std::size_t axis) const
{
    MultiIndex m(*this);
    --m.exps_[axis];
    --m.degree_;
    return m;
}

MultiIndex MultiIndex::incremented(std::size_t axis) const
{
    MultiIndex m(*this);
    ++m.exps_[axis];
    ++m.degree_;
    return m;
}

unsigned long long MultiIndex::factorial() const
{
    unsigned long long f = 1;
    for (std::size_t i = 0; i < dim_; ++i)
        for (unsigned k = 2; k <= exps_[i]; ++k) f *= k;
    return f;
}

std::string MultiIndex::to_string() const
{
    std::string s;
    for (std::size_t i = 0; i < dim_; ++i) {
        if (i) s += ',';
        s += std::to_string(exps_[i]);
    }
    return s;
}

bool GradedLex::operator()(const MultiIndex& a, const MultiIndex& b) const
{
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

namespace {

void fill_degree(std::size_t dim, std::size_t pos, unsigned remaining, std::vector<unsigned>& cur,
                 std::vector<MultiIndex>& out)
{
    if (pos + 1 == dim) {
        cur[pos] = remaining;
        out.emplace_back(cur);
        return;
    }
    for (unsigned e = remaining + 1; e-- > 0;) {
        cur[pos] = e;
        fill_degree(dim, pos + 1, remaining - e, cur, out);
    }
}

} // namespace

std::vector<MultiIndex> monomials_of_degree(std::size_t dim, unsigned degree)
{
    std::vector<MultiIndex> out;
    if (dim == 0) return out;
    std::vector<unsigned> cur(dim, 0);
    fill_degree(dim, 0, degree, cur, out);
    return out;
}

std::vector<MultiIndex> monomials_up_to(std::size_t dim, unsigned max_degree)
{
    std::vector<MultiIndex> out;
    for (unsigned d = 0; d <= max_degree; ++d) {
        auto part = monomials_of_degree(dim, d);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

} // namespace jetmod
