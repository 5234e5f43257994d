#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace jetmod {

/// Exponent vector of a monomial z_1^{a_1} ... z_n^{a_n}.
///
/// Stored inline; the ambient dimension is capped at `max_dim`.
class MultiIndex {
public:
    static constexpr std::size_t max_dim = 8;

    MultiIndex() = default;
    explicit MultiIndex(std::size_t dim);
    MultiIndex(std::initializer_list<unsigned> exponents);
    explicit MultiIndex(const std::vector<unsigned>& exponents);

    static MultiIndex unit(std::size_t dim, std::size_t axis);

    std::size_t size() const { return dim_; }
    unsigned operator[](std::size_t i) const { return exps_[i]; }
    unsigned degree() const { return degree_; }

    MultiIndex operator+(const MultiIndex& other) const;
    /// Lowers the exponent on `axis` by one. Requires (*this)[axis] > 0.
    MultiIndex decremented(std::size_t axis) const;
    MultiIndex incremented(std::size_t axis) const;

    /// Product of factorials of the exponents.
    unsigned long long factorial() const;

    /// "a,b,c" exponent list.
    std::string to_string() const;

    friend bool operator==(const MultiIndex& a, const MultiIndex& b)
    {
        return a.dim_ == b.dim_ && a.exps_ == b.exps_;
    }

private:
    std::array<std::uint8_t, max_dim> exps_{};
    std::uint8_t dim_ = 0;
    std::uint16_t degree_ = 0;
};

/// Graded lexicographic order: lower total degree first; within one degree,
/// larger leading exponents first (x^2 < x*y < y^2 for x > y).
struct GradedLex {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

/// All multi-indices of the given dimension and exact degree, in graded-lex
/// order.
std::vector<MultiIndex> monomials_of_degree(std::size_t dim, unsigned degree);

/// All multi-indices of degree <= max_degree, in graded-lex order.
std::vector<MultiIndex> monomials_up_to(std::size_t dim, unsigned max_degree);

} // namespace jetmod
