#pragma once

#include "jetmod/linalg.hpp"
#include "jetmod/multi_index.hpp"
#include "jetmod/rational.hpp"

#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace jetmod {

/// Truncated power series in `dim` variables with rational coefficients,
/// keeping every monomial of total degree <= order.
///
/// Absent monomials are zero; explicit zeros are never stored. Binary
/// operations truncate to the smaller operand order.
class JetScalar {
public:
    using Terms = std::map<MultiIndex, Rational, GradedLex>;

    JetScalar() = default;
    JetScalar(std::size_t dim, int order);
    /// Drops zero coefficients and monomials above `order`.
    JetScalar(std::size_t dim, int order, Terms terms);

    static JetScalar constant(std::size_t dim, int order, const Rational& value);
    /// The coordinate function z_axis (axis is 0-based).
    static JetScalar variable(std::size_t dim, int order, std::size_t axis);
    static JetScalar monomial(std::size_t dim, int order, const MultiIndex& m, const Rational& c);

    std::size_t dim() const { return dim_; }
    int order() const { return order_; }
    const Terms& terms() const { return terms_; }

    Rational coefficient(const MultiIndex& m) const;
    Rational constant_term() const;
    bool is_zero() const { return terms_.empty(); }

    /// Adds c * z^m in place; monomials above the order are ignored.
    void add_term(const MultiIndex& m, const Rational& c);

    JetScalar truncated(int order) const;
    /// Same coefficients, relabelled with a larger order (higher terms zero).
    JetScalar with_order(int order) const;
    JetScalar homogeneous_part(unsigned degree) const;

    JetScalar operator-() const;
    JetScalar& operator*=(const Rational& c);

    friend JetScalar operator+(const JetScalar& a, const JetScalar& b);
    friend JetScalar operator-(const JetScalar& a, const JetScalar& b);
    friend JetScalar operator*(const JetScalar& a, const JetScalar& b);
    friend JetScalar operator*(const Rational& c, JetScalar a) { return a *= c; }
    friend JetScalar operator*(JetScalar a, const Rational& c) { return a *= c; }

    /// Same dimension, order and coefficients.
    friend bool operator==(const JetScalar& a, const JetScalar& b)
    {
        return a.dim_ == b.dim_ && a.order_ == b.order_ && a.terms_ == b.terms_;
    }

    /// Human-readable polynomial, e.g. "1 - 1/3*y^2" (variables x,y,z or z1..zn).
    std::string to_string() const;
    /// Same layout with a custom coefficient formatter (applied to |c|).
    std::string to_string(const std::function<std::string(const Rational&)>& format) const;

private:
    std::size_t dim_ = 0;
    int order_ = 0;
    Terms terms_;
};

enum class SeriesOp { add, sub, mul };

/// Exact add/sub/mul truncated to the smaller order. Throws on dimension
/// mismatch.
JetScalar series_arith(const JetScalar& a, const JetScalar& b, SeriesOp op);

/// Partial derivative along `axis` (0-based). The order drops by one,
/// floored at zero.
JetScalar series_partial(const JetScalar& a, std::size_t axis);

/// Multiplicative inverse of a series with non-zero constant term.
JetScalar reciprocal(const JetScalar& a);

/// The Euler operator sum_i z_i d/dz_i: scales each degree-d part by d.
JetScalar euler_operator(const JetScalar& a);

/// r-jet of a map fixing the origin, given by its n components.
///
/// Every component has zero constant term and the matrix of degree-one
/// coefficients is invertible.
class DiffeoJet {
public:
    explicit DiffeoJet(std::vector<JetScalar> components);

    static DiffeoJet identity(std::size_t dim, int order);
    /// z -> A z, i.e. component i is sum_j A(i,j) z_j.
    static DiffeoJet linear(const Matrix& a, int order);

    std::size_t dim() const { return components_.size(); }
    int order() const { return order_; }
    const JetScalar& component(std::size_t i) const { return components_[i]; }
    std::span<const JetScalar> components() const { return components_; }

    /// A(i,j) = coefficient of z_j in component i.
    Matrix linear_part() const;
    DiffeoJet truncated(int order) const;

    friend bool operator==(const DiffeoJet& a, const DiffeoJet& b)
    {
        return a.components_ == b.components_;
    }

private:
    std::vector<JetScalar> components_;
    int order_ = 0;
};

/// Substitutes a fixed tuple of origin-preserving series into many scalars,
/// caching the monomial powers between calls.
class Substitution {
public:
    /// Components must share one dimension and have zero constant terms.
    Substitution(std::vector<JetScalar> components, int order);

    int order() const { return order_; }
    /// f(components), truncated to min(f.order, order).
    JetScalar apply(const JetScalar& f);

private:
    const JetScalar& power(const MultiIndex& m);

    std::vector<JetScalar> components_;
    int order_;
    std::size_t target_dim_;
    std::map<MultiIndex, JetScalar, GradedLex> powers_;
};

/// f o tau, truncated to min(f.order, tau.order).
JetScalar substitute(const JetScalar& f, const DiffeoJet& tau);

/// sigma o tau, i.e. component i is sigma_i(tau).
DiffeoJet compose(const DiffeoJet& sigma, const DiffeoJet& tau);

/// Compositional inverse, solved degree by degree.
DiffeoJet map_invert(const DiffeoJet& tau);

} // namespace jetmod
