#include "jetmod/jet_core.hpp"

#include <algorithm>
#include <sstream>

namespace jetmod {

namespace {

void require_same_dim(const JetScalar& a, const JetScalar& b)
{
    if (a.dim() != b.dim())
        throw JetError("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                       std::to_string(b.dim()));
}

} // namespace

JetScalar::JetScalar(std::size_t dim, int order) : dim_(dim), order_(std::max(order, 0))
{
    if (dim > MultiIndex::max_dim) (void)MultiIndex(dim); // throws
}

JetScalar::JetScalar(std::size_t dim, int order, Terms terms) : JetScalar(dim, order)
{
    for (auto& [m, c] : terms) {
        if (m.size() != dim) throw JetError("multi-index length does not match dimension");
        if (static_cast<int>(m.degree()) <= order_ && !jetmod::is_zero(c))
            terms_.emplace(m, std::move(c));
    }
}

JetScalar JetScalar::constant(std::size_t dim, int order, const Rational& value)
{
    JetScalar s(dim, order);
    s.add_term(MultiIndex(dim), value);
    return s;
}

JetScalar JetScalar::variable(std::size_t dim, int order, std::size_t axis)
{
    JetScalar s(dim, order);
    s.add_term(MultiIndex::unit(dim, axis), 1);
    return s;
}

JetScalar JetScalar::monomial(std::size_t dim, int order, const MultiIndex& m, const Rational& c)
{
    JetScalar s(dim, order);
    s.add_term(m, c);
    return s;
}

Rational JetScalar::coefficient(const MultiIndex& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational JetScalar::constant_term() const { return coefficient(MultiIndex(dim_)); }

void JetScalar::add_term(const MultiIndex& m, const Rational& c)
{
    if (m.size() != dim_) throw JetError("multi-index length does not match dimension");
    if (static_cast<int>(m.degree()) > order_ || jetmod::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (jetmod::is_zero(it->second)) terms_.erase(it);
    }
}

JetScalar JetScalar::truncated(int order) const
{
    JetScalar out(dim_, std::min(order, order_));
    for (const auto& [m, c] : terms_) {
        if (static_cast<int>(m.degree()) > out.order_) break;
        out.terms_.emplace_hint(out.terms_.end(), m, c);
    }
    return out;
}

JetScalar JetScalar::with_order(int order) const
{
    JetScalar out = truncated(order);
    out.order_ = std::max(order, 0);
    return out;
}

JetScalar JetScalar::homogeneous_part(unsigned degree) const
{
    JetScalar out(dim_, order_);
    for (const auto& [m, c] : terms_)
        if (m.degree() == degree) out.terms_.emplace_hint(out.terms_.end(), m, c);
    return out;
}

JetScalar JetScalar::operator-() const
{
    JetScalar out(*this);
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

JetScalar& JetScalar::operator*=(const Rational& c)
{
    if (jetmod::is_zero(c)) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

JetScalar operator+(const JetScalar& a, const JetScalar& b)
{
    require_same_dim(a, b);
    JetScalar out = a.truncated(std::min(a.order(), b.order()));
    for (const auto& [m, c] : b.terms()) out.add_term(m, c);
    return out;
}

JetScalar operator-(const JetScalar& a, const JetScalar& b)
{
    require_same_dim(a, b);
    JetScalar out = a.truncated(std::min(a.order(), b.order()));
    for (const auto& [m, c] : b.terms()) out.add_term(m, -c);
    return out;
}

JetScalar operator*(const JetScalar& a, const JetScalar& b)
{
    require_same_dim(a, b);
    const int order = std::min(a.order(), b.order());
    JetScalar out(a.dim(), order);
    Rational prod;
    for (const auto& [ma, ca] : a.terms()) {
        const int room = order - static_cast<int>(ma.degree());
        if (room < 0) break;
        for (const auto& [mb, cb] : b.terms()) {
            if (static_cast<int>(mb.degree()) > room) break;
            prod = ca * cb;
            out.add_term(ma + mb, prod);
        }
    }
    return out;
}

std::string JetScalar::to_string() const
{
    return to_string([](const Rational& q) { return jetmod::to_string(q); });
}

std::string JetScalar::to_string(const std::function<std::string(const Rational&)>& format) const
{
    if (terms_.empty()) return "0";
    static const char* const names3[] = {"x", "y", "z"};
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == 1;
        if (!unit || m.degree() == 0) os << format(mag);
        bool need_star = !unit || m.degree() == 0;
        for (std::size_t i = 0; i < dim_; ++i) {
            if (m[i] == 0) continue;
            if (need_star) os << "*";
            need_star = true;
            if (dim_ <= 3)
                os << names3[i];
            else
                os << "z" << (i + 1);
            if (m[i] > 1) os << "^" << m[i];
        }
    }
    return os.str();
}

JetScalar series_arith(const JetScalar& a, const JetScalar& b, SeriesOp op)
{
    switch (op) {
    case SeriesOp::add:
        return a + b;
    case SeriesOp::sub:
        return a - b;
    case SeriesOp::mul:
        return a * b;
    }
    throw JetError("unknown series operation");
}

JetScalar series_partial(const JetScalar& a, std::size_t axis)
{
    if (axis >= a.dim()) throw JetError("partial derivative axis out of range");
    JetScalar out(a.dim(), a.order() - 1);
    for (const auto& [m, c] : a.terms())
        if (m[axis] > 0) out.add_term(m.decremented(axis), c * m[axis]);
    return out;
}

JetScalar reciprocal(const JetScalar& a)
{
    const Rational c0 = a.constant_term();
    if (is_zero(c0)) throw JetError("reciprocal of a series with zero constant term");
    // 1/a = (1/c0) * sum_k (-e)^k with e = a/c0 - 1; e has no constant term.
    JetScalar e = a * (1 / c0) - JetScalar::constant(a.dim(), a.order(), 1);
    JetScalar neg_e = -e;
    JetScalar sum = JetScalar::constant(a.dim(), a.order(), 1);
    JetScalar term = sum;
    for (int k = 1; k <= a.order(); ++k) {
        term = term * neg_e;
        if (term.is_zero()) break;
        sum = sum + term;
    }
    return sum * (1 / c0);
}

JetScalar euler_operator(const JetScalar& a)
{
    JetScalar out(a.dim(), a.order());
    for (const auto& [m, c] : a.terms()) out.add_term(m, c * m.degree());
    return out;
}

// ---------------------------------------------------------------------------
// DiffeoJet

DiffeoJet::DiffeoJet(std::vector<JetScalar> components) : components_(std::move(components))
{
    if (components_.empty()) throw JetError("a map jet needs at least one component");
    const std::size_t n = components_.size();
    order_ = components_.front().order();
    for (const auto& c : components_) {
        if (c.dim() != n)
            throw JetError("map jet component has dimension " + std::to_string(c.dim()) +
                           ", expected " + std::to_string(n));
        if (c.order() != order_) throw JetError("map jet components have different orders");
        if (!is_zero(c.constant_term()))
            throw JetError("map jet does not fix the origin (non-vanishing constant term)");
    }
    if (order_ < 1) throw JetError("map jet order must be at least 1");
    (void)inverse(linear_part()); // throws "singular linear part"
}

DiffeoJet DiffeoJet::identity(std::size_t dim, int order)
{
    return linear(Matrix::identity(dim), order);
}

DiffeoJet DiffeoJet::linear(const Matrix& a, int order)
{
    const std::size_t n = a.rows();
    std::vector<JetScalar> comps;
    comps.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        JetScalar c(n, order);
        for (std::size_t j = 0; j < n; ++j) c.add_term(MultiIndex::unit(n, j), a(i, j));
        comps.push_back(std::move(c));
    }
    return DiffeoJet(std::move(comps));
}

Matrix DiffeoJet::linear_part() const
{
    const std::size_t n = dim();
    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = components_[i].coefficient(MultiIndex::unit(n, j));
    return a;
}

DiffeoJet DiffeoJet::truncated(int order) const
{
    std::vector<JetScalar> comps;
    for (const auto& c : components_) comps.push_back(c.truncated(order));
    return DiffeoJet(std::move(comps));
}

// ---------------------------------------------------------------------------
// Substitution

Substitution::Substitution(std::vector<JetScalar> components, int order)
    : components_(std::move(components)), order_(order)
{
    if (components_.empty()) throw JetError("empty substitution");
    target_dim_ = components_.front().dim();
    for (const auto& c : components_) {
        if (c.dim() != target_dim_) throw JetError("substitution components differ in dimension");
        if (!is_zero(c.constant_term()))
            throw JetError("cannot substitute a map with non-vanishing constant term");
        order_ = std::min(order_, c.order());
    }
}

const JetScalar& Substitution::power(const MultiIndex& m)
{
    auto it = powers_.find(m);
    if (it != powers_.end()) return it->second;
    if (m.degree() == 0)
        return powers_.emplace(m, JetScalar::constant(target_dim_, order_, 1)).first->second;
    std::size_t axis = 0;
    while (m[axis] == 0) ++axis;
    const MultiIndex lower = m.decremented(axis);
    JetScalar p = power(lower) * components_[axis].truncated(order_);
    return powers_.emplace(m, std::move(p)).first->second;
}

JetScalar Substitution::apply(const JetScalar& f)
{
    if (f.dim() != components_.size())
        throw JetError("dimension mismatch in substitution: series has " + std::to_string(f.dim()) +
                       " variables, map has " + std::to_string(components_.size()) + " components");
    const int order = std::min(order_, f.order());
    JetScalar out(target_dim_, order);
    for (const auto& [m, c] : f.terms()) {
        // Components vanish at 0, so z^m contributes only in degrees >= |m|.
        if (static_cast<int>(m.degree()) > order) break;
        for (const auto& [pm, pc] : power(m).terms()) {
            if (static_cast<int>(pm.degree()) > order) break;
            out.add_term(pm, c * pc);
        }
    }
    return out;
}

JetScalar substitute(const JetScalar& f, const DiffeoJet& tau)
{
    if (f.dim() != tau.dim()) throw JetError("dimension mismatch in substitute");
    Substitution sub({tau.components().begin(), tau.components().end()}, tau.order());
    return sub.apply(f);
}

DiffeoJet compose(const DiffeoJet& sigma, const DiffeoJet& tau)
{
    if (sigma.dim() != tau.dim()) throw JetError("dimension mismatch in compose");
    Substitution sub({tau.components().begin(), tau.components().end()}, tau.order());
    std::vector<JetScalar> comps;
    for (const auto& c : sigma.components()) comps.push_back(sub.apply(c));
    return DiffeoJet(std::move(comps));
}

DiffeoJet map_invert(const DiffeoJet& tau)
{
    const std::size_t n = tau.dim();
    const int order = tau.order();
    const Matrix a = tau.linear_part();
    const Matrix a_inv = inverse(a);

    std::vector<JetScalar> psi;
    for (std::size_t i = 0; i < n; ++i) {
        JetScalar c(n, order);
        for (std::size_t j = 0; j < n; ++j) c.add_term(MultiIndex::unit(n, j), a_inv(i, j));
        psi.push_back(std::move(c));
    }
    // With psi known below degree d, the degree-d part of tau(psi) is
    // A psi_d + (terms fixed by lower degrees); solve it to vanish.
    for (int d = 2; d <= order; ++d) {
        Substitution sub(psi, order);
        std::vector<JetScalar> residual;
        for (const auto& c : tau.components())
            residual.push_back(sub.apply(c).homogeneous_part(static_cast<unsigned>(d)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                if (is_zero(a_inv(i, k))) continue;
                for (const auto& [m, c] : residual[k].terms()) psi[i].add_term(m, -a_inv(i, k) * c);
            }
    }
    return DiffeoJet(std::move(psi));
}

} // namespace jetmod
