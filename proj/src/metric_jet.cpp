#include "jetmod/metric_jet.hpp"

#include "jetmod/normal_form.hpp"

#include <string>

namespace jetmod {

// ---------------------------------------------------------------------------
// SymmetricJetArray

SymmetricJetArray::SymmetricJetArray(std::size_t dim, int order) : dim_(dim), order_(order)
{
    entries_.assign(dim * (dim + 1) / 2, JetScalar(dim, order));
}

std::size_t SymmetricJetArray::slot(std::size_t i, std::size_t j) const
{
    if (i > j) std::swap(i, j);
    // Row-major packing of the upper triangle.
    return i * dim_ - i * (i - 1) / 2 + (j - i);
}

Matrix SymmetricJetArray::constant_matrix() const
{
    Matrix m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) m(i, j) = (*this)(i, j).constant_term();
    return m;
}

// ---------------------------------------------------------------------------
// MetricJet

namespace {

// LDL^T of a symmetric matrix; returns false if some pivot is <= 0.
bool ldlt(const Matrix& a, Matrix& l, std::vector<Rational>& d)
{
    const std::size_t n = a.rows();
    l = Matrix::identity(n);
    d.assign(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        Rational s = a(j, j);
        for (std::size_t k = 0; k < j; ++k) s -= l(j, k) * l(j, k) * d[k];
        if (sgn(s) <= 0) return false;
        d[j] = s;
        for (std::size_t i = j + 1; i < n; ++i) {
            Rational t = a(i, j);
            for (std::size_t k = 0; k < j; ++k) t -= l(i, k) * l(j, k) * d[k];
            l(i, j) = t / s;
        }
    }
    return true;
}

} // namespace

MetricJet::MetricJet(SymmetricJetArray entries) : entries_(std::move(entries))
{
    const std::size_t n = entries_.dim();
    if (n == 0) throw JetError("metric dimension must be at least 1");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const auto& e = entries_(i, j);
            if (e.dim() != n || e.order() != entries_.order())
                throw JetError("metric entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                               ") has inconsistent dimension or order");
        }
    Matrix l;
    std::vector<Rational> d;
    if (!ldlt(entries_.constant_matrix(), l, d))
        throw JetError("metric is not positive definite at the base point");
}

MetricJet MetricJet::flat(std::size_t dim, int order)
{
    SymmetricJetArray e(dim, order);
    for (std::size_t i = 0; i < dim; ++i) e(i, i) = JetScalar::constant(dim, order, 1);
    return MetricJet(std::move(e));
}

bool MetricJet::has_identity_frame() const { return base_matrix() == Matrix::identity(dim()); }

MetricJet MetricJet::truncated(int order) const
{
    const int s = std::min(order, this->order());
    SymmetricJetArray e(dim(), s);
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = i; j < dim(); ++j) e(i, j) = entries_(i, j).truncated(s);
    return MetricJet(std::move(e));
}

void require_identity_frame(const MetricJet& g, const char* operation)
{
    if (!g.has_identity_frame())
        throw JetError(std::string(operation) +
                       " requires g(0) = identity; apply a linear change of frame first "
                       "(to_identity_frame succeeds when the LDL^T pivots of g(0) are rational squares)");
}

// ---------------------------------------------------------------------------
// ChristoffelSymbols

ChristoffelSymbols::ChristoffelSymbols(std::size_t dim, int order)
    : dim_(dim), order_(order), data_(dim * dim * dim, JetScalar(dim, order))
{
}

// ---------------------------------------------------------------------------
// Operations

MetricJet pullback(const DiffeoJet& tau, const MetricJet& g)
{
    const std::size_t n = g.dim();
    if (tau.dim() != n)
        throw JetError("dimension mismatch in pullback: map has " + std::to_string(tau.dim()) +
                       " components, metric has dimension " + std::to_string(n));
    const int r = g.order();
    if (tau.order() < r + 1)
        throw JetError("pullback of an order-" + std::to_string(r) + " metric needs a map jet of order >= " +
                       std::to_string(r + 1) + ", got " + std::to_string(tau.order()));

    Substitution sub({tau.components().begin(), tau.components().end()}, r);
    SymmetricJetArray composed(n, r);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = k; l < n; ++l) composed(k, l) = sub.apply(g(k, l));

    // jac[k][i] = d tau_k / d z_i
    std::vector<std::vector<JetScalar>> jac(n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) jac[k].push_back(series_partial(tau.component(k), i).truncated(r));

    SymmetricJetArray out(n, r);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            JetScalar acc(n, r);
            for (std::size_t k = 0; k < n; ++k) {
                // sum_l g_kl(tau) d_j tau_l
                JetScalar inner(n, r);
                for (std::size_t l = 0; l < n; ++l) inner = inner + composed(k, l) * jac[l][j];
                acc = acc + jac[k][i] * inner;
            }
            out(i, j) = std::move(acc);
        }
    return MetricJet(std::move(out));
}

SymmetricJetArray inverse_metric(const MetricJet& g)
{
    require_identity_frame(g, "inverse_metric");
    const std::size_t n = g.dim();
    const int r = g.order();

    // -E where g = I + E.
    std::vector<JetScalar> neg_e(n * n, JetScalar(n, r));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            JetScalar e = g(i, j);
            if (i == j) e = e - JetScalar::constant(n, r, 1);
            neg_e[i * n + j] = -e;
        }

    // sum_{k>=0} (-E)^k; (-E)^k starts in degree k.
    std::vector<JetScalar> term(n * n, JetScalar(n, r));
    for (std::size_t i = 0; i < n; ++i) term[i * n + i] = JetScalar::constant(n, r, 1);
    std::vector<JetScalar> sum = term;
    for (int k = 1; k <= r; ++k) {
        std::vector<JetScalar> next(n * n, JetScalar(n, r));
        bool all_zero = true;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                JetScalar acc(n, r);
                for (std::size_t m = 0; m < n; ++m) acc = acc + term[i * n + m] * neg_e[m * n + j];
                all_zero = all_zero && acc.is_zero();
                next[i * n + j] = std::move(acc);
            }
        if (all_zero) break;
        term = std::move(next);
        for (std::size_t idx = 0; idx < n * n; ++idx) sum[idx] = sum[idx] + term[idx];
    }

    SymmetricJetArray out(n, r);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) out(i, j) = sum[i * n + j];
    return out;
}

ChristoffelSymbols christoffel(const MetricJet& g)
{
    const SymmetricJetArray ginv = inverse_metric(g);
    const std::size_t n = g.dim();
    const int order = g.order() - 1;

    // dg[l][i][j] = d_l g_ij
    std::vector<JetScalar> dg(n * n * n);
    for (std::size_t l = 0; l < n; ++l)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) dg[(l * n + i) * n + j] = series_partial(g(i, j), l);
    auto d = [&](std::size_t l, std::size_t i, std::size_t j) -> const JetScalar& {
        return dg[(l * n + i) * n + j];
    };

    ChristoffelSymbols gamma(n, order);
    const Rational half(1, 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            // First-kind symbols [ij, l].
            std::vector<JetScalar> first;
            for (std::size_t l = 0; l < n; ++l) first.push_back(d(i, j, l) + d(j, i, l) - d(l, i, j));
            for (std::size_t k = 0; k < n; ++k) {
                JetScalar acc(n, order);
                for (std::size_t l = 0; l < n; ++l) acc = acc + ginv(k, l) * first[l];
                acc *= half;
                gamma(k, i, j) = acc;
                gamma(k, j, i) = std::move(acc);
            }
        }
    return gamma;
}

JetScalar gauss_curvature(const MetricJet& g)
{
    if (g.dim() != 2) throw JetError("gauss_curvature is defined for dimension 2 only");
    if (g.order() < 2) throw JetError("gauss_curvature needs a metric jet of order >= 2");
    require_identity_frame(g, "gauss_curvature");
    const int order = g.order() - 2;
    const ChristoffelSymbols gamma = christoffel(g);

    // R^a_{bcd} = d_c G^a_{db} - d_d G^a_{cb} + G^a_{ce} G^e_{db} - G^a_{de} G^e_{cb}
    // with (b, c, d) = (2, 1, 2), zero-based (1, 0, 1).
    std::array<JetScalar, 2> r_up;
    for (std::size_t a = 0; a < 2; ++a) {
        JetScalar acc = series_partial(gamma(a, 1, 1), 0) - series_partial(gamma(a, 0, 1), 1);
        for (std::size_t e = 0; e < 2; ++e)
            acc = acc + gamma(a, 0, e) * gamma(e, 1, 1) - gamma(a, 1, e) * gamma(e, 0, 1);
        r_up[a] = acc.truncated(order);
    }
    const JetScalar r1212 = g(0, 0).truncated(order) * r_up[0] + g(0, 1).truncated(order) * r_up[1];
    const JetScalar det = (g(0, 0) * g(1, 1) - g(0, 1) * g(0, 1)).truncated(order);
    return r1212 * reciprocal(det);
}

CurvatureData curvature_data(const MetricJet& g)
{
    if (g.dim() != 2) throw JetError("curvature_data is defined for dimension 2 only");
    if (g.order() < 4)
        throw JetError("curvature_data needs a metric jet of order >= 4, got " + std::to_string(g.order()));
    require_identity_frame(g, "curvature_data");
    if (!gauss_check(g)) throw JetError("curvature_data requires a metric in normal coordinates");

    const JetScalar k = gauss_curvature(g);
    CurvatureData out;
    out.k0 = k.constant_term();
    out.grad[0] = k.coefficient({1, 0});
    out.grad[1] = k.coefficient({0, 1});
    out.hess[0][0] = 2 * k.coefficient({2, 0});
    out.hess[1][1] = 2 * k.coefficient({0, 2});
    out.hess[0][1] = k.coefficient({1, 1});
    out.hess[1][0] = out.hess[0][1];
    return out;
}

Matrix identity_frame_change(const MetricJet& g)
{
    const std::size_t n = g.dim();
    Matrix l;
    std::vector<Rational> d;
    if (!ldlt(g.base_matrix(), l, d)) throw JetError("metric is not positive definite at the base point");
    // g0 = L D L^T; P = L^{-T} D^{-1/2} gives P^T g0 P = I.
    Matrix scale(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational root;
        if (!rational_sqrt(d[i], root))
            throw JetError("g(0) cannot be brought to the identity with a rational change of frame (pivot " +
                           to_string(d[i]) + " is not a rational square); supply a metric with g(0) = identity");
        scale(i, i) = 1 / root;
    }
    return inverse(l).transposed() * scale;
}

MetricJet to_identity_frame(const MetricJet& g)
{
    if (g.has_identity_frame()) return g;
    const Matrix p = identity_frame_change(g);
    return pullback(DiffeoJet::linear(p, g.order() + 1), g);
}

} // namespace jetmod
