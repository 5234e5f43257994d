#pragma once

#include "jetmod/jet_core.hpp"

#include <array>
#include <vector>

namespace jetmod {

/// Symmetric n x n array of series; only entries with i <= j are stored.
class SymmetricJetArray {
public:
    SymmetricJetArray() = default;
    /// All entries zero.
    SymmetricJetArray(std::size_t dim, int order);

    std::size_t dim() const { return dim_; }
    int order() const { return order_; }

    const JetScalar& operator()(std::size_t i, std::size_t j) const { return entries_[slot(i, j)]; }
    JetScalar& operator()(std::size_t i, std::size_t j) { return entries_[slot(i, j)]; }

    /// Matrix of constant terms.
    Matrix constant_matrix() const;

    friend bool operator==(const SymmetricJetArray&, const SymmetricJetArray&) = default;

private:
    std::size_t slot(std::size_t i, std::size_t j) const;

    std::size_t dim_ = 0;
    int order_ = 0;
    std::vector<JetScalar> entries_;
};

/// r-jet at the origin of a Riemannian metric: symmetric matrix of series
/// whose constant term is positive definite.
class MetricJet {
public:
    /// Throws if the entries disagree on dimension/order or g(0) is not
    /// positive definite.
    explicit MetricJet(SymmetricJetArray entries);

    /// dx_1^2 + ... + dx_n^2.
    static MetricJet flat(std::size_t dim, int order);

    std::size_t dim() const { return entries_.dim(); }
    int order() const { return entries_.order(); }
    const JetScalar& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
    const SymmetricJetArray& entries() const { return entries_; }

    Matrix base_matrix() const { return entries_.constant_matrix(); }
    bool has_identity_frame() const;

    MetricJet truncated(int order) const;

    friend bool operator==(const MetricJet&, const MetricJet&) = default;

private:
    SymmetricJetArray entries_;
};

/// Gamma^k_ij stored densely; symmetric in (i, j).
class ChristoffelSymbols {
public:
    ChristoffelSymbols(std::size_t dim, int order);

    std::size_t dim() const { return dim_; }
    int order() const { return order_; }
    const JetScalar& operator()(std::size_t k, std::size_t i, std::size_t j) const
    {
        return data_[(k * dim_ + i) * dim_ + j];
    }
    JetScalar& operator()(std::size_t k, std::size_t i, std::size_t j)
    {
        return data_[(k * dim_ + i) * dim_ + j];
    }

private:
    std::size_t dim_;
    int order_;
    std::vector<JetScalar> data_;
};

/// Value, gradient and Hessian of the Gauss curvature at the base point.
struct CurvatureData {
    Rational k0;
    std::array<Rational, 2> grad;
    std::array<std::array<Rational, 2>, 2> hess;

    friend bool operator==(const CurvatureData&, const CurvatureData&) = default;
};

/// (tau^* g)_ij = sum_kl (g_kl o tau) d_i tau_k d_j tau_l, truncated to
/// g.order(). Requires tau.order() >= g.order() + 1.
MetricJet pullback(const DiffeoJet& tau, const MetricJet& g);

/// g^{-1} by the Neumann series of g - I. Requires g(0) = I.
SymmetricJetArray inverse_metric(const MetricJet& g);

/// Gamma^k_ij = 1/2 g^{kl} (d_i g_jl + d_j g_il - d_l g_ij), order r - 1.
ChristoffelSymbols christoffel(const MetricJet& g);

/// K = R_1212 / det g as a jet of order r - 2; positive on the round
/// sphere. Requires n = 2, r >= 2 and g(0) = I.
JetScalar gauss_curvature(const MetricJet& g);

/// K, grad K and Hess K at the origin of a normal-form metric (n = 2,
/// r >= 4). In normal coordinates Gamma(0) = 0, so the covariant Hessian at
/// the origin is the matrix of plain second partials.
CurvatureData curvature_data(const MetricJet& g);

/// Linear change of frame P with P^T g(0) P = I, from an exact LDL^T
/// factorisation. Throws when a pivot is not the square of a rational.
Matrix identity_frame_change(const MetricJet& g);

/// pullback(P, g) with P from identity_frame_change; returns g unchanged if
/// g(0) is already the identity.
MetricJet to_identity_frame(const MetricJet& g);

/// Throws JetError unless g(0) is the identity matrix.
void require_identity_frame(const MetricJet& g, const char* operation);

} // namespace jetmod
