#pragma once

#include "jetmod/metric_jet.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace jetmod {

/// Order-s normal tensor T_{i j k_1 ... k_s} (s = 0 or s >= 2).
///
/// Components are the actual partial derivatives g_{ij,k_1...k_s} at the
/// origin. Storage is canonical: key (i, j, k_1, ..., k_s) with i <= j and
/// k_1 <= ... <= k_s, zero components omitted. Indices are 0-based.
class NormalTensor {
public:
    using Key = std::vector<std::uint8_t>;

    NormalTensor(std::size_t dim, unsigned tensor_order);

    std::size_t dim() const { return dim_; }
    unsigned tensor_order() const { return order_; }

    /// Component for any index tuple; symmetries are applied on lookup.
    Rational at(std::size_t i, std::size_t j, std::vector<std::size_t> ks) const;
    void set(std::size_t i, std::size_t j, std::vector<std::size_t> ks, const Rational& value);

    const std::map<Key, Rational>& components() const { return components_; }
    bool is_zero() const { return components_.empty(); }

    /// Sum of T_{i, c_0, c_1..c_s} over cyclic rotations c of (j, k_1..k_s).
    Rational cyclic_sum(std::size_t i, std::size_t j, const std::vector<std::size_t>& ks) const;
    /// True iff every cyclic sum vanishes.
    bool satisfies_cyclic_identity() const;

    friend bool operator==(const NormalTensor&, const NormalTensor&) = default;

private:
    Key key(std::size_t i, std::size_t j, std::vector<std::size_t> ks) const;

    std::size_t dim_;
    unsigned order_;
    std::map<Key, Rational> components_;
};

/// Order-(r+1) jet of v -> exp_g(v), from the formal geodesic series.
/// Requires g(0) = I; the linear part is the identity.
DiffeoJet exp_map_jet(const MetricJet& g);

/// Pullback of g by its exponential map: a metric jet in normal
/// coordinates. Order 0 is returned unchanged.
MetricJet normalize(const MetricJet& g);

/// Gauss Lemma test: sum_j g_ij z_j == z_i up to order r + 1, for all i.
/// Requires g(0) = I.
bool gauss_check(const MetricJet& g);

/// Normal tensors g^2 ... g^r of a normal-form metric jet. Throws if the
/// Gauss Lemma fails or the first-order tensor is not zero.
std::vector<NormalTensor> normal_tensors(const MetricJet& g_normal);

/// Rebuilds the normal-form metric jet with g(0) = I from g^2 ... g^r.
/// `tensors[k]` must have tensor order k + 2.
MetricJet metric_from_normal_tensors(std::size_t dim, int order, const std::vector<NormalTensor>& tensors);

/// Function h in g = dx^2 + dy^2 + h (y dx - x dy)^2, a 2-variable jet.
using HPoly = JetScalar;

/// g_11 = 1 + h y^2, g_12 = -h x y, g_22 = 1 + h x^2, truncated to order r.
MetricJet metric_from_h(const HPoly& h, int order);

/// Inverse of metric_from_h on normal-form jets; h has order r - 2 (or 0
/// for r < 2). Throws if the coefficients are not of that shape.
HPoly extract_h(const MetricJet& g_normal);

/// Closed formula C(n+1,2) C(n+s-1,s) - n C(n+s,s+1).
long long dim_normal(int n, int s);

/// Kernel dimension of the symmetry and cyclic-sum constraints on
/// (s+2)-index arrays, by exact elimination.
long long dim_normal_bruteforce(int n, int s);

/// Dimension of the moduli space of r-jets of metrics in dimension n.
long long dim_moduli(int n, int r);

} // namespace jetmod
