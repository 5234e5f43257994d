#pragma once

#include "jetmod/strata2d.hpp"

#include <random>

namespace jetmod {

/// Seeded generators for test corpora and `make --preset random`.
class JetSampler {
public:
    explicit JetSampler(std::uint64_t seed) : rng_(seed) {}

    /// p/q with |p| <= max_num, 1 <= q <= max_den.
    Rational rational(int max_num = 5, int max_den = 4);
    /// Random series; each monomial is present with probability `density`.
    JetScalar series(std::size_t dim, int order, unsigned min_degree, double density = 0.6);
    /// g(0) = I plus random higher-order terms.
    MetricJet metric(std::size_t dim, int order);
    HPoly h_poly(int order);
    /// Polynomial in x^2 + y^2 only.
    HPoly rotation_invariant_h(int order);
    /// Rotation or reflection with Pythagorean-triple entries.
    Matrix rational_orthogonal(std::size_t dim = 2);
    /// Orthogonal linear part plus random terms of degree 2..order.
    DiffeoJet diffeo(std::size_t dim, int order);

    std::mt19937_64& engine() { return rng_; }

private:
    int uniform(int lo, int hi);

    std::mt19937_64 rng_;
};

} // namespace jetmod
