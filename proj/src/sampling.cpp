#include "jetmod/sampling.hpp"

#include <algorithm>
#include <array>

namespace jetmod {

namespace {

constexpr std::array<std::array<int, 3>, 6> pythagorean{{
    {3, 4, 5}, {5, 12, 13}, {8, 15, 17}, {7, 24, 25}, {20, 21, 29}, {0, 1, 1},
}};

} // namespace

int JetSampler::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

Rational JetSampler::rational(int max_num, int max_den)
{
    Rational q(uniform(-max_num, max_num), uniform(1, max_den));
    q.canonicalize();
    return q;
}

JetScalar JetSampler::series(std::size_t dim, int order, unsigned min_degree, double density)
{
    std::bernoulli_distribution keep(density);
    JetScalar s(dim, order);
    for (const auto& m : monomials_up_to(dim, static_cast<unsigned>(std::max(order, 0))))
        if (m.degree() >= min_degree && keep(rng_)) s.add_term(m, rational());
    return s;
}

MetricJet JetSampler::metric(std::size_t dim, int order)
{
    SymmetricJetArray e(dim, order);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i; j < dim; ++j) {
            JetScalar s = series(dim, order, 1);
            if (i == j) s.add_term(MultiIndex(dim), 1);
            e(i, j) = std::move(s);
        }
    return MetricJet(std::move(e));
}

HPoly JetSampler::h_poly(int order) { return series(2, order, 0); }

HPoly JetSampler::rotation_invariant_h(int order)
{
    HPoly h(2, order);
    const HPoly r2 = JetScalar::monomial(2, order, {2, 0}, 1) + JetScalar::monomial(2, order, {0, 2}, 1);
    HPoly power = JetScalar::constant(2, order, 1);
    for (int k = 0; 2 * k <= order; ++k) {
        if (uniform(0, 3) != 0) h = h + power * rational();
        power = power * r2;
    }
    return h;
}

Matrix JetSampler::rational_orthogonal(std::size_t dim)
{
    if (dim != 2) {
        // Signed permutation matrices.
        Matrix m(dim, dim);
        std::vector<std::size_t> perm(dim);
        for (std::size_t i = 0; i < dim; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng_);
        for (std::size_t i = 0; i < dim; ++i) m(i, perm[i]) = uniform(0, 1) ? 1 : -1;
        return m;
    }
    const auto& t = pythagorean[static_cast<std::size_t>(uniform(0, static_cast<int>(pythagorean.size()) - 1))];
    Rational c(t[0], t[2]), s(t[1], t[2]);
    c.canonicalize();
    s.canonicalize();
    if (uniform(0, 1)) c = -c;
    if (uniform(0, 1)) s = -s;
    if (uniform(0, 1)) return Matrix{{c, -s}, {s, c}};
    return Matrix{{c, s}, {s, -c}};
}

DiffeoJet JetSampler::diffeo(std::size_t dim, int order)
{
    const Matrix a = rational_orthogonal(dim);
    DiffeoJet lin = DiffeoJet::linear(a, order);
    std::vector<JetScalar> comps;
    for (std::size_t i = 0; i < dim; ++i) comps.push_back(lin.component(i) + series(dim, order, 2, 0.4));
    return DiffeoJet(std::move(comps));
}

} // namespace jetmod
