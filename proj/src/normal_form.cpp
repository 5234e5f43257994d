#include "jetmod/normal_form.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace jetmod {

// ---------------------------------------------------------------------------
// NormalTensor

NormalTensor::NormalTensor(std::size_t dim, unsigned tensor_order) : dim_(dim), order_(tensor_order)
{
    if (tensor_order == 1) throw JetError("normal tensors of order 1 vanish identically");
}

NormalTensor::Key NormalTensor::key(std::size_t i, std::size_t j, std::vector<std::size_t> ks) const
{
    if (ks.size() != order_) throw JetError("normal tensor index has the wrong length");
    if (i >= dim_ || j >= dim_) throw JetError("normal tensor index out of range");
    if (i > j) std::swap(i, j);
    std::sort(ks.begin(), ks.end());
    Key k;
    k.reserve(ks.size() + 2);
    k.push_back(static_cast<std::uint8_t>(i));
    k.push_back(static_cast<std::uint8_t>(j));
    for (auto v : ks) {
        if (v >= dim_) throw JetError("normal tensor index out of range");
        k.push_back(static_cast<std::uint8_t>(v));
    }
    return k;
}

Rational NormalTensor::at(std::size_t i, std::size_t j, std::vector<std::size_t> ks) const
{
    auto it = components_.find(key(i, j, std::move(ks)));
    return it == components_.end() ? Rational(0) : it->second;
}

void NormalTensor::set(std::size_t i, std::size_t j, std::vector<std::size_t> ks, const Rational& value)
{
    auto k = key(i, j, std::move(ks));
    if (jetmod::is_zero(value))
        components_.erase(k);
    else
        components_[k] = value;
}

Rational NormalTensor::cyclic_sum(std::size_t i, std::size_t j, const std::vector<std::size_t>& ks) const
{
    std::vector<std::size_t> cycle;
    cycle.push_back(j);
    cycle.insert(cycle.end(), ks.begin(), ks.end());
    Rational sum = 0;
    for (std::size_t shift = 0; shift < cycle.size(); ++shift) {
        std::vector<std::size_t> rest;
        for (std::size_t t = 1; t < cycle.size(); ++t) rest.push_back(cycle[(shift + t) % cycle.size()]);
        sum += at(i, cycle[shift], rest);
    }
    return sum;
}

bool NormalTensor::satisfies_cyclic_identity() const
{
    if (order_ == 0) return true;
    // Enumerate i and the multiset {j, k_1..k_s}; the cyclic sum is symmetric
    // in the last s+1 indices because T is symmetric in the k's.
    for (std::size_t i = 0; i < dim_; ++i)
        for (const auto& m : monomials_of_degree(dim_, order_ + 1)) {
            std::vector<std::size_t> idx;
            for (std::size_t a = 0; a < dim_; ++a)
                for (unsigned c = 0; c < m[a]; ++c) idx.push_back(a);
            std::vector<std::size_t> ks(idx.begin() + 1, idx.end());
            if (!jetmod::is_zero(cyclic_sum(i, idx[0], ks))) return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// Exponential map and normalization

DiffeoJet exp_map_jet(const MetricJet& g)
{
    require_identity_frame(g, "exp_map_jet");
    const std::size_t n = g.dim();
    const int r = g.order();
    const int target = r + 1;
    if (r == 0) return DiffeoJet::identity(n, 1);

    const ChristoffelSymbols gamma = christoffel(g);

    std::vector<JetScalar> e;
    for (std::size_t i = 0; i < n; ++i) e.push_back(JetScalar::variable(n, target, i));

    // With E(v) = exp(v) and the Euler operator D, the geodesic t -> E(tv)
    // satisfies D(D-1)E^k + Gamma^k_ij(E) DE^i DE^j = 0. The degree-d part of
    // the Gamma term only involves E below degree d.
    for (int d = 2; d <= target; ++d) {
        Substitution sub(e, d - 2);
        std::vector<JetScalar> de;
        for (const auto& c : e) de.push_back(euler_operator(c).truncated(d));
        std::vector<JetScalar> update;
        for (std::size_t k = 0; k < n; ++k) {
            JetScalar acc(n, d);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i; j < n; ++j) {
                    const JetScalar& gk = gamma(k, i, j);
                    if (gk.is_zero()) continue;
                    JetScalar term = sub.apply(gk.truncated(d - 2)).with_order(d) * de[i] * de[j];
                    if (i != j) term *= Rational(2);
                    acc = acc + term;
                }
            update.push_back(acc.homogeneous_part(static_cast<unsigned>(d)) *
                             Rational(-1, d * (d - 1)));
        }
        for (std::size_t k = 0; k < n; ++k)
            for (const auto& [m, c] : update[k].terms()) e[k].add_term(m, c);
    }
    return DiffeoJet(std::move(e));
}

MetricJet normalize(const MetricJet& g)
{
    require_identity_frame(g, "normalize");
    if (g.order() == 0) return g;
    return pullback(exp_map_jet(g), g);
}

bool gauss_check(const MetricJet& g)
{
    require_identity_frame(g, "gauss_check");
    const std::size_t n = g.dim();
    const int order = g.order() + 1;
    for (std::size_t i = 0; i < n; ++i) {
        JetScalar lhs(n, order);
        for (std::size_t j = 0; j < n; ++j) lhs = lhs + g(i, j).with_order(order) * JetScalar::variable(n, order, j);
        if (!(lhs == JetScalar::variable(n, order, i))) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Normal tensors

namespace {

std::vector<std::size_t> expand_indices(const MultiIndex& m)
{
    std::vector<std::size_t> ks;
    for (std::size_t a = 0; a < m.size(); ++a)
        for (unsigned c = 0; c < m[a]; ++c) ks.push_back(a);
    return ks;
}

} // namespace

std::vector<NormalTensor> normal_tensors(const MetricJet& g_normal)
{
    if (!gauss_check(g_normal)) throw JetError("normal_tensors requires a metric jet in normal coordinates");
    const std::size_t n = g_normal.dim();
    const int r = g_normal.order();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (!g_normal(i, j).homogeneous_part(1).is_zero())
                throw JetError("first normal tensor does not vanish");

    std::vector<NormalTensor> out;
    for (int s = 2; s <= r; ++s) {
        NormalTensor t(n, static_cast<unsigned>(s));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j)
                for (const auto& [m, c] : g_normal(i, j).terms()) {
                    if (m.degree() != static_cast<unsigned>(s)) continue;
                    // d^s/dz^m of c z^m at 0 is m! c.
                    t.set(i, j, expand_indices(m), c * Rational(Integer(std::to_string(m.factorial()))));
                }
        out.push_back(std::move(t));
    }
    return out;
}

MetricJet metric_from_normal_tensors(std::size_t dim, int order, const std::vector<NormalTensor>& tensors)
{
    SymmetricJetArray e(dim, order);
    for (std::size_t i = 0; i < dim; ++i) e(i, i) = JetScalar::constant(dim, order, 1);
    for (std::size_t idx = 0; idx < tensors.size(); ++idx) {
        const NormalTensor& t = tensors[idx];
        if (t.tensor_order() != idx + 2 || t.dim() != dim)
            throw JetError("normal tensor list must hold orders 2, 3, ... in sequence");
        if (static_cast<int>(t.tensor_order()) > order) break;
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = i; j < dim; ++j)
                for (const auto& m : monomials_of_degree(dim, t.tensor_order())) {
                    const Rational v = t.at(i, j, expand_indices(m));
                    if (!is_zero(v)) e(i, j).add_term(m, v / Rational(Integer(std::to_string(m.factorial()))));
                }
    }
    return MetricJet(std::move(e));
}

// ---------------------------------------------------------------------------
// h-representation

MetricJet metric_from_h(const HPoly& h, int order)
{
    if (h.dim() != 2) throw JetError("metric_from_h needs a function of 2 variables");
    if (order < 0) throw JetError("metric order must be non-negative");
    SymmetricJetArray e(2, order);
    e(0, 0) = JetScalar::constant(2, order, 1);
    e(1, 1) = JetScalar::constant(2, order, 1);
    if (order >= 2) {
        if (h.order() < order - 2)
            throw JetError("an h jet of order " + std::to_string(h.order()) +
                           " cannot determine a metric jet of order " + std::to_string(order) +
                           " (need order >= " + std::to_string(order - 2) + ")");
        const JetScalar hh = h.truncated(order - 2).with_order(order);
        const JetScalar x = JetScalar::variable(2, order, 0);
        const JetScalar y = JetScalar::variable(2, order, 1);
        e(0, 0) = e(0, 0) + hh * y * y;
        e(0, 1) = -(hh * x * y);
        e(1, 1) = e(1, 1) + hh * x * x;
    }
    return MetricJet(std::move(e));
}

HPoly extract_h(const MetricJet& g_normal)
{
    if (g_normal.dim() != 2) throw JetError("extract_h needs a 2-dimensional metric");
    if (!gauss_check(g_normal)) throw JetError("extract_h requires a metric jet in normal coordinates");
    const int r = g_normal.order();
    HPoly h(2, std::max(r - 2, 0));
    if (r >= 2)
        for (const auto& [m, c] : g_normal(1, 1).terms()) {
            if (m[0] < 2) continue;
            h.add_term(MultiIndex{m[0] - 2, m[1]}, c);
        }
    if (!(metric_from_h(h, r) == g_normal))
        throw JetError("metric jet is not of the form dx^2 + dy^2 + h (y dx - x dy)^2");
    return h;
}

// ---------------------------------------------------------------------------
// Dimension counts

namespace {

Integer binomial(long long n, long long k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

struct DisjointSets {
    std::vector<std::size_t> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x)
    {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

} // namespace

long long dim_normal(int n, int s)
{
    if (n < 1 || s < 1) throw JetError("dim_normal needs n >= 1 and s >= 1");
    Integer d = binomial(n + 1, 2) * binomial(n + s - 1, s) - n * binomial(n + s, s + 1);
    return d.get_si();
}

long long dim_normal_bruteforce(int n, int s)
{
    if (n < 1 || s < 1) throw JetError("dim_normal_bruteforce needs n >= 1 and s >= 1");
    const std::size_t len = static_cast<std::size_t>(s) + 2;
    std::size_t total = 1;
    for (std::size_t t = 0; t < len; ++t) total *= static_cast<std::size_t>(n);

    auto decode = [&](std::size_t flat) {
        std::vector<std::size_t> idx(len);
        for (std::size_t t = len; t-- > 0;) {
            idx[t] = flat % static_cast<std::size_t>(n);
            flat /= static_cast<std::size_t>(n);
        }
        return idx;
    };
    auto encode = [&](const std::vector<std::size_t>& idx) {
        std::size_t flat = 0;
        for (auto v : idx) flat = flat * static_cast<std::size_t>(n) + v;
        return flat;
    };

    // Equality constraints: T_{ij...} = T_{ji...} and adjacent swaps of the
    // k's generate the two symmetry families; eliminate them by merging.
    DisjointSets sets(total);
    for (std::size_t f = 0; f < total; ++f) {
        auto idx = decode(f);
        auto swapped = idx;
        std::swap(swapped[0], swapped[1]);
        sets.unite(f, encode(swapped));
        for (std::size_t t = 2; t + 1 < len; ++t) {
            auto adj = idx;
            std::swap(adj[t], adj[t + 1]);
            sets.unite(f, encode(adj));
        }
    }
    std::map<std::size_t, std::size_t> column;
    for (std::size_t f = 0; f < total; ++f) column.try_emplace(sets.find(f), column.size());

    // Cyclic-sum constraints over the last s+1 slots, one row per index tuple
    // (duplicates removed).
    std::set<std::vector<long>> rows;
    for (std::size_t f = 0; f < total; ++f) {
        auto idx = decode(f);
        std::vector<long> row(column.size(), 0);
        const std::size_t cyc = len - 1;
        for (std::size_t shift = 0; shift < cyc; ++shift) {
            std::vector<std::size_t> rotated(len);
            rotated[0] = idx[0];
            for (std::size_t t = 0; t < cyc; ++t) rotated[1 + t] = idx[1 + (t + shift) % cyc];
            ++row[column.at(sets.find(encode(rotated)))];
        }
        if (std::any_of(row.begin(), row.end(), [](long v) { return v != 0; })) rows.insert(std::move(row));
    }

    Matrix m(rows.size(), column.size());
    std::size_t ri = 0;
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c)
            if (row[c]) m(ri, c) = row[c];
        ++ri;
    }
    return static_cast<long long>(column.size()) - static_cast<long long>(rank(std::move(m)));
}

long long dim_moduli(int n, int r)
{
    if (n < 1 || r < 0) throw JetError("dim_moduli needs n >= 1 and r >= 0");
    if (r <= 1 || n == 1) return 0;
    if (n == 2) return r == 2 ? 1 : static_cast<long long>(r + 1) * (r - 2) / 2;
    Rational coeff(Integer((r - 1) * n * n - (r + 1) * n), Integer(2 * (r + 1)));
    coeff.canonicalize();
    const Rational value = n + coeff * Rational(binomial(n + r, r));
    if (value.get_den() != 1) throw JetError("moduli dimension formula produced a non-integer");
    return value.get_num().get_si();
}

} // namespace jetmod
