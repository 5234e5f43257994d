#include "jetmod/strata2d.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <numeric>
#include <sstream>

namespace jetmod {

// ---------------------------------------------------------------------------
// GaussRational

GaussRational operator/(const GaussRational& a, const GaussRational& b)
{
    const Rational n = b.norm();
    if (jetmod::is_zero(n)) throw JetError("division by zero Gauss rational");
    const GaussRational num = a * b.conj();
    return {num.re / n, num.im / n};
}

GaussRational GaussRational::pow(long e) const
{
    GaussRational base = *this;
    if (e < 0) {
        base = GaussRational(1) / base;
        e = -e;
    }
    GaussRational out(1);
    while (e > 0) {
        if (e & 1) out = out * base;
        base = base * base;
        e >>= 1;
    }
    return out;
}

std::string GaussRational::to_string() const
{
    if (jetmod::is_zero(im)) return jetmod::to_string(re);
    std::string imag;
    if (im == 1)
        imag = "i";
    else if (im == -1)
        imag = "-i";
    else
        imag = jetmod::to_string(im) + "i";
    if (jetmod::is_zero(re)) return imag;
    if (sgn(im) > 0) return jetmod::to_string(re) + "+" + imag;
    return jetmod::to_string(re) + imag;
}

// ---------------------------------------------------------------------------
// z / zbar basis

namespace {

using ZMap = std::map<std::pair<unsigned, unsigned>, GaussRational>;

ZMap zmul(const ZMap& a, const ZMap& b)
{
    ZMap out;
    for (const auto& [ka, va] : a)
        for (const auto& [kb, vb] : b) {
            auto& slot = out[{ka.first + kb.first, ka.second + kb.second}];
            slot = slot + va * vb;
        }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

ZMap zpow(const ZMap& base, unsigned e)
{
    ZMap out{{{0u, 0u}, GaussRational(1)}};
    for (unsigned k = 0; k < e; ++k) out = zmul(out, base);
    return out;
}

} // namespace

GaussRational ZBarPoly::at(unsigned a, unsigned b) const
{
    auto it = coeffs.find({a, b});
    return it == coeffs.end() ? GaussRational(0) : it->second;
}

bool ZBarPoly::satisfies_reality() const
{
    for (const auto& [k, v] : coeffs)
        if (!(at(k.second, k.first) == v.conj())) return false;
    return true;
}

ZBarPoly to_zbar(const HPoly& h)
{
    if (h.dim() != 2) throw JetError("to_zbar needs a function of 2 variables");
    // x = z/2 + zbar/2, y = -i/2 z + i/2 zbar
    const ZMap x{{{1u, 0u}, GaussRational(Rational(1, 2))}, {{0u, 1u}, GaussRational(Rational(1, 2))}};
    const ZMap y{{{1u, 0u}, GaussRational(0, Rational(-1, 2))}, {{0u, 1u}, GaussRational(0, Rational(1, 2))}};
    ZBarPoly out;
    out.degree_bound = static_cast<unsigned>(h.order());
    for (const auto& [m, c] : h.terms()) {
        const ZMap term = zmul(zpow(x, m[0]), zpow(y, m[1]));
        for (const auto& [k, v] : term) {
            auto& slot = out.coeffs[k];
            slot = slot + v * GaussRational(c);
        }
    }
    std::erase_if(out.coeffs, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

HPoly from_zbar(const ZBarPoly& p, int order)
{
    // z = x + iy, zbar = x - iy in the (x, y) basis, keyed by exponents of x, y.
    using XY = std::map<std::pair<unsigned, unsigned>, GaussRational>;
    const XY z{{{1u, 0u}, GaussRational(1)}, {{0u, 1u}, GaussRational::i()}};
    const XY zb{{{1u, 0u}, GaussRational(1)}, {{0u, 1u}, -GaussRational::i()}};
    XY acc;
    for (const auto& [k, v] : p.coeffs) {
        const XY term = zmul(zpow(z, k.first), zpow(zb, k.second));
        for (const auto& [kk, vv] : term) {
            auto& slot = acc[kk];
            slot = slot + vv * v;
        }
    }
    HPoly h(2, order);
    for (const auto& [k, v] : acc) {
        if (!jetmod::is_zero(v.im)) throw JetError("z/zbar polynomial is not real");
        h.add_term(MultiIndex{k.first, k.second}, v.re);
    }
    return h;
}

// ---------------------------------------------------------------------------
// Unit root systems

UnitRootSolution solve_unit_root_system(const std::vector<UnitRootConstraint>& constraints)
{
    UnitRootSolution out;
    if (constraints.empty()) {
        out.solvable = true;
        return out;
    }
    for (const auto& c : constraints) {
        if (c.exponent <= 0) throw JetError("unit root constraint needs a positive exponent");
        if (!c.value.is_unit())
            throw JetError("unit root constraint value " + c.value.to_string() + " is not of modulus 1");
    }
    // Bezout: g = sum lambda_i e_i; then w = prod u_i^{lambda_i} = beta^g.
    long g = constraints.front().exponent;
    std::vector<long> lambda{1};
    for (std::size_t i = 1; i < constraints.size(); ++i) {
        const long e = constraints[i].exponent;
        long old_r = g, r = e, old_s = 1, s = 0, old_t = 0, t = 1;
        while (r != 0) {
            const long q = old_r / r;
            std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
            std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
            std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
        }
        for (auto& l : lambda) l *= old_s;
        lambda.push_back(old_t);
        g = old_r;
    }
    GaussRational w(1);
    for (std::size_t i = 0; i < constraints.size(); ++i) {
        // Unit modulus: u^{-1} = conj(u).
        const GaussRational& u = constraints[i].value;
        w = w * (lambda[i] >= 0 ? u.pow(lambda[i]) : u.conj().pow(-lambda[i]));
    }
    out.g = g;
    out.w = w;
    out.solvable = true;
    for (const auto& c : constraints)
        if (!(w.pow(c.exponent / g) == c.value)) {
            out.solvable = false;
            break;
        }
    return out;
}

// ---------------------------------------------------------------------------
// Group types and stabilizers

std::string GroupType::to_string() const
{
    switch (kind) {
    case Kind::O2:
        return "O(2)";
    case Kind::SO2:
        return "SO(2)";
    case Kind::D:
        return "D_" + std::to_string(m);
    case Kind::K:
        return "K_" + std::to_string(m);
    }
    return "?";
}

namespace {

// beta^{b-a} = value, stated with a positive exponent.
UnitRootConstraint normalized_constraint(long diff, const GaussRational& value)
{
    if (diff < 0) return {-diff, value.conj()};
    return {diff, value};
}

} // namespace

GroupType stabilizer(const HPoly& h)
{
    const ZBarPoly p = to_zbar(h);
    // Rotation rho_alpha scales c_{a,b} by alpha^{b-a}.
    long m = 0;
    for (const auto& [k, v] : p.coeffs)
        if (k.first != k.second) m = std::gcd(m, std::labs(static_cast<long>(k.second) - static_cast<long>(k.first)));
    // Rotation-invariant h is a series in z zbar, hence also reflection
    // invariant: SO(2) never occurs as a stabilizer.
    if (m == 0) return GroupType::o2();

    // Reflection z -> beta zbar fixes h iff beta^{b-a} c_{b,a} = c_{a,b}.
    std::vector<UnitRootConstraint> system;
    for (const auto& [k, v] : p.coeffs) {
        if (k.first >= k.second) continue;
        system.push_back(normalized_constraint(static_cast<long>(k.second) - static_cast<long>(k.first),
                                               v / v.conj()));
    }
    const bool reflection = solve_unit_root_system(system).solvable;
    return reflection ? GroupType::dihedral(static_cast<int>(m)) : GroupType::cyclic(static_cast<int>(m));
}

GroupType type_of_jet(const MetricJet& g)
{
    if (g.dim() != 2) throw JetError("type_of_jet is defined for dimension 2 only");
    return stabilizer(extract_h(normalize(g)));
}

HPoly transform_h(const HPoly& h, const Matrix& orthogonal)
{
    if (h.dim() != 2 || orthogonal.rows() != 2 || !is_orthogonal(orthogonal))
        throw JetError("transform_h needs a 2 x 2 orthogonal matrix");
    if (h.order() == 0) return h;
    return substitute(h, DiffeoJet::linear(orthogonal.transposed(), h.order()));
}

// ---------------------------------------------------------------------------
// Equivalence

std::pair<std::string, std::string> OrbitWitness::numeric(int digits) const
{
    using Float = boost::multiprecision::cpp_bin_float_50;
    if (g == 0) return {"1", "0"};
    const Float re(w.re.get_num().get_str());
    const Float re_den(w.re.get_den().get_str());
    const Float im(w.im.get_num().get_str());
    const Float im_den(w.im.get_den().get_str());
    const Float angle = atan2(im / im_den, re / re_den) / Float(g);
    auto fmt = [digits](const Float& v) {
        std::ostringstream os;
        os.setf(std::ios::fixed);
        os.precision(digits);
        os << v;
        return os.str();
    };
    return {fmt(cos(angle)), fmt(sin(angle))};
}

std::string OrbitWitness::describe() const
{
    const char* var = kind == Kind::rotation ? "alpha" : "beta";
    std::string out = kind == Kind::rotation ? "rotation witness " : "reflection witness ";
    if (g == 0) return out + "any unit " + var + " (e.g. " + var + " = 1)";
    if (g == 1) return out + var + " = " + w.to_string();
    return out + var + "^" + std::to_string(g) + " = " + w.to_string();
}

namespace {

// Solves target_{ab} = x^{b-a} source_{ab} for a unit x.
std::optional<UnitRootSolution> scaled_match(const ZBarPoly& source, const ZBarPoly& target)
{
    if (source.coeffs.size() != target.coeffs.size()) return std::nullopt;
    std::vector<UnitRootConstraint> system;
    for (const auto& [k, v] : source.coeffs) {
        auto it = target.coeffs.find(k);
        if (it == target.coeffs.end()) return std::nullopt;
        const GaussRational& t = it->second;
        if (k.first == k.second) {
            if (!(t == v)) return std::nullopt;
            continue;
        }
        // The group preserves coefficient moduli.
        if (t.norm() != v.norm()) return std::nullopt;
        if (k.first > k.second) continue; // conjugate of the (b, a) constraint
        system.push_back(normalized_constraint(static_cast<long>(k.second) - static_cast<long>(k.first), t / v));
    }
    auto sol = solve_unit_root_system(system);
    if (!sol.solvable) return std::nullopt;
    return sol;
}

} // namespace

EquivalenceResult h_equivalent(const HPoly& h1, const HPoly& h2)
{
    if (h1.order() != h2.order()) throw JetError("order mismatch in equivalence test");
    const ZBarPoly p1 = to_zbar(h1);
    const ZBarPoly p2 = to_zbar(h2);
    if (auto sol = scaled_match(p1, p2)) return {true, OrbitWitness{OrbitWitness::Kind::rotation, sol->g, sol->w}};
    // (h1 o beta conj)(z) has coefficients beta^{b-a} c_{b,a} = beta^{b-a} conj(c_{a,b}).
    ZBarPoly reflected = p1;
    for (auto& [k, v] : reflected.coeffs) v = v.conj();
    if (auto sol = scaled_match(reflected, p2))
        return {true, OrbitWitness{OrbitWitness::Kind::reflection, sol->g, sol->w}};
    return {false, std::nullopt};
}

EquivalenceResult orbit_equivalent(const MetricJet& g1, const MetricJet& g2)
{
    if (g1.dim() != 2 || g2.dim() != 2) throw JetError("orbit_equivalent is defined for dimension 2 only");
    if (g1.order() != g2.order())
        throw JetError("order mismatch: " + std::to_string(g1.order()) + " vs " + std::to_string(g2.order()));
    return h_equivalent(extract_h(normalize(g1)), extract_h(normalize(g2)));
}

// ---------------------------------------------------------------------------
// Invariants

InvariantVector invariants(const MetricJet& g, int r)
{
    if (g.dim() != 2) throw JetError("invariants are defined for dimension 2 only");
    if (r < 2 || r > 4) throw JetError("invariants are available for orders 2, 3 and 4");
    if (g.order() < r)
        throw JetError("invariants of order " + std::to_string(r) + " need a metric jet of order >= " +
                       std::to_string(r) + ", got " + std::to_string(g.order()));
    require_identity_frame(g, "invariants");
    const MetricJet gn = normalize(g.truncated(r));
    const JetScalar k = gauss_curvature(gn);

    InvariantVector out;
    out.order = r;
    out.values.push_back(k.constant_term());
    if (r >= 3) {
        const Rational gx = k.coefficient({1, 0});
        const Rational gy = k.coefficient({0, 1});
        out.values.push_back(gx * gx + gy * gy);
        if (r == 4) {
            const Rational hxx = 2 * k.coefficient({2, 0});
            const Rational hyy = 2 * k.coefficient({0, 2});
            const Rational hxy = k.coefficient({1, 1});
            out.values.push_back(hxx + hyy);
            out.values.push_back(hxx * hyy - hxy * hxy);
            out.values.push_back(hxx * gx * gx + 2 * hxy * gx * gy + hyy * gy * gy);
        }
    }
    return out;
}

bool y_membership(const InvariantVector& v)
{
    if (v.order != 4 || v.values.size() != 5) throw JetError("y_membership needs an order-4 invariant vector");
    const Rational& p2 = v.values[1];
    const Rational& p3 = v.values[2];
    const Rational& p4 = v.values[3];
    const Rational& p5 = v.values[4];
    const Rational disc = p3 * p3 - 4 * p4;
    const Rational lhs = (2 * p5 - p2 * p3) * (2 * p5 - p2 * p3);
    return sgn(p2) >= 0 && sgn(disc) >= 0 && lhs <= p2 * p2 * disc;
}

std::vector<GroupType> census(int r)
{
    if (r < 0) throw JetError("census needs r >= 0");
    std::vector<GroupType> out{GroupType::o2()};
    for (int m = 1; m <= r - 2; ++m) out.push_back(GroupType::dihedral(m));
    if (r == 4) out.push_back(GroupType::cyclic(1));
    for (int m = 1; m <= r - 4; ++m) out.push_back(GroupType::cyclic(m));
    return out;
}

// ---------------------------------------------------------------------------
// Presets

namespace {

// (x + iy)^m as real and imaginary parts.
std::pair<HPoly, HPoly> z_power(int m, int order)
{
    HPoly re(2, order), im(2, order);
    Integer binom = 1;
    for (int k = 0; k <= m; ++k) {
        if (k > 0) binom = binom * (m - k + 1) / k;
        // i^k
        const MultiIndex mono{static_cast<unsigned>(m - k), static_cast<unsigned>(k)};
        switch (k % 4) {
        case 0: re.add_term(mono, Rational(binom)); break;
        case 1: im.add_term(mono, Rational(binom)); break;
        case 2: re.add_term(mono, Rational(-binom)); break;
        case 3: im.add_term(mono, Rational(-binom)); break;
        }
    }
    return {re, im};
}

} // namespace

HPoly pm_poly(int m, int order) { return z_power(m, order).first; }
HPoly qm_poly(int m, int order) { return z_power(m, order).second; }

HPoly preset_polynomial(PresetKind kind, int m, int r)
{
    auto require = [&](int min_r, const char* what) {
        if (r < min_r)
            throw JetError(std::string("preset ") + what + " needs r >= " + std::to_string(min_r) + ", got r = " +
                           std::to_string(r));
    };
    auto require_m = [&] {
        if (m < 1) throw JetError("preset needs m >= 1");
    };
    const int order = std::max(r - 2, 0);
    switch (kind) {
    case PresetKind::zero:
        if (r < 0) throw JetError("preset needs r >= 0");
        return HPoly(2, order);
    case PresetKind::pm:
        require_m();
        require(m + 2, "pm");
        return pm_poly(m, order);
    case PresetKind::qm:
        require_m();
        require(m + 2, "qm");
        return qm_poly(m, order);
    case PresetKind::pm_plus_r2qm: {
        require_m();
        require(m + 4, "pm_plus_r2qm");
        const HPoly r2 = JetScalar::monomial(2, order, {2, 0}, 1) + JetScalar::monomial(2, order, {0, 2}, 1);
        return pm_poly(m, order) + r2 * qm_poly(m, order);
    }
    case PresetKind::x_plus_xy:
        require(4, "x_plus_xy");
        return JetScalar::monomial(2, order, {1, 0}, 1) + JetScalar::monomial(2, order, {1, 1}, 1);
    }
    throw JetError("unknown preset");
}

MetricJet preset_h(PresetKind kind, int m, int r) { return metric_from_h(preset_polynomial(kind, m, r), r); }

} // namespace jetmod
