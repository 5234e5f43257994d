#pragma once

#include "jetmod/normal_form.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace jetmod {

/// Complex number with rational real and imaginary parts.
struct GaussRational {
    Rational re;
    Rational im;

    GaussRational() = default;
    GaussRational(Rational real, Rational imag = 0) : re(std::move(real)), im(std::move(imag)) {}
    GaussRational(int real) : re(real), im(0) {}

    static GaussRational i() { return {0, 1}; }

    GaussRational conj() const { return {re, -im}; }
    /// re^2 + im^2.
    Rational norm() const { return re * re + im * im; }
    bool is_zero() const { return jetmod::is_zero(re) && jetmod::is_zero(im); }
    bool is_unit() const { return norm() == 1; }

    GaussRational operator-() const { return {-re, -im}; }
    friend GaussRational operator+(const GaussRational& a, const GaussRational& b) { return {a.re + b.re, a.im + b.im}; }
    friend GaussRational operator-(const GaussRational& a, const GaussRational& b) { return {a.re - b.re, a.im - b.im}; }
    friend GaussRational operator*(const GaussRational& a, const GaussRational& b)
    {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussRational operator/(const GaussRational& a, const GaussRational& b);
    friend bool operator==(const GaussRational&, const GaussRational&) = default;

    /// Integer power; negative exponents need a non-zero base.
    GaussRational pow(long e) const;

    /// "a", "a+bi", "bi" with exact rationals.
    std::string to_string() const;
};

/// Real polynomial written as sum c_{a,b} z^a zbar^b with z = x + iy.
/// Reality: c_{b,a} = conj(c_{a,b}).
struct ZBarPoly {
    unsigned degree_bound = 0;
    std::map<std::pair<unsigned, unsigned>, GaussRational> coeffs;

    GaussRational at(unsigned a, unsigned b) const;
    bool satisfies_reality() const;
};

/// Change of basis x = (z + zbar)/2, y = (z - zbar)/(2i).
ZBarPoly to_zbar(const HPoly& h);
/// Back to x, y; throws if the result is not real.
HPoly from_zbar(const ZBarPoly& p, int order);

struct UnitRootConstraint {
    long exponent; ///< positive
    GaussRational value; ///< unit modulus
};

/// Outcome of solving beta^{e_i} = u_i for a unit complex beta.
///
/// When solvable, the witnesses are exactly the g-th roots of w. An empty
/// constraint list is reported as g = 0, w = 1 (every unit works).
struct UnitRootSolution {
    bool solvable = false;
    long g = 0;
    GaussRational w{1};
};

UnitRootSolution solve_unit_root_system(const std::vector<UnitRootConstraint>& constraints);

/// Conjugacy class of a closed subgroup of O(2).
struct GroupType {
    enum class Kind { O2, SO2, D, K };

    Kind kind = Kind::O2;
    int m = 0; ///< rotation order for D_m / K_m; 0 otherwise

    static GroupType o2() { return {Kind::O2, 0}; }
    static GroupType dihedral(int m) { return {Kind::D, m}; }
    static GroupType cyclic(int m) { return {Kind::K, m}; }

    /// "O(2)", "SO(2)", "D_3", "K_1".
    std::string to_string() const;
    friend bool operator==(const GroupType&, const GroupType&) = default;
};

/// Stabilizer of h in O(2) for the action (sigma . h)(v) = h(sigma^{-1} v).
/// Never returns SO(2).
GroupType stabilizer(const HPoly& h);

/// normalize, extract_h, stabilizer. Requires n = 2 and g(0) = I.
GroupType type_of_jet(const MetricJet& g);

/// sigma . h = h o sigma^{-1} for an orthogonal 2 x 2 matrix sigma.
HPoly transform_h(const HPoly& h, const Matrix& orthogonal);

/// Orthogonal map relating two equivalent jets.
///
/// Rotation: h2(z) = h1(conj(alpha) z) with alpha^g = w.
/// Reflection: h2(z) = h1(beta conj(z)) with beta^g = w.
/// g = 0 means any unit alpha (or beta) works.
struct OrbitWitness {
    enum class Kind { rotation, reflection };
    Kind kind = Kind::rotation;
    long g = 0;
    GaussRational w{1};

    /// Principal g-th root of w, as decimal strings (re, im).
    std::pair<std::string, std::string> numeric(int digits = 30) const;
    /// e.g. "rotation witness alpha^2 = i".
    std::string describe() const;
};

struct EquivalenceResult {
    bool equivalent = false;
    std::optional<OrbitWitness> witness;
};

/// Decides whether sigma . h1 = h2 for some sigma in O(2).
EquivalenceResult h_equivalent(const HPoly& h1, const HPoly& h2);

/// Decides whether two r-jets (n = 2, g(0) = I, equal orders) are related by
/// a local diffeomorphism.
EquivalenceResult orbit_equivalent(const MetricJet& g1, const MetricJet& g2);

struct InvariantVector {
    int order = 0; ///< 2, 3 or 4
    std::vector<Rational> values; ///< p1; p1,p2; or p1..p5

    friend bool operator==(const InvariantVector&, const InvariantVector&) = default;
};

/// Curvature invariants of the r-jet of g (r in {2,3,4}): K, |grad K|^2,
/// tr Hess K, det Hess K, Hess K(grad K, grad K).
InvariantVector invariants(const MetricJet& g, int r);

/// p2 >= 0, p3^2 - 4 p4 >= 0, (2 p5 - p2 p3)^2 <= p2^2 (p3^2 - 4 p4).
bool y_membership(const InvariantVector& v);

/// Strata types of the moduli space of r-jets in dimension 2.
std::vector<GroupType> census(int r);

enum class PresetKind { zero, pm, qm, pm_plus_r2qm, x_plus_xy };

/// Re(z^m) and Im(z^m) as jets of the given order.
HPoly pm_poly(int m, int order);
HPoly qm_poly(int m, int order);

/// The h polynomial of a preset, as a jet of order r - 2.
HPoly preset_polynomial(PresetKind kind, int m, int r);
/// metric_from_h(preset_polynomial(kind, m, r), r).
MetricJet preset_h(PresetKind kind, int m, int r);

} // namespace jetmod
