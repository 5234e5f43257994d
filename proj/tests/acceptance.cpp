// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include "fd_oracle.hpp"

#include "jetmod/sampling.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

using namespace jetmod;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

Rational q(long n, long d = 1)
{
    Rational r(n, d);
    r.canonicalize();
    return r;
}

// ---------------------------------------------------------------------------

Outcome dimension_formulas()
{
    Outcome o;
    for (int n = 1; n <= 4; ++n)
        for (int s = 1; s <= 5; ++s)
            o.require(dim_normal(n, s) == dim_normal_bruteforce(n, s),
                      "dim_normal != bruteforce at n=" + std::to_string(n) + " s=" + std::to_string(s));
    o.require(dim_normal(2, 1) == 0, "dim N_1 != 0");
    o.require(dim_moduli(2, 2) == 1, "dim M_2^2 != 1");
    for (int r = 3; r <= 10; ++r) {
        long long sum = 0;
        for (int s = 1; s <= r; ++s) sum += dim_normal(2, s);
        o.require(dim_moduli(2, r) == (r + 1) * (r - 2) / 2 && dim_moduli(2, r) == sum - 1,
                  "moduli dimension mismatch at r=" + std::to_string(r));
    }
    if (o.pass) o.detail = "n<=4, s<=5 formula = elimination; r=3..10 moduli counts agree";
    return o;
}

Outcome normalization_postcondition()
{
    Outcome o;
    JetSampler s(2024);
    int checked = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 3);
        const int r = 2 + (trial / 3) % 5;
        const MetricJet g = normalize(s.metric(n, r));
        const std::string where = " (trial " + std::to_string(trial) + ")";
        o.require(gauss_check(g), "gauss_check failed" + where);
        const auto ts = normal_tensors(g);
        for (const auto& t : ts) {
            o.require(t.satisfies_cyclic_identity(), "cyclic sum nonzero" + where);
            // Symmetries, read back through arbitrary index orders.
            for (const auto& [key, v] : t.components()) {
                std::vector<std::size_t> ks(key.begin() + 2, key.end());
                std::reverse(ks.begin(), ks.end());
                o.require(t.at(key[1], key[0], ks) == v, "symmetry violated" + where);
            }
        }
        o.require(metric_from_normal_tensors(n, r, ts) == g, "tensors do not rebuild the jet" + where);
        ++checked;
    }
    if (o.pass) o.detail = std::to_string(checked) + " jets, n in {1,2,3}, r in 2..6";
    return o;
}

Outcome stratum_golden_set()
{
    Outcome o;
    for (int r = 0; r <= 10; ++r) {
        const std::string at = " at r=" + std::to_string(r);
        o.require(type_of_jet(preset_h(PresetKind::zero, 0, r)) == GroupType::o2(), "h=0 not O(2)" + at);
        for (int m = 1; m <= r - 2; ++m)
            o.require(type_of_jet(preset_h(PresetKind::pm, m, r)) == GroupType::dihedral(m),
                      "p_" + std::to_string(m) + " not D_m" + at);
        for (int m = 1; m <= r - 4; ++m)
            o.require(type_of_jet(preset_h(PresetKind::pm_plus_r2qm, m, r)) == GroupType::cyclic(m),
                      "p_m + r^2 q_m not K_m for m=" + std::to_string(m) + at);
        const std::size_t expected = r <= 2 ? 1 : r == 3 ? 2 : r == 4 ? 4 : static_cast<std::size_t>(2 * r - 5);
        o.require(census(r).size() == expected, "census count" + at);
    }
    o.require(type_of_jet(preset_h(PresetKind::x_plus_xy, 0, 4)) == GroupType::cyclic(1), "x + xy not K_1");
    if (o.pass) o.detail = "presets for r=0..10 and census counts 1,1,1,2,4,2r-5";
    return o;
}

Outcome so2_exclusion()
{
    Outcome o;
    JetSampler s(4242);
    std::map<std::string, int> seen;
    for (int trial = 0; trial < 1000; ++trial) {
        const int r = 2 + trial % 6;
        const HPoly h = s.h_poly(r - 2);
        const GroupType t = type_of_jet(metric_from_h(h, r));
        o.require(t.kind != GroupType::Kind::SO2, "SO(2) reported");
        ++seen[t.to_string()];
    }
    for (int trial = 0; trial < 200; ++trial) {
        const int r = 2 + trial % 8;
        o.require(type_of_jet(metric_from_h(s.rotation_invariant_h(r - 2), r)) == GroupType::o2(),
                  "rotation-invariant h not O(2)");
    }
    if (o.pass) {
        std::ostringstream d;
        d << "1000 random h-jets (";
        bool first = true;
        for (const auto& [k, v] : seen) {
            d << (first ? "" : ", ") << k << ": " << v;
            first = false;
        }
        d << "), 200 rotation-invariant -> O(2)";
        o.detail = d.str();
    }
    return o;
}

Outcome equivalence_vs_invariants()
{
    Outcome o;
    JetSampler s(5150);
    int agree_eq = 0, agree_ne = 0;
    const std::vector<Rational> palette{q(-1), q(0), q(1, 2), q(2)};
    auto pick = [&](int k) { return palette[static_cast<std::size_t>(k) % palette.size()]; };
    auto disguise = [&](const MetricJet& g) { return pullback(s.diffeo(2, g.order() + 1), g); };

    // r = 3: h = c + a x + b y; p1 = -3c, p2 ~ a^2 + b^2.
    for (int trial = 0; trial < 200; ++trial) {
        const int mode = trial % 4;
        HPoly h1(2, 1), h2(2, 1);
        h1.add_term({0, 0}, pick(trial));
        h1.add_term({1, 0}, pick(trial / 4));
        h1.add_term({0, 1}, pick(trial / 16));
        if (mode == 0) {
            h2 = transform_h(h1, s.rational_orthogonal()); // same orbit
        } else if (mode == 1) {
            h2 = h1;
            h2.add_term({1, 0}, 1); // usually a different gradient norm
        } else if (mode == 2) {
            h2 = h1;
            h2.add_term({0, 0}, q(1, 3)); // different K(0)
        } else {
            h2 = s.h_poly(1);
        }
        const MetricJet g1 = disguise(metric_from_h(h1, 3));
        const MetricJet g2 = disguise(metric_from_h(h2, 3));
        const bool inv_equal = invariants(g1, 3) == invariants(g2, 3);
        const bool equivalent = orbit_equivalent(g1, g2).equivalent;
        o.require(inv_equal == equivalent, "r=3 mismatch at pair " + std::to_string(trial));
        (equivalent ? agree_eq : agree_ne)++;
    }
    // r = 2: h = c.
    for (int trial = 0; trial < 200; ++trial) {
        const MetricJet g1 = disguise(metric_from_h(JetScalar::constant(2, 0, pick(trial)), 2));
        const MetricJet g2 = disguise(metric_from_h(JetScalar::constant(2, 0, pick(trial / 4 + trial)), 2));
        const bool equivalent = orbit_equivalent(g1, g2).equivalent;
        o.require((invariants(g1, 2) == invariants(g2, 2)) == equivalent,
                  "r=2 mismatch at pair " + std::to_string(trial));
        (equivalent ? agree_eq : agree_ne)++;
    }
    if (o.pass)
        o.detail = "400 pairs (" + std::to_string(agree_eq) + " equivalent, " + std::to_string(agree_ne) +
                   " not), all agree with invariant equality";
    return o;
}

Outcome p2_q2_witness()
{
    Outcome o;
    const auto res = orbit_equivalent(preset_h(PresetKind::pm, 2, 4), preset_h(PresetKind::qm, 2, 4));
    o.require(res.equivalent, "not equivalent");
    o.require(res.witness && res.witness->kind == OrbitWitness::Kind::rotation, "no rotation witness");
    if (res.witness) {
        o.require(res.witness->g == 2 && res.witness->w == GaussRational::i(), "witness is not alpha^2 = i");
        if (o.pass) o.detail = res.witness->describe();
    }
    return o;
}

Outcome curvature_pipeline()
{
    using namespace jetmod::test;
    Outcome o;
    const InvariantVector zeros{4, {0, 0, 0, 0, 0}};
    o.require(invariants(MetricJet::flat(2, 4), 4) == zeros, "flat invariants nonzero");

    HPoly sphere(2, 4);
    sphere.add_term({0, 0}, q(-1, 3));
    sphere.add_term({2, 0}, q(2, 45));
    sphere.add_term({0, 2}, q(2, 45));
    sphere.add_term({4, 0}, q(-1, 315));
    sphere.add_term({2, 2}, q(-2, 315));
    sphere.add_term({0, 4}, q(-1, 315));
    const MetricJet gs = metric_from_h(sphere, 6);
    o.require(gauss_curvature(gs) == JetScalar::constant(2, 4, 1), "sphere K jet != 1");
    const CurvatureData ds = curvature_data(gs);
    o.require(ds.k0 == 1 && ds.grad == std::array<Rational, 2>{0, 0} && ds.hess == CurvatureData{}.hess,
              "sphere curvature data not (1, 0, 0)");

    std::vector<HPoly> oracle_cases{sphere.with_order(2), JetScalar::variable(2, 2, 0)};
    for (const auto& c : {q(1), q(-1, 3), q(5, 7), q(-4)}) {
        const MetricJet g = metric_from_h(JetScalar::constant(2, 0, c), 2);
        o.require(gauss_curvature(g).constant_term() == -3 * c, "K(0) != -3c");
        oracle_cases.push_back(JetScalar::constant(2, 2, c));
    }

    const Float tol("1e-20");
    Float worst = 0;
    for (const auto& h : oracle_cases) {
        const MetricJet g = metric_from_h(h, 4);
        const CurvatureData exact = curvature_data(g);
        const FdCurvatureOracle fd(g);
        auto track = [&](const Float& num, const Rational& ex) {
            const Float err = abs(num - to_float(ex));
            if (err > worst) worst = err;
            o.require(err <= tol, "finite-difference oracle disagrees");
        };
        track(fd.curvature(0, 0), exact.k0);
        const auto gr = fd.gradient();
        track(gr[0], exact.grad[0]);
        track(gr[1], exact.grad[1]);
        const auto he = fd.hessian();
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) track(he[i][j], exact.hess[i][j]);
    }
    if (o.pass) {
        std::ostringstream d;
        d << "exact checks ok; oracle max error " << std::setprecision(3) << worst.convert_to<double>();
        o.detail = d.str();
    }
    return o;
}

// Diffeomorphism with linear part Q R (Q rational orthogonal, R upper
// triangular): the new base metric R^T R has rational square pivots, so an
// exact frame change back to g(0) = I exists.
DiffeoJet general_diffeo(JetSampler& s, int order)
{
    Rational a = s.rational(3, 2), b = s.rational(3, 2), c = s.rational(3, 3);
    if (is_zero(a)) a = 1;
    if (is_zero(b)) b = -1;
    const Matrix lin = s.rational_orthogonal() * Matrix{{a, c}, {0, b}};
    const DiffeoJet base = DiffeoJet::linear(lin, order);
    return DiffeoJet({base.component(0) + s.series(2, order, 2, 0.5), base.component(1) + s.series(2, order, 2, 0.5)});
}

Outcome naturality()
{
    Outcome o;
    JetSampler s(8080);
    int pairs = 0;
    for (int k = 0; k < 10; ++k) {
        const MetricJet g = s.metric(2, 4);
        const GroupType t = type_of_jet(g);
        std::vector<InvariantVector> base;
        for (int r = 2; r <= 4; ++r) base.push_back(invariants(g, r));
        for (int d = 0; d < 5; ++d) {
            const MetricJet moved = to_identity_frame(pullback(general_diffeo(s, 5), g));
            for (int r = 2; r <= 4; ++r)
                o.require(invariants(moved, r) == base[static_cast<std::size_t>(r - 2)],
                          "invariants changed (order " + std::to_string(r) + ")");
            o.require(type_of_jet(moved) == t, "type changed");
            ++pairs;
        }
    }
    if (o.pass) o.detail = std::to_string(pairs) + " (metric, diffeomorphism) pairs, orders 2..4";
    return o;
}

Outcome y_membership_necessity()
{
    Outcome o;
    JetSampler s(9090);
    for (int trial = 0; trial < 500; ++trial)
        o.require(y_membership(invariants(s.metric(2, 4), 4)), "invariant vector outside Y");
    if (o.pass) o.detail = "500 random 4-jets";
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"dimension formulas", dimension_formulas},
        {"normalization postcondition", normalization_postcondition},
        {"stratum golden set", stratum_golden_set},
        {"SO(2) exclusion", so2_exclusion},
        {"equivalence vs invariants", equivalence_vs_invariants},
        {"p2/q2 witness", p2_q2_witness},
        {"curvature pipeline", curvature_pipeline},
        {"naturality", naturality},
        {"Y-membership", y_membership_necessity},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = criteria[i].second();
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << "criterion " << i + 1 << " [" << criteria[i].first << "]: " << (out.pass ? "PASS" : "FAIL")
                  << " - " << out.detail << " (" << std::fixed << std::setprecision(2) << secs << "s)\n";
        if (!out.pass) ++failures;
    }
    std::cout << (failures ? std::to_string(failures) + " criteria failed\n" : "all criteria passed\n");
    return failures ? 1 : 0;
}
