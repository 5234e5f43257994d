#pragma once

// Finite-difference curvature of a polynomial surface metric, evaluated in
// 100-digit binary floating point. Independent of the Christoffel pipeline:
// K comes from the Brioschi formula in E, F, G and their partials.

#include "jetmod/metric_jet.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <array>
#include <functional>

namespace jetmod::test {

using Float = boost::multiprecision::cpp_bin_float_100;

inline Float to_float(const Rational& q)
{
    return Float(q.get_num().get_str()) / Float(q.get_den().get_str());
}

inline Float eval(const JetScalar& p, const Float& x, const Float& y)
{
    Float sum = 0;
    for (const auto& [m, c] : p.terms()) sum += to_float(c) * pow(x, m[0]) * pow(y, m[1]);
    return sum;
}

struct FdOracleConfig {
    Float metric_step = Float("1e-25");
    Float grad_step = Float("1e-15");
    Float hess_step = Float("1e-12");
};

class FdCurvatureOracle {
public:
    FdCurvatureOracle(const MetricJet& g, FdOracleConfig cfg = {}) : g_(g), cfg_(cfg) {}

    /// Gauss curvature at (x, y).
    Float curvature(const Float& x, const Float& y) const
    {
        const Float h = cfg_.metric_step;
        auto f = [&](std::size_t i, std::size_t j) {
            return [this, i, j](const Float& u, const Float& v) { return eval(g_(i, j), u, v); };
        };
        const auto E = f(0, 0), F = f(0, 1), G = f(1, 1);
        auto du = [&](auto fn) { return (fn(x + h, y) - fn(x - h, y)) / (2 * h); };
        auto dv = [&](auto fn) { return (fn(x, y + h) - fn(x, y - h)) / (2 * h); };
        auto duu = [&](auto fn) { return (fn(x + h, y) - 2 * fn(x, y) + fn(x - h, y)) / (h * h); };
        auto dvv = [&](auto fn) { return (fn(x, y + h) - 2 * fn(x, y) + fn(x, y - h)) / (h * h); };
        auto duv = [&](auto fn) {
            return (fn(x + h, y + h) - fn(x + h, y - h) - fn(x - h, y + h) + fn(x - h, y - h)) / (4 * h * h);
        };
        const Float e = E(x, y), ff = F(x, y), gg = G(x, y);
        const Float Eu = du(E), Ev = dv(E), Fu = du(F), Fv = dv(F), Gu = du(G), Gv = dv(G);
        const Float Evv = dvv(E), Fuv = duv(F), Guu = duu(G);

        auto det3 = [](const std::array<std::array<Float, 3>, 3>& m) {
            return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                   m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                   m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        };
        const std::array<std::array<Float, 3>, 3> m1{{
            {-Evv / 2 + Fuv - Guu / 2, Eu / 2, Fu - Ev / 2},
            {Fv - Gu / 2, e, ff},
            {Gv / 2, ff, gg},
        }};
        const std::array<std::array<Float, 3>, 3> m2{{
            {Float(0), Ev / 2, Gu / 2},
            {Ev / 2, e, ff},
            {Gu / 2, ff, gg},
        }};
        const Float w = e * gg - ff * ff;
        return (det3(m1) - det3(m2)) / (w * w);
    }

    std::array<Float, 2> gradient() const
    {
        const Float h = cfg_.grad_step;
        return {(curvature(h, 0) - curvature(-h, 0)) / (2 * h), (curvature(0, h) - curvature(0, -h)) / (2 * h)};
    }

    std::array<std::array<Float, 2>, 2> hessian() const
    {
        const Float h = cfg_.hess_step;
        const Float k0 = curvature(0, 0);
        const Float kxx = (curvature(h, 0) - 2 * k0 + curvature(-h, 0)) / (h * h);
        const Float kyy = (curvature(0, h) - 2 * k0 + curvature(0, -h)) / (h * h);
        const Float kxy = (curvature(h, h) - curvature(h, -h) - curvature(-h, h) + curvature(-h, -h)) / (4 * h * h);
        return {{{kxx, kxy}, {kxy, kyy}}};
    }

private:
    MetricJet g_;
    FdOracleConfig cfg_;
};

inline bool close(const Float& a, const Rational& b, const Float& tol)
{
    return abs(a - to_float(b)) <= tol;
}

} // namespace jetmod::test
