#include "jetmod/report.hpp"

#include "json.hpp"

#include <sstream>

namespace jetmod {

namespace {

using ojson = nlohmann::ordered_json;

ojson header(const char* command)
{
    ojson j;
    j["schema"] = report_schema;
    j["command"] = command;
    return j;
}

std::string fmt(const Rational& q, const ReportOptions& opt)
{
    return opt.decimal ? to_decimal(q, *opt.decimal) : to_string(q);
}

std::string poly(const JetScalar& s, const ReportOptions& opt)
{
    return s.to_string([&opt](const Rational& q) { return fmt(q, opt); });
}

ojson exact_series(const JetScalar& s)
{
    ojson out = ojson::object();
    for (const auto& [m, c] : s.terms()) out[m.to_string()] = to_string(c);
    return out;
}

Report finish(std::string text, const ojson& j) { return {std::move(text), j.dump(2) + "\n"}; }

std::string index_list(const NormalTensor::Key& k)
{
    std::string s = std::to_string(k[0] + 1) + "," + std::to_string(k[1] + 1) + ";";
    for (std::size_t t = 2; t < k.size(); ++t) {
        if (t > 2) s += ",";
        s += std::to_string(k[t] + 1);
    }
    return s;
}

} // namespace

Report normalize_report(const std::string& source, const JetDocument& normalized, const ReportOptions& opt)
{
    const MetricJet& g = *normalized.metric;
    std::ostringstream t;
    t << "normal form of " << source << " (n = " << g.dim() << ", r = " << g.order() << ")\n";
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = i; j < g.dim(); ++j)
            t << "g_" << i + 1 << j + 1 << " = " << poly(g(i, j), opt) << "\n";
    t << "gauss lemma: " << (gauss_check(g) ? "ok" : "FAILED") << "\n";

    ojson j = header("normalize");
    j["source"] = source;
    j["gauss_lemma"] = gauss_check(g);
    j["document"] = ojson::parse(serialize_document(normalized));
    return finish(t.str(), j);
}

Report tensors_report(const std::string& source, const std::vector<NormalTensor>& tensors, const ReportOptions& opt)
{
    std::ostringstream t;
    ojson j = header("tensors");
    j["source"] = source;
    j["tensors"] = ojson::array();
    t << "normal tensors of " << source << "\n";
    for (const auto& ten : tensors) {
        const int n = static_cast<int>(ten.dim());
        const int s = static_cast<int>(ten.tensor_order());
        t << "order " << s << ": " << ten.components().size() << " nonzero components (dim N_" << s << " = "
          << dim_normal(n, s) << ")\n";
        ojson comps = ojson::object();
        for (const auto& [k, v] : ten.components()) {
            t << "  T[" << index_list(k) << "] = " << fmt(v, opt) << "\n";
            comps[index_list(k)] = to_string(v);
        }
        ojson entry;
        entry["order"] = s;
        entry["space_dim"] = dim_normal(n, s);
        entry["cyclic_identity"] = ten.satisfies_cyclic_identity();
        entry["components"] = std::move(comps);
        j["tensors"].push_back(std::move(entry));
    }
    if (tensors.empty()) t << "(no tensors below order 2)\n";
    return finish(t.str(), j);
}

Report curvature_report(const std::string& source, const MetricJet& normal_form, const ReportOptions& opt)
{
    const JetScalar k = gauss_curvature(normal_form);
    const int r = normal_form.order();
    std::ostringstream t;
    ojson j = header("curvature");
    j["source"] = source;
    j["order"] = r;
    j["K"] = exact_series(k);
    t << "gauss curvature of " << source << " (r = " << r << ")\n";
    t << "K = " << poly(k, opt) << "\n";
    t << "K(0) = " << fmt(k.constant_term(), opt) << "\n";
    j["K0"] = to_string(k.constant_term());
    if (r >= 3) {
        const Rational gx = k.coefficient({1, 0}), gy = k.coefficient({0, 1});
        t << "grad K(0) = (" << fmt(gx, opt) << ", " << fmt(gy, opt) << ")\n";
        j["grad"] = {to_string(gx), to_string(gy)};
    }
    if (r >= 4) {
        const CurvatureData d = curvature_data(normal_form);
        t << "Hess K(0) = [[" << fmt(d.hess[0][0], opt) << ", " << fmt(d.hess[0][1], opt) << "], ["
          << fmt(d.hess[1][0], opt) << ", " << fmt(d.hess[1][1], opt) << "]]\n";
        j["hess"] = {{to_string(d.hess[0][0]), to_string(d.hess[0][1])},
                     {to_string(d.hess[1][0]), to_string(d.hess[1][1])}};
    }
    return finish(t.str(), j);
}

Report invariants_report(const std::string& source, const InvariantVector& v, const ReportOptions& opt)
{
    std::ostringstream t;
    ojson j = header("invariants");
    j["source"] = source;
    j["order"] = v.order;
    j["values"] = ojson::array();
    t << "curvature invariants of " << source << " (order " << v.order << ")\n";
    for (std::size_t i = 0; i < v.values.size(); ++i) {
        t << "p" << i + 1 << " = " << fmt(v.values[i], opt) << "\n";
        j["values"].push_back(to_string(v.values[i]));
    }
    if (v.order == 4) {
        const bool in_y = y_membership(v);
        t << "Y membership: " << (in_y ? "yes" : "no") << "\n";
        j["y_membership"] = in_y;
    }
    return finish(t.str(), j);
}

Report classify_report(const std::vector<ClassifyItem>& items)
{
    std::ostringstream t;
    ojson j = header("classify");
    j["results"] = ojson::array();
    for (const auto& item : items) {
        ojson e;
        e["source"] = item.source;
        if (const auto* type = std::get_if<GroupType>(&item.result)) {
            t << item.source << ": " << type->to_string() << "\n";
            e["type"] = type->to_string();
        } else {
            const auto& msg = std::get<std::string>(item.result);
            t << item.source << ": error: " << msg << "\n";
            e["error"] = msg;
        }
        j["results"].push_back(std::move(e));
    }
    return finish(t.str(), j);
}

Report equiv_report(const std::string& a, const std::string& b, const EquivalenceResult& res, const ReportOptions& opt)
{
    std::ostringstream t;
    ojson j = header("equiv");
    j["a"] = a;
    j["b"] = b;
    j["equivalent"] = res.equivalent;
    if (!res.equivalent) {
        t << "not equivalent\n";
        return finish(t.str(), j);
    }
    const OrbitWitness& w = *res.witness;
    t << "equivalent; " << w.describe() << "\n";
    const auto [re, im] = w.numeric(opt.decimal.value_or(20));
    const bool neg = !im.empty() && im[0] == '-';
    t << "numeric witness: " << (w.kind == OrbitWitness::Kind::rotation ? "alpha" : "beta") << " = " << re
      << (neg ? " - " : " + ") << (neg ? im.substr(1) : im) << "i\n";
    ojson wj;
    wj["kind"] = w.kind == OrbitWitness::Kind::rotation ? "rotation" : "reflection";
    wj["exponent"] = w.g;
    wj["value"] = {to_string(w.w.re), to_string(w.w.im)};
    wj["description"] = w.describe();
    j["witness"] = std::move(wj);
    return finish(t.str(), j);
}

Report dim_report(int n, int r, bool checked)
{
    std::ostringstream t;
    ojson j = header("dim");
    j["n"] = n;
    j["r"] = r;
    j["moduli_dim"] = dim_moduli(n, r);
    t << "n = " << n << ", r = " << r << "\n";
    t << "moduli dimension: " << dim_moduli(n, r) << "\n";
    ojson dims = ojson::array();
    std::string list;
    bool agree = true;
    for (int s = 2; s <= r; ++s) {
        const long long d = dim_normal(n, s);
        if (!list.empty()) list += ", ";
        list += std::to_string(d);
        dims.push_back(d);
        if (checked) agree = agree && d == dim_normal_bruteforce(n, s);
    }
    if (r >= 2) t << "dim N_s for s = 2.." << r << ": " << list << "\n";
    j["normal_dims"] = std::move(dims);
    if (checked) {
        t << "elimination cross-check: " << (agree ? "ok" : "MISMATCH") << "\n";
        j["cross_check"] = agree;
    }
    return finish(t.str(), j);
}

Report census_report(int r)
{
    const auto types = census(r);
    std::ostringstream t;
    ojson j = header("census");
    j["r"] = r;
    j["types"] = ojson::array();
    std::string list;
    for (const auto& type : types) {
        if (!list.empty()) list += ", ";
        list += type.to_string();
        j["types"].push_back(type.to_string());
    }
    j["count"] = types.size();
    t << "strata for r = " << r << ": " << list << "\n";
    t << "count: " << types.size() << "\n";
    return finish(t.str(), j);
}

} // namespace jetmod
