#include "jetmod/jet_document.hpp"

#include "json.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace jetmod {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string bracket(const std::string& key) { return "[\"" + key + "\"]"; }

class Diag {
public:
    explicit Diag(std::string source) : source_(std::move(source)) {}
    [[noreturn]] void fail(const std::string& path, const std::string& what) const
    {
        throw JetError(source_ + ": " + (path.empty() ? "" : path + ": ") + what);
    }
    const std::string& source() const { return source_; }

private:
    std::string source_;
};

// Non-negative decimal integer without sign or leading zeros.
bool parse_index(std::string_view s, unsigned& out)
{
    if (s.empty() || s.size() > 3) return false;
    if (s.size() > 1 && s[0] == '0') return false;
    unsigned v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
        v = v * 10 + static_cast<unsigned>(c - '0');
    }
    out = v;
    return true;
}

bool split_indices(const std::string& key, std::vector<unsigned>& out)
{
    out.clear();
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = key.find(',', start);
        unsigned v;
        if (!parse_index(std::string_view(key).substr(start, comma - start), v)) return false;
        out.push_back(v);
        if (comma == std::string::npos) return true;
        start = comma + 1;
    }
}

std::string monomial_key(const MultiIndex& m)
{
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(m[i]);
    }
    return s;
}

JetScalar read_series(const json& table, std::size_t dim, int order, const std::string& path, const Diag& diag)
{
    if (!table.is_object()) diag.fail(path, "expected an object of monomial coefficients");
    JetScalar s(dim, order);
    std::vector<unsigned> exps;
    for (const auto& [key, value] : table.items()) {
        const std::string here = path + bracket(key);
        if (!split_indices(key, exps) || exps.size() != dim)
            diag.fail(here, "monomial key must list " + std::to_string(dim) + " exponents, e.g. \"" +
                                monomial_key(MultiIndex(dim)) + "\"");
        const MultiIndex m(exps);
        if (static_cast<int>(m.degree()) > order)
            diag.fail(here, "degree " + std::to_string(m.degree()) + " above order " + std::to_string(order));
        if (!value.is_string()) diag.fail(here, "coefficient must be a string such as \"-1/3\"");
        Rational c;
        try {
            c = parse_rational(value.get<std::string>());
        } catch (const JetError& e) {
            diag.fail(here, e.what());
        }
        if (is_zero(c)) diag.fail(here, "zero coefficients must be omitted");
        s.add_term(m, c);
    }
    return s;
}

ordered_json write_series(const JetScalar& s)
{
    ordered_json out = ordered_json::object();
    for (const auto& [m, c] : s.terms()) out[monomial_key(m)] = to_string(c);
    return out;
}

int read_int(const json& v, const char* name, int lo, int hi, const Diag& diag)
{
    if (!v.is_number_integer()) diag.fail(name, "expected an integer");
    const auto x = v.get<long long>();
    if (x < lo || x > hi)
        diag.fail(name, "must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "], got " +
                            std::to_string(x));
    return static_cast<int>(x);
}

// Rejects duplicate keys, which the JSON parser would otherwise collapse.
json parse_strict(std::string_view text, const Diag& diag)
{
    struct Frame {
        std::set<std::string> keys;
        std::string current;
    };
    std::vector<Frame> stack;
    auto path = [&stack] {
        std::string p;
        for (std::size_t i = 0; i + 1 < stack.size(); ++i) p += bracket(stack[i].current);
        return p;
    };
    json::parser_callback_t cb = [&](int, json::parse_event_t event, json& parsed) {
        switch (event) {
        case json::parse_event_t::object_start:
            stack.emplace_back();
            break;
        case json::parse_event_t::object_end:
            if (!stack.empty()) stack.pop_back();
            break;
        case json::parse_event_t::key: {
            const std::string key = parsed.get<std::string>();
            auto& top = stack.back();
            if (!top.keys.insert(key).second) diag.fail(path() + bracket(key), "duplicate key");
            top.current = key;
            break;
        }
        default:
            break;
        }
        return true;
    };
    try {
        return json::parse(text.begin(), text.end(), cb);
    } catch (const json::parse_error& e) {
        diag.fail("", e.what());
    }
}

} // namespace

JetDocument JetDocument::from_metric(const MetricJet& g)
{
    JetDocument d;
    d.kind = Kind::metric;
    d.metric = g;
    d.order = g.order();
    return d;
}

JetDocument JetDocument::from_h(const HPoly& h, int r)
{
    if (h.dim() != 2) throw JetError("h polynomial must have 2 variables");
    if (r < 0) throw JetError("metric order must be >= 0");
    JetDocument d;
    d.kind = Kind::hpoly;
    d.h = h.with_order(std::max(r - 2, 0));
    if (r < 2) d.h = JetScalar(2, 0);
    d.order = r;
    return d;
}

MetricJet JetDocument::as_metric() const
{
    if (kind == Kind::metric) return *metric;
    return metric_from_h(*h, order);
}

JetDocument parse_document(std::string_view text, const std::string& source)
{
    const Diag diag(source);
    const json root = parse_strict(text, diag);
    if (!root.is_object()) diag.fail("", "document must be a JSON object");

    static const std::set<std::string> known{"format", "kind", "dim", "order", "label", "provenance", "entries",
                                             "coefficients"};
    for (const auto& [key, value] : root.items())
        if (!known.count(key)) diag.fail(bracket(key), "unknown key");

    auto need = [&](const char* key) -> const json& {
        auto it = root.find(key);
        if (it == root.end()) diag.fail("", std::string("missing \"") + key + "\"");
        return *it;
    };

    const json& format = need("format");
    if (!format.is_string() || format.get<std::string>() != jet_format_tag)
        diag.fail("format", std::string("expected \"") + jet_format_tag + "\"");

    const json& kind = need("kind");
    if (!kind.is_string() || (kind != "metric" && kind != "hpoly"))
        diag.fail("kind", "expected \"metric\" or \"hpoly\"");

    JetDocument doc;
    doc.kind = kind == "metric" ? JetDocument::Kind::metric : JetDocument::Kind::hpoly;
    const int dim = read_int(need("dim"), "dim", 1, static_cast<int>(MultiIndex::max_dim), diag);
    doc.order = read_int(need("order"), "order", 0, 64, diag);
    for (const char* key : {"label", "provenance"}) {
        auto it = root.find(key);
        if (it == root.end()) continue;
        if (!it->is_string()) diag.fail(key, "expected a string");
        (std::string(key) == "label" ? doc.label : doc.provenance) = it->get<std::string>();
    }

    if (doc.kind == JetDocument::Kind::hpoly) {
        if (dim != 2) diag.fail("dim", "hpoly documents have dim 2");
        if (root.contains("entries")) diag.fail("entries", "hpoly documents use \"coefficients\"");
        doc.h = read_series(need("coefficients"), 2, std::max(doc.order - 2, 0), "coefficients", diag);
        return doc;
    }

    if (root.contains("coefficients")) diag.fail("coefficients", "metric documents use \"entries\"");
    const json& entries = need("entries");
    if (!entries.is_object()) diag.fail("entries", "expected an object keyed by \"i,j\"");
    const auto n = static_cast<std::size_t>(dim);
    SymmetricJetArray arr(n, doc.order);
    std::map<std::pair<unsigned, unsigned>, JetScalar> lower;
    std::vector<unsigned> ij;
    for (const auto& [key, table] : entries.items()) {
        const std::string here = std::string("entries") + bracket(key);
        if (!split_indices(key, ij) || ij.size() != 2 || ij[0] < 1 || ij[1] < 1 || ij[0] > n || ij[1] > n)
            diag.fail(here, "entry key must be \"i,j\" with 1 <= i, j <= " + std::to_string(n));
        JetScalar s = read_series(table, n, doc.order, here, diag);
        if (ij[0] <= ij[1])
            arr(ij[0] - 1, ij[1] - 1) = std::move(s);
        else
            lower.emplace(std::make_pair(ij[0], ij[1]), std::move(s));
    }
    for (const auto& [k, s] : lower) {
        const std::string mirror = std::to_string(k.second) + "," + std::to_string(k.first);
        if (!entries.contains(mirror) || !(arr(k.second - 1, k.first - 1) == s))
            diag.fail(std::string("entries") + bracket(std::to_string(k.first) + "," + std::to_string(k.second)),
                      "asymmetric metric entry: differs from \"" + mirror + "\"");
    }
    try {
        doc.metric = MetricJet(std::move(arr));
    } catch (const JetError& e) {
        diag.fail("entries", e.what());
    }
    return doc;
}

std::string serialize_document(const JetDocument& doc)
{
    ordered_json out;
    out["format"] = jet_format_tag;
    out["kind"] = doc.kind == JetDocument::Kind::metric ? "metric" : "hpoly";
    out["dim"] = doc.dim();
    out["order"] = doc.order;
    if (doc.label) out["label"] = *doc.label;
    if (doc.provenance) out["provenance"] = *doc.provenance;
    if (doc.kind == JetDocument::Kind::metric) {
        ordered_json entries = ordered_json::object();
        const auto& g = *doc.metric;
        for (std::size_t i = 0; i < g.dim(); ++i)
            for (std::size_t j = i; j < g.dim(); ++j)
                entries[std::to_string(i + 1) + "," + std::to_string(j + 1)] = write_series(g(i, j));
        out["entries"] = std::move(entries);
    } else {
        out["coefficients"] = write_series(*doc.h);
    }
    return out.dump(2) + "\n";
}

JetDocument load_document(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw JetError(path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str(), path);
}

void save_document(const std::string& path, const JetDocument& doc)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw JetError(path + ": cannot write file");
    out << serialize_document(doc);
    if (!out) throw JetError(path + ": write failed");
}

} // namespace jetmod
