#pragma once

#include "jetmod/normal_form.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace jetmod {

/// On-disk form of a metric jet or an h polynomial.
///
/// JSON object with keys, in canonical order:
///   "format": "jetmod.jet/1"
///   "kind": "metric" | "hpoly"
///   "dim", "order"              (for hpoly: dim 2, order r of the metric jet)
///   "label", "provenance"       (optional strings)
///   "entries"                   metric: {"i,j": {"a,b,...": "p/q"}} with 1 <= i <= j <= dim
///   "coefficients"              hpoly:  {"a,b": "p/q"}, degrees <= max(r - 2, 0)
/// Monomial keys are written in graded-lex order; zero coefficients are
/// omitted. Entries with i > j are accepted on input when they match their
/// mirror entry and dropped on output.
struct JetDocument {
    enum class Kind { metric, hpoly };

    Kind kind = Kind::metric;
    std::optional<std::string> label;
    std::optional<std::string> provenance;
    std::optional<MetricJet> metric; ///< set iff kind == metric
    std::optional<HPoly> h;          ///< set iff kind == hpoly
    int order = 0;                   ///< metric order r

    static JetDocument from_metric(const MetricJet& g);
    /// h of order max(r - 2, 0) standing for metric_from_h(h, r).
    static JetDocument from_h(const HPoly& h, int r);

    std::size_t dim() const { return kind == Kind::metric ? metric->dim() : 2; }
    /// The metric jet, expanding an h polynomial when needed.
    MetricJet as_metric() const;
};

inline constexpr const char* jet_format_tag = "jetmod.jet/1";

/// Throws JetError with the offending key path (or the JSON parser's line
/// and column) on: malformed JSON, duplicate keys, non-canonical rationals,
/// bad monomial keys, degrees above the order, asymmetric metric entries,
/// and a constant term that is not positive definite.
JetDocument parse_document(std::string_view text, const std::string& source = "<input>");
std::string serialize_document(const JetDocument& doc);

JetDocument load_document(const std::string& path);
void save_document(const std::string& path, const JetDocument& doc);

} // namespace jetmod
