#pragma once

#include "jetmod/jet_document.hpp"
#include "jetmod/strata2d.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace jetmod {

inline constexpr const char* report_schema = "jetmod.report/1";

struct ReportOptions {
    /// Print decimals with this many digits in text reports. JSON reports
    /// always carry exact rationals.
    std::optional<int> decimal;
};

/// Text and JSON renderings of one command's result.
struct Report {
    std::string text;
    std::string json;
};

Report normalize_report(const std::string& source, const JetDocument& normalized, const ReportOptions& opt);
Report tensors_report(const std::string& source, const std::vector<NormalTensor>& tensors, const ReportOptions& opt);
Report curvature_report(const std::string& source, const MetricJet& normal_form, const ReportOptions& opt);
Report invariants_report(const std::string& source, const InvariantVector& v, const ReportOptions& opt);

/// A classification outcome per input file: the type or an error message.
struct ClassifyItem {
    std::string source;
    std::variant<GroupType, std::string> result;
};
Report classify_report(const std::vector<ClassifyItem>& items);

Report equiv_report(const std::string& a, const std::string& b, const EquivalenceResult& res, const ReportOptions& opt);
Report dim_report(int n, int r, bool checked);
Report census_report(int r);

} // namespace jetmod
