#include "doctest.h"
#include "support.hpp"

#include "jetmod/jet_document.hpp"
#include "jetmod/sampling.hpp"

#include <filesystem>

using namespace jetmod;
using jetmod::test::q;

namespace {

std::string metric_doc(const std::string& entries, int dim = 2, int order = 2)
{
    return R"({"format": "jetmod.jet/1", "kind": "metric", "dim": )" + std::to_string(dim) +
           R"(, "order": )" + std::to_string(order) + R"(, "entries": )" + entries + "}";
}

} // namespace

TEST_CASE("flat metric document")
{
    const auto doc = parse_document(metric_doc(R"({"1,1": {"0,0": "1"}, "2,2": {"0,0": "1"}})"));
    CHECK(doc.kind == JetDocument::Kind::metric);
    CHECK(doc.as_metric() == MetricJet::flat(2, 2));
    CHECK(doc.as_metric().has_identity_frame());
    CHECK_FALSE(doc.label);
}

TEST_CASE("serialization is canonical and round-trips byte for byte")
{
    JetSampler s(51);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 3);
        JetDocument doc = trial % 4 == 3 ? JetDocument::from_h(s.h_poly(trial % 5), trial % 5 + 2)
                                         : JetDocument::from_metric(s.metric(n, trial % 5));
        if (trial % 2) doc.label = "sample " + std::to_string(trial);
        const std::string text = serialize_document(doc);
        const auto back = parse_document(text);
        CHECK(serialize_document(back) == text);
        CHECK(back.as_metric() == doc.as_metric());
        CHECK(back.label == doc.label);
    }
    // Key order on input does not matter; output is graded-lex.
    const auto doc = parse_document(
        metric_doc(R"({"2,2": {"0,0": "1"}, "1,1": {"0,2": "-1/3", "0,0": "1", "1,1": "2"}})"));
    const std::string text = serialize_document(doc);
    CHECK(text.find("\"0,0\": \"1\",\n      \"1,1\": \"2\",\n      \"0,2\": \"-1/3\"") != std::string::npos);
}

TEST_CASE("hpoly documents")
{
    const auto doc = parse_document(
        R"({"format": "jetmod.jet/1", "kind": "hpoly", "dim": 2, "order": 4, "coefficients": {"0,0": "-1/3"}})");
    CHECK(doc.kind == JetDocument::Kind::hpoly);
    CHECK(doc.as_metric() == metric_from_h(JetScalar::constant(2, 2, q(-1, 3)), 4));
    CHECK_THROWS_WITH_AS(
        parse_document(
            R"({"format": "jetmod.jet/1", "kind": "hpoly", "dim": 2, "order": 3, "coefficients": {"2,0": "1"}})"),
        doctest::Contains("above order 1"), JetError);
}

TEST_CASE("document errors name the offending key")
{
    auto fails = [](const std::string& text, const char* needle) {
        CHECK_THROWS_WITH_AS(parse_document(text, "in.json"), doctest::Contains(needle), JetError);
    };
    fails(metric_doc(R"({"1,1": {"0,0": "1"}, "1,2": {"1,0": "2/4"}, "2,2": {"0,0": "1"}})"),
          R"(entries["1,2"]["1,0"]: non-canonical rational)");
    fails(metric_doc(R"({"1,1": {"0,0": "1", "0,0": "2"}, "2,2": {"0,0": "1"}})"), R"(["1,1"]["0,0"]: duplicate key)");
    fails(metric_doc(R"({"1,1": {"0,0": "1", "3,0": "1"}, "2,2": {"0,0": "1"}})"), "degree 3 above order 2");
    fails(metric_doc(R"({"1,1": {"0,0": "1"}, "1,2": {"1,0": "1"}, "2,1": {"1,0": "2"}, "2,2": {"0,0": "1"}})"),
          "asymmetric");
    fails(metric_doc(R"({"1,1": {"0,0": "1"}, "2,1": {"1,0": "2"}, "2,2": {"0,0": "1"}})"), "asymmetric");
    fails(metric_doc(R"({"1,1": {"0,0": "1"}, "2,2": {"0,0": "-1"}})"), "positive definite");
    fails(metric_doc(R"({"1,1": {"0,0": "1"}, "3,3": {"0,0": "1"}})"), R"(entries["3,3"])");
    fails(metric_doc(R"({"1,1": {"0,0,0": "1"}})"), "2 exponents");
    fails(metric_doc(R"({"1,1": {"0,0": 1}})"), "must be a string");
    fails(metric_doc(R"({"1,1": {"0,0": "1", "1,0": "0"}, "2,2": {"0,0": "1"}})"), "zero coefficients");
    fails(R"({"format": "jetmod.jet/1", "kind": "metric", "dim": 2, "order": 2, "entries": {)", "line 1");
    fails(R"({"format": "other", "kind": "metric", "dim": 2, "order": 2, "entries": {}})", "format");
    fails(R"({"format": "jetmod.jet/1", "kind": "metric", "dim": 2, "order": 2, "entries": {}, "x": 1})",
          "unknown key");
    fails(R"({"format": "jetmod.jet/1", "kind": "metric", "dim": 2, "entries": {}})", "missing \"order\"");
}

TEST_CASE("mirror entries are accepted when symmetric")
{
    const auto doc = parse_document(
        metric_doc(R"({"1,1": {"0,0": "1"}, "1,2": {"1,0": "1/2"}, "2,1": {"1,0": "1/2"}, "2,2": {"0,0": "1"}})"));
    CHECK(doc.as_metric()(1, 0).coefficient({1, 0}) == q(1, 2));
}

TEST_CASE("load and save through files")
{
    const auto dir = std::filesystem::temp_directory_path() / "jetmod_doc_test";
    std::filesystem::create_directories(dir);
    const std::string path = (dir / "g.json").string();
    JetDocument doc = JetDocument::from_metric(metric_from_h(pm_poly(3, 3), 5));
    doc.provenance = "test";
    save_document(path, doc);
    const auto back = load_document(path);
    CHECK(serialize_document(back) == serialize_document(doc));
    CHECK_THROWS_WITH_AS(load_document((dir / "missing.json").string()), doctest::Contains("cannot open"), JetError);
    std::filesystem::remove_all(dir);
}
