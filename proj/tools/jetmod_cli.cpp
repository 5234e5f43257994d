#include "jetmod/report.hpp"
#include "jetmod/sampling.hpp"

#include "CLI11.hpp"

#include <atomic>
#include <iostream>
#include <map>
#include <thread>

using namespace jetmod;

namespace {

struct Globals {
    bool json = false;
    int decimal = -1;

    ReportOptions options() const
    {
        ReportOptions o;
        if (decimal >= 0) o.decimal = decimal;
        return o;
    }
};

void emit(const Report& r, const Globals& g) { std::cout << (g.json ? r.json : r.text); }

std::vector<ClassifyItem> classify_files(const std::vector<std::string>& files, unsigned jobs)
{
    std::vector<ClassifyItem> out(files.size());
    auto work = [&](std::size_t i) {
        out[i].source = files[i];
        try {
            out[i].result = type_of_jet(load_document(files[i]).as_metric());
        } catch (const std::exception& e) {
            out[i].result = std::string(e.what());
        }
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(files.size())));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < files.size(); ++i) work(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < files.size();) work(i);
        });
    for (auto& th : pool) th.join();
    return out;
}

PresetKind preset_kind(const std::string& name)
{
    static const std::map<std::string, PresetKind> kinds{{"zero", PresetKind::zero},
                                                          {"pm", PresetKind::pm},
                                                          {"qm", PresetKind::qm},
                                                          {"pmq", PresetKind::pm_plus_r2qm},
                                                          {"xxy", PresetKind::x_plus_xy}};
    return kinds.at(name);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"jetmod: normal forms, curvature invariants and strata of metric jets"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_flag("--json", g.json, "Machine-readable report");
    app.add_option("--decimal", g.decimal, "Show decimals with N digits in text reports")->check(CLI::Range(0, 200));

    std::string input, output, file_a, file_b, preset, label;
    std::vector<std::string> inputs;
    int order = 0, n = 2, r = 0, m = 0;
    unsigned jobs = 1;
    std::uint64_t seed = 1;
    bool check = false, as_h = false;

    auto* normalize_cmd = app.add_subcommand("normalize", "Pull a metric jet back to normal coordinates");
    normalize_cmd->add_option("file", input, "Metric or hpoly document")->required();
    normalize_cmd->add_option("-o,--output", output, "Write the normalized document here");

    auto* tensors_cmd = app.add_subcommand("tensors", "Normal tensors of a metric jet");
    tensors_cmd->add_option("file", input)->required();

    auto* curvature_cmd = app.add_subcommand("curvature", "Gauss curvature jet (dimension 2)");
    curvature_cmd->add_option("file", input)->required();

    auto* invariants_cmd = app.add_subcommand("invariants", "Curvature invariants of order 2, 3 or 4");
    invariants_cmd->add_option("file", input)->required();
    invariants_cmd->add_option("--order", order)->required()->check(CLI::IsMember({2, 3, 4}));

    auto* classify_cmd = app.add_subcommand("classify", "Stabilizer type of each jet (dimension 2)");
    classify_cmd->add_option("files", inputs)->required();
    classify_cmd->add_option("-j,--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u));

    auto* equiv_cmd = app.add_subcommand("equiv", "Decide whether two jets lie in the same orbit");
    equiv_cmd->add_option("-a", file_a)->required();
    equiv_cmd->add_option("-b", file_b)->required();

    auto* dim_cmd = app.add_subcommand("dim", "Dimensions of normal tensor spaces and moduli");
    dim_cmd->add_option("--n", n)->required()->check(CLI::Range(1, 8));
    dim_cmd->add_option("--r", r)->required()->check(CLI::Range(0, 40));
    dim_cmd->add_flag("--check", check, "Cross-check by exact elimination");

    auto* census_cmd = app.add_subcommand("census", "Strata types of 2-dimensional r-jets");
    census_cmd->add_option("--r", r)->required()->check(CLI::Range(0, 1000));

    auto* make_cmd = app.add_subcommand("make", "Write a preset jet document");
    make_cmd->add_option("--preset", preset)
        ->required()
        ->check(CLI::IsMember({"zero", "pm", "qm", "pmq", "xxy", "random"}));
    make_cmd->add_option("--m", m, "Symmetry order for pm, qm, pmq");
    make_cmd->add_option("--r", r, "Jet order")->required()->check(CLI::Range(0, 40));
    make_cmd->add_option("--n", n, "Dimension for the random preset")->check(CLI::Range(1, 8));
    make_cmd->add_option("--seed", seed, "Seed for the random preset");
    make_cmd->add_option("--label", label);
    make_cmd->add_flag("--hpoly", as_h, "Write the h polynomial instead of the metric");
    make_cmd->add_option("-o,--output", output);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const ReportOptions opt = g.options();
    try {
        if (*normalize_cmd) {
            const MetricJet gn = normalize(load_document(input).as_metric());
            JetDocument doc = JetDocument::from_metric(gn);
            doc.provenance = "normalize " + input;
            if (!output.empty()) save_document(output, doc);
            emit(normalize_report(input, doc, opt), g);
        } else if (*tensors_cmd) {
            emit(tensors_report(input, normal_tensors(normalize(load_document(input).as_metric())), opt), g);
        } else if (*curvature_cmd) {
            emit(curvature_report(input, normalize(load_document(input).as_metric()), opt), g);
        } else if (*invariants_cmd) {
            emit(invariants_report(input, invariants(load_document(input).as_metric(), order), opt), g);
        } else if (*classify_cmd) {
            const auto items = classify_files(inputs, jobs);
            emit(classify_report(items), g);
            for (const auto& item : items)
                if (std::holds_alternative<std::string>(item.result)) return 1;
        } else if (*equiv_cmd) {
            const auto res = orbit_equivalent(load_document(file_a).as_metric(), load_document(file_b).as_metric());
            emit(equiv_report(file_a, file_b, res, opt), g);
        } else if (*dim_cmd) {
            const Report rep = dim_report(n, r, check);
            emit(rep, g);
            if (check && rep.text.find("MISMATCH") != std::string::npos) return 1;
        } else if (*census_cmd) {
            emit(census_report(r), g);
        } else if (*make_cmd) {
            JetDocument doc;
            std::string desc = "make --preset " + preset;
            if (preset == "random") {
                JetSampler sampler(seed);
                desc += " --n " + std::to_string(n) + " --r " + std::to_string(r) + " --seed " + std::to_string(seed);
                if (as_h) {
                    if (n != 2) throw JetError("--hpoly needs n = 2");
                    doc = JetDocument::from_h(sampler.h_poly(std::max(r - 2, 0)), r);
                } else {
                    doc = JetDocument::from_metric(sampler.metric(static_cast<std::size_t>(n), r));
                }
            } else {
                const PresetKind kind = preset_kind(preset);
                if (kind != PresetKind::zero && kind != PresetKind::x_plus_xy) desc += " --m " + std::to_string(m);
                desc += " --r " + std::to_string(r);
                const HPoly h = preset_polynomial(kind, m, r);
                doc = as_h ? JetDocument::from_h(h, r) : JetDocument::from_metric(metric_from_h(h, r));
            }
            if (!label.empty()) doc.label = label;
            doc.provenance = desc;
            if (output.empty())
                std::cout << serialize_document(doc);
            else
                save_document(output, doc);
        }
    } catch (const JetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
