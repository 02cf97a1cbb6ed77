#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ivif/error.hpp"
#include "ivif/pipeline.hpp"
#include "ivif/problem.hpp"
#include "ivif/report.hpp"

namespace {

struct CommonArgs {
    std::string problem_path;
    std::string scale_path;
    std::string format = "structured-text";
    std::string out;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_output) {
    cmd->add_option("problem", args.problem_path, "Problem file (ivif-problem/1 JSON)")->required();
    cmd->add_option("--scale", args.scale_path, "Linguistic scale file overriding the built-in ten-grade scale");
    if (with_output) {
        cmd->add_option("--format", args.format, "Output format")
            ->check(CLI::IsMember({"csv", "structured-text"}));
        cmd->add_option("--out", args.out,
                        "Output file (structured-text) or directory (csv, one file per table)");
    }
}

ivif::Problem load(const CommonArgs& args) {
    if (args.scale_path.empty()) return ivif::load_problem(args.problem_path);
    return ivif::load_problem(args.problem_path, ivif::load_scale(args.scale_path));
}

void emit_text(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw ivif::Error("cannot write '" + path + "'");
    out << text;
}

int report_error(const ivif::Error& e) {
    std::string stage, location;
    if (auto* pe = dynamic_cast<const ivif::PipelineError*>(&e)) stage = pe->stage();
    if (auto* pe = dynamic_cast<const ivif::ParseError*>(&e)) location = pe->location();
    std::cerr << ivif::error_record(e.kind(), e.what(), stage, location) << '\n';
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Interval-valued intuitionistic fuzzy CPT-EDAS group decision engine"};
    app.require_subcommand(1);

    CommonArgs run_args;
    std::string method;
    bool intermediates = false;
    std::string topsis_form = "single_weighting";
    std::string todim_form = "as_printed";
    std::string distance = "hybrid";
    double theta = 1.0;
    bool drop_outliers = false;
    auto* run = app.add_subcommand("run", "Run the full pipeline and emit a report");
    add_common(run, run_args, true);
    run->add_option("--method", method, "Override the problem's method")
        ->check(CLI::IsMember({"edas", "ivifwa", "topsis", "taxonomy", "todim"}));
    run->add_flag("--emit-intermediates", intermediates, "Include every intermediate table");
    run->add_option("--topsis-form", topsis_form, "TOPSIS distance weighting")
        ->check(CLI::IsMember({"single_weighting", "as_printed"}));
    run->add_option("--todim-form", todim_form, "TODIM gain/loss form")
        ->check(CLI::IsMember({"as_printed", "classical"}));
    run->add_option("--theta", theta, "TODIM loss attenuation (> 0)");
    run->add_option("--distance", distance, "Distance used by entropy weighting")
        ->check(CLI::IsMember({"hybrid", "split_hybrid"}));
    run->add_flag("--drop-outliers", drop_outliers, "Taxonomy: exclude non-homogeneous alternatives");

    CommonArgs sweep_args;
    std::string param;
    std::vector<double> values;
    auto* sw = app.add_subcommand("sweep", "Re-run EDAS over a grid of one CPT parameter");
    add_common(sw, sweep_args, true);
    sw->add_option("--param", param, "Parameter to vary")
        ->required()
        ->check(CLI::IsMember({"alpha", "beta", "gamma", "delta", "rho"}));
    sw->add_option("--values", values, "Grid values (comma or space separated)")->required()->delimiter(',');

    CommonArgs validate_args;
    auto* val = app.add_subcommand("validate", "Check a problem file against the schema and invariants");
    add_common(val, validate_args, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) {
            const auto problem = load(run_args);
            ivif::PipelineOptions options;
            if (!method.empty()) options.method = ivif::method_from_string(method);
            options.topsis_form =
                topsis_form == "as_printed" ? ivif::TopsisForm::AsPrinted : ivif::TopsisForm::SingleWeighting;
            options.todim_form = todim_form == "classical" ? ivif::TodimForm::Classical : ivif::TodimForm::AsPrinted;
            options.todim_theta = theta;
            options.distance = distance == "split_hybrid" ? ivif::DistanceForm::SplitHybrid : ivif::DistanceForm::Hybrid;
            options.taxonomy.drop_outliers = drop_outliers;
            const auto result = ivif::run_pipeline(problem, options);
            const auto report = ivif::build_report(problem, result, options, intermediates);
            if (run_args.format == "csv") {
                if (run_args.out.empty()) {
                    for (const auto& t : report.tables) {
                        std::cout << "# " << t.name << '\n';
                        ivif::write_table_csv(t, std::cout);
                        std::cout << '\n';
                    }
                    std::cout << "# ranking\nrank,alternative\n";
                    for (std::size_t i = 0; i < report.ranking.size(); ++i) {
                        std::cout << i + 1 << ',' << report.ranking[i] << '\n';
                    }
                } else {
                    ivif::write_report_csv(report, run_args.out);
                }
            } else {
                emit_text(ivif::report_to_json(report), run_args.out);
            }
        } else if (*sw) {
            const auto problem = load(sweep_args);
            const auto result = ivif::sweep(problem, param, values);
            emit_text(sweep_args.format == "csv" ? ivif::sweep_to_csv(result) : ivif::sweep_to_json(result),
                      sweep_args.out);
        } else if (*val) {
            const auto problem = load(validate_args);
            std::cout << "{\"valid\": true, \"alternatives\": " << problem.alternatives.size()
                      << ", \"attributes\": " << problem.attributes.size()
                      << ", \"experts\": " << problem.experts.size() << "}\n";
        }
    } catch (const ivif::Error& e) {
        return report_error(e);
    } catch (const std::exception& e) {
        std::cerr << ivif::error_record("internal_error", e.what()) << '\n';
        return 1;
    }
    return 0;
}
