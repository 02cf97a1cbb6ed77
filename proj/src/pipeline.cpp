#include "ivif/pipeline.hpp"

#include <algorithm>

#include "ivif/error.hpp"

namespace ivif {

namespace {

template <typename F>
auto in_stage(const char* stage, F&& body) -> decltype(body()) {
    try {
        return body();
    } catch (const PipelineError&) {
        throw;
    } catch (const Error& e) {
        throw PipelineError(stage, e);
    }
}

}  // namespace

PipelineResult run_pipeline(const Problem& problem, const PipelineOptions& options) {
    PipelineResult out;
    out.method = options.method.value_or(problem.method);
    out.cpt = problem.cpt;

    out.group = in_stage("aggregate", [&] { return aggregate_experts(problem.matrices, problem.expert_weights()); });
    out.normalized = in_stage("normalize", [&] { return normalize_matrix(out.group, problem.attributes); });
    in_stage("weighting", [&] {
        if (problem.fixed_weights) {
            if (problem.fixed_weights->size() != out.normalized.cols()) {
                throw ShapeError("fixed weights do not match the attribute count");
            }
            out.weights = *problem.fixed_weights;
        } else {
            out.entropy = entropy_weights(out.normalized, options.distance);
            out.weights = out.entropy->weights;
        }
    });

    in_stage(to_string(out.method), [&] {
        switch (out.method) {
            case Method::Edas: {
                out.edas = score_and_rank(out.normalized, out.weights, problem.cpt, problem.attribute_names());
                out.score_name = "score";
                out.scores = out.edas->scores;
                out.ranking = out.edas->ranking;
                break;
            }
            case Method::Ivifwa: {
                out.ivifwa = ivifwa_rank(out.normalized, out.weights);
                out.score_name = "sf";
                out.scores = out.ivifwa->sf;
                out.ranking = out.ivifwa->ranking;
                break;
            }
            case Method::Topsis: {
                out.topsis = topsis(out.normalized, problem.attributes, out.weights, options.topsis_form);
                out.score_name = "closeness";
                out.scores = out.topsis->closeness;
                out.ranking = out.topsis->ranking;
                break;
            }
            case Method::Taxonomy: {
                out.taxonomy = taxonomy(out.normalized, out.weights, options.taxonomy);
                out.score_name = "development";
                out.scores = out.taxonomy->development;
                out.ranking = out.taxonomy->ranking;
                break;
            }
            case Method::Todim: {
                out.todim = todim(out.normalized, out.weights, options.todim_theta, options.todim_form);
                out.score_name = "xi";
                out.scores = out.todim->xi;
                out.ranking = out.todim->ranking;
                break;
            }
        }
    });
    return out;
}

SweepResult sweep(const Problem& problem, const std::string& param, const std::vector<double>& values,
                  const PipelineOptions& options) {
    if (values.empty()) throw DomainError("sweep: no values given");
    std::vector<CptParams> grid;
    grid.reserve(values.size());
    for (double v : values) grid.push_back(problem.cpt.with(param, v));

    PipelineOptions edas_options = options;
    edas_options.method = Method::Edas;
    SweepResult out;
    out.param = param;
    out.alternatives = problem.alternatives;
    Problem variant = problem;
    for (std::size_t i = 0; i < values.size(); ++i) {
        variant.cpt = grid[i];
        auto result = run_pipeline(variant, edas_options);
        out.rows.push_back({values[i], std::move(result.scores), std::move(result.ranking)});
    }
    return out;
}

}  // namespace ivif
