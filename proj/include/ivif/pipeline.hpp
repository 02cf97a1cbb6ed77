#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ivif/aggregation.hpp"
#include "ivif/comparators.hpp"
#include "ivif/edas.hpp"
#include "ivif/problem.hpp"
#include "ivif/weighting.hpp"

namespace ivif {

struct PipelineOptions {
    /// Overrides the method named in the problem.
    std::optional<Method> method;
    DistanceForm distance = DistanceForm::Hybrid;
    TopsisForm topsis_form = TopsisForm::SingleWeighting;
    TodimForm todim_form = TodimForm::AsPrinted;
    double todim_theta = 1.0;
    TaxonomyOptions taxonomy;
};

struct PipelineResult {
    Method method = Method::Edas;
    GroupMatrix group;
    GroupMatrix normalized;
    /// Empty when the problem supplies fixed weights.
    std::optional<EntropyBreakdown> entropy;
    WeightVector weights;
    CptParams cpt;

    std::optional<EdasTrace> edas;
    std::optional<IvifwaResult> ivifwa;
    std::optional<TopsisResult> topsis;
    std::optional<TaxonomyResult> taxonomy;
    std::optional<TodimResult> todim;

    /// The selected method's headline score per alternative and its ranking.
    std::string score_name;
    std::vector<double> scores;
    std::vector<std::size_t> ranking;
};

/// aggregate -> normalize -> weights -> method. Errors are rethrown as
/// PipelineError naming the stage.
PipelineResult run_pipeline(const Problem& problem, const PipelineOptions& options = {});

struct SweepRow {
    double value = 0.0;
    std::vector<double> scores;
    std::vector<std::size_t> ranking;
};

struct SweepResult {
    std::string param;
    std::vector<std::string> alternatives;
    std::vector<SweepRow> rows;
};

/// One EDAS run per value of a CPT parameter, all others as in the problem.
/// Every value is validated before the first run.
SweepResult sweep(const Problem& problem, const std::string& param, const std::vector<double>& values,
                  const PipelineOptions& options = {});

}  // namespace ivif
