#pragma once

#include <array>
#include <string>
#include <vector>

#include "ivif/aggregation.hpp"
#include "ivif/grid.hpp"
#include "ivif/ivifn.hpp"

namespace ivif {

enum class Method { Ivifwa, Topsis, Taxonomy, Todim, Edas };

const char* to_string(Method m);
Method method_from_string(const std::string& text);

struct IvifwaResult {
    std::vector<Ivifn> aggregate;
    std::vector<double> sf, af;
    std::vector<std::size_t> ranking;
};

/// Aggregates each alternative over its attributes and ranks by
/// (score_simple, accuracy_simple), highest first.
IvifwaResult ivifwa_rank(const GroupMatrix& m, const WeightVector& weights);

enum class TopsisForm {
    /// Attribute weight applied in the weighted matrix and again inside the distance sum.
    AsPrinted,
    /// Attribute weight applied once, in the weighted matrix.
    SingleWeighting,
};

const char* to_string(TopsisForm form);

struct TopsisResult {
    TopsisForm form = TopsisForm::SingleWeighting;
    std::vector<Ivifn> pis, nis;
    std::vector<double> d_plus, d_minus, closeness;
    std::vector<std::size_t> ranking;
    /// True when every alternative coincides with both ideals and closeness fell back to 0.5.
    bool degenerate = false;
};

/// Works on the normalized matrix; cost columns are restored to their
/// original orientation before weighting, and their ideals are taken from
/// the opposite end.
TopsisResult topsis(const GroupMatrix& m, const std::vector<AttributeSpec>& attrs,
                    const WeightVector& weights, TopsisForm form = TopsisForm::SingleWeighting);

struct TaxonomyOptions {
    /// Exclude alternatives outside the homogeneity bounds from the ideal
    /// pattern and the K statistics. Excluded alternatives are still scored
    /// and are ranked after all included ones.
    bool drop_outliers = false;
};

struct TaxonomyResult {
    Grid<double> dist_matrix;
    std::vector<double> row_mean;
    double lower_bound = 0.0;
    double upper_bound = 0.0;
    std::vector<bool> outlier;
    std::vector<Ivifn> ideal;
    std::vector<double> k_ro;
    double k_bound = 0.0;
    std::vector<double> development;
    std::vector<std::size_t> ranking;
};

/// Throws DegenerateError when every alternative equals the ideal (K = 0).
TaxonomyResult taxonomy(const GroupMatrix& m, const WeightVector& weights,
                        const TaxonomyOptions& options = {});

enum class TodimForm {
    /// Gains sqrt(w'/sum w')·d, losses -(1/theta)·sqrt(w'/sum w')·d.
    AsPrinted,
    /// Gains sqrt(w'·d/sum w'), losses -(1/theta)·sqrt(sum w'·d/w').
    Classical,
};

const char* to_string(TodimForm form);

struct TodimResult {
    TodimForm form = TodimForm::AsPrinted;
    double theta = 1.0;
    /// Column-wise vector-normalized bounds (lm, rm, ln, rn) per cell.
    Grid<std::array<double, 4>> normalized;
    /// partial[s](p, r): dominance of p over r on attribute s.
    std::vector<Grid<double>> partial;
    Grid<double> dominance;
    std::vector<double> overall;
    std::vector<double> xi;
    std::vector<std::size_t> ranking;
    /// True when every alternative has the same overall dominance; xi is then 0.5 throughout.
    bool degenerate = false;
};

TodimResult todim(const GroupMatrix& m, const WeightVector& weights, double theta = 1.0,
                  TodimForm form = TodimForm::AsPrinted);

}  // namespace ivif
