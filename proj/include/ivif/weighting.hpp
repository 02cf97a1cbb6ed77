#pragma once

#include <vector>

#include "ivif/aggregation.hpp"
#include "ivif/grid.hpp"
#include "ivif/ivifn.hpp"

namespace ivif {

/// Distance used between a cell and the negative ideal.
enum class DistanceForm {
    /// dist_hybrid: quarter-sum of all four bound gaps plus half the largest gap.
    Hybrid,
    /// Membership and non-membership pairs each get their own half-max term.
    SplitHybrid,
};

const char* to_string(DistanceForm form);

double dist_split_hybrid(const Ivifn& x, const Ivifn& y);

struct NormalizedDistances {
    Grid<double> values;
    /// One flag per column; true when every distance in the column is zero.
    std::vector<bool> degenerate;
};

struct EntropyBreakdown {
    std::vector<Ivifn> nip;
    Grid<double> dist;
    Grid<double> norm_dist;
    std::vector<bool> degenerate_columns;
    std::vector<double> entropy;
    WeightVector weights;
};

/// Per column ([min lm, min rm], [max ln, max rn]).
std::vector<Ivifn> negative_ideal(const GroupMatrix& m);

Grid<double> entropy_distance_matrix(const GroupMatrix& m, const std::vector<Ivifn>& nip,
                                     DistanceForm form = DistanceForm::Hybrid);

/// Divides each entry by its column sum. A column summing to zero is left at
/// zero and flagged rather than rejected.
NormalizedDistances normalize_distances(const Grid<double>& dist);

/// Shannon entropy of each column scaled by 1/ln(n), with 0·ln0 = 0.
/// Degenerate columns get entropy 1. Requires at least two rows.
std::vector<double> entropy(const NormalizedDistances& norm);

/// Full entropy weighting. Throws DegenerateError when no column carries information.
EntropyBreakdown entropy_weights(const GroupMatrix& m, DistanceForm form = DistanceForm::Hybrid);

}  // namespace ivif
