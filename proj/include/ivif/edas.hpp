#pragma once

#include <string>
#include <vector>

#include "ivif/aggregation.hpp"
#include "ivif/grid.hpp"
#include "ivif/ivifn.hpp"

namespace ivif {

/// Cumulative prospect theory parameters. alpha/beta curve the probability
/// weighting of gains/losses, gamma/delta the value function, rho is loss aversion.
struct CptParams {
    double alpha = 0.61;
    double beta = 0.69;
    double gamma = 0.88;
    double delta = 0.88;
    double rho = 2.25;

    /// Throws DomainError unless alpha..delta are in (0,1] and rho > 1.
    void validate() const;
    /// Copy with one parameter replaced by name ("alpha", ..., "rho"). Validates.
    CptParams with(const std::string& name, double value) const;
    double get(const std::string& name) const;
};

inline const char* const kCptParamNames[] = {"alpha", "beta", "gamma", "delta", "rho"};

enum class Branch { Gain, Loss };

const char* to_string(Branch b);

/// Everything downstream of the relative weights, shared by the crisp and
/// interval-valued procedures.
struct EdasScores {
    Grid<double> rel_weights;
    Grid<double> pda;
    Grid<double> nda;
    std::vector<double> sp, sn, nsp, nsn, scores;
    std::vector<std::size_t> ranking;
    /// Set when every SP (resp. SN) is zero and the normalized term falls back
    /// to its limit value.
    bool sp_degenerate = false;
    bool sn_degenerate = false;
};

struct EdasTrace : EdasScores {
    std::vector<Ivifn> avg;
};

struct CrispEdasTrace : EdasScores {
    std::vector<double> avg;
};

/// p^a / (p^a + (1-p)^a)^(1/a), with a = alpha on gains and beta on losses.
double cpt_weight(double p, Branch branch, const CptParams& params);

/// Equal-weight IVIFWA down each column.
std::vector<Ivifn> average_solution(const GroupMatrix& m);

/// Gain when the cell is at least the average under `compare`.
Branch branch_of(const Ivifn& cell, const Ivifn& avg);

struct DistanceFromAverage {
    Grid<double> pda;
    Grid<double> nda;
};

/// Throws DegenerateError if some average has zero accuracy.
DistanceFromAverage pda_nda(const GroupMatrix& m, const std::vector<Ivifn>& avg,
                            const CptParams& params, const std::vector<std::string>& attr_names = {});

Grid<double> relative_weights(const GroupMatrix& m, const std::vector<Ivifn>& avg,
                              const WeightVector& weights, const CptParams& params);

/// Fills sp..ranking of `scores` from its rel_weights, pda and nda.
void finish_scores(EdasScores& scores);

EdasTrace score_and_rank(const GroupMatrix& m, const WeightVector& weights, const CptParams& params,
                         const std::vector<std::string>& attr_names = {});

std::vector<double> crisp_average(const Grid<double>& m);

CrispEdasTrace crisp_edas(const Grid<double>& m, const std::vector<AttributeSpec>& attrs,
                          const WeightVector& weights, const CptParams& params);

}  // namespace ivif
