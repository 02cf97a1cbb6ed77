#include "ivif/edas.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ivif/error.hpp"
#include "ivif/ranking.hpp"

namespace ivif {

namespace {

std::string attribute_label(const std::vector<std::string>& names, std::size_t c) {
    if (c < names.size()) return "'" + names[c] + "'";
    return "#" + std::to_string(c + 1);
}

void check_unit_exponent(const char* name, double v) {
    if (!(v > 0.0 && v <= 1.0)) {
        std::ostringstream os;
        os << "CPT parameter " << name << " = " << v << " must lie in (0,1]";
        throw DomainError(os.str());
    }
}

}  // namespace

void CptParams::validate() const {
    check_unit_exponent("alpha", alpha);
    check_unit_exponent("beta", beta);
    check_unit_exponent("gamma", gamma);
    check_unit_exponent("delta", delta);
    if (!(rho > 1.0) || !std::isfinite(rho)) {
        std::ostringstream os;
        os << "CPT parameter rho = " << rho << " must be greater than 1";
        throw DomainError(os.str());
    }
}

CptParams CptParams::with(const std::string& name, double value) const {
    CptParams out = *this;
    if (name == "alpha") out.alpha = value;
    else if (name == "beta") out.beta = value;
    else if (name == "gamma") out.gamma = value;
    else if (name == "delta") out.delta = value;
    else if (name == "rho") out.rho = value;
    else throw DomainError("unknown CPT parameter '" + name + "'");
    out.validate();
    return out;
}

double CptParams::get(const std::string& name) const {
    if (name == "alpha") return alpha;
    if (name == "beta") return beta;
    if (name == "gamma") return gamma;
    if (name == "delta") return delta;
    if (name == "rho") return rho;
    throw DomainError("unknown CPT parameter '" + name + "'");
}

const char* to_string(Branch b) { return b == Branch::Gain ? "gain" : "loss"; }

double cpt_weight(double p, Branch branch, const CptParams& params) {
    if (!(p >= 0.0 && p <= 1.0)) {
        std::ostringstream os;
        os << "cpt_weight: probability " << p << " outside [0,1]";
        throw DomainError(os.str());
    }
    const double a = branch == Branch::Gain ? params.alpha : params.beta;
    if (p == 0.0) return 0.0;
    if (p == 1.0) return 1.0;
    const double pa = std::pow(p, a);
    return pa / std::pow(pa + std::pow(1.0 - p, a), 1.0 / a);
}

std::vector<Ivifn> average_solution(const GroupMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) throw ShapeError("average_solution: empty matrix");
    const auto equal = WeightVector::uniform(m.rows());
    std::vector<Ivifn> avg;
    avg.reserve(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
        const auto column = m.cells.column(c);
        avg.push_back(ivifwa(column, equal));
    }
    return avg;
}

Branch branch_of(const Ivifn& cell, const Ivifn& avg) {
    return compare(cell, avg) == Ordering::Less ? Branch::Loss : Branch::Gain;
}

namespace {

void check_avg_shape(const GroupMatrix& m, const std::vector<Ivifn>& avg, const char* op) {
    if (avg.size() != m.cols()) {
        std::ostringstream os;
        os << op << ": average row has " << avg.size() << " entries for " << m.cols() << " columns";
        throw ShapeError(os.str());
    }
}

// The equal-weight mean of identical cells comes back a few ulps off the
// cell itself; distances that small mean "at the average".
double distance_to_average(const Ivifn& cell, const Ivifn& avg) {
    const double d = dist_hybrid(avg, cell);
    return d < 1e-12 ? 0.0 : d;
}

}  // namespace

DistanceFromAverage pda_nda(const GroupMatrix& m, const std::vector<Ivifn>& avg,
                            const CptParams& params, const std::vector<std::string>& attr_names) {
    check_avg_shape(m, avg, "pda_nda");
    DistanceFromAverage out{Grid<double>(m.rows(), m.cols(), 0.0),
                            Grid<double>(m.rows(), m.cols(), 0.0)};
    for (std::size_t c = 0; c < m.cols(); ++c) {
        const double acc = accuracy_wc(avg[c]);
        if (!(acc > 0.0)) {
            throw DegenerateError("pda_nda: accuracy of the average solution is zero for attribute " +
                                  attribute_label(attr_names, c) + ", so PDA/NDA are undefined");
        }
        for (std::size_t r = 0; r < m.rows(); ++r) {
            const Ivifn& cell = m(r, c);
            if (branch_of(cell, avg[c]) == Branch::Gain) {
                out.pda(r, c) = std::pow(distance_to_average(cell, avg[c]), params.gamma) / acc;
            } else {
                out.nda(r, c) = params.rho * std::pow(distance_to_average(cell, avg[c]), params.delta) / acc;
            }
        }
    }
    return out;
}

Grid<double> relative_weights(const GroupMatrix& m, const std::vector<Ivifn>& avg,
                              const WeightVector& weights, const CptParams& params) {
    check_avg_shape(m, avg, "relative_weights");
    if (weights.size() != m.cols()) {
        std::ostringstream os;
        os << "relative_weights: " << weights.size() << " weights for " << m.cols() << " columns";
        throw ShapeError(os.str());
    }
    Grid<double> out(m.rows(), m.cols(), 0.0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out(r, c) = cpt_weight(weights[c], branch_of(m(r, c), avg[c]), params);
        }
    }
    return out;
}

void finish_scores(EdasScores& s) {
    const std::size_t n = s.pda.rows();
    const std::size_t k = s.pda.cols();
    s.sp.assign(n, 0.0);
    s.sn.assign(n, 0.0);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < k; ++c) {
            s.sp[r] += s.rel_weights(r, c) * s.pda(r, c);
            s.sn[r] += s.rel_weights(r, c) * s.nda(r, c);
        }
    }
    const double max_sp = n ? *std::max_element(s.sp.begin(), s.sp.end()) : 0.0;
    const double max_sn = n ? *std::max_element(s.sn.begin(), s.sn.end()) : 0.0;
    s.sp_degenerate = !(max_sp > 0.0);
    s.sn_degenerate = !(max_sn > 0.0);
    s.nsp.assign(n, 0.0);
    s.nsn.assign(n, 1.0);
    s.scores.assign(n, 0.0);
    for (std::size_t r = 0; r < n; ++r) {
        if (!s.sp_degenerate) s.nsp[r] = s.sp[r] / max_sp;
        if (!s.sn_degenerate) s.nsn[r] = 1.0 - s.sn[r] / max_sn;
        s.scores[r] = (s.nsp[r] + s.nsn[r]) / 2.0;
    }
    s.ranking = rank_descending(s.scores);
}

EdasTrace score_and_rank(const GroupMatrix& m, const WeightVector& weights, const CptParams& params,
                         const std::vector<std::string>& attr_names) {
    params.validate();
    if (m.rows() < 2) throw DegenerateError("EDAS needs at least two alternatives");
    EdasTrace t;
    t.avg = average_solution(m);
    t.rel_weights = relative_weights(m, t.avg, weights, params);
    auto d = pda_nda(m, t.avg, params, attr_names);
    t.pda = std::move(d.pda);
    t.nda = std::move(d.nda);
    finish_scores(t);
    return t;
}

std::vector<double> crisp_average(const Grid<double>& m) {
    if (m.rows() == 0 || m.cols() == 0) throw ShapeError("crisp_average: empty matrix");
    std::vector<double> avg(m.cols(), 0.0);
    for (std::size_t c = 0; c < m.cols(); ++c) {
        for (std::size_t r = 0; r < m.rows(); ++r) avg[c] += m(r, c);
        avg[c] /= static_cast<double>(m.rows());
    }
    return avg;
}

CrispEdasTrace crisp_edas(const Grid<double>& m, const std::vector<AttributeSpec>& attrs,
                          const WeightVector& weights, const CptParams& params) {
    params.validate();
    if (m.rows() < 2) throw DegenerateError("EDAS needs at least two alternatives");
    if (attrs.size() != m.cols() || weights.size() != m.cols()) {
        std::ostringstream os;
        os << "crisp_edas: " << m.cols() << " columns, " << attrs.size() << " attributes, "
           << weights.size() << " weights";
        throw ShapeError(os.str());
    }
    for (double v : m.data()) {
        if (!std::isfinite(v)) throw DomainError("crisp_edas: non-finite matrix entry");
    }
    CrispEdasTrace t;
    t.avg = crisp_average(m);
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (!(t.avg[c] > 0.0)) {
            std::ostringstream os;
            os << "crisp_edas: average of attribute '" << attrs[c].name << "' is " << t.avg[c]
               << "; it must be positive because PDA/NDA divide by it";
            throw DomainError(os.str());
        }
    }
    const std::size_t n = m.rows(), k = m.cols();
    t.rel_weights = Grid<double>(n, k, 0.0);
    t.pda = Grid<double>(n, k, 0.0);
    t.nda = Grid<double>(n, k, 0.0);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < k; ++c) {
            const double mean = t.avg[c];
            // Signed improvement over the average: positive is better for either kind.
            const double gap = attrs[c].kind == AttributeKind::Benefit ? m(r, c) - mean : mean - m(r, c);
            const Branch b = gap >= -kTieTolerance ? Branch::Gain : Branch::Loss;
            t.rel_weights(r, c) = cpt_weight(weights[c], b, params);
            if (b == Branch::Gain) {
                t.pda(r, c) = std::pow(std::max(0.0, gap), params.gamma) / mean;
            } else {
                t.nda(r, c) = params.rho * std::pow(std::max(0.0, -gap), params.delta) / mean;
            }
        }
    }
    finish_scores(t);
    return t;
}

}  // namespace ivif
