#include "ivif/aggregation.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "ivif/error.hpp"

namespace ivif {

WeightVector::WeightVector(std::vector<double> weights) : w_(std::move(weights)) {
    if (w_.empty()) throw DomainError("weight vector is empty");
    double sum = 0.0;
    for (std::size_t i = 0; i < w_.size(); ++i) {
        const double v = w_[i];
        if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
            std::ostringstream os;
            os << "weight " << i << " = " << v << " outside [0,1]";
            throw DomainError(os.str());
        }
        sum += v;
    }
    if (std::abs(sum - 1.0) > kWeightSumTolerance) {
        std::ostringstream os;
        os.precision(12);
        os << "weights sum to " << sum << ", expected 1";
        throw DomainError(os.str());
    }
}

WeightVector WeightVector::uniform(std::size_t count) {
    if (count == 0) throw DomainError("weight vector is empty");
    std::vector<double> w(count, 1.0 / static_cast<double>(count));
    // Summing n copies of 1/n can drift by a few ulps; that is well within tolerance.
    return WeightVector(std::move(w));
}

double WeightVector::max() const {
    if (w_.empty()) throw DomainError("weight vector is empty");
    return *std::max_element(w_.begin(), w_.end());
}

const char* to_string(AttributeKind kind) {
    return kind == AttributeKind::Benefit ? "benefit" : "cost";
}

AttributeKind attribute_kind_from_string(const std::string& text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "benefit") return AttributeKind::Benefit;
    if (lower == "cost") return AttributeKind::Cost;
    throw DomainError("attribute kind must be 'benefit' or 'cost', got '" + text + "'");
}

namespace {

void check_lengths(std::span<const Ivifn> values, const WeightVector& weights, const char* op) {
    if (values.empty()) throw ShapeError(std::string(op) + ": no values to aggregate");
    if (values.size() != weights.size()) {
        std::ostringstream os;
        os << op << ": " << values.size() << " values but " << weights.size() << " weights";
        throw ShapeError(os.str());
    }
}

// base^w with 0^0 = 1, so a zero-weight term drops out of the product.
double pow_w(double base, double w) { return w == 0.0 ? 1.0 : std::pow(base, w); }

}  // namespace

Ivifn ivifwa(std::span<const Ivifn> values, const WeightVector& weights) {
    check_lengths(values, weights, "ivifwa");
    double plm = 1.0, prm = 1.0, pln = 1.0, prn = 1.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double w = weights[i];
        plm *= pow_w(1.0 - values[i].lm(), w);
        prm *= pow_w(1.0 - values[i].rm(), w);
        pln *= pow_w(values[i].ln(), w);
        prn *= pow_w(values[i].rn(), w);
    }
    return {1.0 - plm, 1.0 - prm, pln, prn};
}

Ivifn ivifwg(std::span<const Ivifn> values, const WeightVector& weights) {
    check_lengths(values, weights, "ivifwg");
    double plm = 1.0, prm = 1.0, pln = 1.0, prn = 1.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double w = weights[i];
        plm *= pow_w(values[i].lm(), w);
        prm *= pow_w(values[i].rm(), w);
        pln *= pow_w(1.0 - values[i].ln(), w);
        prn *= pow_w(1.0 - values[i].rn(), w);
    }
    return {plm, prm, 1.0 - pln, 1.0 - prn};
}

GroupMatrix aggregate_experts(const std::vector<ExpertMatrix>& matrices,
                              const WeightVector& expert_weights) {
    if (matrices.empty()) throw ShapeError("aggregate_experts: no expert matrices");
    if (matrices.size() != expert_weights.size()) {
        std::ostringstream os;
        os << "aggregate_experts: " << matrices.size() << " matrices but "
           << expert_weights.size() << " expert weights";
        throw ShapeError(os.str());
    }
    const std::size_t rows = matrices.front().cells.rows();
    const std::size_t cols = matrices.front().cells.cols();
    if (rows == 0 || cols == 0) throw ShapeError("aggregate_experts: empty matrix");
    for (const auto& m : matrices) {
        if (!m.cells.same_shape(rows, cols)) {
            std::ostringstream os;
            os << "aggregate_experts: matrix of expert '" << m.expert_id << "' is "
               << m.cells.rows() << "x" << m.cells.cols() << ", expected " << rows << "x" << cols;
            throw ShapeError(os.str());
        }
    }

    GroupMatrix out{Grid<Ivifn>(rows, cols, Ivifn::min()), false};
    std::vector<Ivifn> column;
    column.reserve(matrices.size());
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            column.clear();
            for (const auto& m : matrices) column.push_back(m.cells(r, c));
            out.cells(r, c) = ivifwa(column, expert_weights);
        }
    }
    return out;
}

GroupMatrix normalize_matrix(const GroupMatrix& m, const std::vector<AttributeSpec>& attrs) {
    if (m.normalized) throw DomainError("normalize_matrix: matrix is already normalized");
    if (attrs.size() != m.cols()) {
        std::ostringstream os;
        os << "normalize_matrix: " << attrs.size() << " attributes for " << m.cols() << " columns";
        throw ShapeError(os.str());
    }
    GroupMatrix out{m.cells, true};
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (attrs[c].kind != AttributeKind::Cost) continue;
        for (std::size_t r = 0; r < m.rows(); ++r) out.cells(r, c) = complement(m.cells(r, c));
    }
    return out;
}

}  // namespace ivif
