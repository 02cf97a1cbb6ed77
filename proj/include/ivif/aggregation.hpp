#pragma once

#include <span>
#include <string>
#include <vector>

#include "ivif/grid.hpp"
#include "ivif/ivifn.hpp"

namespace ivif {

inline constexpr double kWeightSumTolerance = 1e-9;

/// Non-negative weights summing to one. Used for expert weights, attribute
/// weights and the generic operator weights of IVIFWA/IVIFWG.
class WeightVector {
public:
    WeightVector() = default;
    /// Throws DomainError unless every weight is in [0,1] and the sum is 1
    /// within kWeightSumTolerance. Never renormalizes.
    explicit WeightVector(std::vector<double> weights);

    static WeightVector uniform(std::size_t count);

    std::size_t size() const noexcept { return w_.size(); }
    double operator[](std::size_t i) const { return w_[i]; }
    const std::vector<double>& values() const noexcept { return w_; }
    double max() const;

private:
    std::vector<double> w_;
};

enum class AttributeKind { Benefit, Cost };

const char* to_string(AttributeKind kind);
AttributeKind attribute_kind_from_string(const std::string& text);

struct AttributeSpec {
    std::string name;
    AttributeKind kind = AttributeKind::Benefit;
};

struct ExpertMatrix {
    std::string expert_id;
    Grid<Ivifn> cells;
};

struct GroupMatrix {
    Grid<Ivifn> cells;
    bool normalized = false;

    std::size_t rows() const noexcept { return cells.rows(); }
    std::size_t cols() const noexcept { return cells.cols(); }
    const Ivifn& operator()(std::size_t r, std::size_t c) const { return cells(r, c); }
};

Ivifn ivifwa(std::span<const Ivifn> values, const WeightVector& weights);
Ivifn ivifwg(std::span<const Ivifn> values, const WeightVector& weights);

/// Cellwise IVIFWA across experts. All matrices must share a shape.
GroupMatrix aggregate_experts(const std::vector<ExpertMatrix>& matrices,
                              const WeightVector& expert_weights);

/// Complements every cell of a cost column. Refuses an already normalized matrix.
GroupMatrix normalize_matrix(const GroupMatrix& m, const std::vector<AttributeSpec>& attrs);

}  // namespace ivif
