#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ivif/aggregation.hpp"
#include "ivif/comparators.hpp"
#include "ivif/edas.hpp"
#include "ivif/ivifn.hpp"

namespace ivif {

/// Ordered label -> IVIFN mapping used to resolve linguistic ratings.
class LinguisticScale {
public:
    LinguisticScale() = default;
    /// Throws DomainError on an empty or duplicate (case-insensitive) label.
    explicit LinguisticScale(std::vector<std::pair<std::string, Ivifn>> entries);

    /// The ten-grade scale from "extremely terrible" (ET) to "perfectly good" (PG).
    static const LinguisticScale& standard();

    const std::vector<std::pair<std::string, Ivifn>>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    /// Case-insensitive; empty when the label is unknown.
    std::optional<Ivifn> find(const std::string& label) const;

private:
    std::vector<std::pair<std::string, Ivifn>> entries_;
};

/// Where a cell sits, for error messages.
struct CellLocation {
    std::string expert;
    std::string row;
    std::string column;
};

/// Throws DomainError naming the label and the cell when the label is unknown.
Ivifn resolve_label(const std::string& label, const LinguisticScale& scale,
                    const CellLocation& where = {});

struct ExpertInfo {
    std::string id;
    double weight = 0.0;
};

struct Problem {
    std::vector<std::string> alternatives;
    std::vector<AttributeSpec> attributes;
    std::vector<ExpertInfo> experts;
    /// In expert order, each alternatives x attributes.
    std::vector<ExpertMatrix> matrices;
    CptParams cpt;
    std::optional<WeightVector> fixed_weights;
    Method method = Method::Edas;

    WeightVector expert_weights() const;
    std::vector<std::string> attribute_names() const;
};

inline constexpr const char* kProblemFormat = "ivif-problem/1";
inline constexpr const char* kScaleFormat = "ivif-scale/1";

/// Parses and validates a problem document. Syntax errors carry a line
/// location, schema errors a JSON pointer to the offending field.
Problem parse_problem(std::istream& in, const LinguisticScale& scale = LinguisticScale::standard());
Problem parse_problem_text(const std::string& text,
                           const LinguisticScale& scale = LinguisticScale::standard());
Problem load_problem(const std::string& path, const LinguisticScale& scale = LinguisticScale::standard());

LinguisticScale parse_scale(std::istream& in);
LinguisticScale load_scale(const std::string& path);

/// Problem document with every cell written as a numeric quadruple.
std::string dump_problem(const Problem& problem);
std::string dump_scale(const LinguisticScale& scale);

}  // namespace ivif
