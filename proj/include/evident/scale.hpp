#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "evident/interval.hpp"

namespace evident {

enum class TermBase { low, medium, high, irrelevant };
enum class TermModifier { stable, increasing, decreasing };

// Linguistic appraisal term: a base word with an optional dynamics
// modifier. "irrelevant" never carries a modifier.
struct LinguisticTerm {
    TermBase base = TermBase::low;
    std::optional<TermModifier> modifier;

    LinguisticTerm() = default;
    LinguisticTerm(TermBase b, std::optional<TermModifier> m = std::nullopt)
        : base(b), modifier(m) {
        if (base == TermBase::irrelevant && modifier.has_value()) {
            throw InvalidInput("'irrelevant' cannot carry a modifier");
        }
    }

    auto operator<=>(const LinguisticTerm&) const = default;
};

// "medium increasing" -> {medium, increasing}. Throws ParseError on
// anything else.
LinguisticTerm parse_term(const std::string& text);
std::string to_string(const LinguisticTerm& term);

// Mapping from linguistic terms to numeric intervals. Validated on
// construction: all four bare base terms present, no duplicate terms.
class Scale {
  public:
    Scale(std::string name, std::vector<std::pair<LinguisticTerm, Interval>> entries);

    const std::string& name() const { return name_; }
    const std::vector<std::pair<LinguisticTerm, Interval>>& entries() const {
        return entries_;
    }

    bool has_term(const LinguisticTerm& term) const;

    // Throws UnknownTerm if the term has no entry.
    Interval term_to_interval(const LinguisticTerm& term) const;

    // Terms ranked by overlap with the given interval: score =
    // length(intersection)/length(union) on interval lengths; point
    // intervals score 1 on exact match and 0 otherwise. Zero-score terms
    // are omitted; ties broken by term name ascending.
    std::vector<std::pair<LinguisticTerm, double>> interval_to_terms(
        const Interval& interval) const;

  private:
    std::string name_;
    std::vector<std::pair<LinguisticTerm, Interval>> entries_;
};

// The scale shipped with the tool: four base terms plus all nine
// base x modifier combinations.
Scale default_scale();

// Loads a scale from a JSON file of shape
//   {"name": "...", "entries": [{"term": "low stable", "lo": 0.12, "hi": 0.22}, ...]}
// Throws ParseError on malformed JSON, InvalidScale on invariant violations.
Scale load_scale(const std::string& path);
Scale parse_scale_json(const std::string& json_text);

}  // namespace evident
