#pragma once

#include <string>
#include <vector>

#include "evident/combine.hpp"
#include "evident/evidence.hpp"
#include "evident/measures.hpp"

namespace evident {

enum class OutputFormat { csv, json };

// One line of the integral assessment table: the combined evidence for a
// (component, indicator) cell with its measures and conflict trail.
struct IntegralAssessmentRow {
    std::string component_id;
    std::string indicator_id;
    std::vector<FocalElement> combined;
    Interval chosen;
    std::vector<std::string> term_labels;
    double bel = 0.0;
    double pl = 0.0;
    ExpectedInterval expected;
    std::vector<PairConflict> conflicts;
};

// Full survey pipeline: tally per group, basic probability assignment,
// Dempster combination across groups (lexicographic group order), then
// measures and the most probable assessment. Rows sorted by
// (component, indicator).
std::vector<IntegralAssessmentRow> run_assess(const std::vector<ResponseRecord>& records,
                                              const Scale& scale);

std::string render_assess(const std::vector<IntegralAssessmentRow>& rows,
                          OutputFormat format);
std::string render_combine(const CombinationReport& report, OutputFormat format);

}  // namespace evident
