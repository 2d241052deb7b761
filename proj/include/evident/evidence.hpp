#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "evident/interval.hpp"
#include "evident/scale.hpp"

namespace evident {

// (component, indicator, expert-group) coordinates of one appraisal.
struct AssessmentKey {
    std::string component_id;
    std::string indicator_id;
    std::string group_id;

    AssessmentKey() = default;
    AssessmentKey(std::string component, std::string indicator, std::string group)
        : component_id(std::move(component)),
          indicator_id(std::move(indicator)),
          group_id(std::move(group)) {
        if (component_id.empty() || indicator_id.empty() || group_id.empty()) {
            throw InvalidInput("assessment key ids must be non-empty");
        }
    }

    auto operator<=>(const AssessmentKey&) const = default;
};

struct ResponseRecord {
    AssessmentKey key;
    std::string expert_id;
    LinguisticTerm term;
};

// Per-key counts of identical appraisals: C_i per term, N_i total.
struct ResponseTally {
    AssessmentKey key;
    std::map<LinguisticTerm, int> counts;
    int total = 0;
};

struct FocalElement {
    Interval interval;
    double mass = 0.0;
};

// Focal elements from one source. Masses are positive and sum to 1;
// elements with coincident intervals are merged on construction.
class EvidenceBody {
  public:
    EvidenceBody(std::string source_id, std::vector<FocalElement> focal);

    const std::string& source_id() const { return source_id_; }
    const std::vector<FocalElement>& focal() const { return focal_; }

    static EvidenceBody vacuous(std::string source_id);

  private:
    std::string source_id_;
    std::vector<FocalElement> focal_;
};

// Groups records matching `key` by identical term. Throws EmptyGroup when
// nothing matches, DuplicateResponse when one expert answered twice.
ResponseTally tally_responses(const std::vector<ResponseRecord>& records,
                              const AssessmentKey& key);

// Basic probability assignment: one focal element per distinct term
// interval with mass C_i/N_i; terms sharing an interval merge.
EvidenceBody bpa(const ResponseTally& tally, const Scale& scale);

// Survey CSV with header component,indicator,group,expert,term.
std::vector<ResponseRecord> load_survey(const std::string& path);
std::vector<ResponseRecord> parse_survey_csv(const std::string& text);

}  // namespace evident
