#pragma once

#include <string>
#include <vector>

#include "evident/evidence.hpp"

namespace evident {

struct PairConflict {
    std::string left_source;
    std::string right_source;
    double conflict = 0.0;  // K of Dempster's rule, always < 1
};

struct CombinationReport {
    EvidenceBody combined;
    std::vector<PairConflict> pair_conflicts;
    std::vector<std::string> source_order;
};

// Dempster's rule for two sources: product mass accrues to each nonempty
// pairwise intersection, K collects the mass of empty ones, and the
// result is renormalized by 1-K. Throws TotalConflict when 1-K <= 1e-12.
std::pair<EvidenceBody, double> combine_pair(const EvidenceBody& left,
                                             const EvidenceBody& right);

// Left fold of combine_pair in input order, recording each pairwise K.
CombinationReport combine_all(const std::vector<EvidenceBody>& bodies);

// Evidence-body file for the standalone combine command:
//   {"sources": [{"id": "...", "focal": [{"lo":..,"hi":..,"mass":..}, ...]}, ...]}
std::vector<EvidenceBody> load_bodies(const std::string& path);
std::vector<EvidenceBody> parse_bodies_json(const std::string& json_text);

}  // namespace evident
