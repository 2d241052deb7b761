#include "evident/evidence.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace evident {

namespace {
constexpr double kMassTol = 1e-9;
}

EvidenceBody::EvidenceBody(std::string source_id, std::vector<FocalElement> focal)
    : source_id_(std::move(source_id)) {
    for (const auto& fe : focal) {
        if (fe.mass <= 0.0) {
            throw InvalidInput("focal element mass must be positive in source '" +
                               source_id_ + "'");
        }
        auto it = std::find_if(focal_.begin(), focal_.end(), [&](const FocalElement& f) {
            return f.interval.approx_eq(fe.interval);
        });
        if (it != focal_.end()) {
            it->mass += fe.mass;
        } else {
            focal_.push_back(fe);
        }
    }
    double sum = 0.0;
    for (const auto& fe : focal_) sum += fe.mass;
    if (focal_.empty() || std::abs(sum - 1.0) > kMassTol) {
        throw InvalidInput("masses of source '" + source_id_ + "' sum to " +
                           std::to_string(sum) + ", expected 1");
    }
    // Canonical order keeps downstream output deterministic.
    std::sort(focal_.begin(), focal_.end(), [](const FocalElement& a, const FocalElement& b) {
        if (a.interval.lo != b.interval.lo) return a.interval.lo < b.interval.lo;
        return a.interval.hi < b.interval.hi;
    });
}

EvidenceBody EvidenceBody::vacuous(std::string source_id) {
    return EvidenceBody(std::move(source_id), {{Interval(0.0, 1.0), 1.0}});
}

ResponseTally tally_responses(const std::vector<ResponseRecord>& records,
                              const AssessmentKey& key) {
    ResponseTally tally;
    tally.key = key;
    std::set<std::string> seen_experts;
    for (const auto& rec : records) {
        if (rec.key != key) continue;
        if (!seen_experts.insert(rec.expert_id).second) {
            throw DuplicateResponse("expert '" + rec.expert_id + "' answered twice for (" +
                                    key.component_id + ", " + key.indicator_id + ", " +
                                    key.group_id + ")");
        }
        ++tally.counts[rec.term];
        ++tally.total;
    }
    if (tally.total == 0) {
        throw EmptyGroup("no responses for (" + key.component_id + ", " + key.indicator_id +
                         ", " + key.group_id + ")");
    }
    return tally;
}

EvidenceBody bpa(const ResponseTally& tally, const Scale& scale) {
    std::vector<FocalElement> focal;
    for (const auto& [term, count] : tally.counts) {
        Interval interval = scale.term_to_interval(term);
        focal.push_back({interval, static_cast<double>(count) / tally.total});
    }
    return EvidenceBody(tally.key.group_id, std::move(focal));
}

std::vector<ResponseRecord> parse_survey_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty survey file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "component,indicator,group,expert,term") {
        throw ParseError("survey header must be 'component,indicator,group,expert,term'");
    }
    std::vector<ResponseRecord> records;
    size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::istringstream row(line);
        std::string field;
        while (std::getline(row, field, ',')) fields.push_back(field);
        if (fields.size() != 5) {
            throw ParseError("survey line " + std::to_string(line_no) +
                             ": expected 5 comma-separated fields");
        }
        try {
            records.push_back({AssessmentKey(fields[0], fields[1], fields[2]), fields[3],
                               parse_term(fields[4])});
        } catch (const InputError& e) {
            throw ParseError("survey line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return records;
}

std::vector<ResponseRecord> load_survey(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open survey file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_survey_csv(buf.str());
}

}  // namespace evident
