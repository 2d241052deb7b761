#include "evident/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "evident/format.hpp"

namespace evident {

namespace {

std::string render_focal(const std::vector<FocalElement>& focal) {
    std::string out;
    for (const auto& fe : focal) {
        if (!out.empty()) out += '|';
        out += format6(fe.interval.lo) + ".." + format6(fe.interval.hi) + ':' +
               format6(fe.mass);
    }
    return out;
}

std::string render_conflicts(const std::vector<PairConflict>& conflicts) {
    std::string out;
    for (const auto& pc : conflicts) {
        if (!out.empty()) out += ';';
        out += pc.left_source + '~' + pc.right_source + '=' + format6(pc.conflict);
    }
    return out;
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out;
}

void json_focal(std::ostringstream& out, const std::vector<FocalElement>& focal) {
    out << '[';
    for (size_t i = 0; i < focal.size(); ++i) {
        if (i) out << ',';
        out << "{\"lo\":" << format6(focal[i].interval.lo)
            << ",\"hi\":" << format6(focal[i].interval.hi)
            << ",\"mass\":" << format6(focal[i].mass) << '}';
    }
    out << ']';
}

void json_conflicts(std::ostringstream& out, const std::vector<PairConflict>& conflicts) {
    out << '[';
    for (size_t i = 0; i < conflicts.size(); ++i) {
        if (i) out << ',';
        out << "{\"left\":\"" << json_escape(conflicts[i].left_source) << "\",\"right\":\""
            << json_escape(conflicts[i].right_source)
            << "\",\"k\":" << format6(conflicts[i].conflict) << '}';
    }
    out << ']';
}

}  // namespace

std::vector<IntegralAssessmentRow> run_assess(const std::vector<ResponseRecord>& records,
                                              const Scale& scale) {
    if (records.empty()) throw EmptyInput("survey contains no responses");

    // (component, indicator) -> sorted group set.
    std::map<std::pair<std::string, std::string>, std::set<std::string>> cells;
    for (const auto& rec : records) {
        cells[{rec.key.component_id, rec.key.indicator_id}].insert(rec.key.group_id);
    }

    std::vector<IntegralAssessmentRow> rows;
    for (const auto& [cell, groups] : cells) {
        std::vector<EvidenceBody> bodies;
        for (const auto& group : groups) {
            AssessmentKey key(cell.first, cell.second, group);
            bodies.push_back(bpa(tally_responses(records, key), scale));
        }
        CombinationReport combined = combine_all(bodies);
        MostProbable top = most_probable(combined.combined, scale);

        IntegralAssessmentRow row;
        row.component_id = cell.first;
        row.indicator_id = cell.second;
        row.combined = combined.combined.focal();
        row.chosen = top.interval;
        for (const auto& [term, score] : top.terms) row.term_labels.push_back(to_string(term));
        row.bel = top.measures.bel;
        row.pl = top.measures.pl;
        row.expected = expected_interval(combined.combined);
        row.conflicts = combined.pair_conflicts;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string render_assess(const std::vector<IntegralAssessmentRow>& rows,
                          OutputFormat format) {
    std::ostringstream out;
    if (format == OutputFormat::csv) {
        out << "component,indicator,focal,chosen_lo,chosen_hi,terms,bel,pl,"
               "expected_lo,expected_hi,conflicts\n";
        for (const auto& row : rows) {
            std::string terms;
            for (const auto& t : row.term_labels) {
                if (!terms.empty()) terms += ';';
                terms += t;
            }
            out << row.component_id << ',' << row.indicator_id << ','
                << render_focal(row.combined) << ',' << format6(row.chosen.lo) << ','
                << format6(row.chosen.hi) << ',' << terms << ',' << format6(row.bel) << ','
                << format6(row.pl) << ',' << format6(row.expected.lo) << ','
                << format6(row.expected.hi) << ',' << render_conflicts(row.conflicts) << '\n';
        }
        return out.str();
    }
    out << "{\"rows\":[";
    for (size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        if (i) out << ',';
        out << "{\"component\":\"" << json_escape(row.component_id) << "\",\"indicator\":\""
            << json_escape(row.indicator_id) << "\",\"focal\":";
        json_focal(out, row.combined);
        out << ",\"chosen\":{\"lo\":" << format6(row.chosen.lo)
            << ",\"hi\":" << format6(row.chosen.hi) << "},\"terms\":[";
        for (size_t t = 0; t < row.term_labels.size(); ++t) {
            if (t) out << ',';
            out << '"' << json_escape(row.term_labels[t]) << '"';
        }
        out << "],\"bel\":" << format6(row.bel) << ",\"pl\":" << format6(row.pl)
            << ",\"expected\":{\"lo\":" << format6(row.expected.lo)
            << ",\"hi\":" << format6(row.expected.hi) << "},\"conflicts\":";
        json_conflicts(out, row.conflicts);
        out << '}';
    }
    out << "]}\n";
    return out.str();
}

std::string render_combine(const CombinationReport& report, OutputFormat format) {
    std::ostringstream out;
    if (format == OutputFormat::csv) {
        out << "lo,hi,mass\n";
        for (const auto& fe : report.combined.focal()) {
            out << format6(fe.interval.lo) << ',' << format6(fe.interval.hi) << ','
                << format6(fe.mass) << '\n';
        }
        out << "left,right,k\n";
        for (const auto& pc : report.pair_conflicts) {
            out << pc.left_source << ',' << pc.right_source << ',' << format6(pc.conflict)
                << '\n';
        }
        return out.str();
    }
    out << "{\"combined\":{\"id\":\"" << json_escape(report.combined.source_id())
        << "\",\"focal\":";
    json_focal(out, report.combined.focal());
    out << "},\"conflicts\":";
    json_conflicts(out, report.pair_conflicts);
    out << ",\"source_order\":[";
    for (size_t i = 0; i < report.source_order.size(); ++i) {
        if (i) out << ',';
        out << '"' << json_escape(report.source_order[i]) << '"';
    }
    out << "]}\n";
    return out.str();
}

}  // namespace evident
