#include "evident/combine.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace evident {

std::pair<EvidenceBody, double> combine_pair(const EvidenceBody& left,
                                             const EvidenceBody& right) {
    std::vector<FocalElement> accrued;
    double conflict = 0.0;
    for (const auto& a : left.focal()) {
        for (const auto& b : right.focal()) {
            double product = a.mass * b.mass;
            auto inter = intersect(a.interval, b.interval);
            if (!inter) {
                conflict += product;
                continue;
            }
            bool merged = false;
            for (auto& fe : accrued) {
                if (fe.interval.approx_eq(*inter)) {
                    fe.mass += product;
                    merged = true;
                    break;
                }
            }
            if (!merged) accrued.push_back({*inter, product});
        }
    }
    double norm = 1.0 - conflict;
    if (norm <= 1e-12) {
        throw TotalConflict("sources '" + left.source_id() + "' and '" + right.source_id() +
                            "' are in total conflict (K = " + std::to_string(conflict) + ")");
    }
    for (auto& fe : accrued) fe.mass /= norm;
    return {EvidenceBody(left.source_id() + "+" + right.source_id(), std::move(accrued)),
            conflict};
}

CombinationReport combine_all(const std::vector<EvidenceBody>& bodies) {
    if (bodies.empty()) throw EmptyInput("no evidence bodies to combine");
    CombinationReport report{bodies.front(), {}, {bodies.front().source_id()}};
    for (size_t i = 1; i < bodies.size(); ++i) {
        std::string left_id = report.combined.source_id();
        auto [combined, conflict] = combine_pair(report.combined, bodies[i]);
        report.pair_conflicts.push_back({left_id, bodies[i].source_id(), conflict});
        report.combined = std::move(combined);
        report.source_order.push_back(bodies[i].source_id());
    }
    return report;
}

std::vector<EvidenceBody> parse_bodies_json(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bodies file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("sources") || !doc["sources"].is_array() ||
        doc["sources"].empty()) {
        throw ParseError("bodies file must have a non-empty 'sources' array");
    }
    std::vector<EvidenceBody> bodies;
    for (const auto& src : doc["sources"]) {
        if (!src.is_object() || !src.contains("id") || !src.contains("focal") ||
            !src["focal"].is_array()) {
            throw ParseError("each source needs an 'id' and a 'focal' array");
        }
        std::vector<FocalElement> focal;
        for (const auto& fe : src["focal"]) {
            if (!fe.is_object() || !fe.contains("lo") || !fe.contains("hi") ||
                !fe.contains("mass")) {
                throw ParseError("each focal element needs 'lo', 'hi' and 'mass'");
            }
            try {
                focal.push_back(
                    {Interval(fe["lo"].get<double>(), fe["hi"].get<double>()),
                     fe["mass"].get<double>()});
            } catch (const InvalidInput& e) {
                throw ParseError(std::string("bad focal element: ") + e.what());
            }
        }
        try {
            bodies.emplace_back(src["id"].get<std::string>(), std::move(focal));
        } catch (const InvalidInput& e) {
            throw ParseError(std::string("bad source: ") + e.what());
        }
    }
    return bodies;
}

std::vector<EvidenceBody> load_bodies(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open bodies file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_bodies_json(buf.str());
}

}  // namespace evident
