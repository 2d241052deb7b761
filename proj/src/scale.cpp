#include "evident/scale.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace evident {

namespace {

const std::map<std::string, TermBase> kBases = {
    {"low", TermBase::low},
    {"medium", TermBase::medium},
    {"high", TermBase::high},
    {"irrelevant", TermBase::irrelevant},
};

const std::map<std::string, TermModifier> kModifiers = {
    {"stable", TermModifier::stable},
    {"increasing", TermModifier::increasing},
    {"decreasing", TermModifier::decreasing},
};

}  // namespace

LinguisticTerm parse_term(const std::string& text) {
    std::istringstream in(text);
    std::string base_word, mod_word, extra;
    in >> base_word;
    auto base_it = kBases.find(base_word);
    if (base_word.empty() || base_it == kBases.end()) {
        throw ParseError("unknown term base in '" + text + "'");
    }
    if (!(in >> mod_word)) {
        return LinguisticTerm(base_it->second);
    }
    auto mod_it = kModifiers.find(mod_word);
    if (mod_it == kModifiers.end() || (in >> extra)) {
        throw ParseError("malformed linguistic term '" + text + "'");
    }
    if (base_it->second == TermBase::irrelevant) {
        throw ParseError("'irrelevant' cannot carry a modifier: '" + text + "'");
    }
    return LinguisticTerm(base_it->second, mod_it->second);
}

std::string to_string(const LinguisticTerm& term) {
    std::string out;
    switch (term.base) {
        case TermBase::low: out = "low"; break;
        case TermBase::medium: out = "medium"; break;
        case TermBase::high: out = "high"; break;
        case TermBase::irrelevant: out = "irrelevant"; break;
    }
    if (term.modifier) {
        switch (*term.modifier) {
            case TermModifier::stable: out += " stable"; break;
            case TermModifier::increasing: out += " increasing"; break;
            case TermModifier::decreasing: out += " decreasing"; break;
        }
    }
    return out;
}

Scale::Scale(std::string name, std::vector<std::pair<LinguisticTerm, Interval>> entries)
    : name_(std::move(name)), entries_(std::move(entries)) {
    bool base_seen[4] = {false, false, false, false};
    for (size_t i = 0; i < entries_.size(); ++i) {
        for (size_t j = i + 1; j < entries_.size(); ++j) {
            if (entries_[i].first == entries_[j].first) {
                throw InvalidScale("duplicate term '" + evident::to_string(entries_[i].first) +
                                   "' in scale '" + name_ + "'");
            }
        }
        if (!entries_[i].first.modifier) {
            base_seen[static_cast<int>(entries_[i].first.base)] = true;
        }
    }
    for (TermBase b : {TermBase::low, TermBase::medium, TermBase::high, TermBase::irrelevant}) {
        if (!base_seen[static_cast<int>(b)]) {
            throw InvalidScale("scale '" + name_ + "' is missing base term '" +
                               evident::to_string(LinguisticTerm(b)) + "'");
        }
    }
}

bool Scale::has_term(const LinguisticTerm& term) const {
    return std::any_of(entries_.begin(), entries_.end(),
                       [&](const auto& e) { return e.first == term; });
}

Interval Scale::term_to_interval(const LinguisticTerm& term) const {
    for (const auto& [t, interval] : entries_) {
        if (t == term) return interval;
    }
    throw UnknownTerm("term '" + evident::to_string(term) + "' not in scale '" + name_ + "'");
}

std::vector<std::pair<LinguisticTerm, double>> Scale::interval_to_terms(
    const Interval& interval) const {
    std::vector<std::pair<LinguisticTerm, double>> scored;
    for (const auto& [term, entry] : entries_) {
        auto inter = intersect(interval, entry);
        if (!inter) continue;
        double union_len = interval.length() + entry.length() - inter->length();
        double score;
        if (union_len <= kBoundTol) {
            // Two point intervals at the same location.
            score = 1.0;
        } else if (inter->length() <= kBoundTol &&
                   (interval.is_point() || entry.is_point())) {
            // A point interval matches a non-point one only exactly.
            score = interval.approx_eq(entry) ? 1.0 : 0.0;
        } else {
            score = inter->length() / union_len;
        }
        if (score > 0.0) scored.emplace_back(term, score);
    }
    std::stable_sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return evident::to_string(a.first) < evident::to_string(b.first);
    });
    return scored;
}

Scale default_scale() {
    using B = TermBase;
    using M = TermModifier;
    std::vector<std::pair<LinguisticTerm, Interval>> entries = {
        {{B::irrelevant}, {0.00, 0.00}},
        {{B::low}, {0.00, 0.33}},
        {{B::low, M::decreasing}, {0.00, 0.11}},
        {{B::low, M::stable}, {0.12, 0.22}},
        {{B::low, M::increasing}, {0.23, 0.33}},
        {{B::medium}, {0.34, 0.96}},
        {{B::medium, M::decreasing}, {0.34, 0.44}},
        {{B::medium, M::stable}, {0.45, 0.55}},
        {{B::medium, M::increasing}, {0.56, 0.96}},
        {{B::high}, {0.67, 1.00}},
        {{B::high, M::decreasing}, {0.67, 0.77}},
        {{B::high, M::stable}, {0.78, 0.88}},
        {{B::high, M::increasing}, {0.89, 1.00}},
    };
    return Scale("default", std::move(entries));
}

Scale parse_scale_json(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("scale file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_array()) {
        throw ParseError("scale file must be an object with an 'entries' array");
    }
    std::string name = doc.value("name", "unnamed");
    std::vector<std::pair<LinguisticTerm, Interval>> entries;
    for (const auto& item : doc["entries"]) {
        if (!item.is_object() || !item.contains("term") || !item.contains("lo") ||
            !item.contains("hi") || !item["term"].is_string() ||
            !item["lo"].is_number() || !item["hi"].is_number()) {
            throw ParseError("scale entry must have string 'term' and numeric 'lo'/'hi'");
        }
        LinguisticTerm term = parse_term(item["term"].get<std::string>());
        double lo = item["lo"].get<double>();
        double hi = item["hi"].get<double>();
        try {
            entries.emplace_back(term, Interval(lo, hi));
        } catch (const InvalidInput& e) {
            throw InvalidScale("entry '" + item["term"].get<std::string>() + "': " + e.what());
        }
    }
    return Scale(std::move(name), std::move(entries));
}

Scale load_scale(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open scale file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scale_json(buf.str());
}

}  // namespace evident
