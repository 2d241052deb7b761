#include "evident/novelty.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace evident {

namespace {

// Minimal UTF-8 decoder; malformed bytes come back as replacement chars
// and break the current token.
uint32_t decode_utf8(const std::string& s, size_t& i) {
    unsigned char c = s[i];
    if (c < 0x80) {
        ++i;
        return c;
    }
    int extra = 0;
    uint32_t cp = 0;
    if ((c & 0xE0) == 0xC0) {
        cp = c & 0x1F;
        extra = 1;
    } else if ((c & 0xF0) == 0xE0) {
        cp = c & 0x0F;
        extra = 2;
    } else if ((c & 0xF8) == 0xF0) {
        cp = c & 0x07;
        extra = 3;
    } else {
        ++i;
        return 0xFFFD;
    }
    if (i + extra >= s.size()) {
        ++i;
        return 0xFFFD;
    }
    for (int k = 1; k <= extra; ++k) {
        unsigned char cc = s[i + k];
        if ((cc & 0xC0) != 0x80) {
            ++i;
            return 0xFFFD;
        }
        cp = (cp << 6) | (cc & 0x3F);
    }
    i += extra + 1;
    return cp;
}

bool is_word_cp(uint32_t cp) {
    if (cp < 0x80) {
        return (cp >= '0' && cp <= '9') || (cp >= 'A' && cp <= 'Z') ||
               (cp >= 'a' && cp <= 'z');
    }
    if (cp >= 0xC0 && cp <= 0xFF) return cp != 0xD7 && cp != 0xF7;  // Latin-1 letters
    if (cp >= 0x2000 && cp <= 0x206F) return false;                 // general punctuation
    if (cp == 0xFFFD || cp < 0xC0) return false;                    // Latin-1 punctuation
    return true;  // treat remaining non-ASCII codepoints as word characters
}

uint32_t fold_cp(uint32_t cp) {
    if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
    if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;   // Latin-1 capitals
    if (cp >= 0x410 && cp <= 0x42F) return cp + 0x20;               // Cyrillic capitals
    if (cp == 0x401) return 0x451;                                  // Io
    return cp;
}

void append_utf8(std::string& out, uint32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

}  // namespace

std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> tokens;
    std::string current;
    size_t i = 0;
    while (i < text.size()) {
        uint32_t cp = decode_utf8(text, i);
        if (is_word_cp(cp)) {
            append_utf8(current, fold_cp(cp));
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

void RetrievalPattern::validate() const {
    if (queries.empty()) throw InvalidInput("pattern needs at least one query");
    for (const auto& q : queries) {
        if (q.empty()) throw InvalidInput("pattern contains an empty query");
    }
    if (marker.empty()) throw InvalidInput("pattern marker must be non-empty");
}

CorpusIndex CorpusIndex::from_documents(
    const std::vector<std::pair<DocumentMeta, std::string>>& docs) {
    CorpusIndex index;
    std::set<std::string> seen_ids;
    for (const auto& [meta, text] : docs) {
        if (!seen_ids.insert(meta.doc_id).second) {
            throw DuplicateDocId("duplicate document id '" + meta.doc_id + "'");
        }
        if (meta.year < 1800 || meta.year > 2200) {
            throw ParseError("document '" + meta.doc_id + "' has out-of-range year " +
                             std::to_string(meta.year));
        }
        size_t ordinal = index.docs_.size();
        index.docs_.push_back(meta);
        for (const auto& token : tokenize(text)) {
            index.postings_[token].insert(ordinal);
        }
    }
    return index;
}

CorpusIndex CorpusIndex::build(const std::string& manifest_path) {
    std::ifstream in(manifest_path, std::ios::binary);
    if (!in) throw ParseError("cannot open corpus manifest '" + manifest_path + "'");
    auto base_dir = std::filesystem::path(manifest_path).parent_path();

    std::vector<std::pair<DocumentMeta, std::string>> docs;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        nlohmann::json obj;
        try {
            obj = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError("manifest line " + std::to_string(line_no) + ": " + e.what());
        }
        if (!obj.is_object() || !obj.contains("id") || !obj.contains("year") ||
            !obj.contains("path") || !obj["id"].is_string() ||
            !obj["year"].is_number_integer() || !obj["path"].is_string()) {
            throw ParseError("manifest line " + std::to_string(line_no) +
                             ": expected {\"id\", \"year\", \"path\"}");
        }
        DocumentMeta meta{obj["id"].get<std::string>(), obj["year"].get<int>(),
                          obj["path"].get<std::string>()};
        std::filesystem::path doc_path(meta.path);
        if (doc_path.is_relative()) doc_path = base_dir / doc_path;
        std::ifstream doc(doc_path, std::ios::binary);
        if (!doc) {
            throw MissingDocument("document '" + meta.doc_id + "' not readable at '" +
                                  doc_path.string() + "'");
        }
        std::ostringstream buf;
        buf << doc.rdbuf();
        docs.emplace_back(std::move(meta), buf.str());
    }
    return from_documents(docs);
}

long CorpusIndex::count_matches(const std::vector<std::string>& query,
                                std::optional<int> slice_year, SliceMode mode) const {
    if (query.empty()) throw InvalidInput("query must be non-empty");

    std::set<size_t> result;
    bool first = true;
    for (const auto& raw_term : query) {
        auto folded = tokenize(raw_term);
        // A multi-word "term" is just more conjunctive tokens.
        for (const auto& token : folded) {
            auto it = postings_.find(token);
            if (it == postings_.end()) return 0;
            if (first) {
                result = it->second;
                first = false;
            } else {
                std::set<size_t> next;
                std::set_intersection(result.begin(), result.end(), it->second.begin(),
                                      it->second.end(), std::inserter(next, next.begin()));
                result = std::move(next);
            }
            if (result.empty() && !first) return 0;
        }
    }
    if (first) throw InvalidInput("query tokenized to nothing");

    if (!slice_year) return static_cast<long>(result.size());
    long count = 0;
    for (size_t ordinal : result) {
        int year = docs_[ordinal].year;
        if (mode == SliceMode::per_year ? year == *slice_year : year <= *slice_year) ++count;
    }
    return count;
}

NoveltyResult novelty_factor(const CorpusIndex& index, const RetrievalPattern& pattern,
                             std::optional<int> slice_year, SliceMode mode) {
    pattern.validate();
    NoveltyResult result;
    result.slice = slice_year;
    for (const auto& query : pattern.queries) {
        result.per_query_counts.push_back(index.count_matches(query, slice_year, mode));
    }
    result.marker_count = index.count_matches(pattern.marker, slice_year, mode);
    if (result.marker_count == 0) {
        throw NoMarkerMatches("marker of pattern '" + pattern.label +
                              "' matches no documents" +
                              (slice_year ? " in year " + std::to_string(*slice_year) : ""));
    }
    double mean_q = std::accumulate(result.per_query_counts.begin(),
                                    result.per_query_counts.end(), 0.0) /
                    static_cast<double>(result.per_query_counts.size());
    result.raw = 1.0 - mean_q / static_cast<double>(result.marker_count);
    result.clamped = std::min(1.0, std::max(0.0, result.raw));
    return result;
}

std::vector<std::pair<int, std::optional<NoveltyResult>>> novelty_series(
    const CorpusIndex& index, const RetrievalPattern& pattern, int first_year,
    int last_year, SliceMode mode) {
    if (last_year < first_year) throw InvalidInput("empty year range");
    std::vector<std::pair<int, std::optional<NoveltyResult>>> series;
    for (int year = first_year; year <= last_year; ++year) {
        try {
            series.emplace_back(year, novelty_factor(index, pattern, year, mode));
        } catch (const NoMarkerMatches&) {
            series.emplace_back(year, std::nullopt);
        }
    }
    return series;
}

double group_mean(const std::vector<NoveltyResult>& results) {
    if (results.empty()) throw EmptyInput("group_mean over empty result set");
    double sum = 0.0;
    for (const auto& r : results) sum += r.clamped;
    return sum / static_cast<double>(results.size());
}

RetrievalPattern parse_pattern_json(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("pattern file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("queries") || !doc["queries"].is_array() ||
        !doc.contains("marker") || !doc["marker"].is_array()) {
        throw ParseError("pattern file needs 'queries' (array of arrays) and 'marker'");
    }
    RetrievalPattern pattern;
    pattern.label = doc.value("label", "");
    for (const auto& q : doc["queries"]) {
        if (!q.is_array()) throw ParseError("each query must be an array of strings");
        std::vector<std::string> terms;
        for (const auto& t : q) {
            if (!t.is_string()) throw ParseError("query terms must be strings");
            terms.push_back(t.get<std::string>());
        }
        pattern.queries.push_back(std::move(terms));
    }
    for (const auto& t : doc["marker"]) {
        if (!t.is_string()) throw ParseError("marker terms must be strings");
        pattern.marker.push_back(t.get<std::string>());
    }
    try {
        pattern.validate();
    } catch (const InvalidInput& e) {
        throw ParseError(e.what());
    }
    return pattern;
}

RetrievalPattern load_pattern(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open pattern file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_pattern_json(buf.str());
}

}  // namespace evident
