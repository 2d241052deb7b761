#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "evident/errors.hpp"

namespace evident {

struct DocumentMeta {
    std::string doc_id;
    int year = 0;
    std::string path;
};

// Q conjunctive keyword queries plus one marker query.
struct RetrievalPattern {
    std::string label;
    std::vector<std::vector<std::string>> queries;
    std::vector<std::string> marker;

    void validate() const;  // throws InvalidInput
};

struct NoveltyResult {
    double raw = 0.0;
    double clamped = 0.0;
    std::vector<long> per_query_counts;
    long marker_count = 0;
    std::optional<int> slice;
};

enum class SliceMode { per_year, cumulative };

// Case-folded word tokens (contiguous alphanumeric runs).
std::vector<std::string> tokenize(const std::string& text);

// Inverted index over a document corpus partitioned by year.
class CorpusIndex {
  public:
    // Manifest: JSON lines, one {"id": "...", "year": 2017, "path": "..."} per
    // line; relative paths resolve against the manifest's directory.
    static CorpusIndex build(const std::string& manifest_path);
    static CorpusIndex from_documents(
        const std::vector<std::pair<DocumentMeta, std::string>>& docs);

    size_t document_count() const { return docs_.size(); }
    const std::vector<DocumentMeta>& documents() const { return docs_; }

    // Documents containing all query terms, optionally restricted to one
    // year (or to all years <= slice_year in cumulative mode).
    long count_matches(const std::vector<std::string>& query,
                       std::optional<int> slice_year = std::nullopt,
                       SliceMode mode = SliceMode::per_year) const;

  private:
    std::vector<DocumentMeta> docs_;
    std::map<std::string, std::set<size_t>> postings_;
};

// N = 1 - (mean per-query hits)/(marker hits), clamped to [0,1].
// Throws NoMarkerMatches when the marker finds nothing.
NoveltyResult novelty_factor(const CorpusIndex& index, const RetrievalPattern& pattern,
                             std::optional<int> slice_year = std::nullopt,
                             SliceMode mode = SliceMode::per_year);

// One novelty evaluation per year in [first_year, last_year]; years where
// the marker finds nothing become gap entries (nullopt).
std::vector<std::pair<int, std::optional<NoveltyResult>>> novelty_series(
    const CorpusIndex& index, const RetrievalPattern& pattern, int first_year,
    int last_year, SliceMode mode = SliceMode::per_year);

// Arithmetic mean of clamped values. Throws EmptyInput.
double group_mean(const std::vector<NoveltyResult>& results);

// Pattern file: {"label": "...", "queries": [["a","b"], ...], "marker": ["a"]}.
RetrievalPattern load_pattern(const std::string& path);
RetrievalPattern parse_pattern_json(const std::string& json_text);

}  // namespace evident
