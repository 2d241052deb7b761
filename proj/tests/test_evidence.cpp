#include <algorithm>
#include <random>

#include <doctest.h>

#include "evident/evidence.hpp"

using namespace evident;

namespace {

ResponseRecord rec(const std::string& comp, const std::string& ind, const std::string& group,
                   const std::string& expert, const std::string& term) {
    return {AssessmentKey(comp, ind, group), expert, parse_term(term)};
}

}  // namespace

TEST_CASE("tally counts identical terms") {
    std::vector<ResponseRecord> records;
    for (int i = 0; i < 4; ++i) records.push_back(rec("c", "novelty", "g", "e" + std::to_string(i), "high"));
    for (int i = 4; i < 10; ++i) records.push_back(rec("c", "novelty", "g", "e" + std::to_string(i), "low"));
    records.push_back(rec("c", "novelty", "other", "x", "medium"));  // different key, ignored

    auto tally = tally_responses(records, AssessmentKey("c", "novelty", "g"));
    CHECK(tally.total == 10);
    CHECK(tally.counts.at(parse_term("high")) == 4);
    CHECK(tally.counts.at(parse_term("low")) == 6);
}

TEST_CASE("tally of a single record") {
    std::vector<ResponseRecord> records{rec("c", "novelty", "g", "e1", "medium stable")};
    auto tally = tally_responses(records, AssessmentKey("c", "novelty", "g"));
    CHECK(tally.total == 1);
    CHECK(tally.counts.at(parse_term("medium stable")) == 1);
}

TEST_CASE("tally errors") {
    std::vector<ResponseRecord> records{rec("c", "novelty", "g", "e1", "high"),
                                        rec("c", "novelty", "g", "e1", "low")};
    CHECK_THROWS_AS(tally_responses(records, AssessmentKey("c", "novelty", "g")),
                    DuplicateResponse);
    CHECK_THROWS_AS(tally_responses(records, AssessmentKey("c", "novelty", "absent")),
                    EmptyGroup);
}

TEST_CASE("tally is permutation invariant") {
    std::vector<ResponseRecord> records;
    for (int i = 0; i < 9; ++i) {
        records.push_back(rec("c", "novelty", "g", "e" + std::to_string(i),
                              i % 3 == 0 ? "high" : (i % 3 == 1 ? "low" : "medium stable")));
    }
    auto base = tally_responses(records, AssessmentKey("c", "novelty", "g"));
    std::mt19937 rng(7);
    for (int round = 0; round < 10; ++round) {
        std::shuffle(records.begin(), records.end(), rng);
        auto shuffled = tally_responses(records, AssessmentKey("c", "novelty", "g"));
        CHECK(shuffled.counts == base.counts);
        CHECK(shuffled.total == base.total);
    }
}

TEST_CASE("bpa masses are C/N") {
    Scale scale = default_scale();
    std::vector<ResponseRecord> records;
    for (int i = 0; i < 4; ++i) records.push_back(rec("c", "novelty", "g", "a" + std::to_string(i), "high"));
    for (int i = 0; i < 6; ++i) records.push_back(rec("c", "novelty", "g", "b" + std::to_string(i), "low"));
    auto body = bpa(tally_responses(records, AssessmentKey("c", "novelty", "g")), scale);

    REQUIRE(body.focal().size() == 2);
    CHECK(body.focal()[0].interval.approx_eq(Interval(0.0, 0.33)));
    CHECK(body.focal()[0].mass == doctest::Approx(0.6));
    CHECK(body.focal()[1].interval.approx_eq(Interval(0.67, 1.0)));
    CHECK(body.focal()[1].mass == doctest::Approx(0.4));
}

TEST_CASE("bpa single term gives mass 1") {
    Scale scale = default_scale();
    ResponseTally tally;
    tally.key = AssessmentKey("c", "novelty", "g");
    tally.counts[parse_term("high")] = 10;
    tally.total = 10;
    auto body = bpa(tally, scale);
    REQUIRE(body.focal().size() == 1);
    CHECK(body.focal()[0].mass == doctest::Approx(1.0));
}

TEST_CASE("bpa merges terms sharing an interval") {
    // A scale where "high" and "high decreasing" map to the same interval.
    Scale scale("merged", {
        {parse_term("low"), Interval(0.0, 0.33)},
        {parse_term("medium"), Interval(0.34, 0.66)},
        {parse_term("high"), Interval(0.67, 0.77)},
        {parse_term("high decreasing"), Interval(0.67, 0.77)},
        {parse_term("irrelevant"), Interval(0.0, 0.0)},
    });
    ResponseTally tally;
    tally.key = AssessmentKey("c", "novelty", "g");
    tally.counts[parse_term("high")] = 5;
    tally.counts[parse_term("high decreasing")] = 5;
    tally.total = 10;
    auto body = bpa(tally, scale);
    REQUIRE(body.focal().size() == 1);
    CHECK(body.focal()[0].interval.approx_eq(Interval(0.67, 0.77)));
    CHECK(body.focal()[0].mass == doctest::Approx(1.0));
}

TEST_CASE("bpa unknown term") {
    Scale scale("tiny", {
        {parse_term("low"), Interval(0.0, 0.33)},
        {parse_term("medium"), Interval(0.34, 0.66)},
        {parse_term("high"), Interval(0.67, 1.0)},
        {parse_term("irrelevant"), Interval(0.0, 0.0)},
    });
    ResponseTally tally;
    tally.key = AssessmentKey("c", "novelty", "g");
    tally.counts[parse_term("medium stable")] = 1;
    tally.total = 1;
    CHECK_THROWS_AS(bpa(tally, scale), UnknownTerm);
}

TEST_CASE("bpa over random tallies always yields a valid body") {
    Scale scale = default_scale();
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> term_pick(0, 12);
    std::uniform_int_distribution<int> count_pick(1, 20);
    for (int round = 0; round < 200; ++round) {
        ResponseTally tally;
        tally.key = AssessmentKey("c", "novelty", "g");
        int n_terms = 1 + term_pick(rng) % 5;
        for (int t = 0; t < n_terms; ++t) {
            tally.counts[scale.entries()[term_pick(rng)].first] += count_pick(rng);
        }
        for (const auto& [term, c] : tally.counts) tally.total += c;
        auto body = bpa(tally, scale);  // EvidenceBody ctor enforces the invariants
        double sum = 0;
        for (const auto& fe : body.focal()) {
            CHECK(fe.mass > 0.0);
            sum += fe.mass;
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("bpa is invariant under scaling all counts") {
    Scale scale = default_scale();
    ResponseTally tally;
    tally.key = AssessmentKey("c", "novelty", "g");
    tally.counts[parse_term("high")] = 2;
    tally.counts[parse_term("low")] = 3;
    tally.total = 5;
    auto small = bpa(tally, scale);

    ResponseTally scaled = tally;
    for (auto& [term, c] : scaled.counts) c *= 7;
    scaled.total *= 7;
    auto big = bpa(scaled, scale);

    REQUIRE(small.focal().size() == big.focal().size());
    for (size_t i = 0; i < small.focal().size(); ++i) {
        CHECK(small.focal()[i].interval.approx_eq(big.focal()[i].interval));
        CHECK(small.focal()[i].mass == doctest::Approx(big.focal()[i].mass).epsilon(1e-12));
    }
}

TEST_CASE("survey csv parsing") {
    auto records = parse_survey_csv(
        "component,indicator,group,expert,term\n"
        "c1,novelty,students,e1,high\n"
        "c1,novelty,students,e2,medium stable\n");
    REQUIRE(records.size() == 2);
    CHECK(records[1].term == parse_term("medium stable"));

    CHECK_THROWS_AS(parse_survey_csv("bad,header\n"), ParseError);
    CHECK_THROWS_AS(parse_survey_csv("component,indicator,group,expert,term\nc1,novelty\n"),
                    ParseError);
    CHECK_THROWS_AS(
        parse_survey_csv("component,indicator,group,expert,term\nc1,novelty,g,e1,tall\n"),
        ParseError);
}
