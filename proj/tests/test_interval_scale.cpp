#include <doctest.h>

#include "evident/scale.hpp"

using namespace evident;

TEST_CASE("interval invariants") {
    CHECK_THROWS_AS(Interval(0.5, 0.4), InvalidInput);
    CHECK_THROWS_AS(Interval(-0.1, 0.4), InvalidInput);
    CHECK_THROWS_AS(Interval(0.5, 1.1), InvalidInput);
    CHECK_NOTHROW(Interval(0.3, 0.3));
    CHECK_NOTHROW(Interval(0.0, 0.0));
}

TEST_CASE("interval intersection") {
    auto i = intersect(Interval(0.0, 0.33), Interval(0.23, 0.33));
    REQUIRE(i.has_value());
    CHECK(i->lo == doctest::Approx(0.23));
    CHECK(i->hi == doctest::Approx(0.33));

    CHECK_FALSE(intersect(Interval(0.0, 0.33), Interval(0.67, 1.0)).has_value());

    // Touching closed endpoints meet in a point.
    auto p = intersect(Interval(0.0, 0.5), Interval(0.5, 1.0));
    REQUIRE(p.has_value());
    CHECK(p->lo == doctest::Approx(0.5));
    CHECK(p->hi == doctest::Approx(0.5));
}

TEST_CASE("term parsing") {
    CHECK(parse_term("high increasing") ==
          LinguisticTerm(TermBase::high, TermModifier::increasing));
    CHECK(parse_term("medium") == LinguisticTerm(TermBase::medium));
    CHECK(to_string(parse_term("low stable")) == "low stable");
    CHECK_THROWS_AS(parse_term("irrelevant stable"), ParseError);
    CHECK_THROWS_AS(parse_term("tall"), ParseError);
    CHECK_THROWS_AS(parse_term("low sideways"), ParseError);
    CHECK_THROWS_AS(parse_term("low stable extra"), ParseError);
}

TEST_CASE("default scale term lookup") {
    Scale scale = default_scale();
    auto hi = scale.term_to_interval(parse_term("high increasing"));
    CHECK(hi.lo == doctest::Approx(0.89));
    CHECK(hi.hi == doctest::Approx(1.00));

    auto irr = scale.term_to_interval(parse_term("irrelevant"));
    CHECK(irr.lo == doctest::Approx(0.0));
    CHECK(irr.hi == doctest::Approx(0.0));

    auto ls = scale.term_to_interval(parse_term("low stable"));
    CHECK(ls.lo == doctest::Approx(0.12));
    CHECK(ls.hi == doctest::Approx(0.22));

    auto ms = scale.term_to_interval(parse_term("medium stable"));
    CHECK(ms.lo == doctest::Approx(0.45));
    CHECK(ms.hi == doctest::Approx(0.55));
}

TEST_CASE("unknown term") {
    Scale scale("tiny", {
        {parse_term("low"), Interval(0.0, 0.33)},
        {parse_term("medium"), Interval(0.34, 0.66)},
        {parse_term("high"), Interval(0.67, 1.0)},
        {parse_term("irrelevant"), Interval(0.0, 0.0)},
    });
    CHECK_THROWS_AS(scale.term_to_interval(parse_term("low stable")), UnknownTerm);
}

TEST_CASE("interval_to_terms ranking") {
    Scale scale = default_scale();

    auto top = scale.interval_to_terms(Interval(0.67, 0.77));
    REQUIRE_FALSE(top.empty());
    CHECK(to_string(top.front().first) == "high decreasing");
    CHECK(top.front().second == doctest::Approx(1.0));

    auto point = scale.interval_to_terms(Interval(0.0, 0.0));
    REQUIRE_FALSE(point.empty());
    CHECK(to_string(point.front().first) == "irrelevant");
    CHECK(point.front().second == doctest::Approx(1.0));

    // Jaccard on lengths: [0.40,0.50] vs "medium stable" [0.45,0.55].
    auto mixed = scale.interval_to_terms(Interval(0.40, 0.50));
    double ms_score = -1;
    for (const auto& [term, score] : mixed) {
        if (to_string(term) == "medium stable") ms_score = score;
    }
    CHECK(ms_score == doctest::Approx(0.05 / 0.15).epsilon(1e-6));
}

TEST_CASE("interval_to_terms round trip scores every scale term 1.0") {
    Scale scale = default_scale();
    for (const auto& [term, interval] : scale.entries()) {
        auto ranked = scale.interval_to_terms(interval);
        REQUIRE_FALSE(ranked.empty());
        bool found_with_one = false;
        for (const auto& [t, score] : ranked) {
            if (t == term) found_with_one = score == doctest::Approx(1.0);
        }
        CHECK(found_with_one);
        for (const auto& [t, score] : ranked) {
            CHECK(score > 0.0);
            CHECK(score <= 1.0 + 1e-12);
        }
    }
}

TEST_CASE("scale json loading") {
    auto scale = parse_scale_json(R"({"name":"s","entries":[
        {"term":"low","lo":0.0,"hi":0.33},
        {"term":"medium","lo":0.34,"hi":0.66},
        {"term":"high","lo":0.67,"hi":1.0},
        {"term":"irrelevant","lo":0.0,"hi":0.0}]})");
    CHECK(scale.entries().size() == 4);

    CHECK_THROWS_AS(parse_scale_json("not json"), ParseError);
    // lo > hi
    CHECK_THROWS_AS(parse_scale_json(R"({"name":"s","entries":[
        {"term":"low","lo":0.5,"hi":0.33},
        {"term":"medium","lo":0.34,"hi":0.66},
        {"term":"high","lo":0.67,"hi":1.0},
        {"term":"irrelevant","lo":0.0,"hi":0.0}]})"),
                    InvalidScale);
    // missing "medium"
    CHECK_THROWS_AS(parse_scale_json(R"({"name":"s","entries":[
        {"term":"low","lo":0.0,"hi":0.33},
        {"term":"high","lo":0.67,"hi":1.0},
        {"term":"irrelevant","lo":0.0,"hi":0.0}]})"),
                    InvalidScale);
    // duplicate term
    CHECK_THROWS_AS(parse_scale_json(R"({"name":"s","entries":[
        {"term":"low","lo":0.0,"hi":0.33},
        {"term":"low","lo":0.1,"hi":0.2},
        {"term":"medium","lo":0.34,"hi":0.66},
        {"term":"high","lo":0.67,"hi":1.0},
        {"term":"irrelevant","lo":0.0,"hi":0.0}]})"),
                    InvalidScale);
}

TEST_CASE("bundled scale file matches the built-in default") {
    Scale bundled = load_scale(std::string(EVIDENT_DATA_DIR) + "/default_scale.json");
    Scale builtin = default_scale();
    REQUIRE(bundled.entries().size() == builtin.entries().size());
    CHECK(bundled.entries().size() == 13);  // 4 base + 9 modified terms
    for (const auto& [term, interval] : builtin.entries()) {
        CHECK(bundled.term_to_interval(term).approx_eq(interval));
    }
}
