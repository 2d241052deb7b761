#include <algorithm>
#include <random>

#include <doctest.h>

#include "evident/combine.hpp"
#include "oracles.hpp"

using namespace evident;

namespace {

EvidenceBody worked_b1() {
    return EvidenceBody("b1", {{Interval(0.0, 0.33), 0.6}, {Interval(0.67, 1.0), 0.4}});
}

EvidenceBody worked_b2() {
    return EvidenceBody("b2", {{Interval(0.23, 0.33), 0.5}, {Interval(0.67, 0.77), 0.5}});
}

double mass_at(const EvidenceBody& body, const Interval& interval) {
    for (const auto& fe : body.focal()) {
        if (fe.interval.approx_eq(interval)) return fe.mass;
    }
    return -1.0;
}

bool bodies_match(const EvidenceBody& a, const EvidenceBody& b, double tol) {
    if (a.focal().size() != b.focal().size()) return false;
    for (const auto& fe : a.focal()) {
        double m = mass_at(b, fe.interval);
        if (m < 0.0 || std::abs(m - fe.mass) > tol) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("worked two-source combination") {
    auto [combined, conflict] = combine_pair(worked_b1(), worked_b2());
    CHECK(conflict == doctest::Approx(0.5).epsilon(1e-12));
    REQUIRE(combined.focal().size() == 2);
    CHECK(mass_at(combined, Interval(0.23, 0.33)) == doctest::Approx(0.6).epsilon(1e-9));
    CHECK(mass_at(combined, Interval(0.67, 0.77)) == doctest::Approx(0.4).epsilon(1e-9));
}

TEST_CASE("vacuous evidence is the identity") {
    auto b1 = worked_b1();
    auto [combined, conflict] = combine_pair(b1, EvidenceBody::vacuous("v"));
    CHECK(conflict == doctest::Approx(0.0));
    CHECK(bodies_match(combined, b1, 1e-12));
}

TEST_CASE("total conflict") {
    EvidenceBody a("a", {{Interval(0.0, 0.1), 1.0}});
    EvidenceBody b("b", {{Interval(0.9, 1.0), 1.0}});
    CHECK_THROWS_AS(combine_pair(a, b), TotalConflict);
}

TEST_CASE("point intersections count as agreement") {
    EvidenceBody a("a", {{Interval(0.0, 0.5), 1.0}});
    EvidenceBody b("b", {{Interval(0.5, 1.0), 1.0}});
    auto [combined, conflict] = combine_pair(a, b);
    CHECK(conflict == doctest::Approx(0.0));
    REQUIRE(combined.focal().size() == 1);
    CHECK(combined.focal()[0].interval.approx_eq(Interval(0.5, 0.5)));
}

TEST_CASE("combine_pair is commutative") {
    auto [ab, k_ab] = combine_pair(worked_b1(), worked_b2());
    auto [ba, k_ba] = combine_pair(worked_b2(), worked_b1());
    CHECK(k_ab == doctest::Approx(k_ba).epsilon(1e-12));
    CHECK(bodies_match(ab, ba, 1e-9));
}

TEST_CASE("combine_all of a single body is itself") {
    auto report = combine_all({worked_b1()});
    CHECK(report.pair_conflicts.empty());
    CHECK(bodies_match(report.combined, worked_b1(), 1e-12));
    CHECK(report.source_order == std::vector<std::string>{"b1"});
}

TEST_CASE("combine_all records the fold trail") {
    EvidenceBody b3("b3", {{Interval(0.2, 0.8), 1.0}});
    auto report = combine_all({worked_b1(), worked_b2(), b3});
    REQUIRE(report.pair_conflicts.size() == 2);
    CHECK(report.pair_conflicts[0].left_source == "b1");
    CHECK(report.pair_conflicts[0].right_source == "b2");
    CHECK(report.pair_conflicts[0].conflict == doctest::Approx(0.5));
    CHECK(report.pair_conflicts[1].right_source == "b3");
    CHECK(report.source_order == std::vector<std::string>{"b1", "b2", "b3"});
    for (const auto& pc : report.pair_conflicts) CHECK(pc.conflict < 1.0);
}

TEST_CASE("combine_all names the offending pair on total conflict") {
    EvidenceBody a("alpha", {{Interval(0.0, 0.1), 1.0}});
    EvidenceBody b("beta", {{Interval(0.0, 0.1), 1.0}});
    EvidenceBody c("gamma", {{Interval(0.9, 1.0), 1.0}});
    try {
        combine_all({a, b, c});
        FAIL("expected TotalConflict");
    } catch (const TotalConflict& e) {
        CHECK(std::string(e.what()).find("gamma") != std::string::npos);
    }
}

TEST_CASE("pairwise fold equals n-way enumeration on randomized cases") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> n_sources(1, 4);
    int checked = 0;
    for (int round = 0; round < 200; ++round) {
        std::vector<EvidenceBody> bodies;
        int n = n_sources(rng);
        for (int s = 0; s < n; ++s) {
            bodies.push_back(oracle::random_body(rng, "s" + std::to_string(s)));
        }
        auto expected = oracle::n_way_combine(bodies);
        try {
            auto report = combine_all(bodies);
            REQUIRE(report.combined.focal().size() == expected.focal.size());
            for (const auto& fe : expected.focal) {
                CHECK(mass_at(report.combined, fe.interval) ==
                      doctest::Approx(fe.mass).epsilon(1e-9));
            }
            double sum = 0;
            for (const auto& fe : report.combined.focal()) sum += fe.mass;
            CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
            ++checked;
        } catch (const TotalConflict&) {
            CHECK(1.0 - expected.conflict <= 1e-9);
        }
    }
    CHECK(checked > 100);  // most random cases must exercise the fold
}

TEST_CASE("combine_all is order independent within tolerance") {
    std::mt19937 rng(1234);
    for (int round = 0; round < 50; ++round) {
        std::vector<EvidenceBody> bodies;
        for (int s = 0; s < 3; ++s) {
            bodies.push_back(oracle::random_body(rng, "s" + std::to_string(s), 3));
        }
        std::vector<EvidenceBody> shuffled = bodies;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        try {
            auto a = combine_all(bodies);
            auto b = combine_all(shuffled);
            CHECK(bodies_match(a.combined, b.combined, 1e-6));
        } catch (const TotalConflict&) {
            // Conflicting cases are covered by the oracle test above.
        }
    }
}

TEST_CASE("bodies json parsing") {
    auto bodies = parse_bodies_json(R"({"sources":[
        {"id":"a","focal":[{"lo":0.0,"hi":0.33,"mass":0.6},{"lo":0.67,"hi":1.0,"mass":0.4}]}]})");
    REQUIRE(bodies.size() == 1);
    CHECK(bodies[0].source_id() == "a");
    CHECK(bodies[0].focal().size() == 2);

    CHECK_THROWS_AS(parse_bodies_json("{}"), ParseError);
    CHECK_THROWS_AS(parse_bodies_json(R"({"sources":[]})"), ParseError);
    // masses must sum to 1
    CHECK_THROWS_AS(parse_bodies_json(R"({"sources":[
        {"id":"a","focal":[{"lo":0.0,"hi":0.5,"mass":0.6}]}]})"),
                    ParseError);
}
