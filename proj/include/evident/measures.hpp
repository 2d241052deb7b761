#pragma once

#include <vector>

#include "evident/evidence.hpp"

namespace evident {

// [sum m * inf A_i, sum m * sup A_i] of a body.
struct ExpectedInterval {
    double lo = 0.0;
    double hi = 0.0;
};

struct MeasurePair {
    double bel = 0.0;
    double pl = 0.0;
};

// Total mass of focal elements contained in `a` (lower probability bound).
double belief(const EvidenceBody& body, const Interval& a);

// Total mass of focal elements intersecting `a` (upper probability bound).
double plausibility(const EvidenceBody& body, const Interval& a);

ExpectedInterval expected_interval(const EvidenceBody& body);

struct MostProbable {
    Interval interval;
    MeasurePair measures;
    std::vector<std::pair<LinguisticTerm, double>> terms;
};

// The focal element maximizing belief; ties go to higher plausibility,
// then to the smaller lower bound. Term labels come from the scale.
MostProbable most_probable(const EvidenceBody& body, const Scale& scale);

}  // namespace evident
