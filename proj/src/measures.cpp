#include "evident/measures.hpp"

namespace evident {

double belief(const EvidenceBody& body, const Interval& a) {
    double sum = 0.0;
    for (const auto& fe : body.focal()) {
        if (fe.interval.subset_of(a)) sum += fe.mass;
    }
    return sum;
}

double plausibility(const EvidenceBody& body, const Interval& a) {
    double sum = 0.0;
    for (const auto& fe : body.focal()) {
        if (intersects(fe.interval, a)) sum += fe.mass;
    }
    return sum;
}

ExpectedInterval expected_interval(const EvidenceBody& body) {
    ExpectedInterval ex;
    for (const auto& fe : body.focal()) {
        ex.lo += fe.mass * fe.interval.lo;
        ex.hi += fe.mass * fe.interval.hi;
    }
    return ex;
}

MostProbable most_probable(const EvidenceBody& body, const Scale& scale) {
    const FocalElement* best = nullptr;
    MeasurePair best_measures;
    for (const auto& fe : body.focal()) {
        MeasurePair m{belief(body, fe.interval), plausibility(body, fe.interval)};
        bool better = false;
        if (!best) {
            better = true;
        } else if (m.bel != best_measures.bel) {
            better = m.bel > best_measures.bel;
        } else if (m.pl != best_measures.pl) {
            better = m.pl > best_measures.pl;
        } else {
            better = fe.interval.lo < best->interval.lo;
        }
        if (better) {
            best = &fe;
            best_measures = m;
        }
    }
    return {best->interval, best_measures, scale.interval_to_terms(best->interval)};
}

}  // namespace evident
