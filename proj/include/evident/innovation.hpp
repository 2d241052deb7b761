#pragma once

#include <map>
#include <string>
#include <tuple>

#include "evident/interval.hpp"

namespace evident {

// Per-axis weights; each axis sums to 1. The full weight of a cell is the
// product w_indicator * w_group * w_component.
struct WeightSpec {
    std::map<std::string, double> w_indicators;
    std::map<std::string, double> w_groups;
    std::map<std::string, double> w_components;

    void validate() const;  // throws WeightMismatch on bad sums / negatives
};

// (indicator, group, component) -> value. Cells hold intervals; a scalar
// grid is one whose cells are all degenerate.
struct ValueGrid {
    using Key = std::tuple<std::string, std::string, std::string>;
    std::map<Key, Interval> cells;

    bool is_scalar() const;
};

enum class Scalarization { midpoint, lower, upper };

struct DemandInput {
    long lf_d = 0;  // labour functions performed with system components
    long lf = 0;    // total labour functions
    long pr = 0;    // count of unsolved usage problems
};

// Weighted triple sum over indicators x groups x components. The grid must
// be complete over the cross product of weight keys. Interval cells are
// scalarized per `mode`.
double integral_index(const ValueGrid& grid, const WeightSpec& weights,
                      Scalarization mode = Scalarization::midpoint);

// Interval-valued variant: the scalar index evaluated on all lower bounds
// and on all upper bounds.
Interval integral_index_interval(const ValueGrid& grid, const WeightSpec& weights);

// LF_d / LF. Throws ZeroTotal if lf == 0, InvalidInput if lf_d > lf or
// either count is negative.
double demand(const DemandInput& input);

// Weights file: JSON {"indicators": {...}, "groups": {...}, "components": {...}}.
WeightSpec load_weights(const std::string& path);
WeightSpec parse_weights_json(const std::string& json_text);

// Grid file: CSV indicator,group,component,value with value either a
// scalar or "lo..hi".
ValueGrid load_grid(const std::string& path);
ValueGrid parse_grid_csv(const std::string& text);

}  // namespace evident
