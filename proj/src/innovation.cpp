#include "evident/innovation.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "evident/errors.hpp"

namespace evident {

namespace {

constexpr double kWeightTol = 1e-9;

void check_axis(const std::map<std::string, double>& axis, const char* label) {
    if (axis.empty()) throw WeightMismatch(std::string(label) + " weights are empty");
    double sum = 0.0;
    for (const auto& [id, w] : axis) {
        if (w < 0.0) {
            throw WeightMismatch(std::string(label) + " weight for '" + id + "' is negative");
        }
        sum += w;
    }
    if (std::abs(sum - 1.0) > kWeightTol) {
        throw WeightMismatch(std::string(label) + " weights sum to " + std::to_string(sum) +
                             ", expected 1");
    }
}

double scalarize(const Interval& v, Scalarization mode) {
    switch (mode) {
        case Scalarization::lower: return v.lo;
        case Scalarization::upper: return v.hi;
        case Scalarization::midpoint: break;
    }
    return 0.5 * (v.lo + v.hi);
}

}  // namespace

void WeightSpec::validate() const {
    check_axis(w_indicators, "indicator");
    check_axis(w_groups, "group");
    check_axis(w_components, "component");
}

bool ValueGrid::is_scalar() const {
    for (const auto& [key, v] : cells) {
        if (!v.is_point()) return false;
    }
    return true;
}

double integral_index(const ValueGrid& grid, const WeightSpec& weights, Scalarization mode) {
    weights.validate();
    size_t expected =
        weights.w_indicators.size() * weights.w_groups.size() * weights.w_components.size();
    if (grid.cells.size() != expected) {
        throw IncompleteGrid("grid has " + std::to_string(grid.cells.size()) +
                             " cells, weight axes imply " + std::to_string(expected));
    }
    double index = 0.0;
    for (const auto& [wi_id, wi] : weights.w_indicators) {
        for (const auto& [wj_id, wj] : weights.w_groups) {
            for (const auto& [wk_id, wk] : weights.w_components) {
                auto it = grid.cells.find({wi_id, wj_id, wk_id});
                if (it == grid.cells.end()) {
                    throw IncompleteGrid("grid cell (" + wi_id + ", " + wj_id + ", " + wk_id +
                                         ") is missing");
                }
                index += wi * wj * wk * scalarize(it->second, mode);
            }
        }
    }
    return index;
}

Interval integral_index_interval(const ValueGrid& grid, const WeightSpec& weights) {
    double lo = integral_index(grid, weights, Scalarization::lower);
    double hi = integral_index(grid, weights, Scalarization::upper);
    return Interval(lo, hi);
}

double demand(const DemandInput& input) {
    if (input.lf == 0) throw ZeroTotal("total labour function count is zero");
    if (input.lf < 0 || input.lf_d < 0 || input.lf_d > input.lf) {
        throw InvalidInput("demand requires 0 <= lf_d <= lf");
    }
    return static_cast<double>(input.lf_d) / static_cast<double>(input.lf);
}

WeightSpec parse_weights_json(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("weights file is not valid JSON: ") + e.what());
    }
    WeightSpec spec;
    auto read_axis = [&](const char* field, std::map<std::string, double>& out) {
        if (!doc.is_object() || !doc.contains(field) || !doc[field].is_object()) {
            throw ParseError(std::string("weights file needs an object field '") + field + "'");
        }
        for (const auto& [id, w] : doc[field].items()) {
            if (!w.is_number()) throw ParseError("weight for '" + id + "' is not numeric");
            out[id] = w.get<double>();
        }
    };
    read_axis("indicators", spec.w_indicators);
    read_axis("groups", spec.w_groups);
    read_axis("components", spec.w_components);
    spec.validate();
    return spec;
}

WeightSpec load_weights(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open weights file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_weights_json(buf.str());
}

ValueGrid parse_grid_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty grid file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "indicator,group,component,value") {
        throw ParseError("grid header must be 'indicator,group,component,value'");
    }
    ValueGrid grid;
    size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::istringstream row(line);
        std::string field;
        while (std::getline(row, field, ',')) fields.push_back(field);
        if (fields.size() != 4) {
            throw ParseError("grid line " + std::to_string(line_no) + ": expected 4 fields");
        }
        Interval value;
        try {
            const std::string& v = fields[3];
            auto sep = v.find("..");
            if (sep == std::string::npos) {
                double x = std::stod(v);
                value = Interval(x, x);
            } else {
                value = Interval(std::stod(v.substr(0, sep)), std::stod(v.substr(sep + 2)));
            }
        } catch (const std::exception& e) {
            throw ParseError("grid line " + std::to_string(line_no) + ": bad value '" +
                             fields[3] + "'");
        }
        ValueGrid::Key key{fields[0], fields[1], fields[2]};
        if (!grid.cells.emplace(key, value).second) {
            throw ParseError("grid line " + std::to_string(line_no) + ": duplicate cell");
        }
    }
    return grid;
}

ValueGrid load_grid(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open grid file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_grid_csv(buf.str());
}

}  // namespace evident
