#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "evident/combine.hpp"
#include "evident/evidence.hpp"
#include "evident/format.hpp"
#include "evident/innovation.hpp"
#include "evident/novelty.hpp"
#include "evident/report.hpp"
#include "evident/scale.hpp"
#include "evident/trend.hpp"

namespace {

using namespace evident;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitCompute = 3;

void write_output(const std::string& content, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw InputError("cannot open output file '" + output_path + "'");
    out << content;
}

OutputFormat parse_format(const std::string& text) {
    if (text.empty() || text == "csv") return OutputFormat::csv;
    if (text == "json") return OutputFormat::json;
    throw InputError("format must be 'csv' or 'json'");
}

Scale resolve_scale(const std::string& scale_path) {
    if (!scale_path.empty()) return load_scale(scale_path);
    if (const char* env = std::getenv("EVIDENT_SCALE"); env && *env) {
        return load_scale(env);
    }
    return default_scale();
}

Scalarization parse_scalarization(const std::string& text) {
    if (text == "midpoint") return Scalarization::midpoint;
    if (text == "lower") return Scalarization::lower;
    if (text == "upper") return Scalarization::upper;
    throw InputError("scalarization must be midpoint, lower or upper");
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

struct AssessConfig {
    std::string scale_path;
    std::string survey_path;
    std::string output_path;
    std::string format = "csv";
};

AssessConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(buf.str());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("config file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("config file must be a JSON object");
    AssessConfig config;
    for (const auto& [key, value] : doc.items()) {
        if (key == "scale") config.scale_path = value.get<std::string>();
        else if (key == "survey") config.survey_path = value.get<std::string>();
        else if (key == "output") config.output_path = value.get<std::string>();
        else if (key == "format") config.format = value.get<std::string>();
        else throw ParseError("unknown config key '" + key + "'");
    }
    return config;
}

int cmd_assess(const std::string& config_path, std::string scale_path,
               std::string survey_path, std::string output_path, std::string format) {
    AssessConfig config;
    if (!config_path.empty()) config = load_config(config_path);
    if (!scale_path.empty()) config.scale_path = scale_path;
    if (!survey_path.empty()) config.survey_path = survey_path;
    if (!output_path.empty()) config.output_path = output_path;
    if (!format.empty()) config.format = format;
    if (config.survey_path.empty()) throw InputError("assess needs a survey file");

    Scale scale = resolve_scale(config.scale_path);
    auto records = load_survey(config.survey_path);
    auto rows = run_assess(records, scale);
    write_output(render_assess(rows, parse_format(config.format)), config.output_path);
    return kExitOk;
}

int cmd_combine(const std::string& bodies_path, const std::string& output_path,
                const std::string& format) {
    auto bodies = load_bodies(bodies_path);
    auto report = combine_all(bodies);
    write_output(render_combine(report, parse_format(format)), output_path);
    return kExitOk;
}

std::string render_novelty_row(const NoveltyResult& r) {
    std::ostringstream out;
    out << "{\"raw\":" << format6(r.raw) << ",\"clamped\":" << format6(r.clamped)
        << ",\"marker_count\":" << r.marker_count << ",\"per_query_counts\":[";
    for (size_t i = 0; i < r.per_query_counts.size(); ++i) {
        if (i) out << ',';
        out << r.per_query_counts[i];
    }
    out << "]}";
    return out.str();
}

std::string join_counts(const std::vector<long>& counts) {
    std::string out;
    for (long c : counts) {
        if (!out.empty()) out += '|';
        out += std::to_string(c);
    }
    return out;
}

int cmd_novelty(const std::string& manifest_path, const std::string& pattern_path,
                std::optional<int> year, const std::string& series_range, bool cumulative,
                const std::string& output_path, const std::string& format) {
    auto index = CorpusIndex::build(manifest_path);
    auto pattern = load_pattern(pattern_path);
    SliceMode mode = cumulative ? SliceMode::cumulative : SliceMode::per_year;
    OutputFormat fmt = parse_format(format);
    std::ostringstream out;

    if (!series_range.empty()) {
        auto sep = series_range.find("..");
        if (sep == std::string::npos) throw InputError("--series expects FIRST..LAST");
        int first = 0, last = 0;
        try {
            first = std::stoi(series_range.substr(0, sep));
            last = std::stoi(series_range.substr(sep + 2));
        } catch (const std::exception&) {
            throw InputError("--series expects FIRST..LAST");
        }
        auto series = novelty_series(index, pattern, first, last, mode);
        if (fmt == OutputFormat::csv) {
            out << "year,raw,clamped,marker_count,query_counts\n";
            for (const auto& [y, r] : series) {
                if (r) {
                    out << y << ',' << format6(r->raw) << ',' << format6(r->clamped) << ','
                        << r->marker_count << ',' << join_counts(r->per_query_counts) << '\n';
                } else {
                    out << y << ",,,,\n";
                }
            }
        } else {
            out << "{\"label\":\"" << json_escape(pattern.label) << "\",\"mode\":\""
                << (cumulative ? "cumulative" : "per-year") << "\",\"series\":[";
            bool first_row = true;
            for (const auto& [y, r] : series) {
                if (!first_row) out << ',';
                first_row = false;
                if (r) {
                    out << "{\"year\":" << y << ",\"gap\":false,\"result\":"
                        << render_novelty_row(*r) << '}';
                } else {
                    out << "{\"year\":" << y << ",\"gap\":true}";
                }
            }
            out << "]}\n";
        }
    } else {
        auto result = novelty_factor(index, pattern, year, mode);
        if (fmt == OutputFormat::csv) {
            out << "label,slice,raw,clamped,marker_count,query_counts\n";
            out << pattern.label << ',' << (year ? std::to_string(*year) : std::string())
                << ',' << format6(result.raw) << ',' << format6(result.clamped) << ','
                << result.marker_count << ',' << join_counts(result.per_query_counts) << '\n';
        } else {
            out << "{\"label\":\"" << json_escape(pattern.label)
                << "\",\"result\":" << render_novelty_row(result) << "}\n";
        }
    }
    write_output(out.str(), output_path);
    return kExitOk;
}

std::string render_model_json(const TrendModel& model) {
    std::ostringstream out;
    out << "{\"kind\":\"" << to_string(model.kind) << '"';
    if (model.kind == TrendKind::polynomial) out << ",\"degree\":" << model.degree;
    out << ",\"coefficients\":[";
    for (size_t i = 0; i < model.coefficients.size(); ++i) {
        if (i) out << ',';
        out << format6(model.coefficients[i]);
    }
    out << "],\"sse\":" << format6(model.sse) << ",\"r2\":" << format6(model.r2) << '}';
    return out.str();
}

int cmd_trend(const std::string& series_path, const std::string& kind, int degree,
              const std::string& output_path, const std::string& format) {
    Series series = load_series(series_path);
    OutputFormat fmt = parse_format(format);
    std::vector<TrendModel> models;
    if (kind == "all") {
        for (TrendKind k : {TrendKind::linear, TrendKind::power, TrendKind::exponential,
                            TrendKind::polynomial}) {
            models.push_back(fit(series, k, degree));
        }
        std::stable_sort(models.begin(), models.end(),
                         [](const TrendModel& a, const TrendModel& b) { return a.sse < b.sse; });
    } else {
        models.push_back(fit(series, parse_trend_kind(kind), degree));
    }

    std::ostringstream out;
    if (fmt == OutputFormat::csv) {
        out << "kind,degree,coefficients,sse,r2\n";
        for (const auto& model : models) {
            std::string coeffs;
            for (double c : model.coefficients) {
                if (!coeffs.empty()) coeffs += '|';
                coeffs += format6(c);
            }
            out << to_string(model.kind) << ','
                << (model.kind == TrendKind::polynomial ? std::to_string(model.degree) : "")
                << ',' << coeffs << ',' << format6(model.sse) << ',' << format6(model.r2)
                << '\n';
        }
    } else if (models.size() == 1) {
        out << render_model_json(models.front()) << '\n';
    } else {
        out << "{\"models\":[";
        for (size_t i = 0; i < models.size(); ++i) {
            if (i) out << ',';
            out << render_model_json(models[i]);
        }
        out << "]}\n";
    }
    write_output(out.str(), output_path);
    return kExitOk;
}

int cmd_index(const std::string& grid_path, const std::string& weights_path,
              std::optional<long> lf_d, std::optional<long> lf, std::optional<long> pr,
              const std::string& scalarization, const std::string& output_path,
              const std::string& format) {
    std::ostringstream out;
    OutputFormat fmt = parse_format(format);
    std::optional<double> in_scalar;
    std::optional<Interval> in_interval;
    if (!grid_path.empty() || !weights_path.empty()) {
        if (grid_path.empty() || weights_path.empty()) {
            throw InputError("index needs both --grid and --weights");
        }
        ValueGrid grid = load_grid(grid_path);
        WeightSpec weights = load_weights(weights_path);
        in_scalar = integral_index(grid, weights, parse_scalarization(scalarization));
        in_interval = integral_index_interval(grid, weights);
    }
    std::optional<double> demand_value;
    if (lf.has_value() || lf_d.has_value()) {
        if (!lf.has_value() || !lf_d.has_value()) {
            throw InputError("demand needs both --lfd and --lf");
        }
        demand_value = demand({*lf_d, *lf, pr.value_or(0)});
    }
    if (!in_scalar && !demand_value && !pr) {
        throw InputError("index needs --grid/--weights and/or --lfd/--lf/--pr");
    }

    if (fmt == OutputFormat::csv) {
        out << "key,value\n";
        if (in_scalar) {
            out << "in," << format6(*in_scalar) << '\n';
            out << "in_lo," << format6(in_interval->lo) << '\n';
            out << "in_hi," << format6(in_interval->hi) << '\n';
            out << "scalarization," << scalarization << '\n';
        }
        if (demand_value) out << "demand," << format6(*demand_value) << '\n';
        if (pr) out << "pr," << *pr << '\n';
    } else {
        out << '{';
        bool first = true;
        auto field = [&](const std::string& k, const std::string& v) {
            if (!first) out << ',';
            first = false;
            out << '"' << k << "\":" << v;
        };
        if (in_scalar) {
            field("in", format6(*in_scalar));
            field("in_interval", "{\"lo\":" + format6(in_interval->lo) +
                                     ",\"hi\":" + format6(in_interval->hi) + '}');
            field("scalarization", '"' + scalarization + '"');
        }
        if (demand_value) field("demand", format6(*demand_value));
        if (pr) field("pr", std::to_string(*pr));
        out << "}\n";
    }
    write_output(out.str(), output_path);
    return kExitOk;
}

int cmd_scale_validate(const std::string& scale_path) {
    Scale scale = load_scale(scale_path);
    std::cout << "scale '" << scale.name() << "' is valid (" << scale.entries().size()
              << " terms)\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Innovation assessment toolkit: evidence combination, novelty "
                 "measurement and trend analysis"};
    app.require_subcommand(1);

    std::string config_path, output_path, format;
    app.add_option("--config", config_path, "Pipeline config file (JSON)");
    app.add_option("--output", output_path, "Output file (default: stdout)");
    app.add_option("--format", format, "Output format: csv|json");

    std::string scale_path, survey_path;
    auto* assess = app.add_subcommand("assess", "Build the integral assessment table");
    assess->add_option("--scale", scale_path, "Scale file (default: $EVIDENT_SCALE or built-in)");
    assess->add_option("--survey", survey_path, "Survey CSV");

    std::string bodies_path;
    auto* combine = app.add_subcommand("combine", "Combine evidence bodies from a file");
    combine->add_option("bodies", bodies_path, "Evidence bodies JSON")->required();

    std::string manifest_path, pattern_path, series_range;
    std::optional<int> year;
    bool cumulative = false;
    auto* novelty = app.add_subcommand("novelty", "Compute the retrieval novelty factor");
    novelty->add_option("--manifest", manifest_path, "Corpus manifest (JSON lines)")->required();
    novelty->add_option("--pattern", pattern_path, "Retrieval pattern JSON")->required();
    novelty->add_option("--year", year, "Restrict to one year");
    novelty->add_option("--series", series_range, "Per-year series FIRST..LAST");
    novelty->add_flag("--cumulative", cumulative, "Slice by all years up to the given one");

    std::string series_path, trend_kind = "linear";
    int degree = 3;
    auto* trend = app.add_subcommand("trend", "Fit a trend model to a series CSV");
    trend->add_option("series", series_path, "Series CSV")->required();
    trend->add_option("--kind", trend_kind, "linear|power|exponential|polynomial|all");
    trend->add_option("--degree", degree, "Polynomial degree (1..5)");

    std::string grid_path, weights_path, scalarization = "midpoint";
    std::optional<long> lf_d, lf, pr;
    auto* index = app.add_subcommand("index", "Integral innovation index and demand");
    index->add_option("--grid", grid_path, "Value grid CSV");
    index->add_option("--weights", weights_path, "Weights JSON");
    index->add_option("--lfd", lf_d, "Labour functions covered by the system");
    index->add_option("--lf", lf, "Total labour functions");
    index->add_option("--pr", pr, "Unsolved usage problem count");
    index->add_option("--scalarization", scalarization, "midpoint|lower|upper");

    std::string validate_path;
    auto* validate = app.add_subcommand("scale-validate", "Validate a scale file");
    validate->add_option("scale", validate_path, "Scale JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInput;
    }

    try {
        if (assess->parsed()) {
            return cmd_assess(config_path, scale_path, survey_path, output_path, format);
        }
        if (combine->parsed()) return cmd_combine(bodies_path, output_path, format);
        if (novelty->parsed()) {
            return cmd_novelty(manifest_path, pattern_path, year, series_range, cumulative,
                               output_path, format);
        }
        if (trend->parsed()) {
            return cmd_trend(series_path, trend_kind, degree, output_path, format);
        }
        if (index->parsed()) {
            return cmd_index(grid_path, weights_path, lf_d, lf, pr, scalarization,
                             output_path, format);
        }
        if (validate->parsed()) return cmd_scale_validate(validate_path);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const ComputeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCompute;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCompute;
    }
    return kExitOk;
}
