#include "evident/trend.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace evident {

namespace {

// Ordinary least squares on (x, y): returns (slope, intercept).
std::pair<double, double> ols_line(const std::vector<std::pair<double, double>>& pts) {
    double n = static_cast<double>(pts.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, y] : pts) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double denom = n * sxx - sx * sx;
    if (std::abs(denom) < 1e-14) throw DomainError("degenerate x values in fit");
    double slope = (n * sxy - sx * sy) / denom;
    double intercept = (sy - slope * sx) / n;
    return {slope, intercept};
}

// Gaussian elimination with partial pivoting; dimensions stay tiny.
std::vector<double> solve_linear(std::vector<std::vector<double>> a, std::vector<double> b) {
    size_t n = b.size();
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        for (size_t row = col + 1; row < n; ++row) {
            if (std::abs(a[row][col]) > std::abs(a[pivot][col])) pivot = row;
        }
        if (std::abs(a[pivot][col]) < 1e-14) {
            throw DomainError("ill-conditioned polynomial system");
        }
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (size_t row = col + 1; row < n; ++row) {
            double factor = a[row][col] / a[col][col];
            for (size_t k = col; k < n; ++k) a[row][k] -= factor * a[col][k];
            b[row] -= factor * b[col];
        }
    }
    std::vector<double> x(n);
    for (size_t i = n; i-- > 0;) {
        double acc = b[i];
        for (size_t k = i + 1; k < n; ++k) acc -= a[i][k] * x[k];
        x[i] = acc / a[i][i];
    }
    return x;
}

void finish_stats(TrendModel& model, const Series& series) {
    double sse = 0.0, sy = 0.0;
    for (const auto& [x, y] : series.points) sy += y;
    double mean = sy / static_cast<double>(series.points.size());
    double tss = 0.0;
    for (const auto& [x, y] : series.points) {
        double resid = y - evaluate(model, x);
        sse += resid * resid;
        tss += (y - mean) * (y - mean);
    }
    model.sse = sse;
    model.r2 = tss > 0.0 ? 1.0 - sse / tss : (sse <= 1e-15 ? 1.0 : 0.0);
}

}  // namespace

void Series::validate() const {
    if (points.size() < 2) throw InvalidInput("series needs at least 2 points");
    for (size_t i = 1; i < points.size(); ++i) {
        if (!(points[i - 1].first < points[i].first)) {
            throw InvalidInput("series x values must be strictly increasing");
        }
    }
}

Series Series::from_years(const std::vector<std::pair<int, double>>& year_points) {
    Series series;
    if (year_points.empty()) return series;
    int first_year = year_points.front().first;
    for (const auto& [year, value] : year_points) {
        series.points.emplace_back(static_cast<double>(year - first_year + 1), value);
    }
    return series;
}

TrendModel fit(const Series& series, TrendKind kind, int degree) {
    series.validate();
    TrendModel model;
    model.kind = kind;

    switch (kind) {
        case TrendKind::linear: {
            auto [slope, intercept] = ols_line(series.points);
            model.coefficients = {slope, intercept};
            break;
        }
        case TrendKind::power: {
            std::vector<std::pair<double, double>> logged;
            for (const auto& [x, y] : series.points) {
                if (x <= 0.0 || y <= 0.0) {
                    throw DomainError("power fit needs x > 0 and y > 0");
                }
                logged.emplace_back(std::log(x), std::log(y));
            }
            auto [b, log_a] = ols_line(logged);
            model.coefficients = {std::exp(log_a), b};
            break;
        }
        case TrendKind::exponential: {
            std::vector<std::pair<double, double>> logged;
            for (const auto& [x, y] : series.points) {
                if (y <= 0.0) throw DomainError("exponential fit needs y > 0");
                logged.emplace_back(x, std::log(y));
            }
            auto [b, log_a] = ols_line(logged);
            model.coefficients = {std::exp(log_a), b};
            break;
        }
        case TrendKind::polynomial: {
            if (degree < 1 || degree > 5) {
                throw DegreeTooHigh("polynomial degree must be in 1..5");
            }
            if (static_cast<size_t>(degree) >= series.points.size()) {
                throw DegreeTooHigh("polynomial degree must be below the point count");
            }
            model.degree = degree;
            size_t n = static_cast<size_t>(degree) + 1;
            // Normal equations on the monomial basis, highest power first.
            std::vector<std::vector<double>> ata(n, std::vector<double>(n, 0.0));
            std::vector<double> atb(n, 0.0);
            for (const auto& [x, y] : series.points) {
                std::vector<double> row(n);
                for (size_t j = 0; j < n; ++j) {
                    row[j] = std::pow(x, static_cast<double>(degree - static_cast<int>(j)));
                }
                for (size_t i = 0; i < n; ++i) {
                    for (size_t j = 0; j < n; ++j) ata[i][j] += row[i] * row[j];
                    atb[i] += row[i] * y;
                }
            }
            model.coefficients = solve_linear(std::move(ata), std::move(atb));
            break;
        }
    }
    finish_stats(model, series);
    return model;
}

double evaluate(const TrendModel& model, double x) {
    switch (model.kind) {
        case TrendKind::linear:
            return model.coefficients[0] * x + model.coefficients[1];
        case TrendKind::power:
            if (x <= 0.0) throw DomainError("power model is undefined for x <= 0");
            return model.coefficients[0] * std::pow(x, model.coefficients[1]);
        case TrendKind::exponential:
            return model.coefficients[0] * std::exp(model.coefficients[1] * x);
        case TrendKind::polynomial: {
            double acc = 0.0;
            for (double c : model.coefficients) acc = acc * x + c;
            return acc;
        }
    }
    throw DomainError("unknown trend kind");
}

std::string to_string(TrendKind kind) {
    switch (kind) {
        case TrendKind::linear: return "linear";
        case TrendKind::power: return "power";
        case TrendKind::exponential: return "exponential";
        case TrendKind::polynomial: return "polynomial";
    }
    return "?";
}

TrendKind parse_trend_kind(const std::string& text) {
    if (text == "linear") return TrendKind::linear;
    if (text == "power") return TrendKind::power;
    if (text == "exponential") return TrendKind::exponential;
    if (text == "polynomial") return TrendKind::polynomial;
    throw ParseError("unknown trend kind '" + text + "'");
}

Series parse_series_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty series file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "x,y") throw ParseError("series header must be 'x,y'");
    Series series;
    size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw ParseError("series line " + std::to_string(line_no) + ": expected 'x,y'");
        }
        try {
            series.points.emplace_back(std::stod(line.substr(0, comma)),
                                       std::stod(line.substr(comma + 1)));
        } catch (const std::exception&) {
            throw ParseError("series line " + std::to_string(line_no) + ": bad number");
        }
    }
    try {
        series.validate();
    } catch (const InvalidInput& e) {
        throw ParseError(e.what());
    }
    return series;
}

Series load_series(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open series file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_series_csv(buf.str());
}

}  // namespace evident
