#pragma once

#include <string>
#include <vector>

#include "evident/errors.hpp"

namespace evident {

// (x, y) observations, x strictly increasing, at least two points.
struct Series {
    std::vector<std::pair<double, double>> points;

    void validate() const;

    // Rebase year-indexed data to x = year - first_year + 1 so that
    // power/exponential fits stay in a positive domain.
    static Series from_years(const std::vector<std::pair<int, double>>& year_points);
};

enum class TrendKind { linear, power, exponential, polynomial };

// Fitted approximation. Coefficients:
//   linear       (slope, intercept)          y = c0*x + c1
//   power        (a, b)                      y = a * x^b
//   exponential  (a, b)                      y = a * e^(b*x)
//   polynomial   highest degree first        y = c0*x^d + ... + cd
struct TrendModel {
    TrendKind kind = TrendKind::linear;
    int degree = 1;  // polynomial only
    std::vector<double> coefficients;
    double sse = 0.0;
    double r2 = 0.0;
};

// Least-squares fit. Power and exponential go through log transforms;
// polynomials solve the normal equations on the monomial basis. sse and
// r2 are computed on the original scale.
TrendModel fit(const Series& series, TrendKind kind, int degree = 3);

double evaluate(const TrendModel& model, double x);

std::string to_string(TrendKind kind);
TrendKind parse_trend_kind(const std::string& text);

// Series CSV: header "x,y", one point per line.
Series load_series(const std::string& path);
Series parse_series_csv(const std::string& text);

}  // namespace evident
