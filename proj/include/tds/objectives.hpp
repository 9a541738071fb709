#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "tds/graph.hpp"

namespace tds {

enum class ObjectiveKind {
    F1Maximize,  // number of distinct triangle degrees; n means triangle-distinct
    F2Minimize,  // number of vertex pairs with equal triangle degree; 0 means TD
    F3Minimize,  // gap-penalty sum; below n means TD
};

struct ObjectiveValue {
    ObjectiveKind kind;
    double value;
};

// Strict-improvement margin for f3 comparisons.
inline constexpr double kF3Margin = 1e-9;

int f1(const TriangleProfile& p);
int f2(const TriangleProfile& p);

// With the profile sorted t1 >= ... >= tn, the sum over i of
// 1 / (t_i - t_{i+1} + 1/n). Requires n >= 2.
double f3(const TriangleProfile& p);

bool is_triangle_distinct(const TriangleProfile& p);

// C(r,2) >= n-1; no r-regular graph on n vertices can be triangle-distinct
// when this fails.
bool check_necessary_condition(int n, int r);

double evaluate(ObjectiveKind kind, const TriangleProfile& p);

// True when candidate is strictly better than incumbent for the given
// objective (f1 up, f2/f3 down; f3 must clear kF3Margin).
bool is_improvement(ObjectiveKind kind, double candidate, double incumbent);

std::string_view objective_name(ObjectiveKind kind);
std::optional<ObjectiveKind> objective_from_name(std::string_view name);

}  // namespace tds
