#include "tds/objectives.hpp"

#include <stdexcept>

namespace tds {

int f1(const TriangleProfile& p) {
    const auto s = p.sorted_desc();
    int distinct = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (i == 0 || s[i] != s[i - 1]) ++distinct;
    return distinct;
}

int f2(const TriangleProfile& p) {
    const auto s = p.sorted_desc();
    int pairs = 0;
    std::size_t run = 1;
    for (std::size_t i = 1; i <= s.size(); ++i) {
        if (i < s.size() && s[i] == s[i - 1]) {
            ++run;
        } else {
            pairs += static_cast<int>(run * (run - 1) / 2);
            run = 1;
        }
    }
    return pairs;
}

double f3(const TriangleProfile& p) {
    const int n = p.order();
    if (n < 2) throw std::invalid_argument("f3 requires at least 2 vertices");
    const auto s = p.sorted_desc();
    const double slack = 1.0 / n;
    double total = 0.0;
    for (int i = 0; i + 1 < n; ++i) total += 1.0 / (s[i] - s[i + 1] + slack);
    return total;
}

bool is_triangle_distinct(const TriangleProfile& p) {
    const auto s = p.sorted_desc();
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i] == s[i - 1]) return false;
    return true;
}

bool check_necessary_condition(int n, int r) {
    return static_cast<long long>(r) * (r - 1) / 2 >= n - 1;
}

double evaluate(ObjectiveKind kind, const TriangleProfile& p) {
    switch (kind) {
        case ObjectiveKind::F1Maximize: return f1(p);
        case ObjectiveKind::F2Minimize: return f2(p);
        case ObjectiveKind::F3Minimize: return f3(p);
    }
    throw std::logic_error("unknown objective kind");
}

bool is_improvement(ObjectiveKind kind, double candidate, double incumbent) {
    switch (kind) {
        case ObjectiveKind::F1Maximize: return candidate > incumbent;
        case ObjectiveKind::F2Minimize: return candidate < incumbent;
        case ObjectiveKind::F3Minimize: return candidate < incumbent - kF3Margin;
    }
    throw std::logic_error("unknown objective kind");
}

std::string_view objective_name(ObjectiveKind kind) {
    switch (kind) {
        case ObjectiveKind::F1Maximize: return "f1";
        case ObjectiveKind::F2Minimize: return "f2";
        case ObjectiveKind::F3Minimize: return "f3";
    }
    return "?";
}

std::optional<ObjectiveKind> objective_from_name(std::string_view name) {
    if (name == "f1") return ObjectiveKind::F1Maximize;
    if (name == "f2") return ObjectiveKind::F2Minimize;
    if (name == "f3") return ObjectiveKind::F3Minimize;
    return std::nullopt;
}

}  // namespace tds
