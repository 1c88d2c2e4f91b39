#pragma once

#include "wcurve/numverify.hpp"
#include "wcurve/spec.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wcurve {

struct Report {
    std::string text;
    nlohmann::json json;
    bool ok = true;
};

struct CheckLine {
    std::string name;
    bool pass;
    std::string detail;
};

Report semigroup_report(const std::vector<i64>& generators, std::optional<i64> dh);
Report check_report(const CurveAlgebra& C);
Report trace_report(const CurveAlgebra& C, const TraceKit& K);
Report differentials_report(const CurveAlgebra& C, const TraceKit& K, std::size_t count = 0);
Report expand_report(const CurveAlgebra& C, const TraceKit& K, const Expansion& X);
Report verify_report(const CurveAlgebra& C, const TraceKit& K, const SpecOptions& opt);

// Individual batteries (shared with the acceptance driver).
std::vector<std::string> gap_theorem_failures(const CurveAlgebra& C, const TraceKit& K);
std::vector<std::string> expansion_failures(const CurveAlgebra& C, const Expansion& X);
std::vector<CheckLine> verify_battery(const CurveAlgebra& C, const TraceKit& K, const SpecOptions& opt);

std::string young_ascii(const std::vector<i64>& rows);

}  // namespace wcurve
