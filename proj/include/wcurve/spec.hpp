#pragma once

#include "wcurve/curve.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wcurve {

struct SpecOptions {
    std::optional<i64> dh_override;
    std::optional<std::size_t> series_order;
    double tolerance = 1e-8;
    std::uint64_t seed = 1;

    bool operator==(const SpecOptions&) const = default;
};

// Parsed curve-spec file.  Exactly one of the kind-specific blocks is used.
struct CurveSpec {
    std::vector<i64> generators;  // may be empty for plane/fixture kinds
    std::string kind;             // "fixture" | "plane" | "table"

    std::string fixture_name;
    Params params;

    i64 plane_r = 0, plane_s = 0;
    std::vector<Poly> plane_A;  // A_1 .. A_r

    std::vector<std::string> basis_names;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<Poly>> products;  // i <= j, both >= 1

    SpecOptions options;

    bool operator==(const CurveSpec&) const = default;
};

// Polynomial in x with rational coefficients: "3*x^2 - 1/2*x + 0.25",
// "(x-1)*(x-2)^2".
Poly parse_poly(const std::string& text);

CurveSpec parse_spec(const std::string& text);
CurveSpec load_spec(const std::string& path);
std::string emit_spec(const CurveSpec& spec);
CurveSpec fixture_spec(const std::string& name);

CurveAlgebra build_curve(const CurveSpec& spec);

}  // namespace wcurve
