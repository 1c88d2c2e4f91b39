#pragma once

#include "wcurve/curve.hpp"

#include <complex>
#include <random>
#include <vector>

namespace wcurve {

using cplx = std::complex<double>;

struct FiberPoint {
    cplx x;
    std::vector<cplx> coords;  // y_{r_2}, ..., y_{r_m}
    std::vector<cplx> basis;   // values of y_{e_0} = 1, ..., y_{e_{r-1}}
};

struct NumericOptions {
    double tol = 1e-8;
    double separation = 1e-4;  // minimal relative distance between fiber points
};

// The r points over x0, from a joint eigendecomposition of the multiplication
// matrices evaluated at x0.  Throws NearBranchPoint when two points nearly
// coincide and ToleranceExceeded when the eigenvalues disagree with the roots
// of the minimal polynomial of the second generator.
std::vector<FiberPoint> fiber(const CurveAlgebra& C, cplx x0, const NumericOptions& opt = {});

struct IndicatorReport {
    std::vector<std::vector<cplx>> matrix;  // htilde(P, Q) / hX(P)
    double max_error = 0;
};
IndicatorReport indicator_matrix(const CurveAlgebra& C, const TraceKit& K, cplx x0, const NumericOptions& opt = {});
// As above, throwing ToleranceExceeded when max_error >= tol.
IndicatorReport indicator_test(const CurveAlgebra& C, const TraceKit& K, cplx x0, const NumericOptions& opt = {});

struct TraceReport {
    cplx fiber_sum;
    cplx exact;
    double rel_error = 0;
};
TraceReport trace_consistency(const CurveAlgebra& C, cplx x0, const AlgebraElement& v, const NumericOptions& opt = {});

struct BranchCluster {
    cplx x;
    int multiplicity;  // multiplicity as a root of det T
    int distinct_points;
    int deficiency;    // r - distinct_points
};
struct BranchReport {
    int det_degree = 0;
    int expected_degree = 0;  // 2g + r - 1
    std::vector<BranchCluster> clusters;
    int total_deficiency = 0;
    bool consistent = false;  // total_deficiency == det_degree == expected
};
BranchReport branch_report(const CurveAlgebra& C, const NumericOptions& opt = {});

// Complex roots of a univariate polynomial (companion-matrix eigenvalues).
std::vector<cplx> numeric_roots(const Poly& p);

// Random rational x0 (small height) whose fiber is well separated.
std::vector<Rat> generic_points(const CurveAlgebra& C, std::size_t count, std::mt19937_64& rng,
                                const NumericOptions& opt = {});

}  // namespace wcurve
