#pragma once

#include "wcurve/linalg.hpp"
#include "wcurve/monomial.hpp"
#include "wcurve/poly.hpp"
#include "wcurve/semigroup.hpp"
#include "wcurve/series.hpp"

#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace wcurve {

// Coordinates over the basis y_{e_0} = 1, y_{e_1}, ..., y_{e_{r-1}}.
using AlgebraElement = std::vector<Poly>;
// Entry (i, j) is the coefficient of y_{e_i} (x) y_{e_j}.
using TensorElement = PolyMatrix;
// table[i][j][k] = a_{ijk}(x) with y_i y_j = sum_k a_{ijk} y_k.
using MultTable = std::vector<std::vector<std::vector<Poly>>>;
using Params = std::map<std::string, Rat>;

class CurveAlgebra {
public:
    // f = y^r + A[0] y^{r-1} + ... + A[r-1]; A[r-1] has degree s and leading
    // coefficient -1.
    static CurveAlgebra from_plane(i64 r, i64 s, const std::vector<Poly>& A);
    // Throws TableInvalid naming the first failing check and indices.
    static CurveAlgebra from_table(const NumericalSemigroup& H, MultTable table, Params params = {});

    const NumericalSemigroup& H() const { return *H_; }
    std::size_t rank() const { return e_.size(); }
    const std::vector<i64>& weights() const { return e_; }
    const MultTable& table() const { return table_; }
    const Params& params() const { return params_; }
    // Basis index of each generator r_j, j = 1..m (position 0 is r itself -> unused).
    std::size_t gen_index(std::size_t j) const { return gen_index_.at(j); }
    const std::optional<PolyPoly>& plane_equation() const { return plane_f_; }
    i64 plane_s() const { return plane_s_; }

    AlgebraElement zero() const { return AlgebraElement(rank()); }
    AlgebraElement unit() const { return basis(0); }
    AlgebraElement basis(std::size_t i) const;
    AlgebraElement scalar(const Poly& p) const;

    AlgebraElement mult(const AlgebraElement& u, const AlgebraElement& v) const;
    AlgebraElement add(const AlgebraElement& u, const AlgebraElement& v) const;
    AlgebraElement scale(const Poly& p, const AlgebraElement& v) const;
    PolyMatrix mult_matrix(const AlgebraElement& v) const;
    Poly std_trace(const AlgebraElement& v) const;
    PolyMatrix trace_form() const;
    // Throws on the zero element.
    i64 sato_weight(const AlgebraElement& v) const;

    // j is the 1-based generator position, 2 <= j <= m.
    PolyPoly minimal_poly_of_generator(std::size_t j) const;
    TensorElement divided_difference(std::size_t j) const;

    // mu(h) = sum_{ij} h_ij y_i y_j, and the actions of a (x) 1 and 1 (x) a.
    AlgebraElement mu(const TensorElement& h) const;
    TensorElement left_mult(const AlgebraElement& a, const TensorElement& h) const;
    TensorElement right_mult(const AlgebraElement& a, const TensorElement& h) const;

    std::string element_str(const AlgebraElement& v, const std::vector<std::string>& names = {}) const;
    std::vector<std::string> basis_names() const;
    void set_basis_names(std::vector<std::string> names) { names_ = std::move(names); }

private:
    CurveAlgebra() = default;
    std::shared_ptr<const NumericalSemigroup> H_;
    std::vector<i64> e_;
    MultTable table_;
    Params params_;
    std::vector<std::size_t> gen_index_;
    std::optional<PolyPoly> plane_f_;
    i64 plane_s_ = 0;
    std::vector<std::string> names_;
};

// Built-in fixtures: "trigonal378", "pentagonal", "sextic".
std::vector<std::string> fixture_names();
Params fixture_default_params(const std::string& name);
Params fixture_random_params(const std::string& name, std::mt19937_64& rng);
CurveAlgebra fixture(const std::string& name, const Params& params);
// Keeps only the leading term of every product (the monomial degeneration).
CurveAlgebra graded_algebra(const CurveAlgebra& C);
// Random plane curve y^r + A_1 y^{r-1} + ... + A_r with the degree bounds.
CurveAlgebra random_plane_curve(i64 r, i64 s, std::mt19937_64& rng);
Rat random_rational(std::mt19937_64& rng, long num_range, long den_max);

struct TraceKit {
    i64 d_h = 0;
    TensorElement htilde;
    AlgebraElement hX;
    std::vector<AlgebraElement> upsilon;
    std::vector<AlgebraElement> yhat;
    i64 kX = 0;
    std::size_t ell = 0;
    std::vector<i64> delta, ehat;
    std::vector<i64> tried_degrees;
    // Cached data of mult_matrix(hX) for exact division.
    PolyMatrix hX_adj;
    Poly hX_det;
};

// Minimal-weight generator of the annihilator of ker(mu).  With dh set, only
// that degree is tried.  Throws NoSolutionBelowCap / AmbiguousTraceElement.
TraceKit annihilator_solve(const CurveAlgebra& C, std::optional<i64> dh = std::nullopt);

// std_trace(num / den) when it is a polynomial.
std::optional<Poly> trace_of_quotient(const CurveAlgebra& C, const AlgebraElement& num, const AlgebraElement& den);
// Throws NonPolynomialTrace when the value is not a polynomial.
Poly tau_htilde(const CurveAlgebra& C, const TraceKit& K, const AlgebraElement& v);
// Matrix [tau(Upsilon_i y_j)].
RatMatrix duality_matrix(const CurveAlgebra& C, const TraceKit& K, const std::vector<AlgebraElement>& family);
bool in_complementary_module(const CurveAlgebra& C, const AlgebraElement& num, const AlgebraElement& den);

struct Fraction {
    AlgebraElement numerator;
    AlgebraElement denominator;
};
std::vector<Fraction> complementary_module(const CurveAlgebra& C, const TraceKit& K);

enum class YhatMode { Upsilon, Truncated };
std::vector<AlgebraElement> yhat_family(const CurveAlgebra& C, const TraceKit& K, YhatMode mode);

struct InvariantsReport {
    i64 d_h, kX, c_hat, c_X, genus, conductor;
    bool symmetric;
    std::vector<std::string> failures;
};
InvariantsReport invariants_report(const CurveAlgebra& C, const TraceKit& K);

// Post-solve checks of every TraceKit invariant; returns failure messages.
std::vector<std::string> verify_trace_kit(const CurveAlgebra& C, const TraceKit& K);

struct DifferentialEntry {
    i64 k;            // power of x
    std::size_t i;    // dual index
    i64 weight;       // ehat_i + k r
    i64 gap;          // e_i - (k+1) r = wt(nu) + 1
    AlgebraElement numerator;  // x^k yhat_i
};
struct DifferentialBasis {
    std::vector<DifferentialEntry> entries;
    std::vector<i64> gap_weights;
    std::size_t holomorphic_count = 0;
};
DifferentialBasis differential_basis(const CurveAlgebra& C, const TraceKit& K, std::size_t count);

struct DifferentialSeries {
    DifferentialEntry entry;
    Series raw;         // coefficient of dt in x^k yhat_i dx / hX
    Rat raw_lead;
    Series normalized;  // raw / raw_lead
    int expected_exponent;
    bool exponent_ok;
};
struct Expansion {
    i64 s, i_s, i_r;
    std::size_t precision;
    Series x;
    std::vector<Series> basis;  // y_{e_0} = 1, ...
    std::vector<Rat> leading;   // leading coefficients of x, y_1, ..., y_{r-1}
    std::vector<DifferentialSeries> nu;
    bool relations_ok = false;
    bool gauge_ok = false;
};
// precision = 0 selects conductor + 2g + r.
Expansion expand_at_infinity(const CurveAlgebra& C, const TraceKit& K, std::size_t precision = 0);

}  // namespace wcurve
