#pragma once

#include "wcurve/poly.hpp"
#include "wcurve/rational.hpp"

#include <string>
#include <vector>

namespace wcurve {

// Truncated Laurent series  sum_k c[k] t^(val+k) + O(t^(val + c.size())).
// The relative precision (number of known coefficients) of a product is the
// minimum of the operands' precisions.  Leading zero coefficients are
// stripped whenever they appear, shifting val and losing no information.
class Series {
public:
    Series() = default;
    Series(int val, std::vector<Rat> coeffs);
    static Series constant(const Rat& c, std::size_t precision);
    static Series monomial(const Rat& c, int exponent, std::size_t precision);

    int val() const { return val_; }
    std::size_t precision() const { return c_.size(); }
    int order() const { return val_ + static_cast<int>(c_.size()); }
    bool is_zero() const;  // all known coefficients vanish
    Rat lc() const { return c_.empty() ? Rat(0) : c_[0]; }
    Rat coeff_at(int exponent) const;  // coefficient of t^exponent (must be < order)
    const std::vector<Rat>& coeffs() const { return c_; }

    Series truncated(std::size_t precision) const;
    Series derivative() const;
    Series inverse() const;
    Series pow(unsigned e) const;

    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator/(const Series& a, const Series& b);
    friend Series operator*(const Rat& s, const Series& a);

    std::string str(const std::string& var = "t", std::size_t terms = 6) const;

private:
    void normalize();
    int val_ = 0;
    std::vector<Rat> c_;
};

// p(s) for a series s (Horner).
Series compose(const Poly& p, const Series& s);

// One monomial  coef * t^tpow * prod_k u_k^exps[k]  of a polynomial equation
// in the unknown series u_k.
struct SeriesTerm {
    Rat coef;
    int tpow = 0;
    std::vector<int> exps;
};
using SeriesEquation = std::vector<SeriesTerm>;

// Leading data of an unknown: u = t^val (lead + ...).
struct SeriesLead {
    int val;
    Rat lead;
};

// Order-by-order lifting of the leading terms to series of relative
// precision `precision` that satisfy every equation to that precision.
// Throws NotLeadingSolution when the leading terms leave a residual and
// SingularJet when the linearised step is not uniquely solvable.
std::vector<Series> series_newton_solve(const std::vector<SeriesEquation>& equations,
                                        const std::vector<SeriesLead>& leads,
                                        std::size_t precision);

// Evaluates an equation at the given series.
Series evaluate_equation(const SeriesEquation& eq, const std::vector<Series>& u);

}  // namespace wcurve
