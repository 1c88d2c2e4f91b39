#pragma once

#include "wcurve/rational.hpp"

#include <complex>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace wcurve {

// Dense univariate polynomial in x over Q, coefficients stored low to high.
// The zero polynomial has an empty coefficient list and degree -1.
class Poly {
public:
    Poly() = default;
    Poly(const Rat& c);
    Poly(long c) : Poly(Rat(c)) {}
    Poly(std::initializer_list<Rat> coeffs);
    explicit Poly(std::vector<Rat> coeffs);

    static Poly x();
    static Poly monomial(const Rat& c, int k);
    // (x - r1)(x - r2)...
    static Poly from_roots(const std::vector<Rat>& roots);

    int deg() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const Rat& operator[](int k) const;
    Rat coeff(int k) const;
    Rat lc() const;
    const std::vector<Rat>& coeffs() const { return c_; }

    Rat eval(const Rat& v) const;
    std::complex<double> eval(std::complex<double> v) const;
    Poly derivative() const;
    Poly monic() const;
    Poly operator-() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(unsigned e) const;
    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rat> c_;
};

// a = q*b + r with deg r < deg b.  Throws DivisionByZeroPoly for b = 0.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
// Quotient of an exact division; throws NotDivisible otherwise.
Poly exact_div(const Poly& a, const Poly& b);
bool divides(const Poly& b, const Poly& a);
// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(Poly a, Poly b);
// Square-free decomposition: returns pairs (factor, multiplicity) with
// monic square-free pairwise coprime factors of positive degree.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f);

}  // namespace wcurve
