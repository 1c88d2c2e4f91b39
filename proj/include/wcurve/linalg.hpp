#pragma once

#include "wcurve/poly.hpp"
#include "wcurve/rational.hpp"

#include <vector>

namespace wcurve {

using RatVector = std::vector<Rat>;
using RatMatrix = std::vector<RatVector>;

// Solution set of A z = b: particular + span(nullspace).
struct LinearSolution {
    RatVector particular;
    std::vector<RatVector> nullspace;
};

// Exact Gauss-Jordan elimination.  Throws Inconsistent when A z = b has no
// solution.  A may be rectangular; b.size() must equal the row count.
LinearSolution solve_linear(const RatMatrix& A, const RatVector& b);
std::vector<RatVector> nullspace(const RatMatrix& A, std::size_t cols);

// Polynomial in a second variable with Poly coefficients, low to high.
// Used for bivariate f(x, y) (coefficients in y) and for minimal polynomials.
using PolyPoly = std::vector<Poly>;

// Element of Q(x), kept reduced with a monic denominator.
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(Poly num) : num_(std::move(num)), den_(1) {}
    RatFunc(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.deg() == 0; }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    Poly num_, den_;
};

class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

    static PolyMatrix identity(std::size_t n);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    Poly& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const Poly& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    PolyMatrix transpose() const;
    Poly trace() const;
    bool is_zero() const;
    int max_degree() const;

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator*(const Poly& s, const PolyMatrix& m);
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }

    std::vector<Poly> column(std::size_t j) const;

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<Poly> a_;
};

// Fraction-free (Bareiss) determinant.
Poly determinant(const PolyMatrix& m);
PolyMatrix adjugate(const PolyMatrix& m);
// det(T*I - M) via Faddeev-LeVerrier, coefficients in T low to high.
PolyPoly characteristic_poly(const PolyMatrix& m);
// Monic minimal polynomial over Q(x) by Krylov iteration on the powers of M.
PolyPoly matrix_minimal_poly(const PolyMatrix& m);
// Evaluate p(T) at T = M.
PolyMatrix evaluate_at_matrix(const PolyPoly& p, const PolyMatrix& m);
// Remainder of a by the monic b, both in T with Poly coefficients.
PolyPoly polypoly_rem_monic(const PolyPoly& a, const PolyPoly& b);

// Sylvester resultant in the second variable.
Poly resultant_y(const PolyPoly& f, const PolyPoly& g);
PolyPoly derivative_y(const PolyPoly& f);

}  // namespace wcurve
