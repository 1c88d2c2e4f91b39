#include "wcurve/linalg.hpp"

#include "wcurve/error.hpp"

#include <utility>

namespace wcurve {

LinearSolution solve_linear(const RatMatrix& A, const RatVector& b) {
    const std::size_t m = A.size();
    const std::size_t n = m ? A[0].size() : 0;
    if (b.size() != m) throw Error("ShapeMismatch", "right-hand side length differs from row count");

    RatMatrix M = A;
    RatVector rhs = b;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t p = row;
        while (p < m && M[p][col] == 0) ++p;
        if (p == m) continue;
        std::swap(M[p], M[row]);
        std::swap(rhs[p], rhs[row]);
        Rat inv = 1 / M[row][col];
        for (std::size_t j = col; j < n; ++j) M[row][j] *= inv;
        rhs[row] *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || M[i][col] == 0) continue;
            Rat f = M[i][col];
            for (std::size_t j = col; j < n; ++j)
                if (M[row][j] != 0) M[i][j] -= f * M[row][j];
            rhs[i] -= f * rhs[row];
        }
        pivots.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < m; ++i)
        if (rhs[i] != 0) throw Error("Inconsistent", "linear system has no solution");

    LinearSolution sol;
    sol.particular.assign(n, Rat(0));
    for (std::size_t k = 0; k < pivots.size(); ++k) sol.particular[pivots[k]] = rhs[k];

    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        RatVector v(n, Rat(0));
        v[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -M[k][free];
        sol.nullspace.push_back(std::move(v));
    }
    return sol;
}

std::vector<RatVector> nullspace(const RatMatrix& A, std::size_t cols) {
    if (A.empty()) {
        std::vector<RatVector> out;
        for (std::size_t j = 0; j < cols; ++j) {
            RatVector v(cols, Rat(0));
            v[j] = 1;
            out.push_back(v);
        }
        return out;
    }
    return solve_linear(A, RatVector(A.size(), Rat(0))).nullspace;
}

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc(Poly num, Poly den) {
    if (den.is_zero()) throw Error("DivisionByZeroPoly", "rational function with zero denominator");
    Poly g = poly_gcd(num, den);
    if (g.deg() > 0) {
        num = exact_div(num, g);
        den = exact_div(den, g);
    }
    Rat l = den.lc();
    num_ = Rat(1 / l) * num;
    den_ = Rat(1 / l) * den;
    if (num_.is_zero()) den_ = Poly(1);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ - b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw Error("DivisionByZeroPoly", "division by zero rational function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

// ------------------------------------------------------------- PolyMatrix

PolyMatrix PolyMatrix::identity(std::size_t n) {
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly(1);
    return m;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Poly PolyMatrix::trace() const {
    Poly t;
    for (std::size_t i = 0; i < std::min(r_, c_); ++i) t += (*this)(i, i);
    return t;
}

bool PolyMatrix::is_zero() const {
    for (const auto& p : a_)
        if (!p.is_zero()) return false;
    return true;
}

int PolyMatrix::max_degree() const {
    int d = -1;
    for (const auto& p : a_) d = std::max(d, p.deg());
    return d;
}

std::vector<Poly> PolyMatrix::column(std::size_t j) const {
    std::vector<Poly> v(r_);
    for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.c_ != b.r_) throw Error("ShapeMismatch", "matrix product of incompatible shapes");
    PolyMatrix out(a.r_, b.c_);
    for (std::size_t i = 0; i < a.r_; ++i)
        for (std::size_t k = 0; k < a.c_; ++k) {
            const Poly& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.c_; ++j)
                if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
        }
    return out;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
    PolyMatrix out = a;
    for (std::size_t k = 0; k < out.a_.size(); ++k) out.a_[k] += b.a_[k];
    return out;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
    PolyMatrix out = a;
    for (std::size_t k = 0; k < out.a_.size(); ++k) out.a_[k] -= b.a_[k];
    return out;
}

PolyMatrix operator*(const Poly& s, const PolyMatrix& m) {
    PolyMatrix out = m;
    for (auto& p : out.a_) p = s * p;
    return out;
}

Poly determinant(const PolyMatrix& m0) {
    const std::size_t n = m0.rows();
    if (n != m0.cols()) throw Error("ShapeMismatch", "determinant of a non-square matrix");
    if (n == 0) return Poly(1);
    PolyMatrix m = m0;
    Poly prev(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t p = k;
        while (p < n && m(p, k).is_zero()) ++p;
        if (p == n) return Poly();
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
            m(i, k) = Poly();
        }
        prev = m(k, k);
    }
    Poly d = m(n - 1, n - 1);
    return negate ? -d : d;
}

PolyMatrix adjugate(const PolyMatrix& m) {
    const std::size_t n = m.rows();
    PolyMatrix adj(n, n);
    if (n == 1) {
        adj(0, 0) = Poly(1);
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            PolyMatrix minor(n - 1, n - 1);
            for (std::size_t a = 0, ra = 0; a < n; ++a) {
                if (a == i) continue;
                for (std::size_t b = 0, cb = 0; b < n; ++b) {
                    if (b == j) continue;
                    minor(ra, cb++) = m(a, b);
                }
                ++ra;
            }
            Poly c = determinant(minor);
            adj(j, i) = ((i + j) % 2) ? -c : c;
        }
    return adj;
}

PolyPoly characteristic_poly(const PolyMatrix& a) {
    const std::size_t n = a.rows();
    PolyPoly c(n + 1);
    c[n] = Poly(1);
    PolyMatrix mk(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = a * mk;
        for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
        Poly t = (a * mk).trace();
        c[n - k] = Rat(-1, static_cast<long>(k)) * t;
    }
    return c;
}

PolyPoly matrix_minimal_poly(const PolyMatrix& m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw Error("ShapeMismatch", "minimal polynomial of a non-square matrix");
    const std::size_t len = n * n;

    struct Row {
        std::vector<RatFunc> v;      // reduced vector, pivot entry normalised to 1
        std::size_t pivot;
        std::vector<RatFunc> combo;  // v = sum combo[i] * vec(M^i)
    };
    std::vector<Row> basis;
    PolyMatrix power = PolyMatrix::identity(n);

    for (std::size_t k = 0; k <= n; ++k) {
        std::vector<RatFunc> v(len);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) v[i * n + j] = RatFunc(power(i, j));
        std::vector<RatFunc> combo(k + 1);
        combo[k] = RatFunc(Poly(1));

        for (const Row& row : basis) {
            RatFunc f = v[row.pivot];
            if (f.is_zero()) continue;
            for (std::size_t t = 0; t < len; ++t)
                if (!row.v[t].is_zero()) v[t] = v[t] - f * row.v[t];
            for (std::size_t t = 0; t < row.combo.size(); ++t)
                if (!row.combo[t].is_zero()) combo[t] = combo[t] - f * row.combo[t];
        }

        std::size_t piv = len;
        for (std::size_t t = 0; t < len; ++t)
            if (!v[t].is_zero()) {
                piv = t;
                break;
            }
        if (piv == len) {
            // combo is a monic dependency sum combo[i] M^i = 0 with combo[k] = 1.
            PolyPoly out(k + 1);
            for (std::size_t t = 0; t <= k; ++t) {
                if (!combo[t].is_poly())
                    throw Error("NonPolynomialCoefficient", "minimal polynomial has non-polynomial coefficients");
                out[t] = Rat(1 / combo[t].den().lc()) * combo[t].num();
            }
            return out;
        }
        RatFunc inv = RatFunc(Poly(1)) / v[piv];
        for (auto& e : v) e = e * inv;
        for (auto& e : combo) e = e * inv;
        basis.push_back({std::move(v), piv, std::move(combo)});
        power = power * m;
    }
    throw Error("Internal", "Krylov iteration exceeded the matrix dimension");
}

PolyMatrix evaluate_at_matrix(const PolyPoly& p, const PolyMatrix& m) {
    const std::size_t n = m.rows();
    PolyMatrix acc(n, n);
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        acc = acc * m;
        for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
    }
    return acc;
}

PolyPoly polypoly_rem_monic(const PolyPoly& a, const PolyPoly& b) {
    if (b.empty() || b.back() != Poly(1)) throw Error("NotMonic", "divisor must be monic");
    PolyPoly rem = a;
    const std::size_t db = b.size() - 1;
    while (rem.size() > db) {
        Poly f = rem.back();
        std::size_t shift = rem.size() - 1 - db;
        for (std::size_t j = 0; j <= db; ++j) rem[shift + j] -= f * b[j];
        rem.pop_back();
    }
    while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
    return rem;
}

PolyPoly derivative_y(const PolyPoly& f) {
    PolyPoly d;
    for (std::size_t k = 1; k < f.size(); ++k) d.push_back(Rat(static_cast<long>(k)) * f[k]);
    return d;
}

Poly resultant_y(const PolyPoly& f0, const PolyPoly& g0) {
    PolyPoly f = f0, g = g0;
    while (!f.empty() && f.back().is_zero()) f.pop_back();
    while (!g.empty() && g.back().is_zero()) g.pop_back();
    if (f.empty() || g.empty()) throw Error("ZeroPolynomial", "resultant of a zero polynomial");
    const std::size_t m = f.size() - 1, n = g.size() - 1;
    const std::size_t N = m + n;
    if (N == 0) return Poly(1);
    PolyMatrix S(N, N);
    // Rows hold coefficients from the highest power of y down.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= m; ++j) S(i, i + j) = f[m - j];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= n; ++j) S(n + i, i + j) = g[n - j];
    return determinant(S);
}

}  // namespace wcurve
