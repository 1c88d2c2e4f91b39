#include "wcurve/curve.hpp"

#include "wcurve/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace wcurve {

namespace {

std::string idx3(std::size_t i, std::size_t j, std::size_t k) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

}  // namespace

AlgebraElement CurveAlgebra::basis(std::size_t i) const {
    AlgebraElement v(rank());
    v.at(i) = Poly(1);
    return v;
}

AlgebraElement CurveAlgebra::scalar(const Poly& p) const {
    AlgebraElement v(rank());
    v[0] = p;
    return v;
}

AlgebraElement CurveAlgebra::add(const AlgebraElement& u, const AlgebraElement& v) const {
    AlgebraElement w(rank());
    for (std::size_t i = 0; i < rank(); ++i) w[i] = u[i] + v[i];
    return w;
}

AlgebraElement CurveAlgebra::scale(const Poly& p, const AlgebraElement& v) const {
    AlgebraElement w(rank());
    for (std::size_t i = 0; i < rank(); ++i) w[i] = p * v[i];
    return w;
}

AlgebraElement CurveAlgebra::mult(const AlgebraElement& u, const AlgebraElement& v) const {
    const std::size_t r = rank();
    AlgebraElement w(r);
    for (std::size_t i = 0; i < r; ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < r; ++j) {
            if (v[j].is_zero()) continue;
            Poly c = u[i] * v[j];
            for (std::size_t k = 0; k < r; ++k)
                if (!table_[i][j][k].is_zero()) w[k] += c * table_[i][j][k];
        }
    }
    return w;
}

PolyMatrix CurveAlgebra::mult_matrix(const AlgebraElement& v) const {
    const std::size_t r = rank();
    PolyMatrix M(r, r);
    for (std::size_t i = 0; i < r; ++i) {
        AlgebraElement col = mult(v, basis(i));
        for (std::size_t k = 0; k < r; ++k) M(k, i) = col[k];
    }
    return M;
}

Poly CurveAlgebra::std_trace(const AlgebraElement& v) const {
    Poly t;
    for (std::size_t j = 0; j < rank(); ++j) {
        if (v[j].is_zero()) continue;
        Poly tj;
        for (std::size_t i = 0; i < rank(); ++i) tj += table_[j][i][i];
        t += v[j] * tj;
    }
    return t;
}

PolyMatrix CurveAlgebra::trace_form() const {
    const std::size_t r = rank();
    PolyMatrix T(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i; j < r; ++j) {
            T(i, j) = std_trace(mult(basis(i), basis(j)));
            T(j, i) = T(i, j);
        }
    return T;
}

i64 CurveAlgebra::sato_weight(const AlgebraElement& v) const {
    bool any = false;
    i64 best = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
        if (v[i].is_zero()) continue;
        i64 w = H_->r() * v[i].deg() + e_[i];
        best = any ? std::max(best, w) : w;
        any = true;
    }
    if (!any) throw Error("ZeroElement", "the zero element has no weight");
    return -best;
}

AlgebraElement CurveAlgebra::mu(const TensorElement& h) const {
    AlgebraElement w(rank());
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = 0; j < rank(); ++j)
            if (!h(i, j).is_zero())
                for (std::size_t k = 0; k < rank(); ++k)
                    if (!table_[i][j][k].is_zero()) w[k] += h(i, j) * table_[i][j][k];
    return w;
}

TensorElement CurveAlgebra::left_mult(const AlgebraElement& a, const TensorElement& h) const {
    return mult_matrix(a) * h;
}

TensorElement CurveAlgebra::right_mult(const AlgebraElement& a, const TensorElement& h) const {
    return h * mult_matrix(a).transpose();
}

std::vector<std::string> CurveAlgebra::basis_names() const {
    if (!names_.empty()) return names_;
    std::vector<std::string> n;
    for (std::size_t i = 0; i < rank(); ++i) n.push_back(i == 0 ? "1" : "y" + std::to_string(e_[i]));
    return n;
}

std::string CurveAlgebra::element_str(const AlgebraElement& v, const std::vector<std::string>& names0) const {
    auto names = names0.empty() ? basis_names() : names0;
    std::string s;
    for (std::size_t i = 0; i < rank(); ++i) {
        if (v[i].is_zero()) continue;
        std::string c = v[i].str();
        bool simple = v[i].deg() == 0 || (v[i].coeffs().size() >= 1 &&
                                          std::count_if(v[i].coeffs().begin(), v[i].coeffs().end(),
                                                        [](const Rat& q) { return q != 0; }) == 1);
        std::string term;
        if (i == 0)
            term = c;
        else if (v[i] == Poly(1))
            term = names[i];
        else if (v[i] == Poly(-1))
            term = "-" + names[i];
        else
            term = (simple ? c : "(" + c + ")") + "*" + names[i];
        if (!s.empty()) s += (term[0] == '-') ? " - " + term.substr(1) : " + " + term;
        else s = term;
    }
    return s.empty() ? "0" : s;
}

CurveAlgebra CurveAlgebra::from_table(const NumericalSemigroup& H, MultTable table, Params params) {
    CurveAlgebra C;
    C.H_ = std::make_shared<const NumericalSemigroup>(H);
    C.e_ = H.standard_basis().e;
    C.params_ = std::move(params);
    const std::size_t r = C.e_.size();
    const i64 rr = H.r();

    if (table.size() != r) throw Error("TableInvalid", "shape: expected " + std::to_string(r) + " rows");
    for (auto& row : table) {
        if (row.size() != r) throw Error("TableInvalid", "shape: ragged row");
        for (auto& v : row)
            if (v.size() != r) throw Error("TableInvalid", "shape: product vector of wrong length");
    }
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t k = 0; k < r; ++k) {
            Poly want = (j == k) ? Poly(1) : Poly();
            if (table[0][j][k] != want || table[j][0][k] != want)
                throw Error("TableInvalid", "unit at " + idx3(0, j, k));
        }
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < r; ++k)
                if (table[i][j][k] != table[j][i][k]) throw Error("TableInvalid", "symmetry at " + idx3(i, j, k));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            i64 w = C.e_[i] + C.e_[j];
            std::size_t ks = H.class_index(w);
            i64 p = (w - C.e_[ks]) / rr;
            for (std::size_t k = 0; k < r; ++k) {
                const Poly& a = table[i][j][k];
                if (k == ks) {
                    if (a.deg() != p)
                        throw Error("TableInvalid", "weight at " + idx3(i, j, k) + ": leading coefficient must have degree " +
                                                        std::to_string(p));
                } else if (!a.is_zero() && rr * a.deg() + C.e_[k] >= w) {
                    throw Error("TableInvalid", "weight at " + idx3(i, j, k));
                }
            }
        }
    C.table_ = std::move(table);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i; j < r; ++j)
            for (std::size_t k = 0; k < r; ++k) {
                auto lhs = C.mult(C.mult(C.basis(i), C.basis(j)), C.basis(k));
                auto rhs = C.mult(C.basis(i), C.mult(C.basis(j), C.basis(k)));
                if (lhs != rhs) throw Error("TableInvalid", "associativity at " + idx3(i, j, k));
            }
    C.gen_index_.assign(H.m(), 0);
    for (std::size_t j = 1; j < H.m(); ++j) C.gen_index_[j] = H.class_index(H.generators()[j]);
    return C;
}

CurveAlgebra CurveAlgebra::from_plane(i64 r, i64 s, const std::vector<Poly>& A) {
    if (r < 2 || s <= r) throw Error("DegreeBoundViolated", "need 2 <= r < s");
    if (std::gcd(r, s) != 1) throw Error("NotCoprime", "r and s must be coprime");
    if (static_cast<i64>(A.size()) != r) throw Error("DegreeBoundViolated", "expected r coefficients A_1..A_r");
    for (i64 i = 1; i <= r; ++i) {
        const Poly& a = A[i - 1];
        if (a.deg() > (i * s) / r)
            throw Error("DegreeBoundViolated", "deg A_" + std::to_string(i) + " exceeds " + std::to_string(i * s / r));
    }
    if (A[r - 1].deg() != s || A[r - 1].lc() != -1)
        throw Error("DegreeBoundViolated", "A_r must have degree s and leading coefficient -1");
    // With these bounds the top weighted part of f is y^r - x^s, which is
    // irreducible because gcd(r, s) = 1; hence f itself is irreducible.

    NumericalSemigroup H({r, s});
    const std::size_t n = static_cast<std::size_t>(r);
    std::vector<AlgebraElement> pw(2 * n - 1, AlgebraElement(n));
    for (std::size_t m = 0; m < n; ++m) pw[m][m] = Poly(1);
    for (std::size_t m = n; m < 2 * n - 1; ++m) {
        // y * y^{m-1}: shift, then replace y^r.
        const AlgebraElement& prev = pw[m - 1];
        AlgebraElement next(n);
        for (std::size_t i = 0; i + 1 < n; ++i) next[i + 1] += prev[i];
        const Poly& top = prev[n - 1];
        for (std::size_t l = 1; l <= n; ++l) next[n - l] -= top * A[l - 1];
        pw[m] = next;
    }
    MultTable T(n, std::vector<std::vector<Poly>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) T[i][j] = pw[i + j];

    CurveAlgebra C = from_table(H, std::move(T));
    PolyPoly f(n + 1);
    f[n] = Poly(1);
    for (std::size_t l = 1; l <= n; ++l) f[n - l] = A[l - 1];
    C.plane_f_ = f;
    C.plane_s_ = s;
    std::vector<std::string> names{"1", "y"};
    for (std::size_t i = 2; i < n; ++i) names.push_back("y^" + std::to_string(i));
    C.names_ = names;
    return C;
}

PolyPoly CurveAlgebra::minimal_poly_of_generator(std::size_t j) const {
    if (j < 2 || j > H_->m()) throw Error("IndexOutOfRange", "generator position must lie in [2, m]");
    PolyPoly f = matrix_minimal_poly(mult_matrix(basis(gen_index_[j - 1])));
    i64 r = H_->r(), rj = H_->generators()[j - 1];
    i64 g = std::gcd(r, rj);
    i64 deg = static_cast<i64>(f.size()) - 1;
    if (deg != r / g)
        throw Error("DegreeAnomaly", "minimal polynomial of y" + std::to_string(rj) + " has degree " +
                                         std::to_string(deg) + ", expected " + std::to_string(r / g));
    for (i64 i = 1; i <= deg; ++i)
        if (f[deg - i].deg() > (i * (rj / g)) / (r / g))
            throw Error("DegreeAnomaly", "coefficient A_" + std::to_string(i) + " exceeds its degree bound");
    return f;
}

TensorElement CurveAlgebra::divided_difference(std::size_t j) const {
    PolyPoly f = (j == 2 && plane_f_) ? *plane_f_ : minimal_poly_of_generator(j);
    const std::size_t n = f.size() - 1;
    AlgebraElement a = basis(gen_index_[j - 1]);
    std::vector<AlgebraElement> pw{unit()};
    for (std::size_t k = 1; k < n; ++k) pw.push_back(mult(pw.back(), a));
    const std::size_t r = rank();
    TensorElement D(r, r);
    for (std::size_t l = 0; l < n; ++l) {
        const Poly& Al = f[n - l];
        for (std::size_t i = 0; i + l + 1 <= n; ++i) {
            const auto& u = pw[i];
            const auto& v = pw[n - l - 1 - i];
            for (std::size_t p = 0; p < r; ++p) {
                if (u[p].is_zero()) continue;
                for (std::size_t q = 0; q < r; ++q)
                    if (!v[q].is_zero()) D(p, q) += Al * u[p] * v[q];
            }
        }
    }
    return D;
}

}  // namespace wcurve

namespace wcurve {

CurveAlgebra graded_algebra(const CurveAlgebra& C) {
    const std::size_t r = C.rank();
    const auto& e = C.weights();
    MultTable T(r, std::vector<std::vector<Poly>>(r, std::vector<Poly>(r)));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            std::size_t k = C.H().class_index(e[i] + e[j]);
            const Poly& a = C.table()[i][j][k];
            T[i][j][k] = Poly::monomial(a.lc(), a.deg());
        }
    return CurveAlgebra::from_table(C.H(), std::move(T), C.params());
}

}  // namespace wcurve
