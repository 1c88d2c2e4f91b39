#include "wcurve/curve.hpp"

#include "wcurve/error.hpp"

#include <map>
#include <tuple>

namespace wcurve {

namespace {

struct Unknown {
    std::size_t i, j;
    int p;
};

// Nullspace of {h : y_g h = h y_g^T for every generator g} with per-entry
// degree bounds deg h_ij <= floor((d - e_i - e_j) / r).
std::vector<TensorElement> annihilators_at(const CurveAlgebra& C, i64 d, const std::vector<PolyMatrix>& gens) {
    const std::size_t r = C.rank();
    const auto& e = C.weights();
    const i64 rr = C.H().r();
    std::vector<Unknown> unk;
    std::map<std::tuple<std::size_t, std::size_t, int>, std::size_t> col;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            i64 room = d - e[i] - e[j];
            if (room < 0) continue;
            for (int p = 0; p <= room / rr; ++p) {
                col[{i, j, p}] = unk.size();
                unk.push_back({i, j, p});
            }
        }
    if (unk.empty()) return {};

    std::map<std::tuple<std::size_t, std::size_t, std::size_t, int>, std::size_t> rowidx;
    std::vector<std::vector<std::pair<std::size_t, Rat>>> rows;
    auto add = [&](std::size_t g, std::size_t k, std::size_t l, int deg, std::size_t c, const Rat& v) {
        auto key = std::make_tuple(g, k, l, deg);
        auto it = rowidx.find(key);
        if (it == rowidx.end()) {
            it = rowidx.emplace(key, rows.size()).first;
            rows.emplace_back();
        }
        rows[it->second].emplace_back(c, v);
    };
    for (std::size_t g = 0; g < gens.size(); ++g) {
        const PolyMatrix& A = gens[g];
        for (std::size_t c = 0; c < unk.size(); ++c) {
            const auto [i, j, p] = unk[c];
            // (A H)_{k j} gets A_{k i} x^p ; (H A^T)_{i l} gets A_{l j} x^p.
            for (std::size_t k = 0; k < r; ++k) {
                const Poly& a = A(k, i);
                for (int q = 0; q <= a.deg(); ++q)
                    if (a[q] != 0) add(g, k, j, p + q, c, a[q]);
            }
            for (std::size_t l = 0; l < r; ++l) {
                const Poly& a = A(l, j);
                for (int q = 0; q <= a.deg(); ++q)
                    if (a[q] != 0) add(g, i, l, p + q, c, -a[q]);
            }
        }
    }
    RatMatrix M(rows.size(), RatVector(unk.size(), Rat(0)));
    for (std::size_t rI = 0; rI < rows.size(); ++rI)
        for (const auto& [c, v] : rows[rI]) M[rI][c] += v;

    std::vector<TensorElement> out;
    for (const auto& v : nullspace(M, unk.size())) {
        TensorElement h(r, r);
        for (std::size_t c = 0; c < unk.size(); ++c)
            if (v[c] != 0) h(unk[c].i, unk[c].j) += Poly::monomial(v[c], unk[c].p);
        out.push_back(h);
    }
    return out;
}

}  // namespace

TraceKit annihilator_solve(const CurveAlgebra& C, std::optional<i64> dh) {
    const auto& H = C.H();
    std::vector<PolyMatrix> gens;
    for (std::size_t j = 1; j < H.m(); ++j) gens.push_back(C.mult_matrix(C.basis(C.gen_index(j))));

    std::vector<i64> candidates;
    if (dh) {
        if (!H.is_valid_trace_degree(*dh))
            throw Error("InvalidTraceDegree", std::to_string(*dh) + " is not a valid trace degree");
        candidates.push_back(*dh);
    } else {
        i64 lo = H.minimal_trace_degree();
        i64 cap = lo + H.r() * (H.r() + 2);
        for (i64 d = lo; d <= cap; ++d)
            if (H.is_valid_trace_degree(d)) candidates.push_back(d);
    }

    TraceKit K;
    std::optional<TensorElement> found;
    for (i64 d : candidates) {
        K.tried_degrees.push_back(d);
        auto sols = annihilators_at(C, d, gens);
        if (sols.empty()) continue;
        if (sols.size() > 1)
            throw Error("AmbiguousTraceElement", "annihilator space at degree " + std::to_string(d) + " has dimension " +
                                                     std::to_string(sols.size()));
        K.d_h = d;
        found = sols[0];
        break;
    }
    if (!found) throw Error("NoSolutionBelowCap", "no annihilator found up to the search cap");

    MonomialRing R(H);
    auto T = R.trace_monomials(K.d_h);
    K.ell = T.ell;
    K.ehat = T.ehat;
    K.delta = T.delta;

    Rat lead = (*found)(K.ell, 0).lc();
    if (lead == 0)
        throw Error("AmbiguousTraceElement", "leading coefficient of the (ell, 0) entry vanishes");
    K.htilde = Poly(Rat(1 / lead)) * *found;

    const std::size_t r = C.rank();
    K.hX = C.mu(K.htilde);
    for (std::size_t i = 0; i < r; ++i) K.upsilon.push_back(K.htilde.column(i));
    K.yhat = K.upsilon;
    K.kX = K.d_h - 2 * H.genus() - H.r() + 1;

    PolyMatrix M = C.mult_matrix(K.hX);
    K.hX_det = determinant(M);
    K.hX_adj = adjugate(M);
    return K;
}

std::optional<Poly> trace_of_quotient(const CurveAlgebra& C, const AlgebraElement& num, const AlgebraElement& den) {
    PolyMatrix M = C.mult_matrix(den);
    Poly det = determinant(M);
    if (det.is_zero()) throw Error("DivisionByZeroPoly", "denominator is a zero divisor");
    PolyMatrix adj = adjugate(M);
    AlgebraElement w(C.rank());
    for (std::size_t i = 0; i < C.rank(); ++i)
        for (std::size_t j = 0; j < C.rank(); ++j) w[i] += adj(i, j) * num[j];
    auto [q, rem] = poly_divmod(C.std_trace(w), det);
    if (!rem.is_zero()) return std::nullopt;
    return q;
}

Poly tau_htilde(const CurveAlgebra& C, const TraceKit& K, const AlgebraElement& v) {
    AlgebraElement w(C.rank());
    for (std::size_t i = 0; i < C.rank(); ++i)
        for (std::size_t j = 0; j < C.rank(); ++j) w[i] += K.hX_adj(i, j) * v[j];
    auto [q, rem] = poly_divmod(C.std_trace(w), K.hX_det);
    if (!rem.is_zero()) throw Error("NonPolynomialTrace", "tau_htilde does not land in Q[x]");
    return q;
}

RatMatrix duality_matrix(const CurveAlgebra& C, const TraceKit& K, const std::vector<AlgebraElement>& family) {
    const std::size_t r = C.rank();
    RatMatrix D(r, RatVector(r, Rat(0)));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            Poly t = tau_htilde(C, K, C.mult(family[i], C.basis(j)));
            if (t.deg() > 0) throw Error("IdentityViolation", "duality pairing is not constant");
            D[i][j] = t.coeff(0);
        }
    return D;
}

bool in_complementary_module(const CurveAlgebra& C, const AlgebraElement& num, const AlgebraElement& den) {
    for (std::size_t j = 0; j < C.rank(); ++j)
        if (!trace_of_quotient(C, C.mult(num, C.basis(j)), den)) return false;
    return true;
}

std::vector<Fraction> complementary_module(const CurveAlgebra& C, const TraceKit& K) {
    std::vector<Fraction> out;
    if (C.H().is_symmetric()) {
        if (!in_complementary_module(C, C.unit(), K.hX))
            throw Error("IdentityViolation", "1/h_X is not in the complementary module of a symmetric curve");
        out.push_back({C.unit(), K.hX});
        return out;
    }
    for (std::size_t i = 1; i < C.rank(); ++i) out.push_back({K.yhat[i], K.hX});
    return out;
}

namespace {

// Hermite-style triangular basis of the Q[x]-module spanned by `vectors`
// (each of length n), computed by Euclidean row reduction.
std::vector<AlgebraElement> module_basis(std::vector<AlgebraElement> vectors, std::size_t n) {
    std::vector<AlgebraElement> basis;
    for (std::size_t col = 0; col < n; ++col) {
        std::vector<AlgebraElement> with, without;
        for (auto& v : vectors) (v[col].is_zero() ? without : with).push_back(std::move(v));
        while (with.size() > 1) {
            std::size_t best = 0;
            for (std::size_t t = 1; t < with.size(); ++t)
                if (with[t][col].deg() < with[best][col].deg()) best = t;
            std::swap(with[0], with[best]);
            std::vector<AlgebraElement> next{with[0]};
            for (std::size_t t = 1; t < with.size(); ++t) {
                Poly q = poly_divmod(with[t][col], with[0][col]).first;
                AlgebraElement v = with[t];
                for (std::size_t c = 0; c < n; ++c) v[c] -= q * with[0][c];
                (v[col].is_zero() ? without : next).push_back(std::move(v));
            }
            with = std::move(next);
        }
        if (!with.empty()) basis.push_back(with[0]);
        vectors = std::move(without);
    }
    return basis;
}

Poly module_index(const std::vector<AlgebraElement>& vectors, std::size_t n) {
    auto b = module_basis(vectors, n);
    if (b.size() < n) return Poly();
    Poly d(1);
    for (std::size_t c = 0; c < n; ++c) d *= b[c][c];
    return d.monic();
}

}  // namespace

std::vector<AlgebraElement> yhat_family(const CurveAlgebra& C, const TraceKit& K, YhatMode mode) {
    if (mode == YhatMode::Upsilon) return K.upsilon;
    const std::size_t r = C.rank();
    const i64 rr = C.H().r();
    Poly target = module_index(K.upsilon, r);

    auto valid = [&](const std::vector<AlgebraElement>& fam) {
        try {
            for (std::size_t i = 0; i < r; ++i)
                if (tau_htilde(C, K, fam[i]) != Poly(i == 0 ? 1 : 0)) return false;
        } catch (const Error&) {
            return false;
        }
        if (module_index(fam, r) != target) return false;
        // Every member must lie in the span of Upsilon, and y_j * yhat_i (i >= 1)
        // must generate the same module.
        std::vector<AlgebraElement> all = K.upsilon;
        for (const auto& v : fam) all.push_back(v);
        if (module_index(all, r) != target) return false;
        std::vector<AlgebraElement> gen;
        for (std::size_t i = 1; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) gen.push_back(C.mult(C.basis(j), fam[i]));
        return module_index(gen, r) == target;
    };

    std::vector<AlgebraElement> fam = K.upsilon;
    for (std::size_t i = 0; i < r; ++i) {
        // Terms x^q y_k ordered by increasing weight, excluding the leading one.
        std::vector<std::tuple<i64, std::size_t, int>> terms;
        i64 lead = -C.sato_weight(fam[i]);
        for (std::size_t k = 0; k < r; ++k)
            for (int q = 0; q <= fam[i][k].deg(); ++q)
                if (fam[i][k][q] != 0) {
                    i64 w = rr * q + C.weights()[k];
                    if (w < lead) terms.emplace_back(w, k, q);
                }
        std::sort(terms.begin(), terms.end());
        for (const auto& [w, k, q] : terms) {
            auto trial = fam;
            trial[i][k] -= Poly::monomial(fam[i][k][q], q);
            if (valid(trial)) fam = std::move(trial);
        }
    }
    return fam;
}

InvariantsReport invariants_report(const CurveAlgebra& C, const TraceKit& K) {
    const auto& H = C.H();
    InvariantsReport R;
    R.d_h = K.d_h;
    R.genus = H.genus();
    R.conductor = H.conductor();
    R.symmetric = H.is_symmetric();
    R.kX = K.kX;
    // Conductor of {ehat_i + k r}: n is missing iff n < ehat of its class.
    i64 c_of_hat = 0;
    for (i64 eh : K.ehat) c_of_hat = std::max(c_of_hat, eh - H.r() + 1);
    R.c_hat = c_of_hat - K.kX;
    R.c_X = C.weights().back() - H.r() + 1;

    if (K.kX != K.d_h - 2 * R.genus - H.r() + 1) R.failures.push_back("kX != d_h - 2g - r + 1");
    if (K.kX < 0) R.failures.push_back("kX < 0");
    if (R.c_hat != 2 * R.genus) R.failures.push_back("c_hat != 2g");
    if (R.c_X != R.conductor) R.failures.push_back("c_X = e_{r-1} - r + 1 differs from the conductor");
    if ((K.kX == 0) != R.symmetric) R.failures.push_back("kX = 0 disagrees with symmetry");
    return R;
}

std::vector<std::string> verify_trace_kit(const CurveAlgebra& C, const TraceKit& K) {
    std::vector<std::string> bad;
    const std::size_t r = C.rank();
    const auto& H = C.H();

    std::vector<AlgebraElement> acts{C.scalar(Poly::x())};
    for (std::size_t i = 1; i < r; ++i) acts.push_back(C.basis(i));
    for (const auto& a : acts)
        if (C.left_mult(a, K.htilde) != C.right_mult(a, K.htilde)) bad.push_back("annihilator identity");
    if (K.htilde != K.htilde.transpose()) bad.push_back("htilde is not symmetric");

    AlgebraElement diag = C.zero();
    for (std::size_t i = 0; i < r; ++i) diag = C.add(diag, C.mult(K.upsilon[i], C.basis(i)));
    if (diag != K.hX) bad.push_back("mu-diagonal");
    if (C.sato_weight(K.hX) != -K.d_h) bad.push_back("wt(hX) != -d_h");

    try {
        RatMatrix D = duality_matrix(C, K, K.upsilon);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                if (D[i][j] != Rat(i == j ? 1 : 0)) bad.push_back("duality matrix is not the identity");
    } catch (const Error& e) {
        bad.push_back(std::string("duality: ") + e.what());
    }

    if (K.kX < 0) bad.push_back("kX < 0");
    if ((K.kX == 0) != H.is_symmetric()) bad.push_back("kX = 0 disagrees with symmetry");

    for (std::size_t i = 0; i < r; ++i) {
        if (-C.sato_weight(K.upsilon[i]) != K.ehat[i]) {
            bad.push_back("-wt(Upsilon_" + std::to_string(i) + ") != ehat");
            continue;
        }
        std::size_t li = H.class_index(H.e_star(K.ell, i));
        if (K.upsilon[i][li].deg() != K.delta[i])
            bad.push_back("leading term of Upsilon_" + std::to_string(i) + " does not have degree delta");
    }
    if (K.upsilon[0][H.class_index(H.e_star(K.ell, 0))].lc() != 1) bad.push_back("delta_0 is not monic");

    // The top-weight part must annihilate the diagonal of the graded algebra
    // (the table with only its leading terms kept).
    TensorElement top(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            const Poly& h = K.htilde(i, j);
            if (!h.is_zero() && H.r() * h.deg() + C.weights()[i] + C.weights()[j] == K.d_h)
                top(i, j) = Poly::monomial(h.lc(), h.deg());
        }
    CurveAlgebra G = graded_algebra(C);
    std::vector<AlgebraElement> gacts;
    for (std::size_t i = 1; i < r; ++i) gacts.push_back(G.basis(i));
    for (const auto& a : gacts)
        if (G.left_mult(a, top) != G.right_mult(a, top)) {
            bad.push_back("top-weight part does not degenerate to the monomial trace element");
            break;
        }

    // Weight homogeneity of the top part of htilde.
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            const Poly& h = K.htilde(i, j);
            if (h.is_zero()) continue;
            if (H.r() * h.deg() + C.weights()[i] + C.weights()[j] > K.d_h) bad.push_back("htilde exceeds weight d_h");
        }

    if (H.m() == 2 && C.plane_equation()) {
        if (K.htilde != C.divided_difference(2)) bad.push_back("htilde differs from the divided difference");
        const PolyPoly& f = *C.plane_equation();
        AlgebraElement fy = C.zero();
        for (std::size_t k = 1; k < f.size(); ++k) fy[k - 1] += Rat(static_cast<long>(k)) * f[k];
        if (fy != K.hX) bad.push_back("hX differs from df/dy");
    }
    return bad;
}

}  // namespace wcurve
