#include "wcurve/numverify.hpp"

#include "wcurve/error.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace wcurve {

namespace {

using MatC = Eigen::MatrixXcd;

MatC evaluate(const PolyMatrix& M, cplx x0) {
    MatC out(M.rows(), M.cols());
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) out(i, j) = M(i, j).eval(x0);
    return out;
}

cplx eval_element(const AlgebraElement& v, cplx x0, const std::vector<cplx>& point) {
    cplx s = 0;
    for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) s += v[k].eval(x0) * point[k];
    return s;
}

// Fixed pseudo-random weights for the generic combination of basis elements.
std::vector<double> mixing_weights(std::size_t r) {
    std::vector<double> w(r, 0.0);
    for (std::size_t i = 1; i < r; ++i) w[i] = 1.0 + 0.6180339887 * static_cast<double>(i * i % 7) + 0.1 * i;
    return w;
}

MatC generic_transpose(const CurveAlgebra& C, cplx x0) {
    const std::size_t r = C.rank();
    auto w = mixing_weights(r);
    MatC M = MatC::Zero(r, r);
    for (std::size_t i = 1; i < r; ++i) M += w[i] * evaluate(C.mult_matrix(C.basis(i)), x0);
    return M.transpose();
}

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

}  // namespace

std::vector<cplx> numeric_roots(const Poly& p) {
    if (p.deg() < 1) return {};
    const int n = p.deg();
    MatC comp = MatC::Zero(n, n);
    cplx lead = to_double(p.lc());
    for (int i = 1; i < n; ++i) comp(i, i - 1) = 1;
    for (int i = 0; i < n; ++i) comp(i, n - 1) = -cplx(to_double(p[i])) / lead;
    Eigen::ComplexEigenSolver<MatC> es(comp, false);
    std::vector<cplx> out(es.eigenvalues().data(), es.eigenvalues().data() + n);
    return out;
}

std::vector<FiberPoint> fiber(const CurveAlgebra& C, cplx x0, const NumericOptions& opt) {
    const std::size_t r = C.rank();
    std::vector<FiberPoint> pts;
    if (r == 1) {
        pts.push_back({x0, {}, {cplx(1)}});
        return pts;
    }
    MatC Mt = generic_transpose(C, x0);
    Eigen::ComplexEigenSolver<MatC> es(Mt);
    const auto& lam = es.eigenvalues();
    double scale = 1.0;
    for (std::size_t i = 0; i < r; ++i) scale = std::max(scale, std::abs(lam(i)));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j)
            if (std::abs(lam(i) - lam(j)) < opt.separation * scale)
                throw Error("NearBranchPoint", "fiber points nearly coincide over x0");

    for (std::size_t i = 0; i < r; ++i) {
        Eigen::VectorXcd v = es.eigenvectors().col(i);
        if (std::abs(v(0)) < 1e-12) throw Error("NearBranchPoint", "eigenvector has no unit component");
        v /= v(0);
        FiberPoint P;
        P.x = x0;
        P.basis.assign(v.data(), v.data() + r);
        for (std::size_t j = 1; j < C.H().m(); ++j) {
            // A generator outside the standard basis is expressed through the table.
            AlgebraElement g = C.zero();
            i64 rj = C.H().generators()[j];
            std::size_t k = C.gen_index(j);
            g[k] = Poly::monomial(Rat(1), static_cast<int>((rj - C.weights()[k]) / C.H().r()));
            P.coords.push_back(eval_element(g, x0, P.basis));
        }
        pts.push_back(std::move(P));
    }

    // Cross-check against the roots of the second generator's minimal polynomial.
    if (C.H().m() >= 2) {
        PolyPoly f = C.minimal_poly_of_generator(2);
        std::vector<cplx> cf;
        for (const auto& c : f) cf.push_back(c.eval(x0));
        const int n = static_cast<int>(cf.size()) - 1;
        MatC comp = MatC::Zero(n, n);
        for (int i = 1; i < n; ++i) comp(i, i - 1) = 1;
        for (int i = 0; i < n; ++i) comp(i, n - 1) = -cf[i] / cf[n];
        Eigen::ComplexEigenSolver<MatC> ces(comp, false);
        double rs = 1.0;
        for (int i = 0; i < n; ++i) rs = std::max(rs, std::abs(ces.eigenvalues()(i)));
        for (const auto& P : pts) {
            double best = 1e300;
            for (int i = 0; i < n; ++i) best = std::min(best, std::abs(P.coords[0] - ces.eigenvalues()(i)));
            if (best > 1e-6 * rs)
                throw Error("ToleranceExceeded", "fiber coordinate disagrees with minimal-polynomial roots by " + fmt(best));
        }
    }
    return pts;
}

IndicatorReport indicator_matrix(const CurveAlgebra& C, const TraceKit& K, cplx x0, const NumericOptions& opt) {
    auto pts = fiber(C, x0, opt);
    const std::size_t r = C.rank();
    MatC H = evaluate(K.htilde, x0);
    IndicatorReport rep;
    rep.matrix.assign(r, std::vector<cplx>(r));
    for (std::size_t p = 0; p < r; ++p) {
        cplx hx = eval_element(K.hX, x0, pts[p].basis);
        for (std::size_t q = 0; q < r; ++q) {
            cplx s = 0;
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) s += H(i, j) * pts[p].basis[i] * pts[q].basis[j];
            rep.matrix[p][q] = s / hx;
            rep.max_error = std::max(rep.max_error, std::abs(rep.matrix[p][q] - cplx(p == q ? 1.0 : 0.0)));
        }
    }
    return rep;
}

IndicatorReport indicator_test(const CurveAlgebra& C, const TraceKit& K, cplx x0, const NumericOptions& opt) {
    auto rep = indicator_matrix(C, K, x0, opt);
    if (!(rep.max_error < opt.tol))
        throw Error("ToleranceExceeded", "indicator error " + fmt(rep.max_error) + " exceeds " + fmt(opt.tol));
    return rep;
}

TraceReport trace_consistency(const CurveAlgebra& C, cplx x0, const AlgebraElement& v, const NumericOptions& opt) {
    auto pts = fiber(C, x0, opt);
    TraceReport rep;
    double mag = 0;
    for (const auto& P : pts) {
        cplx val = eval_element(v, x0, P.basis);
        rep.fiber_sum += val;
        mag = std::max(mag, std::abs(val));
    }
    rep.exact = C.std_trace(v).eval(x0);
    rep.rel_error = std::abs(rep.fiber_sum - rep.exact) / std::max({1.0, mag, std::abs(rep.exact)});
    if (!(rep.rel_error < opt.tol))
        throw Error("ToleranceExceeded", "trace error " + fmt(rep.rel_error) + " exceeds " + fmt(opt.tol));
    return rep;
}

BranchReport branch_report(const CurveAlgebra& C, const NumericOptions&) {
    const std::size_t r = C.rank();
    BranchReport rep;
    PolyMatrix T = C.trace_form();
    Poly D = determinant(T);
    rep.det_degree = D.deg();
    rep.expected_degree = static_cast<int>(2 * C.H().genus() + C.H().r() - 1);

    auto parts = squarefree_decomposition(D);
    for (const auto& [part, mult] : parts) {
        for (cplx b : numeric_roots(part)) {
            BranchCluster cl;
            cl.x = b;
            cl.multiplicity = mult;
            // The trace form of the fiber algebra has rank equal to the number
            // of distinct points (nilpotents lie in its radical).
            Eigen::JacobiSVD<MatC> svd(evaluate(T, b));
            const auto& sv = svd.singularValues();
            int rank = 0;
            for (Eigen::Index i = 0; i < sv.size(); ++i)
                if (sv(i) > 1e-7 * std::max(1.0, sv(0))) ++rank;
            cl.distinct_points = rank;
            cl.deficiency = static_cast<int>(r) - cl.distinct_points;
            rep.total_deficiency += cl.deficiency;
            rep.clusters.push_back(cl);
        }
    }
    rep.consistent = rep.det_degree == rep.expected_degree && rep.total_deficiency == rep.det_degree;
    return rep;
}

std::vector<Rat> generic_points(const CurveAlgebra& C, std::size_t count, std::mt19937_64& rng, const NumericOptions& opt) {
    std::vector<Rat> out;
    for (int attempt = 0; out.size() < count && attempt < 1000; ++attempt) {
        Rat x0 = random_rational(rng, 12, 5);
        if (std::find(out.begin(), out.end(), x0) != out.end()) continue;
        try {
            fiber(C, cplx(to_double(x0), 0.0), opt);
            out.push_back(x0);
        } catch (const Error&) {
        }
    }
    if (out.size() < count) throw Error("NearBranchPoint", "could not find enough generic points");
    return out;
}

}  // namespace wcurve
