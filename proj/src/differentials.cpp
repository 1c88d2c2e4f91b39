#include "wcurve/curve.hpp"

#include "wcurve/error.hpp"

#include <algorithm>

namespace wcurve {

DifferentialBasis differential_basis(const CurveAlgebra& C, const TraceKit& K, std::size_t count) {
    const std::size_t r = C.rank();
    const i64 rr = C.H().r();
    const auto& e = C.weights();

    // Walk weights upward; each class contributes ehat_i, ehat_i + r, ...
    std::vector<DifferentialEntry> all;
    std::vector<i64> next_k(r, 0);
    while (all.size() < count) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < r; ++i)
            if (K.ehat[i] + next_k[i] * rr < K.ehat[best] + next_k[best] * rr) best = i;
        i64 k = next_k[best]++;
        DifferentialEntry en;
        en.k = k;
        en.i = best;
        en.weight = K.ehat[best] + k * rr;
        en.gap = e[best] - (k + 1) * rr;
        en.numerator = C.scale(Poly::monomial(Rat(1), static_cast<int>(k)), K.yhat[best]);
        all.push_back(std::move(en));
    }

    DifferentialBasis B;
    B.entries = std::move(all);
    for (const auto& en : B.entries) {
        B.gap_weights.push_back(en.gap);
        if (en.gap >= 1) ++B.holomorphic_count;
    }
    return B;
}

namespace {

Rat rat_pow(const Rat& b, i64 n) {
    Rat base = n < 0 ? Rat(1 / b) : b;
    Rat out = 1;
    for (i64 k = 0; k < (n < 0 ? -n : n); ++k) out *= base;
    return out;
}

// Leading coefficient of y_i y_j in the top term of its product: returns
// (k*, p, lc).
struct Top {
    std::size_t k;
    int p;
    Rat lc;
};

Top top_term(const CurveAlgebra& C, std::size_t i, std::size_t j) {
    const auto& H = C.H();
    const auto& e = C.weights();
    i64 w = e[i] + e[j];
    std::size_t k = H.class_index(w);
    int p = static_cast<int>((w - e[k]) / H.r());
    const Poly& a = C.table()[i][j][k];
    if (a.deg() != p) throw Error("TableInvalid", "top term of a product has the wrong degree");
    return {k, p, a.lc()};
}

// Leading constants c_x, c_1, ..., c_{r-1} of x and the basis elements in the
// local parameter t fixed by x^{i_r} = t^{-1}... gauge.
std::vector<Rat> leading_constants(const CurveAlgebra& C, std::size_t sidx, i64 i_s, i64 i_r) {
    const std::size_t r = C.rank();
    auto walk = [&](const Rat& cx, const Rat& cs, std::vector<Rat>& c) {
        c.assign(r, Rat(0));
        c[0] = 1;
        std::size_t cur = 0;
        for (std::size_t n = 1; n <= r; ++n) {
            Top t = top_term(C, cur, sidx);
            Rat val = c[cur] * cs / (t.lc * rat_pow(cx, t.p));
            if (n == r) return val;
            c[t.k] = val;
            cur = t.k;
        }
        return Rat(0);
    };
    std::vector<Rat> c;
    Rat D = walk(Rat(1), Rat(1), c);
    Rat lambda = 1 / D;
    Rat cx = rat_pow(lambda, -i_s);
    Rat cs = rat_pow(lambda, -i_r);
    Rat closing = walk(cx, cs, c);
    if (closing != 1) throw Error("NotLeadingSolution", "leading constants do not close up");
    c[0] = cx;
    return c;
}

}  // namespace

Expansion expand_at_infinity(const CurveAlgebra& C, const TraceKit& K, std::size_t precision) {
    const auto& H = C.H();
    const std::size_t r = C.rank();
    const auto& e = C.weights();

    Expansion X;
    X.s = H.coprime_basis_element();
    auto [i_s, i_r] = H.bezout_pair(X.s);
    X.i_s = i_s;
    X.i_r = i_r;
    X.precision = precision ? precision
                            : static_cast<std::size_t>(H.conductor() + 2 * H.genus() + H.r());
    std::size_t sidx = H.class_index(X.s);

    // Unknowns: u_0 = x, u_k = y_k (k >= 1).
    std::vector<SeriesEquation> eqs;
    for (std::size_t i = 1; i < r; ++i)
        for (std::size_t j = i; j < r; ++j) {
            SeriesEquation eq;
            SeriesTerm lhs{Rat(1), 0, std::vector<int>(r, 0)};
            lhs.exps[i] += 1;
            lhs.exps[j] += 1;
            eq.push_back(lhs);
            for (std::size_t k = 0; k < r; ++k) {
                const Poly& a = C.table()[i][j][k];
                for (int q = 0; q <= a.deg(); ++q) {
                    if (a[q] == 0) continue;
                    SeriesTerm t{Rat(-a[q]), 0, std::vector<int>(r, 0)};
                    t.exps[0] = q;
                    if (k > 0) t.exps[k] += 1;
                    eq.push_back(t);
                }
            }
            eqs.push_back(std::move(eq));
        }
    SeriesEquation gauge;
    {
        SeriesTerm a{Rat(1), 0, std::vector<int>(r, 0)};
        a.exps[0] = static_cast<int>(i_r);
        SeriesTerm b{Rat(-1), 1, std::vector<int>(r, 0)};
        b.exps[sidx] = static_cast<int>(i_s);
        gauge = {a, b};
    }
    eqs.push_back(gauge);

    X.leading = leading_constants(C, sidx, i_s, i_r);
    std::vector<SeriesLead> leads;
    leads.push_back({static_cast<int>(-H.r()), X.leading[0]});
    for (std::size_t k = 1; k < r; ++k) leads.push_back({static_cast<int>(-e[k]), X.leading[k]});

    auto u = series_newton_solve(eqs, leads, X.precision);
    X.x = u[0];
    X.basis.push_back(Series::constant(Rat(1), X.precision));
    for (std::size_t k = 1; k < r; ++k) X.basis.push_back(u[k]);

    auto vanishes = [&](const SeriesEquation& eq) {
        Series v = evaluate_equation(eq, u);
        int lead_order = 0;
        bool first = true;
        for (const auto& t : eq) {
            int o = t.tpow;
            for (std::size_t k = 0; k < t.exps.size(); ++k) o += t.exps[k] * leads[k].val;
            lead_order = first ? o : std::min(lead_order, o);
            first = false;
        }
        return v.is_zero() && v.order() >= lead_order + static_cast<int>(X.precision);
    };
    X.relations_ok = true;
    for (std::size_t q = 0; q + 1 < eqs.size(); ++q)
        if (!vanishes(eqs[q])) X.relations_ok = false;
    X.gauge_ok = vanishes(gauge);

    auto eval = [&](const AlgebraElement& v) {
        Series acc = Series::constant(Rat(0), X.precision);
        bool any = false;
        for (std::size_t k = 0; k < r; ++k) {
            if (v[k].is_zero()) continue;
            Series term = compose(v[k], X.x) * X.basis[k];
            acc = any ? acc + term : term;
            any = true;
        }
        return acc;
    };

    Series dx = X.x.derivative();
    Series hinv = eval(K.hX).inverse();
    std::size_t count = static_cast<std::size_t>(H.genus() + H.conductor());
    DifferentialBasis B = differential_basis(C, K, count);
    for (const auto& en : B.entries) {
        DifferentialSeries ds;
        ds.entry = en;
        ds.raw = eval(en.numerator) * dx * hinv;
        ds.raw_lead = ds.raw.lc();
        ds.expected_exponent = static_cast<int>(en.gap - 1);
        ds.exponent_ok = !ds.raw.is_zero() && ds.raw.val() == ds.expected_exponent;
        ds.normalized = ds.raw_lead == 0 ? ds.raw : Rat(1 / ds.raw_lead) * ds.raw;
        X.nu.push_back(std::move(ds));
    }
    return X;
}

}  // namespace wcurve
