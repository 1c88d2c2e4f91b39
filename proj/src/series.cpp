#include "wcurve/series.hpp"

#include "wcurve/error.hpp"
#include "wcurve/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace wcurve {

Series::Series(int val, std::vector<Rat> coeffs) : val_(val), c_(std::move(coeffs)) { normalize(); }

Series Series::constant(const Rat& c, std::size_t precision) { return monomial(c, 0, precision); }

Series Series::monomial(const Rat& c, int exponent, std::size_t precision) {
    std::vector<Rat> v(precision, Rat(0));
    if (precision) v[0] = c;
    return Series(exponent, std::move(v));
}

void Series::normalize() {
    std::size_t z = 0;
    while (z < c_.size() && c_[z] == 0) ++z;
    if (z) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(z));
        val_ += static_cast<int>(z);
    }
}

bool Series::is_zero() const { return c_.empty(); }

Rat Series::coeff_at(int exponent) const {
    if (exponent >= order()) throw Error("PrecisionExhausted", "coefficient beyond the truncation order");
    if (exponent < val_) return 0;
    return c_[static_cast<std::size_t>(exponent - val_)];
}

Series Series::truncated(std::size_t precision) const {
    if (precision >= c_.size()) return *this;
    return Series(val_, std::vector<Rat>(c_.begin(), c_.begin() + static_cast<long>(precision)));
}

Series operator+(const Series& a, const Series& b) {
    int order = std::min(a.order(), b.order());
    int val = std::min(a.val_, b.val_);
    if (order <= val) return Series(order, {});
    std::vector<Rat> c(static_cast<std::size_t>(order - val), Rat(0));
    for (std::size_t k = 0; k < a.c_.size() && a.val_ + static_cast<int>(k) < order; ++k)
        c[a.val_ - val + k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size() && b.val_ + static_cast<int>(k) < order; ++k)
        c[b.val_ - val + k] += b.c_[k];
    return Series(val, std::move(c));
}

Series operator*(const Rat& s, const Series& a) {
    if (s == 0) return Series(a.order(), {});
    Series out = a;
    for (auto& v : out.c_) v *= s;
    return out;
}

Series operator-(const Series& a, const Series& b) { return a + Rat(-1) * b; }

Series operator*(const Series& a, const Series& b) {
    std::size_t p = std::min(a.c_.size(), b.c_.size());
    std::vector<Rat> c(p, Rat(0));
    for (std::size_t i = 0; i < p; ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; i + j < p; ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Series(a.val_ + b.val_, std::move(c));
}

Series Series::inverse() const {
    if (c_.empty()) throw Error("DivisionByZeroSeries", "inverse of a series with no known nonzero term");
    std::size_t p = c_.size();
    std::vector<Rat> inv(p, Rat(0));
    Rat l = 1 / c_[0];
    inv[0] = l;
    for (std::size_t n = 1; n < p; ++n) {
        Rat acc = 0;
        for (std::size_t k = 1; k <= n; ++k) acc += c_[k] * inv[n - k];
        inv[n] = -acc * l;
    }
    return Series(-val_, std::move(inv));
}

Series operator/(const Series& a, const Series& b) { return a * b.inverse(); }

Series Series::derivative() const {
    std::vector<Rat> d(c_.size(), Rat(0));
    for (std::size_t k = 0; k < c_.size(); ++k) d[k] = c_[k] * (val_ + static_cast<long>(k));
    return Series(val_ - 1, std::move(d));
}

Series Series::pow(unsigned e) const {
    Series result = constant(1, c_.size() + static_cast<std::size_t>(std::abs(val_)));
    Series base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

std::string Series::str(const std::string& var, std::size_t terms) const {
    std::ostringstream os;
    std::size_t shown = 0;
    for (std::size_t k = 0; k < c_.size() && shown < terms; ++k) {
        if (c_[k] == 0) continue;
        if (shown) os << (c_[k] < 0 ? " - " : " + ");
        else if (c_[k] < 0) os << "-";
        os << Rat(abs(c_[k])).get_str() << "*" << var << "^" << (val_ + static_cast<int>(k));
        ++shown;
    }
    if (!shown) os << "0";
    os << " + O(" << var << "^" << order() << ")";
    return os.str();
}

Series compose(const Poly& p, const Series& s) {
    std::size_t prec = s.precision() + static_cast<std::size_t>(std::abs(s.val()));
    if (p.is_zero()) return Series(1 << 28, {});
    Series acc = Series::constant(p.lc(), prec);
    for (int k = p.deg() - 1; k >= 0; --k) acc = acc * s + Series::constant(p[k], prec);
    return acc;
}

Series evaluate_equation(const SeriesEquation& eq, const std::vector<Series>& u) {
    std::size_t prec = 0;
    for (const auto& s : u) prec = std::max(prec, s.precision() + static_cast<std::size_t>(std::abs(s.val())));
    Series total;
    bool first = true;
    for (const auto& term : eq) {
        Series prod = Series::constant(1, prec);
        for (std::size_t k = 0; k < term.exps.size(); ++k)
            if (term.exps[k] > 0) prod = prod * u[k].pow(static_cast<unsigned>(term.exps[k]));
        prod = Series(prod.val() + term.tpow, prod.coeffs());
        prod = term.coef * prod;
        total = first ? prod : total + prod;
        first = false;
    }
    return total;
}

std::vector<Series> series_newton_solve(const std::vector<SeriesEquation>& equations,
                                        const std::vector<SeriesLead>& leads,
                                        std::size_t precision) {
    const std::size_t nu = leads.size();
    const std::size_t N = std::max<std::size_t>(precision, 1);
    for (const auto& l : leads)
        if (l.lead == 0) throw Error("SingularJet", "leading coefficient must be nonzero");

    struct TermState {
        Rat coef;
        int offset;
        std::vector<std::pair<std::size_t, int>> factors;
        std::vector<std::vector<Rat>> chain;
    };
    struct EqState {
        std::vector<TermState> terms;
    };

    std::vector<int> maxexp(nu, 1);
    std::vector<EqState> eqs;
    for (const auto& eq : equations) {
        EqState st;
        int vmin = 0;
        bool first = true;
        std::vector<int> tv;
        for (const auto& term : eq) {
            if (term.exps.size() > nu) throw Error("ShapeMismatch", "term mentions an unknown that does not exist");
            int v = term.tpow;
            for (std::size_t k = 0; k < term.exps.size(); ++k) v += term.exps[k] * leads[k].val;
            tv.push_back(v);
            vmin = first ? v : std::min(vmin, v);
            first = false;
        }
        for (std::size_t t = 0; t < eq.size(); ++t) {
            if (eq[t].coef == 0) continue;
            TermState ts;
            ts.coef = eq[t].coef;
            ts.offset = tv[t] - vmin;
            for (std::size_t k = 0; k < eq[t].exps.size(); ++k)
                if (eq[t].exps[k] > 0) {
                    ts.factors.emplace_back(k, eq[t].exps[k]);
                    maxexp[k] = std::max(maxexp[k], eq[t].exps[k]);
                }
            ts.chain.assign(ts.factors.size(), std::vector<Rat>(N, Rat(0)));
            st.terms.push_back(std::move(ts));
        }
        eqs.push_back(std::move(st));
    }

    std::vector<std::vector<Rat>> a(nu, std::vector<Rat>(N, Rat(0)));
    for (std::size_t k = 0; k < nu; ++k) a[k][0] = leads[k].lead;
    // pw[k][e] holds the relative coefficients of u_k^e (index 0 unused, e = 1 is u_k).
    std::vector<std::vector<std::vector<Rat>>> pw(nu);
    for (std::size_t k = 0; k < nu; ++k)
        pw[k].assign(maxexp[k] + 1, std::vector<Rat>(N, Rat(0)));

    auto compute_index = [&](std::size_t n) {
        for (std::size_t k = 0; k < nu; ++k) {
            pw[k][1][n] = a[k][n];
            for (int e = 2; e <= maxexp[k]; ++e) {
                Rat acc = 0;
                for (std::size_t i = 0; i <= n; ++i) acc += pw[k][e - 1][i] * a[k][n - i];
                pw[k][e][n] = acc;
            }
        }
        for (auto& eq : eqs)
            for (auto& ts : eq.terms) {
                if (ts.factors.empty()) continue;
                auto [k0, e0] = ts.factors[0];
                ts.chain[0][n] = pw[k0][e0][n];
                for (std::size_t f = 1; f < ts.factors.size(); ++f) {
                    auto [k, e] = ts.factors[f];
                    Rat acc = 0;
                    for (std::size_t i = 0; i <= n; ++i) acc += ts.chain[f - 1][i] * pw[k][e][n - i];
                    ts.chain[f][n] = acc;
                }
            }
    };
    auto residual = [&](std::size_t n) {
        RatVector rho(eqs.size(), Rat(0));
        for (std::size_t m = 0; m < eqs.size(); ++m)
            for (const auto& ts : eqs[m].terms) {
                if (static_cast<int>(n) < ts.offset) continue;
                std::size_t j = n - static_cast<std::size_t>(ts.offset);
                if (ts.factors.empty()) {
                    if (j == 0) rho[m] += ts.coef;
                } else {
                    rho[m] += ts.coef * ts.chain.back()[j];
                }
            }
        return rho;
    };

    compute_index(0);
    RatVector rho0 = residual(0);
    for (std::size_t m = 0; m < rho0.size(); ++m)
        if (rho0[m] != 0)
            throw Error("NotLeadingSolution", "leading terms do not solve equation " + std::to_string(m));

    RatMatrix J(eqs.size(), RatVector(nu, Rat(0)));
    for (std::size_t m = 0; m < eqs.size(); ++m)
        for (const auto& ts : eqs[m].terms) {
            if (ts.offset != 0) continue;
            for (std::size_t f = 0; f < ts.factors.size(); ++f) {
                auto [k, e] = ts.factors[f];
                Rat d = ts.coef * e;
                for (std::size_t g = 0; g < ts.factors.size(); ++g) {
                    auto [k2, e2] = ts.factors[g];
                    int pe = (g == f) ? e2 - 1 : e2;
                    for (int q = 0; q < pe; ++q) d *= leads[k2].lead;
                }
                J[m][k] += d;
            }
        }

    for (std::size_t n = 1; n < N; ++n) {
        compute_index(n);
        RatVector rho = residual(n);
        for (auto& v : rho) v = -v;
        LinearSolution sol;
        try {
            sol = solve_linear(J, rho);
        } catch (const Error&) {
            throw Error("SingularJet", "order-" + std::to_string(n) + " correction is inconsistent");
        }
        if (!sol.nullspace.empty())
            throw Error("SingularJet", "order-" + std::to_string(n) + " correction is not unique");
        for (std::size_t k = 0; k < nu; ++k) a[k][n] = sol.particular[k];
        compute_index(n);
    }

    std::vector<Series> out;
    for (std::size_t k = 0; k < nu; ++k) out.emplace_back(leads[k].val, a[k]);
    return out;
}

}  // namespace wcurve
