#include "wcurve/monomial.hpp"

#include "wcurve/error.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <tuple>

namespace wcurve {

std::string MonomialElement::str(const std::vector<i64>& gens, const std::string& prime) const {
    std::string s;
    for (std::size_t j = 0; j < exps.size(); ++j) {
        if (!exps[j]) continue;
        if (!s.empty()) s += "*";
        s += "Z" + std::to_string(gens[j]) + prime;
        if (exps[j] > 1) s += "^" + std::to_string(exps[j]);
    }
    return s.empty() ? "1" : s;
}

MonomialRing::MonomialRing(const NumericalSemigroup& H) : H_(H) {}

MonomialElement MonomialRing::make(std::vector<i64> exps) const {
    MonomialElement m;
    m.exps = std::move(exps);
    for (std::size_t j = 0; j < m.exps.size(); ++j) m.weight += m.exps[j] * H_.generators()[j];
    return m;
}

MonomialElement MonomialRing::zeta_repr(i64 e) const {
    if (!H_.contains(e)) throw Error("NotInSemigroup", std::to_string(e) + " is not in H");
    const auto& g = H_.generators();
    const std::size_t m = g.size();
    const i64 inf = std::numeric_limits<i64>::max() / 4;
    // best[j][w]: fewest generators among g[0..j] summing to w.
    std::vector<std::vector<i64>> best(m, std::vector<i64>(static_cast<std::size_t>(e) + 1, inf));
    for (std::size_t j = 0; j < m; ++j) {
        best[j][0] = 0;
        for (i64 w = 1; w <= e; ++w) {
            if (j) best[j][w] = best[j - 1][w];
            if (w >= g[j] && best[j][w - g[j]] + 1 < best[j][w]) best[j][w] = best[j][w - g[j]] + 1;
        }
    }
    std::vector<i64> exps(m, 0);
    i64 w = e, need = best[m - 1][e];
    for (std::size_t jj = m; jj-- > 0;) {
        for (i64 cnt = w / g[jj]; cnt >= 0; --cnt) {
            i64 rest = w - cnt * g[jj];
            i64 tail = jj ? best[jj - 1][rest] : (rest == 0 ? 0 : inf);
            if (tail < inf && cnt + tail == need) {
                exps[jj] = cnt;
                w = rest;
                need -= cnt;
                break;
            }
        }
    }
    return make(std::move(exps));
}

std::pair<std::size_t, i64> MonomialRing::structure_b(std::size_t i, std::size_t j) const {
    const auto& e = H_.standard_basis().e;
    i64 s = e.at(i) + e.at(j);
    std::size_t k = H_.class_index(s);
    return {k, (s - e[k]) / H_.r()};
}

std::pair<i64, i64> MonomialRing::binomial_fHj(std::size_t j) const {
    if (j < 2 || j > H_.m()) throw Error("IndexOutOfRange", "generator position must lie in [2, m]");
    i64 r = H_.r(), rj = H_.generators()[j - 1];
    i64 g = std::gcd(r, rj);
    return {r / g, rj / g};
}

std::vector<std::pair<MonomialElement, MonomialElement>> MonomialRing::toric_relations(i64 cap) const {
    const auto& g = H_.generators();
    const std::size_t m = g.size();
    std::map<i64, std::vector<std::vector<i64>>> fibers;
    std::vector<i64> cur(m, 0);
    std::function<void(std::size_t, i64)> rec = [&](std::size_t j, i64 w) {
        if (j == m) {
            if (w > 0) fibers[w].push_back(cur);
            return;
        }
        for (i64 c = 0; w + c * g[j] <= cap; ++c) {
            cur[j] = c;
            rec(j + 1, w + c * g[j]);
        }
        cur[j] = 0;
    };
    rec(0, 0);

    auto order_pair = [&](std::vector<i64> a, std::vector<i64> b) {
        // Fewer powers of Z_r first; ties broken by descending-generator lex order.
        auto key = [](const std::vector<i64>& v) {
            std::vector<i64> rev(v.rbegin(), v.rend());
            return std::make_pair(-v[0], rev);
        };
        if (key(b) > key(a)) std::swap(a, b);
        return std::make_pair(make(a), make(b));
    };

    std::vector<std::pair<std::vector<i64>, std::vector<i64>>> kept;
    std::vector<std::pair<MonomialElement, MonomialElement>> out;
    for (auto& [w, fib] : fibers) {
        if (fib.size() < 2) continue;
        std::map<std::vector<i64>, std::size_t> idx;
        for (std::size_t t = 0; t < fib.size(); ++t) idx[fib[t]] = t;
        std::vector<std::size_t> parent(fib.size());
        std::iota(parent.begin(), parent.end(), 0);
        std::function<std::size_t(std::size_t)> find = [&](std::size_t a) {
            return parent[a] == a ? a : parent[a] = find(parent[a]);
        };
        auto move_by = [&](const std::vector<i64>& u, const std::vector<i64>& a, const std::vector<i64>& b) {
            std::vector<i64> v = u;
            for (std::size_t j = 0; j < m; ++j) {
                if (u[j] < a[j]) return std::vector<i64>{};
                v[j] = u[j] - a[j] + b[j];
            }
            return v;
        };
        for (std::size_t t = 0; t < fib.size(); ++t)
            for (const auto& [a, b] : kept)
                for (const auto& v : {move_by(fib[t], a, b), move_by(fib[t], b, a)}) {
                    if (v.empty()) continue;
                    auto it = idx.find(v);
                    if (it != idx.end()) parent[find(t)] = find(it->second);
                }
        std::map<std::size_t, std::vector<i64>> reps;
        for (std::size_t t = 0; t < fib.size(); ++t) {
            auto root = find(t);
            if (!reps.count(root) || fib[t] > reps[root]) reps[root] = fib[t];
        }
        if (reps.size() < 2) continue;
        auto it = reps.begin();
        std::vector<i64> base = it->second;
        for (++it; it != reps.end(); ++it) {
            kept.emplace_back(base, it->second);
            out.push_back(order_pair(base, it->second));
        }
    }
    return out;
}

MonomialTraceData MonomialRing::trace_monomials(i64 d) const {
    if (!H_.is_valid_trace_degree(d))
        throw Error("InvalidTraceDegree", std::to_string(d) + " - e_i is not in H for some i");
    const auto& e = H_.standard_basis().e;
    const i64 r = H_.r();
    MonomialTraceData T;
    T.d_h = d;
    T.ell = H_.class_index(d);
    for (std::size_t i = 0; i < e.size(); ++i) {
        i64 eh = d - e[i];
        i64 es = H_.e_star(T.ell, i);
        T.ehat.push_back(eh);
        T.delta.push_back((eh - es) / r);
        MonomialElement left = zeta_repr(es);
        left.exps[0] += T.delta.back();
        left.weight += T.delta.back() * r;
        T.monomials.push_back({left, i, zeta_repr(e[i])});
    }
    T.symmetric = (T.delta[0] == 0);
    return T;
}

std::vector<std::string> MonomialRing::cyclic_action_check(i64 cap) const {
    std::vector<std::string> bad;
    const i64 r = H_.r();
    const auto& g = H_.generators();
    auto character = [&](const MonomialElement& mo) {
        i64 c = 0;
        for (std::size_t j = 0; j < mo.exps.size(); ++j) c = (c + (mo.exps[j] % r) * (g[j] % r)) % r;
        return c;
    };
    for (const auto& [a, b] : toric_relations(cap))
        if (character(a) != character(b)) bad.push_back(a.str(g) + " - " + b.str(g));
    i64 d = H_.minimal_trace_degree();
    auto T = trace_monomials(d);
    for (const auto& tm : T.monomials)
        if ((character(tm.left) + character(tm.right_monomial)) % r != ((d % r) + r) % r)
            bad.push_back("trace monomial " + tm.left.str(g) + " (x) " + tm.right_monomial.str(g, "'"));
    return bad;
}

bool MonomialRing::annihilates(i64 d) const {
    const auto& e = H_.standard_basis().e;
    const i64 r = H_.r();
    auto split = [&](i64 n) {
        std::size_t k = H_.class_index(n);
        return std::make_pair(k, (n - e[k]) / r);
    };
    for (std::size_t i = 0; i < e.size(); ++i)
        if (split(d - e[i]).second < 0) return false;
    for (std::size_t j = 1; j < H_.m(); ++j) {
        i64 rj = H_.generators()[j];
        std::map<std::tuple<std::size_t, std::size_t, i64>, i64> acc;
        for (std::size_t i = 0; i < e.size(); ++i) {
            auto [a1, p1] = split(d - e[i] + rj);
            auto [b1, q1] = split(e[i]);
            acc[{a1, b1, p1 + q1}] += 1;
            auto [a2, p2] = split(d - e[i]);
            auto [b2, q2] = split(e[i] + rj);
            acc[{a2, b2, p2 + q2}] -= 1;
        }
        for (const auto& kv : acc)
            if (kv.second != 0) return false;
    }
    return true;
}

}  // namespace wcurve
