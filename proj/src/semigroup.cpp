#include "wcurve/semigroup.hpp"

#include "wcurve/error.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

namespace wcurve {

i64 checked_add(i64 a, i64 b) {
    i64 out;
    if (__builtin_add_overflow(a, b, &out)) throw Error("Overflow", "integer overflow in semigroup arithmetic");
    return out;
}

i64 checked_mul(i64 a, i64 b) {
    i64 out;
    if (__builtin_mul_overflow(a, b, &out)) throw Error("Overflow", "integer overflow in semigroup arithmetic");
    return out;
}

namespace {

i64 mod(i64 a, i64 m) {
    i64 v = a % m;
    return v < 0 ? v + m : v;
}

std::string join(const std::vector<i64>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

// Minimal elements of each residue class mod r (shortest paths over Z_r).
std::vector<i64> apery_classes(const std::vector<i64>& gens) {
    const i64 r = gens.front();
    const i64 inf = std::numeric_limits<i64>::max();
    std::vector<i64> dist(static_cast<std::size_t>(r), inf);
    dist[0] = 0;
    using Item = std::pair<i64, i64>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    pq.emplace(0, 0);
    while (!pq.empty()) {
        auto [d, c] = pq.top();
        pq.pop();
        if (d != dist[c]) continue;
        for (std::size_t j = 1; j < gens.size(); ++j) {
            i64 nd = checked_add(d, gens[j]);
            i64 nc = mod(c + gens[j], r);
            if (nd < dist[nc]) {
                dist[nc] = nd;
                pq.emplace(nd, nc);
            }
        }
    }
    return dist;
}

}  // namespace

NumericalSemigroup::NumericalSemigroup(std::vector<i64> generators) {
    if (generators.empty()) throw Error("EmptyGenerators", "a numerical semigroup needs at least one generator");
    for (i64 g : generators)
        if (g <= 0) throw Error("NonPositiveGenerator", "generator " + std::to_string(g) + " is not positive");
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    i64 g = 0;
    for (i64 v : generators) g = std::gcd(g, v);
    if (g != 1)
        throw Error("GcdNotOne", "gcd of {" + join(generators) + "} is " + std::to_string(g) +
                                     ", so the complement is infinite");

    std::vector<i64> redundant;
    {
        const i64 top = generators.back();
        std::vector<char> reach(static_cast<std::size_t>(top) + 1, 0);
        reach[0] = 1;
        std::vector<i64> kept;
        for (i64 gen : generators) {
            if (reach[gen]) {
                redundant.push_back(gen);
                continue;
            }
            kept.push_back(gen);
            for (i64 n = gen; n <= top; ++n)
                if (reach[n - gen]) reach[n] = 1;
        }
    }
    if (!redundant.empty())
        throw Error("RedundantGenerator", "generators {" + join(redundant) +
                                              "} are sums of smaller generators; pass a minimal set");
    gens_ = std::move(generators);

    const i64 r = gens_.front();
    std::vector<i64> ap = apery_classes(gens_);
    i64 frob = *std::max_element(ap.begin(), ap.end()) - r;
    conductor_ = frob < 0 ? 0 : frob + 1;

    limit_ = checked_add(conductor_, gens_.back());
    member_.assign(static_cast<std::size_t>(limit_) + 1, 0);
    for (i64 n = 0; n <= limit_; ++n) member_[n] = (n >= ap[mod(n, r)]) ? 1 : 0;
    for (i64 n = 0; n < conductor_; ++n)
        if (!member_[n]) gaps_.push_back(n);

    std::vector<i64> e = ap;
    std::sort(e.begin(), e.end());
    basis_.e = e;
    for (std::size_t i = 0; i < e.size(); ++i) {
        basis_.class_of[mod(e[i], r)] = i;
        basis_.tilde[mod(e[i], r)] = e[i];
    }
}

bool NumericalSemigroup::contains(i64 n) const {
    if (n < 0) return false;
    if (n >= conductor_) return true;
    return member_[n] != 0;
}

std::vector<i64> NumericalSemigroup::apery(i64 n) const {
    if (n < 1) throw Error("InvalidArgument", "Apery set needs a positive modulus");
    std::vector<i64> out;
    i64 bound = checked_add(conductor_, n);
    for (i64 s = 0; s <= bound; ++s)
        if (contains(s) && !contains(s - n)) out.push_back(s);
    return out;
}

std::size_t NumericalSemigroup::class_index(i64 n) const { return basis_.class_of.at(mod(n, r())); }

i64 NumericalSemigroup::e_star(std::size_t ell, std::size_t i) const {
    const auto& e = basis_.e;
    if (ell >= e.size() || i >= e.size()) throw Error("IndexOutOfRange", "standard basis index out of range");
    return e[class_index(e[ell] - e[i])];
}

i64 NumericalSemigroup::element(i64 i) const {
    if (i < 0) throw Error("IndexOutOfRange", "negative element index");
    i64 count = -1;
    for (i64 n = 0;; ++n) {
        if (contains(n)) ++count;
        if (count == i) return n;
    }
}

i64 NumericalSemigroup::gap(i64 i) const {
    if (i < 0 || i >= genus()) throw Error("IndexOutOfRange", "gap index out of range");
    return gaps_[i];
}

std::vector<i64> NumericalSemigroup::schubert_index() const {
    std::vector<i64> a;
    for (i64 i = 0; i < genus(); ++i) a.push_back(gaps_[i] - i - 1);
    return a;
}

std::vector<i64> NumericalSemigroup::young_diagram() const {
    std::vector<i64> rows;
    for (i64 v : schubert_index()) rows.push_back(v + 1);
    return rows;
}

bool NumericalSemigroup::is_symmetric() const {
    i64 g = genus();
    if (g == 0) return true;
    return std::binary_search(gaps_.begin(), gaps_.end(), 2 * g - 1);
}

std::pair<i64, i64> NumericalSemigroup::bezout_pair(i64 s) const {
    const i64 rr = r();
    if (std::gcd(rr, s) != 1) throw Error("NotCoprime", std::to_string(s) + " is not coprime to " + std::to_string(rr));
    for (i64 is = 1; is <= rr; ++is)
        if (mod(checked_mul(is, s), rr) == mod(1, rr)) return {is, (is * s - 1) / rr};
    throw Error("Internal", "no Bezout pair found");
}

i64 NumericalSemigroup::gap_from_basis(std::size_t i, i64 k) const {
    if (i >= basis_.e.size()) throw Error("IndexOutOfRange", "standard basis index out of range");
    return basis_.e[i] - checked_mul(k, r());
}

bool NumericalSemigroup::is_valid_trace_degree(i64 d) const {
    for (i64 e : basis_.e)
        if (!contains(d - e)) return false;
    return true;
}

std::vector<i64> NumericalSemigroup::valid_trace_degrees(i64 limit) const {
    std::vector<i64> out;
    for (i64 d = 0; d <= limit; ++d)
        if (is_valid_trace_degree(d)) out.push_back(d);
    return out;
}

i64 NumericalSemigroup::minimal_trace_degree() const {
    // conductor + e[r-1] is always valid.
    for (i64 d = 0;; ++d)
        if (is_valid_trace_degree(d)) return d;
}

i64 NumericalSemigroup::coprime_basis_element() const {
    for (i64 e : basis_.e)
        if (std::gcd(e, r()) == 1) return e;
    throw Error("Internal", "no standard basis element is coprime to r");
}

}  // namespace wcurve
