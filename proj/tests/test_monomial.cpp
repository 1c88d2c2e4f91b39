#include "doctest.h"

#include "wcurve/error.hpp"
#include "wcurve/monomial.hpp"

#include <memory>
#include <numeric>
#include <random>
#include <set>

using namespace wcurve;

namespace {

i64 weight_of(const MonomialElement& mo, const std::vector<i64>& g) {
    i64 w = 0;
    for (std::size_t j = 0; j < g.size(); ++j) w += mo.exps[j] * g[j];
    return w;
}

// Least member of H congruent to n mod r, found by scanning.
i64 class_min(const NumericalSemigroup& H, i64 n) {
    i64 r = H.r();
    for (i64 k = ((n % r) + r) % r;; k += r)
        if (H.contains(k)) return k;
}

void check_trace_data(const NumericalSemigroup& H, i64 d) {
    MonomialRing R(H);
    auto T = R.trace_monomials(d);
    const auto& e = H.standard_basis().e;
    const auto& g = H.generators();
    REQUIRE(T.ehat.size() == e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        CHECK(T.ehat[i] == d - e[i]);
        i64 star = class_min(H, d - e[i]);
        CHECK(T.delta[i] * H.r() == d - e[i] - star);
        CHECK(T.delta[i] >= 0);
        const auto& tm = T.monomials[i];
        CHECK(tm.right == i);
        CHECK(weight_of(tm.left, g) == T.ehat[i]);
        CHECK(tm.left.weight == T.ehat[i]);
        CHECK(weight_of(tm.right_monomial, g) == e[i]);
    }
    CHECK(T.symmetric == (T.delta[0] == 0));
    CHECK(R.annihilates(d));
}

}  // namespace

TEST_CASE("dual weights for the monomial curves") {
    auto T = MonomialRing(NumericalSemigroup({4, 6, 7, 9})).trace_monomials(13);
    CHECK(T.ehat == std::vector<i64>{13, 7, 6, 4});
    CHECK(T.delta == std::vector<i64>{1, 0, 0, 1});
    CHECK_FALSE(T.symmetric);

    auto S = MonomialRing(NumericalSemigroup({6, 13, 14, 15, 16})).trace_monomials(29);
    CHECK(S.ehat == std::vector<i64>{29, 16, 15, 14, 13, 0});
    CHECK(S.delta == std::vector<i64>(6, 0));
    CHECK(S.symmetric);

    auto P = MonomialRing(NumericalSemigroup({5, 7, 11, 13})).trace_monomials(25);
    CHECK(P.ehat == std::vector<i64>{25, 18, 14, 12, 11});
    CHECK(P.delta == std::vector<i64>{5, 1, 0, 1, 0});
}

TEST_CASE("every valid degree of the examples gives consistent data") {
    for (auto gens : std::vector<std::vector<i64>>{{4, 6, 7, 9}, {5, 7, 11, 13}, {3, 7, 8}, {5, 7, 11},
                                                   {6, 13, 14, 15, 16}, {2, 3}}) {
        NumericalSemigroup H(gens);
        i64 d0 = H.minimal_trace_degree();
        for (i64 d = d0; d < d0 + 2 * H.r(); ++d)
            if (H.is_valid_trace_degree(d)) check_trace_data(H, d);
    }
}

TEST_CASE("invalid degree is rejected") {
    NumericalSemigroup H({3, 7, 8});
    MonomialRing R(H);
    CHECK_THROWS_AS(R.trace_monomials(9), Error);
    try {
        R.trace_monomials(9);
    } catch (const Error& e) {
        CHECK(e.kind() == "InvalidTraceDegree");
    }
    CHECK_FALSE(R.annihilates(9));
}

TEST_CASE("zeta representation and binomials") {
    NumericalSemigroup H({5, 7, 11, 13});
    MonomialRing R(H);
    for (i64 n = 0; n < 40; ++n) {
        if (!H.contains(n)) {
            CHECK_THROWS_AS(R.zeta_repr(n), Error);
            continue;
        }
        auto mo = R.zeta_repr(n);
        CHECK(weight_of(mo, H.generators()) == n);
        CHECK(mo.weight == n);
    }
    CHECK(R.binomial_fHj(2) == std::pair<i64, i64>{5, 7});
    NumericalSemigroup K({4, 6, 7, 9});
    CHECK(MonomialRing(K).binomial_fHj(2) == std::pair<i64, i64>{2, 3});
    CHECK_THROWS_AS(R.binomial_fHj(1), Error);
    CHECK_THROWS_AS(R.binomial_fHj(5), Error);
}

TEST_CASE("structure constants of the monomial algebra") {
    NumericalSemigroup H({3, 7, 8});
    MonomialRing R(H);
    const auto& e = H.standard_basis().e;
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = 0; j < e.size(); ++j) {
            auto [k, p] = R.structure_b(i, j);
            CHECK(e[i] + e[j] == e[k] + p * H.r());
            CHECK(p >= 0);
        }
}

TEST_CASE("toric relations are weight homogeneous and invariant") {
    for (auto gens : std::vector<std::vector<i64>>{{3, 7, 8}, {5, 7, 11}, {4, 6, 7, 9}}) {
        NumericalSemigroup H(gens);
        MonomialRing R(H);
        auto rel = R.toric_relations(30);
        CHECK_FALSE(rel.empty());
        for (auto& [a, b] : rel) {
            CHECK(weight_of(a, H.generators()) == weight_of(b, H.generators()));
            CHECK_FALSE(a == b);
        }
        CHECK(R.cyclic_action_check(30).empty());
    }
}

TEST_CASE("property: annihilation holds exactly at the valid degrees") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> val(2, 16);
    int tested = 0;
    while (tested < 40) {
        std::set<i64> s;
        int n = 2 + static_cast<int>(rng() % 3);
        while (static_cast<int>(s.size()) < n) s.insert(val(rng));
        std::vector<i64> g(s.begin(), s.end());
        i64 gg = 0;
        for (i64 x : g) gg = std::gcd(gg, x);
        if (gg != 1) continue;
        std::unique_ptr<NumericalSemigroup> H;
        try {
            H = std::make_unique<NumericalSemigroup>(g);
        } catch (const Error&) {
            continue;
        }
        ++tested;
        MonomialRing R(*H);
        i64 d0 = H->minimal_trace_degree();
        for (i64 d = d0 - H->r(); d < d0 + 2 * H->r(); ++d) {
            if (d < 0) continue;
            bool valid = H->is_valid_trace_degree(d);
            if (valid) check_trace_data(*H, d);
            else CHECK_FALSE(R.annihilates(d));
        }
    }
}
