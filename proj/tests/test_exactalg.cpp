#include "doctest.h"

#include "wcurve/error.hpp"
#include "wcurve/linalg.hpp"
#include "wcurve/poly.hpp"
#include "wcurve/series.hpp"

#include <random>

using namespace wcurve;

namespace {

Poly random_poly(std::mt19937_64& rng, int maxdeg) {
    std::uniform_int_distribution<int> d(0, maxdeg), c(-9, 9), den(1, 4);
    int n = d(rng);
    std::vector<Rat> co;
    for (int i = 0; i <= n; ++i) {
        Rat q(c(rng), den(rng));
        q.canonicalize();
        co.push_back(q);
    }
    return Poly(co);
}

std::string kind_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return "none";
}

}  // namespace

TEST_CASE("rational literals") {
    CHECK(parse_rat("-7/4") == Rat(-7, 4));
    CHECK(parse_rat("0.25") == Rat(1, 4));
    CHECK(parse_rat("12") == Rat(12));
    CHECK(to_string(parse_rat("3/-6")) == "-1/2");
    CHECK(parse_rat("0.05") == Rat(1, 20));
    CHECK(parse_rat("-1.5") == Rat(-3, 2));
    CHECK(kind_of([] { parse_rat("1/0"); }) == "ParseError");
    CHECK(kind_of([] { parse_rat("abc"); }) == "ParseError");
}

TEST_CASE("polynomial basics") {
    Poly x = Poly::x();
    Poly p = x * x - Poly(1);
    CHECK(p == Poly::from_roots({Rat(1), Rat(-1)}));
    CHECK(p.deg() == 2);
    CHECK(Poly().deg() == -1);
    CHECK(p.eval(Rat(3)) == 8);
    CHECK(p.derivative() == Poly({0, 2}));
    CHECK((x + Poly(1)).pow(3) == Poly({1, 3, 3, 1}));
    CHECK(Poly({2, 4}).monic() == Poly({Rat(1, 2), 1}));
    CHECK(p - p == Poly());
}

TEST_CASE("division, gcd and errors") {
    Poly a = Poly::from_roots({1, 2, 3});
    Poly b = Poly::from_roots({2, 5});
    CHECK(poly_gcd(a, b) == Poly::from_roots({2}));
    CHECK(poly_gcd(Poly(), Poly()) == Poly());
    CHECK(exact_div(a, Poly::from_roots({1, 3})) == Poly::from_roots({2}));
    CHECK(kind_of([&] { exact_div(a, b); }) == "NotDivisible");
    CHECK(kind_of([&] { poly_divmod(a, Poly()); }) == "DivisionByZeroPoly");
    CHECK(divides(Poly::from_roots({3}), a));
    CHECK_FALSE(divides(b, a));
}

TEST_CASE("property: division algorithm and gcd") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        Poly a = random_poly(rng, 7), b = random_poly(rng, 4);
        if (b.is_zero()) continue;
        auto [q, r] = poly_divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.deg() < b.deg());
        Poly c = random_poly(rng, 3);
        if (c.deg() < 1) continue;
        Poly g = poly_gcd(a * c, b * c);
        CHECK(divides(c, g));
        CHECK(divides(g, a * c));
        CHECK(divides(g, b * c));
        CHECK(g.lc() == 1);
    }
}

TEST_CASE("square-free decomposition") {
    Poly f = Poly::from_roots({1, 1, 1, 2, 2, 3});
    auto sq = squarefree_decomposition(Rat(5) * f);
    Poly prod(1);
    for (auto& [p, m] : sq) {
        prod *= p.pow(m);
        CHECK(p.lc() == 1);
        CHECK(poly_gcd(p, p.derivative()).deg() == 0);
    }
    CHECK(prod == f);
    CHECK(sq.size() == 3);
}

TEST_CASE("linear solve over Q") {
    RatMatrix A = {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
    auto sol = solve_linear(A, {6, 12, 2});
    REQUIRE(sol.nullspace.size() == 1);
    for (std::size_t i = 0; i < 3; ++i) {
        Rat s = 0, n = 0;
        for (std::size_t j = 0; j < 3; ++j) {
            s += A[i][j] * sol.particular[j];
            n += A[i][j] * sol.nullspace[0][j];
        }
        CHECK(s == Rat(std::vector<int>{6, 12, 2}[i]));
        CHECK(n == 0);
    }
    CHECK(kind_of([&] { solve_linear(A, {1, 1, 1}); }) == "Inconsistent");
    CHECK(nullspace({{1, 1}}, 2).size() == 1);
    CHECK(nullspace({}, 3).size() == 3);
}

TEST_CASE("rational functions stay reduced") {
    RatFunc f(Poly::from_roots({1, 2}), Poly({-2, 2}));  // (x-1)(x-2)/(2x-2)
    CHECK(f.is_poly());
    CHECK(f.num() == Poly({-1, Rat(1, 2)}));
    RatFunc g = RatFunc(Poly(1)) / RatFunc(Poly::x());
    CHECK((g * RatFunc(Poly::x())) == RatFunc(Poly(1)));
    CHECK((g - g).is_zero());
    CHECK((g + g).den() == Poly::x());
}

TEST_CASE("Bareiss determinant against Vandermonde product") {
    // Entry (i,j) = (x + i)^j ; det = prod_{i<j} (j - i).
    const int n = 4;
    PolyMatrix V(n, n);
    Rat expect = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) V(i, j) = (Poly::x() + Poly(i)).pow(j);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) expect *= (j - i);
    CHECK(determinant(V) == Poly(expect));

    PolyMatrix M(2, 2);
    M(0, 0) = Poly::x();
    M(0, 1) = Poly(1);
    M(1, 0) = Poly({3, 0, 1});
    M(1, 1) = Poly::x();
    CHECK(M * adjugate(M) == determinant(M) * PolyMatrix::identity(2));
    CHECK(determinant(M) == Poly({-3}));
}

TEST_CASE("characteristic and minimal polynomials of a companion matrix") {
    // Companion of T^3 - x T - (x^2 + 1).
    PolyMatrix C(3, 3);
    C(1, 0) = Poly(1);
    C(2, 1) = Poly(1);
    C(0, 2) = Poly({1, 0, 1});
    C(1, 2) = Poly::x();
    auto cp = characteristic_poly(C);
    REQUIRE(cp.size() == 4);
    CHECK(cp[0] == -Poly({1, 0, 1}));
    CHECK(cp[1] == -Poly::x());
    CHECK(cp[2] == Poly());
    CHECK(cp[3] == Poly(1));
    CHECK(matrix_minimal_poly(C) == cp);
    CHECK(evaluate_at_matrix(cp, C).is_zero());
    CHECK(C.trace() == Poly());
    // Scalar matrix has a linear minimal polynomial.
    auto mp = matrix_minimal_poly(Poly::x() * PolyMatrix::identity(3));
    REQUIRE(mp.size() == 2);
    CHECK(mp[0] == -Poly::x());
}

TEST_CASE("resultant against the product of root differences") {
    // f = y^2 - x, g = y - 2 : Res_y = 4 - x.
    PolyPoly f = {-Poly::x(), Poly(), Poly(1)};
    PolyPoly g = {Poly(-2), Poly(1)};
    CHECK(resultant_y(f, g) == Poly({4, -1}));
    // Discriminant-style: Res(f, f_y) = -4x up to sign convention.
    Poly r = resultant_y(f, derivative_y(f));
    CHECK((r == Poly({0, 4}) || r == Poly({0, -4})));
}

TEST_CASE("series arithmetic") {
    auto one_minus_t = Series(0, {1, -1, 0, 0, 0, 0});
    auto geo = one_minus_t.inverse();
    for (int k = 0; k < 6; ++k) CHECK(geo.coeff_at(k) == 1);
    CHECK((geo * one_minus_t).coeff_at(3) == 0);
    auto s = Series(-2, {3, 1, 0, 0});
    CHECK(s.val() == -2);
    CHECK(s.derivative().val() == -3);
    CHECK(s.derivative().lc() == -6);
    CHECK((s * s.inverse()).lc() == 1);
    CHECK(Series(0, {0, 0, 5, 1}).val() == 2);
    CHECK(compose(Poly({1, 1}), geo).coeff_at(0) == 2);
}

TEST_CASE("Newton lifting matches the binomial series") {
    // u^2 = 1 + t, u = 1 + t/2 - t^2/8 + t^3/16 - 5 t^4/128 + ...
    SeriesEquation eq = {{1, 0, {2}}, {-1, 0, {0}}, {-1, 1, {0}}};
    auto u = series_newton_solve({eq}, {{0, 1}}, 6);
    REQUIRE(u.size() == 1);
    Rat c = 1;  // binom(1/2, k)
    for (int k = 0; k < 6; ++k) {
        CHECK(u[0].coeff_at(k) == c);
        c = c * (Rat(1, 2) - k) / (k + 1);
    }
    CHECK(evaluate_equation(eq, u).is_zero());
    CHECK(kind_of([&] { series_newton_solve({eq}, {{0, 2}}, 4); }) == "NotLeadingSolution");
}
