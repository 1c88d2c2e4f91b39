#include "doctest.h"

#include "wcurve/error.hpp"
#include "wcurve/numverify.hpp"

#include <algorithm>
#include <cmath>

using namespace wcurve;

namespace {

// y^2 = x^3 + 1
CurveAlgebra elliptic() { return CurveAlgebra::from_plane(2, 3, {Poly(), Poly({-1, 0, 0, -1})}); }

std::string kind_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return "none";
}

}  // namespace

TEST_CASE("companion roots") {
    auto r = numeric_roots(Poly({-2, 0, 1}));
    REQUIRE(r.size() == 2);
    std::sort(r.begin(), r.end(), [](cplx a, cplx b) { return a.real() < b.real(); });
    CHECK(std::abs(r[0] + std::sqrt(2.0)) < 1e-12);
    CHECK(std::abs(r[1] - std::sqrt(2.0)) < 1e-12);
    auto c = numeric_roots(Poly({1, 0, 1}));
    for (auto z : c) CHECK(std::abs(z * z + 1.0) < 1e-12);
}

TEST_CASE("elliptic fiber over x = 2") {
    auto C = elliptic();
    auto F = fiber(C, cplx(2, 0));
    REQUIRE(F.size() == 2);
    std::vector<double> ys;
    for (const auto& P : F) {
        CHECK(std::abs(P.basis[0] - 1.0) < 1e-12);
        CHECK(std::abs(P.basis[1].imag()) < 1e-10);
        ys.push_back(P.basis[1].real());
    }
    std::sort(ys.begin(), ys.end());
    CHECK(ys[0] == doctest::Approx(-3).epsilon(1e-12));
    CHECK(ys[1] == doctest::Approx(3).epsilon(1e-12));
    CHECK(kind_of([&] { fiber(C, cplx(-1, 0)); }) == "NearBranchPoint");
}

TEST_CASE("fiber points satisfy the multiplication table") {
    for (const auto& name : fixture_names()) {
        auto C = fixture(name, fixture_default_params(name));
        cplx x0(0.37, 0.21);
        auto F = fiber(C, x0);
        CHECK(F.size() == C.rank());
        for (const auto& P : F)
            for (std::size_t i = 0; i < C.rank(); ++i)
                for (std::size_t j = 0; j < C.rank(); ++j) {
                    cplx lhs = P.basis[i] * P.basis[j], rhs = 0;
                    for (std::size_t k = 0; k < C.rank(); ++k) rhs += C.table()[i][j][k].eval(x0) * P.basis[k];
                    CHECK(std::abs(lhs - rhs) < 1e-8 * (1 + std::abs(lhs)));
                }
    }
}

TEST_CASE("indicator and trace consistency on fixtures") {
    std::mt19937_64 rng(11);
    for (const auto& name : fixture_names()) {
        auto C = fixture(name, fixture_default_params(name));
        auto K = annihilator_solve(C);
        auto pts = generic_points(C, 4, rng);
        REQUIRE(pts.size() == 4);
        for (const auto& q : pts) {
            cplx x0(to_double(q), 0);
            auto R = indicator_test(C, K, x0);
            CHECK(R.max_error < 1e-8);
            for (std::size_t i = 0; i < C.rank(); ++i) {
                auto T = trace_consistency(C, x0, C.basis(i));
                CHECK(T.rel_error < 1e-8);
            }
            auto T = trace_consistency(C, x0, K.hX);
            CHECK(std::abs(T.exact - C.std_trace(K.hX).eval(x0)) < 1e-9 * (1 + std::abs(T.exact)));
        }
    }
}

TEST_CASE("indicator rejects a wrong trace element") {
    auto C = elliptic();
    auto K = annihilator_solve(C);
    K.htilde = Poly(2) * K.htilde;
    CHECK(kind_of([&] { indicator_test(C, K, cplx(2, 0)); }) == "ToleranceExceeded");
}

TEST_CASE("branch report matches the discriminant degree") {
    auto E = branch_report(elliptic());
    CHECK(E.det_degree == 3);
    CHECK(E.expected_degree == 3);
    CHECK(E.total_deficiency == 3);
    CHECK(E.consistent);
    for (const auto& name : fixture_names()) {
        auto C = fixture(name, fixture_default_params(name));
        auto B = branch_report(C);
        const auto& H = C.H();
        CHECK(B.expected_degree == 2 * H.genus() + H.r() - 1);
        CHECK(B.det_degree == B.expected_degree);
        CHECK(B.consistent);
        int mult = 0;
        for (const auto& cl : B.clusters) {
            mult += cl.multiplicity;
            CHECK(cl.deficiency == static_cast<int>(C.rank()) - cl.distinct_points);
        }
        CHECK(mult == B.det_degree);
    }
}
