#include "wcurve/error.hpp"
#include "wcurve/report.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

using namespace wcurve;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
    void note(const std::string& s) {
        if (!detail.empty()) detail += "; ";
        detail += s;
    }
};

int failures = 0;

void criterion(int n, const std::string& title, const std::function<void(Outcome&)>& body) {
    Outcome o;
    auto t0 = Clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
    }
    char head[96];
    std::snprintf(head, sizeof head, "%s %2d  %-28s [%.2fs]", o.pass ? "PASS" : "FAIL", n, title.c_str(),
                  seconds_since(t0));
    std::printf("%s  %s\n", head, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
}

std::string join(const std::vector<i64>& v) {
    std::ostringstream s;
    for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
    return s.str();
}

Poly lin(const Params& p, std::initializer_list<int> idx) {
    std::vector<Rat> roots;
    for (int i : idx) roots.push_back(p.at("b" + std::to_string(i)));
    return Poly::from_roots(roots);
}

std::vector<CurveAlgebra> default_fixtures() {
    std::vector<CurveAlgebra> v;
    for (const auto& n : fixture_names()) v.push_back(fixture(n, fixture_default_params(n)));
    return v;
}

std::string fixture_label(const CurveAlgebra& C) { return "<" + join(C.H().generators()) + ">"; }

CurveAlgebra random_plane(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> rd(2, 4);
    for (;;) {
        i64 r = rd(rng);
        std::uniform_int_distribution<int> sd(static_cast<int>(r) + 1, 9);
        i64 s = sd(rng);
        if (std::gcd(r, s) == 1) return random_plane_curve(r, s, rng);
    }
}

AlgebraElement plane_fy(const CurveAlgebra& C) {
    const auto& f = *C.plane_equation();
    AlgebraElement v(C.rank());
    for (std::size_t k = 1; k < f.size(); ++k) {
        AlgebraElement term = C.scale(f[k] * Poly(static_cast<long>(k)), C.unit());
        for (std::size_t p = 1; p < k; ++p) term = C.mult(term, C.basis(1));
        v = C.add(v, term);
    }
    return v;
}

}  // namespace

int main() {
    criterion(1, "gap sequences", [](Outcome& o) {
        auto t0 = Clock::now();
        struct Case {
            std::vector<i64> g, gaps;
        };
        std::vector<Case> cases = {{{3, 7, 8}, {1, 2, 4, 5}},
                                   {{5, 7, 11}, {1, 2, 3, 4, 6, 8, 9, 13}},
                                   {{6, 13, 14, 15, 16}, {1, 2, 3, 4, 5, 7, 8, 9, 10, 11, 17, 23}}};
        for (auto& c : cases) {
            auto got = NumericalSemigroup(c.g).gaps();
            if (got != c.gaps) o.fail("<" + join(c.g) + "> gave {" + join(got) + "}");
        }
        double dt = seconds_since(t0);
        if (dt >= 0.1) o.fail("took " + std::to_string(dt) + " s");
        o.note("3 exact matches");
    });

    criterion(2, "Schubert indices", [](Outcome& o) {
        auto a = NumericalSemigroup({3, 7, 8}).schubert_index();
        auto b = NumericalSemigroup({6, 13, 14, 15, 16}).schubert_index();
        if (a != std::vector<i64>{0, 0, 1, 1}) o.fail("<3,7,8>: " + join(a));
        if (b != std::vector<i64>{0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 6, 11}) o.fail("sextic: " + join(b));
        o.note("(" + join(a) + ") and (" + join(b) + ")");
    });

    criterion(3, "monomial trace tables", [](Outcome& o) {
        auto T1 = MonomialRing(NumericalSemigroup({4, 6, 7, 9})).trace_monomials(13);
        if (NumericalSemigroup({4, 6, 7, 9}).minimal_trace_degree() != 13) o.fail("<4,6,7,9> minimal degree");
        if (T1.ehat != std::vector<i64>{13, 7, 6, 4}) o.fail("<4,6,7,9> ehat " + join(T1.ehat));
        NumericalSemigroup S({6, 13, 14, 15, 16});
        auto T2 = MonomialRing(S).trace_monomials(S.minimal_trace_degree());
        if (T2.d_h != 29 || T2.ehat != std::vector<i64>{29, 16, 15, 14, 13, 0}) o.fail("sextic ehat " + join(T2.ehat));

        NumericalSemigroup H({5, 7, 11, 13});
        auto T3 = MonomialRing(H).trace_monomials(25);
        std::vector<std::string> expect = {"Z5^5 (x) 1", "Z5*Z13 (x) Z7'", "Z7^2 (x) Z11'", "Z5*Z7 (x) Z13'",
                                           "Z11 (x) Z7'^2"};
        for (std::size_t i = 0; i < expect.size(); ++i) {
            const auto& tm = T3.monomials[i];
            std::string got = tm.left.str(H.generators()) + " (x) " + tm.right_monomial.str(H.generators(), "'");
            if (got != expect[i]) o.fail("d=25 monomial " + std::to_string(i) + ": " + got);
        }
        auto rep = semigroup_report({5, 7, 11, 13}, std::nullopt);
        if (rep.json["minimal_trace_degree"] != 24) o.fail("minimal degree for <5,7,11,13> is not 24");
        if (!rep.json.contains("note") || rep.text.find("note:") == std::string::npos)
            o.fail("no discrepancy note for <5,7,11,13>");
        o.note("<5,7,11,13>: minimal 24 with note, --dh 25 table matches");
    });

    criterion(4, "curve-level h_X", [](Outcome& o) {
        std::mt19937_64 rng(2718);
        for (const auto& name : fixture_names()) {
            std::vector<Params> sets{fixture_default_params(name)};
            for (int i = 0; i < 3; ++i) sets.push_back(fixture_random_params(name, rng));
            int ok = 0;
            double worst = 0;
            std::string why;
            for (const auto& P : sets) {
                auto C = fixture(name, P);
                auto t0 = Clock::now();
                try {
                    if (name == "trigonal378") {
                        auto K = annihilator_solve(C, 24);
                        Poly want = Poly(3) * lin(P, {1, 2}) * lin(P, {3, 4, 5}).pow(2);
                        if (K.hX == C.scalar(want)) ++ok;
                        else why = "hX differs";
                    } else if (name == "pentagonal") {
                        auto K = annihilator_solve(C);
                        if (K.d_h == 25 && K.hX == C.scalar(Poly(5) * lin(P, {1, 2}) * lin(P, {3, 4, 5}))) ++ok;
                        else why = "d_h " + std::to_string(K.d_h);
                    } else {
                        auto K = annihilator_solve(C);
                        if (K.d_h == 29 && K.hX == C.scale(Poly(6), C.mult(C.basis(1), C.basis(4)))) ++ok;
                        else why = "d_h " + std::to_string(K.d_h);
                    }
                } catch (const Error& e) {
                    why = e.kind();
                    if (name == "trigonal378") {
                        // Any trace element with this hX has coefficient matrix hX T^{-1}.
                        Poly want = Poly(3) * lin(P, {1, 2}) * lin(P, {3, 4, 5}).pow(2);
                        PolyMatrix T = C.trace_form(), A = adjugate(T);
                        Poly D = determinant(T);
                        bool integral = true;
                        for (std::size_t i = 0; i < C.rank(); ++i)
                            for (std::size_t j = 0; j < C.rank(); ++j)
                                if (!divides(D, want * A(i, j))) integral = false;
                        if (!integral) why += " at 24, 3k2k3^2 T^-1 not polynomial";
                    }
                }
                worst = std::max(worst, seconds_since(t0));
            }
            if (worst >= 60) o.fail(name + " solve took " + std::to_string(worst) + " s");
            if (ok != static_cast<int>(sets.size())) {
                std::string extra;
                if (name == "trigonal378") {
                    auto K = annihilator_solve(fixture(name, sets[0]));
                    extra = " (minimal annihilator is at d_h = " + std::to_string(K.d_h) + ")";
                }
                o.fail(name + ": " + std::to_string(ok) + "/" + std::to_string(sets.size()) + " sets, " + why + extra);
            } else {
                o.note(name + " " + std::to_string(ok) + "/" + std::to_string(sets.size()));
            }
        }
    });

    criterion(5, "plane curves (m = 2)", [](Outcome& o) {
        std::mt19937_64 rng(1414);
        int ok = 0;
        for (int i = 0; i < 10; ++i) {
            auto C = random_plane(rng);
            auto K = annihilator_solve(C);
            if (K.htilde == C.divided_difference(2) && K.hX == plane_fy(C)) ++ok;
            else o.fail("r=" + std::to_string(C.rank()) + " s=" + std::to_string(C.plane_s()));
        }
        o.note(std::to_string(ok) + "/10 exact");
    });

    criterion(6, "duality matrix", [](Outcome& o) {
        for (const auto& C : default_fixtures()) {
            auto K = annihilator_solve(C);
            auto D = duality_matrix(C, K, K.upsilon);
            for (std::size_t i = 0; i < D.size(); ++i)
                for (std::size_t j = 0; j < D.size(); ++j)
                    if (D[i][j] != (i == j ? 1 : 0)) o.fail(fixture_label(C) + " entry " + std::to_string(i) + "," +
                                                            std::to_string(j));
        }
        o.note("identity on 3 fixtures");
    });

    criterion(7, "identity suite", [](Outcome& o) {
        std::mt19937_64 rng(1732);
        auto curves = default_fixtures();
        for (int i = 0; i < 20; ++i) curves.push_back(random_plane(rng));
        for (const auto& C : curves) {
            auto K = annihilator_solve(C);
            auto I = invariants_report(C, K);
            const auto& H = C.H();
            bool good = I.kX == K.d_h - 2 * H.genus() - H.r() + 1 && I.c_hat == 2 * H.genus() &&
                        I.c_X == H.standard_basis().e.back() - H.r() + 1 && (I.kX == 0) == H.is_symmetric() &&
                        I.failures.empty();
            if (!good) o.fail(fixture_label(C));
        }
        o.note(std::to_string(curves.size()) + " curves");
    });

    criterion(8, "differential gap theorem", [](Outcome& o) {
        for (const auto& C : default_fixtures()) {
            auto K = annihilator_solve(C);
            for (const auto& f : gap_theorem_failures(C, K)) o.fail(fixture_label(C) + ": " + f);
        }
        auto C = fixture("pentagonal", fixture_default_params("pentagonal"));
        auto K = annihilator_solve(C);
        auto B = differential_basis(C, K, 8);
        Poly x = Poly::x();
        std::vector<AlgebraElement> phi = {C.basis(1),           C.basis(2),
                                           C.scale(x, C.basis(1)), C.basis(3),
                                           C.scale(x, C.basis(2)), C.scale(x * x, C.basis(1)),
                                           C.basis(4),           C.scale(x, C.basis(3))};
        for (std::size_t n = 0; n < phi.size(); ++n)
            if (n >= B.entries.size() || B.entries[n].numerator != phi[n])
                o.fail("pentagonal numerator " + std::to_string(n));
        o.note("3 fixtures, pentagonal numerators y,w,xy,y^2,xw,x^2y,yw,xy^2");
    });

    criterion(9, "series at infinity", [](Outcome& o) {
        for (const auto& C : default_fixtures()) {
            auto K = annihilator_solve(C);
            K.yhat = yhat_family(C, K, YhatMode::Truncated);
            auto X = expand_at_infinity(C, K);
            const auto& H = C.H();
            if (X.precision != static_cast<std::size_t>(H.conductor() + 2 * H.genus() + H.r()))
                o.fail(fixture_label(C) + " precision");
            if (!X.relations_ok || !X.gauge_ok) o.fail(fixture_label(C) + " relations");
            for (const auto& f : expansion_failures(C, X)) o.fail(fixture_label(C) + ": " + f);
            for (std::size_t n = 0; n < static_cast<std::size_t>(H.genus()); ++n)
                if (X.nu[n].normalized.val() != H.gap(H.genus() - 1 - n) - 1 || X.nu[n].normalized.lc() != 1)
                    o.fail(fixture_label(C) + " nu" + std::to_string(n + 1));
        }
        o.note("order c+2g+r, leading coefficients 1");
    });

    criterion(10, "numerical indicator", [](Outcome& o) {
        std::mt19937_64 rng(577);
        NumericOptions opt;
        for (const auto& C : default_fixtures()) {
            auto t0 = Clock::now();
            auto K = annihilator_solve(C);
            double ind = 0, tr = 0;
            for (const auto& q : generic_points(C, 10, rng, opt)) {
                cplx x0(to_double(q), 0);
                ind = std::max(ind, indicator_matrix(C, K, x0, opt).max_error);
                for (std::size_t i = 0; i < C.rank(); ++i)
                    tr = std::max(tr, trace_consistency(C, x0, C.basis(i), opt).rel_error);
                tr = std::max(tr, trace_consistency(C, x0, K.hX, opt).rel_error);
            }
            double dt = seconds_since(t0);
            if (ind >= 1e-8) o.fail(fixture_label(C) + " indicator " + std::to_string(ind));
            if (tr >= 1e-8) o.fail(fixture_label(C) + " trace " + std::to_string(tr));
            if (dt >= 10) o.fail(fixture_label(C) + " took " + std::to_string(dt) + " s");
            char buf[96];
            std::snprintf(buf, sizeof buf, "%s ind %.1e tr %.1e", fixture_label(C).c_str(), ind, tr);
            o.note(buf);
        }
    });

    criterion(11, "trace-form degree", [](Outcome& o) {
        std::mt19937_64 rng(1618);
        auto curves = default_fixtures();
        std::string degs;
        for (const auto& C : curves) degs += (degs.empty() ? "" : ",") + std::to_string(determinant(C.trace_form()).deg());
        for (int i = 0; i < 10; ++i) curves.push_back(random_plane(rng));
        for (const auto& C : curves) {
            const auto& H = C.H();
            int d = determinant(C.trace_form()).deg();
            if (d != 2 * H.genus() + H.r() - 1) o.fail(fixture_label(C) + " deg " + std::to_string(d));
        }
        o.note("fixtures " + degs + " = 2g+r-1; 10 plane curves");
    });

    std::printf("%d of 11 criteria failed\n", failures);
    return failures ? 1 : 0;
}
