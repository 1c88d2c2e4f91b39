#include "wcurve/report.hpp"

#include "wcurve/error.hpp"
#include "wcurve/monomial.hpp"

#include <algorithm>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>

namespace wcurve {

using nlohmann::json;

namespace {

template <class T>
std::string join(const std::vector<T>& v, const std::string& sep = ", ") {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
    return os.str();
}

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s : s + std::string(w - s.size(), ' '); }

std::vector<std::string> element_strings(const CurveAlgebra& C, const std::vector<AlgebraElement>& v) {
    std::vector<std::string> out;
    for (const auto& e : v) out.push_back(C.element_str(e));
    return out;
}

}  // namespace

std::string young_ascii(const std::vector<i64>& rows) {
    // Longest row on top.
    std::vector<i64> sorted(rows.rbegin(), rows.rend());
    std::ostringstream os;
    for (i64 n : sorted) {
        for (i64 k = 0; k < n; ++k) os << "[]";
        os << "\n";
    }
    return os.str();
}

Report semigroup_report(const std::vector<i64>& generators, std::optional<i64> dh) {
    NumericalSemigroup H(generators);
    MonomialRing R(H);
    const i64 dmin = H.minimal_trace_degree();
    const i64 d = dh.value_or(dmin);
    auto T = R.trace_monomials(d);
    std::vector<i64> gens(H.generators().begin(), H.generators().end());

    Report rep;
    json& j = rep.json;
    j["generators"] = H.generators();
    j["gaps"] = H.gaps();
    j["genus"] = H.genus();
    j["conductor"] = H.conductor();
    j["frobenius"] = H.frobenius();
    j["standard_basis"] = H.standard_basis().e;
    j["symmetric"] = H.is_symmetric();
    j["schubert_index"] = H.schubert_index();
    j["young_diagram"] = H.young_diagram();
    j["minimal_trace_degree"] = dmin;
    auto valid = H.valid_trace_degrees(dmin + H.r() - 1);
    j["valid_trace_degrees"] = valid;
    json tj;
    tj["d_h"] = T.d_h;
    tj["ell"] = T.ell;
    tj["ehat"] = T.ehat;
    tj["delta"] = T.delta;
    tj["symmetric"] = T.symmetric;
    json mons = json::array();
    for (const auto& m : T.monomials)
        mons.push_back(m.left.str(gens) + " (x) " + m.right_monomial.str(gens, "'"));
    tj["monomials"] = mons;
    j["trace"] = tj;

    std::string note;
    if (!H.is_symmetric() && valid.size() > 1) {
        std::vector<i64> others(valid.begin() + 1, valid.end());
        note = "the monomial conditions also hold at d = " + join(others) +
               "; the curve-level d_h is fixed by the annihilator solve (force one with --dh)";
        j["note"] = note;
    }

    std::ostringstream os;
    os << "semigroup <" << join(H.generators()) << ">\n";
    os << "  r = " << H.r() << ", genus = " << H.genus() << ", conductor = " << H.conductor()
       << ", Frobenius = " << H.frobenius() << ", " << (H.is_symmetric() ? "symmetric" : "not symmetric") << "\n";
    os << "  gaps: {" << join(H.gaps()) << "}\n";
    os << "  standard basis e_i: " << join(H.standard_basis().e) << "\n";
    os << "  Schubert index: (" << join(H.schubert_index()) << ")\n";
    os << "  Young diagram:\n";
    std::istringstream yd(young_ascii(H.young_diagram()));
    for (std::string line; std::getline(yd, line);) os << "    " << line << "\n";
    os << "  minimal trace degree: " << dmin << "   valid below " << dmin + H.r() << ": " << join(valid) << "\n";
    os << "  trace monomials at d_h = " << T.d_h << " (ell = " << T.ell << ")\n";
    os << "    " << pad("i", 4) << pad("e_i", 6) << pad("ehat_i", 8) << pad("delta_i", 9) << "monomial\n";
    for (std::size_t i = 0; i < T.ehat.size(); ++i)
        os << "    " << pad(std::to_string(i), 4) << pad(std::to_string(H.standard_basis().e[i]), 6)
           << pad(std::to_string(T.ehat[i]), 8) << pad(std::to_string(T.delta[i]), 9) << mons[i].get<std::string>()
           << "\n";
    if (!note.empty()) os << "  note: " << note << "\n";
    rep.text = os.str();
    return rep;
}

Report check_report(const CurveAlgebra& C) {
    const auto& H = C.H();
    Report rep;
    std::ostringstream os;
    os << "table valid: semigroup <" << join(H.generators()) << ">, rank " << C.rank() << "\n";
    os << "  basis: " << join(C.basis_names()) << "  (weights " << join(C.weights()) << ")\n";
    json mp = json::array();
    for (std::size_t j = 2; j <= H.m(); ++j) {
        PolyPoly f = C.minimal_poly_of_generator(j);
        os << "  minimal polynomial of y" << H.generators()[j - 1] << ": degree " << f.size() - 1 << "\n";
        mp.push_back({{"generator", H.generators()[j - 1]}, {"degree", f.size() - 1}});
    }
    Poly D = determinant(C.trace_form());
    i64 expect = 2 * H.genus() + H.r() - 1;
    os << "  deg det T = " << D.deg() << " (2g + r - 1 = " << expect << ")\n";
    rep.ok = D.deg() == expect;
    rep.json = {{"valid", true},
                {"generators", H.generators()},
                {"rank", C.rank()},
                {"basis", C.basis_names()},
                {"weights", C.weights()},
                {"minimal_polynomials", mp},
                {"det_trace_form_degree", D.deg()},
                {"expected_degree", expect}};
    rep.text = os.str();
    return rep;
}

Report trace_report(const CurveAlgebra& C, const TraceKit& K) {
    const auto& H = C.H();
    Report rep;
    auto yhat = yhat_family(C, K, YhatMode::Truncated);
    auto inv = invariants_report(C, K);
    auto fails = verify_trace_kit(C, K);
    rep.ok = fails.empty() && inv.failures.empty();

    std::ostringstream os;
    os << "d_h = " << K.d_h << "   (tried " << join(K.tried_degrees) << ")\n";
    os << "h_X = " << C.element_str(K.hX) << "\n";
    os << "kX = " << K.kX << ", c_hat = " << inv.c_hat << ", c_X = " << inv.c_X << ", g = " << inv.genus
       << ", conductor = " << inv.conductor << ", " << (inv.symmetric ? "symmetric" : "not symmetric") << "\n";
    os << "  " << pad("i", 4) << pad("e_i", 6) << pad("ehat_i", 8) << "Upsilon_i  |  yhat_i\n";
    for (std::size_t i = 0; i < C.rank(); ++i)
        os << "  " << pad(std::to_string(i), 4) << pad(std::to_string(C.weights()[i]), 6)
           << pad(std::to_string(K.ehat[i]), 8) << C.element_str(K.upsilon[i]) << "  |  " << C.element_str(yhat[i])
           << "\n";
    if (H.is_symmetric())
        os << "complementary module: generated by 1/(" << C.element_str(K.hX) << ")\n";
    else
        os << "complementary module: generated by yhat_1..yhat_" << C.rank() - 1 << " over h_X\n";
    for (const auto& f : inv.failures) os << "identity failure: " << f << "\n";
    for (const auto& f : fails) os << "invariant failure: " << f << "\n";
    rep.text = os.str();

    json tb = json::array();
    for (std::size_t i = 0; i < C.rank(); ++i)
        for (std::size_t k = 0; k < C.rank(); ++k)
            if (!K.htilde(i, k).is_zero())
                tb.push_back({{"i", i}, {"j", k}, {"coefficient", K.htilde(i, k).str()}});
    rep.json = {{"d_h", K.d_h},
                {"tried_degrees", K.tried_degrees},
                {"hX", C.element_str(K.hX)},
                {"htilde", tb},
                {"upsilon", element_strings(C, K.upsilon)},
                {"yhat", element_strings(C, yhat)},
                {"ehat", K.ehat},
                {"delta", K.delta},
                {"ell", K.ell},
                {"kX", K.kX},
                {"c_hat", inv.c_hat},
                {"c_X", inv.c_X},
                {"genus", inv.genus},
                {"conductor", inv.conductor},
                {"symmetric", inv.symmetric},
                {"identity_failures", inv.failures},
                {"invariant_failures", fails}};
    return rep;
}

Report differentials_report(const CurveAlgebra& C, const TraceKit& K0, std::size_t count) {
    TraceKit K = K0;
    K.yhat = yhat_family(C, K, YhatMode::Truncated);
    const auto& H = C.H();
    if (count == 0) count = static_cast<std::size_t>(H.genus() + H.conductor());
    auto B = differential_basis(C, K, count);
    Report rep;
    auto fails = gap_theorem_failures(C, K);
    rep.ok = fails.empty();

    std::ostringstream os;
    os << "differentials x^k yhat_i dx / h_X, h_X = " << C.element_str(K.hX) << "\n";
    os << "  " << pad("n", 4) << pad("weight", 8) << pad("gap", 6) << "numerator\n";
    json rows = json::array();
    for (std::size_t n = 0; n < B.entries.size(); ++n) {
        const auto& e = B.entries[n];
        std::string num = C.element_str(e.numerator);
        os << "  " << pad(std::to_string(n + 1), 4) << pad(std::to_string(e.weight), 8) << pad(std::to_string(e.gap), 6)
           << num << (n + 1 == B.holomorphic_count ? "   <- last holomorphic" : "") << "\n";
        rows.push_back({{"k", e.k}, {"i", e.i}, {"weight", e.weight}, {"gap", e.gap}, {"numerator", num}});
    }
    for (const auto& f : fails) os << "gap theorem failure: " << f << "\n";
    rep.text = os.str();
    rep.json = {{"hX", C.element_str(K.hX)},
                {"entries", rows},
                {"gap_weights", B.gap_weights},
                {"holomorphic_count", B.holomorphic_count},
                {"failures", fails}};
    return rep;
}

Report expand_report(const CurveAlgebra& C, const TraceKit&, const Expansion& X) {
    Report rep;
    auto fails = expansion_failures(C, X);
    rep.ok = fails.empty();
    std::ostringstream os;
    os << "local parameter t = x^" << X.i_r << " / y" << X.s << "^" << X.i_s << ", precision " << X.precision << "\n";
    os << "  x = " << X.x.str() << "\n";
    auto names = C.basis_names();
    json basis = json::array();
    for (std::size_t k = 1; k < C.rank(); ++k) {
        os << "  " << names[k] << " = " << X.basis[k].str() << "\n";
        basis.push_back({{"name", names[k]}, {"series", X.basis[k].str("t", X.precision)}});
    }
    os << "relations " << (X.relations_ok ? "ok" : "FAILED") << ", gauge " << (X.gauge_ok ? "ok" : "FAILED") << "\n";
    json nus = json::array();
    std::size_t n = 0;
    for (const auto& d : X.nu) {
        if (d.entry.gap < 1) continue;
        ++n;
        os << "  nu_" << n << " = " << d.normalized.str() << " dt   (raw leading " << to_string(d.raw_lead)
           << ", expected exponent " << d.expected_exponent << ")\n";
        nus.push_back({{"index", n},
                       {"numerator", C.element_str(d.entry.numerator)},
                       {"expected_exponent", d.expected_exponent},
                       {"valuation", d.normalized.val()},
                       {"raw_leading", to_string(d.raw_lead)},
                       {"normalized", d.normalized.str("t", 8)}});
    }
    for (const auto& f : fails) os << "expansion failure: " << f << "\n";
    rep.text = os.str();
    json lead = json::array();
    for (const auto& q : X.leading) lead.push_back(to_string(q));
    rep.json = {{"s", X.s},     {"i_s", X.i_s},        {"i_r", X.i_r},         {"precision", X.precision},
                {"x", X.x.str("t", X.precision)},       {"basis", basis},       {"leading", lead},
                {"nu", nus},    {"relations_ok", X.relations_ok}, {"gauge_ok", X.gauge_ok}, {"failures", fails}};
    return rep;
}

std::vector<std::string> gap_theorem_failures(const CurveAlgebra& C, const TraceKit& K) {
    const auto& H = C.H();
    const std::size_t g = static_cast<std::size_t>(H.genus());
    const std::size_t c = static_cast<std::size_t>(H.conductor());
    auto B = differential_basis(C, K, g + c);
    std::vector<std::string> bad;
    if (B.holomorphic_count != g) bad.push_back("holomorphic count " + std::to_string(B.holomorphic_count) + " != g");
    std::set<i64> first(B.gap_weights.begin(), B.gap_weights.begin() + static_cast<long>(std::min(g, B.gap_weights.size())));
    std::set<i64> gaps(H.gaps().begin(), H.gaps().end());
    if (first != gaps) bad.push_back("first g gap weights differ from H^c");
    std::vector<i64> expected(H.gaps().rbegin(), H.gaps().rend());
    for (i64 k = 1; k <= static_cast<i64>(c); ++k) expected.push_back(-k);
    if (B.gap_weights != expected) bad.push_back("first g + c gap weights do not enumerate the gaps then -1..-c");
    return bad;
}

std::vector<std::string> expansion_failures(const CurveAlgebra& C, const Expansion& X) {
    std::vector<std::string> bad;
    if (!X.relations_ok) bad.push_back("table relations not satisfied to the truncation order");
    if (!X.gauge_ok) bad.push_back("gauge t = x^i_r / y_s^i_s not satisfied");
    const auto& gaps = C.H().gaps();
    std::size_t n = 0;
    for (const auto& d : X.nu) {
        if (d.entry.gap < 1) continue;
        // nu_n with n = 1..g expands as t^{N^c(g-n) - 1}.
        i64 expect = gaps[gaps.size() - 1 - n] - 1;
        ++n;
        if (!d.exponent_ok || d.normalized.val() != expect)
            bad.push_back("nu_" + std::to_string(n) + " has valuation " + std::to_string(d.normalized.val()) +
                          ", expected " + std::to_string(expect));
        if (d.normalized.lc() != 1) bad.push_back("nu_" + std::to_string(n) + " is not W-normalized");
        if (d.raw_lead != 1 && d.raw_lead != -1)
            bad.push_back("nu_" + std::to_string(n) + " raw leading coefficient " + to_string(d.raw_lead) + " is not a unit sign");
    }
    if (n != gaps.size()) bad.push_back("expected g holomorphic differentials");
    return bad;
}

std::vector<CheckLine> verify_battery(const CurveAlgebra& C, const TraceKit& K, const SpecOptions& opt) {
    const auto& H = C.H();
    std::vector<CheckLine> out;
    auto add = [&](const std::string& name, const std::vector<std::string>& fails) {
        out.push_back({name, fails.empty(), join(fails, "; ")});
    };
    auto guard = [&](const std::string& name, auto&& f) {
        try {
            add(name, f());
        } catch (const std::exception& e) {
            add(name, {e.what()});
        }
    };

    guard("trace kit invariants", [&] { return verify_trace_kit(C, K); });
    guard("identity suite", [&] { return invariants_report(C, K).failures; });
    guard("complementary module", [&] {
        std::vector<std::string> bad;
        for (const auto& f : complementary_module(C, K))
            if (!in_complementary_module(C, f.numerator, f.denominator)) bad.push_back("generator outside R^c");
        return bad;
    });
    guard("truncated yhat", [&] {
        std::vector<std::string> bad;
        auto y = yhat_family(C, K, YhatMode::Truncated);
        for (std::size_t i = 0; i < C.rank(); ++i)
            if (tau_htilde(C, K, y[i]) != Poly(i == 0 ? 1 : 0)) bad.push_back("tau(yhat_" + std::to_string(i) + ")");
        return bad;
    });
    guard("differential gap theorem", [&] {
        TraceKit K2 = K;
        K2.yhat = yhat_family(C, K, YhatMode::Truncated);
        return gap_theorem_failures(C, K2);
    });
    guard("expansion at infinity", [&] {
        TraceKit K2 = K;
        K2.yhat = yhat_family(C, K, YhatMode::Truncated);
        return expansion_failures(C, expand_at_infinity(C, K2, opt.series_order.value_or(0)));
    });
    guard("trace-form degree", [&] {
        std::vector<std::string> bad;
        Poly D = determinant(C.trace_form());
        if (D.deg() != 2 * H.genus() + H.r() - 1)
            bad.push_back("deg det T = " + std::to_string(D.deg()) + ", expected " + std::to_string(2 * H.genus() + H.r() - 1));
        return bad;
    });
    guard("numerical indicator and trace", [&] {
        std::vector<std::string> bad;
        std::mt19937_64 rng(opt.seed);
        NumericOptions no;
        no.tol = opt.tolerance;
        double worst = 0, worst_tr = 0;
        for (const Rat& x0 : generic_points(C, 10, rng, no)) {
            cplx z(to_double(x0), 0.0);
            worst = std::max(worst, indicator_matrix(C, K, z, no).max_error);
            for (std::size_t i = 0; i < C.rank(); ++i)
                worst_tr = std::max(worst_tr, trace_consistency(C, z, C.basis(i), no).rel_error);
        }
        if (!(worst < opt.tolerance)) bad.push_back("indicator error " + std::to_string(worst));
        if (!(worst_tr < opt.tolerance)) bad.push_back("trace error " + std::to_string(worst_tr));
        return bad;
    });
    return out;
}

Report verify_report(const CurveAlgebra& C, const TraceKit& K, const SpecOptions& opt) {
    Report rep;
    auto lines = verify_battery(C, K, opt);
    std::ostringstream os;
    json checks = json::array();
    for (const auto& l : lines) {
        os << (l.pass ? "PASS " : "FAIL ") << l.name << (l.detail.empty() ? "" : ": " + l.detail) << "\n";
        checks.push_back({{"name", l.name}, {"pass", l.pass}, {"detail", l.detail}});
        if (!l.pass) rep.ok = false;
    }
    auto B = branch_report(C);
    os << "branch report: deg det T = " << B.det_degree << ", fiber deficiency total = " << B.total_deficiency
       << " over " << B.clusters.size() << " branch values" << (B.consistent ? "" : " (not all simple)") << "\n";
    json cl = json::array();
    for (const auto& c : B.clusters)
        cl.push_back({{"re", c.x.real()}, {"im", c.x.imag()}, {"multiplicity", c.multiplicity},
                      {"distinct_points", c.distinct_points}, {"deficiency", c.deficiency}});
    rep.text = os.str();
    rep.json = {{"checks", checks},
                {"ok", rep.ok},
                {"branch", {{"det_degree", B.det_degree},
                            {"expected_degree", B.expected_degree},
                            {"total_deficiency", B.total_deficiency},
                            {"consistent", B.consistent},
                            {"clusters", cl}}}};
    return rep;
}

}  // namespace wcurve
