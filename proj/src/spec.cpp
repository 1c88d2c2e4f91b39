#include "wcurve/spec.hpp"

#include "wcurve/error.hpp"

#include "json.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace wcurve {

using nlohmann::json;

namespace {

class PolyParser {
public:
    explicit PolyParser(const std::string& s) : s_(s) {}

    Poly parse() {
        Poly p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw Error("ParseError", "polynomial '" + s_ + "' at " + std::to_string(pos_) + ": " + why);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly expr() {
        Poly acc;
        bool neg = eat('-');
        if (!neg) eat('+');
        acc = term();
        if (neg) acc = -acc;
        for (;;) {
            if (eat('+')) acc += term();
            else if (eat('-')) acc -= term();
            else return acc;
        }
    }

    Poly term() {
        Poly acc = power();
        for (;;) {
            if (eat('*')) {
                acc *= power();
            } else if (eat('/')) {
                Poly d = power();
                if (!d.is_constant() || d.is_zero()) fail("division only by nonzero constants");
                acc = Poly(Rat(1 / d.coeff(0))) * acc;
            } else {
                skip();
                // Implicit product: "2x", "3(x-1)".
                if (pos_ < s_.size() && (s_[pos_] == 'x' || s_[pos_] == '(')) acc *= power();
                else return acc;
            }
        }
    }

    Poly power() {
        Poly b = atom();
        if (eat('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            b = b.pow(static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start))));
        }
        return b;
    }

    Poly atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (c == 'x') {
            ++pos_;
            return Poly::x();
        }
        if (c == '-') {
            ++pos_;
            return -power();
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
            return Poly(parse_rat(s_.substr(start, pos_ - start)));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

Rat json_rat(const json& v, const std::string& where) {
    if (v.is_string()) return parse_rat(v.get<std::string>());
    if (v.is_number_integer()) return Rat(v.get<long>());
    throw Error("ParseError", where + ": expected an integer or a rational string");
}

std::string rat_json(const Rat& q) { return q.get_str(); }

std::pair<std::size_t, std::size_t> parse_key(const std::string& k) {
    auto comma = k.find(',');
    if (comma == std::string::npos) throw Error("ParseError", "product key '" + k + "' must look like \"i,j\"");
    std::size_t i = std::stoul(k.substr(0, comma)), j = std::stoul(k.substr(comma + 1));
    if (i > j) std::swap(i, j);
    return {i, j};
}

template <class F>
auto guarded(const std::string& where, F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw Error("ParseError", where + ": " + e.what());
    }
}

}  // namespace

Poly parse_poly(const std::string& text) { return PolyParser(text).parse(); }

CurveSpec parse_spec(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error("ParseError", std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw Error("ParseError", "spec must be a JSON object");

    CurveSpec s;
    return guarded("spec", [&] {
        if (j.contains("semigroup")) s.generators = j.at("semigroup").at("generators").get<std::vector<i64>>();
        s.kind = j.at("kind").get<std::string>();

        if (s.kind == "fixture") {
            const auto& f = j.at("fixture");
            s.fixture_name = f.at("name").get<std::string>();
            if (f.contains("params"))
                for (const auto& [k, v] : f.at("params").items()) s.params[k] = json_rat(v, "fixture.params." + k);
            else
                s.params = fixture_default_params(s.fixture_name);
        } else if (s.kind == "plane") {
            const auto& p = j.at("plane");
            s.plane_r = p.at("r").get<i64>();
            s.plane_s = p.at("s").get<i64>();
            for (const auto& a : p.at("A")) s.plane_A.push_back(parse_poly(a.get<std::string>()));
        } else if (s.kind == "table") {
            if (s.generators.empty()) throw Error("ParseError", "table specs need semigroup.generators");
            const auto& t = j.at("table");
            if (t.contains("basis")) s.basis_names = t.at("basis").get<std::vector<std::string>>();
            for (const auto& [k, v] : t.at("products").items()) {
                std::vector<Poly> row;
                for (const auto& e : v) row.push_back(parse_poly(e.get<std::string>()));
                s.products[parse_key(k)] = row;
            }
        } else {
            throw Error("ParseError", "kind must be fixture, plane or table (got '" + s.kind + "')");
        }

        if (j.contains("options")) {
            const auto& o = j.at("options");
            if (o.contains("dh_override") && !o.at("dh_override").is_null())
                s.options.dh_override = o.at("dh_override").get<i64>();
            if (o.contains("series_order") && !o.at("series_order").is_null())
                s.options.series_order = o.at("series_order").get<std::size_t>();
            if (o.contains("tolerance")) s.options.tolerance = o.at("tolerance").get<double>();
            if (o.contains("seed")) s.options.seed = o.at("seed").get<std::uint64_t>();
        }
        return s;
    });
}

CurveSpec load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("IoError", "cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_spec(ss.str());
}

std::string emit_spec(const CurveSpec& s) {
    json j;
    if (!s.generators.empty()) j["semigroup"]["generators"] = s.generators;
    j["kind"] = s.kind;
    if (s.kind == "fixture") {
        j["fixture"]["name"] = s.fixture_name;
        json p = json::object();
        for (const auto& [k, v] : s.params) p[k] = rat_json(v);
        j["fixture"]["params"] = p;
    } else if (s.kind == "plane") {
        j["plane"]["r"] = s.plane_r;
        j["plane"]["s"] = s.plane_s;
        json a = json::array();
        for (const auto& p : s.plane_A) a.push_back(p.str("x"));
        j["plane"]["A"] = a;
    } else if (s.kind == "table") {
        if (!s.basis_names.empty()) j["table"]["basis"] = s.basis_names;
        json prods = json::object();
        for (const auto& [key, row] : s.products) {
            json r = json::array();
            for (const auto& p : row) r.push_back(p.str("x"));
            prods[std::to_string(key.first) + "," + std::to_string(key.second)] = r;
        }
        j["table"]["products"] = prods;
    }
    json o = json::object();
    if (s.options.dh_override) o["dh_override"] = *s.options.dh_override;
    if (s.options.series_order) o["series_order"] = *s.options.series_order;
    o["tolerance"] = s.options.tolerance;
    o["seed"] = s.options.seed;
    j["options"] = o;
    return j.dump(2) + "\n";
}

CurveSpec fixture_spec(const std::string& name) {
    CurveSpec s;
    s.kind = "fixture";
    s.fixture_name = name;
    s.params = fixture_default_params(name);
    s.generators = fixture(name, s.params).H().generators();
    return s;
}

namespace {

CurveAlgebra build_raw(const CurveSpec& s) {
    if (s.kind == "fixture") return fixture(s.fixture_name, s.params);
    if (s.kind == "plane") return CurveAlgebra::from_plane(s.plane_r, s.plane_s, s.plane_A);
    if (s.kind != "table") throw Error("ParseError", "unknown kind '" + s.kind + "'");

    NumericalSemigroup H(s.generators);
    const std::size_t r = static_cast<std::size_t>(H.r());
    MultTable T(r, std::vector<std::vector<Poly>>(r, std::vector<Poly>(r)));
    for (std::size_t j = 0; j < r; ++j) {
        T[0][j][j] = Poly(1);
        T[j][0][j] = Poly(1);
    }
    for (const auto& [key, row] : s.products) {
        auto [i, j] = key;
        if (i == 0 || j >= r) throw Error("ParseError", "product key out of range");
        if (row.size() != r) throw Error("ParseError", "each product needs exactly r coefficients");
        T[i][j] = row;
        T[j][i] = row;
    }
    CurveAlgebra C = CurveAlgebra::from_table(H, std::move(T));
    if (!s.basis_names.empty()) {
        if (s.basis_names.size() != r) throw Error("ParseError", "basis needs exactly r names");
        C.set_basis_names(s.basis_names);
    }
    return C;
}

}  // namespace

CurveAlgebra build_curve(const CurveSpec& s) {
    CurveAlgebra C = build_raw(s);
    if (!s.generators.empty() && NumericalSemigroup(s.generators).generators() != C.H().generators())
        throw Error("ParseError", "semigroup.generators does not match the curve");
    return C;
}

}  // namespace wcurve
