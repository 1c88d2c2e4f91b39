#include "wcurve/curve.hpp"

#include "wcurve/error.hpp"

#include <set>

namespace wcurve {

namespace {

struct FixtureShape {
    std::vector<i64> generators;
    int nb, na;
};

const std::map<std::string, FixtureShape>& shapes() {
    static const std::map<std::string, FixtureShape> s = {
        {"trigonal378", {{3, 7, 8}, 7, 2}},
        {"pentagonal", {{5, 7, 11}, 5, 0}},
        {"sextic", {{6, 13, 14, 15, 16}, 7, 0}},
    };
    return s;
}

const FixtureShape& shape(const std::string& name) {
    auto it = shapes().find(name);
    if (it == shapes().end()) throw Error("UnknownFixture", "no fixture named '" + name + "'");
    return it->second;
}

Rat param(const Params& p, const std::string& key) {
    auto it = p.find(key);
    if (it == p.end()) throw Error("MissingParam", "fixture parameter '" + key + "' is missing");
    return it->second;
}

std::vector<Rat> bs(const Params& p, int n) {
    std::vector<Rat> b;
    std::set<Rat> seen;
    for (int i = 1; i <= n; ++i) {
        b.push_back(param(p, "b" + std::to_string(i)));
        if (!seen.insert(b.back()).second)
            throw Error("DuplicateBranchParam", "branch parameters b_i must be pairwise distinct");
    }
    return b;
}

Poly lin(const std::vector<Rat>& b, std::initializer_list<int> idx) {
    std::vector<Rat> roots;
    for (int i : idx) roots.push_back(b[i - 1]);
    return Poly::from_roots(roots);
}

MultTable empty_table(std::size_t r) {
    MultTable T(r, std::vector<std::vector<Poly>>(r, std::vector<Poly>(r)));
    for (std::size_t j = 0; j < r; ++j) {
        T[0][j][j] = Poly(1);
        T[j][0][j] = Poly(1);
    }
    return T;
}

void set(MultTable& T, std::size_t i, std::size_t j, std::vector<Poly> v) {
    v.resize(T.size());
    T[i][j] = v;
    T[j][i] = v;
}

}  // namespace

std::vector<std::string> fixture_names() {
    std::vector<std::string> n;
    for (const auto& kv : shapes()) n.push_back(kv.first);
    return n;
}

Params fixture_default_params(const std::string& name) {
    const auto& sh = shape(name);
    Params p;
    for (int i = 1; i <= sh.nb; ++i) p["b" + std::to_string(i)] = Rat(i);
    for (int i = 1; i <= sh.na; ++i) p["a" + std::to_string(i)] = Rat(1);
    return p;
}

Rat random_rational(std::mt19937_64& rng, long num_range, long den_max) {
    std::uniform_int_distribution<long> num(-num_range, num_range), den(1, den_max);
    Rat q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

Params fixture_random_params(const std::string& name, std::mt19937_64& rng) {
    const auto& sh = shape(name);
    Params p;
    std::set<Rat> used;
    for (int i = 1; i <= sh.nb; ++i) {
        Rat q;
        do q = random_rational(rng, 9, 3);
        while (!used.insert(q).second);
        p["b" + std::to_string(i)] = q;
    }
    for (int i = 1; i <= sh.na; ++i) {
        Rat q;
        do q = random_rational(rng, 5, 3);
        while (q == 0);
        p["a" + std::to_string(i)] = q;
    }
    return p;
}

CurveAlgebra fixture(const std::string& name, const Params& params) {
    const auto& sh = shape(name);
    NumericalSemigroup H(sh.generators);
    auto b = bs(params, sh.nb);
    MultTable T = empty_table(H.standard_basis().e.size());
    std::vector<std::string> names;

    if (name == "trigonal378") {
        // basis 1, y (7), w (8)
        Rat a1 = param(params, "a1"), a2 = param(params, "a2");
        Poly k2 = lin(b, {1, 2}), k3 = lin(b, {3, 4, 5}), kt2 = lin(b, {6, 7});
        set(T, 1, 1, {-(a2 * k2 * kt2), -(a1 * k2), -k2});
        set(T, 1, 2, {k2 * k3, Poly(), Poly()});
        set(T, 2, 2, {-(a1 * k2 * k3), -k3, -(a2 * kt2)});
        names = {"1", "y", "w"};
    } else if (name == "pentagonal") {
        // basis 1, y (7), w (11), y^2 (14), yw (18)
        Poly k2 = lin(b, {1, 2}), k3 = lin(b, {3, 4, 5});
        Poly one(1), z;
        set(T, 1, 1, {z, z, z, one, z});
        set(T, 1, 2, {z, z, z, z, one});
        set(T, 1, 3, {z, z, k2, z, z});
        set(T, 1, 4, {k2 * k3, z, z, z, z});
        set(T, 2, 2, {z, k3, z, z, z});
        set(T, 2, 3, {k2 * k3, z, z, z, z});
        set(T, 2, 4, {z, z, z, k3, z});
        set(T, 3, 3, {z, z, z, z, k2});
        set(T, 3, 4, {z, k2 * k3, z, z, z});
        set(T, 4, 4, {z, z, k2 * k3, z, z});
        names = {"1", "y", "w", "y^2", "y*w"};
    } else {
        // basis 1, y13, y14, y15, y16, Y29 = y13*y16
        Poly k3 = lin(b, {1, 2, 3}), k2 = lin(b, {4, 5}), kh2 = lin(b, {6, 7});
        Poly one(1), z;
        auto e = [&](std::size_t k, const Poly& c) {
            std::vector<Poly> v(6);
            v[k] = c;
            return v;
        };
        set(T, 1, 1, e(2, kh2));
        set(T, 1, 2, e(3, k2));
        set(T, 1, 3, e(4, kh2));
        set(T, 1, 4, e(5, one));
        set(T, 1, 5, e(0, kh2 * k2 * k3));
        set(T, 2, 2, e(4, k2));
        set(T, 2, 3, e(5, one));
        set(T, 2, 4, e(0, k2 * k3));
        set(T, 2, 5, e(1, k2 * k3));
        set(T, 3, 3, e(0, kh2 * k3));
        set(T, 3, 4, e(1, k3));
        set(T, 3, 5, e(2, kh2 * k3));
        set(T, 4, 4, e(2, k3));
        set(T, 4, 5, e(3, k2 * k3));
        set(T, 5, 5, e(4, k2 * k3 * kh2));
        names = {"1", "y13", "y14", "y15", "y16", "y13*y16"};
    }
    CurveAlgebra C = CurveAlgebra::from_table(H, std::move(T), params);
    C.set_basis_names(names);
    return C;
}

CurveAlgebra random_plane_curve(i64 r, i64 s, std::mt19937_64& rng) {
    std::vector<Poly> A;
    for (i64 i = 1; i <= r; ++i) {
        i64 bound = (i * s) / r;
        std::vector<Rat> c(static_cast<std::size_t>(bound) + 1);
        for (auto& q : c) q = random_rational(rng, 4, 2);
        if (i == r) c[static_cast<std::size_t>(s)] = -1;
        A.emplace_back(std::move(c));
    }
    return CurveAlgebra::from_plane(r, s, A);
}

}  // namespace wcurve
