#include "wcurve/poly.hpp"

#include "wcurve/error.hpp"

#include <sstream>

namespace wcurve {

namespace {
const Rat kZero(0);
}

Poly::Poly(const Rat& c) {
    if (c != 0) c_.push_back(c);
}

Poly::Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::x() { return monomial(1, 1); }

Poly Poly::monomial(const Rat& c, int k) {
    Poly p;
    if (c == 0) return p;
    p.c_.assign(k + 1, Rat(0));
    p.c_[k] = c;
    return p;
}

Poly Poly::from_roots(const std::vector<Rat>& roots) {
    Poly p(1);
    for (const Rat& r : roots) p *= Poly{Rat(-r), Rat(1)};
    return p;
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& Poly::operator[](int k) const {
    if (k < 0 || k > deg()) return kZero;
    return c_[k];
}

Rat Poly::coeff(int k) const { return (*this)[k]; }

Rat Poly::lc() const { return c_.empty() ? Rat(0) : c_.back(); }

Rat Poly::eval(const Rat& v) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
    return acc;
}

std::complex<double> Poly::eval(std::complex<double> v) const {
    std::complex<double> acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + it->get_d();
    return acc;
}

Poly Poly::derivative() const {
    std::vector<Rat> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * static_cast<long>(k));
    return Poly(std::move(d));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    Poly p = *this;
    Rat inv = 1 / lc();
    for (Rat& a : p.c_) a *= inv;
    return p;
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (Rat& a : p.c_) a = -a;
    return p;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> out(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::pow(unsigned e) const {
    Poly result(1), base = *this;
    while (e) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = deg(); k >= 0; --k) {
        Rat a = c_[k];
        if (a == 0) continue;
        bool neg = a < 0;
        if (neg) a = -a;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        bool unit = (a == 1);
        if (!unit || k == 0) {
            bool paren = a.get_den() != 1 && k > 0;
            os << (paren ? "(" : "") << a.get_str() << (paren ? ")" : "");
        }
        if (k > 0) {
            if (!unit) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error("DivisionByZeroPoly", "division by the zero polynomial");
    std::vector<Rat> rem = a.coeffs();
    int db = b.deg();
    if (a.deg() < db) return {Poly(), a};
    std::vector<Rat> q(a.deg() - db + 1, Rat(0));
    Rat inv = 1 / b.lc();
    for (int k = a.deg(); k >= db; --k) {
        if (rem[k] == 0) continue;
        Rat f = rem[k] * inv;
        q[k - db] = f;
        for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * b[j];
    }
    rem.resize(db);
    return {Poly(std::move(q)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero()) throw Error("NotDivisible", "(" + a.str() + ") is not divisible by (" + b.str() + ")");
    return q;
}

bool divides(const Poly& b, const Poly& a) {
    if (b.is_zero()) return a.is_zero();
    return poly_divmod(a, b).second.is_zero();
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f) {
    // Yun's algorithm (characteristic zero).
    std::vector<std::pair<Poly, int>> out;
    if (f.deg() < 1) return out;
    Poly df = f.derivative();
    Poly a = poly_gcd(f, df);
    Poly b = exact_div(f, a);
    Poly c = exact_div(df, a);
    Poly d = c - b.derivative();
    for (int i = 1; b.deg() > 0; ++i) {
        Poly g = poly_gcd(b, d);
        if (g.deg() > 0) out.emplace_back(g.monic(), i);
        b = exact_div(b, g);
        c = exact_div(d, g);
        d = c - b.derivative();
    }
    return out;
}

}  // namespace wcurve
