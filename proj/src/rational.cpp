#include "wcurve/rational.hpp"

#include "wcurve/error.hpp"

#include <cctype>

namespace wcurve {

Rat parse_rat(const std::string& raw) {
    std::string text;
    for (char ch : raw)
        if (!std::isspace(static_cast<unsigned char>(ch))) text += ch;
    if (text.empty()) throw Error("ParseError", "empty rational literal");

    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string frac = text.substr(dot + 1);
        std::string whole = text.substr(0, dot);
        bool neg = !whole.empty() && whole[0] == '-';
        if (neg || (!whole.empty() && whole[0] == '+')) whole = whole.substr(1);
        if (whole.empty()) whole = "0";
        for (char ch : whole + frac)
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                throw Error("ParseError", "bad rational literal '" + raw + "'");
        Int num(whole + frac, 10);
        Int den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
        Rat q(num, den);
        q.canonicalize();
        return neg ? Rat(-q) : q;
    }

    for (std::size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        bool ok = std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' ||
                  ((ch == '-' || ch == '+') && (i == 0 || text[i - 1] == '/'));
        if (!ok) throw Error("ParseError", "bad rational literal '" + raw + "'");
    }
    Rat q;
    if (text[0] == '+') text = text.substr(1);
    if (q.set_str(text, 10) != 0) throw Error("ParseError", "bad rational literal '" + raw + "'");
    if (q.get_den() == 0) throw Error("ParseError", "zero denominator in '" + raw + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rat& q) { return q.get_str(); }

double to_double(const Rat& q) { return q.get_d(); }

}  // namespace wcurve
