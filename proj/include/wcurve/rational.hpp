#pragma once

#include <gmpxx.h>

#include <string>

namespace wcurve {

using Rat = mpq_class;
using Int = mpz_class;

// Accepts "3", "-7/4", "0.25" style literals.
Rat parse_rat(const std::string& text);
std::string to_string(const Rat& q);
double to_double(const Rat& q);

}  // namespace wcurve
