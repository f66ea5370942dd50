#pragma once

#include <gmpxx.h>

#include <string>

namespace tmdim {

// mpq_class keeps itself canonical after every arithmetic operation
using Rational = mpq_class;

Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

struct RationalLess {
    bool operator()(const Rational& a, const Rational& b) const { return cmp(a, b) < 0; }
};

}  // namespace tmdim
