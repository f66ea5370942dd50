#include "tmdim/rational.hpp"

#include <cctype>

#include "tmdim/errors.hpp"

namespace tmdim {

namespace {

bool valid_integer(const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_integer(num, true) || !valid_integer(den, false))
        throw ParseError("not a rational number: '" + text + "'");
    if (num[0] == '+') num.erase(0, 1);
    mpz_class d(den);
    if (d == 0) throw ParseError("zero denominator in '" + text + "'");
    Rational q(mpz_class(num), d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace tmdim
