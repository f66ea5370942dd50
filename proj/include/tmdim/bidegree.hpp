#pragma once

#include <algorithm>
#include <string>

namespace tmdim {

struct Bidegree {
    int m1 = 0;
    int m2 = 0;

    friend Bidegree operator+(Bidegree a, Bidegree b) { return {a.m1 + b.m1, a.m2 + b.m2}; }
    friend Bidegree operator-(Bidegree a, Bidegree b) { return {a.m1 - b.m1, a.m2 - b.m2}; }
    friend bool operator==(Bidegree a, Bidegree b) = default;
};

// componentwise partial order
inline bool leq(Bidegree a, Bidegree b) { return a.m1 <= b.m1 && a.m2 <= b.m2; }
inline bool comparable(Bidegree a, Bidegree b) { return leq(a, b) || leq(b, a); }
inline Bidegree bmax(Bidegree a, Bidegree b) { return {std::max(a.m1, b.m1), std::max(a.m2, b.m2)}; }
inline Bidegree bmin(Bidegree a, Bidegree b) { return {std::min(a.m1, b.m1), std::min(a.m2, b.m2)}; }

// lexicographic, used only for sorting containers
struct BidegreeLex {
    bool operator()(Bidegree a, Bidegree b) const {
        return a.m1 != b.m1 ? a.m1 < b.m1 : a.m2 < b.m2;
    }
};

inline std::string to_string(Bidegree b) {
    return "(" + std::to_string(b.m1) + "," + std::to_string(b.m2) + ")";
}

}  // namespace tmdim
