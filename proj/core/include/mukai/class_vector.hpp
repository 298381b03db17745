#pragma once

#include "mukai/ints.hpp"

#include <array>
#include <compare>
#include <string>
#include <vector>

namespace mukai {

// Element of the rank-10 even unimodular lattice H | -E8 in the fixed basis
// (sigma, f, e1..e8). Coordinates are exact integers.
struct ClassVector {
    std::array<Int, 10> c{};

    ClassVector() = default;
    explicit ClassVector(std::array<Int, 10> coords) : c(coords) {}

    Int& operator[](std::size_t i) { return c[i]; }
    Int operator[](std::size_t i) const { return c[i]; }

    // named coordinates
    Int sigma() const { return c[0]; }
    Int f() const { return c[1]; }
    Int e(int i) const { return c[std::size_t(1 + i)]; } // i in 1..8

    bool is_zero() const {
        for (Int v : c)
            if (v != 0) return false;
        return true;
    }

    // true if all coordinates sit in the -E8 block
    bool in_e8_block() const { return c[0] == 0 && c[1] == 0; }

    ClassVector& operator+=(const ClassVector& o) {
        for (int i = 0; i < 10; ++i) c[std::size_t(i)] += o.c[std::size_t(i)];
        return *this;
    }
    ClassVector& operator-=(const ClassVector& o) {
        for (int i = 0; i < 10; ++i) c[std::size_t(i)] -= o.c[std::size_t(i)];
        return *this;
    }
    friend ClassVector operator+(ClassVector a, const ClassVector& b) { return a += b; }
    friend ClassVector operator-(ClassVector a, const ClassVector& b) { return a -= b; }
    friend ClassVector operator-(const ClassVector& a) {
        ClassVector r;
        for (int i = 0; i < 10; ++i) r.c[std::size_t(i)] = -a.c[std::size_t(i)];
        return r;
    }
    friend ClassVector operator*(Int k, const ClassVector& a) {
        ClassVector r;
        for (int i = 0; i < 10; ++i) r.c[std::size_t(i)] = k * a.c[std::size_t(i)];
        return r;
    }
    friend bool operator==(const ClassVector& a, const ClassVector& b) { return a.c == b.c; }
    friend auto operator<=>(const ClassVector& a, const ClassVector& b) { return a.c <=> b.c; }
};

// basis vectors
ClassVector cv_sigma();
ClassVector cv_f();
ClassVector cv_e(int i); // i in 1..8
// a*sigma + b*f
ClassVector cv_hyp(Int a, Int b);

using Mat10 = std::array<std::array<Int, 10>, 10>;

// The fixed Gram matrix: hyperbolic block [[0,1],[1,0]] on (sigma,f) and the
// negated E8 Cartan matrix on (e1..e8). The E8 Dynkin labeling is Bourbaki's:
// node 2 attaches to node 4 of the chain 1-3-4-5-6-7-8, so the adjacent pairs
// are {1,3},{3,4},{2,4},{4,5},{5,6},{6,7},{7,8}. In particular (e2,e3) = 0.
const Mat10& gram_matrix();

Int inner(const ClassVector& x, const ClassVector& y);
Int norm(const ClassVector& x); // inner(x,x), always even

// gcd of all ten coordinates; 0 iff x = 0
Int content(const ClassVector& x);
inline bool is_primitive_class(const ClassVector& x) { return content(x) == 1; }

// divide all coordinates by d (throws if not divisible)
ClassVector divide_exact(const ClassVector& x, Int d);

// hyperbolic metric between rays of the positive cone; diagnostic only,
// never used in an exact decision
double hyperbolic_distance(const ClassVector& h1, const ClassVector& h2);

std::string format_class(const ClassVector& x); // "[a0,...,a9]"
ClassVector parse_class(const std::string& text);

} // namespace mukai
