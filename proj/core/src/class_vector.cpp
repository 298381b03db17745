#include "mukai/class_vector.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace mukai {

ClassVector cv_sigma() {
    ClassVector v;
    v.c[0] = 1;
    return v;
}

ClassVector cv_f() {
    ClassVector v;
    v.c[1] = 1;
    return v;
}

ClassVector cv_e(int i) {
    if (i < 1 || i > 8) throw precondition_error("e-index out of range 1..8");
    ClassVector v;
    v.c[std::size_t(1 + i)] = 1;
    return v;
}

ClassVector cv_hyp(Int a, Int b) {
    ClassVector v;
    v.c[0] = a;
    v.c[1] = b;
    return v;
}

namespace {

Mat10 build_gram() {
    Mat10 g{};
    g[0][1] = g[1][0] = 1;
    for (int i = 2; i < 10; ++i) g[std::size_t(i)][std::size_t(i)] = -2;
    // Bourbaki adjacency on e-indices, shifted by +1 into coordinates
    const int adj[7][2] = {{1, 3}, {3, 4}, {2, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}};
    for (auto& p : adj) {
        std::size_t a = std::size_t(1 + p[0]), b = std::size_t(1 + p[1]);
        g[a][b] = g[b][a] = 1;
    }
    return g;
}

} // namespace

const Mat10& gram_matrix() {
    static const Mat10 g = build_gram();
    return g;
}

Int inner(const ClassVector& x, const ClassVector& y) {
    const Mat10& g = gram_matrix();
    Wide acc = 0;
    for (std::size_t i = 0; i < 10; ++i) {
        if (x.c[i] == 0) continue;
        Wide row = 0;
        for (std::size_t j = 0; j < 10; ++j) {
            if (g[i][j] != 0) row += Wide(g[i][j]) * y.c[j];
        }
        acc += Wide(x.c[i]) * row;
    }
    return checked_int(acc, "inner");
}

Int norm(const ClassVector& x) { return inner(x, x); }

Int content(const ClassVector& x) {
    Int g = 0;
    for (Int v : x.c) g = gcd_i(g, v);
    return g;
}

ClassVector divide_exact(const ClassVector& x, Int d) {
    if (d == 0) throw precondition_error("division by zero");
    ClassVector r;
    for (std::size_t i = 0; i < 10; ++i) {
        if (x.c[i] % d != 0) throw precondition_error("coordinates not divisible");
        r.c[i] = x.c[i] / d;
    }
    return r;
}

double hyperbolic_distance(const ClassVector& h1, const ClassVector& h2) {
    Int n1 = norm(h1), n2 = norm(h2), p = inner(h1, h2);
    if (n1 <= 0 || n2 <= 0 || p <= 0) throw precondition_error("not in positive cone");
    double z = double(p) / (std::sqrt(double(n1)) * std::sqrt(double(n2)));
    if (z < 1.0) z = 1.0; // proportional rays give z == 1 up to rounding
    return std::acosh(z);
}

std::string format_class(const ClassVector& x) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < 10; ++i) {
        if (i) os << ',';
        os << x.c[i];
    }
    os << ']';
    return os.str();
}

ClassVector parse_class(const std::string& text) {
    ClassVector v;
    std::size_t pos = text.find('[');
    if (pos == std::string::npos) throw precondition_error("class vector must look like [a0,...,a9]");
    ++pos;
    for (std::size_t i = 0; i < 10; ++i) {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',')) ++pos;
        std::size_t end = pos;
        while (end < text.size() && (text[end] == '-' || text[end] == '+' || std::isdigit((unsigned char)text[end])))
            ++end;
        if (end == pos) throw precondition_error("class vector needs 10 integer coordinates");
        v.c[i] = std::stoll(text.substr(pos, end - pos));
        pos = end;
    }
    while (pos < text.size() && (text[pos] == ' ')) ++pos;
    if (pos >= text.size() || text[pos] != ']')
        throw precondition_error("class vector needs exactly 10 coordinates");
    return v;
}

} // namespace mukai
