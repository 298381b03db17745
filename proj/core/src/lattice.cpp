#include "mukai/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>

namespace mukai {

namespace {

// small exact rational, Wide intermediates, always normalized with d > 0
struct Frac {
    Int n = 0, d = 1;
    Frac() = default;
    Frac(Int nn) : n(nn), d(1) {}
    Frac(Int nn, Int dd) { assign(nn, dd); }
    void assign(Wide nn, Wide dd) {
        if (dd == 0) throw invariant_violation("rational with zero denominator");
        if (dd < 0) { nn = -nn; dd = -dd; }
        Wide a = nn < 0 ? -nn : nn, b = dd;
        while (b) { Wide t = a % b; a = b; b = t; }
        if (a == 0) a = 1;
        n = checked_int(nn / a, "Frac");
        d = checked_int(dd / a, "Frac");
    }
    static Frac make(Wide nn, Wide dd) {
        Frac f;
        f.assign(nn, dd);
        return f;
    }
    friend Frac operator+(const Frac& a, const Frac& b) {
        return make(Wide(a.n) * b.d + Wide(b.n) * a.d, Wide(a.d) * b.d);
    }
    friend Frac operator-(const Frac& a, const Frac& b) {
        return make(Wide(a.n) * b.d - Wide(b.n) * a.d, Wide(a.d) * b.d);
    }
    friend Frac operator*(const Frac& a, const Frac& b) {
        return make(Wide(a.n) * b.n, Wide(a.d) * b.d);
    }
    friend Frac operator/(const Frac& a, const Frac& b) {
        if (b.n == 0) throw invariant_violation("rational division by zero");
        return make(Wide(a.n) * b.d, Wide(a.d) * b.n);
    }
    friend bool operator<(const Frac& a, const Frac& b) { return Wide(a.n) * b.d < Wide(b.n) * a.d; }
    friend bool operator<=(const Frac& a, const Frac& b) { return Wide(a.n) * b.d <= Wide(b.n) * a.d; }
    friend bool operator==(const Frac& a, const Frac& b) { return a.n == b.n && a.d == b.d; }
    bool negative() const { return n < 0; }
    double to_double() const { return double(n) / double(d); }
};

std::vector<Int> mat_vec(const std::vector<std::vector<Int>>& g, const std::vector<Int>& x) {
    std::vector<Int> r(g.size(), 0);
    for (std::size_t i = 0; i < g.size(); ++i) {
        Wide acc = 0;
        for (std::size_t j = 0; j < x.size(); ++j) acc += Wide(g[i][j]) * x[j];
        r[i] = checked_int(acc, "mat_vec");
    }
    return r;
}

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    Wide acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += Wide(a[i]) * b[i];
    return checked_int(acc, "dot");
}

// extended gcd with Bezout coefficients
Int ext_gcd(Int a, Int b, Int& x, Int& y) {
    Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        Int q = a / b;
        Int t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
        t = y0 - q * y1;
        y0 = y1;
        y1 = t;
    }
    if (a < 0) { a = -a; x0 = -x0; y0 = -y0; }
    x = x0;
    y = y0;
    return a;
}

} // namespace

ClassVector mat_apply(const Mat10& t, const ClassVector& x) {
    ClassVector r;
    for (std::size_t i = 0; i < 10; ++i) {
        Wide acc = 0;
        for (std::size_t j = 0; j < 10; ++j) acc += Wide(t[i][j]) * x.c[j];
        r.c[i] = checked_int(acc, "mat_apply");
    }
    return r;
}

Mat10 mat_mul(const Mat10& a, const Mat10& b) {
    Mat10 r{};
    for (std::size_t i = 0; i < 10; ++i)
        for (std::size_t j = 0; j < 10; ++j) {
            Wide acc = 0;
            for (std::size_t k = 0; k < 10; ++k) acc += Wide(a[i][k]) * b[k][j];
            r[i][j] = checked_int(acc, "mat_mul");
        }
    return r;
}

Int det10(const Mat10& t) {
    // fraction-free Bareiss
    std::array<std::array<Wide, 10>, 10> m;
    for (std::size_t i = 0; i < 10; ++i)
        for (std::size_t j = 0; j < 10; ++j) m[i][j] = t[i][j];
    Wide prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < 9; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < 10 && m[p][k] == 0) ++p;
            if (p == 10) return 0;
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < 10; ++i)
            for (std::size_t j = k + 1; j < 10; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return checked_int(sign * m[9][9], "det10");
}

bool is_isometry(const Mat10& t) {
    const Mat10& g = gram_matrix();
    // T^t G T == G
    Mat10 gt = mat_mul(g, t);
    for (std::size_t i = 0; i < 10; ++i)
        for (std::size_t j = 0; j < 10; ++j) {
            Wide acc = 0;
            for (std::size_t k = 0; k < 10; ++k) acc += Wide(t[k][i]) * gt[k][j];
            if (acc != Wide(g[i][j])) return false;
        }
    return true;
}

namespace {

Mat10 invert_unimodular(const Mat10& t) {
    // Gauss-Jordan over exact rationals; entries of the result must be integral
    std::array<std::array<Frac, 20>, 10> a;
    for (std::size_t i = 0; i < 10; ++i) {
        for (std::size_t j = 0; j < 10; ++j) a[i][j] = Frac(t[i][j]);
        for (std::size_t j = 10; j < 20; ++j) a[i][j] = Frac(i + 10 == j ? 1 : 0);
    }
    for (std::size_t col = 0; col < 10; ++col) {
        std::size_t piv = col;
        while (piv < 10 && a[piv][col].n == 0) ++piv;
        if (piv == 10) throw precondition_error("basis change not invertible");
        std::swap(a[piv], a[col]);
        Frac p = a[col][col];
        for (std::size_t j = 0; j < 20; ++j) a[col][j] = a[col][j] / p;
        for (std::size_t i = 0; i < 10; ++i) {
            if (i == col || a[i][col].n == 0) continue;
            Frac f = a[i][col];
            for (std::size_t j = 0; j < 20; ++j) a[i][j] = a[i][j] - f * a[col][j];
        }
    }
    Mat10 inv{};
    for (std::size_t i = 0; i < 10; ++i)
        for (std::size_t j = 0; j < 10; ++j) {
            if (a[i][j + 10].d != 1) throw precondition_error("basis change not unimodular");
            inv[i][j] = a[i][j + 10].n;
        }
    return inv;
}

} // namespace

BasisChange BasisChange::from_matrix(const Mat10& t, std::string name) {
    if (!is_isometry(t)) throw precondition_error("basis change does not preserve the Gram form");
    Int d = det10(t);
    if (d != 1 && d != -1) throw precondition_error("basis change must have determinant +-1");
    BasisChange bc;
    bc.T = t;
    bc.Tinv = invert_unimodular(t);
    bc.name = std::move(name);
    return bc;
}

BasisChange BasisChange::inverse() const {
    BasisChange bc;
    bc.T = Tinv;
    bc.Tinv = T;
    bc.name = name.empty() ? "" : name + "^-1";
    return bc;
}

ClassVector BasisChange::apply(const ClassVector& x) const { return mat_apply(T, x); }

BasisChange alternate_decomposition() {
    Mat10 t{};
    auto col = [&](std::size_t j, const ClassVector& v) {
        for (std::size_t i = 0; i < 10; ++i) t[i][j] = v.c[i];
    };
    ClassVector sigma = cv_sigma(), f = cv_f(), e1 = cv_e(1);
    col(0, sigma);
    col(1, sigma + f + e1);
    col(2, e1 + 2 * sigma);
    for (int i = 2; i <= 8; ++i) col(std::size_t(1 + i), cv_e(i) - inner(cv_e(i), e1) * sigma);
    return BasisChange::from_matrix(t, "alternate");
}

BasisChange swap_sigma_f() {
    Mat10 t{};
    t[0][1] = t[1][0] = 1;
    for (std::size_t i = 2; i < 10; ++i) t[i][i] = 1;
    return BasisChange::from_matrix(t, "swap");
}

BasisChange transvection(const ClassVector& w, const ClassVector& u) {
    if (norm(w) != 0) throw precondition_error("transvection axis must be isotropic");
    if (inner(w, u) != 0) throw precondition_error("transvection vector must be orthogonal to the axis");
    Int uu = norm(u) / 2;
    Mat10 t{};
    for (int j = 0; j < 10; ++j) {
        ClassVector b;
        b.c[std::size_t(j)] = 1;
        ClassVector img = b + inner(b, u) * w - inner(b, w) * u - (uu * inner(b, w)) * w;
        for (std::size_t i = 0; i < 10; ++i) t[i][std::size_t(j)] = img.c[i];
    }
    return BasisChange::from_matrix(t);
}

BasisChange transvection_sigma(const ClassVector& eta) { return transvection(cv_sigma(), eta); }
BasisChange transvection_f(const ClassVector& eta) { return transvection(cv_f(), eta); }

ClassVector NegDefSublattice::to_ambient(const std::vector<Int>& coords) const {
    if (coords.size() != basis.size()) throw precondition_error("coordinate size mismatch");
    ClassVector r;
    for (std::size_t i = 0; i < basis.size(); ++i) r += coords[i] * basis[i];
    return r;
}

std::optional<std::vector<Int>> NegDefSublattice::coordinates(const ClassVector& x) const {
    // gram is invertible (negative definite): coords solve gram * z = pairings
    const int k = rank();
    std::vector<Int> rhs(std::size_t(k), 0);
    for (int i = 0; i < k; ++i) rhs[std::size_t(i)] = inner(basis[std::size_t(i)], x);
    std::vector<std::vector<Frac>> a(std::size_t(k), std::vector<Frac>(std::size_t(k + 1)));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) a[std::size_t(i)][std::size_t(j)] = Frac(gram[std::size_t(i)][std::size_t(j)]);
        a[std::size_t(i)][std::size_t(k)] = Frac(rhs[std::size_t(i)]);
    }
    for (int col = 0; col < k; ++col) {
        int piv = col;
        while (piv < k && a[std::size_t(piv)][std::size_t(col)].n == 0) ++piv;
        if (piv == k) return std::nullopt;
        std::swap(a[std::size_t(piv)], a[std::size_t(col)]);
        Frac p = a[std::size_t(col)][std::size_t(col)];
        for (int j = 0; j <= k; ++j) a[std::size_t(col)][std::size_t(j)] = a[std::size_t(col)][std::size_t(j)] / p;
        for (int i = 0; i < k; ++i) {
            if (i == col || a[std::size_t(i)][std::size_t(col)].n == 0) continue;
            Frac f = a[std::size_t(i)][std::size_t(col)];
            for (int j = 0; j <= k; ++j)
                a[std::size_t(i)][std::size_t(j)] = a[std::size_t(i)][std::size_t(j)] - f * a[std::size_t(col)][std::size_t(j)];
        }
    }
    std::vector<Int> z(std::size_t(k), 0);
    for (int i = 0; i < k; ++i) {
        if (a[std::size_t(i)][std::size_t(k)].d != 1) return std::nullopt;
        z[std::size_t(i)] = a[std::size_t(i)][std::size_t(k)].n;
    }
    if (!(to_ambient(z) == x)) return std::nullopt; // x not in the span
    return z;
}

const NegDefSublattice& e8_block() {
    static const NegDefSublattice block = [] {
        NegDefSublattice s;
        for (int i = 1; i <= 8; ++i) s.basis.push_back(cv_e(i));
        s.gram.assign(8, std::vector<Int>(8));
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j)
                s.gram[std::size_t(i)][std::size_t(j)] = inner(s.basis[std::size_t(i)], s.basis[std::size_t(j)]);
        s.unimodular = true;
        return s;
    }();
    return block;
}

const std::vector<ClassVector>& e8_roots() {
    static const std::vector<ClassVector> roots = short_vectors(e8_block(), -2, -2);
    return roots;
}

NegDefSublattice orthogonal_complement(const ClassVector& H) {
    if (norm(H) <= 0) throw precondition_error("complement not negative definite");
    // integer kernel of the functional x -> (x,H) via unimodular column ops
    std::array<Int, 10> w{};
    ClassVector gh = mat_apply(gram_matrix(), H);
    for (std::size_t i = 0; i < 10; ++i) w[i] = gh.c[i];
    std::array<ClassVector, 10> cols;
    for (std::size_t j = 0; j < 10; ++j) cols[j].c[j] = 1;

    while (true) {
        int nz = -1, cnt = 0;
        for (int i = 0; i < 10; ++i)
            if (w[std::size_t(i)] != 0) {
                ++cnt;
                if (nz < 0 || std::abs(w[std::size_t(i)]) < std::abs(w[std::size_t(nz)])) nz = i;
            }
        if (cnt <= 1) break;
        for (int j = 0; j < 10; ++j) {
            if (j == nz || w[std::size_t(j)] == 0) continue;
            Int q = w[std::size_t(j)] / w[std::size_t(nz)];
            w[std::size_t(j)] -= q * w[std::size_t(nz)];
            cols[std::size_t(j)] -= q * cols[std::size_t(nz)];
        }
    }

    NegDefSublattice sub;
    for (int j = 0; j < 10; ++j)
        if (w[std::size_t(j)] == 0) sub.basis.push_back(cols[std::size_t(j)]);
    if (sub.basis.size() != 9) throw invariant_violation("complement rank is not 9");
    for (const auto& b : sub.basis)
        if (inner(b, H) != 0) throw invariant_violation("complement basis not orthogonal to H");

    const int k = 9;
    sub.gram.assign(std::size_t(k), std::vector<Int>(std::size_t(k)));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            sub.gram[std::size_t(i)][std::size_t(j)] = inner(sub.basis[std::size_t(i)], sub.basis[std::size_t(j)]);

    // certify negative definiteness: leading principal minors alternate in sign
    Wide prev = 1;
    std::vector<std::vector<Wide>> m(std::size_t(k), std::vector<Wide>(std::size_t(k), 0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m[std::size_t(i)][std::size_t(j)] = sub.gram[std::size_t(i)][std::size_t(j)];
    // Bareiss; leading minor of size d is the pivot product
    for (int d = 0; d < k; ++d) {
        // minor_d+1 sign must be (-1)^(d+1)
        if (d > 0) {
            for (int i = d; i < k; ++i)
                for (int j = d; j < k; ++j)
                    m[std::size_t(i)][std::size_t(j)] =
                        (m[std::size_t(i)][std::size_t(j)] * m[std::size_t(d - 1)][std::size_t(d - 1)] -
                         m[std::size_t(i)][std::size_t(d - 1)] * m[std::size_t(d - 1)][std::size_t(j)]) /
                        prev;
            prev = m[std::size_t(d - 1)][std::size_t(d - 1)];
        }
        Wide minor = m[std::size_t(d)][std::size_t(d)];
        bool want_neg = (d % 2 == 0); // minor of size d+1 has sign (-1)^(d+1)
        if (minor == 0 || (minor < 0) != want_neg)
            throw invariant_violation("complement gram is not negative definite");
    }
    Wide det = m[std::size_t(k - 1)][std::size_t(k - 1)];
    sub.unimodular = (det == 1 || det == -1);
    return sub;
}

namespace {

struct Chol {
    int n = 0;
    std::vector<std::vector<Frac>> q;
};

Chol cholesky_pos(const std::vector<std::vector<Int>>& a_int) {
    // Fincke-Pohst decomposition of a positive definite matrix:
    // Q(z) = sum_i q[i][i] * (z_i + sum_{j>i} q[i][j] z_j)^2
    Chol ch;
    ch.n = int(a_int.size());
    auto& q = ch.q;
    q.assign(std::size_t(ch.n), std::vector<Frac>(std::size_t(ch.n)));
    for (int i = 0; i < ch.n; ++i)
        for (int j = 0; j < ch.n; ++j) q[std::size_t(i)][std::size_t(j)] = Frac(a_int[std::size_t(i)][std::size_t(j)]);
    for (int i = 0; i < ch.n; ++i) {
        if (!(Frac(0) < q[std::size_t(i)][std::size_t(i)]))
            throw invariant_violation("form is not positive definite");
        for (int j = i + 1; j < ch.n; ++j) {
            Frac tmp = q[std::size_t(i)][std::size_t(j)];
            q[std::size_t(j)][std::size_t(i)] = tmp;
            q[std::size_t(i)][std::size_t(j)] = tmp / q[std::size_t(i)][std::size_t(i)];
        }
        for (int k = i + 1; k < ch.n; ++k)
            for (int l = k; l < ch.n; ++l)
                q[std::size_t(k)][std::size_t(l)] =
                    q[std::size_t(k)][std::size_t(l)] - q[std::size_t(k)][std::size_t(i)] * q[std::size_t(i)][std::size_t(l)];
    }
    return ch;
}

void enumerate_rec(const Chol& ch, int i, std::vector<Int>& z, std::vector<Frac>& centers,
                   const Frac& budget, const Frac& total,
                   const std::function<void(const std::vector<Int>&, const Frac&)>& emit) {
    if (i < 0) {
        emit(z, total - budget); // Q(z) = total - remaining budget
        return;
    }
    // center S_i = sum_{j>i} q[i][j] z_j
    Frac s(0);
    for (int j = i + 1; j < ch.n; ++j)
        if (z[std::size_t(j)] != 0) s = s + ch.q[std::size_t(i)][std::size_t(j)] * Frac(z[std::size_t(j)]);
    const Frac& qi = ch.q[std::size_t(i)][std::size_t(i)];
    // integer range with qi * (z + s)^2 <= budget
    if (budget.negative()) return;
    double approx = std::sqrt(std::max(0.0, budget.to_double() / qi.to_double()));
    double c = s.to_double();
    Int lo = Int(std::floor(-c - approx)) - 2;
    Int hi = Int(std::ceil(-c + approx)) + 2;
    auto fits = [&](Int zz) {
        Frac t = Frac(zz) + s;
        return t * t * qi <= budget;
    };
    while (lo <= hi && !fits(lo)) ++lo;
    while (hi >= lo && !fits(hi)) --hi;
    if (lo > hi) return;
    while (fits(lo - 1)) --lo; // guard against double rounding
    while (fits(hi + 1)) ++hi;
    for (Int zz = lo; zz <= hi; ++zz) {
        z[std::size_t(i)] = zz;
        Frac t = Frac(zz) + s;
        enumerate_rec(ch, i - 1, z, centers, budget - t * t * qi, total, emit);
    }
    z[std::size_t(i)] = 0;
}

} // namespace

std::vector<ClassVector> short_vectors(const NegDefSublattice& sub, Int lower, Int upper) {
    if (upper >= 0) throw precondition_error("unbounded request");
    if (lower > upper) return {};
    const int n = sub.rank();
    std::vector<std::vector<Int>> pos(std::size_t(n), std::vector<Int>(std::size_t(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) pos[std::size_t(i)][std::size_t(j)] = -sub.gram[std::size_t(i)][std::size_t(j)];
    Chol ch = cholesky_pos(pos);
    Frac budget(-lower); // Q(z) <= -lower
    Frac min_q(-upper);  // Q(z) >= -upper excludes z = 0

    std::vector<ClassVector> out;
    std::vector<Int> z(std::size_t(n), 0);
    std::vector<Frac> centers;
    std::function<void(const std::vector<Int>&, const Frac&)> emit =
        [&](const std::vector<Int>& zz, const Frac& qval) {
            if (qval < min_q) return;
            ClassVector x = sub.to_ambient(zz);
            Int nn = norm(x);
            if (nn < lower || nn > upper) throw invariant_violation("enumeration norm mismatch");
            out.push_back(x);
        };
    enumerate_rec(ch, n - 1, z, centers, budget, budget, emit);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

struct ShiftView {
    std::vector<ClassVector> basis;
    bool definite = false;
};

ShiftView view_for(LatticeKind kind) {
    ShiftView v;
    if (kind == LatticeKind::Full) {
        v.basis = {cv_sigma(), cv_f()};
        for (int i = 1; i <= 8; ++i) v.basis.push_back(cv_e(i));
        v.definite = false;
    } else {
        for (int i = 1; i <= 8; ++i) v.basis.push_back(cv_e(i));
        v.definite = true;
    }
    return v;
}

std::vector<Int> coords_of(const ClassVector& x, LatticeKind kind) {
    std::vector<Int> z;
    if (kind == LatticeKind::Full) {
        z.assign(x.c.begin(), x.c.end());
    } else {
        if (!x.in_e8_block()) throw precondition_error("vector is not in the e-block");
        z.assign(x.c.begin() + 2, x.c.end());
    }
    return z;
}

// product of the distinct prime factors of a1 that do not divide a2
Int prime_product(Int a1, Int a2) {
    Int n = std::abs(a1);
    Int k = 1;
    for (Int p = 2; p * p <= n && p < 2'000'000; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        if (a2 % p != 0) k *= p;
    }
    if (n > 1 && a2 % n != 0) k *= n; // n is prime or a large coprime remainder
    return k;
}

bool is_prime_small(Int n) {
    if (n < 2) return false;
    for (Int p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

} // namespace

ClassVector primitive_shift(const ClassVector& x, Int r, std::optional<Int> bound, LatticeKind kind) {
    if (r <= 0) throw precondition_error("shift needs a positive multiplier");
    ShiftView view = view_for(kind);
    if (bound && !view.definite) throw precondition_error("quadratic bound requires definite form");
    if (int(view.basis.size()) < 2) throw precondition_error("rank too small");
    std::vector<Int> xc = coords_of(x, kind);
    const int n = int(xc.size());

    auto meets_bound = [&](const ClassVector& xi) {
        if (!bound) return true;
        return 2 * inner(x, xi) + r * norm(xi) < *bound;
    };
    auto primitive_after = [&](const ClassVector& xi, Int l) {
        ClassVector y = x + r * xi;
        if (content(y) % l != 0) return false;
        return content(divide_exact(y, l)) == 1;
    };

    if (x.is_zero()) {
        const Int l = r; // gcd(r, 0)
        if (!bound) {
            ClassVector xi = view.basis[0];
            if (!primitive_after(xi, l)) throw invariant_violation("primitive shift postcondition failed");
            return xi;
        }
        // xi = p b_i + q b_j for growing primes p < q, orthogonal pair preferred
        std::size_t bi = 1, bj = 2;
        for (std::size_t i = 0; i + 1 < view.basis.size() && inner(view.basis[bi], view.basis[bj]) != 0; ++i)
            bj = (bj + 1) % view.basis.size();
        Int p = 2;
        for (int guard = 0; guard < 4000; ++guard) {
            Int q = p + 1;
            while (!is_prime_small(q)) ++q;
            ClassVector xi = p * view.basis[bi] + q * view.basis[bj];
            if (meets_bound(xi) && primitive_after(xi, l)) return xi;
            p = q;
        }
        throw search_exhausted("primitive shift escalation exhausted");
    }

    Int cont = 0;
    for (Int v : xc) cont = gcd_i(cont, v);
    const Int l = gcd_i(r, cont);
    std::vector<Int> y0(xc.size());
    for (std::size_t i = 0; i < xc.size(); ++i) y0[i] = xc[i] / l;

    int i1 = 0;
    while (y0[std::size_t(i1)] == 0) ++i1;
    int i2 = (i1 + 1) % n; // next index cyclically
    Int a1 = y0[std::size_t(i1)], a2 = y0[std::size_t(i2)];
    Int k = prime_product(a1, a2); // empty product is 1

    for (Int b = 1; b < 4'000'000; ++b) {
        if (gcd_i(b, a1) != 1) continue;
        ClassVector xi = (k * b) * view.basis[std::size_t(i2)];
        if (!meets_bound(xi)) continue;
        if (primitive_after(xi, l)) return xi;
    }
    throw search_exhausted("primitive shift escalation exhausted");
}

ClassVector solve_pairing(const ClassVector& y, Int m, LatticeKind kind) {
    ShiftView view = view_for(kind);
    std::vector<Int> yc = coords_of(y, kind);
    Int cont = 0;
    for (Int v : yc) cont = gcd_i(cont, v);
    if (cont != 1) throw precondition_error("primitive element required");
    const int n = int(yc.size());

    // pairing functional in coordinates: w_i = (b_i, y). Unimodularity makes
    // gcd(w) = 1 for primitive y.
    std::vector<Int> w(std::size_t(n));
    for (int i = 0; i < n; ++i) w[std::size_t(i)] = inner(view.basis[std::size_t(i)], y);
    std::vector<Int> coef(std::size_t(n), 0);
    Int g = 0;
    for (int i = 0; i < n; ++i) {
        Int u, v;
        Int g2 = ext_gcd(g, w[std::size_t(i)], u, v);
        for (int j = 0; j < i; ++j) coef[std::size_t(j)] *= u;
        coef[std::size_t(i)] = v;
        g = g2;
    }
    if (g != 1) throw precondition_error("sublattice not unimodular");

    std::vector<Int> eta(std::size_t(n));
    for (int i = 0; i < n; ++i) eta[std::size_t(i)] = m * coef[std::size_t(i)];

    // size-reduce against the kernel of w: s_ij = w_j u_i - w_i u_j
    for (int pass = 0; pass < 4; ++pass) {
        bool changed = false;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                Int si = w[std::size_t(j)], sj = -w[std::size_t(i)];
                Wide ss = Wide(si) * si + Wide(sj) * sj;
                if (ss == 0) continue;
                Wide num = Wide(eta[std::size_t(i)]) * si + Wide(eta[std::size_t(j)]) * sj;
                Wide t = (2 * num + (num >= 0 ? ss : -ss)) / (2 * ss); // round(num/ss)
                if (t == 0) continue;
                eta[std::size_t(i)] = checked_int(Wide(eta[std::size_t(i)]) - t * si, "solve_pairing");
                eta[std::size_t(j)] = checked_int(Wide(eta[std::size_t(j)]) - t * sj, "solve_pairing");
                changed = true;
            }
        if (!changed) break;
    }

    ClassVector out;
    for (int i = 0; i < n; ++i) out += eta[std::size_t(i)] * view.basis[std::size_t(i)];
    if (inner(out, y) != m) throw invariant_violation("pairing construction failed");
    return out;
}

} // namespace mukai
