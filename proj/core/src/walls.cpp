#include "mukai/walls.hpp"

#include "mukai/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace mukai {

bool is_of_type(const ClassVector& xi, const WallSpec& spec) {
    Int n = norm(xi);
    if (n >= 0) return false;
    // -(r^2/4) Delta <= n  <=>  4n >= -r^2 Delta
    return 4 * Wide(n) >= -Wide(spec.r) * spec.r * spec.Delta;
}

namespace {

ClassVector canonical_sign(const ClassVector& x) {
    for (Int c : x.c) {
        if (c > 0) return x;
        if (c < 0) return -x;
    }
    return x;
}

} // namespace

std::vector<Wall> walls_through(const AmpleClass& H, const WallSpec& spec) {
    NegDefSublattice perp = orthogonal_complement(H.H);
    // norms in [-floor(r^2 Delta / 4), -1]
    Int bound = checked_int(Wide(spec.r) * spec.r * spec.Delta / 4, "walls_through");
    if (bound < 1) return {};
    std::vector<ClassVector> shorts = short_vectors(perp, -bound, -1);
    std::vector<ClassVector> reps;
    reps.reserve(shorts.size() / 2);
    for (const ClassVector& x : shorts) {
        if (!is_of_type(x, spec)) continue;
        ClassVector r = canonical_sign(x);
        if (r == x) reps.push_back(r); // one representative per +- pair
    }
    std::sort(reps.begin(), reps.end());
    std::vector<Wall> out;
    out.reserve(reps.size());
    for (auto& x : reps) out.push_back(Wall{x, spec});
    return out;
}

std::optional<Wall> on_wall(const AmpleClass& H, const WallSpec& spec) {
    auto walls = walls_through(H, spec);
    if (walls.empty()) return std::nullopt;
    return walls.front();
}

ClassVector subsheaf_class(Int r, const ClassVector& c1E, Int rPrime, const ClassVector& c1Prime) {
    if (!(0 < rPrime && rPrime < r)) throw precondition_error("rank bounds violated");
    return r * c1Prime - rPrime * c1E;
}

Int discriminant(const ChernData& d) {
    if (d.r < 1) throw precondition_error("discriminant needs r >= 1");
    return checked_int(2 * Wide(d.r) * d.c2 - Wide(d.r - 1) * norm(d.c1), "discriminant");
}

namespace {

bool off_wall(const ClassVector& H, const WallSpec& spec) {
    AmpleClass a(H);
    return walls_through(a, spec).empty();
}

// numerator vectors for the perturbation path: ordered by max-norm, then by
// support size, then lexicographically; support limited to 3 coordinates
std::vector<ClassVector> numerator_spiral(Int max_norm) {
    std::vector<ClassVector> out;
    for (Int mn = 1; mn <= max_norm; ++mn) {
        std::vector<ClassVector> layer;
        for (int i = 0; i < 10; ++i)
            for (Int si : {mn, -mn}) {
                ClassVector v;
                v.c[std::size_t(i)] = si;
                layer.push_back(v);
            }
        for (int i = 0; i < 10; ++i)
            for (int j = i + 1; j < 10; ++j)
                for (Int si = -mn; si <= mn; ++si)
                    for (Int sj = -mn; sj <= mn; ++sj) {
                        if (si == 0 || sj == 0) continue;
                        if (std::max(std::abs(si), std::abs(sj)) != mn) continue;
                        ClassVector v;
                        v.c[std::size_t(i)] = si;
                        v.c[std::size_t(j)] = sj;
                        layer.push_back(v);
                    }
        for (int i = 0; i < 10; ++i)
            for (int j = i + 1; j < 10; ++j)
                for (int k = j + 1; k < 10; ++k)
                    for (Int si = -mn; si <= mn; ++si)
                        for (Int sj = -mn; sj <= mn; ++sj)
                            for (Int sk = -mn; sk <= mn; ++sk) {
                                if (si == 0 || sj == 0 || sk == 0) continue;
                                if (std::max({std::abs(si), std::abs(sj), std::abs(sk)}) != mn) continue;
                                ClassVector v;
                                v.c[std::size_t(i)] = si;
                                v.c[std::size_t(j)] = sj;
                                v.c[std::size_t(k)] = sk;
                                layer.push_back(v);
                            }
        std::sort(layer.begin(), layer.end());
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

} // namespace

Polarization construct_polarization(const AmpleClass& L1, const ClassVector& FA,
                                    const WallSpec& spec, const PolarizeBudget& budget) {
    if (norm(FA) != 0) throw precondition_error("half-pencil class must be isotropic");
    if (!is_primitive_class(FA)) throw precondition_error("half-pencil class must be primitive");
    const Int fl = inner(FA, L1.H);
    if (fl <= 0) throw precondition_error("half-pencil must pair positively with L1");

    Polarization out;

    // (i) direct path: H = L1 + n FA for n just above (FA, L1)
    for (Int n = fl + 1; n <= fl + budget.n; ++n) {
        ClassVector H = L1.H + n * FA;
        // H^2 = L1^2 + 2n (L1,FA) > 0 since both terms are positive
        if (norm(H) <= 0) throw invariant_violation("direct polarization lost positivity");
        ++out.direct_attempts;
        if (off_wall(H, spec)) {
            out.L0 = L1.H;
            out.n = n;
            out.H = H;
            if (!(out.n > inner(FA, out.L0))) throw invariant_violation("polarization inequality failed");
            return out;
        }
    }

    // (ii) perturbation path: L1 -> L1 + p/q, n0 > (FA,L1) + 1, clear
    // denominators with m = q
    const Int n0 = fl + 2;
    static const std::vector<ClassVector> spiral = numerator_spiral(2);
    for (Int q = 2; q <= budget.q; ++q) {
        for (const ClassVector& p : spiral) {
            // (w, FA) < 1 with w = p/q
            if (!(inner(p, FA) < q)) continue;
            // positivity of L1 + w: q^2 (L1 + p/q)^2 = (q L1 + p)^2 > 0
            ClassVector scaled = q * L1.H + p;
            if (norm(scaled) <= 0) continue;
            // off-wall test for (L1 + w) + n0 FA, scale-invariantly
            ClassVector H_scaled = scaled + (q * n0) * FA;
            if (norm(H_scaled) <= 0) continue;
            if (!off_wall(H_scaled, spec)) continue;
            out.perturbed = true;
            out.denominator = q;
            out.L0 = scaled;        // m (L1 + w) with m = q
            out.n = q * n0;         // m n0
            out.H = H_scaled;       // L0 + n FA
            if (!(out.H == out.L0 + out.n * FA)) throw invariant_violation("polarization assembly mismatch");
            // m(L1.FA + w.FA) < m n0 by (w,FA) < 1 and n0 > (FA,L1) + 1
            if (!(out.n > inner(FA, out.L0))) throw invariant_violation("polarization inequality failed");
            if (!(norm(out.H) > 0)) throw invariant_violation("polarization positivity failed");
            return out;
        }
    }

    std::ostringstream rep;
    rep << "{\"direct_attempts\":" << out.direct_attempts << ",\"n_budget\":" << budget.n
        << ",\"q_budget\":" << budget.q << "}";
    throw search_exhausted("polarization search exhausted", rep.str());
}

} // namespace mukai
