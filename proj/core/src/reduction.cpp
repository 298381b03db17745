#include "mukai/reduction.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace mukai {

namespace {

Int coeff_sigma(const MukaiVector& v) { return v.c1.c[0]; }
Int coeff_f(const MukaiVector& v) { return v.c1.c[1]; }

ClassVector e8_part(const ClassVector& x) {
    ClassVector r = x;
    r.c[0] = r.c[1] = 0;
    return r;
}

Int imax(Int a, Int b) { return a > b ? a : b; }

// twist placing both hyperbolic coefficients into (-r/2, r/2]
std::optional<Move> window_move(const MukaiVector& v) {
    if (v.r <= 0) throw precondition_error("windowing needs positive rank");
    Int hf = v.r / 2;
    Int k = floor_div(hf - coeff_sigma(v), v.r);
    Int l = floor_div(hf - coeff_f(v), v.r);
    if (k == 0 && l == 0) return std::nullopt;
    return make_twist(cv_hyp(k, l));
}

enum class Shape { Done, AlignedF, AlignedS, Corner, General };

Shape classify(const MukaiVector& v) {
    if (v.r == 2 || v.r == 4) return Shape::Done;
    Int a = coeff_sigma(v), b = coeff_f(v);
    if (a == 0 && (b == 0 || 2 * std::abs(b) == v.r)) return Shape::AlignedF;
    if (b == 0 && 2 * std::abs(a) == v.r) return Shape::AlignedS;
    if (2 * a == v.r && 2 * b == v.r) return Shape::Corner;
    return Shape::General;
}

struct Builder {
    MukaiVector cur;
    std::vector<CertStep> steps;
    Int q0;
    explicit Builder(const MukaiVector& v) : cur(v), q0(v_square(v)) {}

    void push(const Move& m) {
        MukaiVector next = apply_move(cur, m);
        if (v_square(next) != q0) throw invariant_violation("v_square not conserved along the chain");
        if (!is_primitive(next)) throw invariant_violation("primitivity not conserved along the chain");
        steps.push_back({m, next, move_checks(m)});
        cur = next;
    }
    void window() {
        if (auto m = window_move(cur)) push(*m);
    }
};

// scratch state for speculative searches; committed move-by-move on success
struct Scratch {
    MukaiVector v;
    std::vector<Move> moves;

    void apply(const Move& m) {
        v = apply_move(v, m);
        moves.push_back(m);
    }
    void window() {
        if (auto m = window_move(v)) apply(*m);
    }
};

std::string report_json(const MukaiVector& v, const Budget& bud, const std::string& stage) {
    std::ostringstream os;
    os << "{\"stage\":\"" << stage << "\",\"vector\":{\"r\":" << v.r << ",\"c1\":" << format_class(v.c1)
       << ",\"s\":" << v.s << "},\"budget\":{\"ab\":" << bud.ab << ",\"eta\":" << bud.eta
       << ",\"pump\":" << bud.pump << ",\"kmul\":" << bud.kmul << "}}";
    return os.str();
}

Int ext_gcd(Int a, Int b, Int& x, Int& y) {
    Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        Int q = a / b, t = a - q * b;
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

Int mod_inverse(Int a, Int n) {
    if (n == 1) return 0;
    Int x, y;
    Int g = ext_gcd(a, n, x, y);
    if (g != 1) throw invariant_violation("modular inverse does not exist");
    return mod_floor(x, n);
}

// ---- aligned pipeline -------------------------------------------------------

// best-effort shrink of |s| by e-block twists that keep the e-part content
// fixed; keeps later solve targets (and hence certificate coordinates) small
void shrink_s(Builder& b) {
    const Int R = b.cur.r;
    const Int cap = 8 * R + 64;
    for (int iter = 0; iter < 24; ++iter) {
        Int s = b.cur.s;
        if (std::abs(s) <= cap) return;
        ClassVector xi = e8_part(b.cur.c1);
        Int c0 = content(xi);
        Int best_abs = std::abs(s);
        std::optional<ClassVector> best;
        for (const ClassVector& w : e8_roots()) {
            Int p = inner(xi, w);
            Int k0 = floor_div(p, 2 * R);
            for (Int k : {Int(-1), Int(1), k0, k0 + 1}) {
                if (k == 0) continue;
                Int s_new = checked_int(Wide(s) - 2 * Wide(k) * p + 2 * Wide(R) * k * k, "shrink_s");
                if (std::abs(s_new) >= best_abs) continue;
                if (content(xi + (R * k) * w) != c0) continue;
                best_abs = std::abs(s_new);
                best = k * w;
            }
        }
        if (!best) return;
        b.push(make_twist(*best));
    }
}

// the six-step aligned reduction; entry: windowed, sigma-coeff 0,
// f-coeff in {0, +-r/2}, primitive, even rank >= 6
void aligned_pipeline(Builder& b) {
    const Int Q = b.q0;

    // (1) make the e-part shift-primitive while forcing the s-component
    // above max(Q, 0), so the switch below is watertight even for Q < 0
    {
        ClassVector xi = e8_part(b.cur.c1);
        Int M = b.cur.s - imax(Q, 0);
        ClassVector xi1 = primitive_shift(xi, b.cur.r, M, LatticeKind::E8);
        b.push(make_twist(xi1));
        if (!(b.cur.s > imax(Q, 0))) throw invariant_violation("pump bound missed");
    }

    // (2) switch up; rank becomes the pumped s-component
    b.push(make_switch());
    if (b.cur.r == 2 || b.cur.r == 4) return;
    b.window();

    const Int R = b.cur.r;

    // (3) re-establish a shift-primitive e-part at the new rank; the gcd
    // bound l2 <= 2 is forced by primitivity
    ClassVector xi2 = e8_part(b.cur.c1);
    Int l2 = gcd_i(R, content(xi2));
    if (l2 != 1 && l2 != 2) throw invariant_violation("gcd bound violated in aligned reduction");
    if (content(xi2) != l2) {
        ClassVector xi3 = primitive_shift(xi2, R, std::nullopt, LatticeKind::E8);
        b.push(make_twist(xi3));
        if (content(e8_part(b.cur.c1)) != l2) throw invariant_violation("re-shift did not normalize content");
    }
    shrink_s(b);

    // (4) choose the landing square 2 or 4 by divisibility and solve the
    // pairing that realizes it
    const Int d2 = coeff_f(b.cur);
    const Int s2 = b.cur.s;
    Int eps;
    if (l2 == 1) {
        eps = 2;
    } else {
        eps = (mod_floor(s2 - 2 * d2 - 2, 4) == 0) ? 2 : 4;
    }
    Int num = s2 - 2 * d2 - eps;
    if (!is_even(num)) throw invariant_violation("landing target has wrong parity");
    Int tau = num / 2;
    if (tau % l2 != 0) throw invariant_violation("landing target not divisible by l");
    ClassVector xi = e8_part(b.cur.c1);
    ClassVector eta = solve_pairing(divide_exact(xi, l2), tau / l2, LatticeKind::E8);

    // (5) isotropic twist dropping the s-component to eps
    ClassVector D = cv_sigma() - (norm(eta) / 2) * cv_f() + eta;
    if (norm(D) != 0) throw invariant_violation("landing twist is not isotropic");
    b.push(make_twist(D));
    if (b.cur.s != eps) throw invariant_violation("landing twist missed the target square");

    // (6) final switch to rank 2 or 4
    b.push(make_switch());
    if (b.cur.r != 2 && b.cur.r != 4) throw invariant_violation("aligned reduction missed rank 2/4");
}

// ---- tier A: spec-order twist-then-switch that lowers the rank -------------

bool tier_a(Builder& b, const Budget& bud) {
    const MukaiVector& v = b.cur;
    const Int r = v.r, s = v.s, Q = b.q0;
    if (r <= 4) return false;
    if (Wide(r) * (r - 2) <= Q) return false; // r*s' <= r(r-2) for even s' < r

    auto accept = [&](const ClassVector& D) -> bool {
        Int sp = checked_int(Wide(s) - 2 * Wide(inner(v.c1, D)) - Wide(r) * norm(D), "tier_a");
        if (!(sp > 0 && sp < r)) return false;
        if (!(Wide(r) * sp > Q)) return false;
        b.push(make_twist(D));
        b.push(make_switch());
        return true;
    };

    // pure f-family first, then pure sigma, then the small mixed box
    for (Int m = 1; m <= bud.ab; ++m)
        for (Int sg : {Int(1), Int(-1)}) {
            if (accept(cv_hyp(0, sg * m))) return true;
        }
    for (Int m = 1; m <= bud.ab; ++m)
        for (Int sg : {Int(1), Int(-1)}) {
            if (accept(cv_hyp(sg * m, 0))) return true;
        }
    Int box = std::min<Int>(bud.ab, 8);
    std::vector<ClassVector> pool;
    pool.push_back(ClassVector{});
    if (bud.eta > 0)
        for (const ClassVector& w : e8_roots()) {
            bool ok = true;
            for (Int c : w.c)
                if (std::abs(c) > bud.eta) ok = false;
            if (ok) pool.push_back(w);
        }
    for (Int wsum = 1; wsum <= 2 * box; ++wsum)
        for (Int m = -box; m <= box; ++m) {
            Int rest = wsum - std::abs(m);
            if (rest < 0 || rest > box) continue;
            for (Int n : (rest == 0 ? std::vector<Int>{0} : std::vector<Int>{rest, -rest}))
                for (const ClassVector& w : pool) {
                    if (m == 0 && n == 0 && w.is_zero()) continue;
                    if (accept(cv_hyp(m, n) + w)) return true;
                }
        }
    return false;
}

// ---- tier B: transvection shaping at fixed rank -----------------------------

Move tv_sigma(const ClassVector& eta) { return make_rebase(transvection_sigma(eta)); }
Move tv_f(const ClassVector& eta) { return make_rebase(transvection_f(eta)); }

// drive the sigma-coefficient to 0 (mod r), then window it to exactly 0;
// uses eta = k*w with effect  a += k(xi,w) + k^2 b
bool zero_a(Scratch& st, const Budget& bud) {
    const Int r = st.v.r;
    Int a = coeff_sigma(st.v);
    if (a == 0) return true;
    ClassVector xi = e8_part(st.v.c1);
    Int bb = coeff_f(st.v);
    if (xi.is_zero() && bb == 0) return false;
    const Int K = imax(16, bud.kmul * r);
    for (Int k = 1; k <= K; ++k)
        for (const ClassVector& w : e8_roots())
            for (Int sg : {Int(1), Int(-1)}) {
                Int kk = sg * k;
                Int p = inner(xi, w);
                Wide da = Wide(kk) * p + Wide(kk) * kk * bb;
                if (mod_floor(checked_int(Wide(a) + da, "zero_a"), r) != 0) continue;
                st.apply(tv_sigma(kk * w));
                st.window();
                if (coeff_sigma(st.v) != 0) throw invariant_violation("zero_a landed off target");
                return true;
            }
    return false;
}

// with the sigma-coefficient exactly 0, the f-transvection moves b by the
// exact pairing (xi, eta); solve the congruence to land b in {0, r/2} mod r
bool set_b_exact(Scratch& st) {
    const Int r = st.v.r;
    if (coeff_sigma(st.v) != 0) throw invariant_violation("set_b_exact needs sigma-coefficient 0");
    Int bb = coeff_f(st.v);
    if (bb == 0 || 2 * std::abs(bb) == r) return true;
    ClassVector xi = e8_part(st.v.c1);
    Int c = content(xi);
    if (c == 0) return false;
    Int g = gcd_i(c, r);
    for (Int target : {Int(0), r / 2}) {
        Int delta = mod_floor(target - bb, r);
        if (delta % g != 0) continue;
        Int u;
        if (delta == 0) {
            u = 0;
        } else {
            Int n = r / g;
            u = checked_int(Wide(delta / g) * mod_inverse(mod_floor(c / g, n), n) % n, "set_b_exact");
            u = mod_floor(u, n);
            if (u > n / 2) u -= n; // smaller lift
        }
        if (u == 0) continue;
        ClassVector unit = solve_pairing(divide_exact(xi, c), 1, LatticeKind::E8);
        st.apply(tv_f(u * unit));
        st.window();
        Int b2 = coeff_f(st.v);
        if (coeff_sigma(st.v) == 0 && (b2 == 0 || 2 * std::abs(b2) == r)) return true;
        throw invariant_violation("set_b_exact landed off target");
    }
    return false;
}

// with a nonzero sigma-coefficient as quadratic knob, drive b into
// {0, r/2} mod r (enriches the e-part as a side effect)
bool set_b_knob(Scratch& st, const Budget& bud) {
    const Int r = st.v.r;
    Int a = coeff_sigma(st.v);
    if (a == 0) return false;
    Int bb = coeff_f(st.v);
    if (bb == 0 || 2 * std::abs(bb) == r) return true;
    ClassVector xi = e8_part(st.v.c1);
    const Int K = imax(16, bud.kmul * r);
    for (Int k = 1; k <= K; ++k)
        for (const ClassVector& w : e8_roots())
            for (Int sg : {Int(1), Int(-1)}) {
                Int kk = sg * k;
                Int p = inner(xi, w);
                Wide db = Wide(kk) * p + Wide(kk) * kk * a;
                Int b2 = mod_floor(checked_int(Wide(bb) + db, "set_b_knob"), r);
                if (b2 != 0 && 2 * b2 != r) continue;
                st.apply(tv_f(kk * w));
                st.window();
                return true;
            }
    return false;
}

// when both hyperbolic coefficients are odd every aligned target is blocked
// mod 2; one transvection along a root with even pairing restores an even
// sigma-coefficient
bool parity_fix(Scratch& st) {
    Int a = coeff_sigma(st.v), bb = coeff_f(st.v);
    if (is_even(a) || is_even(bb)) return true;
    ClassVector xi = e8_part(st.v.c1);
    for (const ClassVector& w : e8_roots()) {
        if (!is_even(inner(xi, w))) continue;
        st.apply(tv_sigma(w));
        st.window();
        return true;
    }
    return false;
}

bool try_shape_plans(Scratch& base, const Budget& bud) {
    struct PlanSpec {
        bool swap;
        bool parity;
        bool knob;
    };
    const PlanSpec plans[] = {
        {false, false, false}, {false, false, true}, {true, false, false}, {true, false, true},
        {false, true, false},  {false, true, true},  {true, true, false},  {true, true, true},
    };
    for (const PlanSpec& p : plans) {
        Scratch st = base;
        try {
            if (p.swap) {
                st.apply(make_rebase(swap_sigma_f()));
                st.window();
            }
            if (p.parity && !parity_fix(st)) continue;
            bool ok = p.knob ? (set_b_knob(st, bud) && zero_a(st, bud))
                             : (zero_a(st, bud) && set_b_exact(st));
            if (!ok) continue;
            st.window();
            Shape sh = classify(st.v);
            if (sh != Shape::AlignedF && sh != Shape::AlignedS && sh != Shape::Done) continue;
            base = st;
            return true;
        } catch (const search_exhausted&) {
            continue;
        }
    }
    return false;
}

bool tier_b(Builder& b, const Budget& bud) {
    Scratch st{b.cur, {}};
    if (!try_shape_plans(st, bud)) return false;
    for (const Move& m : st.moves) b.push(m);
    return true;
}

// ---- tier C: pump above the square, then shape at the big rank --------------

bool tier_c(Builder& b, const Budget& bud) {
    const Int r = b.cur.r, s = b.cur.s, Q = b.q0;
    ClassVector xi = e8_part(b.cur.c1);
    const auto& roots = e8_roots();
    for (Int variant = 0; variant < bud.pump; ++variant) {
        std::size_t idx = std::size_t(variant / 2) % roots.size();
        Int t_extra = variant % 2;
        const ClassVector& w = roots[idx];
        Int p = inner(xi, w);
        Int t = 1;
        auto s_of = [&](Int tt) {
            return checked_int(Wide(s) - 2 * Wide(tt) * p + 2 * Wide(r) * tt * tt, "tier_c");
        };
        while (t < 100000 && !(s_of(t) > imax(Q, 0))) ++t;
        t += t_extra;
        Int S = s_of(t);
        if (!(S > imax(Q, 0))) continue;
        Scratch st{b.cur, {}};
        try {
            st.apply(make_twist(t * w));
            st.apply(make_switch());
            st.window();
            if (!try_shape_plans(st, bud)) continue;
        } catch (const precondition_error&) {
            continue;
        }
        for (const Move& m : st.moves) b.push(m);
        return true;
    }
    return false;
}

void general_step(Builder& b, const Budget& bud) {
    if (bud.ab <= 0) throw search_exhausted("reduction budget is zero", report_json(b.cur, bud, "budget"));
    if (tier_a(b, bud)) return;
    if (tier_b(b, bud)) return;
    if (tier_c(b, bud)) return;
    throw search_exhausted("reduction search exhausted", report_json(b.cur, bud, "general"));
}

ReductionCertificate finish(Builder& b, const MukaiVector& initial) {
    ReductionCertificate cert{initial, std::move(b.steps), b.cur};
    VerifyResult vr = verify_certificate(cert);
    if (!vr.pass) throw invariant_violation("certificate failed self-verification: " + vr.first_violation);
    return cert;
}

} // namespace

std::pair<MukaiVector, Move> normalize_window(const MukaiVector& v) {
    if (v.r <= 0) throw precondition_error("windowing needs positive rank");
    auto m = window_move(v);
    if (!m) return {v, make_twist(ClassVector{})};
    return {apply_move(v, *m), *m};
}

ReductionCertificate reduce_aligned(const MukaiVector& v) {
    if (!is_primitive(v)) throw precondition_error("reduction requires a primitive Mukai vector");
    if (v.r <= 0) throw precondition_error("rank must be positive");
    if (!is_even(v.r)) throw precondition_error("odd rank out of scope");
    Builder b(v);
    if (classify(b.cur) == Shape::Done) return finish(b, v);
    b.window();
    Shape sh = classify(b.cur);
    if (sh == Shape::AlignedS) {
        b.push(make_rebase(swap_sigma_f()));
        sh = classify(b.cur);
    }
    if (sh != Shape::AlignedF) throw precondition_error("not in special-case form");
    aligned_pipeline(b);
    return finish(b, v);
}

ReductionCertificate reduce_even(const MukaiVector& v, const Budget& budget) {
    if (!is_primitive(v)) throw precondition_error("reduction requires a primitive Mukai vector");
    if (v.r <= 0) throw precondition_error("rank must be positive");
    if (!is_even(v.r)) throw precondition_error("odd rank out of scope");

    Builder b(v);
    bool rebase_used = false;
    for (int iter = 0; iter < 64; ++iter) {
        if (classify(b.cur) == Shape::Done) return finish(b, v);
        Int rank_before = b.cur.r;
        b.window();
        switch (classify(b.cur)) {
        case Shape::Done:
            return finish(b, v);
        case Shape::AlignedS:
            b.push(make_rebase(swap_sigma_f()));
            [[fallthrough]];
        case Shape::AlignedF:
            aligned_pipeline(b);
            return finish(b, v);
        case Shape::Corner:
            if (!rebase_used) {
                b.push(make_rebase(alternate_decomposition()));
                rebase_used = true;
                break;
            }
            general_step(b, budget);
            break;
        case Shape::General:
            general_step(b, budget);
            break;
        }
        if (b.cur.r != rank_before) rebase_used = false;
    }
    throw invariant_violation("reduction loop did not terminate");
}

std::pair<std::vector<Move>, MukaiVector> induction_step(const MukaiVector& v, const Budget& budget) {
    if (!is_primitive(v)) throw precondition_error("reduction requires a primitive Mukai vector");
    if (v.r <= 0) throw precondition_error("rank must be positive");
    if (!is_even(v.r)) throw precondition_error("odd rank out of scope");
    if (budget.ab <= 0) throw search_exhausted("reduction budget is zero", report_json(v, budget, "budget"));
    Builder b(v);
    b.window();
    if (tier_a(b, budget) || tier_b(b, budget) || tier_c(b, budget)) {
        std::vector<Move> moves;
        moves.reserve(b.steps.size());
        for (const CertStep& s : b.steps) moves.push_back(s.move);
        return {moves, b.cur};
    }
    throw search_exhausted("reduction search exhausted", report_json(v, budget, "general"));
}

std::pair<Move, MukaiVector> rank2_normalize(const MukaiVector& v, const Budget& budget) {
    if (v.r != 2) throw precondition_error("rank-2 normalization needs r = 2");
    const Int t = rank2_t(v);
    if (t == 0 || t == 1) return {make_twist(ClassVector{}), v};

    auto finish_with = [&](const ClassVector& D) {
        MukaiVector out = twist(v, D);
        Int tp = rank2_t(out);
        if (tp != 0 && tp != 1) throw invariant_violation("rank-2 normalization missed the target");
        return std::make_pair(make_twist(D), out);
    };

    if (content(v.c1) % 2 == 0) {
        // closed family: D = -c1/2 + sigma + n f gives t' = t - (c1/2)^2 + 2n
        ClassVector gamma = divide_exact(v.c1, 2);
        Int diff = t - norm(gamma);
        Int n = is_even(diff) ? -diff / 2 : (1 - diff) / 2;
        return finish_with(-gamma + cv_hyp(1, n));
    }

    const Int B = imax(budget.ab, 2 * std::abs(t) + 16);
    auto t_of = [&](const ClassVector& D) {
        return checked_int(Wide(t) + inner(v.c1, D) + norm(D), "rank2_normalize");
    };
    // hyperbolic spiral ordered by |m| + |n|
    for (Int wsum = 0; wsum <= 2 * B; ++wsum)
        for (Int m = -std::min(wsum, B); m <= std::min(wsum, B); ++m) {
            Int rest = wsum - std::abs(m);
            if (rest > B) continue;
            for (Int n : (rest == 0 ? std::vector<Int>{0} : std::vector<Int>{rest, -rest})) {
                ClassVector D = cv_hyp(m, n);
                Int tp = t_of(D);
                if (tp == 0 || tp == 1) return finish_with(D);
            }
        }
    // widen with e-block candidates
    std::vector<ClassVector> pool;
    for (const ClassVector& w : e8_roots()) {
        bool ok = true;
        for (Int c : w.c)
            if (std::abs(c) > budget.eta) ok = false;
        if (ok) pool.push_back(w);
    }
    for (Int wsum = 0; wsum <= 2 * B; ++wsum)
        for (Int m = -std::min(wsum, B); m <= std::min(wsum, B); ++m) {
            Int rest = wsum - std::abs(m);
            if (rest > B) continue;
            for (Int n : (rest == 0 ? std::vector<Int>{0} : std::vector<Int>{rest, -rest}))
                for (const ClassVector& w : pool) {
                    ClassVector D = cv_hyp(m, n) + w;
                    Int tp = t_of(D);
                    if (tp == 0 || tp == 1) return finish_with(D);
                }
        }
    throw search_exhausted("rank-2 normalization search exhausted",
                           report_json(v, budget, "rank2"));
}

VerifyResult verify_certificate(const ReductionCertificate& cert) {
    MukaiVector cur = cert.initial;
    Int q0;
    try {
        q0 = v_square(cur);
    } catch (const std::exception& e) {
        return {false, std::string("initial vector invalid: ") + e.what()};
    }
    if (!is_primitive(cur)) return {false, "initial vector is not primitive"};

    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
        const CertStep& st = cert.steps[i];
        MukaiVector next = cur;
        try {
            next = apply_move(cur, st.move);
        } catch (const std::exception& e) {
            return {false, "step " + std::to_string(i) + " precondition: " + e.what()};
        }
        if (!(next == st.result)) return {false, "step " + std::to_string(i) + " replay mismatch"};
        if (v_square(next) != q0) return {false, "step " + std::to_string(i) + " breaks v_square conservation"};
        if (!is_primitive(next)) return {false, "step " + std::to_string(i) + " breaks primitivity"};
        cur = next;
    }
    if (!(cur == cert.final_v)) return {false, "final vector does not match the replay"};
    if (cert.final_v.r != 2 && cert.final_v.r != 4) return {false, "final rank is not 2 or 4"};
    return {true, ""};
}

} // namespace mukai
