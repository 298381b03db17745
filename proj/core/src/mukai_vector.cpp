#include "mukai/mukai_vector.hpp"

namespace mukai {

Int mukai_pairing(const MukaiVector& v, const MukaiVector& w) {
    Wide hyp = Wide(v.r) * w.s + Wide(w.r) * v.s;
    return checked_int(Wide(inner(v.c1, w.c1)) + hyp / 2, "mukai_pairing");
}

Int v_square(const MukaiVector& v) {
    return checked_int(Wide(norm(v.c1)) + Wide(v.r) * v.s, "v_square");
}

MukaiVector from_chern(const ChernData& d) {
    Int s = checked_int(-Wide(d.r) - norm(d.c1) + 2 * Wide(d.c2), "from_chern");
    return MukaiVector(d.r, d.c1, s);
}

ChernData to_chern(const MukaiVector& v) {
    Wide c2 = (Wide(v.r) + norm(v.c1) + v.s);
    if (c2 % 2 != 0) throw invariant_violation("c2 is not integral");
    return ChernData{v.r, v.c1, checked_int(c2 / 2, "to_chern")};
}

Int euler_char(const MukaiVector& v) { return (v.r - v.s) / 2; }

Int rank2_t(const MukaiVector& v) {
    if (!is_even(v.s)) throw precondition_error("t is integral only for even s");
    return -v.s / 2;
}

MukaiVector twist(const MukaiVector& v, const ClassVector& D) {
    ClassVector c1 = v.c1 + v.r * D;
    Int s = checked_int(Wide(v.s) - 2 * Wide(inner(v.c1, D)) - Wide(v.r) * norm(D), "twist");
    return MukaiVector(v.r, c1, s);
}

MukaiVector switch_rs(const MukaiVector& v) {
    if (v.r <= 0) throw precondition_error("r>0 violated");
    if (v.s <= 0) throw precondition_error("s>0 violated");
    if (norm(v.c1) >= 0) throw precondition_error("c1^2<0 violated");
    return MukaiVector(v.s, -v.c1, v.r);
}

bool is_primitive(const MukaiVector& v) {
    Int g = gcd_i(gcd_i(v.r, content(v.c1)), (v.r + v.s) / 2);
    return g == 1;
}

Int gcd_rcs(const MukaiVector& v) { return gcd_i(gcd_i(v.r, content(v.c1)), v.s); }

Move make_twist(const ClassVector& D) { return TwistMove{D}; }
Move make_switch() { return SwitchMove{}; }
Move make_rebase(BasisChange bc) { return ReBaseMove{std::move(bc)}; }

Move move_inverse(const Move& m) {
    if (const auto* t = std::get_if<TwistMove>(&m)) return TwistMove{-t->D};
    if (std::get_if<SwitchMove>(&m)) return SwitchMove{};
    const auto& rb = std::get<ReBaseMove>(m);
    return ReBaseMove{rb.change.inverse()};
}

MukaiVector apply_move(const MukaiVector& v, const Move& m) {
    if (const auto* t = std::get_if<TwistMove>(&m)) return twist(v, t->D);
    if (std::get_if<SwitchMove>(&m)) return switch_rs(v);
    const auto& rb = std::get<ReBaseMove>(m);
    if (!is_isometry(rb.change.T)) throw precondition_error("rebase matrix is not an isometry");
    return MukaiVector(v.r, rb.change.apply(v.c1), v.s);
}

std::vector<std::string> move_checks(const Move& m) {
    if (std::get_if<TwistMove>(&m)) return {};
    if (std::get_if<SwitchMove>(&m)) return {"r>0", "s>0", "c1^2<0"};
    return {"isometry"};
}

} // namespace mukai
