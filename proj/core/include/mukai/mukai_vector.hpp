#pragma once

#include "mukai/lattice.hpp"

#include <variant>
#include <vector>

namespace mukai {

// v = r + c1 - (s/2) rho. Membership in the Mukai lattice forces s == r mod 2.
// Non-primitive, rank-0 and negative-rank vectors are representable; only the
// reduction engine restricts its inputs.
struct MukaiVector {
    Int r = 0;
    ClassVector c1;
    Int s = 0;

    MukaiVector() = default;
    MukaiVector(Int rr, ClassVector cc, Int ss) : r(rr), c1(std::move(cc)), s(ss) {
        if (!is_even(r + s)) throw precondition_error("r and s must have equal parity");
    }
    friend bool operator==(const MukaiVector& a, const MukaiVector& b) {
        return a.r == b.r && a.s == b.s && a.c1 == b.c1;
    }
};

struct ChernData {
    Int r = 0;
    ClassVector c1;
    Int c2 = 0;
};

Int mukai_pairing(const MukaiVector& v, const MukaiVector& w);
Int v_square(const MukaiVector& v);

MukaiVector from_chern(const ChernData& d);           // s = -r - c1^2 + 2 c2
ChernData to_chern(const MukaiVector& v);             // c2 = (r + c1^2 + s)/2
Int euler_char(const MukaiVector& v);                 // chi = (r - s)/2

// rank-2 interop: v = 2 + c1 + t rho with t = -s/2
Int rank2_t(const MukaiVector& v);

// v exp(D) = (r, c1 + rD, s - 2(c1,D) - r D^2)
MukaiVector twist(const MukaiVector& v, const ClassVector& D);

// (r, c1, s) -> (s, -c1, r); requires r > 0, s > 0 and c1^2 < 0.
// Throws a precondition_error naming the first violated hypothesis.
MukaiVector switch_rs(const MukaiVector& v);

// coordinate criterion in the integral basis {1 + rho/2, class basis, rho}
bool is_primitive(const MukaiVector& v);

// gcd(r, content(c1), s); for primitive v this is 1 or 2
Int gcd_rcs(const MukaiVector& v);

// ---- moves -----------------------------------------------------------------

struct TwistMove {
    ClassVector D;
};
struct SwitchMove {};
struct ReBaseMove {
    BasisChange change;
};

using Move = std::variant<TwistMove, SwitchMove, ReBaseMove>;

Move make_twist(const ClassVector& D);
Move make_switch();
Move make_rebase(BasisChange bc);

Move move_inverse(const Move& m);

// Applies the move with full precondition checks; ReBase rewrites c1 through
// the isometry and fixes r, s.
MukaiVector apply_move(const MukaiVector& v, const Move& m);

// The named hypotheses apply_move verifies for this move ("r>0", "s>0",
// "c1^2<0", "isometry", ...). Used by certificates.
std::vector<std::string> move_checks(const Move& m);

} // namespace mukai
