#pragma once

#include "mukai/class_vector.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mukai {

// An isometry of the lattice given by its matrix action on coordinates:
// x -> T x, with T^t G T = G and det T = +-1. The inverse is stored so that
// moves are cheaply invertible.
struct BasisChange {
    Mat10 T{};
    Mat10 Tinv{};
    std::string name; // "alternate", "swap", or "" for ad hoc isometries

    static BasisChange from_matrix(const Mat10& t, std::string name = "");
    BasisChange inverse() const;
    ClassVector apply(const ClassVector& x) const;
};

bool is_isometry(const Mat10& t);
Int det10(const Mat10& t);
ClassVector mat_apply(const Mat10& t, const ClassVector& x);
Mat10 mat_mul(const Mat10& a, const Mat10& b);

// The decomposition used to escape the (r/2, r/2) corner: in basis terms
// sigma' = sigma, f' = sigma + f + e1, and the e-block is carried along so
// that the new frame has the same Gram matrix. (Columns of the returned
// matrix are the primed basis vectors; e1' = e1 + 2 sigma and
// ei' = ei - (ei,e1) sigma for i >= 2, which is what orthogonality to the
// new hyperbolic plane forces.)
BasisChange alternate_decomposition();

// sigma <-> f
BasisChange swap_sigma_f();

// Eichler transvection E(w,u) for isotropic w and u orthogonal to w:
// x -> x + (x,u) w - (x,w) u - (u,u)/2 (x,w) w. Exact isometry.
BasisChange transvection(const ClassVector& w, const ClassVector& u);

// transvection along sigma resp. f with u = eta in the e-block
BasisChange transvection_sigma(const ClassVector& eta);
BasisChange transvection_f(const ClassVector& eta);

// A sublattice with negative definite Gram form, kept with an ambient basis.
struct NegDefSublattice {
    std::vector<ClassVector> basis;          // ambient coordinates
    std::vector<std::vector<Int>> gram;      // pairwise pairings of basis
    bool unimodular = false;                 // |det gram| == 1

    int rank() const { return int(basis.size()); }
    ClassVector to_ambient(const std::vector<Int>& coords) const;
    // express an ambient vector in this basis; nullopt if not in the span
    std::optional<std::vector<Int>> coordinates(const ClassVector& x) const;
};

// The standard -E8 block on (e1..e8).
const NegDefSublattice& e8_block();

// The 240 norm -2 vectors of the -E8 block, lexicographically sorted.
const std::vector<ClassVector>& e8_roots();

// Integral basis of {x : (x,H) = 0} for H of positive norm; rank 9 negative
// definite by the signature (1,9). Throws "complement not negative definite"
// when norm(H) <= 0. Negative definiteness is certified by the alternating
// signs of the leading principal minors.
NegDefSublattice orthogonal_complement(const ClassVector& H);

// Complete list of sublattice elements with lower <= norm <= upper < 0,
// in ambient coordinates, lexicographically sorted. Exact rational
// completed-square recursion; requires upper < 0.
std::vector<ClassVector> short_vectors(const NegDefSublattice& sub, Int lower, Int upper);

// Where primitive_shift / solve_pairing operate.
enum class LatticeKind { Full, E8 };

// Constructive primitive shift: with l = gcd(r, content(x)) (l = r for x = 0),
// returns xi such that (x + r*xi)/l is integral and primitive in the chosen
// lattice. When bound M is given the lattice must be negative definite (the
// e-block) and additionally 2(x,xi) + r(xi,xi) < M.
// The construction escalates a coefficient b over integers coprime to the
// leading coordinate; the postcondition is checked on the output, never
// trusted from the derivation.
ClassVector primitive_shift(const ClassVector& x, Int r,
                            std::optional<Int> bound = std::nullopt,
                            LatticeKind kind = LatticeKind::E8);

// For primitive y in a unimodular lattice and any m, returns eta with
// (eta, y) = m. Extended gcd across the coordinate functional; the result is
// size-reduced against the kernel of (., y) to keep coordinates small.
ClassVector solve_pairing(const ClassVector& y, Int m, LatticeKind kind = LatticeKind::Full);

} // namespace mukai
